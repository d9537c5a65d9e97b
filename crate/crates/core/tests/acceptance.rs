//! Acceptance suite: one test per numbered criterion, each ending with a
//! single `criterion N: pass` line (a failed assertion is the fail line).
//! Criteria touching the slow n=7 general searches run only when
//! `SEMICHAIN_LONG_TESTS` is set; the F(7,4) cell is additionally `#[ignore]`.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use semichain::finsemi::{
    all_ideals, build_family, greens_structure, rees_quotient, validate_table,
};
use semichain::formulas::{
    self, binomial, c_q, gaussian_binomial, gl_order, gls_order, named_inverse_monoid_length,
    nmaps, nmaps_op, symmetric_inverse_order, InverseFamily,
};
use semichain::grouplen::omega;
use semichain::leagues::{
    build_null_from_league, closed_form_fstar, enumerate_partitions, league_lb_interval,
    max_content_exact, rank_expectation, rank_variance, League, SearchStatus, SetPartition,
};
use semichain::oracle::{longest_chain_exact, longest_inverse_chain_exact, verify_chain};
use semichain::{BigUint, CayleyTable, ElementSet, FamilySpec, SearchBudget};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn oracle_length(table: &CayleyTable) -> usize {
    longest_chain_exact(table, &budget()).expect("within budget").0
}

fn exact_f(n: usize, k: usize, interval: bool) -> u64 {
    let r = max_content_exact(n, k, interval, &budget());
    assert_eq!(r.status, SearchStatus::Exact, "F({n},{k}) search must finish");
    r.optimum
}

fn long_tests_enabled() -> bool {
    std::env::var_os("SEMICHAIN_LONG_TESTS").is_some()
}

#[test]
fn criterion_01_table1_exact_and_bound_entries() {
    // exact values for 2 <= n <= 6 against the printed first entries
    let t = formulas::tables::table1(6, false, &budget());
    for d in &t.discrepancies {
        // the only printed-value deviations are the known n=4 misprints
        assert_eq!(d.row, "4", "unexpected discrepancy {d:?}");
        assert!(d.column == "k=3" || d.column == "Total", "unexpected {d:?}");
    }
    assert_eq!(exact_f(5, 3, false), 28);
    assert_eq!(exact_f(6, 4, false), 125);
    assert_eq!(exact_f(6, 2, false), 21);
    if long_tests_enabled() {
        assert_eq!(exact_f(7, 2, false), 45);
        assert_eq!(exact_f(7, 3, false), 760);
        assert_eq!(exact_f(7, 5, false), 390);
        assert_eq!(exact_f(7, 6, false), 20);
    }
    println!("criterion 1: pass (table 1 exact + bound entries, n <= 6{})",
        if long_tests_enabled() { ", n=7 k!=4" } else { "" });
}

#[test]
#[ignore = "long run: the F(7,4) search"]
fn criterion_01_long_run_f_7_4() {
    assert_eq!(exact_f(7, 4, false), 1350);
    println!("criterion 1 (long run): pass (F(7,4) = 1350)");
}

#[test]
fn criterion_02_table2_exact_and_closed_forms() {
    let t = formulas::tables::table2(7, &budget());
    assert!(t.discrepancies.is_empty(), "table 2 must match: {:?}", t.discrepancies);
    for n in 3..=7u64 {
        for k in [2, n - 1] {
            let cf = closed_form_fstar(n, k).expect("closed form exists");
            assert_eq!(cf, BigUint::from(exact_f(n as usize, k as usize, true)));
        }
    }
    println!("criterion 2: pass (table 2 reproduced, closed forms agree with search)");
}

#[test]
fn criterion_03_table3_exact() {
    let t = formulas::tables::table3();
    assert!(t.discrepancies.is_empty(), "table 3 must match: {:?}", t.discrepancies);
    assert_eq!(t.cell("l(I_n)", "n=9"), Some("8296060"));
    assert_eq!(t.cell("l(I*_n)", "n=9"), Some("6732227475"));
    assert_eq!(t.cell("l(POI_n)", "n=9"), Some("25067"));
    assert_eq!(t.cell("l(POPI_n)", "n=9"), Some("109987"));
    println!("criterion 3: pass (table 3, all rows n = 1..9)");
}

#[test]
fn criterion_04_table5_exact() {
    let t = formulas::tables::table5();
    assert!(t.discrepancies.is_empty(), "table 5 must match: {:?}", t.discrepancies);
    assert_eq!(t.cell("l(B_n)", "n=6"), Some("33022614177128"));
    println!("criterion 4: pass (table 5, n = 1..6)");
}

#[test]
fn criterion_05_table4_poi_row_and_discrepancy_report() {
    let t = formulas::tables::table4();
    let expected_poi = [1u64, 4, 11, 26, 57, 120, 247, 502, 1013];
    for (n, want) in (1..=9).zip(expected_poi) {
        let cell = t.cell("l*(POI_n)", &format!("n={n}")).unwrap();
        assert_eq!(cell, want.to_string());
    }
    assert!(t.discrepancies.iter().all(|d| d.row != "l*(POI_n)"));
    // the derived values disagree with the printed I, I*, POPI rows
    assert!(t.discrepancies.iter().any(|d| d.row == "l*(I_n)" && d.column == "n=3"));
    assert!(t.discrepancies.iter().any(|d| d.row == "l*(I*_n)" && d.column == "n=4"));
    assert!(t.discrepancies.iter().any(|d| d.row == "l*(POPI_n)" && d.column == "n=2"));
    // anchor the formula at the cases where formula and print agree, by
    // brute-force inverse-chain search
    for (n, want) in [(1usize, 1usize), (2, 5)] {
        let table = build_family(&FamilySpec::SymmetricInverse(n)).unwrap();
        let (l, cert) = longest_inverse_chain_exact(&table, &budget()).unwrap();
        assert_eq!(l, want);
        assert!(verify_chain(&table, &cert));
        assert_eq!(
            named_inverse_monoid_length(InverseFamily::SymmetricInverse, n as u64, true),
            BigUint::from(want)
        );
    }
    println!("criterion 5: pass (POI row exact; discrepancy records emitted; l*(I_1), l*(I_2) oracle-confirmed)");
}

#[test]
fn criterion_06_oracle_formula_agreement() {
    let triv = build_family(&FamilySpec::CyclicGroup(1)).unwrap();
    let c2 = build_family(&FamilySpec::CyclicGroup(2)).unwrap();
    for (group, l_g, n, want) in [(&triv, 0u64, 2usize, 4usize), (&triv, 0, 3, 8), (&c2, 1, 2, 7)] {
        let spec = FamilySpec::Brandt(Box::new(group.clone()), n);
        let table = build_family(&spec).unwrap();
        assert_eq!(oracle_length(&table), want);
        assert_eq!(
            formulas::brandt_length(l_g, &BigUint::from(group.size()), &BigUint::from(n)),
            BigUint::from(want)
        );
    }
    for m in 1..=12 {
        let table = build_family(&FamilySpec::Null(m)).unwrap();
        assert_eq!(oracle_length(&table), m - 1);
    }
    for m in 1..=8usize {
        for r in 1..=(10 - m).min(9) {
            let table = build_family(&FamilySpec::Monogenic(m, r)).unwrap();
            assert_eq!(oracle_length(&table), m + omega(r as u64) - 1, "mono({m},{r})");
        }
    }
    for n in 1..=12usize {
        let table = build_family(&FamilySpec::CyclicGroup(n)).unwrap();
        assert_eq!(oracle_length(&table), omega(n as u64), "C_{n} by search");
    }
    for a in 1..=30u64 {
        for b in 1..=(30 / a) {
            // formula side: Omega is completely additive, pinning l(C_n)
            // for n <= 30 from the prime cases
            assert_eq!(omega(a * b), omega(a) + omega(b));
        }
    }
    println!("criterion 6: pass (Brandt, null, monogenic, cyclic: oracle = formula)");
}

/// Restrict a table to a closed subset, for computing l(I) of an ideal.
fn restriction(table: &CayleyTable, set: &ElementSet) -> CayleyTable {
    let members = set.indices();
    let index_of: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut flat = Vec::with_capacity(members.len() * members.len());
    for &a in &members {
        for &b in &members {
            flat.push(index_of[&table.product(a, b)]);
        }
    }
    validate_table(members.len(), flat).expect("ideals are closed")
}

#[test]
fn criterion_07_ideal_additivity_over_corpus() {
    let mut corpus: Vec<FamilySpec> = Vec::new();
    corpus.extend((1..=6).map(FamilySpec::Null));
    corpus.extend(
        [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (4, 2), (3, 3)]
            .map(|(m, r)| FamilySpec::Monogenic(m, r)),
    );
    corpus.extend((1..=8).map(FamilySpec::CyclicGroup));
    corpus.push(FamilySpec::SymmetricGroup(3));
    corpus.push(FamilySpec::FreeBand2);
    let triv = build_family(&FamilySpec::CyclicGroup(1)).unwrap();
    corpus.push(FamilySpec::Brandt(Box::new(triv.clone()), 2));
    for (rows, cols) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        // rectangular bands, as Rees matrix semigroups over the trivial group
        corpus.push(FamilySpec::ReesMatrixOverGroup {
            group: Box::new(triv.clone()),
            rows,
            cols,
            matrix: vec![vec![0; rows]; cols],
        });
    }
    assert!(corpus.len() >= 20);

    let mut checked = 0usize;
    for spec in &corpus {
        let table = build_family(spec).unwrap();
        assert!(table.size() <= 8, "corpus is capped at size 8");
        let l_s = oracle_length(&table);
        let greens = greens_structure(&table);
        for ideal in all_ideals(&table, &greens) {
            let l_i = oracle_length(&restriction(&table, &ideal));
            let quotient = rees_quotient(&table, &ideal).unwrap();
            let l_q = oracle_length(&quotient);
            assert_eq!(l_s, l_i + l_q, "additivity fails for {spec:?} ideal {ideal:?}");
            checked += 1;
        }
    }
    println!("criterion 7: pass (l(S) = l(I) + l(S/I) on {checked} (semigroup, ideal) pairs)");
}

#[test]
fn criterion_08_exact_identity_suite() {
    for n in 1..=8u64 {
        let total: BigUint = (1..=n).map(|k| nmaps(n, k)).sum();
        assert_eq!(total, BigUint::from(n).pow(n as u32));
    }
    for n in 1..=10u64 {
        let total: BigUint = (1..=n).map(|k| nmaps_op(n, k)).sum();
        assert_eq!(total, binomial(2 * n - 1, n));
    }
    for n in 1..=5u64 {
        for q in [2, 3, 4, 5] {
            let total: BigUint = (0..=n)
                .map(|k| {
                    let g = gaussian_binomial(n, k, q);
                    &g * &g * gl_order(k, q)
                })
                .sum();
            assert_eq!(total, gls_order(n, q));
        }
    }
    for n in 3..=12u64 {
        let total: BigUint = (1..=n).map(|k| league_lb_interval(n, k)).sum();
        assert_eq!(total, binomial(2 * n - 3, n));
    }
    for n in 1..=8u64 {
        let nn = BigRational::from_integer(num_bigint::BigInt::from(n).pow(n as u32));
        let mut e = BigRational::zero();
        let mut m2 = BigRational::zero();
        for k in 1..=n {
            let count = BigRational::from_integer(nmaps(n, k).into());
            e += BigRational::from_integer(k.into()) * &count / &nn;
            m2 += BigRational::from_integer((k * k).into()) * &count / &nn;
        }
        assert_eq!(rank_expectation(n), e);
        assert_eq!(rank_variance(n), m2 - &e * &e);
    }
    println!("criterion 8: pass (map counts, Gaussian rank identity, Vandermonde, rank moments)");
}

#[test]
fn criterion_09_c2_partial_sum() {
    let (value, err) = c_q(2, 1e-12);
    assert!(err < 1e-10);
    assert!((value - 0.288788095).abs() < 1e-9, "c(2) = {value}");
    println!("criterion 9: pass (c(2) = {value:.9} to within 1e-9)");
}

#[test]
fn criterion_10_null_chain_certificate_in_t4() {
    // the k=3 league of content 3 in {1..4}: partitions with {4} a
    // singleton, the single subset {1,2,3}
    let partitions: Vec<SetPartition> = enumerate_partitions(4, 3, false)
        .into_iter()
        .filter(|p| p.blocks().iter().any(|b| b == &vec![3]))
        .collect();
    let league = League {
        n: 4,
        k: 3,
        interval: false,
        partitions,
        subsets: vec![vec![0, 1, 2]],
    };
    let null = build_null_from_league(4, &league).unwrap();
    assert_eq!(null.members.indices().len(), 18);
    // 18 strict one-element extensions above the rank-<=2 ideal
    assert_eq!(null.certificate.subsets.len(), 19);
    for pair in null.certificate.subsets.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        assert!(a.indices().iter().all(|&x| b.contains(x)));
        assert_eq!(a.indices().len() + 1, b.indices().len());
    }
    assert!(verify_chain(&null.table, &null.certificate));
    println!("criterion 10: pass (verified 18-step null chain above the rank-2 ideal of T_4)");
}

#[test]
fn criterion_11_half_ratio_precursor() {
    for n in 6..=12u64 {
        let length = named_inverse_monoid_length(InverseFamily::SymmetricInverse, n, false);
        let order = symmetric_inverse_order(n);
        let ratio = length.to_f64().unwrap() / order.to_f64().unwrap();
        assert!(
            (0.40..0.55).contains(&ratio),
            "l(I_{n})/|I_{n}| = {ratio} out of range"
        );
    }
    println!("criterion 11: pass (l(I_n)/|I_n| in (0.40, 0.55) for n = 6..12)");
}
