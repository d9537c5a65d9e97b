//! Command dispatch: each subcommand produces an [`Outcome`] (JSON payload,
//! plain-text rendering, diagnostics) or a [`CmdError`] carrying the exit
//! code mandated by the interface contract (2 parse/validation, 3 budget,
//! 4 undecomposable).

use std::fmt;
use std::fs;

use serde_json::{json, Value};

use semichain::BigUint;

use semichain::finsemi::{build_family, parse_table_json, parse_table_text};
use semichain::formulas::{
    self, free_band_length, named_inverse_monoid_length, tn_null_max_order, InverseFamily,
};
use semichain::grouplen::{group_length, length_symmetric, omega};
use semichain::leagues::{
    league_lb1, league_lb2, league_lb_interval, max_content_search, on_lower_bound,
    tn_lower_bound, SearchStatus,
};
use semichain::oracle::{
    decompose_length, longest_chain_exact, longest_inverse_chain_exact,
};
use semichain::{CayleyTable, FamilySpec, SearchBudget, SemiError};

use crate::{Command, Method, Outcome};

pub(crate) struct CmdError {
    message: String,
    code: u8,
}

impl CmdError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CmdError {
            message: message.into(),
            code,
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        CmdError::new(2, message)
    }

    pub(crate) fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<SemiError> for CmdError {
    fn from(err: SemiError) -> Self {
        let code = match &err {
            SemiError::BudgetExceeded { .. } => 3,
            SemiError::NotDecomposable(_) => 4,
            _ => 2,
        };
        CmdError::new(code, err.to_string())
    }
}

impl From<anyhow::Error> for CmdError {
    fn from(err: anyhow::Error) -> Self {
        match err.downcast::<SemiError>() {
            Ok(semi) => semi.into(),
            Err(other) => CmdError::invalid(format!("{other:#}")),
        }
    }
}

/// The command name and the echo of its parameters for the envelope.
pub(crate) fn describe(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Length {
            family,
            file,
            method,
            inverse,
            budget_ms,
            max_subsemigroups,
        } => (
            "length",
            json!({
                "family": family,
                "file": file,
                "method": method_name(*method),
                "inverse": inverse,
                "budgetMs": budget_ms,
                "maxSubsemigroups": max_subsemigroups,
            }),
        ),
        Command::League {
            n,
            k,
            interval,
            bounds,
            symmetry,
            budget_ms,
            threads,
        } => (
            "league",
            json!({
                "n": n,
                "k": k,
                "interval": interval,
                "bounds": bounds,
                "symmetry": symmetry,
                "budgetMs": budget_ms,
                "threads": threads,
            }),
        ),
        Command::Table {
            id,
            long_run,
            max_n,
            budget_ms,
        } => (
            "table",
            json!({
                "id": id,
                "longRun": long_run,
                "maxN": max_n,
                "budgetMs": budget_ms,
            }),
        ),
        Command::Gls { n, q } => ("gls", json!({ "n": n, "q": q })),
        Command::Tn { n, bounds, budget_ms } => (
            "tn",
            json!({ "n": n, "bounds": bounds, "budgetMs": budget_ms }),
        ),
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Auto => "auto",
        Method::Formula => "formula",
        Method::Decompose => "decompose",
        Method::Oracle => "oracle",
    }
}

pub(crate) fn dispatch(command: &Command) -> Result<Outcome, CmdError> {
    match command {
        Command::Length {
            family,
            file,
            method,
            inverse,
            budget_ms,
            max_subsemigroups,
        } => cmd_length(
            family.as_deref(),
            file.as_deref(),
            *method,
            *inverse,
            SearchBudget {
                max_subsemigroups: *max_subsemigroups,
                max_millis: *budget_ms,
                ..SearchBudget::default()
            },
        ),
        Command::League {
            n,
            k,
            interval,
            bounds,
            symmetry,
            budget_ms,
            threads,
        } => cmd_league(
            *n,
            *k,
            *interval,
            *bounds,
            *symmetry,
            SearchBudget {
                max_millis: *budget_ms,
                threads: *threads,
                ..SearchBudget::default()
            },
        ),
        Command::Table {
            id,
            long_run,
            max_n,
            budget_ms,
        } => cmd_table(
            *id,
            *long_run,
            *max_n,
            SearchBudget {
                max_millis: *budget_ms,
                ..SearchBudget::default()
            },
        ),
        Command::Gls { n, q } => cmd_gls(*n, *q),
        Command::Tn { n, bounds, budget_ms } => cmd_tn(
            *n,
            *bounds,
            SearchBudget {
                max_millis: *budget_ms,
                ..SearchBudget::default()
            },
        ),
    }
}

// ---------------------------------------------------------------------------
// length

fn cmd_length(
    family: Option<&str>,
    file: Option<&str>,
    method: Method,
    inverse: bool,
    budget: SearchBudget,
) -> Result<Outcome, CmdError> {
    let spec = family.map(crate::family::parse_family).transpose()?;
    if spec.is_none() && file.is_none() {
        return Err(CmdError::invalid("one of --family or --file is required"));
    }

    // formula path: closed forms keyed on the family spec, no table needed
    if matches!(method, Method::Auto | Method::Formula) {
        if let Some(spec) = &spec {
            if let Some(length) = formula_length(spec, inverse)? {
                return Ok(length_outcome(json!({
                    "length": length.to_string(),
                    "kind": kind_name(inverse),
                    "method": "formula",
                })));
            }
        }
        if method == Method::Formula {
            return Err(CmdError::invalid(
                "no closed-form formula applies to this input",
            ));
        }
    }

    let table = load_table(spec.as_ref(), file)?;

    if inverse {
        // inverse chains have no decomposition pass; auto falls through to
        // the oracle
        if method == Method::Decompose {
            return Err(CmdError::invalid(
                "--method decompose computes l(S) only; use oracle for l*",
            ));
        }
        let (length, cert) = longest_inverse_chain_exact(&table, &budget)?;
        let cert_json: Value =
            serde_json::from_str(&cert.to_json()).expect("certificate JSON is well formed");
        return Ok(length_outcome(json!({
            "length": length.to_string(),
            "kind": kind_name(true),
            "method": "oracle",
            "size": table.size(),
            "certificate": cert_json,
        })));
    }

    match method {
        Method::Auto | Method::Decompose => {
            let (length, trace) = decompose_length(&table, &budget)?;
            Ok(length_outcome(json!({
                "length": length.to_string(),
                "kind": kind_name(false),
                "method": "decompose",
                "size": table.size(),
                "trace": serde_json::to_value(&trace).expect("trace serializes"),
            })))
        }
        Method::Oracle => {
            let (length, cert) = longest_chain_exact(&table, &budget)?;
            let cert_json: Value =
                serde_json::from_str(&cert.to_json()).expect("certificate JSON is well formed");
            Ok(length_outcome(json!({
                "length": length.to_string(),
                "kind": kind_name(false),
                "method": "oracle",
                "size": table.size(),
                "certificate": cert_json,
            })))
        }
        Method::Formula => unreachable!("formula handled above"),
    }
}

fn kind_name(inverse: bool) -> &'static str {
    if inverse {
        "inverseSubsemigroup"
    } else {
        "subsemigroup"
    }
}

fn length_outcome(result: Value) -> Outcome {
    let mut text = format!(
        "length\t{}\nmethod\t{}\n",
        result["length"].as_str().unwrap_or("?"),
        result["method"].as_str().unwrap_or("?"),
    );
    if let Some(size) = result.get("size").and_then(Value::as_u64) {
        text.push_str(&format!("size\t{size}\n"));
    }
    Outcome {
        result,
        text,
        diagnostics: Vec::new(),
    }
}

/// Closed-form lengths for the recognized families; `None` means no formula
/// applies and the caller should fall through to a search.
fn formula_length(spec: &FamilySpec, inverse: bool) -> Result<Option<BigUint>, CmdError> {
    let value = match spec {
        FamilySpec::SymmetricInverse(n) => Some(named_inverse_monoid_length(
            InverseFamily::SymmetricInverse,
            *n as u64,
            inverse,
        )),
        FamilySpec::Poi(n) => Some(named_inverse_monoid_length(
            InverseFamily::Poi,
            *n as u64,
            inverse,
        )),
        FamilySpec::Popi(n) => Some(named_inverse_monoid_length(
            InverseFamily::Popi,
            *n as u64,
            inverse,
        )),
        // subsemigroups of a finite group are its subgroups, all inverse,
        // so l and l* coincide
        FamilySpec::CyclicGroup(n) => Some(BigUint::from(omega(*n as u64))),
        FamilySpec::SymmetricGroup(n) => Some(BigUint::from(length_symmetric(*n as u64))),
        FamilySpec::Null(m) if !inverse => Some(BigUint::from(*m - 1)),
        FamilySpec::Monogenic(m, r) if !inverse => {
            Some(BigUint::from(m + omega(*r as u64) - 1))
        }
        FamilySpec::Monogenic(1, r) => Some(BigUint::from(omega(*r as u64))),
        FamilySpec::FreeBand2 if !inverse => Some(free_band_length(2)),
        FamilySpec::Brandt(group, n) => {
            let l_g = group_length(group)?.length as u64;
            let n = BigUint::from(*n);
            Some(if inverse {
                formulas::inverse_star_brandt(l_g, &n)
            } else {
                formulas::brandt_length(l_g, &BigUint::from(group.size()), &n)
            })
        }
        _ => None,
    };
    Ok(value)
}

fn load_table(spec: Option<&FamilySpec>, file: Option<&str>) -> Result<CayleyTable, CmdError> {
    if let Some(spec) = spec {
        return Ok(build_family(spec)?);
    }
    let path = file.expect("checked above");
    let input = fs::read_to_string(path)
        .map_err(|e| CmdError::invalid(format!("cannot read {path}: {e}")))?;
    let table = if input.trim_start().starts_with('{') {
        parse_table_json(&input)?
    } else {
        parse_table_text(&input)?
    };
    Ok(table)
}

// ---------------------------------------------------------------------------
// league

fn cmd_league(
    n: usize,
    k: usize,
    interval: bool,
    bounds: bool,
    symmetry: bool,
    budget: SearchBudget,
) -> Result<Outcome, CmdError> {
    if !(1 <= k && k <= n && n <= 32) {
        return Err(CmdError::invalid(format!(
            "need 1 <= k <= n <= 32, got n={n} k={k}"
        )));
    }

    if bounds {
        let (nu, ku) = (n as u64, k as u64);
        let best = formulas::tables::league_bounds(nu, ku, interval);
        let result = if interval {
            json!({
                "lbInterval": league_lb_interval(nu, ku).to_string(),
                "bound": best.to_string(),
            })
        } else {
            json!({
                "lb1": league_lb1(nu, ku).to_string(),
                "lb2": league_lb2(nu, ku).to_string(),
                "bound": best.to_string(),
            })
        };
        let text = format!("bound\t{best}\n");
        return Ok(Outcome {
            result,
            text,
            diagnostics: Vec::new(),
        });
    }

    let search = max_content_search(n, k, interval, &budget, symmetry);
    let witness: Value =
        serde_json::from_str(&search.witness.to_json()).expect("league JSON is well formed");
    let mut diagnostics = Vec::new();
    if search.status == SearchStatus::LowerBoundOnly {
        diagnostics.push(json!({
            "note": "budget exhausted; optimum is a lower bound only",
            "nodesExplored": search.nodes_explored,
        }));
    }
    let status = serde_json::to_value(search.status).expect("status serializes");
    let text = format!(
        "optimum\t{}\nstatus\t{}\nnodes\t{}\n",
        search.optimum,
        status.as_str().unwrap_or("?"),
        search.nodes_explored
    );
    Ok(Outcome {
        result: json!({
            "optimum": search.optimum,
            "status": status,
            "nodesExplored": search.nodes_explored,
            "witness": witness,
        }),
        text,
        diagnostics,
    })
}

// ---------------------------------------------------------------------------
// table

fn cmd_table(
    id: u8,
    long_run: bool,
    max_n: usize,
    budget: SearchBudget,
) -> Result<Outcome, CmdError> {
    let rendered = match id {
        1 => formulas::tables::table1(max_n, long_run, &budget),
        2 => formulas::tables::table2(max_n.min(7), &budget),
        3 => formulas::tables::table3(),
        4 => formulas::tables::table4(),
        5 => formulas::tables::table5(),
        _ => unreachable!("clap range"),
    };
    let diagnostics = rendered
        .discrepancies
        .iter()
        .map(|d| serde_json::to_value(d).expect("discrepancy serializes"))
        .collect();
    let text = rendered.to_tsv();
    let result: Value =
        serde_json::from_str(&rendered.to_json()).expect("table JSON is well formed");
    Ok(Outcome {
        result,
        text,
        diagnostics,
    })
}

// ---------------------------------------------------------------------------
// gls

fn cmd_gls(n: u64, q: u64) -> Result<Outcome, CmdError> {
    if n == 0 || q < 2 {
        return Err(CmdError::invalid("need n >= 1 and q >= 2"));
    }
    let summands: Vec<Value> = (0..=n)
        .map(|k| {
            let gauss = formulas::gaussian_binomial(n, k, q);
            let gl = formulas::gl_order(k, q);
            json!({
                "k": k,
                "gaussian": gauss.to_string(),
                "glOrder": gl.to_string(),
                "term": (&gauss * &gauss * &gl).to_string(),
            })
        })
        .collect();
    let (cq, cq_err) = formulas::c_q(q, 1e-12);
    let (raw, clamped) = formulas::gls_lower_bound(n, q);
    let text = format!(
        "glOrder\t{}\nglsOrder\t{}\ncq\t{cq}\nboundRaw\t{raw}\nbound\t{clamped}\n",
        formulas::gl_order(n, q),
        formulas::gls_order(n, q),
    );
    Ok(Outcome {
        result: json!({
            "glOrder": formulas::gl_order(n, q).to_string(),
            "glsOrder": formulas::gls_order(n, q).to_string(),
            "summands": summands,
            "cq": { "value": cq, "errorBound": cq_err },
            "bound": { "raw": raw.to_string(), "clamped": clamped.to_string() },
        }),
        text,
        diagnostics: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// tn

fn cmd_tn(n: u64, bounds: bool, budget: SearchBudget) -> Result<Outcome, CmdError> {
    if n < 2 {
        return Err(CmdError::invalid("need n >= 2"));
    }
    let chain_bound = tn_lower_bound(n, !bounds, &budget)?;
    let (null_order, argmax_k) = tn_null_max_order(n);
    let (on_raw, on_clamped) = on_lower_bound(n);
    let text = format!(
        "chainBound\t{chain_bound}\nnullOrder\t{null_order}\nargmaxK\t{argmax_k}\n",
    );
    Ok(Outcome {
        result: json!({
            "chainBound": chain_bound.to_string(),
            "mode": if bounds { "bounds" } else { "exact" },
            // a null subsemigroup with m non-zero elements yields 2^m
            // subsemigroups and forces at least m generators
            "nullOrder": null_order.to_string(),
            "argmaxK": argmax_k,
            "log2SubsemigroupCountBound": null_order.to_string(),
            "generatorCountBound": null_order.to_string(),
            "onChainBound": { "raw": on_raw.to_string(), "clamped": on_clamped.to_string() },
        }),
        text,
        diagnostics: Vec::new(),
    })
}
