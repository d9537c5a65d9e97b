//! The `--family` mini-grammar: `T:n`, `O:n`, `I:n`, `POI:n`, `POPI:n`,
//! `brandt:<triv|cK|sK>,<n>`, `null:m`, `mono:m,r`, `cyc:n`, `sym:n`, `fb2`.

use anyhow::{anyhow, bail, Context, Result};
use semichain::FamilySpec;

pub fn parse_family(input: &str) -> Result<FamilySpec> {
    let (head, rest) = match input.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (input, None),
    };
    let one = |what: &str| -> Result<usize> {
        rest.ok_or_else(|| anyhow!("{head} needs an argument, e.g. {head}:4"))?
            .parse()
            .with_context(|| format!("bad {what} in family spec {input:?}"))
    };
    let two = || -> Result<(usize, usize)> {
        let rest = rest.ok_or_else(|| anyhow!("{head} needs two arguments"))?;
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| anyhow!("{head} needs two comma-separated arguments"))?;
        Ok((
            a.parse().with_context(|| format!("bad argument {a:?}"))?,
            b.parse().with_context(|| format!("bad argument {b:?}"))?,
        ))
    };
    Ok(match head {
        "T" => FamilySpec::FullTransformation(one("n")?),
        "O" => FamilySpec::OrderPreserving(one("n")?),
        "I" => FamilySpec::SymmetricInverse(one("n")?),
        "POI" => FamilySpec::Poi(one("n")?),
        "POPI" => FamilySpec::Popi(one("n")?),
        "null" => FamilySpec::Null(one("m")?),
        "cyc" => FamilySpec::CyclicGroup(one("n")?),
        "sym" => FamilySpec::SymmetricGroup(one("n")?),
        "fb2" if rest.is_none() => FamilySpec::FreeBand2,
        "mono" => {
            let (m, r) = two()?;
            FamilySpec::Monogenic(m, r)
        }
        "brandt" => {
            let rest = rest.ok_or_else(|| anyhow!("brandt needs <group>,<n>"))?;
            let (group, n) = rest
                .split_once(',')
                .ok_or_else(|| anyhow!("brandt needs <group>,<n>"))?;
            let n: usize = n.parse().with_context(|| format!("bad n {n:?}"))?;
            let group = parse_group(group)?;
            FamilySpec::Brandt(Box::new(semichain::finsemi::build_family(&group)?), n)
        }
        _ => bail!("unknown family {input:?}"),
    })
}

fn parse_group(input: &str) -> Result<FamilySpec> {
    if input == "triv" {
        return Ok(FamilySpec::CyclicGroup(1));
    }
    if let Some(k) = input.strip_prefix('c') {
        return Ok(FamilySpec::CyclicGroup(k.parse().context("bad cyclic order")?));
    }
    if let Some(k) = input.strip_prefix('s') {
        return Ok(FamilySpec::SymmetricGroup(k.parse().context("bad symmetric degree")?));
    }
    bail!("unknown group {input:?} (expected triv, c<k>, or s<k>)")
}
