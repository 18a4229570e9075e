//! Value parsers for the command line.

use std::fs;

use num_bigint::BigInt;
use trainyard::{parse_rodset, parse_rodset_lines, CountSeq, Poly, RodSet, RodSource, ShapeKind, Sign};

pub const GRAMMAR: &str = "rod sets are written [term,term,...] where term := -?LENGTH(^COUNT)?, e.g. \"[1,-2^3]\"; \
use @FILE to read literals from a file, one per line";

/// One literal, or `@path` naming a file of literals.
#[derive(Debug, Clone)]
pub struct RodArg(pub Vec<RodSet>);

pub fn rod_arg(text: &str) -> Result<RodArg, String> {
    if let Some(path) = text.strip_prefix('@') {
        let body = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let sets = parse_rodset_lines(&body).map_err(|e| format!("{path}: {e}; {GRAMMAR}"))?;
        if sets.is_empty() {
            return Err(format!("{path} contains no rod sets"));
        }
        return Ok(RodArg(sets));
    }
    parse_rodset(text).map(|r| RodArg(vec![r])).map_err(|e| format!("{e}; {GRAMMAR}"))
}

/// A rod set literal, `arith:a,d,±` or `trains:LITERAL`.
pub fn source_arg(text: &str) -> Result<RodSource, String> {
    if let Some(spec) = text.strip_prefix("arith:") {
        return arith(spec);
    }
    if let Some(base) = text.strip_prefix("trains:") {
        let (sign, base) = match base.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, base),
        };
        let base = parse_rodset(base).map_err(|e| format!("{e}; {GRAMMAR}"))?;
        return Ok(RodSource::TrainsOf { base, sign });
    }
    let r = rod_arg(text)?;
    match r.0.as_slice() {
        [one] => Ok(RodSource::Finite(one.clone())),
        _ => Err("expected a single rod set".into()),
    }
}

/// `a,d,±`: rods `a, a+d, a+2d, ...` all of the given sign.
pub fn arith(spec: &str) -> Result<RodSource, String> {
    let usage = || format!("expected FIRST,STEP,SIGN such as 1,2,- but found {spec:?}");
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [first, step, sign] = parts[..] else {
        return Err(usage());
    };
    let first: usize = first.parse().map_err(|_| usage())?;
    let step: usize = step.parse().map_err(|_| usage())?;
    let sign: Sign = sign.parse().map_err(|_| usage())?;
    RodSource::arithmetic(first, step, sign).map_err(|e| e.to_string())
}

pub fn sign_arg(text: &str) -> Result<Sign, String> {
    text.parse().map_err(|_| format!("expected + or - but found {text:?}"))
}

pub fn poly_arg(text: &str) -> Result<Poly, String> {
    text.parse()
        .map_err(|e| format!("{e}; polynomials are written like \"1 - x - 2*x^3\""))
}

/// `v0,v1,...` starting at index 0.
pub fn seq_arg(text: &str) -> Result<CountSeq, String> {
    let values = text
        .split(',')
        .map(|v| v.trim().parse::<BigInt>().map_err(|_| format!("{v:?} is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountSeq::new(0, values))
}

/// `adjacent:FROM..TO`, `skip:FROM..TO` or `multiple:D,KMAX`.
pub fn kind_arg(text: &str) -> Result<ShapeKind, String> {
    let usage = || format!("expected adjacent:FROM..TO, skip:FROM..TO or multiple:D,KMAX but found {text:?}");
    let (name, rest) = text.split_once(':').ok_or_else(usage)?;
    let pair = |sep: &str| -> Result<(usize, usize), String> {
        let (x, y) = rest.split_once(sep).ok_or_else(usage)?;
        Ok((x.trim().parse().map_err(|_| usage())?, y.trim().parse().map_err(|_| usage())?))
    };
    match name {
        "adjacent" => pair("..").map(|(from, to)| ShapeKind::Adjacent { from, to }),
        "skip" => pair("..").map(|(from, to)| ShapeKind::Skip { from, to }),
        "multiple" => pair(",").map(|(d, kmax)| ShapeKind::Multiple { d, kmax }),
        _ => Err(usage()),
    }
}
