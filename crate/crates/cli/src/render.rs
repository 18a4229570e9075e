//! Text forms of results.

use std::fmt::Write;

use trainyard::structure::{pair_rodset, BorweinTable, LucasReport};
use trainyard::{Dual, Enumeration, Expansion, Finiteness, PeriodReport, ScalingHit, ShapeReport};

pub fn finiteness(f: &Finiteness) -> String {
    match f {
        Finiteness::Finite => "finite".into(),
        Finiteness::Infinite => "infinite".into(),
        Finiteness::Undecided { trailing_zeros } => format!("undecided ({trailing_zeros} trailing zeros)"),
    }
}

pub fn expansion(e: &Expansion) -> String {
    format!(
        "R = {}\nQ = {}\nS = {}\nR {}, Q {}, S {}\nidentity checked to n={}: {}",
        e.r,
        e.q,
        e.s,
        finiteness(&e.r_finite),
        finiteness(&e.q_finite),
        finiteness(&e.s_finite),
        e.horizon,
        e.identity_checked
    )
}

pub fn dual(d: &Dual) -> String {
    format!(
        "Q = {}\ndual = {}\ndual {}\nidentity checked to n={}: {}",
        d.q,
        d.dual,
        finiteness(&d.finite),
        d.horizon,
        d.identity_checked
    )
}

pub fn period(p: &PeriodReport) -> String {
    let window = if p.window_confirmed { "confirmed" } else { "disagrees" };
    match (p.least_period, &p.q_to_period) {
        (Some(period), Some(q)) => {
            let factors: Vec<String> = p.cyclotomic_factors.iter().map(usize::to_string).collect();
            format!("periodic p={period} factors={} Q={q} window={window}", factors.join(","))
        }
        _ => format!("not periodic window={window}"),
    }
}

pub fn describe(s: &ShapeReport) -> String {
    let join = |v: Vec<String>| v.join(",");
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    format!(
        "shape={} multiplicities={} min={} max={} size={} primitive={} positive={}",
        join(s.shape.iter().map(usize::to_string).collect()),
        join(s.multiplicities.iter().map(ToString::to_string).collect()),
        opt(s.min),
        opt(s.max),
        s.size,
        s.primitive,
        s.positive
    )
}

pub fn hits(hits: &[ScalingHit]) -> String {
    if hits.is_empty() {
        return "none".into();
    }
    let lines: Vec<String> = hits
        .iter()
        .map(|h| {
            let at = if h.a == h.b { format!("a={}", h.a) } else { format!("a={} b={}", h.a, h.b) };
            format!("{at} alpha={} S={} Q={}", h.alpha, h.s, h.q)
        })
        .collect();
    lines.join("\n")
}

pub fn lucas(rep: &LucasReport) -> String {
    let verdict = match &rep.counterexample {
        None => "passed".to_string(),
        Some(c) => format!("failed: {c}"),
    };
    format!("R={} n={} {verdict}", rep.rodset, rep.horizon)
}

pub fn borwein(t: &BorweinTable) -> String {
    let mut out = String::new();
    for (i, fam) in t.families.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = write!(
            out,
            "R={} b<={} within_expected={} scan_agrees={}",
            fam.rodset,
            t.bound,
            fam.within_expected(),
            fam.scan_agrees
        );
        for (key, pairs) in &fam.classes {
            let sets: Vec<String> = pairs.iter().map(|p| pair_rodset(p).to_string()).collect();
            let _ = write!(out, "\n  {key}: {}", sets.join(" "));
        }
    }
    out
}

pub fn enumeration(e: &Enumeration, list: bool) -> String {
    let mut out = String::new();
    if list {
        for t in &e.trains {
            let _ = writeln!(out, "{t}");
        }
    }
    let _ = write!(out, "net={} total={}", e.net, e.trains.len());
    out
}
