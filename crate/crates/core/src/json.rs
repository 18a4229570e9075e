//! JSON forms of results. Integers are emitted exactly, at any size.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::counts::{CountSeq, RodSource};
use crate::expansion::{Dual, Expansion, Finiteness};
use crate::rodset::{RodSet, ShapeReport, Sign};
use crate::series::Poly;
use crate::structure::{BorweinTable, LucasReport, PeriodReport, ScalingHit};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub fn big(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

pub fn bigs(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(big).collect())
}

fn sign(s: Sign) -> Value {
    json!(s.to_i64())
}

impl ToJson for RodSet {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for CountSeq {
    fn to_json(&self) -> Value {
        json!({"start": self.start, "values": bigs(&self.values)})
    }
}

impl ToJson for Poly {
    fn to_json(&self) -> Value {
        bigs(self.coeffs())
    }
}

impl ToJson for RodSource {
    fn to_json(&self) -> Value {
        match self {
            RodSource::Finite(r) => json!({"kind": "finite", "rods": r.to_string()}),
            RodSource::Arithmetic { first, step, sign: s } => {
                json!({"kind": "arith", "first": first, "step": step, "sign": sign(*s)})
            }
            RodSource::TrainsOf { base, sign: s } => {
                json!({"kind": "trains", "base": base.to_string(), "sign": sign(*s)})
            }
            RodSource::Counts(seq) => json!({"kind": "counts", "values": bigs(&seq.values)}),
        }
    }
}

/// A finite set as its literal, anything else as a source object.
fn set_or_source(src: &RodSource) -> Value {
    match src {
        RodSource::Finite(r) => r.to_json(),
        other => other.to_json(),
    }
}

impl ToJson for Finiteness {
    fn to_json(&self) -> Value {
        self.as_bool().map_or(Value::Null, Value::Bool)
    }
}

impl ToJson for Expansion {
    fn to_json(&self) -> Value {
        json!({
            "R": set_or_source(&self.r),
            "Q": set_or_source(&self.q),
            "S": set_or_source(&self.s),
            "horizon": self.horizon,
            "r_finite": self.r_finite.to_json(),
            "q_finite": self.q_finite.to_json(),
            "s_finite": self.s_finite.to_json(),
            "identity_checked": self.identity_checked,
        })
    }
}

impl ToJson for Dual {
    fn to_json(&self) -> Value {
        json!({
            "Q": set_or_source(&self.q),
            "dual": set_or_source(&self.dual),
            "horizon": self.horizon,
            "finite": self.finite.to_json(),
            "identity_checked": self.identity_checked,
        })
    }
}

impl ToJson for ShapeReport {
    fn to_json(&self) -> Value {
        json!({
            "shape": self.shape,
            "multiplicities": bigs(&self.multiplicities),
            "min": self.min,
            "max": self.max,
            "size": big(&self.size),
            "primitive": self.primitive,
            "positive": self.positive,
            "empty": self.empty,
        })
    }
}

impl ToJson for PeriodReport {
    fn to_json(&self) -> Value {
        json!({
            "periodic": self.periodic,
            "period": self.least_period,
            "factors": self.cyclotomic_factors,
            "Q": self.q_to_period.as_ref().map(ToJson::to_json),
            "window_confirmed": self.window_confirmed,
        })
    }
}

impl ToJson for ScalingHit {
    fn to_json(&self) -> Value {
        json!({
            "a": self.a,
            "b": self.b,
            "alpha": big(&self.alpha),
            "mult_b": big(&self.mult_b),
            "S": self.s.to_json(),
            "Q": self.q.to_json(),
        })
    }
}

impl<T: ToJson> ToJson for [T] {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(ToJson::to_json).collect())
    }
}

impl ToJson for LucasReport {
    fn to_json(&self) -> Value {
        json!({
            "R": self.rodset.to_json(),
            "horizon": self.horizon,
            "passed": self.passed,
            "counterexample": self.counterexample,
        })
    }
}

impl ToJson for BorweinTable {
    fn to_json(&self) -> Value {
        let families: Vec<Value> = self
            .families
            .iter()
            .map(|fam| {
                let classes: Map<String, Value> = fam
                    .classes
                    .iter()
                    .map(|(k, pairs)| {
                        let sets = pairs
                            .iter()
                            .map(|p| Value::String(crate::structure::borwein::pair_rodset(p).to_string()))
                            .collect();
                        (k.clone(), Value::Array(sets))
                    })
                    .collect();
                json!({
                    "R": fam.rodset.to_json(),
                    "modulus": fam.modulus,
                    "expected": fam.expected,
                    "classes": classes,
                    "within_expected": fam.within_expected(),
                    "scan_agrees": fam.scan_agrees,
                })
            })
            .collect();
        json!({"bound": self.bound, "families": families})
    }
}
