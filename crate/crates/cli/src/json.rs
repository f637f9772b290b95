//! JSON documents emitted by `--json`.
//!
//! Keys are sorted (serde_json's default map) and no floats are written, so a
//! document re-serializes byte for byte. Integers beyond 2^53 − 1 in
//! magnitude are written as decimal strings.

use chainpoly::analysis::{GasharovReport, MethodOutcome, SuiteResult};
use chainpoly::{IntPolynomial, Method, VerificationReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) if small.abs() <= MAX_SAFE_INTEGER => Value::from(small),
        _ => Value::String(v.to_string()),
    }
}

pub fn poly(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn opt_poly(p: Option<&IntPolynomial>) -> Value {
    p.map_or(Value::Null, poly)
}

fn method_status(outcome: Option<&MethodOutcome>, timings: bool) -> Value {
    let mut m = Map::new();
    match outcome {
        None => {
            m.insert("status".into(), "disabled".into());
        }
        Some(MethodOutcome::Computed { path, elapsed, .. }) => {
            m.insert("status".into(), "computed".into());
            m.insert("path".into(), path.name().into());
            if timings {
                let micros = u64::try_from(elapsed.as_micros()).unwrap_or(u64::MAX);
                m.insert("micros".into(), big(&BigInt::from(micros)));
            }
        }
        Some(MethodOutcome::OverBudget(reason)) => {
            m.insert("status".into(), "over-budget".into());
            m.insert("reason".into(), reason.as_str().into());
        }
        Some(MethodOutcome::Failed(reason)) => {
            m.insert("status".into(), "failed".into());
            m.insert("reason".into(), reason.as_str().into());
        }
    }
    Value::Object(m)
}

pub fn verification(r: &VerificationReport, timings: bool) -> Value {
    let methods: Map<String, Value> = Method::ALL
        .iter()
        .map(|&m| (m.name().to_string(), method_status(r.outcome(m), timings)))
        .collect();
    json!({
        "kind": "cross-verify",
        "poset": r.poset,
        "d": r.d,
        "delta_lattice": opt_poly(r.delta_by(Method::Lattice)),
        "delta_omega": opt_poly(r.delta_by(Method::Omega)),
        "delta_descents": opt_poly(r.delta_by(Method::Descents)),
        "methods": methods,
        "identities": {
            "lattice_omega": r.identities.lattice_omega,
            "lattice_descents": r.identities.lattice_descents,
            "omega_descents": r.identities.omega_descents,
        },
        "identities_ok": r.identities_ok,
        "delta": opt_poly(r.delta.as_ref()),
        "unimodal": r.unimodal,
        "peak": r.peak,
        "unimodality_asserted": r.unimodality_asserted,
        "symmetric": r.symmetric,
        "effective_degree": r.effective_degree,
        "nonnegative": r.nonnegative,
        "delta0_is_one": r.delta0_is_one,
        "coefficient_sum": r.coefficient_sum.as_ref().map_or(Value::Null, big),
        "pass": r.passed(),
    })
}

pub fn gasharov(r: &GasharovReport) -> Value {
    json!({
        "kind": "gasharov",
        "graded": r.rank.is_some(),
        "rank": r.rank,
        "not_graded_witness": r.not_graded.as_ref().map(|w| json!([w.longer.elems(), w.shorter.elems()])),
        "natural": r.natural,
        "failed_hypotheses": r.failed_hypotheses,
        "hypotheses_hold": r.hypotheses_hold(),
        "w": poly(&r.w),
        "unimodal": r.unimodal,
        "peak": r.peak,
        "pass": r.passed(),
    })
}

pub fn suite(s: &SuiteResult) -> Value {
    json!({
        "kind": "selftest-suite",
        "suite": s.name,
        "checked": s.checked,
        "failures": s.failures,
        "first_failure": s.first_failure.as_ref().map(|f| json!({
            "case": f.case,
            "poset": f.poset_text,
            "labeling": f.labeling,
            "detail": f.detail,
        })),
        "pass": s.passed(),
    })
}

/// `{version, command, items, pass}`.
pub fn document(command: &str, items: Vec<Value>, pass: bool) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "items": items,
        "pass": pass,
    })
}

pub fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values always serialize");
    s.push('\n');
    s
}
