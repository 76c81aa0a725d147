//! JSON reports. Rationals and possibly large integers are written as strings
//! (`"p/q"` or `"p"`); weight vectors and vertices as arrays of integers.

use serde_json::{json, Value};

use crate::scalar::Scalar;

use super::certificates::{BasisBound, MonomialBasisReport, ThickeningReport};
use super::index::HilbertMumfordReport;
use super::polytope::StatePolytope;
use super::semistable::{SemistabilityCertificate, SemistabilityReport};

fn rational<C: Scalar>(c: &C) -> Value {
    Value::String(c.to_string())
}

fn rationals<C: Scalar>(v: &[C]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn hm_report_json<C: Scalar>(r: &HilbertMumfordReport<C>) -> Value {
    json!({
        "m": r.m,
        "rho": r.rho.weights(),
        "index": rational(&r.index),
        "standard_weight_sum": r.standard_weight_sum.to_string(),
        "average_term": rational(&r.average_term),
        "verdict": r.verdict.as_str(),
        "hilbert_polynomial_value": rational(&r.hilbert_polynomial_value),
        "hilbert_function_value": r.hilbert_function_value,
        "below_regularity": r.below_regularity,
    })
}

pub fn polytope_json(p: &StatePolytope) -> Value {
    json!({
        "m": p.m,
        "vertices": p.vertices.iter().collect::<Vec<_>>(),
        "dimension": p.dimension,
        "representatives": p
            .representatives
            .iter()
            .map(|(v, w)| json!({ "vertex": v, "rho": w.weights() }))
            .collect::<Vec<_>>(),
    })
}

pub fn semistability_json<C: Scalar>(r: &SemistabilityReport<C>) -> Value {
    let certificate = match &r.certificate {
        SemistabilityCertificate::ConvexCombination(combo) => json!({
            "kind": "convex-combination",
            "weights": combo
                .iter()
                .map(|(v, l)| json!({ "vertex": v, "weight": rational(l) }))
                .collect::<Vec<_>>(),
        }),
        SemistabilityCertificate::Destabilizing(rep) => json!({
            "kind": "destabilizing-subgroup",
            "rho": rep.rho.weights(),
            "index": rational(&rep.index),
        }),
    };
    json!({
        "m": r.m,
        "verdict": if r.semistable { "semistable" } else { "unstable" },
        "barycenter": rationals(&r.barycenter),
        "hilbert_function_value": r.hilbert_function_value,
        "vertices": r.polytope.vertices.iter().collect::<Vec<_>>(),
        "certificate": certificate,
        "kempf": r.kempf.as_ref().map(|k| k.to_string()),
    })
}

pub fn thickening_json(r: &ThickeningReport) -> Value {
    json!({
        "coordinate": r.coordinate,
        "r": r.r,
        "bound": r.bound,
        "rho": r.certificate_rho.as_ref().map(|w| w.weights().to_vec()),
        "verdict": if r.r > 0 { "unstable-above-bound" } else { "no-thickening" },
    })
}

pub fn basis_bound_json<C: Scalar>(r: &MonomialBasisReport<C>) -> Value {
    let certificate = match &r.outcome {
        BasisBound::Holds { multipliers, value } => json!({
            "kind": "infeasibility",
            "multipliers": rationals(multipliers),
            "value": rational(value),
        }),
        BasisBound::Fails { rho } => json!({ "kind": "counterexample", "rho": rho.weights() }),
    };
    json!({
        "m": r.m,
        "exponent_sums": r.exponent_sums,
        "verdict": if matches!(r.outcome, BasisBound::Holds { .. }) { "bound-holds" } else { "bound-fails" },
        "certificate": certificate,
    })
}
