use crate::error::{Error, Result};
use crate::geometry::min_norm_point;
use crate::groebner::buchberger_truncated;
use crate::lp::convex_combination;
use crate::order::{MonomialOrder, TieBreak};
use crate::poly::{count_monomials, Ideal, OneParamSubgroup};
use crate::scalar::{primitive_integer_vector, Scalar};

use super::certificates::{check_kempf_reduction, KempfApplicability, KempfHypothesis};
use super::index::{index_for_count, HilbertMumfordReport};
use super::polytope::{state_polytope, StatePolytope, TraversalOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemistabilityCertificate<C: Scalar> {
    /// Convex weights on the polytope vertices (in `StatePolytope::vertices` order)
    /// whose combination is the barycenter.
    ConvexCombination(Vec<(Vec<i64>, C)>),
    /// A subgroup with negative index, re-checked against the Gröbner index.
    Destabilizing(HilbertMumfordReport<C>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistabilityReport<C: Scalar> {
    pub m: u32,
    pub semistable: bool,
    pub barycenter: Vec<C>,
    pub hilbert_function_value: u64,
    pub polytope: StatePolytope,
    pub certificate: SemistabilityCertificate<C>,
    /// Set by [`SemistabilityReport::with_kempf`]: whether torus semistability
    /// in these coordinates implies semistability for the full group.
    pub kempf: Option<KempfApplicability>,
}

impl<C: Scalar> SemistabilityReport<C> {
    pub fn with_kempf(mut self, h: &KempfHypothesis) -> Self {
        self.kempf = Some(check_kempf_reduction(h));
        self
    }

    /// Semistable for the full special linear group, as far as can be certified.
    pub fn fully_semistable(&self) -> Option<bool> {
        if !self.semistable {
            return Some(false);
        }
        match self.kempf {
            Some(KempfApplicability::Applicable) => Some(true),
            _ => None,
        }
    }
}

/// Barycenter test for the degree-`m` Hilbert point against the diagonal torus.
///
/// The barycenter is `m (T(m) - HF(m)) / (N + 1)` times the all-ones vector. On
/// failure the subgroup is minus the point of the shifted polytope closest to
/// the origin; its index is recomputed from scratch before being returned.
pub fn is_torus_semistable<C: Scalar>(
    ideal: &Ideal<C>,
    m: u32,
    opts: &TraversalOptions,
) -> Result<SemistabilityReport<C>> {
    let n = ideal.nvars();
    let polytope = state_polytope(ideal, m, opts)?;
    let t = count_monomials(n, m) as i64;
    let gb = buchberger_truncated(n, ideal.generators(), &MonomialOrder::GradedRevLex, m)?;
    let hf = gb.standard_monomials(m).len() as u64;
    let coord = C::from_i64(m as i64 * (t - hf as i64)) / C::from_i64(n as i64);
    let barycenter = vec![coord; n];
    let verts: Vec<Vec<i64>> = polytope.vertices.iter().cloned().collect();
    let points: Vec<Vec<C>> = verts.iter().map(|v| v.iter().map(|&x| C::from_i64(x)).collect()).collect();

    if let Some(lambda) = convex_combination(&points, &barycenter) {
        let combo = verts
            .into_iter()
            .zip(lambda)
            .filter(|(_, l)| !l.is_zero())
            .collect();
        return Ok(SemistabilityReport {
            m,
            semistable: true,
            barycenter,
            hilbert_function_value: hf,
            polytope,
            certificate: SemistabilityCertificate::ConvexCombination(combo),
            kempf: None,
        });
    }

    let shifted: Vec<Vec<C>> = points
        .iter()
        .map(|p| p.iter().zip(&barycenter).map(|(x, b)| x.clone() - b.clone()).collect())
        .collect();
    let (closest, _) = min_norm_point(&shifted);
    let neg: Vec<C> = closest.into_iter().map(|x| -x).collect();
    let rho = primitive_integer_vector(&neg)
        .iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::InvalidArgument("destabilizing weight out of range".into())))
        .collect::<Result<Vec<_>>>()?;
    let report = index_for_count(
        ideal,
        m,
        &OneParamSubgroup::new(rho),
        C::from_i64(hf as i64),
        TieBreak::GradedLex,
    )?;
    if !report.index.is_negative() {
        return Err(Error::Inconsistent(format!(
            "destabilizing subgroup {} has index {}",
            report.rho, report.index
        )));
    }
    Ok(SemistabilityReport {
        m,
        semistable: false,
        barycenter,
        hilbert_function_value: hf,
        polytope,
        certificate: SemistabilityCertificate::Destabilizing(report),
        kempf: None,
    })
}
