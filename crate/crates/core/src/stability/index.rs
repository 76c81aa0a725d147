use std::fmt;


use crate::error::{Error, Result};
use crate::groebner::buchberger_truncated;
use crate::hilbert::HilbertPolynomial;
use crate::order::{MonomialOrder, TieBreak};
use crate::poly::{count_monomials, Ideal, OneParamSubgroup};
use crate::scalar::Scalar;

/// Outcome of a Hilbert–Mumford test against one subgroup.
///
/// Positive index means the point passes strictly: `Stable` iff index > 0,
/// `StrictlySemistable` iff index = 0, `Unstable` iff index < 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Verdict {
    pub fn from_index<C: Scalar>(index: &C) -> Self {
        if index.is_positive() {
            Verdict::Stable
        } else if index.is_zero() {
            Verdict::StrictlySemistable
        } else {
            Verdict::Unstable
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::StrictlySemistable => "strictly-semistable",
            Verdict::Unstable => "unstable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `index = average_term - standard_weight_sum` with
/// `average_term = m P(m) (sum r_i) / (N + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertMumfordReport<C: Scalar> {
    pub m: u32,
    pub rho: OneParamSubgroup,
    pub index: C,
    pub standard_weight_sum: i64,
    pub average_term: C,
    pub verdict: Verdict,
    /// `P(m)` as supplied.
    pub hilbert_polynomial_value: C,
    /// Number of degree-`m` standard monomials.
    pub hilbert_function_value: u64,
    /// `P(m) != HF(m)`: `m` is below the regularity of the ideal.
    pub below_regularity: bool,
}

pub(crate) fn integral_degree<C: Scalar>(m: &C) -> Result<u32> {
    if !m.is_integral() || !m.is_positive() {
        return Err(Error::NonIntegerDegree(m.to_string()));
    }
    m.to_i64()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::NonIntegerDegree(m.to_string()))
}

/// Hilbert–Mumford index of the `m`-th Hilbert point against `rho`, from the
/// standard monomials of the `rho`-weighted graded order with a graded-lex tie-break.
pub fn hilbert_mumford_index<C: Scalar>(
    ideal: &Ideal<C>,
    m: &C,
    rho: &OneParamSubgroup,
    p: &HilbertPolynomial<C>,
) -> Result<HilbertMumfordReport<C>> {
    hilbert_mumford_index_with(ideal, m, rho, p, TieBreak::GradedLex)
}

pub fn hilbert_mumford_index_with<C: Scalar>(
    ideal: &Ideal<C>,
    m: &C,
    rho: &OneParamSubgroup,
    p: &HilbertPolynomial<C>,
    tie_break: TieBreak,
) -> Result<HilbertMumfordReport<C>> {
    let degree = integral_degree(m)?;
    let p_m = p.eval(m);
    index_for_count(ideal, degree, rho, p_m, tie_break)
}

/// Index with the Hilbert polynomial value supplied directly.
pub(crate) fn index_for_count<C: Scalar>(
    ideal: &Ideal<C>,
    m: u32,
    rho: &OneParamSubgroup,
    p_m: C,
    tie_break: TieBreak,
) -> Result<HilbertMumfordReport<C>> {
    let n = ideal.nvars();
    rho.check_len(n)?;
    let order = MonomialOrder::WeightedGraded {
        rho: rho.clone(),
        tie_break,
    };
    let gb = buchberger_truncated(n, ideal.generators(), &order, m)?;
    let standard = gb.standard_monomials(m);
    let standard_weight_sum: i64 = standard.iter().map(|x| x.weight(rho).expect("length checked")).sum();
    let mut average_term = C::from_i64(m as i64 * rho.total());
    average_term *= &p_m;
    average_term = average_term / C::from_i64(n as i64);
    let index = average_term.clone() - C::from_i64(standard_weight_sum);
    let hf = standard.len() as u64;
    Ok(HilbertMumfordReport {
        m,
        rho: rho.clone(),
        verdict: Verdict::from_index(&index),
        index,
        standard_weight_sum,
        average_term,
        below_regularity: p_m != C::from_i64(hf as i64),
        hilbert_polynomial_value: p_m,
        hilbert_function_value: hf,
    })
}

/// The same index evaluated from the initial-ideal side:
/// `rho . (exponent sum of in(I)_m) - m (T(m) - P(m)) (sum r_i) / (N + 1)`.
pub fn ideal_side_index<C: Scalar>(
    ideal: &Ideal<C>,
    m: &C,
    rho: &OneParamSubgroup,
    p: &HilbertPolynomial<C>,
) -> Result<C> {
    let degree = integral_degree(m)?;
    let n = ideal.nvars();
    rho.check_len(n)?;
    let gb = buchberger_truncated(n, ideal.generators(), &MonomialOrder::weighted(rho.clone()), degree)?;
    let vertex = gb.initial_exponent_sum(degree);
    let pairing: i64 = vertex.iter().zip(rho.weights()).map(|(v, r)| v * r).sum();
    let t = C::from_i64(count_monomials(n, degree) as i64);
    let mut shift = t - p.eval(m);
    shift *= &C::from_i64(degree as i64 * rho.total());
    shift = shift / C::from_i64(n as i64);
    Ok(C::from_i64(pairing) - shift)
}
