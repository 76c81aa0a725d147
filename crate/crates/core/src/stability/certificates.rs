use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::rank;
use crate::groebner::{buchberger, buchberger_truncated};
use crate::lp::{separating_direction, LinearProgram, LpOutcome, Relation};
use crate::order::MonomialOrder;
use crate::poly::{monomials_of_degree, Ideal, Monomial, OneParamSubgroup, Polynomial};
use crate::scalar::{primitive_integer_vector, Scalar};

/// Weights of a one-dimensional torus in the stabilizer, in working coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempfHypothesis {
    pub stabilizer_weights: Vec<i64>,
}

impl KempfHypothesis {
    pub fn new(stabilizer_weights: Vec<i64>) -> Self {
        KempfHypothesis { stabilizer_weights }
    }

    pub fn multiplicity_free(&self) -> bool {
        self.repeated_weight().is_none()
    }

    fn repeated_weight(&self) -> Option<i64> {
        let mut seen = BTreeSet::new();
        self.stabilizer_weights.iter().copied().find(|w| !seen.insert(*w))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KempfApplicability {
    Applicable,
    NotApplicable(String),
}

impl fmt::Display for KempfApplicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KempfApplicability::Applicable => f.write_str("applicable"),
            KempfApplicability::NotApplicable(r) => write!(f, "not applicable ({r})"),
        }
    }
}

/// With pairwise distinct stabilizer weights the worst subgroup can be taken
/// diagonal in the working coordinates, so the torus test is conclusive.
pub fn check_kempf_reduction(h: &KempfHypothesis) -> KempfApplicability {
    match h.repeated_weight() {
        None => KempfApplicability::Applicable,
        Some(w) => KempfApplicability::NotApplicable(format!("repeated weight {w}")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickeningReport {
    pub coordinate: usize,
    /// Smallest `r` with `x_j^r` in the ideal; 0 if none up to the search limit.
    pub r: u32,
    /// The point is unstable for every `m` strictly above this.
    pub bound: Option<u64>,
    /// Weight 0 on the thickened coordinate and 1 elsewhere.
    pub certificate_rho: Option<OneParamSubgroup>,
}

/// Looks for a power of the coordinate `x_j` inside the ideal.
pub fn thickening_instability<C: Scalar>(ideal: &Ideal<C>, coordinate: usize, search_r_max: u32) -> Result<ThickeningReport> {
    let n = ideal.nvars();
    if coordinate >= n {
        return Err(Error::InvalidArgument(format!(
            "coordinate {coordinate} out of range for {n} variables"
        )));
    }
    let gb = buchberger(n, ideal.generators(), &MonomialOrder::GradedRevLex)?;
    let found = (1..=search_r_max).find(|&r| {
        let mut e = vec![0u32; n];
        e[coordinate] = r;
        gb.contains(&Polynomial::monomial(Monomial::new(e)))
    });
    Ok(match found {
        None => ThickeningReport {
            coordinate,
            r: 0,
            bound: None,
            certificate_rho: None,
        },
        Some(r) => {
            let mut w = vec![1i64; n];
            w[coordinate] = 0;
            ThickeningReport {
                coordinate,
                r,
                bound: Some(n as u64 * (r as u64 - 1)),
                certificate_rho: Some(OneParamSubgroup::new(w)),
            }
        }
    })
}

/// All degree-`m` monomials except `excluded`.
pub fn complement_basis(nvars: usize, m: u32, excluded: &[Monomial]) -> Vec<Monomial> {
    monomials_of_degree(nvars, m)
        .into_iter()
        .filter(|x| !excluded.contains(x))
        .collect()
}

/// Sum of `rho`-weights over a monomial set.
pub fn basis_weight_sum(basis: &[Monomial], rho: &OneParamSubgroup) -> Result<i64> {
    basis.iter().map(|x| x.weight(rho)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisBound<C: Scalar> {
    /// Multipliers `y >= 0` summing to 1 with `sum y_i c_i = value * (1,...,1)`:
    /// for traceless weights the weighted sum of basis weights is zero, so one
    /// of them is non-positive.
    Holds { multipliers: Vec<C>, value: C },
    /// A traceless weight vector giving every basis positive weight.
    Fails { rho: OneParamSubgroup },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasisReport<C: Scalar> {
    pub m: u32,
    /// Exponent sum `c_i` of each basis; its weight sum under `rho` is `c_i . rho`.
    pub exponent_sums: Vec<Vec<i64>>,
    pub outcome: BasisBound<C>,
}

/// Checks that every traceless weight vector gives some listed basis a
/// non-positive weight sum.
pub fn monomial_basis_index_bound<C: Scalar>(
    ideal: &Ideal<C>,
    m: u32,
    bases: &[Vec<Monomial>],
) -> Result<MonomialBasisReport<C>> {
    let n = ideal.nvars();
    if bases.is_empty() {
        return Err(Error::InvalidArgument("no bases given".into()));
    }
    let gb = buchberger_truncated(n, ideal.generators(), &MonomialOrder::GradedRevLex, m)?;
    let standard = gb.standard_monomials(m);
    let column: BTreeMap<&Monomial, usize> = standard.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let hf = standard.len();
    let mut exponent_sums = Vec::with_capacity(bases.len());
    for (index, basis) in bases.iter().enumerate() {
        let mut rows = Vec::with_capacity(basis.len());
        let mut sum = vec![0i64; n];
        for x in basis {
            if x.nvars() != n || x.degree() != m {
                return Err(Error::NotABasis {
                    index,
                    rank: 0,
                    expected: hf,
                });
            }
            let nf = gb.reduce(&Polynomial::monomial(x.clone()));
            let mut row = vec![C::zero(); hf];
            for (mono, c) in nf.terms() {
                row[column[mono]] = c.clone();
            }
            rows.push(row);
            for (s, &e) in sum.iter_mut().zip(x.exponents()) {
                *s += e as i64;
            }
        }
        let r = rank(&rows, hf);
        if r != hf || basis.len() != hf {
            return Err(Error::NotABasis {
                index,
                rank: r,
                expected: hf,
            });
        }
        exponent_sums.push(sum);
    }

    let k = bases.len();
    let mut lp = LinearProgram::new(k);
    lp.constraint(vec![C::one(); k], Relation::Eq, C::one());
    for j in 1..n {
        let row = exponent_sums.iter().map(|c| C::from_i64(c[j] - c[0])).collect();
        lp.constraint(row, Relation::Eq, C::zero());
    }
    let outcome = match lp.solve() {
        LpOutcome::Optimal { x, .. } => {
            let mut value = C::zero();
            for (y, c) in x.iter().zip(&exponent_sums) {
                let mut t = C::from_i64(c[0]);
                t *= y;
                value += &t;
            }
            BasisBound::Holds { multipliers: x, value }
        }
        _ => {
            let neg: Vec<Vec<C>> = exponent_sums
                .iter()
                .map(|c| c.iter().map(|&v| C::from_i64(-v)).collect())
                .collect();
            let w = separating_direction(&neg, &vec![C::zero(); n], true)
                .ok_or_else(|| Error::Inconsistent("Motzkin alternative failed".into()))?;
            let rho = primitive_integer_vector(&w)
                .iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::InvalidArgument("weight out of range".into())))
                .collect::<Result<Vec<_>>>()?;
            BasisBound::Fails {
                rho: OneParamSubgroup::new(rho),
            }
        }
    };
    Ok(MonomialBasisReport {
        m,
        exponent_sums,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn kempf() {
        assert_eq!(
            check_kempf_reduction(&KempfHypothesis::new(vec![6, 4, 3, 2, 0])),
            KempfApplicability::Applicable
        );
        assert_eq!(
            check_kempf_reduction(&KempfHypothesis::new(vec![1, 1, 0])),
            KempfApplicability::NotApplicable("repeated weight 1".into())
        );
        assert_eq!(check_kempf_reduction(&KempfHypothesis::new(vec![0])), KempfApplicability::Applicable);
    }

    #[test]
    fn double_line_thickening() {
        let ideal: Ideal<Q> = Ideal::from_strings(Ring::indexed("x", 3), &["x0^2"]).unwrap();
        let r = thickening_instability(&ideal, 0, 5).unwrap();
        assert_eq!(r.r, 2);
        assert_eq!(r.bound, Some(3));
        assert_eq!(r.certificate_rho, Some(OneParamSubgroup::new(vec![0, 1, 1])));
        assert_eq!(thickening_instability(&ideal, 1, 5).unwrap().r, 0);
    }

    #[test]
    fn point_in_p1() {
        let ideal: Ideal<Q> = Ideal::from_strings(Ring::indexed("x", 2), &["x0"]).unwrap();
        let r = thickening_instability(&ideal, 0, 3).unwrap();
        assert_eq!((r.r, r.bound), (1, Some(0)));
    }

    #[test]
    fn variables_of_zero_ideal() {
        let ideal: Ideal<Q> = Ideal::zero(Ring::indexed("x", 3));
        let basis = monomials_of_degree(3, 1);
        let rep = monomial_basis_index_bound(&ideal, 1, &[basis.clone()]).unwrap();
        assert_eq!(rep.exponent_sums, vec![vec![1, 1, 1]]);
        assert!(matches!(rep.outcome, BasisBound::Holds { .. }));
        let rho = OneParamSubgroup::new(vec![2, -3, 1]);
        assert_eq!(basis_weight_sum(&basis, &rho).unwrap(), 0);
    }

    #[test]
    fn rejects_non_basis() {
        let ideal: Ideal<Q> = Ideal::from_strings(Ring::indexed("x", 3), &["x0 - x1"]).unwrap();
        // x0 and x1 are equal modulo the ideal.
        let bad = vec![Monomial::var(3, 0), Monomial::var(3, 1)];
        let err = monomial_basis_index_bound(&ideal, 1, &[bad]).unwrap_err();
        assert_eq!(
            err,
            Error::NotABasis {
                index: 0,
                rank: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn single_basis_can_fail() {
        // Degree-1 basis {x0, x1} of k[x0,x1,x2]/<x2>: rho = (1,1,-2) makes it positive.
        let ideal: Ideal<Q> = Ideal::from_strings(Ring::indexed("x", 3), &["x2"]).unwrap();
        let basis = vec![Monomial::var(3, 0), Monomial::var(3, 1)];
        let rep = monomial_basis_index_bound(&ideal, 1, &[basis.clone()]).unwrap();
        match rep.outcome {
            BasisBound::Fails { rho } => {
                assert_eq!(rho.total(), 0);
                assert!(basis_weight_sum(&basis, &rho).unwrap() > 0);
            }
            _ => panic!("expected a counterexample"),
        }
    }
}
