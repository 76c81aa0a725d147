use std::fmt;

use crate::error::{Error, Result};
use crate::poly::OneParamSubgroup;

/// A monomial stored as a dense exponent vector.
///
/// The derived `Ord` is plain lexicographic on the exponent vector and is
/// only used for storage; term orders live in [`crate::order::MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Weight of the monomial under a diagonal one-parameter subgroup:
    /// the dot product of the exponent vector with the weight vector.
    pub fn weight(&self, rho: &OneParamSubgroup) -> Result<i64> {
        if rho.len() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                found: rho.len(),
            });
        }
        Ok(self.dot(rho.weights()))
    }

    pub(crate) fn dot(&self, weights: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    /// Restricts to the variables in `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Monomial {
        Monomial {
            exps: self.exps[range].to_vec(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in
/// descending lexicographic order of the exponent vectors.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, 0, degree, &mut out);
    out
}

fn fill(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Number of monomials of degree `degree` in `nvars` variables,
/// `C(nvars - 1 + degree, nvars - 1)`.
pub fn count_monomials(nvars: usize, degree: u32) -> u64 {
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    let n = nvars as u64 - 1;
    let mut acc: u128 = 1;
    for i in 1..=n {
        acc = acc * (degree as u128 + i as u128) / i as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_examples() {
        let m = Monomial::new(vec![0, 1, 0, 0, 1]);
        let rho = OneParamSubgroup::new(vec![6, 4, 3, 2, 0]);
        assert_eq!(m.weight(&rho).unwrap(), 4);
        let zero = OneParamSubgroup::new(vec![0; 5]);
        assert_eq!(m.weight(&zero).unwrap(), 0);
        let x0sq = Monomial::new(vec![2, 0, 0]);
        assert_eq!(x0sq.weight(&OneParamSubgroup::new(vec![0, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn weight_length_mismatch() {
        let m = Monomial::new(vec![1, 1]);
        let err = m.weight(&OneParamSubgroup::new(vec![1, 2, 3])).unwrap_err();
        assert_eq!(
            err,
            Error::LengthMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn enumeration_counts() {
        for n in 1..6 {
            for d in 0..6 {
                let all = monomials_of_degree(n, d);
                assert_eq!(all.len() as u64, count_monomials(n, d));
                assert!(all.iter().all(|m| m.degree() == d));
            }
        }
        assert_eq!(count_monomials(5, 2), 15);
        assert_eq!(count_monomials(11, 5), 3003);
    }

    #[test]
    fn divisibility() {
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![2, 1, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![1, 1, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&Monomial::new(vec![0, 3, 1])), Monomial::new(vec![1, 3, 2]));
        assert!(Monomial::new(vec![1, 0, 0]).is_coprime(&Monomial::new(vec![0, 2, 1])));
    }
}
