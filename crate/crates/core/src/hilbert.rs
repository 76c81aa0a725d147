//! Hilbert functions, Hilbert polynomials, regularity probing and Gotzmann numbers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::count_monomials;
use crate::scalar::Scalar;

/// A univariate polynomial in `m` with exact coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HilbertPolynomial<C: Scalar> {
    coeffs: Vec<C>,
}

impl<C: Scalar> HilbertPolynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `slope * m + intercept`.
    pub fn linear(slope: C, intercept: C) -> Self {
        Self::new(vec![intercept, slope])
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, m: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc *= m;
            acc += c;
        }
        acc
    }

    pub fn eval_int(&self, m: i64) -> C {
        self.eval(&C::from_i64(m))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let mut a = self.coeffs.get(i).cloned().unwrap_or_else(C::zero);
                if let Some(b) = other.coeffs.get(i) {
                    a -= b;
                }
                a
            })
            .collect();
        Self::new(coeffs)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let mut t = a.clone();
                t *= b;
                coeffs[i + j] += &t;
            }
        }
        Self::new(coeffs)
    }

    /// The binomial polynomial `C(m + shift, k)`.
    pub fn binomial(shift: i64, k: u32) -> Self {
        let mut p = Self::constant(C::one());
        let mut fact = C::one();
        for j in 0..k as i64 {
            p = p.mul(&Self::linear(C::one(), C::from_i64(shift - j)));
            fact *= &C::from_i64(j + 1);
        }
        let inv = C::one() / fact;
        Self::new(
            p.coeffs
                .into_iter()
                .map(|mut c| {
                    c *= &inv;
                    c
                })
                .collect(),
        )
    }

    /// Integer-valued on the integers: checked on `deg + 1` consecutive values.
    pub fn is_integer_valued(&self) -> bool {
        let d = self.degree().unwrap_or(0) as i64;
        (0..=d).all(|m| self.eval_int(m).is_integral())
    }
}

impl<C: Scalar> fmt::Display for HilbertPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let r = c.to_rational();
            let neg = r < num_rational::BigRational::from_integer(0.into());
            let abs = if neg { -r } else { r };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let one = abs == num_rational::BigRational::from_integer(1.into());
            match i {
                0 => write!(f, "{abs}")?,
                1 if one => write!(f, "m")?,
                1 => write!(f, "{abs}m")?,
                _ if one => write!(f, "m^{i}")?,
                _ => write!(f, "{abs}m^{i}")?,
            }
        }
        Ok(())
    }
}

/// Dimension of the degree-`m` piece of the quotient: `T(m) - |in(I)_m|`.
pub fn hilbert_function<C: Scalar>(gb: &GroebnerBasis<C>, m: u32) -> u64 {
    count_monomials(gb.nvars(), m) - gb.initial_ideal_degree(m).len() as u64
}

/// `d*m + 1 - g`, the Hilbert polynomial of a degree `d` genus `g` curve.
pub fn hilbert_polynomial_of_curve<C: Scalar>(d: i64, g: i64) -> Result<HilbertPolynomial<C>> {
    if d < 1 {
        return Err(Error::InvalidArgument(format!("curve degree must be positive, got {d}")));
    }
    Ok(HilbertPolynomial::linear(C::from_i64(d), C::from_i64(1 - g)))
}

/// Hilbert polynomial of a degree `r` hypersurface in `P^n`:
/// `C(m + n, n) - C(m - r + n, n)`.
pub fn hilbert_polynomial_of_hypersurface<C: Scalar>(n: u32, r: u32) -> HilbertPolynomial<C> {
    HilbertPolynomial::binomial(n as i64, n).sub(&HilbertPolynomial::binomial(n as i64 - r as i64, n))
}

/// Length of the Gotzmann representation
/// `P(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i)`, `a_1 >= ... >= a_r >= 0`,
/// obtained by peeling off binomials greedily.
pub fn gotzmann_number<C: Scalar>(p: &HilbertPolynomial<C>) -> Result<u64> {
    const MAX_TERMS: u64 = 10_000_000;
    if p.is_zero() {
        return Err(Error::InvalidHilbertPolynomial("zero polynomial".into()));
    }
    if !p.is_integer_valued() {
        return Err(Error::InvalidHilbertPolynomial(format!("{p} is not integer-valued")));
    }
    let mut rest = p.clone();
    let mut count: u64 = 0;
    loop {
        let Some(a) = rest.degree() else {
            return Ok(count);
        };
        let lc = rest.leading_coefficient().expect("nonzero");
        if !lc.is_positive() {
            return Err(Error::InvalidHilbertPolynomial(format!(
                "{p}: Gotzmann representation does not terminate"
            )));
        }
        if a == 0 {
            let c = lc.to_i64().ok_or_else(|| {
                Error::InvalidHilbertPolynomial(format!("{p}: non-integral constant remainder"))
            })?;
            return Ok(count + c as u64);
        }
        count += 1;
        if count > MAX_TERMS {
            return Err(Error::InvalidHilbertPolynomial(format!("{p}: representation too long")));
        }
        let shift = a as i64 - count as i64 + 1;
        rest = rest.sub(&HilbertPolynomial::binomial(shift, a as u32));
    }
}

/// Smallest `m0 >= 1` with `HF(m) = P(m)` for every `m0 <= m <= m_max`.
pub fn regularity_probe<C: Scalar>(gb: &GroebnerBasis<C>, p: &HilbertPolynomial<C>, m_max: u32) -> Option<u32> {
    let mut found = None;
    for m in (1..=m_max).rev() {
        let hf = C::from_i64(hilbert_function(gb, m) as i64);
        if hf == p.eval_int(m as i64) {
            found = Some(m);
        } else {
            break;
        }
    }
    found
}

/// Hilbert data of a presented ideal, with the function sampled on `1..=m_max`.
#[derive(Clone, Debug)]
pub struct HilbertData<C: Scalar> {
    pub hilbert_function: BTreeMap<u32, u64>,
    pub hilbert_polynomial: HilbertPolynomial<C>,
    pub regularity_bound: Option<u32>,
    pub gotzmann_number: u64,
}

impl<C: Scalar> HilbertData<C> {
    pub fn compute(gb: &GroebnerBasis<C>, p: HilbertPolynomial<C>, m_max: u32) -> Result<Self> {
        let hilbert_function = (1..=m_max).map(|m| (m, hilbert_function(gb, m))).collect();
        let regularity_bound = regularity_probe(gb, &p, m_max);
        let gotzmann_number = gotzmann_number(&p)?;
        Ok(HilbertData {
            hilbert_function,
            hilbert_polynomial: p,
            regularity_bound,
            gotzmann_number,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::groebner_basis;
    use crate::order::MonomialOrder;
    use crate::poly::{Ideal, Ring};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    /// Brute-force oracle: try all non-increasing sequences a_1 >= ... >= a_r
    /// with a_1 <= deg and r <= limit, return the length of one matching P.
    fn gotzmann_by_search(p: &HilbertPolynomial<Q>, limit: usize) -> Option<usize> {
        fn rec(p: &HilbertPolynomial<Q>, seq: &mut Vec<u32>, max_a: u32, limit: usize) -> Option<usize> {
            let sum = seq.iter().enumerate().fold(HilbertPolynomial::<Q>::new(vec![]), |acc, (i, &a)| {
                let b = HilbertPolynomial::binomial(a as i64 - (i as i64 + 1) + 1, a);
                let neg = HilbertPolynomial::new(vec![]).sub(&b);
                acc.sub(&neg)
            });
            if &sum == p {
                return Some(seq.len());
            }
            if seq.len() == limit {
                return None;
            }
            for a in (0..=max_a).rev() {
                seq.push(a);
                if let Some(r) = rec(p, seq, a, limit) {
                    return Some(r);
                }
                seq.pop();
            }
            None
        }
        let d = p.degree()? as u32;
        rec(p, &mut Vec::new(), d, limit)
    }

    #[test]
    fn gotzmann_examples() {
        let six = HilbertPolynomial::linear(q(6), q(-1));
        assert_eq!(gotzmann_number(&six).unwrap(), 14);
        assert_eq!(gotzmann_by_search(&six, 16), Some(14));
        let line = HilbertPolynomial::linear(q(1), q(1));
        assert_eq!(gotzmann_number(&line).unwrap(), 1);
        assert_eq!(gotzmann_by_search(&line, 4), Some(1));
        assert_eq!(gotzmann_number(&HilbertPolynomial::constant(q(1))).unwrap(), 1);
    }

    #[test]
    fn gotzmann_matches_search_on_small_linear_polynomials() {
        for d in 1..4 {
            for c in -1..4 {
                let p = HilbertPolynomial::linear(q(d), q(c));
                let greedy = gotzmann_number(&p);
                let searched = gotzmann_by_search(&p, 10);
                match (greedy, searched) {
                    (Ok(g), Some(s)) => assert_eq!(g as usize, s, "P = {p}"),
                    (Err(_), None) => {}
                    (g, s) => panic!("P = {p}: greedy {g:?} vs search {s:?}"),
                }
            }
        }
    }

    #[test]
    fn gotzmann_rejects_invalid() {
        let half = HilbertPolynomial::linear(Q::new(1.into(), 2.into()), q(0));
        assert!(gotzmann_number(&half).is_err());
        assert!(gotzmann_number(&HilbertPolynomial::constant(q(-2))).is_err());
        assert!(gotzmann_number(&HilbertPolynomial::linear(q(-1), q(5))).is_err());
    }

    #[test]
    fn curve_polynomials() {
        let p = hilbert_polynomial_of_curve::<Q>(6, 2).unwrap();
        assert_eq!(p.to_string(), "6m - 1");
        let line = hilbert_polynomial_of_curve::<Q>(1, 0).unwrap();
        assert_eq!(line.to_string(), "m + 1");
        for b in 2..6i64 {
            let tail = hilbert_polynomial_of_curve::<Q>(4 * b - 2, b).unwrap();
            for m in 1..8i64 {
                assert_eq!(tail.eval_int(m), q((4 * m - 1) * (b - 1) + 2 * m));
            }
        }
        assert!(hilbert_polynomial_of_curve::<Q>(0, 0).is_err());
    }

    #[test]
    fn hypersurface_polynomial() {
        let conic = hilbert_polynomial_of_hypersurface::<Q>(2, 2);
        assert_eq!(conic, HilbertPolynomial::linear(q(2), q(1)));
        let pt = hilbert_polynomial_of_hypersurface::<Q>(1, 1);
        assert_eq!(pt, HilbertPolynomial::constant(q(1)));
    }

    #[test]
    fn hilbert_function_examples() {
        let ring = Ring::indexed("x", 5);
        let bicusp = Ideal::<Q>::from_strings(
            ring,
            &["x3^2 - x1*x4", "x1*x3 - x0*x4", "x2^2 - x0*x4", "x1^2 - x0*x3"],
        )
        .unwrap();
        let gb = groebner_basis(&bicusp, &MonomialOrder::GradedRevLex).unwrap();
        assert_eq!(hilbert_function(&gb, 2), 11);
        let p = HilbertPolynomial::linear(q(6), q(-1));
        assert_eq!(regularity_probe(&gb, &p, 6), Some(1));

        let p2 = Ring::indexed("x", 3);
        let zero = Ideal::<Q>::zero(p2.clone());
        let gbz = groebner_basis(&zero, &MonomialOrder::GradedRevLex).unwrap();
        assert_eq!(hilbert_function(&gbz, 3), 10);

        let conic = Ideal::<Q>::from_strings(p2, &["x0^2"]).unwrap();
        let gbc = groebner_basis(&conic, &MonomialOrder::GradedRevLex).unwrap();
        assert_eq!(hilbert_function(&gbc, 4), 9);
        let wrong = HilbertPolynomial::linear(q(3), q(1));
        assert_eq!(regularity_probe(&gbc, &wrong, 5), None);

        let p1 = Ideal::<Q>::zero(Ring::indexed("x", 2));
        let gb1 = groebner_basis(&p1, &MonomialOrder::GradedLex).unwrap();
        assert_eq!(regularity_probe(&gb1, &HilbertPolynomial::linear(q(1), q(1)), 3), Some(1));
    }
}
