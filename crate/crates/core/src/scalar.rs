//! Exact coefficient fields.
//!
//! Every algorithm in the crate is written against [`Scalar`], an ordered
//! field with exact arithmetic. [`BigRational`] is the default everywhere;
//! [`Rational64`] is available for small inputs where overflow is known not
//! to occur (it panics on overflow rather than rounding).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// An exact ordered field usable as polynomial coefficients and LP scalars.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Num
    + Signed
    + Send
    + Sync
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `None` when the value does not fit the representation.
    fn from_rational(r: &BigRational) -> Option<Self>;

    fn to_rational(&self) -> BigRational;

    fn is_integral(&self) -> bool;

    fn from_bigint(v: &BigInt) -> Option<Self> {
        Self::from_rational(&BigRational::from_integer(v.clone()))
    }

    fn to_i64(&self) -> Option<i64> {
        let r = self.to_rational();
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        let n = r.numer().to_i64()?;
        let d = r.denom().to_i64()?;
        Some(Rational64::new(n, d))
    }

    fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Parses `p` or `p/q` into a scalar.
pub fn parse_scalar<C: Scalar>(text: &str) -> Option<C> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num = BigInt::parse_bytes(num.as_bytes(), 10)?;
    let den = match den {
        Some(d) => BigInt::parse_bytes(d.as_bytes(), 10)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    C::from_rational(&BigRational::new(num, den))
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<C: Scalar>(values: &[C]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.to_rational().denom()))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer_vector<C: Scalar>(values: &[C]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| {
            let r = v.to_rational() * BigRational::from_integer(den.clone());
            r.to_integer()
        })
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &g).collect()
    }
}
