//! Exact computations for Hilbert stability of projective curves: Gröbner
//! bases, initial ideals, state polytopes, Hilbert–Mumford indices, and the
//! closed-form divisor calculus around them.
//!
//! Everything is generic over an exact [`Scalar`] field; [`Q`] (arbitrary
//! precision rationals) is the intended coefficient type.

pub mod curves;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod lp;
pub mod moduli;
pub mod order;
pub mod poly;
pub mod scalar;
pub mod stability;

pub use error::{Error, Result};
pub use order::{MonomialOrder, TieBreak};
pub use poly::{Monomial, OneParamSubgroup, Ring};
pub use scalar::Scalar;

/// Arbitrary precision rationals.
pub type Q = num_rational::BigRational;
/// 64-bit rationals; fine for small examples, panics on overflow.
pub type Q64 = num_rational::Rational64;

pub type QPolynomial = poly::Polynomial<Q>;
pub type QIdeal = poly::Ideal<Q>;
pub type QGroebnerBasis = groebner::GroebnerBasis<Q>;
pub type QHilbertPolynomial = hilbert::HilbertPolynomial<Q>;
pub type QHilbertMumfordReport = stability::HilbertMumfordReport<Q>;
pub type QSemistabilityReport = stability::SemistabilityReport<Q>;
pub type QDivisorClass = moduli::DivisorClass<Q>;
pub type QNamedExample = curves::NamedExample<Q>;
