//! Monomial curves and the catalogue of named examples.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_unchecked};
use crate::hilbert::{hilbert_polynomial_of_curve, hilbert_polynomial_of_hypersurface, HilbertPolynomial};
use crate::order::MonomialOrder;
use crate::poly::{Ideal, Monomial, OneParamSubgroup, Polynomial, Ring};
use crate::scalar::Scalar;
use crate::stability::KempfHypothesis;

/// The curve `[s:t] -> [s^a_0 t^b_0 : ... : s^a_N t^b_N]` with `a_i + b_i = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCurveSpec {
    d: u32,
    pairs: Vec<(u32, u32)>,
    labels: Vec<String>,
}

impl MonomialCurveSpec {
    pub fn new(d: u32, pairs: Vec<(u32, u32)>) -> Result<Self> {
        let labels = (0..pairs.len()).map(|i| format!("x{i}")).collect();
        Self::with_labels(d, pairs, labels)
    }

    pub fn with_labels(d: u32, pairs: Vec<(u32, u32)>, labels: Vec<String>) -> Result<Self> {
        if d == 0 {
            return Err(Error::DegenerateSpec("degree must be positive".into()));
        }
        if let Some(&(a, b)) = pairs.iter().find(|(a, b)| a + b != d) {
            return Err(Error::DegenerateSpec(format!("pair ({a}, {b}) does not have degree {d}")));
        }
        let distinct: BTreeSet<_> = pairs.iter().collect();
        if distinct.len() != pairs.len() {
            return Err(Error::DegenerateSpec("repeated exponent pair".into()));
        }
        if pairs.len() < 2 {
            return Err(Error::DegenerateSpec("need at least two distinct pairs".into()));
        }
        if labels.len() != pairs.len() {
            return Err(Error::LengthMismatch {
                expected: pairs.len(),
                found: labels.len(),
            });
        }
        Ok(MonomialCurveSpec { d, pairs, labels })
    }

    /// Reads `d: <int>` followed by `pair: <a> <b>` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut d: Option<u32> = None;
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let column = raw.len() - raw.trim_start().len() + 1;
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, column, "expected `d:` or `pair:`"))?;
            let nums: Vec<u32> = value
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line_no, column + key.len() + 1, "expected non-negative integers"))?;
            match (key.trim(), nums.as_slice()) {
                ("d", [v]) if d.is_none() => d = Some(*v),
                ("d", [_]) => return Err(Error::parse(line_no, column, "duplicate `d:` line")),
                ("pair", [a, b]) => pairs.push((*a, *b)),
                _ => return Err(Error::parse(line_no, column, format!("malformed `{}` line", key.trim()))),
            }
        }
        let d = d.ok_or_else(|| Error::parse(1, 1, "missing `d:` line"))?;
        Self::new(d, pairs)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn nvars(&self) -> usize {
        self.pairs.len()
    }

    /// Exponent of `t` in each parameterizing monomial.
    pub fn t_exponents(&self) -> Vec<i64> {
        self.pairs.iter().map(|&(_, b)| b as i64).collect()
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::new(self.labels.clone())
    }

    /// Pullback of a monomial in the `x` variables to `(s, t)` exponents.
    pub fn pullback(&self, x: &Monomial) -> (u64, u64) {
        x.exponents().iter().zip(&self.pairs).fold((0, 0), |(s, t), (&e, &(a, b))| {
            (s + e as u64 * a as u64, t + e as u64 * b as u64)
        })
    }
}

/// Homogeneous ideal of the curve, by eliminating `s, t` from `x_i - s^a_i t^b_i`.
pub fn lattice_ideal<C: Scalar>(spec: &MonomialCurveSpec) -> Result<Ideal<C>> {
    let n = spec.nvars();
    let total = n + 2;
    let gens: Vec<Polynomial<C>> = spec
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let mut e = vec![0u32; total];
            e[0] = a;
            e[1] = b;
            &Polynomial::var(total, i + 2) - &Polynomial::monomial(Monomial::new(e))
        })
        .collect();
    let gb = buchberger_unchecked(total, &gens, &MonomialOrder::Elimination { block: 2 });
    let eliminated: Vec<Polynomial<C>> = gb
        .elements()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponent(0) == 0 && m.exponent(1) == 0))
        .map(|p| {
            let terms = p
                .terms()
                .map(|(m, c)| (Monomial::new(m.exponents()[2..].to_vec()), c.clone()));
            Polynomial::from_terms(n, terms)
        })
        .collect();
    let reduced = buchberger(n, &eliminated, &MonomialOrder::GradedRevLex)?;
    Ideal::new(spec.ring()?, reduced.elements().to_vec())
}

/// Same ideal, compared by mutual containment of reduced bases.
pub fn ideals_equal<C: Scalar>(a: &Ideal<C>, b: &Ideal<C>) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Ok(false);
    }
    let ga = buchberger(a.nvars(), a.generators(), &MonomialOrder::GradedRevLex)?;
    let gb = buchberger(b.nvars(), b.generators(), &MonomialOrder::GradedRevLex)?;
    Ok(a.generators().iter().all(|p| gb.contains(p)) && b.generators().iter().all(|p| ga.contains(p)))
}

/// Degree-`(4b-2)` tail of genus `b` with its distinguished subgroup, whose
/// weight on each variable is the `t`-exponent of its monomial.
pub fn tail_curve_spec(b: u32) -> Result<(MonomialCurveSpec, OneParamSubgroup)> {
    if b < 2 {
        return Err(Error::InvalidArgument(format!("tail genus must be at least 2, got {b}")));
    }
    let d = 4 * b - 2;
    let ts: Vec<u32> = (0..=b).map(|k| 2 * k).chain(2 * b + 1..=d).collect();
    let spec = MonomialCurveSpec::new(d, ts.iter().map(|&i| (d - i, i)).collect())?;
    let rho = OneParamSubgroup::new(spec.t_exponents());
    Ok((spec, rho))
}

/// `w_R(m) = (8b^2 - 8b + 2) m^2 + (2b - 1) m - b^2`.
pub fn tail_weight_sum_formula(b: i64, m: i64) -> i64 {
    (8 * b * b - 8 * b + 2) * m * m + (2 * b - 1) * m - b * b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Torus semistable at this degree.
    Semistable { m: u32 },
    /// Standard-monomial weight sum under the distinguished subgroup is `w_R(m)`.
    TailWeightSum { b: u32 },
    /// Unstable for every `m` above `bound`.
    UnstableAbove { bound: u64 },
}

impl std::fmt::Display for Expectation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expectation::Semistable { m } => write!(f, "{m}-semistable"),
            Expectation::TailWeightSum { b } => {
                let b = *b as i64;
                write!(f, "w_R(m) = {}m^2 + {}m - {}", 8 * b * b - 8 * b + 2, 2 * b - 1, b * b)
            }
            Expectation::UnstableAbove { bound } => write!(f, "unstable for m > {bound}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedExample<C: Scalar> {
    pub name: String,
    pub ideal: Ideal<C>,
    pub hilbert_polynomial: HilbertPolynomial<C>,
    pub kempf: Option<KempfHypothesis>,
    pub distinguished_rho: Option<OneParamSubgroup>,
    pub spec: Option<MonomialCurveSpec>,
    pub expectation: Expectation,
}

pub const EXAMPLE_NAMES: [&str; 3] = ["bicuspidal-g2-tricanonical", "a2b-tail:<b>", "thickened-line:<N>:<r>"];

/// Generators of the tri-canonical genus-2 curve with two cusps, image of
/// `[s^6 : s^4 t^2 : s^3 t^3 : s^2 t^4 : t^6]`.
pub const BICUSPIDAL_GENERATORS: [&str; 4] = ["x3^2 - x1*x4", "x1*x3 - x0*x4", "x2^2 - x0*x4", "x1^2 - x0*x3"];

pub fn bicuspidal_spec() -> MonomialCurveSpec {
    MonomialCurveSpec::new(6, vec![(6, 0), (4, 2), (3, 3), (2, 4), (0, 6)]).expect("valid spec")
}

fn parse_params(name: &str, rest: &str, count: usize) -> Result<Vec<u32>> {
    let v: Vec<u32> = rest
        .split(':')
        .map(|t| t.parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::UnknownExample(name.into()))?;
    if v.len() != count {
        return Err(Error::UnknownExample(name.into()));
    }
    Ok(v)
}

pub fn named_example<C: Scalar>(name: &str) -> Result<NamedExample<C>> {
    let name = name.trim();
    if name == "bicuspidal-g2-tricanonical" {
        let ideal = Ideal::from_strings(Ring::indexed("x", 5), &BICUSPIDAL_GENERATORS)?;
        return Ok(NamedExample {
            name: name.into(),
            ideal,
            hilbert_polynomial: hilbert_polynomial_of_curve(6, 2)?,
            kempf: Some(KempfHypothesis::new(vec![6, 4, 3, 2, 0])),
            distinguished_rho: Some(OneParamSubgroup::new(vec![6, 4, 3, 2, 0])),
            spec: Some(bicuspidal_spec()),
            expectation: Expectation::Semistable { m: 2 },
        });
    }
    if let Some(rest) = name.strip_prefix("a2b-tail:") {
        let b = parse_params(name, rest, 1)?[0];
        let (spec, rho) = tail_curve_spec(b).map_err(|_| Error::UnknownExample(name.into()))?;
        let ideal = lattice_ideal(&spec)?;
        return Ok(NamedExample {
            name: name.into(),
            ideal,
            hilbert_polynomial: hilbert_polynomial_of_curve(4 * b as i64 - 2, b as i64)?,
            kempf: None,
            distinguished_rho: Some(rho),
            spec: Some(spec),
            expectation: Expectation::TailWeightSum { b },
        });
    }
    if let Some(rest) = name.strip_prefix("thickened-line:") {
        let p = parse_params(name, rest, 2)?;
        let (big_n, r) = (p[0], p[1]);
        if big_n == 0 || r == 0 {
            return Err(Error::UnknownExample(name.into()));
        }
        let n = big_n as usize + 1;
        let mut e = vec![0u32; n];
        e[0] = r;
        let ideal = Ideal::new(Ring::indexed("x", n), vec![Polynomial::monomial(Monomial::new(e))])?;
        let mut w = vec![1i64; n];
        w[0] = 0;
        return Ok(NamedExample {
            name: name.into(),
            ideal,
            hilbert_polynomial: hilbert_polynomial_of_hypersurface(big_n, r),
            kempf: None,
            distinguished_rho: Some(OneParamSubgroup::new(w)),
            spec: None,
            expectation: Expectation::UnstableAbove {
                bound: n as u64 * (r as u64 - 1),
            },
        });
    }
    Err(Error::UnknownExample(name.into()))
}
