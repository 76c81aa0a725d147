//! Closed-form divisor arithmetic in the span of `lambda` and `delta`, the
//! cuspidal-tail index, and weight charts of deformation spaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `lambda_coeff * lambda + delta_coeff * delta`, compared up to positive scaling.
#[derive(Clone, Debug)]
pub struct DivisorClass<C: Scalar> {
    pub lambda_coeff: C,
    pub delta_coeff: C,
}

impl<C: Scalar> DivisorClass<C> {
    pub fn new(lambda_coeff: C, delta_coeff: C) -> Self {
        DivisorClass {
            lambda_coeff,
            delta_coeff,
        }
    }

    /// `lambda / -delta`, undefined when `delta_coeff` is zero.
    pub fn slope(&self) -> Option<C> {
        if self.delta_coeff.is_zero() {
            None
        } else {
            Some(self.lambda_coeff.clone() / -self.delta_coeff.clone())
        }
    }

    /// Rescaled so that the delta coefficient is -1 (when nonzero).
    pub fn normalized(&self) -> Self {
        if self.delta_coeff.is_zero() {
            return self.clone();
        }
        let s = -self.delta_coeff.clone();
        let s = if s.is_negative() { -s } else { s };
        DivisorClass::new(self.lambda_coeff.clone() / s.clone(), self.delta_coeff.clone() / s)
    }

    /// `alpha` with the class proportional to `13 lambda - (2 - alpha) delta`.
    pub fn alpha(&self) -> Option<C> {
        if self.lambda_coeff.is_zero() {
            return None;
        }
        let mut t = C::from_i64(13);
        t *= &self.delta_coeff;
        Some(C::from_i64(2) + t / self.lambda_coeff.clone())
    }
}

impl<C: Scalar> PartialEq for DivisorClass<C> {
    fn eq(&self, other: &Self) -> bool {
        let cross = self.lambda_coeff.clone() * other.delta_coeff.clone()
            == self.delta_coeff.clone() * other.lambda_coeff.clone();
        let same_side = |a: &C, b: &C| a.signum() == b.signum();
        cross
            && same_side(&self.lambda_coeff, &other.lambda_coeff)
            && same_side(&self.delta_coeff, &other.delta_coeff)
    }
}

impl<C: Scalar> Eq for DivisorClass<C> {}

impl<C: Scalar> fmt::Display for DivisorClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.delta_coeff;
        if d.is_negative() {
            write!(f, "{} lambda - {} delta", self.lambda_coeff, -d.clone())
        } else {
            write!(f, "{} lambda + {} delta", self.lambda_coeff, d)
        }
    }
}

fn half<C: Scalar>(x: C) -> C {
    x / C::from_i64(2)
}

/// Class of the polarization on the Hilbert scheme of `n`-canonical curves
/// of genus `g` induced by the `m`-th Hilbert point, up to positive multiple.
pub fn linearization_class<C: Scalar>(m: &C, n: u32, g: i64) -> Result<DivisorClass<C>> {
    if !m.is_positive() {
        return Err(Error::InvalidArgument(format!("m must be positive, got {m}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let gq = C::from_i64(g);
    if n == 1 {
        // lambda + (m-1)[((4g+2)m - g + 1) lambda - (g m / 2) delta]
        let m1 = m.clone() - C::one();
        let inner = C::from_i64(4 * g + 2) * m.clone() - gq.clone() + C::one();
        let lambda = C::one() + m1.clone() * inner;
        let delta = -(m1 * half(gq * m.clone()));
        return Ok(DivisorClass::new(lambda, delta));
    }
    let nn = C::from_i64(n as i64);
    let n2 = nn.clone() * nn.clone();
    // (6 m n^2 - 2 m n - 2 n + 1) lambda - (m n^2 / 2) delta
    let lambda = C::from_i64(6) * m.clone() * n2.clone() - C::from_i64(2) * m.clone() * nn.clone()
        - C::from_i64(2) * nn
        + C::one();
    let delta = -half(m.clone() * n2);
    Ok(DivisorClass::new(lambda, delta))
}

/// Polarization on the Chow variety of `n`-canonical curves of genus `g`.
pub fn chow_class<C: Scalar>(n: u32, g: i64) -> Result<DivisorClass<C>> {
    match n {
        0 => Err(Error::InvalidArgument("n must be at least 1".into())),
        1 => Ok(DivisorClass::new(C::from_i64(4 * g + 2), -half(C::from_i64(g)))),
        _ => Ok(DivisorClass::new(
            C::from_i64(6 * n as i64 - 2),
            -half(C::from_i64(n as i64)),
        )),
    }
}

/// `alpha(m) = (14m - 6) / (20m - 3)`.
pub fn alpha_of_m<C: Scalar>(m: &C) -> Result<C> {
    let den = C::from_i64(20) * m.clone() - C::from_i64(3);
    if den.is_zero() {
        return Err(Error::Pole("m = 3/20".into()));
    }
    Ok((C::from_i64(14) * m.clone() - C::from_i64(6)) / den)
}

/// `m(alpha) = 3(2 - alpha) / (2(7 - 10 alpha))`, inverse of [`alpha_of_m`].
pub fn m_of_alpha<C: Scalar>(alpha: &C) -> Result<C> {
    let den = C::from_i64(2) * (C::from_i64(7) - C::from_i64(10) * alpha.clone());
    if den.is_zero() {
        return Err(Error::Pole("alpha = 7/10".into()));
    }
    Ok(C::from_i64(3) * (C::from_i64(2) - alpha.clone()) / den)
}

/// Genus-`g` curve `D + R` where the tail `R` has genus `b` and carries an
/// `A_{2b}` cusp; `m` is the Hilbert point degree of the bicanonical model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailParams<C: Scalar> {
    pub g: i64,
    pub b: i64,
    pub m: C,
}

impl<C: Scalar> TailParams<C> {
    pub fn new(g: i64, b: i64, m: C) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidArgument(format!("tail genus must be at least 2, got {b}")));
        }
        if g <= b {
            return Err(Error::InvalidArgument(format!("need g > b, got g = {g}, b = {b}")));
        }
        Ok(TailParams { g, b, m })
    }
}

/// `(1/3)(m - 1)((4b^2 - 8b + 2) m - 3b^2)`; depends on `b` and `m` only.
pub fn tail_index_closed_form<C: Scalar>(b: i64, m: &C) -> C {
    let lin = C::from_i64(4 * b * b - 8 * b + 2) * m.clone() - C::from_i64(3 * b * b);
    (m.clone() - C::one()) * lin / C::from_i64(3)
}

/// Weight of the subgroup on the genus `g - b` component:
/// `(4b - 2) m ((4m - 1)(g - b - 1) + 2m - 1)`.
pub fn tail_complement_weight<C: Scalar>(p: &TailParams<C>) -> C {
    let m = &p.m;
    let inner = (C::from_i64(4) * m.clone() - C::one()) * C::from_i64(p.g - p.b - 1) + C::from_i64(2) * m.clone()
        - C::one();
    C::from_i64(4 * p.b - 2) * m.clone() * inner
}

/// Index assembled as `m P(m) r / (N + 1) - w_R - w_D` from a computed tail
/// weight sum `w_r`. Errors if it disagrees with [`tail_index_closed_form`].
pub fn tail_index_assembled<C: Scalar>(p: &TailParams<C>, w_r: i64) -> Result<C> {
    if !p.m.is_integral() || !p.m.is_positive() {
        return Err(Error::NonIntegerDegree(p.m.to_string()));
    }
    let (g, b) = (p.g, p.b);
    let r = (4 * b - 1) * (4 * b - 2) / 2 - b * b + (4 * b - 2) * (3 * g - 3 * b - 2);
    let n1 = 3 * g - 3;
    let pm = C::from_i64(4 * g - 4) * p.m.clone() + C::from_i64(1 - g);
    let average = p.m.clone() * pm * C::from_i64(r) / C::from_i64(n1);
    let value = average - C::from_i64(w_r) - tail_complement_weight(p);
    let expected = tail_index_closed_form(b, &p.m);
    if value != expected {
        return Err(Error::Inconsistent(format!(
            "assembled tail index {value} differs from closed form {expected} (g = {g}, b = {b}, m = {})",
            p.m
        )));
    }
    Ok(value)
}

/// Characters of `lambda`, `lambda_2`, `delta` and `K` at a fixed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub chi_lambda: i64,
    pub chi_lambda2: i64,
    pub chi_delta: i64,
    pub chi_k: i64,
}

impl CharacterTable {
    /// Enforces `K = 13 lambda - 2 delta` and `lambda_2 = 13 lambda - delta`.
    pub fn new(chi_lambda: i64, chi_lambda2: i64, chi_delta: i64, chi_k: i64) -> Result<Self> {
        if chi_k != 13 * chi_lambda - 2 * chi_delta {
            return Err(Error::Inconsistent(format!(
                "chi_K = {chi_k} but 13 chi_lambda - 2 chi_delta = {}",
                13 * chi_lambda - 2 * chi_delta
            )));
        }
        if chi_lambda2 != 13 * chi_lambda - chi_delta {
            return Err(Error::Inconsistent(format!(
                "chi_lambda2 = {chi_lambda2} but 13 chi_lambda - chi_delta = {}",
                13 * chi_lambda - chi_delta
            )));
        }
        Ok(CharacterTable {
            chi_lambda,
            chi_lambda2,
            chi_delta,
            chi_k,
        })
    }

    pub fn as_tuple(&self) -> (i64, i64, i64, i64) {
        (self.chi_lambda, self.chi_lambda2, self.chi_delta, self.chi_k)
    }
}

/// Characters at a curve with a rational `A_{2b}`-cuspidal tail of genus `b`.
pub fn tail_characters(b: i64) -> Result<CharacterTable> {
    if b < 2 {
        return Err(Error::InvalidArgument(format!("tail genus must be at least 2, got {b}")));
    }
    CharacterTable::new(b * b, 5 * b * b - 4 * b + 1, 8 * b * b + 4 * b - 1, -3 * b * b - 8 * b + 2)
}

/// Coordinates of a deformation space with the weights of a fixed subgroup.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeformationChart {
    pub coordinates: Vec<(String, i64)>,
}

impl DeformationChart {
    pub fn new(coordinates: Vec<(String, i64)>) -> Self {
        DeformationChart { coordinates }
    }

    /// Lines `coord <name> weight <int>`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut coordinates = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let column = raw.len() - raw.trim_start().len() + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["coord", name, "weight", w] => {
                    let w = w
                        .parse::<i64>()
                        .map_err(|_| Error::parse(i + 1, column, format!("bad weight `{w}`")))?;
                    if coordinates.iter().any(|(n, _)| n == name) {
                        return Err(Error::parse(i + 1, column, format!("duplicate coordinate `{name}`")));
                    }
                    coordinates.push((name.to_string(), w));
                }
                _ => return Err(Error::parse(i + 1, column, "expected `coord <name> weight <int>`")),
            }
        }
        Ok(DeformationChart { coordinates })
    }

    /// Versal deformation of a tacnode with an attached conic: `s_i` of weight
    /// `i - 4` and node smoothings `n_1, n_2` of weight 1.
    pub fn tacnode() -> Self {
        let mut c: Vec<(String, i64)> = (0..3).map(|i| (format!("s{i}"), i - 4)).collect();
        c.push(("n1".into(), 1));
        c.push(("n2".into(), 1));
        DeformationChart::new(c)
    }

    /// `A_{2b}` cusp coordinates `c_i` of weight `4b + 2 - 2i` and a node of weight -1.
    pub fn cusp(b: i64) -> Self {
        let mut c: Vec<(String, i64)> = (0..2 * b).map(|i| (format!("c{i}"), 4 * b + 2 - 2 * i)).collect();
        c.push(("node".into(), -1));
        DeformationChart::new(c)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChamberDecomposition {
    /// The complement of the negative chamber is cut out by these coordinates.
    pub negative_chamber_complement: Vec<String>,
    /// The complement of the positive chamber is cut out by these coordinates.
    pub positive_chamber_complement: Vec<String>,
    /// Non-negative weight: directions flowing to the fixed point as `t -> 0`.
    pub attracted: Vec<String>,
    /// Zero weight, reported separately from the strictly attracted directions.
    pub fixed_tangent: Vec<String>,
    pub repelled: Vec<String>,
}

pub fn chamber_decomposition(chart: &DeformationChart) -> ChamberDecomposition {
    let pick = |f: fn(i64) -> bool| -> Vec<String> {
        chart
            .coordinates
            .iter()
            .filter(|(_, w)| f(*w))
            .map(|(n, _)| n.clone())
            .collect()
    };
    ChamberDecomposition {
        negative_chamber_complement: pick(|w| w < 0),
        positive_chamber_complement: pick(|w| w > 0),
        attracted: pick(|w| w >= 0),
        fixed_tangent: pick(|w| w == 0),
        repelled: pick(|w| w < 0),
    }
}
