//! Monomials, polynomials, one-parameter subgroups and the polynomial text format.

mod monomial;
mod parse;
mod polynomial;
mod subgroup;

pub use monomial::{count_monomials, monomials_of_degree, Monomial};
pub use parse::Ring;
pub use polynomial::Polynomial;
pub use subgroup::OneParamSubgroup;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Weight of `m` under `rho`.
pub fn weight_of(m: &Monomial, rho: &OneParamSubgroup) -> Result<i64> {
    m.weight(rho)
}

/// A homogeneous ideal presented by generators in a named ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<C: Scalar> {
    ring: Ring,
    generators: Vec<Polynomial<C>>,
}

impl<C: Scalar> Ideal<C> {
    pub fn new(ring: Ring, generators: Vec<Polynomial<C>>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    found: g.nvars(),
                });
            }
        }
        Ok(Ideal { ring, generators })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn from_strings(ring: Ring, gens: &[&str]) -> Result<Self> {
        let generators = gens
            .iter()
            .enumerate()
            .map(|(i, g)| ring.parse_at_line(g, i + 1))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, generators)
    }

    /// Reads the ideal file format: a `vars:` line listing variable names,
    /// then one generator per line. `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut ring: Option<Ring> = None;
        let mut generators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("vars:") {
                if ring.is_some() {
                    return Err(Error::parse(line, 1, "duplicate `vars:` line"));
                }
                let names: Vec<&str> = rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
                ring = Some(Ring::new(names).map_err(|e| Error::parse(line, 1, e.to_string()))?);
                continue;
            }
            let r = ring
                .as_ref()
                .ok_or_else(|| Error::parse(line, 1, "generator before the `vars:` line"))?;
            // Column numbers refer to the raw line.
            let offset = raw.len() - raw.trim_start().len();
            let p = r.parse_at_line(content, line).map_err(|e| match e {
                Error::Parse { line, column, message } => Error::Parse {
                    line,
                    column: column + offset,
                    message,
                },
                other => other,
            })?;
            generators.push(p);
        }
        let ring = ring.ok_or_else(|| Error::parse(1, 1, "missing `vars:` line"))?;
        Ideal::new(ring, generators)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }
}
