use std::fmt;

use crate::error::{Error, Result};

/// A diagonal one-parameter subgroup, given by its integer weights
/// `(r_0, ..., r_N)` on the coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OneParamSubgroup {
    weights: Vec<i64>,
}

impl OneParamSubgroup {
    pub fn new(weights: Vec<i64>) -> Self {
        OneParamSubgroup { weights }
    }

    pub fn trivial(len: usize) -> Self {
        OneParamSubgroup {
            weights: vec![0; len],
        }
    }

    /// Parses a comma separated integer list such as `6,4,3,2,0`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut weights = Vec::new();
        let mut column = 1;
        for part in text.split(',') {
            let trimmed = part.trim();
            let w = trimmed.parse::<i64>().map_err(|_| {
                Error::parse(1, column, format!("expected an integer weight, found `{trimmed}`"))
            })?;
            weights.push(w);
            column += part.len() + 1;
        }
        Ok(OneParamSubgroup { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// All weights equal: acts by scalars, hence trivially on projective points.
    pub fn acts_by_scalars(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }

    pub fn translate(&self, c: i64) -> Self {
        OneParamSubgroup {
            weights: self.weights.iter().map(|w| w + c).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        OneParamSubgroup {
            weights: self.weights.iter().map(|w| w * k).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        self.scale(-1)
    }

    pub fn check_len(&self, nvars: usize) -> Result<()> {
        if self.len() != nvars {
            return Err(Error::LengthMismatch {
                expected: nvars,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let rho = OneParamSubgroup::parse("6, 4,3,2,0").unwrap();
        assert_eq!(rho.weights(), &[6, 4, 3, 2, 0]);
        assert_eq!(rho.to_string(), "(6,4,3,2,0)");
        assert_eq!(rho.total(), 15);
        assert!(OneParamSubgroup::parse("1,x").is_err());
        assert!(OneParamSubgroup::new(vec![3, 3, 3]).acts_by_scalars());
        assert!(!rho.acts_by_scalars());
    }
}
