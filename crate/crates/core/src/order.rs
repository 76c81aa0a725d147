//! Term orders.
//!
//! Every order is realised as a sort key: a vector of integers compared
//! lexicographically, larger key meaning larger monomial. This keeps
//! polynomial storage order-agnostic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, OneParamSubgroup};

/// Unweighted graded order used to break ties in a weighted order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum TieBreak {
    #[default]
    GradedLex,
    GradedRevLex,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Degree, then lexicographic with `x0 > x1 > ...`.
    GradedLex,
    /// Degree, then reverse lexicographic.
    GradedRevLex,
    /// Degree, then `rho`-weight (heavier is larger), then the tie-break.
    /// Leading terms under this order carry the largest weight available.
    WeightedGraded {
        rho: OneParamSubgroup,
        tie_break: TieBreak,
    },
    /// Product order eliminating the first `block` variables: graded
    /// reverse lex on that block, then graded reverse lex on the rest.
    /// Not graded; only used internally for elimination.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn weighted(rho: OneParamSubgroup) -> Self {
        MonomialOrder::WeightedGraded {
            rho,
            tie_break: TieBreak::GradedLex,
        }
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, MonomialOrder::Elimination { .. })
    }

    /// Checks that the order makes sense in a ring with `nvars` variables.
    pub fn check(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::WeightedGraded { rho, .. } => rho.check_len(nvars),
            MonomialOrder::Elimination { block } if *block > nvars => Err(Error::InvalidArgument(
                format!("cannot eliminate {block} of {nvars} variables"),
            )),
            _ => Ok(()),
        }
    }

    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        let mut key = Vec::with_capacity(e.len() + 3);
        match self {
            MonomialOrder::GradedLex => {
                key.push(m.degree() as i64);
                lex_tail(e, &mut key);
            }
            MonomialOrder::GradedRevLex => {
                key.push(m.degree() as i64);
                revlex_tail(e, &mut key);
            }
            MonomialOrder::WeightedGraded { rho, tie_break } => {
                key.push(m.degree() as i64);
                key.push(m.dot(rho.weights()));
                match tie_break {
                    TieBreak::GradedLex => lex_tail(e, &mut key),
                    TieBreak::GradedRevLex => revlex_tail(e, &mut key),
                }
            }
            MonomialOrder::Elimination { block } => {
                let (head, rest) = e.split_at(*block);
                key.push(head.iter().sum::<u32>() as i64);
                revlex_tail(head, &mut key);
                key.push(rest.iter().sum::<u32>() as i64);
                revlex_tail(rest, &mut key);
            }
        }
        key
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Parses `grevlex`, `glex` or `weighted:<r0,...,rN>:<glex|grevlex>`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "grevlex" => return Ok(MonomialOrder::GradedRevLex),
            "glex" => return Ok(MonomialOrder::GradedLex),
            _ => {}
        }
        let bad = || Error::parse(1, 1, format!("unknown monomial order `{text}`"));
        let rest = text.strip_prefix("weighted:").ok_or_else(bad)?;
        let (weights, tie) = match rest.rsplit_once(':') {
            Some((w, t)) => (w, t),
            None => (rest, "glex"),
        };
        let tie_break = match tie {
            "glex" => TieBreak::GradedLex,
            "grevlex" => TieBreak::GradedRevLex,
            _ => return Err(bad()),
        };
        Ok(MonomialOrder::WeightedGraded {
            rho: OneParamSubgroup::parse(weights)?,
            tie_break,
        })
    }
}

fn lex_tail(e: &[u32], key: &mut Vec<i64>) {
    key.extend(e.iter().map(|&x| x as i64));
}

fn revlex_tail(e: &[u32], key: &mut Vec<i64>) {
    key.extend(e.iter().rev().map(|&x| -(x as i64)));
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GradedLex => write!(f, "glex"),
            MonomialOrder::GradedRevLex => write!(f, "grevlex"),
            MonomialOrder::WeightedGraded { rho, tie_break } => {
                let w: Vec<String> = rho.weights().iter().map(|x| x.to_string()).collect();
                let t = match tie_break {
                    TieBreak::GradedLex => "glex",
                    TieBreak::GradedRevLex => "grevlex",
                };
                write!(f, "weighted:{}:{}", w.join(","), t)
            }
            MonomialOrder::Elimination { block } => write!(f, "elim:{block}"),
        }
    }
}
