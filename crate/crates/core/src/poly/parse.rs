//! The textual polynomial language.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := [coef '*'] factor ('*' factor)*  |  coef
//! factor := var ['^' nat]
//! coef   := int ['/' nat]
//! ```
//!
//! Whitespace is insignificant. A leading sign on the first term is accepted.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// Variable names of a polynomial ring, in coordinate order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidArgument(format!("`{n}` is not a valid variable name")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Ring { names, index })
    }

    /// `prefix0, prefix1, ..., prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Ring::new((0..n).map(|i| format!("{prefix}{i}"))).expect("generated names are valid")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn parse<C: Scalar>(&self, text: &str) -> Result<Polynomial<C>> {
        self.parse_at_line(text, 1)
    }

    pub(crate) fn parse_at_line<C: Scalar>(&self, text: &str, line: usize) -> Result<Polynomial<C>> {
        let tokens = tokenize(text, line)?;
        Parser {
            ring: self,
            tokens,
            pos: 0,
            line,
            end_column: text.chars().count() + 1,
        }
        .poly()
    }

    /// Canonical text form: terms in descending graded-lex order.
    pub fn format<C: Scalar>(&self, p: &Polynomial<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &C)> = p.terms().collect();
        terms.sort_by(|a, b| {
            b.0.degree()
                .cmp(&a.0.degree())
                .then_with(|| b.0.exponents().cmp(a.0.exponents()))
        });
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let r = c.to_rational();
            let negative = r.is_negative();
            let abs = r.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let factors = self.format_monomial(m);
            if factors.is_empty() {
                write_rational(&mut out, &abs);
            } else {
                if !abs.is_one() {
                    write_rational(&mut out, &abs);
                    out.push('*');
                }
                out.push_str(&factors);
            }
        }
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }
}

fn write_rational(out: &mut String, r: &BigRational) {
    if r.is_integer() {
        let _ = write!(out, "{}", r.numer());
    } else {
        let _ = write!(out, "{}/{}", r.numer(), r.denom());
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Num(digits.parse().expect("ascii digits")), column));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), column));
                continue;
            }
            other => return Err(Error::parse(line, column, format!("unexpected character `{other}`"))),
        };
        out.push((tok, column));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_column)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), message)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn poly<C: Scalar>(mut self) -> Result<Polynomial<C>> {
        let n = self.ring.nvars();
        let mut out = Polynomial::zero(n);
        let mut negative = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            let c = C::from_rational(&c)
                .ok_or_else(|| self.err("coefficient does not fit the coefficient field"))?;
            out.add_term(m, c);
            match self.bump() {
                None => return Ok(out),
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.err("expected `+`, `-` or end of input"));
                }
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let n = self.ring.nvars();
        let mut exps = vec![0u32; n];
        let coef = match self.peek() {
            Some(Tok::Num(_)) => {
                let c = self.coef()?;
                match self.peek() {
                    Some(Tok::Star) => {
                        self.bump();
                    }
                    _ => return Ok((Monomial::new(exps), c)),
                }
                c
            }
            Some(Tok::Ident(_)) => BigRational::one(),
            _ => return Err(self.err("expected a coefficient or a variable")),
        };
        self.factor(&mut exps)?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coef))
    }

    fn coef(&mut self) -> Result<BigRational> {
        let num = match self.bump() {
            Some(Tok::Num(v)) => v,
            _ => unreachable!("caller checked for a number"),
        };
        if let Some(Tok::Slash) = self.peek() {
            self.bump();
            let col = self.column();
            match self.bump() {
                Some(Tok::Num(d)) if !d.is_zero() => return Ok(BigRational::new(num, d)),
                Some(Tok::Num(_)) => return Err(Error::parse(self.line, col, "zero denominator")),
                _ => {
                    self.pos -= 1;
                    return Err(self.err("expected a natural-number denominator"));
                }
            }
        }
        Ok(BigRational::from_integer(num))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let col = self.column();
        let name = match self.bump() {
            Some(Tok::Ident(name)) => name,
            _ => {
                self.pos -= 1;
                return Err(self.err("expected a variable"));
            }
        };
        let idx = self
            .ring
            .index_of(&name)
            .ok_or_else(|| Error::parse(self.line, col, format!("unknown variable `{name}`")))?;
        let mut e = 1u32;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let col = self.column();
            match self.bump() {
                Some(Tok::Num(v)) => {
                    e = u32::try_from(v)
                        .map_err(|_| Error::parse(self.line, col, "exponent too large"))?;
                }
                Some(Tok::Minus) => {
                    return Err(Error::parse(self.line, col, "negative exponent"));
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.err("expected a natural-number exponent"));
                }
            }
        }
        exps[idx] += e;
        Ok(())
    }
}
