//! Plain-text polynomial format: `3*x0^2*y1 - 1/2*y0`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::field::Scalar;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring().vars();
        for (k, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative_repr();
            let abs = if neg { -&t.coeff } else { t.coeff.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = format_monomial(&t.mono, vars);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// `x0^2*y1`; empty for the unit monomial.
pub fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{e}", vars[i])),
        }
    }
    parts.join("*")
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' => (out.push(Tok::Minus), i += 1).1,
            '*' => (out.push(Tok::Star), i += 1).1,
            '/' => (out.push(Tok::Slash), i += 1).1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => (self.pos += 1, true).1,
            Some(Tok::Plus) => (self.pos += 1, false).1,
            _ => false,
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { -c } else { c }, m));
            match self.next() {
                None => break,
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
        Polynomial::from_terms(self.ring, terms)
    }

    fn term(&mut self) -> Result<(Scalar, Monomial)> {
        let field = self.ring.field();
        let mut coeff = field.one();
        let mut exps = vec![0u32; self.ring.arity()];
        loop {
            match self.next() {
                Some(Tok::Num(n)) => {
                    let c = if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        match self.next() {
                            Some(Tok::Num(d)) => field.from_fraction(&n, &d)?,
                            _ => return Err(Error::Parse("expected denominator".into())),
                        }
                    } else {
                        field.from_bigint(&n)
                    };
                    coeff = &coeff * &c;
                }
                Some(Tok::Ident(name)) => {
                    let i = self
                        .ring
                        .var_index(&name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    let e = if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        match self.next() {
                            Some(Tok::Num(e)) => u32::try_from(e)
                                .map_err(|_| Error::Parse("exponent too large".into()))?,
                            _ => return Err(Error::Parse("expected exponent".into())),
                        }
                    } else {
                        1
                    };
                    exps[i] += e;
                }
                other => return Err(Error::Parse(format!("expected factor, found {other:?}"))),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        if exps.iter().any(|&e| e > u16::MAX as u32) {
            return Err(Error::Parse("exponent too large".into()));
        }
        Ok((coeff, Monomial::from_u32(&exps)))
    }
}

impl Polynomial {
    /// Parses the text format in `ring`.
    pub fn parse(ring: &Arc<PolyRing>, s: &str) -> Result<Polynomial> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        Parser { toks, pos: 0, ring }.polynomial()
    }
}
