use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// Dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exponent; 16]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn new(exps: &[Exponent]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The `i`-th variable to the power `e`.
    pub fn var(arity: usize, i: usize, e: Exponent) -> Self {
        let mut m = Monomial::one(arity);
        m.0[i] = e;
        m
    }

    pub fn from_u32(exps: &[u32]) -> Self {
        Monomial(exps.iter().map(|&e| Exponent::try_from(e).expect("exponent overflow")).collect())
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other | self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A monomial order on a fixed number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degrevlex on the first `k` variables, ties broken by degrevlex on the
    /// rest. Any polynomial whose leading monomial avoids the first block lies
    /// entirely in the second block.
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn validate(&self, arity: usize) -> Result<()> {
        match *self {
            MonomialOrder::BlockElim(k) if k == 0 || k >= arity => Err(Error::InvalidOrder(
                format!("elimination block {k} must lie strictly between 0 and arity {arity}"),
            )),
            _ => Ok(()),
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::BlockElim(k) => {
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
        }
        Ok(self.cmp(a, b))
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

#[inline]
fn degrevlex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_monomials(arity: usize, max_deg: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(arity)];
        for i in 0..arity {
            let mut next = Vec::new();
            for m in &out {
                let base = m.degree();
                for e in 0..=(max_deg - base) {
                    let mut m2 = m.clone();
                    m2.0[i] = e as Exponent;
                    next.push(m2);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn degrevlex_ties_on_last_variable() {
        let xz = Monomial::new(&[1, 0, 1]);
        let yy = Monomial::new(&[0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&yy, &xz), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let x = Monomial::new(&[1, 0]);
        let y100 = Monomial::new(&[0, 100]);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y100), Ordering::Greater);
    }

    #[test]
    fn reflexive_and_arity_checked() {
        let m = Monomial::new(&[2, 1, 0]);
        for o in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::BlockElim(1)] {
            assert_eq!(o.cmp(&m, &m), Ordering::Equal);
        }
        assert!(MonomialOrder::Lex.try_cmp(&m, &Monomial::one(2)).is_err());
    }

    #[test]
    fn block_order_validation() {
        assert!(MonomialOrder::BlockElim(0).validate(3).is_err());
        assert!(MonomialOrder::BlockElim(3).validate(3).is_err());
        assert!(MonomialOrder::BlockElim(2).validate(3).is_ok());
    }

    #[test]
    fn orders_are_total_multiplicative_and_graded() {
        let mons = all_monomials(3, 4);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::BlockElim(1), MonomialOrder::BlockElim(2)] {
            let one = Monomial::one(3);
            for a in &mons {
                assert_ne!(order.cmp(a, &one), Ordering::Less, "1 is minimal");
                for b in &mons {
                    let ab = order.cmp(a, b);
                    assert_eq!(ab, order.cmp(b, a).reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    if order.is_graded() && a.degree() != b.degree() {
                        assert_eq!(ab, a.degree().cmp(&b.degree()));
                    }
                    for c in mons.iter().filter(|c| c.degree() <= 2) {
                        assert_eq!(order.cmp(&a.mul(c), &b.mul(c)), ab);
                    }
                }
            }
        }
    }

    #[test]
    fn transitivity_on_small_degrees() {
        let mons = all_monomials(3, 3);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::BlockElim(2)] {
            let mut sorted = mons.clone();
            sorted.sort_by(|a, b| order.cmp(a, b));
            for (i, a) in sorted.iter().enumerate() {
                for b in &sorted[i + 1..] {
                    assert_eq!(order.cmp(a, b), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn divisibility_helpers() {
        let a = Monomial::new(&[1, 2, 0]);
        let b = Monomial::new(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(b.div(&a), Some(Monomial::new(&[1, 0, 1])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&Monomial::new(&[0, 3, 1])), Monomial::new(&[1, 3, 1]));
        assert!(Monomial::new(&[1, 0, 0]).is_coprime(&Monomial::new(&[0, 4, 1])));
    }
}
