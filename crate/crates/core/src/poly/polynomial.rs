use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::ring::same_ring;
use super::{Monomial, MonomialOrder, PolyRing};
use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A polynomial in canonical form: terms strictly decreasing in the ring's
/// order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::monomial(ring, c, ring.one_monomial())
    }

    pub fn monomial(ring: &Arc<PolyRing>, coeff: Scalar, mono: Monomial) -> Self {
        assert_eq!(mono.arity(), ring.arity(), "monomial arity");
        let terms = if coeff.is_zero() { Vec::new() } else { vec![Term { coeff, mono }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated,
    /// unsorted, zero) terms.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Scalar, Monomial)>,
    ) -> Result<Self> {
        let mut ts = Vec::new();
        for (coeff, mono) in terms {
            if mono.arity() != ring.arity() {
                return Err(Error::ArityMismatch { expected: ring.arity(), found: mono.arity() });
            }
            if !ring.field().contains(&coeff) {
                return Err(Error::FieldMismatch);
            }
            ts.push(Term { coeff, mono });
        }
        Ok(Polynomial { ring: ring.clone(), terms: canonicalize(ring.order(), ts) })
    }

    /// Wraps terms already in canonical order.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self * other)
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-sorts into a ring with the same variables and field but possibly a
    /// different order.
    pub fn rebase(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        if ring.order() == self.ring.order() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.order().cmp(&b.mono, &a.mono));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Moves the polynomial into `ring`, matching variables by name. Fails if
    /// a variable that occurs in `self` is missing from `ring`.
    pub fn map_into(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.field() != self.ring.field() {
            return Err(Error::FieldMismatch);
        }
        let mapping: Vec<Option<usize>> =
            self.ring.vars().iter().map(|v| ring.var_index(v)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0; ring.arity()];
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match mapping[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return Err(Error::InvalidArgument(format!(
                            "variable `{}` does not exist in the target ring",
                            self.ring.vars()[i]
                        )))
                    }
                }
            }
            terms.push(Term { coeff: t.coeff.clone(), mono: Monomial::new(&exps) });
        }
        terms.sort_by(|a, b| ring.order().cmp(&b.mono, &a.mono));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Substitutes polynomials (all in one target ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), found: images.len() });
        }
        let target = images[0].ring().clone();
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.try_mul(&images[i].pow(e as u32))?;
                }
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }
}

/// Sorts descending, merges like terms, drops zeros.
pub(crate) fn canonicalize(order: MonomialOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
            _ => {
                if out.last().is_some_and(|l| l.coeff.is_zero()) {
                    out.pop();
                }
                out.push(t)
            }
        }
    }
    if out.last().is_some_and(|l| l.coeff.is_zero()) {
        out.pop();
    }
    out
}

/// `a + b` for descending term sequences.
pub(crate) fn merge_add(
    order: MonomialOrder,
    a: &[Term],
    b: impl IntoIterator<Item = Term>,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + 4);
    let mut ai = a.iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ai.next().unwrap().clone()),
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let x = ai.next().unwrap();
                    let y = bi.next().unwrap();
                    let c = &x.coeff + &y.coeff;
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: y.mono });
                    }
                }
            },
            (Some(_), None) => {
                out.extend(ai.cloned());
                break;
            }
            (None, Some(_)) => {
                out.extend(bi);
                break;
            }
            (None, None) => break,
        }
    }
    out
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let terms = merge_add(self.ring.order(), &self.terms, rhs.terms.iter().cloned());
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let neg = rhs.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() });
        let terms = merge_add(self.ring.order(), &self.terms, neg);
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                terms.push(Term { coeff: &a.coeff * &b.coeff, mono: a.mono.mul(&b.mono) });
            }
        }
        Polynomial { ring: self.ring.clone(), terms: canonicalize(self.ring.order(), terms) }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl std::ops::$tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
