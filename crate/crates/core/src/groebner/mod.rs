//! Ideals, reduced Gröbner bases, normal forms, membership, equality and
//! elimination.

mod buchberger;
mod budget;

use std::fmt;
use std::sync::Arc;

pub use budget::{Budget, DEFAULT_MAX_REDUCTIONS};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};

/// A finitely generated ideal. Zero generators are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: out })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)] }
    }

    /// Ideal generated by the given variables.
    pub fn of_vars(ring: &Arc<PolyRing>, names: &[&str]) -> Result<Self> {
        let gens = names.iter().map(|n| ring.var_named(n)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// Parses generators in the text format.
    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| Polynomial::parse(ring, g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub(crate) fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Same generators viewed in a ring with another order.
    pub fn rebase(&self, ring: &Arc<PolyRing>) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.rebase(ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal { ring: ring.clone(), gens })
    }

    /// Moves generators into `ring`, matching variables by name.
    pub fn map_into(&self, ring: &Arc<PolyRing>) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.map_into(ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn groebner(&self, budget: &Budget) -> Result<GroebnerBasis> {
        buchberger(self, budget)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// A reduced Gröbner basis: monic, sorted by increasing leading monomial,
/// no term of any element divisible by another element's leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { ring: self.ring.clone(), gens: self.basis.clone() }
    }

    /// Remainder of `p` modulo the basis. `p` must live in the basis' ring
    /// (same variables and order).
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        self.normal_form_with(p, &Budget::unlimited())
    }

    pub(crate) fn normal_form_with(&self, p: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        let reducers: Vec<_> = self.basis.iter().map(|g| g.terms()).collect();
        let mut meter = budget.meter();
        let terms = buchberger::reduce_terms(self.order(), p.terms().to_vec(), &reducers, &mut meter)?;
        Ok(Polynomial::from_sorted_terms(&self.ring, terms))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Checks every S-polynomial of the basis reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> Result<bool> {
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                let la = a.leading_monomial().unwrap();
                let lb = b.leading_monomial().unwrap();
                let l = la.lcm(lb);
                let one = self.ring.field().one();
                let s = &a.mul_term(&one, &l.div(la).unwrap()) - &b.mul_term(&one, &l.div(lb).unwrap());
                if !self.normal_form(&s)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Structural check of the reduced-basis invariants.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(|c| c.is_one())
                && g.terms().iter().all(|t| {
                    lms.iter().enumerate().all(|(k, lm)| k == i || !lm.divides(&t.mono))
                })
        })
    }
}

/// Reduced Gröbner basis of `ideal` in its ring's order.
pub fn buchberger(ideal: &Ideal, budget: &Budget) -> Result<GroebnerBasis> {
    let basis = buchberger::reduced_basis(&ideal.ring, &ideal.gens, budget)?;
    Ok(GroebnerBasis { ring: ideal.ring.clone(), basis })
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

pub fn ideal_member(p: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    ideal.groebner(budget)?.contains(p)
}

/// Equality of ideals via equality of reduced Gröbner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    a.check_ring(b)?;
    Ok(a.groebner(budget)? == b.groebner(budget)?)
}

/// `a ⊆ b`.
pub fn ideal_contained(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    a.check_ring(b)?;
    let gb = b.groebner(budget)?;
    for g in a.gens() {
        if !gb.normal_form_with(g, budget)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I ∩ k[x_k, .., x_{n-1}]`: eliminates the first `k` variables and returns
/// generators (a reduced basis) in the ring of the remaining variables with
/// degrevlex order.
pub fn eliminate(ideal: &Ideal, k: usize, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    if k == 0 || k >= ring.arity() {
        return Err(Error::InvalidArgument(format!(
            "cannot eliminate {k} of {} variables",
            ring.arity()
        )));
    }
    let elim_ring = ring.with_order(MonomialOrder::BlockElim(k))?;
    let gb = ideal.rebase(&elim_ring)?.groebner(budget)?;
    let small = PolyRing::new(ring.vars()[k..].iter().cloned(), ring.field(), MonomialOrder::DegRevLex)?;
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.leading_monomial().unwrap().exponents()[..k].iter().all(|&e| e == 0))
        .map(|g| g.map_into(&small))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&small, gens)
}
