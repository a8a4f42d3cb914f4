//! Free algebras over a polynomial ring given by structure constants, and
//! contents of their elements.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::poly::{PolyRing, Polynomial};

use super::reduction_number;
use crate::ideals::ideal_product;

/// `A = ⊕ R·e_i` with `e_i·e_j = Σ_k c_ijk e_k`, `R` a polynomial ring.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    ring: Arc<PolyRing>,
    labels: Vec<String>,
    table: Vec<Vec<Vec<Polynomial>>>,
}

impl StructureAlgebra {
    pub fn new(ring: &Arc<PolyRing>, labels: Vec<String>, table: Vec<Vec<Vec<Polynomial>>>) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::InvalidArgument("algebra of rank 0".into()));
        }
        let shape_ok = table.len() == r && table.iter().all(|row| row.len() == r && row.iter().all(|c| c.len() == r));
        if !shape_ok {
            return Err(Error::InvalidArgument(format!("structure table must be {r}×{r}×{r}")));
        }
        for c in table.iter().flatten().flatten() {
            if !crate::poly::same_ring(c.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(StructureAlgebra { ring: ring.clone(), labels, table })
    }

    fn from_rule(ring: &Arc<PolyRing>, rank: usize, label: impl Fn(usize) -> String, prod: impl Fn(usize, usize) -> Option<usize>) -> Result<Self> {
        let table = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        (0..rank)
                            .map(|k| if prod(i, j) == Some(k) { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(ring, (0..rank).map(label).collect(), table)
    }

    /// Basis `1, t, …, t^(rank-1)` with `t^rank = 0`.
    pub fn truncated_polynomial(ring: &Arc<PolyRing>, rank: usize) -> Result<Self> {
        Self::from_rule(ring, rank, |i| format!("t^{i}"), |i, j| (i + j < rank).then_some(i + j))
    }

    /// Group algebra of the cyclic group of the given order.
    pub fn cyclic_group(ring: &Arc<PolyRing>, order: usize) -> Result<Self> {
        Self::from_rule(ring, order, |i| format!("g^{i}"), |i, j| Some((i + j) % order))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.table[i][j][k]
    }

    fn check_element(&self, u: &[Polynomial]) -> Result<()> {
        if u.len() != self.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), found: u.len() });
        }
        for c in u {
            if !crate::poly::same_ring(c.ring(), &self.ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(())
    }

    /// Element whose first coefficients are the named ring variables.
    pub fn generic_element(&self, names: &[&str]) -> Result<Vec<Polynomial>> {
        if names.len() > self.rank() {
            return Err(Error::InvalidArgument(format!("{} coefficients for rank {}", names.len(), self.rank())));
        }
        let mut out = names.iter().map(|n| self.ring.var_named(n)).collect::<Result<Vec<_>>>()?;
        out.resize(self.rank(), Polynomial::zero(&self.ring));
        Ok(out)
    }

    pub fn multiply(&self, u: &[Polynomial], v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        self.check_element(u)?;
        self.check_element(v)?;
        let mut out = vec![Polynomial::zero(&self.ring); self.rank()];
        for (i, ui) in u.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let uv = ui * vj;
                for (k, c) in self.table[i][j].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    out[k] = &out[k] + &(&uv * c);
                }
            }
        }
        Ok(out)
    }

    fn basis_element(&self, i: usize) -> Vec<Polynomial> {
        (0..self.rank()).map(|k| if k == i { Polynomial::one(&self.ring) } else { Polynomial::zero(&self.ring) }).collect()
    }

    /// `(e_i e_j) e_k = e_i (e_j e_k)` for all basis triples.
    pub fn is_associative(&self) -> Result<bool> {
        let basis: Vec<_> = (0..self.rank()).map(|i| self.basis_element(i)).collect();
        for a in &basis {
            for b in &basis {
                let ab = self.multiply(a, b)?;
                for c in &basis {
                    if self.multiply(&ab, c)? != self.multiply(a, &self.multiply(b, c)?)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every `(c_ij0, …, c_ij(r-1))` generates the unit ideal.
    pub fn unit_condition(&self, budget: &Budget) -> Result<bool> {
        for row in self.table.iter().flatten() {
            if !Ideal::new(&self.ring, row.iter().cloned())?.groebner(budget)?.is_unit() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Ideal generated by the coordinates of `u`.
pub fn struct_content(a: &StructureAlgebra, u: &[Polynomial]) -> Result<Ideal> {
    a.check_element(u)?;
    Ideal::new(&a.ring, u.iter().cloned())
}

/// Least `r ≤ r_max` with `[c(u)c(v)]^(r+1) = c(uv)·[c(u)c(v)]^r`, if any.
pub fn struct_reduction_probe(
    a: &StructureAlgebra,
    u: &[Polynomial],
    v: &[Polynomial],
    r_max: u32,
    budget: &Budget,
) -> Result<Option<u32>> {
    let j = struct_content(a, &a.multiply(u, v)?)?;
    let i = ideal_product(&struct_content(a, u)?, &struct_content(a, v)?)?;
    reduction_number(&j, &i, r_max, budget)
}

/// Searches scalar elements with coordinates in `-bound..=bound` for a pair
/// of nonzero elements with zero product. Over a field every nonzero
/// element is unimodular, so such a pair violates the Gauss lemma.
pub fn gauss_lemma_probe(a: &StructureAlgebra, bound: i64) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let r = a.rank();
    let width = (2 * bound + 1) as u64;
    let total = width.checked_pow(r as u32).filter(|&t| t <= 1 << 16).ok_or(Error::EnumerationBudget(1 << 16))?;
    let vectors: Vec<Vec<i64>> = (1..total)
        .map(|mut code| {
            (0..r)
                .map(|_| {
                    let d = (code % width) as i64 - bound;
                    code /= width;
                    d
                })
                .collect()
        })
        .filter(|v: &Vec<i64>| v.iter().any(|&c| c != 0))
        .collect();
    let embed = |v: &[i64]| -> Vec<Polynomial> {
        v.iter().map(|&c| Polynomial::constant(&a.ring, a.ring.scalar(c))).collect()
    };
    let elems: Vec<Vec<Polynomial>> = vectors.iter().map(|v| embed(v)).collect();
    for (x, ex) in vectors.iter().zip(&elems) {
        if ex.iter().all(Polynomial::is_zero) {
            continue;
        }
        for (y, ey) in vectors.iter().zip(&elems) {
            if ey.iter().all(Polynomial::is_zero) {
                continue;
            }
            if a.multiply(ex, ey)?.iter().all(Polynomial::is_zero) {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}
