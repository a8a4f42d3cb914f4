//! Integral closures of powers of monomial ideals.

use std::collections::HashSet;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::par::Parallelism;
use crate::poly::Monomial;

use super::lp::{feasible_point, rat};
use super::{monomial_power, MonomialIdeal};

/// Lattice points examined per integral closure before giving up.
pub const ENUMERATION_LIMIT: u64 = 4_000_000;

/// `conv(v_1, …, v_s) + R^n_{≥0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    arity: usize,
    vertices: Vec<Vec<u16>>,
}

impl NewtonPolyhedron {
    pub fn new(arity: usize, vertices: Vec<Vec<u16>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("empty Newton polyhedron".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != arity) {
            return Err(Error::ArityMismatch { expected: arity, found: v.len() });
        }
        Ok(NewtonPolyhedron { arity, vertices })
    }

    pub fn of(i: &MonomialIdeal) -> Result<Self> {
        Self::new(i.arity(), i.gens().iter().map(|g| g.exponents().to_vec()).collect())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertices(&self) -> &[Vec<u16>] {
        &self.vertices
    }
}

/// Weights `λ ≥ 0` with `Σ λ_i = q` and `Σ λ_i v_i ≤ a`, if they exist.
pub fn np_certificate(a: &[u16], q: u32, p: &NewtonPolyhedron) -> Result<Option<Vec<BigRational>>> {
    if a.len() != p.arity {
        return Err(Error::ArityMismatch { expected: p.arity, found: a.len() });
    }
    let (s, n) = (p.vertices.len(), p.arity);
    // columns: λ_1..λ_s, then one slack per coordinate
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|c| {
            let mut row: Vec<BigRational> = p.vertices.iter().map(|v| rat(v[c] as i64)).collect();
            row.extend((0..n).map(|k| rat((k == c) as i64)));
            row
        })
        .collect();
    let mut sum_row = vec![rat(1); s];
    sum_row.extend((0..n).map(|_| rat(0)));
    rows.push(sum_row);
    let mut b: Vec<BigRational> = a.iter().map(|&v| rat(v as i64)).collect();
    b.push(rat(q as i64));
    Ok(feasible_point(&rows, &b).map(|mut x| {
        x.truncate(s);
        x
    }))
}

/// Is `a` in `q` times the Newton polyhedron, i.e. `x^a` integral over `I^q`?
pub fn np_member(a: &[u16], q: u32, p: &NewtonPolyhedron) -> Result<bool> {
    Ok(np_certificate(a, q, p)?.is_some())
}

/// Sufficient test: `w·a` dominates a sum of `w·q` generators for some
/// `w ≤ w_max`, so `(x^a)^w ∈ I^(wq)`. `false` means undecided.
pub fn brute_force_ic_member(a: &[u16], q: u32, i: &MonomialIdeal, w_max: u32) -> bool {
    if a.len() != i.arity() || i.is_zero() {
        return false;
    }
    fn fits(gens: &[&[u16]], start: usize, left: u32, room: &mut [u32]) -> bool {
        if left == 0 {
            return true;
        }
        for k in start..gens.len() {
            let g = gens[k];
            if g.iter().zip(room.iter()).all(|(&e, &r)| e as u32 <= r) {
                room.iter_mut().zip(g).for_each(|(r, &e)| *r -= e as u32);
                let ok = fits(gens, k, left - 1, room);
                room.iter_mut().zip(g).for_each(|(r, &e)| *r += e as u32);
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let gens: Vec<&[u16]> = i.gens().iter().map(Monomial::exponents).collect();
    (1..=w_max).any(|w| {
        let mut room: Vec<u32> = a.iter().map(|&e| e as u32 * w).collect();
        fits(&gens, 0, w * q, &mut room)
    })
}

/// Minimal generators of the integral closure of `I^q`, using the default
/// parallelism.
pub fn integral_closure_power(i: &MonomialIdeal, q: u32) -> Result<MonomialIdeal> {
    integral_closure_power_with(i, q, Parallelism::default())
}

/// Lattice points of `q·NP(I)` inside the box `a_c ≤ q·max_v v_c`, total
/// degree at most `q·maxdeg + n − 1`; minimal generators are the members
/// `a` with every `a − e_c` outside.
pub fn integral_closure_power_with(i: &MonomialIdeal, q: u32, par: Parallelism) -> Result<MonomialIdeal> {
    if q == 0 || i.is_zero() {
        return Ok(monomial_power(i, q));
    }
    let n = i.arity();
    let np = NewtonPolyhedron::of(i)?;
    let power = monomial_power(i, q);
    let bounds: Vec<u32> =
        (0..n).map(|c| q * i.gens().iter().map(|g| g.exponents()[c] as u32).max().unwrap_or(0)).collect();
    let count = bounds.iter().try_fold(1u64, |acc, &b| acc.checked_mul(b as u64 + 1));
    if count.is_none_or(|c| c > ENUMERATION_LIMIT) {
        return Err(Error::EnumerationBudget(ENUMERATION_LIMIT));
    }
    let lo = q * i.min_degree();
    let hi = q * i.max_degree() + n as u32 - 1;

    let mut candidates: Vec<Vec<u16>> = Vec::new();
    let mut point = vec![0u32; n];
    loop {
        let d: u32 = point.iter().sum();
        if (lo..=hi).contains(&d) {
            candidates.push(point.iter().map(|&v| v as u16).collect());
        }
        let mut k = 0;
        while k < n && point[k] == bounds[k] {
            point[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        point[k] += 1;
    }

    let verdicts = par.try_map(&candidates, |a| -> Result<bool> {
        if power.contains(a) {
            return Ok(true);
        }
        np_member(a, q, &np)
    })?;
    let members: HashSet<&[u16]> =
        candidates.iter().zip(&verdicts).filter(|(_, &v)| v).map(|(a, _)| a.as_slice()).collect();
    let mut lowered = Vec::with_capacity(n);
    let minimal = members.iter().filter(|a| {
        (0..n).filter(|&c| a[c] > 0).all(|c| {
            lowered.clear();
            lowered.extend_from_slice(a);
            lowered[c] -= 1;
            !members.contains(lowered.as_slice())
        })
    });
    let gens: Vec<Monomial> = minimal.map(|a| Monomial::new(a)).collect();
    MonomialIdeal::new(i.ring(), gens)
}

/// Outcome of a bounded normality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normality {
    /// `IC(I^q) = I^q` for every `q ≤ up_to`.
    Normal { up_to: u32 },
    /// `witness ∈ IC(I^q) \ I^q`.
    NotNormal { q: u32, witness: Monomial },
}

impl Normality {
    pub fn is_normal(&self) -> bool {
        matches!(self, Normality::Normal { .. })
    }
}

pub fn is_normal_up_to(i: &MonomialIdeal, up_to: u32) -> Result<Normality> {
    is_normal_up_to_with(i, up_to, Parallelism::default())
}

pub fn is_normal_up_to_with(i: &MonomialIdeal, up_to: u32, par: Parallelism) -> Result<Normality> {
    if up_to == 0 {
        return Err(Error::InvalidArgument("normality bound must be at least 1".into()));
    }
    for q in 1..=up_to {
        let closure = integral_closure_power_with(i, q, par)?;
        let power = monomial_power(i, q);
        if let Some(w) = closure.gens().iter().find(|m| !power.contains(m.exponents())) {
            return Ok(Normality::NotNormal { q, witness: w.clone() });
        }
    }
    Ok(Normality::Normal { up_to })
}
