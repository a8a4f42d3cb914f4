//! Monomial ideals: edge ideals of graphs, products of variable sets,
//! joins, powers, and integral closures through Newton polyhedra.

mod closure;
pub mod lp;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

pub use closure::{
    brute_force_ic_member, integral_closure_power, integral_closure_power_with, is_normal_up_to,
    is_normal_up_to_with, np_certificate, np_member, NewtonPolyhedron, Normality,
};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Ideal;
use crate::ideals::minimalize;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Monomial ideal stored by its minimal generators, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.arity() != ring.arity()) {
            return Err(Error::ArityMismatch { expected: ring.arity(), found: g.arity() });
        }
        let mut gens = minimalize(&gens);
        let order = ring.order();
        gens.sort_by(|a, b| order.cmp(b, a));
        debug_assert!(is_antichain(&gens));
        Ok(MonomialIdeal { ring: ring.clone(), gens })
    }

    pub fn from_exponents(ring: &Arc<PolyRing>, exps: &[Vec<u16>]) -> Result<Self> {
        Self::new(ring, exps.iter().map(|e| Monomial::new(e)))
    }

    /// Generators of `ideal` must all be monomials.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let gens = ideal
            .gens()
            .iter()
            .map(|g| match g.terms() {
                [t] => Ok(t.mono.clone()),
                _ => Err(Error::InvalidArgument(format!("{g} is not a monomial"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ideal.ring(), gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Is the monomial with these exponents in the ideal?
    pub fn contains(&self, exps: &[u16]) -> bool {
        self.gens.iter().any(|g| g.exponents().iter().zip(exps).all(|(a, b)| a <= b))
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).min().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Common degree of all generators, if they share one.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn to_ideal(&self) -> Ideal {
        let one = self.ring.scalar(1);
        Ideal::new(&self.ring, self.gens.iter().map(|m| Polynomial::monomial(&self.ring, one.clone(), m.clone())))
            .expect("generators live in the ring")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_ideal(), f)
    }
}

pub(crate) fn is_antichain(gens: &[Monomial]) -> bool {
    gens.iter().enumerate().all(|(i, a)| gens.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)))
}

/// Simple undirected graph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            if a.max(b) >= vertices {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) leaves {vertices} vertices")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { vertices, edges: set })
    }

    /// JSON `{"vertices": n, "edges": [[i, j], …]}` or whitespace-separated
    /// endpoint pairs (lines starting with `#` are skipped; the vertex count
    /// is one more than the largest endpoint).
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let g: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::new(g.vertices, g.edges.into_iter().map(|[a, b]| (a, b)));
        }
        let nums = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .flat_map(str::split_whitespace)
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() % 2 != 0 {
            return Err(Error::Parse("odd number of endpoints".into()));
        }
        let edges: Vec<(usize, usize)> = nums.chunks(2).map(|c| (c[0], c[1])).collect();
        let vertices = nums.iter().max().map_or(0, |m| m + 1);
        Self::new(vertices, edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs 3 vertices".into()));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

/// `(x_i x_j : {i, j} an edge)` in `k[{prefix}0, …]`.
pub fn edge_ideal(g: &Graph, prefix: &str, field: FieldSpec) -> Result<MonomialIdeal> {
    let vars: Vec<String> = (0..g.vertices()).map(|i| format!("{prefix}{i}")).collect();
    let ring = PolyRing::new(vars, field, MonomialOrder::DegRevLex)?;
    let gens = g.edges().map(|(a, b)| {
        let mut e = vec![0u16; g.vertices()];
        e[a] = 1;
        e[b] = 1;
        Monomial::new(&e)
    });
    MonomialIdeal::new(&ring, gens)
}

/// `(x_i y_j z_k …)`: one variable from each block, blocks named `x, y, z, w, …`.
pub fn product_ideal(degrees: &[usize], field: FieldSpec) -> Result<MonomialIdeal> {
    const LETTERS: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    if degrees.is_empty() || degrees.len() > LETTERS.len() {
        return Err(Error::InvalidArgument(format!("{} blocks", degrees.len())));
    }
    let vars: Vec<String> = degrees
        .iter()
        .zip(LETTERS)
        .flat_map(|(&d, l)| (0..=d).map(move |i| format!("{l}{i}")))
        .collect();
    let ring = PolyRing::new(vars, field, MonomialOrder::DegRevLex)?;
    let mut offsets = Vec::new();
    let mut acc = 0;
    for &d in degrees {
        offsets.push(acc);
        acc += d + 1;
    }
    let mut gens = Vec::new();
    let mut choice = vec![0usize; degrees.len()];
    loop {
        let mut e = vec![0u16; acc];
        for (&o, &c) in offsets.iter().zip(&choice) {
            e[o + c] = 1;
        }
        gens.push(Monomial::new(&e));
        // odometer over the blocks
        let mut k = degrees.len();
        loop {
            if k == 0 {
                return MonomialIdeal::new(&ring, gens);
            }
            k -= 1;
            if choice[k] < degrees[k] {
                choice[k] += 1;
                break;
            }
            choice[k] = 0;
        }
    }
}

/// `I + J + (X)(Y)` for ideals in disjoint sets of variables `X`, `Y`.
pub fn join(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    if i.ring.field() != j.ring.field() {
        return Err(Error::FieldMismatch);
    }
    if let Some(v) = j.ring.vars().iter().find(|v| i.ring.var_index(v).is_some()) {
        return Err(Error::OverlappingVariables(v.clone()));
    }
    let (a, b) = (i.arity(), j.arity());
    let vars = i.ring.vars().iter().chain(j.ring.vars()).cloned();
    let ring = PolyRing::new(vars, i.ring.field(), MonomialOrder::DegRevLex)?;
    let widen = |m: &Monomial, offset: usize| {
        let mut e = vec![0u16; a + b];
        e[offset..offset + m.arity()].copy_from_slice(m.exponents());
        Monomial::new(&e)
    };
    let mut gens: Vec<Monomial> = i.gens.iter().map(|m| widen(m, 0)).chain(j.gens.iter().map(|m| widen(m, a))).collect();
    for x in 0..a {
        for y in 0..b {
            let mut e = vec![0u16; a + b];
            e[x] = 1;
            e[a + y] = 1;
            gens.push(Monomial::new(&e));
        }
    }
    MonomialIdeal::new(&ring, gens)
}

/// The zero ideal of `k[{prefix}0..{prefix}(count-1)]`.
pub fn zero_ideal(prefix: &str, count: usize, field: FieldSpec) -> Result<MonomialIdeal> {
    let ring = PolyRing::new((0..count).map(|i| format!("{prefix}{i}")), field, MonomialOrder::DegRevLex)?;
    MonomialIdeal::new(&ring, [])
}

/// Exponent vectors of all `q`-fold sums of generators (with repetition),
/// each multiset once.
pub(crate) fn power_exponents(gens: &[Monomial], q: u32) -> Vec<Vec<u16>> {
    let arity = gens.first().map_or(0, Monomial::arity);
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u32, vec![0u16; arity])];
    while let Some((start, depth, acc)) = stack.pop() {
        if depth == q {
            out.push(acc);
            continue;
        }
        for (k, g) in gens.iter().enumerate().skip(start) {
            let mut next = acc.clone();
            for (a, e) in next.iter_mut().zip(g.exponents()) {
                *a += e;
            }
            stack.push((k, depth + 1, next));
        }
    }
    out
}

/// Minimal generators of `I^q`; `I^0 = (1)`.
pub fn monomial_power(i: &MonomialIdeal, q: u32) -> MonomialIdeal {
    if q == 0 {
        return MonomialIdeal::new(&i.ring, [i.ring.one_monomial()]).expect("same ring");
    }
    let exps = power_exponents(&i.gens, q);
    MonomialIdeal::new(&i.ring, exps.iter().map(|e| Monomial::new(e))).expect("same ring")
}

#[cfg(test)]
mod tests;
