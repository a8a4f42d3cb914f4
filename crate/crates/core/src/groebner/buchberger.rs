//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! product and chain criteria, and sugar-based pair selection.

use std::cmp::Ordering;
use std::sync::Arc;

use super::budget::{Budget, Meter};
use crate::error::Result;
use crate::poly::{merge_add, Monomial, MonomialOrder, PolyRing, Polynomial, Term};

struct Entry {
    terms: Vec<Term>,
    sugar: u32,
    active: bool,
}

impl Entry {
    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduces `p` completely modulo `reducers`, which must all be monic.
/// The first reducer (in slice order) whose leading monomial divides the
/// current term is used.
pub(crate) fn reduce_terms(
    order: MonomialOrder,
    mut p: Vec<Term>,
    reducers: &[&[Term]],
    meter: &mut Meter<'_>,
) -> Result<Vec<Term>> {
    let mut done: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let t = &p[start];
        let hit = reducers.iter().find(|g| g[0].mono.divides(&t.mono));
        match hit {
            Some(g) => {
                meter.tick()?;
                let m = t.mono.div(&g[0].mono).expect("divisible");
                let c = t.coeff.clone();
                let tail = g[1..].iter().map(|s| Term { coeff: -(&c * &s.coeff), mono: s.mono.mul(&m) });
                p = merge_add(order, &p[start + 1..], tail);
                start = 0;
            }
            None => {
                done.push(t.clone());
                start += 1;
            }
        }
    }
    Ok(done)
}

fn make_monic(mut terms: Vec<Term>) -> Vec<Term> {
    if let Some(lc) = terms.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for t in &mut terms {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
    terms
}

fn poly_degree(terms: &[Term]) -> u32 {
    terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
}

struct Engine<'a> {
    order: MonomialOrder,
    entries: Vec<Entry>,
    pairs: Vec<Pair>,
    meter: Meter<'a>,
    budget: &'a Budget,
}

impl<'a> Engine<'a> {
    fn reduce(&mut self, p: Vec<Term>) -> Result<Vec<Term>> {
        let reducers: Vec<&[Term]> =
            self.entries.iter().filter(|e| e.active).map(|e| e.terms.as_slice()).collect();
        reduce_terms(self.order, p, &reducers, &mut self.meter)
    }

    fn s_polynomial(&self, pair: &Pair) -> Vec<Term> {
        let (a, b) = (&self.entries[pair.i].terms, &self.entries[pair.j].terms);
        let ma = pair.lcm.div(&a[0].mono).expect("lcm");
        let mb = pair.lcm.div(&b[0].mono).expect("lcm");
        let ta = a[1..].iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.mul(&ma) }).collect::<Vec<_>>();
        let tb = b[1..].iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.mul(&mb) });
        merge_add(self.order, &ta, tb)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        let (a, b) = (&self.entries[i], &self.entries[j]);
        (a.sugar + d - a.lm().degree()).max(b.sugar + d - b.lm().degree())
    }

    /// Inserts a new monic basis element and updates the pair set.
    fn insert(&mut self, terms: Vec<Term>, sugar: u32) {
        let h = self.entries.len();
        self.entries.push(Entry { terms, sugar, active: true });
        let lm_h = self.entries[h].lm().clone();

        let mut cands: Vec<(usize, Monomial)> = self.entries[..h]
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(g, e)| (g, e.lm().lcm(&lm_h)))
            .collect();
        cands.reverse();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, l)) = cands.pop() {
            let coprime = self.entries[g].lm().is_coprime(&lm_h);
            if coprime
                || (!cands.iter().any(|(_, l2)| l2.divides(&l)) && !kept.iter().any(|(_, l2)| l2.divides(&l)))
            {
                kept.push((g, l));
            }
        }

        let entries = &self.entries;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && entries[p.i].lm().lcm(&lm_h) != p.lcm
                && entries[p.j].lm().lcm(&lm_h) != p.lcm)
        });

        for (g, l) in kept {
            if self.entries[g].lm().is_coprime(&lm_h) {
                continue;
            }
            let sugar = self.pair_sugar(g, h, &l);
            self.pairs.push(Pair { i: g, j: h, lcm: l, sugar });
        }

        for e in &mut self.entries[..h] {
            if e.active && lm_h.divides(e.lm()) {
                e.active = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(mut self, gens: Vec<Vec<Term>>) -> Result<Vec<Vec<Term>>> {
        for g in gens {
            let sugar = poly_degree(&g);
            let r = self.reduce(g)?;
            if r.is_empty() {
                continue;
            }
            let unit = r[0].mono.is_one();
            self.insert(make_monic(r), sugar);
            if unit {
                return Ok(vec![self.entries.pop().unwrap().terms]);
            }
        }
        while let Some(pair) = self.select_pair() {
            self.budget.check_deadline()?;
            let s = self.s_polynomial(&pair);
            let r = self.reduce(s)?;
            if r.is_empty() {
                continue;
            }
            let unit = r[0].mono.is_one();
            let sugar = pair.sugar.max(poly_degree(&r));
            self.insert(make_monic(r), sugar);
            if unit {
                return Ok(vec![self.entries.pop().unwrap().terms]);
            }
        }
        self.interreduce()
    }

    fn interreduce(mut self) -> Result<Vec<Vec<Term>>> {
        let active: Vec<usize> = (0..self.entries.len()).filter(|&i| self.entries[i].active).collect();
        let mut out = Vec::with_capacity(active.len());
        for &i in &active {
            let reducers: Vec<&[Term]> = active
                .iter()
                .filter(|&&k| k != i)
                .map(|&k| self.entries[k].terms.as_slice())
                .collect();
            let lead = self.entries[i].terms[0].clone();
            let tail = self.entries[i].terms[1..].to_vec();
            let mut reduced = vec![lead];
            reduced.extend(reduce_terms(self.order, tail, &reducers, &mut self.meter)?);
            out.push(reduced);
        }
        out.sort_by(|a, b| self.order.cmp(&a[0].mono, &b[0].mono));
        Ok(out)
    }
}

/// Reduced Gröbner basis of `gens` in the order of `ring`, sorted by
/// increasing leading monomial. The zero ideal yields an empty basis.
pub(crate) fn reduced_basis(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let engine = Engine {
        order: ring.order(),
        entries: Vec::new(),
        pairs: Vec::new(),
        meter: budget.meter(),
        budget,
    };
    let mut input: Vec<Vec<Term>> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| make_monic(g.terms().to_vec())).collect();
    // deterministic processing order independent of how the caller listed generators
    input.sort_by(|a, b| {
        ring.order()
            .cmp(&a[0].mono, &b[0].mono)
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| cmp_terms(ring.order(), a, b))
    });
    input.dedup();
    let basis = engine.run(input)?;
    Ok(basis.into_iter().map(|t| Polynomial::from_sorted_terms(ring, t)).collect())
}

fn cmp_terms(order: MonomialOrder, a: &[Term], b: &[Term]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let c = order.cmp(&x.mono, &y.mono);
        if c != Ordering::Equal {
            return c;
        }
        let c = x.coeff.to_string().cmp(&y.coeff.to_string());
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}
