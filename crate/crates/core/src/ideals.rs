//! Ideal algebra: sums, products, powers, intersections, kernels of
//! polynomial maps, Krull dimension and Hilbert functions.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{eliminate, Budget, Ideal};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ring(b)?;
    Ideal::new(a.ring(), a.gens().iter().chain(b.gens()).cloned())
}

/// Sum of several ideals of one ring.
pub fn ideal_sum_all<'a>(parts: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
    let mut iter = parts.into_iter();
    let first = iter.next().ok_or_else(|| Error::InvalidArgument("empty sum".into()))?.clone();
    iter.try_fold(first, |acc, p| ideal_sum(&acc, p))
}

/// All pairwise products of generators, duplicates removed.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ring(b)?;
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for f in a.gens() {
        for g in b.gens() {
            let p = f * g;
            if seen.insert(p.clone()) {
                gens.push(p);
            }
        }
    }
    Ideal::new(a.ring(), gens)
}

/// Product of several ideals of one ring.
pub fn ideal_product_all<'a>(parts: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
    let mut iter = parts.into_iter();
    let first = iter.next().ok_or_else(|| Error::InvalidArgument("empty product".into()))?.clone();
    iter.try_fold(first, |acc, p| ideal_product(&acc, p))
}

/// `I^e`: one generator per multiset of `e` generators, duplicates removed.
/// `I^0 = (1)`.
pub fn ideal_power(ideal: &Ideal, e: u32) -> Ideal {
    let ring = ideal.ring();
    if e == 0 {
        return Ideal::unit(ring);
    }
    let gens = ideal.gens();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // depth-first over nondecreasing index sequences, carrying partial products
    let mut stack: Vec<(usize, u32, Polynomial)> = vec![(0, 0, Polynomial::one(ring))];
    while let Some((start, depth, prod)) = stack.pop() {
        if depth == e {
            if seen.insert(prod.clone()) {
                out.push(prod);
            }
            continue;
        }
        for k in (start..gens.len()).rev() {
            stack.push((k, depth + 1, &prod * &gens[k]));
        }
    }
    Ideal::new(ring, out).expect("same ring")
}

fn fresh_name(ring: &PolyRing, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while ring.var_index(&name).is_some() {
        k += 1;
        name = format!("{base}{k}");
    }
    name
}

/// `I ∩ J` via `u·I + (1−u)·J ∩ k[vars]`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    a.check_ring(b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let u = fresh_name(ring, "_u");
    let vars = std::iter::once(u).chain(ring.vars().iter().cloned());
    let big = PolyRing::new(vars, ring.field(), MonomialOrder::BlockElim(1))?;
    let uvar = big.var(0);
    let one_minus_u = &Polynomial::one(&big) - &uvar;
    let mut gens = Vec::with_capacity(a.gens().len() + b.gens().len());
    for g in a.gens() {
        gens.push(&uvar * &g.map_into(&big)?);
    }
    for g in b.gens() {
        gens.push(&one_minus_u * &g.map_into(&big)?);
    }
    let contracted = eliminate(&Ideal::new(&big, gens)?, 1, budget)?;
    contracted.map_into(ring)
}

/// Intersection of several ideals of one ring.
pub fn ideal_intersect_all<'a>(
    parts: impl IntoIterator<Item = &'a Ideal>,
    budget: &Budget,
) -> Result<Ideal> {
    let mut iter = parts.into_iter();
    let first = iter.next().ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?.clone();
    iter.try_fold(first, |acc, p| ideal_intersect(&acc, p, budget))
}

/// Kernel of `k[sources] → k[X]`, `S_i ↦ targets[i]`, as an ideal of
/// `k[sources]` (degrevlex).
pub fn kernel_of_map(targets: &[Polynomial], sources: &[String], budget: &Budget) -> Result<Ideal> {
    if targets.len() != sources.len() {
        return Err(Error::InvalidArgument(format!(
            "{} targets for {} source variables",
            targets.len(),
            sources.len()
        )));
    }
    let first = targets.first().ok_or_else(|| Error::InvalidArgument("no targets".into()))?;
    if targets.iter().any(Polynomial::is_zero) {
        return Err(Error::InvalidArgument("zero target".into()));
    }
    let x = first.ring().clone();
    for s in sources {
        if x.var_index(s).is_some() {
            return Err(Error::OverlappingVariables(s.clone()));
        }
    }
    let vars = x.vars().iter().cloned().chain(sources.iter().cloned());
    let big = PolyRing::new(vars, x.field(), MonomialOrder::BlockElim(x.arity()))?;
    let mut gens = Vec::with_capacity(targets.len());
    for (k, t) in targets.iter().enumerate() {
        if !crate::poly::same_ring(t.ring(), &x) {
            return Err(Error::RingMismatch);
        }
        gens.push(&big.var(x.arity() + k) - &t.map_into(&big)?);
    }
    eliminate(&Ideal::new(&big, gens)?, x.arity(), budget)
}

/// Same as [`kernel_of_map`]; the name used when every target is a monomial.
pub fn kernel_of_monomial_map(
    targets: &[Polynomial],
    sources: &[String],
    budget: &Budget,
) -> Result<Ideal> {
    kernel_of_map(targets, sources, budget)
}

/// Minimal generators of a monomial ideal given by (possibly redundant)
/// monomials, sorted.
pub fn minimalize(monos: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = monos.to_vec();
    sorted.sort_by_key(|m| (m.degree(), m.exponents().to_vec()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Largest set of variables containing the support of no monomial of
/// `monos`; the dimension of `k[x]/(monos)`.
pub fn monomial_dimension(monos: &[Monomial], arity: usize) -> usize {
    assert!(arity <= 64, "dimension search supports at most 64 variables");
    let supports: Vec<u64> = minimalize(monos)
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    fn search(var: usize, arity: usize, chosen: u64, size: usize, supports: &[u64], best: &mut usize) {
        if size + (arity - var) <= *best {
            return;
        }
        if var == arity {
            *best = size;
            return;
        }
        let with = chosen | (1 << var);
        if supports.iter().all(|&s| s & !with != 0) {
            search(var + 1, arity, with, size + 1, supports, best);
        }
        search(var + 1, arity, chosen, size, supports, best);
    }
    let mut best = 0;
    search(0, arity, 0, 0, &supports, &mut best);
    best
}

/// Krull dimension of `ring/I`, from the leading-term ideal of a Gröbner
/// basis.
pub fn krull_dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let gb = ideal.groebner(budget)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(monomial_dimension(&gb.leading_monomials(), ideal.ring().arity()))
}

/// Height (codimension) of a proper ideal.
pub fn codimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(ideal.ring().arity() - krull_dimension(ideal, budget)?)
}

/// Calls `f` on every exponent vector of total degree `d` in `arity`
/// variables.
pub fn for_each_monomial_of_degree(arity: usize, d: u32, mut f: impl FnMut(&[u16])) {
    fn rec(exps: &mut Vec<u16>, pos: usize, left: u32, f: &mut dyn FnMut(&[u16])) {
        if pos + 1 == exps.len() {
            exps[pos] = left as u16;
            f(exps);
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e as u16;
            rec(exps, pos + 1, left - e, f);
        }
        exps[pos] = 0;
    }
    if arity == 0 {
        if d == 0 {
            f(&[]);
        }
        return;
    }
    let mut exps = vec![0u16; arity];
    rec(&mut exps, 0, d, &mut f);
}

/// Entry `d` counts standard monomials of degree `d`, for `d = 0..=max_degree`.
pub fn hilbert_function(ideal: &Ideal, max_degree: u32, budget: &Budget) -> Result<Vec<u64>> {
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let gb = ideal.groebner(budget)?;
    let lms = gb.leading_monomials();
    Ok(standard_monomial_counts(&lms, ideal.ring().arity(), max_degree))
}

pub(crate) fn standard_monomial_counts(lms: &[Monomial], arity: usize, max_degree: u32) -> Vec<u64> {
    let lms = minimalize(lms);
    let lms: Vec<&[u16]> = lms.iter().map(|m| m.exponents()).collect();
    (0..=max_degree)
        .map(|d| {
            let mut count = 0u64;
            for_each_monomial_of_degree(arity, d, |e| {
                if !lms.iter().any(|g| g.iter().zip(e).all(|(a, b)| a <= b)) {
                    count += 1;
                }
            });
            count
        })
        .collect()
}

/// Ideal generated by all variables of `ring`.
pub fn maximal_ideal(ring: &Arc<PolyRing>) -> Ideal {
    Ideal::new(ring, (0..ring.arity()).map(|i| ring.var(i))).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::ideal_equal;
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(["x0", "x1", "y0", "y1"], FieldSpec::PrimeField(32003), MonomialOrder::DegRevLex).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    fn strs(i: &Ideal) -> Vec<String> {
        i.gens().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn products_and_powers() {
        let r = ring();
        let x0 = Ideal::parse(&r, &["x0"]).unwrap();
        let y = Ideal::parse(&r, &["y0", "y1"]).unwrap();
        assert_eq!(strs(&ideal_product(&x0, &y).unwrap()), ["x0*y0", "x0*y1"]);
        let x = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let mut sq = strs(&ideal_power(&x, 2));
        sq.sort();
        assert_eq!(sq, ["x0*x1", "x0^2", "x1^2"]);
        assert_eq!(strs(&ideal_power(&x, 0)), ["1"]);
        assert_eq!(strs(&ideal_power(&x, 1)), ["x0", "x1"]);
        let mut cfcg = strs(&ideal_product(&x, &y).unwrap());
        cfcg.sort();
        assert_eq!(cfcg, ["x0*y0", "x0*y1", "x1*y0", "x1*y1"]);
        assert_eq!(strs(&ideal_sum(&x0, &y).unwrap()), ["x0", "y0", "y1"]);
    }

    #[test]
    fn intersections() {
        let r = ring();
        let i = Ideal::parse(&r, &["x0"]).unwrap();
        let j = Ideal::parse(&r, &["y0"]).unwrap();
        let k = ideal_intersect(&i, &j, &b()).unwrap();
        assert_eq!(strs(&k), ["x0*y0"]);
        let xy = Ideal::parse(&r, &["x0", "y0"]).unwrap();
        assert!(ideal_equal(&ideal_intersect(&xy, &i, &b()).unwrap(), &i, &b()).unwrap());
        assert!(ideal_intersect(&i, &Ideal::zero(&r), &b()).unwrap().is_zero());
    }

    #[test]
    fn gaussian_absorbs_intersection_11() {
        // c(fg) + c(f) ∩ c(g)^2 = c(fg) for m = n = 1
        let r = ring();
        let cfg = Ideal::parse(&r, &["x0*y0", "x0*y1 + x1*y0", "x1*y1"]).unwrap();
        let cf = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let cg2 = ideal_power(&Ideal::parse(&r, &["y0", "y1"]).unwrap(), 2);
        let lhs = ideal_sum(&cfg, &ideal_intersect(&cf, &cg2, &b()).unwrap()).unwrap();
        assert!(ideal_equal(&lhs, &cfg, &b()).unwrap());
    }

    #[test]
    fn kernels() {
        let r = ring();
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let t = |s: &str| Polynomial::parse(&r, s).unwrap();
        let k = kernel_of_monomial_map(
            &[t("x0*y0"), t("x0*y1"), t("x1*y0"), t("x1*y1")],
            &names(&["Q00", "Q01", "Q10", "Q11"]),
            &b(),
        )
        .unwrap();
        let minor = Ideal::parse(k.ring(), &["Q00*Q11 - Q01*Q10"]).unwrap();
        assert!(ideal_equal(&k, &minor, &b()).unwrap());

        let h = kernel_of_map(
            &[t("x0*y0"), t("x0*y1 + x1*y0"), t("x1*y1")],
            &names(&["H0", "H1", "H2"]),
            &b(),
        )
        .unwrap();
        assert!(h.is_zero());

        let k = kernel_of_monomial_map(&[t("x0^2"), t("x0")], &names(&["S1", "S2"]), &b()).unwrap();
        let expect = Ideal::parse(k.ring(), &["S1 - S2^2"]).unwrap();
        assert!(ideal_equal(&k, &expect, &b()).unwrap());

        assert!(kernel_of_map(&[t("x0")], &names(&["x1"]), &b()).is_err());
        assert!(kernel_of_map(&[t("x0")], &names(&["A", "B"]), &b()).is_err());
    }

    #[test]
    fn dimensions() {
        let q = PolyRing::new(["Q00", "Q01", "Q10", "Q11"], FieldSpec::Rationals, MonomialOrder::DegRevLex).unwrap();
        let minor = Ideal::parse(&q, &["Q00*Q11 - Q01*Q10"]).unwrap();
        assert_eq!(krull_dimension(&minor, &b()).unwrap(), 3);
        assert_eq!(krull_dimension(&Ideal::zero(&q), &b()).unwrap(), 4);
        assert!(matches!(krull_dimension(&Ideal::unit(&q), &b()), Err(Error::UnitIdeal)));
        let r = ring();
        // L(f,g) for m = n = 1
        let l = Ideal::parse(
            &r,
            &["x0*y0", "x0*y1 + x1*y0", "x1*y1", "x0^2", "x0*x1", "x1^2", "y0^2", "y0*y1", "y1^2"],
        )
        .unwrap();
        assert_eq!(krull_dimension(&l, &b()).unwrap(), 0);
        assert_eq!(codimension(&l, &b()).unwrap(), 4);
    }

    #[test]
    fn hilbert_functions() {
        let q = PolyRing::new(["Q00", "Q01", "Q10", "Q11"], FieldSpec::PrimeField(32003), MonomialOrder::DegRevLex)
            .unwrap();
        let art = Ideal::parse(&q, &["Q00*Q11 - Q01*Q10", "Q00", "Q01 + Q10", "Q11"]).unwrap();
        assert_eq!(hilbert_function(&art, 3, &b()).unwrap(), [1, 1, 0, 0]);
        let x = PolyRing::new(["x"], FieldSpec::Rationals, MonomialOrder::DegRevLex).unwrap();
        let xx = Ideal::parse(&x, &["x^2"]).unwrap();
        assert_eq!(hilbert_function(&xx, 4, &b()).unwrap(), [1, 1, 0, 0, 0]);
        let bad = Ideal::parse(&x, &["x^2 - x"]).unwrap();
        assert!(matches!(hilbert_function(&bad, 2, &b()), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn enumerates_monomials() {
        let mut n = 0;
        for_each_monomial_of_degree(4, 3, |e| {
            assert_eq!(e.iter().map(|&x| x as u32).sum::<u32>(), 3);
            n += 1;
        });
        assert_eq!(n, 20);
    }

    // exhaustive subset search, independent of the pruned recursion
    fn dimension_oracle(monos: &[Vec<u16>], arity: usize) -> usize {
        (0u32..1 << arity)
            .filter(|s| {
                monos.iter().all(|m| m.iter().enumerate().any(|(i, &e)| e > 0 && s & (1 << i) == 0))
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn mono_ring(arity: usize) -> Arc<PolyRing> {
        PolyRing::new((0..arity).map(|i| format!("v{i}")), FieldSpec::PrimeField(32003), MonomialOrder::DegRevLex)
            .unwrap()
    }

    fn mono_ideal(r: &Arc<PolyRing>, monos: &[Vec<u16>]) -> Ideal {
        Ideal::new(r, monos.iter().map(|e| Polynomial::monomial(r, r.scalar(1), Monomial::new(e)))).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dimension_matches_subset_search(
            monos in prop::collection::vec(prop::collection::vec(0u16..3, 6), 1..6)
        ) {
            prop_assume!(monos.iter().all(|m| m.iter().any(|&e| e > 0)));
            let ms: Vec<Monomial> = monos.iter().map(|e| Monomial::new(e)).collect();
            prop_assert_eq!(monomial_dimension(&ms, 6), dimension_oracle(&monos, 6));
        }

        #[test]
        fn monomial_intersection_matches_lcm_oracle(
            a in prop::collection::vec(prop::collection::vec(0u16..3, 3), 1..4),
            c in prop::collection::vec(prop::collection::vec(0u16..3, 3), 1..4),
        ) {
            let r = mono_ring(3);
            let (ia, ic) = (mono_ideal(&r, &a), mono_ideal(&r, &c));
            let lcms: Vec<Vec<u16>> = a.iter().flat_map(|x| c.iter().map(move |y| {
                x.iter().zip(y).map(|(p, q)| *p.max(q)).collect()
            })).collect();
            let inter = ideal_intersect(&ia, &ic, &b()).unwrap();
            prop_assert!(ideal_equal(&inter, &mono_ideal(&r, &lcms), &b()).unwrap());
            let prod = ideal_product(&ia, &ic).unwrap();
            prop_assert!(crate::groebner::ideal_contained(&prod, &inter, &b()).unwrap());
        }

        #[test]
        fn powers_multiply(
            a in prop::collection::vec(prop::collection::vec(0u16..2, 3), 1..3),
            e1 in 0u32..3, e2 in 0u32..3,
        ) {
            let r = mono_ring(3);
            let mut ia = mono_ideal(&r, &a);
            ia = ideal_sum(&ia, &Ideal::parse(&r, &["v0 + v1*v2"]).unwrap()).unwrap();
            let lhs = ideal_product(&ideal_power(&ia, e1), &ideal_power(&ia, e2)).unwrap();
            prop_assert!(ideal_equal(&lhs, &ideal_power(&ia, e1 + e2), &b()).unwrap());
        }

        #[test]
        fn artinian_totals_match_standard_monomials(k in 1u16..4, l in 1u16..4) {
            let r = mono_ring(2);
            let i = mono_ideal(&r, &[vec![k, 0], vec![0, l]]);
            let hf = hilbert_function(&i, (k + l) as u32, &b()).unwrap();
            prop_assert_eq!(*hf.last().unwrap(), 0);
            prop_assert_eq!(hf.iter().sum::<u64>(), (k as u64) * (l as u64));
        }
    }
}
