use std::collections::HashSet;

use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::groebner::{ideal_member, Budget};
use crate::par::Parallelism;

const GF: FieldSpec = FieldSpec::PrimeField(32003);

fn ring(n: usize) -> Arc<PolyRing> {
    PolyRing::new((0..n).map(|i| format!("a{i}")), GF, MonomialOrder::DegRevLex).unwrap()
}

fn ideal(exps: &[&[u16]]) -> MonomialIdeal {
    let r = ring(exps[0].len());
    MonomialIdeal::from_exponents(&r, &exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn exps(i: &MonomialIdeal) -> Vec<Vec<u16>> {
    i.gens().iter().map(|g| g.exponents().to_vec()).collect()
}

fn sorted(mut v: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    v.sort();
    v
}

#[test]
fn constructors() {
    let a = ideal(&[&[1, 1], &[2, 1], &[0, 3]]);
    assert_eq!(sorted(exps(&a)), [vec![0, 3], vec![1, 1]]);
    assert!(is_antichain(a.gens()));

    let p = edge_ideal(&Graph::path(3).unwrap(), "x", GF).unwrap();
    assert_eq!(p.to_string(), "(x0*x1, x1*x2)");

    let prod = product_ideal(&[1, 1, 1], GF).unwrap();
    assert_eq!(prod.gens().len(), 8);
    assert_eq!(prod.equigenerated_degree(), Some(3));
    assert_eq!(product_ideal(&[1, 1, 2], GF).unwrap().gens().len(), 12);

    let i = MonomialIdeal::new(&PolyRing::new(["x0", "x1"], GF, MonomialOrder::DegRevLex).unwrap(), [Monomial::new(&[1, 1])]).unwrap();
    let j = MonomialIdeal::new(&PolyRing::new(["y0", "y1"], GF, MonomialOrder::DegRevLex).unwrap(), [Monomial::new(&[1, 1])]).unwrap();
    let ij = join(&i, &j).unwrap();
    assert_eq!(ij.ring().vars(), ["x0", "x1", "y0", "y1"]);
    assert_eq!(
        sorted(exps(&ij)),
        sorted(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]])
    );
    assert!(matches!(join(&i, &i), Err(Error::OverlappingVariables(_))));
    let cor = join(&i, &zero_ideal("y", 2, GF).unwrap()).unwrap();
    assert_eq!(cor.gens().len(), 5);
}

#[test]
fn graphs() {
    let g = Graph::parse(r#"{"vertices": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}"#).unwrap();
    assert_eq!(g, Graph::cycle(4).unwrap());
    let t = Graph::parse("# square\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    assert_eq!(t, g);
    assert!(Graph::parse("0 0").is_err());
    assert!(Graph::parse("0 1 2").is_err());
    assert!(Graph::parse(r#"{"vertices": 2, "edges": [[0,2]]}"#).is_err());
    assert!(Graph::parse("a b").is_err());
    assert_eq!(Graph::parse("1 0 0 1").unwrap().edges().count(), 1);
}

#[test]
fn powers() {
    let a = ideal(&[&[2, 0], &[0, 2]]);
    assert_eq!(sorted(exps(&monomial_power(&a, 2))), [vec![0, 4], vec![2, 2], vec![4, 0]]);
    assert_eq!(monomial_power(&a, 1), a);
    assert_eq!(exps(&monomial_power(&a, 0)), [vec![0, 0]]);
    let p2 = monomial_power(&product_ideal(&[1, 1, 1], GF).unwrap(), 2);
    assert!(p2.gens().iter().all(|g| g.degree() == 6));
    let gens = product_ideal(&[1, 1, 1], GF).unwrap();
    let mut sums = HashSet::new();
    for x in gens.gens() {
        for y in gens.gens() {
            sums.insert(x.mul(y).exponents().to_vec());
        }
    }
    assert_eq!(p2.gens().len(), sums.len());
}

#[test]
fn newton_polyhedron_membership() {
    let a = ideal(&[&[2, 0], &[0, 2]]);
    let np = NewtonPolyhedron::of(&a).unwrap();
    let half = BigRational::new(1.into(), 2.into());
    assert_eq!(np_certificate(&[1, 1], 1, &np).unwrap(), Some(vec![half.clone(), half]));
    assert!(!np_member(&[1, 0], 1, &np).unwrap());
    assert!(np_member(&[2, 0], 1, &np).unwrap());
    assert!(np_member(&[0, 2], 1, &np).unwrap());
    assert!(np_member(&[2, 2], 2, &np).unwrap());
    assert!(!np_member(&[2, 1], 2, &np).unwrap());
    assert!(np_member(&[1], 1, &np).is_err());
    assert!(NewtonPolyhedron::new(2, vec![]).is_err());
}

#[test]
fn brute_force_membership() {
    let a = ideal(&[&[2, 0], &[0, 2]]);
    assert!(brute_force_ic_member(&[1, 1], 1, &a, 2));
    assert!(!brute_force_ic_member(&[1, 1], 1, &a, 1));
    assert!(!brute_force_ic_member(&[1, 0], 1, &a, 10));
    assert!(brute_force_ic_member(&[2, 0], 1, &a, 1));
}

#[test]
fn closures() {
    let a = ideal(&[&[2, 0], &[0, 2]]);
    let ic = integral_closure_power(&a, 1).unwrap();
    assert_eq!(sorted(exps(&ic)), [vec![0, 2], vec![1, 1], vec![2, 0]]);
    assert_eq!(
        is_normal_up_to(&a, 1).unwrap(),
        Normality::NotNormal { q: 1, witness: Monomial::new(&[1, 1]) }
    );
    let edge = edge_ideal(&Graph::path(2).unwrap(), "x", GF).unwrap();
    assert_eq!(integral_closure_power(&edge, 1).unwrap(), edge);
    assert_eq!(integral_closure_power(&edge, 3).unwrap(), monomial_power(&edge, 3));
    let prod = product_ideal(&[1, 1, 1], GF).unwrap();
    assert_eq!(is_normal_up_to(&prod, 2).unwrap(), Normality::Normal { up_to: 2 });
    assert!(is_normal_up_to(&prod, 0).is_err());
    // two disjoint triangles: the square of x0⋯x5 is a product of six edges
    let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    let tri = edge_ideal(&g, "x", GF).unwrap();
    assert_eq!(
        is_normal_up_to(&tri, 3).unwrap(),
        Normality::NotNormal { q: 3, witness: Monomial::new(&[1; 6]) }
    );
    assert!(is_normal_up_to(&edge_ideal(&Graph::cycle(3).unwrap(), "x", GF).unwrap(), 3).unwrap().is_normal());
}

#[test]
fn sequential_and_parallel_agree() {
    let c5 = edge_ideal(&Graph::cycle(5).unwrap(), "x", GF).unwrap();
    for q in 1..=2 {
        assert_eq!(
            integral_closure_power_with(&c5, q, Parallelism::Sequential).unwrap(),
            integral_closure_power_with(&c5, q, Parallelism::Parallel).unwrap()
        );
    }
}

fn monomial_ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u16..4, n), 1..=5).prop_map(move |gens| {
            let gens: Vec<Vec<u16>> = gens.into_iter().map(|mut g| {
                if g.iter().all(|&e| e == 0) {
                    g[0] = 1;
                }
                g
            }).collect();
            MonomialIdeal::from_exponents(&ring(n), &gens).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn power_test_never_contradicts_lp(i in monomial_ideal_strategy(), q in 1u32..=3, seed in prop::collection::vec(0u16..8, 4)) {
        let np = NewtonPolyhedron::of(&i).unwrap();
        let a: Vec<u16> = seed[..i.arity()].to_vec();
        if brute_force_ic_member(&a, q, &i, 6) {
            prop_assert!(np_member(&a, q, &np).unwrap());
        }
        // generators of I^q are members by both tests
        for g in monomial_power(&i, q).gens().iter().take(5) {
            prop_assert!(brute_force_ic_member(g.exponents(), q, &i, 1));
            prop_assert!(np_member(g.exponents(), q, &np).unwrap());
        }
    }

    #[test]
    fn closure_contains_power_and_is_idempotent(i in monomial_ideal_strategy(), q in 1u32..=2) {
        let ic = integral_closure_power(&i, q).unwrap();
        prop_assert!(is_antichain(ic.gens()));
        for g in monomial_power(&i, q).gens() {
            prop_assert!(ic.contains(g.exponents()));
        }
        prop_assert_eq!(integral_closure_power(&ic, 1).unwrap(), ic.clone());
        let np = NewtonPolyhedron::of(&i).unwrap();
        for g in ic.gens() {
            prop_assert!(np_member(g.exponents(), q, &np).unwrap());
        }
    }

    #[test]
    fn power_membership_matches_groebner(i in monomial_ideal_strategy(), q in 1u32..=2, seed in prop::collection::vec(0u16..6, 4)) {
        let p = monomial_power(&i, q);
        let a = &seed[..i.arity()];
        let poly = Polynomial::monomial(i.ring(), i.ring().scalar(1), Monomial::new(a));
        prop_assert_eq!(p.contains(a), ideal_member(&poly, &p.to_ideal(), &Budget::default()).unwrap());
    }
}
