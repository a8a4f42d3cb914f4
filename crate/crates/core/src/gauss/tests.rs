use super::*;
use crate::groebner::ideal_member;
use crate::poly::Polynomial;

const GF: FieldSpec = FieldSpec::PrimeField(32003);

fn b() -> Budget {
    Budget::default()
}

fn gens(i: &Ideal) -> Vec<String> {
    let mut v: Vec<String> = i.gens().iter().map(ToString::to_string).collect();
    v.sort();
    v
}

#[test]
fn setup_normalizes_degrees() {
    let s = GenericSetup::two(3, 1, GF).unwrap();
    assert_eq!(s.degrees(), [1, 3]);
    assert_eq!(s.ring().vars(), ["x0", "x1", "y0", "y1", "y2", "y3"]);
    let t = GenericSetup::three(1, 1, 1, GF).unwrap();
    assert_eq!(t.ring().arity(), 6);
    assert!(t.h().is_some());
}

#[test]
fn contents_of_generic_polynomials() {
    let s = GenericSetup::two(2, 2, GF).unwrap();
    assert_eq!(gens(&content(s.f()).unwrap()), ["x0", "x1", "x2"]);
    let s = GenericSetup::two(1, 1, GF).unwrap();
    assert_eq!(gens(&s.gaussian().unwrap()), ["x0*y0", "x1*y0 + x0*y1", "x1*y1"]);
    let one = UniPoly::constant(Polynomial::one(s.ring()));
    assert!(content(&one).unwrap().groebner(&b()).unwrap().is_unit());
    let zero = UniPoly::constant(Polynomial::zero(s.ring()));
    assert!(content(&zero).unwrap().is_zero());
}

#[test]
fn content_formula_small() {
    for (m, n) in [(1, 1), (1, 2)] {
        let s = GenericSetup::two(m, n, GF).unwrap();
        assert!(check_dedekind_mertens(&s, &b()).unwrap().passed(), "({m},{n})");
    }
    let s = GenericSetup::two(1, 1, FieldSpec::Rationals).unwrap();
    assert!(check_dedekind_mertens(&s, &b()).unwrap().passed());
}

#[test]
fn content_formula_exponent_is_sharp() {
    let s = GenericSetup::two(2, 2, GF).unwrap();
    assert!(check_content_sharpness(&s, &b()).unwrap().passed());
    let s0 = GenericSetup::two(0, 2, GF).unwrap();
    assert!(check_content_sharpness(&s0, &b()).is_err());
}

#[test]
fn reductions_of_gaussian_ideal() {
    let s = GenericSetup::two(1, 1, GF).unwrap();
    let (j, i) = (s.gaussian().unwrap(), s.content_product().unwrap());
    assert!(is_reduction(&j, &i, 1, &b()).unwrap());
    assert!(!is_reduction(&j, &i, 0, &b()).unwrap());
    assert!(is_reduction(&i, &i, 0, &b()).unwrap());
    assert_eq!(reduction_number(&i, &i, 3, &b()).unwrap(), Some(0));
    assert!(matches!(is_reduction(&i, &j, 1, &b()), Err(Error::NotContained)));
    // x0*y1 lies in I but not in J
    let p = Polynomial::parse(s.ring(), "x0*y1").unwrap();
    assert!(ideal_member(&p, &i, &b()).unwrap());
    assert!(!ideal_member(&p, &j, &b()).unwrap());

    let s = GenericSetup::two(1, 2, GF).unwrap();
    let (j, i) = (s.gaussian().unwrap(), s.content_product().unwrap());
    assert_eq!(reduction_number(&j, &i, 3, &b()).unwrap(), Some(1));
    assert!(check_reduction_number(&s, 1, &b()).unwrap().passed());
}

#[test]
fn linkage_components() {
    let s = GenericSetup::two(1, 1, GF).unwrap();
    let l = l2(&s).unwrap();
    let cf2 = ideal_power(&content(s.f()).unwrap(), 2);
    let cg2 = ideal_power(&content(s.g()).unwrap(), 2);
    let expected = ideal_sum_all([&s.gaussian().unwrap(), &cf2, &cg2]).unwrap();
    assert!(ideal_equal(&l, &expected, &b()).unwrap());
    assert_eq!(codimension(&l, &b()).unwrap(), 4);
    assert!(l3(&s).is_err());
    let t = GenericSetup::three(1, 1, 1, GF).unwrap();
    assert!(l3(&t).unwrap().gens().len() >= 7);
    assert!(l2(&t).is_err());
}

#[test]
fn two_factor_decomposition() {
    for (m, n) in [(1, 1), (1, 2)] {
        let s = GenericSetup::two(m, n, GF).unwrap();
        let r = check_primary_decomposition2(&s, &b()).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn banded_matrix_identities() {
    let s = GenericSetup::two(1, 1, GF).unwrap();
    let hu = HuData::new(&s).unwrap();
    assert_eq!(hu.phi.len(), 2);
    assert_eq!(hu.phi[0].len(), 3);
    let xphi: Vec<String> = hu.x_phi().unwrap().iter().map(ToString::to_string).collect();
    let cfg: Vec<String> = s.gaussian().unwrap().gens().iter().map(ToString::to_string).collect();
    assert_eq!(xphi, cfg);
    let minors = maximal_minors(&hu.phi).unwrap();
    assert_eq!(minors.len(), 3);
    let sq = Ideal::parse(s.ring(), &["y0^2", "y0*y1", "y1^2"]).unwrap();
    assert!(ideal_equal(&Ideal::new(s.ring(), minors).unwrap(), &sq, &b()).unwrap());
    for (m, n) in [(1, 1), (1, 2)] {
        let s = GenericSetup::two(m, n, GF).unwrap();
        assert!(hu_check(&s, &b()).unwrap().passed(), "({m},{n})");
    }
}

#[test]
fn minors_of_numeric_matrix() {
    let r = PolyRing::new(["a"], FieldSpec::Rationals, MonomialOrder::DegRevLex).unwrap();
    let c = |v: i64| Polynomial::constant(&r, r.scalar(v));
    let m = vec![vec![c(1), c(2), c(3)], vec![c(4), c(5), c(6)], vec![c(7), c(8), c(10)]];
    assert_eq!(maximal_minors(&m).unwrap(), vec![c(-3)]);
    assert!(maximal_minors(&m[..2].iter().map(|r| r[..1].to_vec()).collect::<Vec<_>>()).is_err());
}

#[test]
fn structure_algebra_matches_polynomial_case() {
    let s = GenericSetup::two(1, 1, GF).unwrap();
    let a = StructureAlgebra::truncated_polynomial(s.ring(), 3).unwrap();
    assert!(a.is_associative().unwrap());
    let u = a.generic_element(&["x0", "x1"]).unwrap();
    let v = a.generic_element(&["y0", "y1"]).unwrap();
    let uv = a.multiply(&u, &v).unwrap();
    assert_eq!(uv, s.f().mul(s.g()).unwrap().coeffs().to_vec());
    assert!(ideal_equal(&struct_content(&a, &u).unwrap(), &content(s.f()).unwrap(), &b()).unwrap());
    assert_eq!(struct_reduction_probe(&a, &u, &v, 3, &b()).unwrap(), Some(1));
    let e1 = a.generic_element(&[]).unwrap();
    assert!(struct_content(&a, &e1).unwrap().is_zero());
    let mut unit = e1.clone();
    unit[1] = Polynomial::one(s.ring());
    assert!(struct_content(&a, &unit).unwrap().groebner(&b()).unwrap().is_unit());
    assert!(struct_content(&a, &u[..2]).is_err());
    assert!(!a.unit_condition(&b()).unwrap());
    assert_eq!(gauss_lemma_probe(&a, 1).unwrap().map(|_| ()), Some(()));
}

#[test]
fn cyclic_group_algebra() {
    let s = GenericSetup::two(1, 1, GF).unwrap();
    let a = StructureAlgebra::cyclic_group(s.ring(), 2).unwrap();
    assert!(a.is_associative().unwrap());
    assert!(a.unit_condition(&b()).unwrap());
    let (x, y) = gauss_lemma_probe(&a, 1).unwrap().expect("zero divisor");
    let prod: Vec<i64> = vec![x[0] * y[0] + x[1] * y[1], x[0] * y[1] + x[1] * y[0]];
    assert_eq!(prod, [0, 0]);
    let u = a.generic_element(&["x0", "x1"]).unwrap();
    let v = a.generic_element(&["y0", "y1"]).unwrap();
    assert_eq!(struct_reduction_probe(&a, &u, &v, 2, &b()).unwrap(), None);
}

#[test]
fn nonassociative_table_detected() {
    let r = PolyRing::new(["a"], GF, MonomialOrder::DegRevLex).unwrap();
    let (z, o) = (Polynomial::zero(&r), Polynomial::one(&r));
    // (e1 e0) e1 = e1 but e1 (e0 e1) = e0
    let table = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![o.clone(), z.clone()], vec![o.clone(), z.clone()]],
    ];
    let a = StructureAlgebra::new(&r, vec!["e0".into(), "e1".into()], table).unwrap();
    assert!(!a.is_associative().unwrap());
    assert!(StructureAlgebra::new(&r, vec!["e0".into()], vec![]).is_err());
}
