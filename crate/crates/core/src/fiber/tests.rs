use super::*;
use std::collections::HashSet;

const GF: FieldSpec = FieldSpec::PrimeField(32003);

fn b() -> Budget {
    Budget::default()
}

/// Number of distinct degree-`d` monomials in the multigraded images
/// `∏ x_{i_1} y_{j_1} ⋯`, counted by brute force over index tuples.
fn image_dimension(degrees: &[usize], d: usize) -> usize {
    let tuples = index_tuples(degrees);
    let mut seen = HashSet::new();
    let mut stack = vec![(0usize, 0usize, vec![vec![0u8; 16]; degrees.len()])];
    while let Some((start, k, acc)) = stack.pop() {
        if k == d {
            seen.insert(acc);
            continue;
        }
        for (t, idx) in tuples.iter().enumerate().skip(start) {
            let mut next = acc.clone();
            for (f, &i) in idx.iter().enumerate() {
                next[f][i] += 1;
            }
            stack.push((t, k + 1, next));
        }
    }
    seen.len()
}

#[test]
fn names_of_fiber_variables() {
    assert_eq!(q_name(&[0, 1]), "Q01");
    assert_eq!(q_name(&[1, 0, 1]), "Q101");
    assert_eq!(q_name(&[10, 2]), "Q10_2");
}

#[test]
fn segre_11() {
    let f = segre_fiber(1, 1, GF, &b()).unwrap();
    assert_eq!(f.ring().vars(), ["Q00", "Q01", "Q10", "Q11"]);
    let gb = f.toric().groebner(&b()).unwrap();
    assert_eq!(gb.len(), 1);
    assert_eq!(gb.basis()[0].to_string(), "Q01*Q10 - Q00*Q11");
    assert_eq!(f.linear_forms().len(), 3);
    assert_eq!(f.linear_forms()[1].to_string(), "Q01 + Q10");
    assert_eq!(artinian_hilbert_function(&f, &b()).unwrap(), [1, 1]);
    assert_eq!(fiber_reduction_number(&f, &b()).unwrap(), 1);
    assert_eq!(analytic_spread(&f, &b()).unwrap(), 3);
}

#[test]
fn segre_12_and_22() {
    let f = segre_fiber(1, 2, GF, &b()).unwrap();
    assert_eq!(f.toric().groebner(&b()).unwrap().len(), 3);
    assert!(ideal_equal(&two_minors(&f).unwrap(), f.toric(), &b()).unwrap());
    assert_eq!(fiber_reduction_number(&f, &b()).unwrap(), 1);
    assert_eq!(analytic_spread(&f, &b()).unwrap(), 4);
    let f = segre_fiber(2, 2, GF, &b()).unwrap();
    assert_eq!(fiber_reduction_number(&f, &b()).unwrap(), 2);
    assert_eq!(analytic_spread(&f, &b()).unwrap(), 5);
}

#[test]
fn degenerate_fiber() {
    let f = segre_fiber(0, 0, GF, &b()).unwrap();
    assert!(f.toric().is_zero());
    assert_eq!(analytic_spread(&f, &b()).unwrap(), 1);
    assert!(two_minors(&triple_fiber(0, 0, 0, GF, &b()).unwrap()).is_err());
}

#[test]
fn triple_fiber_111() {
    let f = triple_fiber(1, 1, 1, GF, &b()).unwrap();
    assert_eq!(f.ring().arity(), 8);
    assert_eq!(f.linear_forms().len(), 4);
    let hf = hilbert_function(f.toric(), 2, &b()).unwrap();
    assert_eq!(hf, [1, 8, image_dimension(&[1, 1, 1], 2) as u64]);
    // quadrics in the kernel: all quadrics minus the image
    assert_eq!(36 - hf[2], 9);
    assert!(f.is_binomial(&b()).unwrap());
    assert_eq!(analytic_spread(&f, &b()).unwrap(), 4);
    assert_eq!(artinian_hilbert_function(&f, &b()).unwrap(), [1, 4, 1]);
}

#[test]
fn toric_hilbert_function_matches_image_count() {
    for degrees in [vec![1, 2], vec![2, 2], vec![1, 1, 2]] {
        let f = FiberPresentation::product(&degrees, GF, &b()).unwrap();
        let hf = hilbert_function(f.toric(), 3, &b()).unwrap();
        for (d, &v) in hf.iter().enumerate() {
            assert_eq!(v as usize, image_dimension(&degrees, d), "{degrees:?} degree {d}");
        }
    }
}

#[test]
fn report_checks() {
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        assert!(check_minors_equal_kernel(m, n, GF, &b()).unwrap().passed());
        assert!(check_noether_normalization(m, n, GF, &b()).unwrap().passed());
    }
    assert!(check_minors_equal_kernel(0, 2, GF, &b()).is_err());
    let r = check_noether_normalization(1, 1, GF, &b()).unwrap();
    assert_eq!(r.claims[1].detail.as_deref(), Some("Hilbert function [1, 1]"));
    assert!(check_fiber_reduction(&[1, 1, 1], GF, &b()).unwrap().passed());
    assert!(check_fiber_reduction(&[2, 1], GF, &b()).unwrap().passed());
}

#[test]
fn multinomials() {
    assert_eq!(multinomial(&[1, 1, 1]), 6);
    assert_eq!(multinomial(&[2, 2]), 6);
    assert_eq!(multinomial(&[1, 2]), 3);
    assert_eq!(multinomial(&[0, 3]), 1);
}
