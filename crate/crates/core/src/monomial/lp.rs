//! Exact feasibility of `A x = b, x ≥ 0` by the two-phase simplex method
//! (phase one only) with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A nonnegative solution of `A x = b` if one exists. `b` must be
/// nonnegative; rows of `a` all have the same length.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    debug_assert!(b.iter().all(|v| !v.is_negative()));

    // a row already holding a unit column with that row's 1 serves as its own basis
    let mut basis = vec![usize::MAX; rows];
    for c in 0..cols {
        let mut hit = None;
        let mut unit = true;
        for (r, row) in a.iter().enumerate() {
            if row[c].is_zero() {
                continue;
            }
            if row[c].is_one() && hit.is_none() {
                hit = Some(r);
            } else {
                unit = false;
                break;
            }
        }
        if let (true, Some(r)) = (unit, hit) {
            if basis[r] == usize::MAX {
                basis[r] = c;
            }
        }
    }
    let artificial: Vec<usize> = (0..rows).filter(|&r| basis[r] == usize::MAX).collect();
    let width = cols + artificial.len();
    let mut t: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| {
            let mut v = row.clone();
            v.resize(width, BigRational::zero());
            v
        })
        .collect();
    let mut rhs = b.to_vec();
    for (k, &r) in artificial.iter().enumerate() {
        t[r][cols + k] = BigRational::one();
        basis[r] = cols + k;
    }

    // phase-one objective w = Σ artificials = obj_rhs − Σ obj[c] x_c
    let mut obj = vec![BigRational::zero(); width];
    let mut obj_rhs = BigRational::zero();
    for &r in &artificial {
        for c in 0..cols {
            obj[c] += &t[r][c];
        }
        obj_rhs += &rhs[r];
    }

    while let Some(enter) = (0..width).find(|&c| obj[c].is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if !t[r][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[r] / &t[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // the objective is bounded below by 0, so some row always blocks
        let (pr, _) = leave?;
        let pivot = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v /= &pivot;
        }
        rhs[pr] /= &pivot;
        let prow = t[pr].clone();
        let prhs = rhs[pr].clone();
        for r in 0..rows {
            if r == pr || t[r][enter].is_zero() {
                continue;
            }
            let f = t[r][enter].clone();
            for (c, pv) in prow.iter().enumerate() {
                if !pv.is_zero() {
                    t[r][c] -= &f * pv;
                }
            }
            rhs[r] -= &f * &prhs;
        }
        let f = obj[enter].clone();
        for (c, pv) in prow.iter().enumerate() {
            if !pv.is_zero() {
                obj[c] -= &f * pv;
            }
        }
        obj_rhs -= &f * &prhs;
        basis[pr] = enter;
    }

    if !obj_rhs.is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in basis.iter().enumerate() {
        if c < cols {
            x[c] = rhs[r].clone();
        }
    }
    Some(x)
}

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
