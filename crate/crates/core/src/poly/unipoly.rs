use std::sync::Arc;

use super::ring::same_ring;
use super::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// A polynomial in an auxiliary variable `t` whose coefficients are
/// polynomials of `ring`. Index `i` holds the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    ring: Arc<PolyRing>,
    coeffs: Vec<Polynomial>,
}

impl UniPoly {
    pub fn new(ring: &Arc<PolyRing>, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.iter().any(|c| !same_ring(c.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let mut u = UniPoly { ring: ring.clone(), coeffs };
        u.trim();
        Ok(u)
    }

    /// `Σ vars[i] t^i` for the named ring variables.
    pub fn generic(ring: &Arc<PolyRing>, vars: &[&str]) -> Result<Self> {
        let coeffs = vars.iter().map(|v| ring.var_named(v)).collect::<Result<_>>()?;
        UniPoly::new(ring, coeffs)
    }

    pub fn constant(p: Polynomial) -> Self {
        let ring = p.ring().clone();
        let mut u = UniPoly { ring, coeffs: vec![p] };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Polynomial::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly { ring: self.ring.clone(), coeffs: Vec::new() });
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![Polynomial::zero(&self.ring); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::new(&self.ring, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::MonomialOrder;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(["x0", "x1", "y0", "y1", "z0", "z1"], FieldSpec::Rationals, MonomialOrder::DegRevLex)
            .unwrap()
    }

    #[test]
    fn generic_linear_product() {
        let r = ring();
        let f = UniPoly::generic(&r, &["x0", "x1"]).unwrap();
        let g = UniPoly::generic(&r, &["y0", "y1"]).unwrap();
        let fg = f.mul(&g).unwrap();
        let v = |n: &str| r.var_named(n).unwrap();
        assert_eq!(
            fg.coeffs(),
            &[&v("x0") * &v("y0"), &(&v("x0") * &v("y1")) + &(&v("x1") * &v("y0")), &v("x1") * &v("y1")]
        );
        assert_eq!(fg.degree(), Some(2));
    }

    #[test]
    fn identity_and_zero() {
        let r = ring();
        let f = UniPoly::generic(&r, &["x0", "x1"]).unwrap();
        let one = UniPoly::constant(Polynomial::one(&r));
        let zero = UniPoly::new(&r, vec![]).unwrap();
        assert_eq!(f.mul(&one).unwrap(), f);
        assert!(f.mul(&zero).unwrap().is_zero());
        assert_eq!(zero.degree(), None);
    }

    #[test]
    fn product_is_commutative_and_associative() {
        let r = ring();
        let f = UniPoly::generic(&r, &["x0", "x1", "y1"]).unwrap();
        let g = UniPoly::generic(&r, &["y0", "y1"]).unwrap();
        let h = UniPoly::generic(&r, &["z0", "x0", "z1"]).unwrap();
        assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
    }
}
