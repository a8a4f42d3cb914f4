//! Contents and Gaussian ideals of generic polynomials.
//!
//! For `f = Σ x_i t^i` and `g = Σ y_j t^j` with independent coefficient
//! variables, this module checks the content formula
//! `c(fg)·c(g)^m = c(f)·c(g)^(m+1)`, its sharpness in the exponent, reduction
//! numbers of `c(fg)` in `c(f)c(g)`, the primary decompositions of `c(fg)`
//! and `c(fgh)`, and the determinantal description of the component
//! `L(f,g)`.

mod hu;
mod structure;

use std::sync::Arc;

pub use hu::{hu_check, maximal_minors, HuData};
pub use structure::{gauss_lemma_probe, struct_content, struct_reduction_probe, StructureAlgebra};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{ideal_contained, ideal_equal, Budget, Ideal};
use crate::ideals::{codimension, ideal_intersect_all, ideal_power, ideal_product, ideal_product_all, ideal_sum_all};
use crate::poly::{MonomialOrder, PolyRing, UniPoly};
use crate::report::CheckReport;

/// Generic polynomials `f, g (, h)` over `k[X, Y (, Z)]`, degrees sorted
/// ascending.
#[derive(Clone, Debug)]
pub struct GenericSetup {
    degrees: Vec<usize>,
    ring: Arc<PolyRing>,
    polys: Vec<UniPoly>,
}

const LETTERS: [&str; 3] = ["x", "y", "z"];

impl GenericSetup {
    /// `f` of degree `min(m, n)` in `x`, `g` of degree `max(m, n)` in `y`.
    pub fn two(m: usize, n: usize, field: FieldSpec) -> Result<Self> {
        Self::build(vec![m, n], field)
    }

    pub fn three(m: usize, n: usize, p: usize, field: FieldSpec) -> Result<Self> {
        Self::build(vec![m, n, p], field)
    }

    fn build(mut degrees: Vec<usize>, field: FieldSpec) -> Result<Self> {
        degrees.sort_unstable();
        let vars: Vec<String> = degrees
            .iter()
            .zip(LETTERS)
            .flat_map(|(&d, l)| (0..=d).map(move |i| format!("{l}{i}")))
            .collect();
        let ring = PolyRing::new(vars, field, MonomialOrder::DegRevLex)?;
        let polys = degrees
            .iter()
            .zip(LETTERS)
            .map(|(&d, l)| {
                let names: Vec<String> = (0..=d).map(|i| format!("{l}{i}")).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                UniPoly::generic(&ring, &refs)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GenericSetup { degrees, ring, polys })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn f(&self) -> &UniPoly {
        &self.polys[0]
    }

    pub fn g(&self) -> &UniPoly {
        &self.polys[1]
    }

    pub fn h(&self) -> Option<&UniPoly> {
        self.polys.get(2)
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    fn require(&self, count: usize) -> Result<()> {
        if self.polys.len() == count {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "expected a {count}-polynomial setup, got {}",
                self.polys.len()
            )))
        }
    }

    fn product_of(&self, idx: &[usize]) -> Result<UniPoly> {
        let mut acc = self.polys[idx[0]].clone();
        for &i in &idx[1..] {
            acc = acc.mul(&self.polys[i])?;
        }
        Ok(acc)
    }

    /// Content of the product of the selected polynomials.
    pub fn content_of(&self, idx: &[usize]) -> Result<Ideal> {
        content(&self.product_of(idx)?)
    }

    /// `c(f)c(g)(c(h))`: product of the individual contents.
    pub fn content_product(&self) -> Result<Ideal> {
        let cs = self.polys.iter().map(content).collect::<Result<Vec<_>>>()?;
        ideal_product_all(&cs)
    }

    /// `c(fg)` or `c(fgh)`.
    pub fn gaussian(&self) -> Result<Ideal> {
        let idx: Vec<usize> = (0..self.polys.len()).collect();
        self.content_of(&idx)
    }
}

/// Ideal generated by the coefficients; `c(0) = (0)`.
pub fn content(u: &UniPoly) -> Result<Ideal> {
    Ideal::new(u.ring(), u.coeffs().iter().cloned())
}

/// Content formula `c(fg)c(g)^m = c(f)c(g)^(m+1)` and the form obtained by
/// multiplying with `c(f)^m`, each as an equality of ideals.
pub fn check_dedekind_mertens(s: &GenericSetup, budget: &Budget) -> Result<CheckReport> {
    s.require(2)?;
    let m = s.degrees()[0] as u32;
    let (cf, cg) = (content(s.f())?, content(s.g())?);
    let cfg = s.gaussian()?;
    let cfcg = ideal_product(&cf, &cg)?;
    let mut report = CheckReport::new();
    report.check("c(fg) ⊆ c(f)c(g)", || ideal_contained(&cfg, &cfcg, budget))?;
    report.check("c(fg)·c(g)^m = c(f)·c(g)^(m+1)", || {
        let lhs = ideal_product(&cfg, &ideal_power(&cg, m))?;
        let rhs = ideal_product(&cf, &ideal_power(&cg, m + 1))?;
        ideal_equal(&lhs, &rhs, budget)
    })?;
    report.check("c(fg)·[c(f)c(g)]^m = c(f)c(g)·[c(f)c(g)]^m", || {
        let pm = ideal_power(&cfcg, m);
        let lhs = ideal_product(&cfg, &pm)?;
        let rhs = ideal_product(&cfcg, &pm)?;
        ideal_equal(&lhs, &rhs, budget)
    })?;
    Ok(report)
}

/// The content formula with exponent `m - 1` in place of `m` must fail
/// (`m ≥ 1`).
pub fn check_content_sharpness(s: &GenericSetup, budget: &Budget) -> Result<CheckReport> {
    s.require(2)?;
    let m = s.degrees()[0] as u32;
    if m == 0 {
        return Err(Error::InvalidArgument("sharpness needs deg f ≥ 1".into()));
    }
    let (cf, cg) = (content(s.f())?, content(s.g())?);
    let cfg = s.gaussian()?;
    let mut report = CheckReport::new();
    report.check("c(fg)·c(g)^(m-1) ≠ c(f)·c(g)^m", || {
        let lhs = ideal_product(&cfg, &ideal_power(&cg, m - 1))?;
        let rhs = ideal_product(&cf, &ideal_power(&cg, m))?;
        Ok(!ideal_equal(&lhs, &rhs, budget)?)
    })?;
    Ok(report)
}

/// `I^(r+1) = J·I^r`. Errors with [`Error::NotContained`] unless `J ⊆ I`.
pub fn is_reduction(j: &Ideal, i: &Ideal, r: u32, budget: &Budget) -> Result<bool> {
    if !ideal_contained(j, i, budget)? {
        return Err(Error::NotContained);
    }
    reduction_holds(j, i, r, budget)
}

fn reduction_holds(j: &Ideal, i: &Ideal, r: u32, budget: &Budget) -> Result<bool> {
    let ir = ideal_power(i, r);
    ideal_equal(&ideal_product(&ir, i)?, &ideal_product(j, &ir)?, budget)
}

/// Least `r ≤ r_max` with `I^(r+1) = J·I^r`, or `None` if there is none.
pub fn reduction_number(j: &Ideal, i: &Ideal, r_max: u32, budget: &Budget) -> Result<Option<u32>> {
    if !ideal_contained(j, i, budget)? {
        return Err(Error::NotContained);
    }
    for r in 0..=r_max {
        if reduction_holds(j, i, r, budget)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Reduction number of `c(fg)` (or `c(fgh)`) in the product of contents,
/// checked as an exact value: equality at `expected` and inequality at
/// `expected - 1`.
pub fn check_reduction_number(s: &GenericSetup, expected: u32, budget: &Budget) -> Result<CheckReport> {
    let j = s.gaussian()?;
    let i = s.content_product()?;
    let mut report = CheckReport::new();
    if !ideal_contained(&j, &i, budget)? {
        return Err(Error::NotContained);
    }
    report.check(format!("I^{} = J·I^{}", expected + 1, expected), || reduction_holds(&j, &i, expected, budget))?;
    if expected > 0 {
        report.check(format!("I^{} ≠ J·I^{}", expected, expected - 1), || {
            Ok(!reduction_holds(&j, &i, expected - 1, budget)?)
        })?;
    }
    Ok(report)
}

/// `L(a, b) = c(ab) + c(a)^(deg b + 1) + c(b)^(deg a + 1)`.
pub fn linkage_pair(a: &UniPoly, b: &UniPoly) -> Result<Ideal> {
    let (da, db) = (degree(a)?, degree(b)?);
    let cab = content(&a.mul(b)?)?;
    let pa = ideal_power(&content(a)?, db + 1);
    let pb = ideal_power(&content(b)?, da + 1);
    ideal_sum_all([&cab, &pa, &pb])
}

fn degree(u: &UniPoly) -> Result<u32> {
    u.degree().map(|d| d as u32).ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))
}

/// `L(f, g)` of a two-polynomial setup.
pub fn l2(s: &GenericSetup) -> Result<Ideal> {
    s.require(2)?;
    linkage_pair(s.f(), s.g())
}

/// The seven-summand `L(f, g, h)`:
/// `c(fgh) + c(fg)^(p+1) + c(fh)^(n+1) + c(gh)^(m+1) + c(f)^(n+p+1) + c(g)^(m+p+1) + c(h)^(m+n+1)`.
pub fn l3(s: &GenericSetup) -> Result<Ideal> {
    s.require(3)?;
    let d = s.degrees();
    let (m, n, p) = (d[0] as u32, d[1] as u32, d[2] as u32);
    let parts = [
        s.content_of(&[0, 1, 2])?,
        ideal_power(&s.content_of(&[0, 1])?, p + 1),
        ideal_power(&s.content_of(&[0, 2])?, n + 1),
        ideal_power(&s.content_of(&[1, 2])?, m + 1),
        ideal_power(&content(s.f())?, n + p + 1),
        ideal_power(&content(s.g())?, m + p + 1),
        ideal_power(&content(s.h().expect("three polynomials"))?, m + n + 1),
    ];
    ideal_sum_all(&parts)
}

/// `c(fg) = c(f) ∩ c(g) ∩ L(f,g)` and `codim L(f,g) = m + n + 2`.
pub fn check_primary_decomposition2(s: &GenericSetup, budget: &Budget) -> Result<CheckReport> {
    s.require(2)?;
    let (m, n) = (s.degrees()[0], s.degrees()[1]);
    let l = l2(s)?;
    let mut report = CheckReport::new();
    report.check("c(f) ∩ c(g) ∩ L(f,g) = c(fg)", || {
        let inter = ideal_intersect_all([&content(s.f())?, &content(s.g())?, &l], budget)?;
        ideal_equal(&inter, &s.gaussian()?, budget)
    })?;
    report.check_detail("codim L(f,g) = m + n + 2", || {
        let c = codimension(&l, budget)?;
        Ok((c == m + n + 2, format!("codim {c}")))
    })?;
    Ok(report)
}

/// `c(fgh) = c(f) ∩ c(g) ∩ c(h) ∩ L(f,g) ∩ L(f,h) ∩ L(g,h) ∩ L(f,g,h)`.
pub fn check_primary_decomposition3(s: &GenericSetup, budget: &Budget) -> Result<CheckReport> {
    s.require(3)?;
    let (f, g, h) = (s.f(), s.g(), s.h().expect("three polynomials"));
    let parts = [
        content(f)?,
        content(g)?,
        content(h)?,
        linkage_pair(f, g)?,
        linkage_pair(f, h)?,
        linkage_pair(g, h)?,
        l3(s)?,
    ];
    let mut report = CheckReport::new();
    report.check("c(f) ∩ c(g) ∩ c(h) ∩ L(f,g) ∩ L(f,h) ∩ L(g,h) ∩ L(f,g,h) = c(fgh)", || {
        let inter = ideal_intersect_all(&parts, budget)?;
        ideal_equal(&inter, &s.gaussian()?, budget)
    })?;
    Ok(report)
}

/// Smaller identities the three-polynomial decomposition is assembled from:
/// the two-polynomial decomposition for each pair, and the content formula
/// for each split `c(u·vw)c(u)^(deg vw) = c(vw)c(u)^(deg vw + 1)`.
pub fn check_decomposition3_steps(s: &GenericSetup, budget: &Budget) -> Result<CheckReport> {
    s.require(3)?;
    let polys = s.polys();
    let names = ["f", "g", "h"];
    let mut report = CheckReport::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let (u, v) = (&polys[a], &polys[b]);
        let stmt = format!(
            "c({0}) ∩ c({1}) ∩ L({0},{1}) = c({0}{1})",
            names[a], names[b]
        );
        report.check(stmt, || {
            let inter = ideal_intersect_all([&content(u)?, &content(v)?, &linkage_pair(u, v)?], budget)?;
            ideal_equal(&inter, &content(&u.mul(v)?)?, budget)
        })?;
    }
    for single in 0..3 {
        let rest: Vec<usize> = (0..3).filter(|&k| k != single).collect();
        let vw = s.product_of(&rest)?;
        let d = degree(&vw)?;
        let stmt = format!(
            "c(fgh)·c({0})^{d} = c({1}{2})·c({0})^{e}",
            names[single],
            names[rest[0]],
            names[rest[1]],
            e = d + 1
        );
        report.check(stmt, || {
            let cu = content(&polys[single])?;
            let lhs = ideal_product(&s.gaussian()?, &ideal_power(&cu, d))?;
            let rhs = ideal_product(&content(&vw)?, &ideal_power(&cu, d + 1))?;
            ideal_equal(&lhs, &rhs, budget)
        })?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
