//! Special fibers of products of contents of generic polynomials.
//!
//! The fiber of `c(f)c(g)` is the Segre ring `k[x_i y_j]`, presented as
//! `k[Q_ij]` modulo a toric ideal; for three polynomials it is
//! `k[x_i y_j z_k]`. The linear forms `ℓ_q = Σ_{i+j=q} Q_ij` lift the
//! coefficients of `fg`, and the Hilbert function of the quotient by them
//! gives the reduction number.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::gauss::{check_reduction_number, GenericSetup};
use crate::groebner::{ideal_equal, Budget, Ideal};
use crate::ideals::{codimension, hilbert_function, ideal_sum, kernel_of_map, krull_dimension};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::report::CheckReport;

const LETTERS: [&str; 3] = ["x", "y", "z"];

/// `k[Q]/P` together with the linear forms `ℓ_q`.
#[derive(Clone, Debug)]
pub struct FiberPresentation {
    degrees: Vec<usize>,
    indices: Vec<Vec<usize>>,
    toric: Ideal,
    linear_forms: Vec<Polynomial>,
}

/// `Q` followed by the indices, separated by `_` once any index has two
/// digits.
pub fn q_name(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(ToString::to_string).collect();
    if idx.iter().all(|&i| i < 10) {
        format!("Q{}", parts.concat())
    } else {
        format!("Q{}", parts.join("_"))
    }
}

fn index_tuples(degrees: &[usize]) -> Vec<Vec<usize>> {
    degrees.iter().fold(vec![Vec::new()], |acc, &d| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..=d).map(move |i| {
                    let mut t = prefix.clone();
                    t.push(i);
                    t
                })
            })
            .collect()
    })
}

impl FiberPresentation {
    /// Fiber of `c(f_1)⋯c(f_s)` for generic `f_i` of the given degrees
    /// (in the given order).
    pub fn product(degrees: &[usize], field: FieldSpec, budget: &Budget) -> Result<Self> {
        if degrees.is_empty() || degrees.len() > LETTERS.len() {
            return Err(Error::InvalidArgument(format!("{} factors", degrees.len())));
        }
        let vars: Vec<String> = degrees
            .iter()
            .zip(LETTERS)
            .flat_map(|(&d, l)| (0..=d).map(move |i| format!("{l}{i}")))
            .collect();
        let source = PolyRing::new(vars, field, MonomialOrder::DegRevLex)?;
        let offsets: Vec<usize> = degrees.iter().scan(0, |acc, &d| {
            let o = *acc;
            *acc += d + 1;
            Some(o)
        }).collect();
        let indices = index_tuples(degrees);
        let targets: Vec<Polynomial> = indices
            .iter()
            .map(|idx| {
                let mut e = vec![0u16; source.arity()];
                for (&o, &i) in offsets.iter().zip(idx) {
                    e[o + i] = 1;
                }
                Polynomial::monomial(&source, source.scalar(1), Monomial::new(&e))
            })
            .collect();
        let names: Vec<String> = indices.iter().map(|idx| q_name(idx)).collect();
        let toric = kernel_of_map(&targets, &names, budget)?;
        let ring = toric.ring().clone();
        let total: usize = degrees.iter().sum();
        let linear_forms = (0..=total)
            .map(|q| {
                let terms = indices
                    .iter()
                    .enumerate()
                    .filter(|(_, idx)| idx.iter().sum::<usize>() == q)
                    .map(|(k, _)| ring.var(k));
                terms.fold(Polynomial::zero(&ring), |acc, v| &acc + &v)
            })
            .collect();
        Ok(FiberPresentation { degrees: degrees.to_vec(), indices, toric, linear_forms })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.toric.ring()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Index tuple of each `Q` variable, in variable order.
    pub fn indices(&self) -> &[Vec<usize>] {
        &self.indices
    }

    pub fn toric(&self) -> &Ideal {
        &self.toric
    }

    pub fn linear_forms(&self) -> &[Polynomial] {
        &self.linear_forms
    }

    /// `P + (ℓ_0, …, ℓ_s)`.
    pub fn artinian_reduction(&self) -> Result<Ideal> {
        ideal_sum(&self.toric, &Ideal::new(self.ring(), self.linear_forms.iter().cloned())?)
    }

    /// Every element of the reduced Gröbner basis of `P` has at most two
    /// terms.
    pub fn is_binomial(&self, budget: &Budget) -> Result<bool> {
        Ok(self.toric.groebner(budget)?.basis().iter().all(|g| g.len() <= 2))
    }
}

/// Fiber of `c(f)c(g)`, `deg f = m`, `deg g = n`.
pub fn segre_fiber(m: usize, n: usize, field: FieldSpec, budget: &Budget) -> Result<FiberPresentation> {
    FiberPresentation::product(&[m, n], field, budget)
}

/// Fiber of `c(f)c(g)c(h)`.
pub fn triple_fiber(m: usize, n: usize, p: usize, field: FieldSpec, budget: &Budget) -> Result<FiberPresentation> {
    FiberPresentation::product(&[m, n, p], field, budget)
}

/// Krull dimension of the fiber.
pub fn analytic_spread(f: &FiberPresentation, budget: &Budget) -> Result<usize> {
    krull_dimension(f.toric(), budget)
}

/// Hilbert function of `k[Q]/(P + (ℓ_q))`, trimmed after its last nonzero
/// entry. Computed to degree `#ℓ + 2`; errors if not yet zero there.
pub fn artinian_hilbert_function(f: &FiberPresentation, budget: &Budget) -> Result<Vec<u64>> {
    let bound = f.linear_forms().len() + 2;
    let mut hf = hilbert_function(&f.artinian_reduction()?, bound as u32, budget)?;
    if hf.last().is_some_and(|&v| v != 0) {
        return Err(Error::NotArtinian(bound));
    }
    while hf.last() == Some(&0) {
        hf.pop();
    }
    Ok(hf)
}

/// Top degree of the Artinian reduction.
pub fn fiber_reduction_number(f: &FiberPresentation, budget: &Budget) -> Result<usize> {
    Ok(artinian_hilbert_function(f, budget)?.len().saturating_sub(1))
}

/// The ideal of 2×2 minors of the generic `(m+1) × (n+1)` matrix `(Q_ij)`.
pub fn two_minors(f: &FiberPresentation) -> Result<Ideal> {
    if f.degrees().len() != 2 {
        return Err(Error::InvalidArgument("minors need a two-factor fiber".into()));
    }
    let ring = f.ring();
    let (m, n) = (f.degrees()[0], f.degrees()[1]);
    let q = |i: usize, j: usize| ring.var(i * (n + 1) + j);
    let mut gens = Vec::new();
    for i in 0..=m {
        for k in i + 1..=m {
            for j in 0..=n {
                for l in j + 1..=n {
                    gens.push(&(&q(i, j) * &q(k, l)) - &(&q(i, l) * &q(k, j)));
                }
            }
        }
    }
    Ideal::new(ring, gens)
}

/// Toric kernel equals the 2×2 minors, is binomial, and has height `mn`.
pub fn check_minors_equal_kernel(m: usize, n: usize, field: FieldSpec, budget: &Budget) -> Result<CheckReport> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("degrees must be at least 1".into()));
    }
    let f = segre_fiber(m, n, field, budget)?;
    let mut report = CheckReport::new();
    report.check("toric kernel = I_2(Q)", || ideal_equal(&two_minors(&f)?, f.toric(), budget))?;
    report.check("toric kernel is generated by binomials", || f.is_binomial(budget))?;
    report.check_detail("height of toric kernel = mn", || {
        let h = codimension(f.toric(), budget)?;
        Ok((h == m * n, format!("height {h}")))
    })?;
    Ok(report)
}

/// The `h_q = Σ_{i+j=q} x_i y_j` are algebraically independent, and the
/// fiber is finite over them with top degree `min(m, n)`.
pub fn check_noether_normalization(m: usize, n: usize, field: FieldSpec, budget: &Budget) -> Result<CheckReport> {
    let s = GenericSetup::two(m, n, field)?;
    let mut report = CheckReport::new();
    report.check("the h_q are algebraically independent", || {
        let hs = s.f().mul(s.g())?.coeffs().to_vec();
        let names: Vec<String> = (0..hs.len()).map(|q| format!("H{q}")).collect();
        Ok(kernel_of_map(&hs, &names, budget)?.is_zero())
    })?;
    let f = segre_fiber(m, n, field, budget)?;
    let hf = artinian_hilbert_function(&f, budget);
    let hf = match hf {
        Err(Error::NotArtinian(_)) => None,
        other => Some(other?),
    };
    report.check_detail("fiber is a finite module over k[h_q]", || {
        Ok((hf.is_some(), format!("Hilbert function {:?}", hf.as_deref().unwrap_or(&[]))))
    })?;
    let expected = s.degrees()[0];
    report.check_detail("top degree of the Artinian reduction = min(m, n)", || {
        let top = hf.as_ref().map(|h| h.len() - 1);
        Ok((top == Some(expected), format!("top degree {top:?}")))
    })?;
    Ok(report)
}

fn multinomial(degrees: &[usize]) -> u64 {
    // (d_1 + … + d_s)! / (d_1! ⋯ d_s!) as a product of binomials
    let mut total = 0u64;
    let mut out = 1u64;
    for &d in degrees {
        for k in 1..=d as u64 {
            total += 1;
            out = out * total / k;
        }
    }
    out
}

/// Reduction number of the fiber read two ways: from the Artinian Hilbert
/// function and from ideal powers in the polynomial ring. Expected value
/// is the sum of the degrees minus the largest one.
pub fn check_fiber_reduction(degrees: &[usize], field: FieldSpec, budget: &Budget) -> Result<CheckReport> {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let total: usize = sorted.iter().sum();
    let expected = total - sorted.last().copied().unwrap_or(0);
    let f = FiberPresentation::product(&sorted, field, budget)?;
    let mut report = CheckReport::new();
    report.check_detail("analytic spread = number of linear forms = Σ deg + 1", || {
        let l = analytic_spread(&f, budget)?;
        Ok((l == total + 1 && l == f.linear_forms().len(), format!("analytic spread {l}")))
    })?;
    let hf = artinian_hilbert_function(&f, budget)?;
    report.check_detail("reduction number from Hilbert function = Σ deg − max deg", || {
        Ok((hf.len() - 1 == expected, format!("Hilbert function {hf:?}")))
    })?;
    report.check_detail("Hilbert function total = multidegree multinomial", || {
        let sum: u64 = hf.iter().sum();
        let mult = multinomial(&sorted);
        Ok((sum == mult, format!("total {sum}, multinomial {mult}")))
    })?;
    let setup = match sorted.len() {
        2 => GenericSetup::two(sorted[0], sorted[1], field)?,
        3 => GenericSetup::three(sorted[0], sorted[1], sorted[2], field)?,
        k => return Err(Error::InvalidArgument(format!("{k} factors"))),
    };
    for claim in check_reduction_number(&setup, expected as u32, budget)?.claims {
        report.push(format!("ideal powers: {}", claim.statement), claim.passed, claim.detail, claim.elapsed_ms);
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
