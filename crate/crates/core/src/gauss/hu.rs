//! The banded matrix whose ideal data specializes to `L(f, g)`.

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, Budget, Ideal};
use crate::ideals::ideal_power;
use crate::poly::Polynomial;
use crate::report::CheckReport;

use super::{content, GenericSetup};

/// Row `X = (x0..xm)` and the `(m+1) × (m+n+1)` matrix `φ` with
/// `φ[i][i+j] = y_j`.
#[derive(Clone, Debug)]
pub struct HuData {
    pub x: Vec<Polynomial>,
    pub phi: Vec<Vec<Polynomial>>,
}

impl HuData {
    pub fn new(s: &GenericSetup) -> Result<Self> {
        s.require(2)?;
        let (m, n) = (s.degrees()[0], s.degrees()[1]);
        let ring = s.ring();
        let x = s.f().coeffs().to_vec();
        let y = s.g().coeffs();
        let cols = m + n + 1;
        let phi = (0..=m)
            .map(|i| {
                (0..cols)
                    .map(|c| match c.checked_sub(i) {
                        Some(j) if j <= n => y[j].clone(),
                        _ => Polynomial::zero(ring),
                    })
                    .collect()
            })
            .collect();
        Ok(HuData { x, phi })
    }

    /// Entries of the row vector `X·φ`.
    pub fn x_phi(&self) -> Result<Vec<Polynomial>> {
        let cols = self.phi[0].len();
        (0..cols)
            .map(|c| {
                let mut acc = Polynomial::zero(self.x[0].ring());
                for (xi, row) in self.x.iter().zip(&self.phi) {
                    acc = acc.try_add(&xi.try_mul(&row[c])?)?;
                }
                Ok(acc)
            })
            .collect()
    }
}

/// Determinant by cofactor expansion along the first row.
fn determinant(rows: &[Vec<Polynomial>]) -> Result<Polynomial> {
    match rows.len() {
        0 => Err(Error::InvalidArgument("empty matrix".into())),
        1 => Ok(rows[0][0].clone()),
        size => {
            let mut acc = Polynomial::zero(rows[0][0].ring());
            for c in 0..size {
                if rows[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = rows[0][c].try_mul(&determinant(&minor)?)?;
                acc = if c % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
            }
            Ok(acc)
        }
    }
}

fn column_subsets(cols: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, cols: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..cols {
            cur.push(c);
            go(c + 1, cols, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, cols, k, &mut Vec::new(), &mut out);
    out
}

/// All maximal minors of a matrix with at most as many rows as columns.
pub fn maximal_minors(matrix: &[Vec<Polynomial>]) -> Result<Vec<Polynomial>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rows == 0 || rows > cols {
        return Err(Error::InvalidArgument(format!("{rows}×{cols} matrix has no maximal minors")));
    }
    column_subsets(cols, rows)
        .into_iter()
        .map(|sel| {
            let sub: Vec<Vec<Polynomial>> =
                matrix.iter().map(|r| sel.iter().map(|&c| r[c].clone()).collect()).collect();
            determinant(&sub)
        })
        .collect()
}

/// `(X·φ) = c(fg)`, `(X)^(n+1) = c(f)^(n+1)` and `I_(m+1)(φ) = c(g)^(m+1)`.
pub fn hu_check(s: &GenericSetup, budget: &Budget) -> Result<CheckReport> {
    let hu = HuData::new(s)?;
    let (m, n) = (s.degrees()[0] as u32, s.degrees()[1] as u32);
    let ring = s.ring();
    let mut report = CheckReport::new();
    report.check("(X·φ) = c(fg)", || ideal_equal(&Ideal::new(ring, hu.x_phi()?)?, &s.gaussian()?, budget))?;
    report.check("(X)^(n+1) = c(f)^(n+1)", || {
        let xs = Ideal::new(ring, hu.x.iter().cloned())?;
        ideal_equal(&ideal_power(&xs, n + 1), &ideal_power(&content(s.f())?, n + 1), budget)
    })?;
    report.check("I_(m+1)(φ) = c(g)^(m+1)", || {
        let minors = Ideal::new(ring, maximal_minors(&hu.phi)?)?;
        ideal_equal(&minors, &ideal_power(&content(s.g())?, m + 1), budget)
    })?;
    Ok(report)
}
