//! Reciprocal L-functions from the edge and vertex determinant formulas, and
//! their logarithmic power series.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::counting::ClassCounts;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{e, HomologyData, OneForm, QuotientGroup};
use crate::poly::ComplexPoly;
use crate::spectrum::CMat;
use crate::twist::{spectrum_w, twisted_adjacency};

pub const DEFAULT_TRUNCATION: usize = 30;

fn finish(p: ComplexPoly, omega: &OneForm) -> Result<ComplexPoly> {
    if omega.is_half_integral() {
        Ok(p.round_integers()?.trim())
    } else {
        Ok(p.trim())
    }
}

/// `1/L(u, chi_w) = det(I - u W_w)`.
pub fn lfunc_edge(g: &Graph, omega: &OneForm) -> Result<ComplexPoly> {
    let s = spectrum_w(g, omega)?;
    finish(ComplexPoly::from_reciprocal_roots(&s.eigenvalues), omega)
}

/// `1/L(u, chi_w) = (1 - u^2)^(g-1) det(I - u A_w + u^2 Q)`.
///
/// The vertex determinant has degree at most `2n`, so it is recovered exactly
/// from its values at the `2n + 1` roots of unity.
pub fn lfunc_ihara(g: &Graph, omega: &OneForm) -> Result<ComplexPoly> {
    let n = g.n();
    let a = twisted_adjacency(g, omega);
    let points = 2 * n + 1;
    let values: Vec<Complex64> = (0..points)
        .map(|k| {
            let u = e(k as f64 / points as f64);
            let m = CMat::from_fn(n, n, |i, j| {
                let diag = if i == j {
                    Complex64::new(1.0, 0.0) + u * u * (g.degree(i) as f64 - 1.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                diag - u * a[(i, j)]
            });
            m.as_ref().determinant()
        })
        .collect();
    let vertex_part = ComplexPoly::new(
        (0..points)
            .map(|j| {
                values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| v * e(-(((j * k) % points) as f64) / points as f64))
                    .sum::<Complex64>()
                    / points as f64
            })
            .collect(),
    );
    let one_minus_u2 = ComplexPoly::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-1.0, 0.0),
    ]);
    let genus = g.genus();
    let p = if genus >= 1 {
        vertex_part.mul(&one_minus_u2.pow(genus - 1))
    } else {
        vertex_part.div_one_minus_u2(1e-8 * vertex_part.max_abs().max(1.0))?
    };
    finish(p, omega)
}

/// Coefficients `c_1..c_L` of `log L(u, chi) = sum c_l u^l`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogSeries {
    pub coeffs: Vec<Complex64>,
}

impl LogSeries {
    /// Series of `-log p(u)` for a reciprocal L-function `p` with `p(0) = 1`.
    pub fn from_reciprocal(p: &ComplexPoly, truncation: usize) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let coef = |k: usize| p.coeffs.get(k).copied().unwrap_or(zero);
        // f = log p satisfies l f_l = l p_l - sum_{k<l} k f_k p_{l-k}.
        let mut f = vec![zero; truncation + 1];
        for l in 1..=truncation {
            let mut s = coef(l) * l as f64;
            for (k, fk) in f.iter().enumerate().take(l).skip(1) {
                s -= fk * k as f64 * coef(l - k);
            }
            f[l] = s / l as f64;
        }
        LogSeries {
            coeffs: f[1..].iter().map(|x| -x).collect(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_l` for `l >= 1`.
    pub fn coeff(&self, l: usize) -> Complex64 {
        self.coeffs[l - 1]
    }
}

pub fn log_series(g: &Graph, omega: &OneForm, truncation: usize) -> Result<LogSeries> {
    if truncation == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    Ok(LogSeries::from_reciprocal(&lfunc_edge(g, omega)?, truncation))
}

/// Largest deviation of each transform identity between L-functions of a
/// quotient and the class zeta functions.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformReport {
    /// `log L(u, chi) = sum_a chi(a) log z_a`.
    pub forward: f64,
    /// `log z_a = |Q|^-1 sum_chi chi(-a) log L(u, chi)`.
    pub inverse: f64,
    /// `log z = sum_a log z_a`.
    pub total: f64,
    /// `log z_0 = |Q|^-1 sum_chi log L(u, chi)`.
    pub average: f64,
}

impl TransformReport {
    pub fn max(&self) -> f64 {
        self.forward.max(self.inverse).max(self.total).max(self.average)
    }

    pub fn passed(&self, tol: f64) -> bool {
        self.max() < tol
    }
}

/// Checks the transform identities up to `truncation` using class counts
/// labelled by elements of `q`.
pub fn verify_transforms(
    g: &Graph,
    hd: &HomologyData,
    q: &QuotientGroup,
    counts: &ClassCounts,
    truncation: usize,
) -> Result<TransformReport> {
    let series: Vec<LogSeries> = q
        .dual_chars
        .par_iter()
        .map(|chi| log_series(g, &hd.form_of(chi, g.m()), truncation))
        .collect::<Result<_>>()?;
    let trivial = log_series(g, &OneForm::zeros(g.m()), truncation)?;
    let order = q.order as f64;
    let zero_idx = q.index_of(&vec![0; q.genus()]);
    let log_z = |a: usize, l: usize| counts.n(&q.elements[a], l) as f64 / l as f64;

    let mut report = TransformReport {
        forward: 0.0,
        inverse: 0.0,
        total: 0.0,
        average: 0.0,
    };
    for l in 1..=truncation {
        for (k, s) in series.iter().enumerate() {
            let rhs: Complex64 = (0..q.order).map(|a| q.pairing(k, a) * log_z(a, l)).sum();
            report.forward = report.forward.max((s.coeff(l) - rhs).norm());
        }
        for a in 0..q.order {
            let lhs: Complex64 = series
                .iter()
                .enumerate()
                .map(|(k, s)| q.pairing(k, a).conj() * s.coeff(l))
                .sum::<Complex64>()
                / order;
            report.inverse = report.inverse.max((lhs - log_z(a, l)).norm());
        }
        let sum: f64 = (0..q.order).map(|a| log_z(a, l)).sum();
        report.total = report.total.max((trivial.coeff(l) - sum).norm());
        let avg = series.iter().map(|s| s.coeff(l)).sum::<Complex64>() / order;
        report.average = report.average.max((avg - log_z(zero_idx, l)).norm());
    }
    Ok(report)
}
