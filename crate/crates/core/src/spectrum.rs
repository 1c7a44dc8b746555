//! Dense eigenvalue multisets and tolerance-aware comparison.

use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex square matrix type used throughout the crate.
pub type CMat = Mat<Complex64>;

/// Eigenvalues with multiplicity, sorted by real then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    pub radius: f64,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<Complex64>) -> Self {
        eigenvalues.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let radius = eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
        Spectrum {
            eigenvalues,
            radius,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn neg(&self) -> Spectrum {
        Spectrum::new(self.eigenvalues.iter().map(|z| -z).collect())
    }

    pub fn conj(&self) -> Spectrum {
        Spectrum::new(self.eigenvalues.iter().map(|z| z.conj()).collect())
    }

    /// Default matching tolerance, `1e-8 * max(1, radius)`.
    pub fn default_tol(&self) -> f64 {
        1e-8 * self.radius.max(1.0)
    }

    /// Largest pairwise distance under a greedy nearest-neighbour matching.
    ///
    /// Returns infinity when the multisets have different sizes.
    pub fn distance(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        let mut used = vec![false; other.len()];
        let mut worst: f64 = 0.0;
        for z in &self.eigenvalues {
            let (j, d) = other
                .eigenvalues
                .iter()
                .enumerate()
                .filter(|(j, _)| !used[*j])
                .map(|(j, w)| (j, (z - w).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("sizes match");
            used[j] = true;
            worst = worst.max(d);
        }
        worst
    }

    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    /// `sum lambda^l`.
    pub fn power_sum(&self, l: u32) -> Complex64 {
        self.eigenvalues.iter().map(|z| z.powu(l)).sum()
    }

    /// Number of eigenvalues whose modulus is within `tol` of the radius.
    pub fn dominant_count(&self, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|z| z.norm() >= self.radius - tol)
            .count()
    }

    /// `[[re, im], ...]` in sorted order.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[f64; 2]> = self.eigenvalues.iter().map(|z| [z.re, z.im]).collect();
        serde_json::to_string(&pairs).expect("finite values serialize")
    }
}

/// Eigenvalues of a general complex matrix.
pub fn spectrum(m: &CMat) -> Result<Spectrum> {
    if m.nrows() == 0 {
        return Ok(Spectrum::new(Vec::new()));
    }
    let vals = m.eigenvalues().map_err(|_| Error::EigenSolverFailure)?;
    Ok(Spectrum::new(vals))
}

/// Eigenvalues of a Hermitian matrix; all real.
pub fn hermitian_spectrum(m: &CMat) -> Result<Spectrum> {
    if m.nrows() == 0 {
        return Ok(Spectrum::new(Vec::new()));
    }
    let vals = m
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|_| Error::EigenSolverFailure)?;
    Ok(Spectrum::new(
        vals.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
    ))
}

pub fn is_hermitian(m: &CMat, tol: f64) -> bool {
    let n = m.nrows();
    (0..n).all(|i| (0..n).all(|j| (m[(i, j)] - m[(j, i)].conj()).norm() <= tol))
}
