//! Dense complex polynomials in ascending-degree order.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    pub coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        ComplexPoly { coeffs }
    }

    pub fn one() -> Self {
        ComplexPoly::new(vec![Complex64::new(1.0, 0.0)])
    }

    /// `prod (1 - r u)` over the given values.
    pub fn from_reciprocal_roots(roots: &[Complex64]) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); roots.len() + 1];
        c[0] = Complex64::new(1.0, 0.0);
        for (k, &r) in roots.iter().enumerate() {
            for j in (1..=k + 1).rev() {
                let prev = c[j - 1];
                c[j] -= r * prev;
            }
        }
        ComplexPoly::new(c)
    }

    pub fn mul(&self, other: &ComplexPoly) -> ComplexPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return ComplexPoly::new(Vec::new());
        }
        let mut c = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        ComplexPoly::new(c)
    }

    pub fn pow(&self, k: usize) -> ComplexPoly {
        (0..k).fold(ComplexPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops trailing coefficients below `1e-12 * max |coeff|`.
    pub fn trim(mut self) -> ComplexPoly {
        let cut = 1e-12 * self.max_abs();
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.norm() <= cut) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Largest coefficientwise difference, padding the shorter polynomial with zeros.
    pub fn max_diff(&self, other: &ComplexPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(zero);
                let b = other.coeffs.get(i).copied().unwrap_or(zero);
                (a - b).norm()
            })
            .fold(0.0, f64::max)
    }

    /// Rounds every coefficient to the nearest Gaussian integer, with guard `1e-6`.
    pub fn round_integers(&self) -> Result<ComplexPoly> {
        self.coeffs
            .iter()
            .map(|c| {
                let r = Complex64::new(c.re.round(), c.im.round());
                if (c - r).norm() > 1e-6 {
                    Err(Error::RoundingFailure { value: c.re })
                } else {
                    Ok(r)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(ComplexPoly::new)
    }

    /// Exact division by `1 - u^2`; fails if the remainder exceeds `tol`.
    pub fn div_one_minus_u2(&self, tol: f64) -> Result<ComplexPoly> {
        let n = self.coeffs.len();
        if n < 3 {
            return Err(Error::RoundingFailure {
                value: self.max_abs(),
            });
        }
        // p = q (1 - u^2): q_k = p_k + q_{k-2}.
        let mut q = vec![Complex64::new(0.0, 0.0); n - 2];
        for k in 0..n - 2 {
            q[k] = self.coeffs[k] + if k >= 2 { q[k - 2] } else { Complex64::new(0.0, 0.0) };
        }
        let back = ComplexPoly::new(q.clone()).mul(&ComplexPoly::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ]));
        let residue = back.max_diff(self);
        if residue > tol {
            return Err(Error::RoundingFailure { value: residue });
        }
        Ok(ComplexPoly::new(q))
    }

    /// `[[re, im], ...]`.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|z| [z.re, z.im]).collect();
        serde_json::to_string(&pairs).expect("finite values serialize")
    }
}
