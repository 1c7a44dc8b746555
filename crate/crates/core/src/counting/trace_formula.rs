//! Trace formula: `sum_lambda (h(lambda) - h(0)) = sum_l K(w, l) h_l`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::OneForm;
use crate::twist::spectrum_w;

/// Power series `h(z) = sum_l h_l z^l` with a point evaluator.
pub trait AnalyticFn {
    fn coefficient(&self, l: usize) -> f64;
    fn eval(&self, z: Complex64) -> Complex64;
}

/// `exp(z)`, with `h_l = 1 / l!`.
#[derive(Debug, Clone, Copy)]
pub struct Exp;

impl AnalyticFn for Exp {
    fn coefficient(&self, l: usize) -> f64 {
        (1..=l).fold(1.0, |acc, k| acc / k as f64)
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        z.exp()
    }
}

/// `z^j`.
#[derive(Debug, Clone, Copy)]
pub struct Monomial(pub u32);

impl AnalyticFn for Monomial {
    fn coefficient(&self, l: usize) -> f64 {
        if l == self.0 as usize {
            1.0
        } else {
            0.0
        }
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        z.powu(self.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceFormula {
    pub spectral: Complex64,
    pub series: Complex64,
    pub deviation: f64,
    /// Bound on the omitted terms `l > L` of the series side.
    pub tail_bound: f64,
}

pub const TAIL_TOLERANCE: f64 = 1e-6;

/// Evaluates both sides of the trace formula, truncating the series at `max_len`.
pub fn trace_formula_eval(
    g: &Graph,
    omega: &OneForm,
    h: &dyn AnalyticFn,
    max_len: usize,
) -> Result<TraceFormula> {
    let s = spectrum_w(g, omega)?;
    let rho = s.radius;
    let dim = s.len() as f64;
    let mut tail_bound = 0.0;
    let mut power = rho.powi(max_len as i32);
    for l in max_len + 1..max_len + 2000 {
        power *= rho;
        let term = dim * h.coefficient(l).abs() * power;
        tail_bound += term;
        if term < 1e-300 || (term < 1e-18 * tail_bound.max(1e-300) && l > max_len + 50) {
            break;
        }
    }
    if !tail_bound.is_finite() || tail_bound > TAIL_TOLERANCE {
        return Err(Error::TailBoundViolated { bound: tail_bound });
    }
    let zero = h.eval(Complex64::new(0.0, 0.0));
    let spectral: Complex64 = s.eigenvalues.iter().map(|&z| h.eval(z) - zero).sum();
    let series: Complex64 = (1..=max_len)
        .map(|l| s.power_sum(l as u32) * h.coefficient(l))
        .sum();
    Ok(TraceFormula {
        spectral,
        series,
        deviation: (spectral - series).norm(),
        tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k4, theta};

    #[test]
    fn k4_exp_identity() {
        let r = trace_formula_eval(&k4(), &OneForm::zeros(6), &Exp, 40).unwrap();
        let e = std::f64::consts::E;
        let closed = e * e + 3.0 * e + 2.0 / e
            + 6.0 * (-0.5f64).exp() * (7f64.sqrt() / 2.0).cos()
            - 12.0;
        assert!((r.spectral.re - closed).abs() < 1e-10);
        assert!((r.spectral.re - 5.172675227).abs() < 1e-6);
        assert!(r.deviation < 1e-9);
    }

    #[test]
    fn monomial_collapses() {
        let g = theta(1, 2, 3);
        let w = OneForm::new(vec![0.2, 0.4, 0.1, 0.3, 0.0, 0.6]);
        let r = trace_formula_eval(&g, &w, &Monomial(5), 5).unwrap();
        assert!(r.deviation < 1e-9);
        assert_eq!(r.tail_bound, 0.0);
    }

    #[test]
    fn short_truncation_is_rejected() {
        assert!(matches!(
            trace_formula_eval(&k4(), &OneForm::zeros(6), &Exp, 5),
            Err(Error::TailBoundViolated { .. })
        ));
    }
}
