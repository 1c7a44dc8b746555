//! Trace distributions and circuit counts per homology class.

mod oracle;
mod primes;
mod trace_formula;

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph};
use crate::homology::{Character, HomologyData, OneForm, QuotientGroup};
use crate::spectrum::CMat;
use crate::twist::{grid_points, spectrum_w, twisted_edge_adjacency};

pub use oracle::{brute_force, circuit_length_gcd, walk_count, Census};
pub use primes::{fill_primes_integral, fill_primes_quotient, mobius};
pub use trace_formula::{trace_formula_eval, AnalyticFn, Exp, Monomial, TraceFormula};

/// Absolute guard for recovering an integer count from floating point.
pub const ROUND_GUARD: f64 = 1e-6;

/// Default budget for enumerations and grids, overridable by `IHARA_BUDGET`.
pub const DEFAULT_BUDGET: f64 = 1e7;

pub fn default_budget() -> f64 {
    std::env::var("IHARA_BUDGET")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|b| *b > 0.0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// Rounds to a nonnegative integer, allowing relative slack for very large values.
pub fn round_count(x: f64) -> Result<u64> {
    let r = x.round();
    let guard = ROUND_GUARD.max(1e-12 * x.abs());
    if (x - r).abs() > guard || r < 0.0 {
        return Err(Error::RoundingFailure { value: x });
    }
    Ok(r as u64)
}

/// `K(w, l) = tr W_w^l` for `l = 1..=max_len`, as complex numbers.
pub fn traces(g: &Graph, omega: &OneForm, max_len: usize) -> Result<Vec<Complex64>> {
    let s = spectrum_w(g, omega)?;
    Ok((1..=max_len as u32).map(|l| s.power_sum(l)).collect())
}

/// Real trace distribution `K(w, 1..=max_len)`.
pub fn trace_distribution(g: &Graph, omega: &OneForm, max_len: usize) -> Result<Vec<f64>> {
    traces(g, omega, max_len)?
        .into_iter()
        .map(|k| {
            if k.im.abs() > 1e-8 * k.re.abs().max(1.0) {
                Err(Error::RoundingFailure { value: k.im })
            } else {
                Ok(k.re)
            }
        })
        .collect()
}

/// `tr W_w^l` by repeated multiplication; a spot check for small `l`.
pub fn trace_by_powers(g: &Graph, omega: &OneForm, l: usize) -> Complex64 {
    let w = twisted_edge_adjacency(g, omega);
    let d = w.nrows();
    let mut p = CMat::identity(d, d);
    for _ in 0..l {
        p = &p * &w;
    }
    (0..d).map(|i| p[(i, i)]).sum()
}

/// Counts for one class, indexed by `l - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassRow {
    pub n: Vec<u64>,
    pub pi: Vec<u64>,
    pub pi_c: Vec<u64>,
}

/// Circuit, prime cycle and cycle counts per class for lengths `1..=max_len`.
///
/// Labels are either homology coordinates in `Z^g` or element tuples of a
/// quotient group. Classes without circuits may be omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    pub max_len: usize,
    pub rows: BTreeMap<Vec<i64>, ClassRow>,
    /// Whether `pi` and `pi_c` are populated.
    pub has_primes: bool,
}

impl ClassCounts {
    pub fn new(max_len: usize) -> Self {
        ClassCounts {
            max_len,
            rows: BTreeMap::new(),
            has_primes: false,
        }
    }

    fn get(&self, label: &[i64], l: usize, pick: fn(&ClassRow) -> &Vec<u64>) -> u64 {
        if l == 0 || l > self.max_len {
            return 0;
        }
        self.rows
            .get(label)
            .and_then(|r| pick(r).get(l - 1).copied())
            .unwrap_or(0)
    }

    pub fn n(&self, label: &[i64], l: usize) -> u64 {
        self.get(label, l, |r| &r.n)
    }

    pub fn pi(&self, label: &[i64], l: usize) -> u64 {
        self.get(label, l, |r| &r.pi)
    }

    pub fn pi_c(&self, label: &[i64], l: usize) -> u64 {
        self.get(label, l, |r| &r.pi_c)
    }

    pub fn n_seq(&self, label: &[i64]) -> Vec<u64> {
        (1..=self.max_len).map(|l| self.n(label, l)).collect()
    }

    pub fn pi_seq(&self, label: &[i64]) -> Vec<u64> {
        (1..=self.max_len).map(|l| self.pi(label, l)).collect()
    }

    pub fn pi_c_seq(&self, label: &[i64]) -> Vec<u64> {
        (1..=self.max_len).map(|l| self.pi_c(label, l)).collect()
    }

    /// `N(l)` summed over classes.
    pub fn total_n(&self, l: usize) -> u64 {
        self.rows.keys().map(|k| self.n(k, l)).sum()
    }

    /// Drops classes whose counts are all zero.
    pub fn pruned(mut self) -> Self {
        self.rows
            .retain(|_, r| r.n.iter().chain(&r.pi).chain(&r.pi_c).any(|&x| x != 0));
        self
    }

    /// First `(label, l)` where circuit counts differ, up to the shorter length.
    pub fn n_mismatch(&self, other: &ClassCounts) -> Option<(Vec<i64>, usize)> {
        let len = self.max_len.min(other.max_len);
        let labels: std::collections::BTreeSet<&Vec<i64>> =
            self.rows.keys().chain(other.rows.keys()).collect();
        for label in labels {
            for l in 1..=len {
                if self.n(label, l) != other.n(label, l) {
                    return Some((label.clone(), l));
                }
            }
        }
        None
    }

    /// Sums classes along `alpha -> q.class_of(alpha)`; every element of `q` gets a row.
    pub fn project(&self, q: &QuotientGroup) -> Result<ClassCounts> {
        let mut out = ClassCounts::new(self.max_len);
        out.has_primes = self.has_primes;
        let len = self.max_len;
        let blank = || ClassRow {
            n: vec![0; len],
            pi: if self.has_primes { vec![0; len] } else { Vec::new() },
            pi_c: if self.has_primes { vec![0; len] } else { Vec::new() },
        };
        for el in &q.elements {
            out.rows.insert(el.clone(), blank());
        }
        for (alpha, row) in &self.rows {
            let target = out
                .rows
                .get_mut(&q.class_of(alpha)?)
                .expect("every class is present");
            for (dst, src) in [
                (&mut target.n, &row.n),
                (&mut target.pi, &row.pi),
                (&mut target.pi_c, &row.pi_c),
            ] {
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += s;
                }
            }
        }
        Ok(out)
    }

    /// CSV with header `class,l,N,pi,pi_c`; class labels are space separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,l,N,pi,pi_c\n");
        for label in self.rows.keys() {
            let name = label
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            for l in 1..=self.max_len {
                let (p, pc) = if self.has_primes {
                    (self.pi(label, l).to_string(), self.pi_c(label, l).to_string())
                } else {
                    (String::new(), String::new())
                };
                out.push_str(&format!("{name},{l},{},{p},{pc}\n", self.n(label, l)));
            }
        }
        out
    }

    /// `{"max_len": L, "classes": [{"class", "N", "pi", "pi_c"}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = self
            .rows
            .keys()
            .map(|label| {
                let mut row = serde_json::json!({
                    "class": label,
                    "N": self.n_seq(label),
                });
                if self.has_primes {
                    row["pi"] = serde_json::json!(self.pi_seq(label));
                    row["pi_c"] = serde_json::json!(self.pi_c_seq(label));
                }
                row
            })
            .collect();
        serde_json::json!({ "max_len": self.max_len, "classes": classes })
    }
}

fn check_budget(needed: f64, budget: f64) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// `N(a, l)` for every class of a finite quotient, by the finite Fourier transform
/// of the trace distribution over the dual group.
pub fn counts_mod_lattice(
    g: &Graph,
    hd: &HomologyData,
    q: &QuotientGroup,
    max_len: usize,
    budget: f64,
) -> Result<ClassCounts> {
    check_budget(q.order as f64, budget)?;
    let table: Vec<Vec<Complex64>> = q
        .dual_chars
        .par_iter()
        .map(|chi| traces(g, &hd.form_of(chi, g.m()), max_len))
        .collect::<Result<_>>()?;
    let order = q.order as f64;
    let mut out = ClassCounts::new(max_len);
    for (a, el) in q.elements.iter().enumerate() {
        let n = (1..=max_len)
            .map(|l| {
                let s: Complex64 = table
                    .iter()
                    .enumerate()
                    .map(|(k, row)| q.pairing(k, a).conj() * row[l - 1])
                    .sum();
                let x = s / order;
                if x.im.abs() > ROUND_GUARD.max(1e-12 * x.re.abs()) {
                    return Err(Error::RoundingFailure { value: x.im });
                }
                round_count(x.re)
            })
            .collect::<Result<Vec<_>>>()?;
        out.rows.insert(
            el.clone(),
            ClassRow {
                n,
                ..ClassRow::default()
            },
        );
    }
    Ok(out)
}

/// `K(w, l)` at every point of a uniform grid on the character torus, last
/// coordinate fastest.
pub fn trace_sweep(
    g: &Graph,
    hd: &HomologyData,
    grid_n: usize,
    l: usize,
    budget: f64,
) -> Result<Vec<(Vec<f64>, f64)>> {
    if hd.genus() == 0 {
        return Err(Error::GenusZero);
    }
    if l == 0 {
        return Err(Error::NotApplicable("trace length must be positive"));
    }
    grid_points(hd.genus(), grid_n, budget)?
        .into_par_iter()
        .map(|coords| {
            let omega = hd.form_of(&Character::new(coords.clone()), g.m());
            let k = trace_distribution(g, &omega, l)?[l - 1];
            Ok((coords, k))
        })
        .collect()
}

/// Per-coordinate bound on `|alpha_i|` for circuits of length at most `max_len`.
///
/// Between two traversals of a non-tree edge in the same direction the circuit
/// closes up into another circuit, which has length at least the girth.
pub fn coordinate_bound(g: &Graph, max_len: usize) -> usize {
    g.girth().map_or(0, |girth| max_len / girth)
}

/// `N(alpha, l)` for all `alpha in Z^g`, by an exact discrete Fourier transform of
/// `K(., l)` on a uniform grid of the character torus.
///
/// Each coordinate of the class of a circuit of length at most `max_len` is
/// bounded by [`coordinate_bound`], so `2B + 1` points per dimension suffice.
pub fn counts_integral(
    g: &Graph,
    hd: &HomologyData,
    max_len: usize,
    budget: f64,
) -> Result<ClassCounts> {
    let genus = hd.genus();
    let bound = coordinate_bound(g, max_len);
    let mut out = ClassCounts::new(max_len);
    if genus == 0 || max_len == 0 {
        return Ok(out);
    }
    let p = 2 * bound + 1;
    let total = (p as f64).powi(genus as i32);
    check_budget(total, budget)?;
    let total = total as usize;
    let index_coords = |mut idx: usize| {
        let mut c = vec![0usize; genus];
        for slot in c.iter_mut().rev() {
            *slot = idx % p;
            idx /= p;
        }
        c
    };

    let samples: Vec<Vec<Complex64>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let chi = Character::new(index_coords(idx).iter().map(|&k| k as f64 / p as f64).collect());
            traces(g, &hd.form_of(&chi, g.m()), max_len)
        })
        .collect::<Result<_>>()?;

    let mut planner = FftPlanner::<f64>::new();
    let fft = planner.plan_fft_forward(p);
    let scale = total as f64;
    let mut per_len: Vec<Vec<Complex64>> = Vec::with_capacity(max_len);
    for l in 0..max_len {
        let mut data: Vec<Complex64> = samples.iter().map(|row| row[l]).collect();
        // Separable transform: one axis at a time.
        let mut stride = 1;
        for _ in 0..genus {
            let block = stride * p;
            let mut line = vec![Complex64::new(0.0, 0.0); p];
            for start in (0..total).step_by(block) {
                for off in 0..stride {
                    for (j, slot) in line.iter_mut().enumerate() {
                        *slot = data[start + off + j * stride];
                    }
                    fft.process(&mut line);
                    for (j, v) in line.iter().enumerate() {
                        data[start + off + j * stride] = *v;
                    }
                }
            }
            stride = block;
        }
        per_len.push(data.into_iter().map(|z| z / scale).collect());
    }

    for idx in 0..total {
        let alpha: Vec<i64> = index_coords(idx)
            .into_iter()
            .map(|j| if j > bound { j as i64 - p as i64 } else { j as i64 })
            .collect();
        let n = per_len
            .iter()
            .map(|vals| {
                let x = vals[idx];
                if x.im.abs() > ROUND_GUARD.max(1e-12 * x.re.abs()) {
                    return Err(Error::RoundingFailure { value: x.im });
                }
                round_count(x.re)
            })
            .collect::<Result<Vec<_>>>()?;
        if n.iter().any(|&x| x != 0) {
            out.rows.insert(
                alpha,
                ClassRow {
                    n,
                    ..ClassRow::default()
                },
            );
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VanishingReport {
    /// False when the canonical character does not factor through the quotient.
    pub applicable: bool,
    pub checked: usize,
    /// `(class, l)` pairs with a nonzero count where one must vanish.
    pub violations: Vec<(Vec<i64>, usize)>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Parity constraints on counts imposed by the canonical character.
///
/// A class on which `theta` is `+1` has no circuits of odd length; a class on
/// which it is `-1` has none of even length. With `quotient` set, labels are
/// element tuples of that group; otherwise they are homology coordinates.
pub fn vanishing_check(
    g: &Graph,
    theta: &Character,
    counts: &ClassCounts,
    quotient: Option<&QuotientGroup>,
) -> VanishingReport {
    let mut report = VanishingReport {
        applicable: true,
        checked: 0,
        violations: Vec::new(),
    };
    if let Some(q) = quotient {
        if !q.contains(theta) {
            report.applicable = false;
            return report;
        }
    }
    let bipartite = is_bipartite(g);
    for label in counts.rows.keys() {
        let sign = match quotient {
            Some(q) => theta.value(&q.representative(q.index_of(label))).re,
            None => theta.value(label).re,
        };
        for l in 1..=counts.max_len {
            let odd = l % 2 == 1;
            let must_vanish = (sign > 0.0 && odd) || (sign < 0.0 && !odd) || (bipartite && odd);
            if !must_vanish {
                continue;
            }
            report.checked += 1;
            if counts.n(label, l) != 0 || counts.pi(label, l) != 0 || counts.pi_c(label, l) != 0 {
                report.violations.push((label.clone(), l));
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub class: Vec<i64>,
    pub l: usize,
    pub ratio: f64,
}

/// `pi(a, l) l |Q| / (c nu rho^l)` with `c = 2` when `doubling`, for nonvanishing entries.
pub fn asymptotic_ratio(
    counts: &ClassCounts,
    genus: usize,
    rho: f64,
    nu: u64,
    q_order: usize,
    doubling: bool,
) -> Result<Vec<RatioRow>> {
    if genus < 2 {
        return Err(Error::NotApplicable("asymptotics need genus at least 2"));
    }
    if !counts.has_primes {
        return Err(Error::NotApplicable("prime counts not computed"));
    }
    let c = if doubling { 2.0 } else { 1.0 };
    let mut rows = Vec::new();
    for label in counts.rows.keys() {
        for l in 1..=counts.max_len {
            if counts.n(label, l) == 0 {
                continue;
            }
            let ratio = counts.pi(label, l) as f64 * l as f64 * q_order as f64
                / (c * nu as f64 * rho.powi(l as i32));
            rows.push(RatioRow {
                class: label.clone(),
                l,
                ratio,
            });
        }
    }
    Ok(rows)
}
