use num_complex::Complex64;
use num_integer::Integer;

use super::snf::{mat_vec, smith_normal_form, IntMatrix, Snf};
use super::{e, frac, Character};
use crate::error::{Error, Result};

/// Finite quotient `H1(G, Z) / Lambda` in Smith normal form coordinates.
///
/// Elements are tuples `a` with `0 <= a_i < d_i`. The dual character with label
/// `k` pairs with `a` as `e(sum k_i a_i / d_i)`; its torus coordinates are
/// `U^T (k / d)` reduced mod 1.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    /// Columns generate the sublattice, in homology basis coordinates.
    pub lattice_gens: IntMatrix,
    pub snf: Snf,
    pub order: usize,
    pub elements: Vec<Vec<i64>>,
    pub dual_chars: Vec<Character>,
}

impl QuotientGroup {
    pub fn new(lattice_gens: IntMatrix) -> Result<Self> {
        let snf = smith_normal_form(&lattice_gens)?;
        let g = snf.d.len();
        let mut order: usize = 1;
        for &d in &snf.d {
            order = order
                .checked_mul(usize::try_from(d).map_err(|_| Error::IntegerOverflow)?)
                .ok_or(Error::IntegerOverflow)?;
        }
        let mut elements = Vec::with_capacity(order);
        let mut cur = vec![0i64; g];
        for _ in 0..order {
            elements.push(cur.clone());
            for i in (0..g).rev() {
                cur[i] += 1;
                if cur[i] < snf.d[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
        let dual_chars = elements
            .iter()
            .map(|k| {
                Character::new(
                    (0..g)
                        .map(|j| {
                            (0..g)
                                .map(|i| snf.u[i][j] as f64 * k[i] as f64 / snf.d[i] as f64)
                                .sum()
                        })
                        .collect(),
                )
            })
            .collect();
        Ok(QuotientGroup {
            lattice_gens,
            snf,
            order,
            elements,
            dual_chars,
        })
    }

    /// `Lambda = t H1(G, Z)`.
    pub fn scaled(g: usize, t: i64) -> Result<Self> {
        QuotientGroup::new(
            (0..g)
                .map(|i| (0..g).map(|j| if i == j { t } else { 0 }).collect())
                .collect(),
        )
    }

    /// Kernel of `alpha -> a . alpha mod k`.
    pub fn kernel_of(a: &[i64], k: i64) -> Result<Self> {
        QuotientGroup::new(super::snf::kernel_mod(a, k)?)
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.snf.d
    }

    pub fn genus(&self) -> usize {
        self.snf.d.len()
    }

    /// Position of an element tuple in `elements`.
    pub fn index_of(&self, a: &[i64]) -> usize {
        a.iter()
            .zip(&self.snf.d)
            .fold(0usize, |acc, (&x, &d)| acc * d as usize + x.rem_euclid(d) as usize)
    }

    /// Image of a homology class.
    pub fn class_of(&self, alpha: &[i64]) -> Result<Vec<i64>> {
        Ok(mat_vec(&self.snf.u, alpha)?
            .into_iter()
            .zip(&self.snf.d)
            .map(|(x, &d)| x.rem_euclid(d))
            .collect())
    }

    pub fn class_index(&self, alpha: &[i64]) -> Result<usize> {
        Ok(self.index_of(&self.class_of(alpha)?))
    }

    /// A homology class mapping to the given element.
    pub fn representative(&self, idx: usize) -> Vec<i64> {
        mat_vec(&self.snf.u_inv, &self.elements[idx]).expect("entries are bounded by d")
    }

    /// `chi_k(a)` for dual label index `k` and element index `a`.
    pub fn pairing(&self, k: usize, a: usize) -> Complex64 {
        let (kk, aa) = (&self.elements[k], &self.elements[a]);
        e(kk.iter()
            .zip(aa)
            .zip(&self.snf.d)
            .map(|((&x, &y), &d)| ((x * y).rem_euclid(d)) as f64 / d as f64)
            .sum())
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let s: Vec<i64> = self.elements[a]
            .iter()
            .zip(&self.elements[b])
            .map(|(x, y)| x + y)
            .collect();
        self.index_of(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let s: Vec<i64> = self.elements[a].iter().map(|x| -x).collect();
        self.index_of(&s)
    }

    /// Whether a character is trivial on the sublattice.
    pub fn contains(&self, chi: &Character) -> bool {
        let g = self.genus();
        (0..g).all(|j| {
            let p: f64 = (0..g)
                .map(|i| chi.coords[i] * self.lattice_gens[i][j] as f64)
                .sum();
            (p - p.round()).abs() < 1e-9
        })
    }

    /// Index of the dual character equal to `chi`, if `chi` factors through the quotient.
    pub fn dual_index(&self, chi: &Character) -> Option<usize> {
        self.dual_chars.iter().position(|c| c.approx_eq(chi))
    }

    /// For each `i < k`, the element on which `chi` takes the value `e(i / k)`.
    ///
    /// `None` where no element does, or when `chi` is not trivial on the sublattice.
    pub fn classes_by_character(&self, chi: &Character, k: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; k];
        if !self.contains(chi) {
            return out;
        }
        for idx in 0..self.order {
            let x = frac(chi.phase(&self.representative(idx))) * k as f64;
            if (x - x.round()).abs() < 1e-9 {
                out[x.round() as usize % k].get_or_insert(idx);
            }
        }
        out
    }

    /// Element indices `b` with `k b = a`.
    pub fn divide(&self, a: usize, k: i64) -> Vec<usize> {
        let mut per_coord: Vec<Vec<i64>> = Vec::with_capacity(self.genus());
        for (&x, &d) in self.elements[a].iter().zip(&self.snf.d) {
            let gcd = k.gcd(&d);
            if x % gcd != 0 {
                return Vec::new();
            }
            let (kr, xr, dr) = (k / gcd, x / gcd, d / gcd);
            let inv = kr.rem_euclid(dr).extended_gcd(&dr).x.rem_euclid(dr.max(1));
            let b0 = if dr == 1 { 0 } else { (xr * inv).rem_euclid(dr) };
            per_coord.push((0..gcd).map(|j| b0 + j * dr).collect());
        }
        let mut out = vec![Vec::new()];
        for opts in per_coord {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    opts.iter().map(move |&o| {
                        let mut q = p.clone();
                        q.push(o);
                        q
                    })
                })
                .collect();
        }
        out.iter().map(|b| self.index_of(b)).collect()
    }

    /// First pair `(a, b)` breaking the orthogonality relation of dual characters.
    pub fn orthogonality_violation(&self) -> Option<(usize, usize, f64)> {
        let n = self.order as f64;
        for a in 0..self.order {
            for b in 0..self.order {
                let s: Complex64 = (0..self.order)
                    .map(|k| self.pairing(k, a) * self.pairing(k, b).conj())
                    .sum::<Complex64>()
                    / n;
                let want = if a == b { 1.0 } else { 0.0 };
                let dev = (s - want).norm();
                if dev > 1e-10 {
                    return Some((a, b, dev));
                }
            }
        }
        None
    }

    pub fn orthogonality_check(&self) -> bool {
        self.orthogonality_violation().is_none()
    }
}
