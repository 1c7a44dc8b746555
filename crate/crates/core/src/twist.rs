//! Twisted vertex and edge adjacency matrices, canonical characters and
//! torus sweeps.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{tree_bipartition, two_core, Graph, SpanningTree};
use crate::homology::{e, Character, HomologyData, OneForm};
use crate::spectrum::{hermitian_spectrum, spectrum, CMat, Spectrum};

/// Twisted adjacency `A_w`, twisted Hashimoto matrix `W_w` and `Q = diag(deg - 1)`.
#[derive(Debug, Clone)]
pub struct TwistedMatrices {
    pub a: CMat,
    pub w: CMat,
    pub q: Vec<f64>,
}

/// `A_w[v][u] = sum of chi(a)` over oriented edges `a` from `v` to `u`.
pub fn twisted_adjacency(g: &Graph, omega: &OneForm) -> CMat {
    let mut a = CMat::zeros(g.n(), g.n());
    for x in 0..g.num_oriented() {
        a[(g.tail(x), g.head(x))] += e(omega.at(x));
    }
    a
}

/// `W_w[a][b] = chi(b)` when `a` feeds into `b`.
pub fn twisted_edge_adjacency(g: &Graph, omega: &OneForm) -> CMat {
    let d = g.num_oriented();
    let mut w = CMat::zeros(d, d);
    for x in 0..d {
        for y in g.successors(x) {
            w[(x, y)] = e(omega.at(y));
        }
    }
    w
}

/// Variant with entry `chi(a)` on feeding pairs.
pub fn twisted_edge_adjacency_left(g: &Graph, omega: &OneForm) -> CMat {
    let d = g.num_oriented();
    let mut w = CMat::zeros(d, d);
    for x in 0..d {
        for y in g.successors(x) {
            w[(x, y)] = e(omega.at(x));
        }
    }
    w
}

/// Variant with entry `chi(a/2) chi(b/2)` on feeding pairs.
pub fn twisted_edge_adjacency_symmetric(g: &Graph, omega: &OneForm) -> CMat {
    let d = g.num_oriented();
    let mut w = CMat::zeros(d, d);
    for x in 0..d {
        for y in g.successors(x) {
            w[(x, y)] = e((omega.at(x) + omega.at(y)) / 2.0);
        }
    }
    w
}

/// Diagonal of `B_w`, `e(w(a) / 2)` for each oriented edge.
pub fn half_twist_diagonal(g: &Graph, omega: &OneForm) -> Vec<Complex64> {
    (0..g.num_oriented()).map(|x| e(omega.at(x) / 2.0)).collect()
}

pub fn twisted_matrices(g: &Graph, omega: &OneForm) -> TwistedMatrices {
    TwistedMatrices {
        a: twisted_adjacency(g, omega),
        w: twisted_edge_adjacency(g, omega),
        q: (0..g.n()).map(|v| g.degree(v) as f64 - 1.0).collect(),
    }
}

/// Spectrum of the Hermitian matrix `A_w`.
pub fn spectrum_a(g: &Graph, omega: &OneForm) -> Result<Spectrum> {
    hermitian_spectrum(&twisted_adjacency(g, omega))
}

/// Spectrum of `W_w`.
///
/// Edges outside the two-core only contribute a nilpotent block, so the
/// spectrum is that of the core together with `2 (m - m_core)` zeros. Solving
/// the core alone keeps the large Jordan block at zero away from the solver.
pub fn spectrum_w(g: &Graph, omega: &OneForm) -> Result<Spectrum> {
    let zero = Complex64::new(0.0, 0.0);
    if g.genus() == 0 {
        return Ok(Spectrum::new(vec![zero; g.num_oriented()]));
    }
    let core = two_core(g)?;
    if core.edge_map.len() == g.m() {
        return spectrum(&twisted_edge_adjacency(g, omega));
    }
    let restricted = OneForm::new(core.edge_map.iter().map(|&e| omega.coeffs[e]).collect());
    let mut eigenvalues = spectrum(&twisted_edge_adjacency(&core.graph, &restricted))?.eigenvalues;
    eigenvalues.resize(g.num_oriented(), zero);
    Ok(Spectrum::new(eigenvalues))
}

/// `w_O = (1/2) sum de` over the positive orientation.
pub fn canonical_form_orientation(g: &Graph) -> OneForm {
    OneForm::new(vec![0.5; g.m()])
}

/// Tree-based canonical form: `1/2` on non-tree edges inside a bipartition class or loops, else 0.
pub fn canonical_form_tree(g: &Graph, tree: &SpanningTree) -> OneForm {
    let (v1, _) = tree_bipartition(g, tree);
    let mut side = vec![false; g.n()];
    for v in v1 {
        side[v] = true;
    }
    let mut w = OneForm::zeros(g.m());
    for &e in &tree.non_tree_edges {
        let (t, h) = g.edges()[e];
        let crosses = t != h && side[t] != side[h];
        w.coeffs[e] = if crosses { 0.0 } else { 0.5 };
    }
    w
}

/// The canonical 2-torsion character `theta`.
pub fn canonical_character(g: &Graph, hd: &HomologyData) -> Character {
    hd.character_of(&canonical_form_tree(g, &hd.tree))
}

/// `theta - chi`.
pub fn dual_character(theta: &Character, chi: &Character) -> Character {
    theta.sub(chi)
}

/// A 1-form representing `theta - chi_w`.
pub fn dual_form(g: &Graph, hd: &HomologyData, omega: &OneForm) -> OneForm {
    canonical_form_tree(g, &hd.tree).sub(omega)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AntisymmetryReport {
    /// Distance between `spec A` at the dual form and `-spec A`.
    pub a_distance: f64,
    /// Distance between `spec W` at the dual form and `-spec W`.
    pub w_distance: f64,
    /// Distance between `spec W` and its complex conjugate.
    pub conj_distance: f64,
    pub tol: f64,
    pub passed: bool,
}

/// Checks that twisting by `theta - w` negates both spectra of the twist by `w`.
pub fn verify_antisymmetry(
    g: &Graph,
    hd: &HomologyData,
    omega: &OneForm,
    tol: Option<f64>,
) -> Result<AntisymmetryReport> {
    let dual = dual_form(g, hd, omega);
    let sa = spectrum_a(g, omega)?;
    let sw = spectrum_w(g, omega)?;
    let da = spectrum_a(g, &dual)?;
    let dw = spectrum_w(g, &dual)?;
    let tol = tol.unwrap_or_else(|| sw.default_tol().max(sa.default_tol()));
    let a_distance = da.distance(&sa.neg());
    let w_distance = dw.distance(&sw.neg());
    let conj_distance = sw.distance(&sw.conj());
    Ok(AntisymmetryReport {
        a_distance,
        w_distance,
        conj_distance,
        tol,
        passed: a_distance <= tol && w_distance <= tol && conj_distance <= tol,
    })
}

/// Images of an adjacency spectrum under the map to the Hashimoto spectrum of a
/// `(q+1)`-regular graph of genus `g`.
///
/// Each `lambda` contributes the roots of `k^2 - lambda k + q`, and `g - 1` copies
/// of `1` and `-1` are appended. For `g = 0` one copy of each is removed instead.
pub fn regular_spec_map(q: usize, spec_a: &Spectrum, g: usize) -> Spectrum {
    let qf = q as f64;
    let mut out = Vec::with_capacity(2 * spec_a.len() + 2 * g);
    for &lam in &spec_a.eigenvalues {
        let disc = (lam * lam - 4.0 * qf).sqrt();
        out.push((lam + disc) / 2.0);
        out.push((lam - disc) / 2.0);
    }
    let one = Complex64::new(1.0, 0.0);
    if g >= 1 {
        for _ in 1..g {
            out.push(one);
            out.push(-one);
        }
    } else {
        for target in [one, -one] {
            if let Some(i) = out
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 - target).norm().total_cmp(&(b.1 - target).norm()))
                .map(|(i, _)| i)
            {
                out.swap_remove(i);
            }
        }
    }
    Spectrum::new(out)
}

/// [`regular_spec_map`] after checking the graph is `(q+1)`-regular.
pub fn regular_spec_map_checked(g: &Graph, q: usize, spec_a: &Spectrum) -> Result<Spectrum> {
    match g.is_regular() {
        Some(d) if d == q + 1 => Ok(regular_spec_map(q, spec_a, g.genus())),
        _ => Err(Error::NotRegular(q + 1)),
    }
}

/// One grid point of a torus sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub coords: Vec<f64>,
    pub rho_a: f64,
    pub rho_w: f64,
}

/// Grid points `k / grid_n`, last coordinate fastest.
pub fn grid_points(g: usize, grid_n: usize, budget: f64) -> Result<Vec<Vec<f64>>> {
    let total = (grid_n as f64).powi(g as i32);
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let total = total as usize;
    Ok((0..total)
        .map(|mut idx| {
            let mut c = vec![0.0; g];
            for slot in c.iter_mut().rev() {
                *slot = (idx % grid_n) as f64 / grid_n as f64;
                idx /= grid_n;
            }
            c
        })
        .collect())
}

/// Spectral radii of `A_w` and `W_w` over a uniform grid on the character torus.
pub fn radius_sweep(
    g: &Graph,
    hd: &HomologyData,
    grid_n: usize,
    budget: f64,
) -> Result<Vec<SweepRow>> {
    if hd.genus() == 0 {
        return Err(Error::GenusZero);
    }
    grid_points(hd.genus(), grid_n, budget)?
        .into_par_iter()
        .map(|coords| {
            let omega = hd.form_of(&Character::new(coords.clone()), g.m());
            Ok(SweepRow {
                rho_a: spectrum_a(g, &omega)?.radius,
                rho_w: spectrum_w(g, &omega)?.radius,
                coords,
            })
        })
        .collect()
}

/// Rows whose `rho_w` is within `tol` of the sweep maximum.
pub fn sweep_argmax(rows: &[SweepRow], tol: f64) -> Vec<&SweepRow> {
    let best = rows.iter().map(|r| r.rho_w).fold(f64::NEG_INFINITY, f64::max);
    rows.iter().filter(|r| r.rho_w >= best - tol).collect()
}

/// Number of dominant eigenvalues of `W_1`.
pub fn dominant_count(g: &Graph) -> Result<usize> {
    let s = spectrum_w(g, &OneForm::zeros(g.m()))?;
    Ok(s.dominant_count(1e-6 * s.radius.max(1.0)))
}
