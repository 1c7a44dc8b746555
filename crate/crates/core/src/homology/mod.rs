//! Chains, 1-forms, the homology basis attached to a spanning tree, and
//! characters of `H1(G, Z)` in tree coordinates.

mod quotient;
pub mod snf;

use faer::linalg::solvers::Solve;
use faer::{Mat, Side};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{spanning_tree, Graph, SpanningTree};

pub use quotient::QuotientGroup;
pub use snf::{kernel_mod, smith_normal_form, IntMatrix, Snf};

/// `e(x) = exp(2 pi i x)`.
pub fn e(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * x)
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Real 1-form; `coeffs[i]` is its value on the positively oriented edge `e_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    pub coeffs: Vec<f64>,
}

impl OneForm {
    pub fn new(coeffs: Vec<f64>) -> Self {
        OneForm { coeffs }
    }

    pub fn zeros(m: usize) -> Self {
        OneForm::new(vec![0.0; m])
    }

    /// `d e_i`.
    pub fn basis(m: usize, i: usize) -> Self {
        let mut w = OneForm::zeros(m);
        w.coeffs[i] = 1.0;
        w
    }

    /// Exact form `df`, `(df)(e) = f(head) - f(tail)`.
    pub fn exact(g: &Graph, f: &[f64]) -> Self {
        OneForm::new(g.edges().iter().map(|&(t, h)| f[h] - f[t]).collect())
    }

    /// Value on an oriented edge index.
    pub fn at(&self, a: usize) -> f64 {
        let m = self.coeffs.len();
        if a < m {
            self.coeffs[a]
        } else {
            -self.coeffs[a - m]
        }
    }

    pub fn eval_chain(&self, chain: &[i64]) -> f64 {
        self.coeffs.iter().zip(chain).map(|(w, &c)| w * c as f64).sum()
    }

    pub fn add(&self, other: &OneForm) -> OneForm {
        OneForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &OneForm) -> OneForm {
        OneForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: f64) -> OneForm {
        OneForm::new(self.coeffs.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, other: &OneForm) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    /// Every edge value is a half-integer, so the twist is real and integral.
    pub fn is_half_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|&c| (2.0 * c - (2.0 * c).round()).abs() < 1e-12)
    }
}

/// Point of the character torus, in coordinates dual to the tree homology basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub coords: Vec<f64>,
}

impl Character {
    /// Reduces coordinates mod 1.
    pub fn new(coords: Vec<f64>) -> Self {
        Character {
            coords: coords.into_iter().map(frac).collect(),
        }
    }

    pub fn trivial(g: usize) -> Self {
        Character {
            coords: vec![0.0; g],
        }
    }

    pub fn genus(&self) -> usize {
        self.coords.len()
    }

    /// `chi(alpha) = e(c . alpha)`.
    pub fn value(&self, alpha: &[i64]) -> Complex64 {
        e(self.phase(alpha))
    }

    pub fn phase(&self, alpha: &[i64]) -> f64 {
        self.coords.iter().zip(alpha).map(|(c, &a)| c * a as f64).sum()
    }

    pub fn neg(&self) -> Character {
        Character::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Character) -> Character {
        Character::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    /// Equality on the torus with tolerance `1e-9`.
    pub fn approx_eq(&self, other: &Character) -> bool {
        self.coords.len() == other.coords.len()
            && self.coords.iter().zip(&other.coords).all(|(a, b)| {
                let d = frac(a - b);
                d.min(1.0 - d) < 1e-9
            })
    }

    pub fn is_two_torsion(&self) -> bool {
        self.coords.iter().all(|&c| {
            let d = frac(2.0 * c);
            d.min(1.0 - d) < 1e-9
        })
    }
}

/// Boundary map on 1-chains: `n x m`, `+1` at the head and `-1` at the tail.
pub fn boundary_matrix(g: &Graph) -> IntMatrix {
    let mut b = vec![vec![0i64; g.m()]; g.n()];
    for (i, &(t, h)) in g.edges().iter().enumerate() {
        b[h][i] += 1;
        b[t][i] -= 1;
    }
    b
}

/// Differential on 0-forms: `m x n`, the transpose of the boundary.
pub fn differential_matrix(g: &Graph) -> IntMatrix {
    let b = boundary_matrix(g);
    (0..g.m()).map(|e| (0..g.n()).map(|v| b[v][e]).collect()).collect()
}

/// Combinatorial Laplacian `d* d` on vertices; loops contribute nothing.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let mut l = vec![vec![0i64; g.n()]; g.n()];
    for &(t, h) in g.edges() {
        if t != h {
            l[t][t] += 1;
            l[h][h] += 1;
            l[t][h] -= 1;
            l[h][t] -= 1;
        }
    }
    l
}

/// Splits `omega` into its harmonic and exact parts.
///
/// The exact part is `df` where `f` solves the Laplace equation with `f(0) = 0`.
pub fn hodge_decompose(g: &Graph, omega: &OneForm) -> Result<(OneForm, OneForm)> {
    if omega.coeffs.len() != g.m() {
        return Err(Error::DimensionMismatch {
            expected: g.m(),
            got: omega.coeffs.len(),
        });
    }
    let n = g.n();
    let mut f = vec![0.0; n];
    if n > 1 {
        let lap = laplacian(g);
        let mut rhs = vec![0.0; n];
        for (i, &(t, h)) in g.edges().iter().enumerate() {
            rhs[h] += omega.coeffs[i];
            rhs[t] -= omega.coeffs[i];
        }
        let reduced = Mat::<f64>::from_fn(n - 1, n - 1, |i, j| lap[i + 1][j + 1] as f64);
        let b = Mat::<f64>::from_fn(n - 1, 1, |i, _| rhs[i + 1]);
        let llt = reduced
            .llt(Side::Lower)
            .map_err(|_| Error::LinearSolveFailure)?;
        let x = llt.solve(&b);
        for i in 1..n {
            f[i] = x[(i - 1, 0)];
        }
    }
    let exact = OneForm::exact(g, &f);
    Ok((omega.sub(&exact), exact))
}

/// Divergence `d* omega` at every vertex.
pub fn divergence(g: &Graph, omega: &OneForm) -> Vec<f64> {
    let mut div = vec![0.0; g.n()];
    for (i, &(t, h)) in g.edges().iter().enumerate() {
        div[h] += omega.coeffs[i];
        div[t] -= omega.coeffs[i];
    }
    div
}

/// Spanning tree together with the induced bases of `H1(G, Z)` and its dual.
#[derive(Debug, Clone)]
pub struct HomologyData {
    pub tree: SpanningTree,
    /// `u_i = e_i + P_i`, where `P_i` is the tree path closing the non-tree edge `e_i`.
    pub basis: Vec<Vec<i64>>,
    /// Harmonic representatives dual to `basis`.
    pub dual_basis: Vec<Vec<f64>>,
    /// `g x m` matrix sending a closed chain to its coordinates in `basis`.
    pub abel_matrix: IntMatrix,
}

impl HomologyData {
    /// Homology data for the default BFS tree.
    pub fn new(g: &Graph) -> Self {
        homology_data(g, spanning_tree(g))
    }

    pub fn genus(&self) -> usize {
        self.basis.len()
    }

    pub fn non_tree_edges(&self) -> &[usize] {
        &self.tree.non_tree_edges
    }

    /// Coordinates of a chain in the basis `u`. Only meaningful for cycles.
    pub fn chain_coords(&self, chain: &[i64]) -> Vec<i64> {
        self.tree.non_tree_edges.iter().map(|&e| chain[e]).collect()
    }

    /// Homology class of a closed walk given as oriented edge indices.
    pub fn abelianize(&self, g: &Graph, walk: &[usize]) -> Result<Vec<i64>> {
        let chain = walk_chain(g, walk)?;
        if let (Some(&first), Some(&last)) = (walk.first(), walk.last()) {
            if g.head(last) != g.tail(first) {
                return Err(Error::NotClosed);
            }
        }
        Ok(self.chain_coords(&chain))
    }

    /// Character induced by a 1-form.
    pub fn character_of(&self, omega: &OneForm) -> Character {
        Character::new(
            self.basis
                .iter()
                .map(|u| omega.eval_chain(u))
                .collect(),
        )
    }

    /// Representative 1-form `sum c_j de_j` supported on non-tree edges.
    pub fn form_of(&self, chi: &Character, m: usize) -> OneForm {
        let mut w = OneForm::zeros(m);
        for (&e, &c) in self.tree.non_tree_edges.iter().zip(&chi.coords) {
            w.coeffs[e] = c;
        }
        w
    }
}

/// 1-chain of a walk, checking consecutive edges meet.
pub fn walk_chain(g: &Graph, walk: &[usize]) -> Result<Vec<i64>> {
    let mut chain = vec![0i64; g.m()];
    for (k, &a) in walk.iter().enumerate() {
        if a >= g.num_oriented() {
            return Err(Error::InvalidWalk);
        }
        if k > 0 && g.head(walk[k - 1]) != g.tail(a) {
            return Err(Error::InvalidWalk);
        }
        let (e, s) = g.edge_sign(a);
        chain[e] += s;
    }
    Ok(chain)
}

pub fn homology_data(g: &Graph, tree: SpanningTree) -> HomologyData {
    let m = g.m();
    let mut basis = Vec::with_capacity(tree.non_tree_edges.len());
    for &e in &tree.non_tree_edges {
        let (t, h) = g.edges()[e];
        let mut u = vec![0i64; m];
        u[e] += 1;
        for a in tree.path(g, h, t) {
            let (f, s) = g.edge_sign(a);
            u[f] += s;
        }
        basis.push(u);
    }
    let dual_basis = tree
        .non_tree_edges
        .iter()
        .map(|&e| {
            hodge_decompose(g, &OneForm::basis(m, e))
                .expect("reduced Laplacian of a connected graph is positive definite")
                .0
                .coeffs
        })
        .collect();
    let abel_matrix = tree
        .non_tree_edges
        .iter()
        .map(|&e| (0..m).map(|f| i64::from(f == e)).collect())
        .collect();
    HomologyData {
        tree,
        basis,
        dual_basis,
        abel_matrix,
    }
}

/// `chi_omega` evaluated on a 1-chain.
pub fn char_value_chain(omega: &OneForm, chain: &[i64]) -> Complex64 {
    e(omega.eval_chain(chain))
}

/// Number of spanning trees, by fraction-free elimination of a Laplacian cofactor.
pub fn complexity(g: &Graph) -> BigInt {
    let lap = laplacian(g);
    let n = g.n();
    let reduced: Vec<Vec<i128>> = (1..n)
        .map(|i| (1..n).map(|j| lap[i][j] as i128).collect())
        .collect();
    match bareiss_i128(reduced.clone()) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(
            reduced
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let r = (k + 1..n).find(|&r| a[r][k] != 0)?;
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j].checked_mul(a[k][k])?;
                let y = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
        }
        prev = a[k][k];
    }
    Some(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::from(1)
    } else {
        a[n - 1][n - 1].clone()
    };
    if negate {
        -det
    } else {
        det
    }
}

/// Volume of the character torus, `1 / sqrt(w(G))`.
pub fn torus_volume(g: &Graph) -> f64 {
    1.0 / complexity(g).to_f64().unwrap_or(f64::INFINITY).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, k4, theta};
    use proptest::prelude::*;

    #[test]
    fn boundary_conventions() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(boundary_matrix(&g), vec![vec![-1], vec![1]]);
        let l = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(boundary_matrix(&l), vec![vec![0]]);
        let lap = laplacian(&k4());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(lap[i][j], if i == j { 3 } else { -1 });
            }
            assert_eq!(lap[i].iter().sum::<i64>(), 0);
        }
        let d = differential_matrix(&k4());
        assert_eq!(d[4], vec![-1, 0, 1, 0]);
    }

    #[test]
    fn bridge_form_is_exact() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let (h, x) = hodge_decompose(&g, &OneForm::basis(4, 3)).unwrap();
        assert!(h.coeffs.iter().all(|c| c.abs() < 1e-12));
        assert!((x.coeffs[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_and_harmonic_inputs() {
        let g = theta(1, 2, 3);
        let f = [0.3, -1.2, 0.7, 2.0, 0.1];
        let (h, _) = hodge_decompose(&g, &OneForm::exact(&g, &f)).unwrap();
        assert!(h.norm_sq() < 1e-20);
        let hd = HomologyData::new(&g);
        let w = OneForm::new(hd.dual_basis[0].clone());
        let (_, x) = hodge_decompose(&g, &w).unwrap();
        assert!(x.norm_sq() < 1e-20);
    }

    #[test]
    fn homology_basis_properties() {
        for g in [k4(), theta(1, 2, 3), theta(2, 2, 4), cycle(3)] {
            let hd = HomologyData::new(&g);
            let b = boundary_matrix(&g);
            for (j, u) in hd.basis.iter().enumerate() {
                for row in &b {
                    assert_eq!(row.iter().zip(u).map(|(x, y)| x * y).sum::<i64>(), 0);
                }
                let coords = snf::mat_vec(&hd.abel_matrix, u).unwrap();
                for (i, &c) in coords.iter().enumerate() {
                    assert_eq!(c, i64::from(i == j));
                }
                for (i, phi) in hd.dual_basis.iter().enumerate() {
                    let p = OneForm::new(phi.clone()).eval_chain(u);
                    assert!((p - if i == j { 1.0 } else { 0.0 }).abs() < 1e-10);
                }
            }
            for phi in &hd.dual_basis {
                let div = divergence(&g, &OneForm::new(phi.clone()));
                assert!(div.iter().all(|d| d.abs() < 1e-10));
            }
        }
    }

    #[test]
    fn cycle_basis_traverses_once() {
        let g = cycle(3);
        let hd = HomologyData::new(&g);
        assert_eq!(hd.basis, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn abelianize_walks() {
        let g = k4();
        let hd = HomologyData::new(&g);
        // u_1 is 1 -> 2 -> 0 -> 1.
        assert_eq!(hd.abelianize(&g, &[1, 10, 0]).unwrap(), vec![1, 0, 0]);
        assert_eq!(hd.abelianize(&g, &[1, 7]).unwrap(), vec![0, 0, 0]);
        assert_eq!(hd.abelianize(&g, &[0, 1]), Err(Error::NotClosed));
        assert_eq!(hd.abelianize(&g, &[0, 2]), Err(Error::InvalidWalk));
    }

    #[test]
    fn k4_triangle_character_value() {
        let g = k4();
        let hd = HomologyData::new(&g);
        let t = 1.0 / 6.0;
        let omega1 = OneForm::new(vec![t, t, t, t, 0.0, 0.0]);
        // e12 + e23 + e31: edges 0, 1 and the inverse of 4.
        let alpha1 = hd.abelianize(&g, &[0, 1, 10]).unwrap();
        let chi = hd.character_of(&omega1);
        assert!((chi.value(&alpha1) - e(1.0 / 3.0)).norm() < 1e-12);
        let chain = walk_chain(&g, &[0, 1, 10]).unwrap();
        assert!((char_value_chain(&omega1, &chain) - chi.value(&alpha1)).norm() < 1e-12);
        let neg: Vec<i64> = alpha1.iter().map(|a| -a).collect();
        assert!((chi.value(&neg) - chi.value(&alpha1).conj()).norm() < 1e-12);
        assert!((Character::trivial(3).value(&alpha1) - 1.0).norm() < 1e-15);
    }

    #[test]
    fn complexity_values() {
        assert_eq!(complexity(&k4()), BigInt::from(16));
        assert!((torus_volume(&k4()) - 0.25).abs() < 1e-15);
        assert_eq!(complexity(&Graph::new(3, vec![(0, 1), (1, 2)]).unwrap()), BigInt::from(1));
        assert_eq!(complexity(&cycle(3)), BigInt::from(3));
        assert_eq!(complexity(&Graph::new(1, vec![(0, 0)]).unwrap()), BigInt::from(1));
    }

    #[test]
    fn complexity_big_fallback_agrees() {
        // K_n has n^(n-2) spanning trees.
        let n = 30;
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let g = Graph::new(n, edges).unwrap();
        assert_eq!(complexity(&g), BigInt::from(n).pow(n as u32 - 2));
    }

    proptest! {
        #[test]
        fn hodge_splits_orthogonally(coeffs in proptest::collection::vec(-3.0f64..3.0, 6)) {
            let g = theta(1, 2, 3);
            let w = OneForm::new(coeffs);
            let (h, x) = hodge_decompose(&g, &w).unwrap();
            let scale = w.norm_sq().max(1.0);
            prop_assert!(h.dot(&x).abs() <= 1e-10 * scale);
            prop_assert!(divergence(&g, &h).iter().all(|d| d.abs() < 1e-10 * scale));
            let (h2, x2) = hodge_decompose(&g, &h).unwrap();
            prop_assert!(x2.norm_sq() < 1e-20 * scale);
            prop_assert!(h2.sub(&h).norm_sq() < 1e-20 * scale);
            // A form and its harmonic part agree on every cycle.
            let hd = HomologyData::new(&g);
            for u in &hd.basis {
                prop_assert!((w.eval_chain(u) - h.eval_chain(u)).abs() < 1e-10 * scale);
            }
        }

        #[test]
        fn characters_are_periodic(
            coords in proptest::collection::vec(0.0f64..1.0, 3),
            shift in proptest::collection::vec(-3i64..3, 3),
            alpha in proptest::collection::vec(-5i64..5, 3),
        ) {
            let chi = Character::new(coords.clone());
            let moved = Character::new(coords.iter().zip(&shift).map(|(c, &s)| c + s as f64).collect());
            prop_assert!((chi.value(&alpha) - moved.value(&alpha)).norm() < 1e-10);
            prop_assert!(chi.approx_eq(&moved));
        }
    }
}
