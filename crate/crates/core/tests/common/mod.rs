#![allow(dead_code)]

use ihara_core::generators::{random_connected, theta};
use ihara_core::{Graph, OneForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x1ba2a;

/// Twenty random connected graphs with `4 <= n <= 7` and `n <= m <= 11`.
pub fn corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..20)
        .map(|_| {
            let n = rng.gen_range(4..=7);
            let m = rng.gen_range(n..=(n * (n - 1) / 2).min(11));
            random_connected(&mut rng, n, m)
        })
        .collect()
}

/// Ten random 1-forms per corpus graph.
pub fn corpus_forms(g: &Graph, index: usize) -> Vec<OneForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ (index as u64 + 1));
    (0..10)
        .map(|_| OneForm::new((0..g.m()).map(|_| rng.gen::<f64>()).collect()))
        .collect()
}

pub fn g1() -> Graph {
    theta(1, 2, 3)
}

pub fn g2() -> Graph {
    theta(1, 3, 5)
}

pub fn g3() -> Graph {
    theta(2, 2, 4)
}

/// `(t, t, t, t, 0, 0)` on K4: the 4-cycle edges carry `t`.
pub fn k4_form(t: f64) -> OneForm {
    OneForm::new(vec![t, t, t, t, 0.0, 0.0])
}

