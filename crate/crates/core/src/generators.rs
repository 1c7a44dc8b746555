//! Built-in graph families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Complete graph on four vertices with edges 01, 12, 23, 30, 02, 13.
pub fn k4() -> Graph {
    Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).expect("valid")
}

/// Cycle of length `n >= 1`, oriented `i -> i+1`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 1, "cycle needs at least one vertex");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid")
}

/// Three internally disjoint paths of the given lengths between vertices 0 and 1.
///
/// Internal vertices are numbered consecutively from 2, path by path, and each
/// path is oriented from 0 towards 1.
pub fn theta(l0: usize, l1: usize, l2: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [l0, l1, l2] {
        assert!(len >= 1, "path lengths must be positive");
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(next, edges).expect("valid")
}

/// Random connected simple graph with `n` vertices and `m` edges.
///
/// Panics unless `n - 1 <= m <= n(n-1)/2`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2, "infeasible size");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::with_capacity(m);
    let mut present = vec![vec![false; n]; n];
    for i in 1..n {
        let (u, v) = (order[rng.gen_range(0..i)], order[i]);
        present[u][v] = true;
        present[v][u] = true;
        edges.push((u, v));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u][v])
        .collect();
    rest.shuffle(rng);
    for &(u, v) in rest.iter().take(m + 1 - n) {
        edges.push(if rng.gen() { (u, v) } else { (v, u) });
    }
    edges.shuffle(rng);
    Graph::new(n, edges).expect("connected by construction")
}
