//! Direct enumeration of circuits, independent of any spectral computation.

use std::collections::HashMap;

use num_integer::Integer;

use super::{check_budget, ClassCounts, ClassRow};
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::HomologyData;

/// Number of non-backtracking walks of length `1..=max_len`, i.e. the nodes the
/// enumeration visits.
pub fn walk_count(g: &Graph, max_len: usize) -> f64 {
    let d = g.num_oriented();
    let mut cur = vec![1.0f64; d];
    let mut total = 0.0;
    for l in 1..=max_len {
        total += cur.iter().sum::<f64>();
        if l == max_len {
            break;
        }
        let mut next = vec![0.0; d];
        for (a, &x) in cur.iter().enumerate() {
            for b in g.successors(a) {
                next[b] += x;
            }
        }
        cur = next;
    }
    total
}

/// Enumeration results over `Z^g` classes.
#[derive(Debug, Clone)]
pub struct Census {
    pub counts: ClassCounts,
    /// Total circuits found.
    pub circuits: u64,
    /// gcd of the lengths of all circuits found; 0 if none.
    pub length_gcd: u64,
}

struct Walker<'a> {
    g: &'a Graph,
    coord: Vec<Option<(usize, i64)>>,
    max_len: usize,
    path: Vec<usize>,
    alpha: Vec<i64>,
    rows: HashMap<Vec<i64>, ClassRow>,
    circuits: u64,
    length_gcd: u64,
}

impl Walker<'_> {
    fn step(&mut self, a: usize, sign: i64) {
        if let Some((i, s)) = self.coord[a] {
            self.alpha[i] += sign * s;
        }
    }

    fn record(&mut self) {
        let l = self.path.len();
        let p = &self.path;
        let rotation_less = |r: usize| (0..l).map(|i| p[(i + r) % l]).lt(p.iter().copied());
        let canonical = !(1..l).any(rotation_less);
        let period = (1..=l)
            .find(|&r| l % r == 0 && (0..l).all(|i| p[(i + r) % l] == p[i]))
            .expect("l is a period");
        let max_len = self.max_len;
        let row = self.rows.entry(self.alpha.clone()).or_insert_with(|| ClassRow {
            n: vec![0; max_len],
            pi: vec![0; max_len],
            pi_c: vec![0; max_len],
        });
        row.n[l - 1] += 1;
        if canonical {
            row.pi_c[l - 1] += 1;
            if period == l {
                row.pi[l - 1] += 1;
            }
        }
        self.circuits += 1;
        self.length_gcd = self.length_gcd.gcd(&(l as u64));
    }

    fn extend(&mut self) {
        let last = *self.path.last().expect("path is never empty");
        if self.g.feeds_into(last, self.path[0]) {
            self.record();
        }
        if self.path.len() == self.max_len {
            return;
        }
        let next: Vec<usize> = self.g.successors(last).collect();
        for b in next {
            self.path.push(b);
            self.step(b, 1);
            self.extend();
            self.step(b, -1);
            self.path.pop();
        }
    }
}

/// Enumerates every circuit of length at most `max_len`, recording its class,
/// whether it is the lexicographically least rotation, and whether it is primitive.
pub fn brute_force(g: &Graph, hd: &HomologyData, max_len: usize, budget: f64) -> Result<Census> {
    check_budget(walk_count(g, max_len), budget)?;
    let m = g.m();
    let mut coord = vec![None; g.num_oriented()];
    for (i, &e) in hd.non_tree_edges().iter().enumerate() {
        coord[e] = Some((i, 1));
        coord[e + m] = Some((i, -1));
    }
    let mut w = Walker {
        g,
        coord,
        max_len,
        path: Vec::with_capacity(max_len),
        alpha: vec![0; hd.genus()],
        rows: HashMap::new(),
        circuits: 0,
        length_gcd: 0,
    };
    if max_len > 0 {
        for s in 0..g.num_oriented() {
            w.path.push(s);
            w.step(s, 1);
            w.extend();
            w.step(s, -1);
            w.path.pop();
        }
    }
    let mut counts = ClassCounts::new(max_len);
    counts.rows = w.rows.into_iter().collect();
    counts.has_primes = true;
    Ok(Census {
        counts,
        circuits: w.circuits,
        length_gcd: w.length_gcd,
    })
}

/// gcd of the lengths `l <= max_len` admitting a circuit, from boolean powers of
/// the feeding relation.
pub fn circuit_length_gcd(g: &Graph, max_len: usize) -> u64 {
    let d = g.num_oriented();
    let mut reach: Vec<Vec<bool>> = (0..d).map(|a| (0..d).map(|b| a == b).collect()).collect();
    let mut gcd = 0u64;
    for l in 1..=max_len {
        let mut next = vec![vec![false; d]; d];
        for (a, row) in reach.iter().enumerate() {
            for (c, &r) in row.iter().enumerate() {
                if r {
                    for b in g.successors(c) {
                        next[a][b] = true;
                    }
                }
            }
        }
        reach = next;
        // The diagonal of the l-th power counts circuits of length l.
        if (0..d).any(|a| reach[a][a]) {
            gcd = gcd.gcd(&(l as u64));
        }
    }
    gcd
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, k4, theta};

    #[test]
    fn k4_totals_match_paper_sequence() {
        let g = k4();
        let hd = HomologyData::new(&g);
        let c = brute_force(&g, &hd, 10, 1e7).unwrap();
        let want = [0, 0, 24, 24, 0, 96, 168, 168, 528, 1200];
        for l in 1..=10 {
            assert_eq!(c.counts.total_n(l), want[l - 1]);
        }
    }

    #[test]
    fn triangle_has_two_prime_cycles() {
        let g = cycle(3);
        let hd = HomologyData::new(&g);
        let c = brute_force(&g, &hd, 6, 1e7).unwrap();
        let primes: u64 = c.counts.rows.values().map(|r| r.pi.iter().sum::<u64>()).sum();
        assert_eq!(primes, 2);
        assert_eq!(c.counts.pi(&[1], 3), 1);
        assert_eq!(c.counts.pi(&[-1], 3), 1);
        assert_eq!(c.counts.pi_c(&[2], 6), 1);
        assert_eq!(c.counts.pi(&[2], 6), 0);
        assert_eq!(c.length_gcd, 3);
    }

    #[test]
    fn theta_small_lengths() {
        let g = theta(1, 2, 3);
        let hd = HomologyData::new(&g);
        let c = brute_force(&g, &hd, 4, 1e7).unwrap();
        assert_eq!(c.counts.total_n(3), 6);
        assert_eq!(c.counts.total_n(4), 8);
    }

    #[test]
    fn inverse_classes_are_symmetric() {
        let g = theta(2, 2, 3);
        let hd = HomologyData::new(&g);
        let c = brute_force(&g, &hd, 10, 1e7).unwrap();
        for (alpha, row) in &c.counts.rows {
            let neg: Vec<i64> = alpha.iter().map(|x| -x).collect();
            assert_eq!(c.counts.n_seq(&neg), row.n);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = k4();
        let hd = HomologyData::new(&g);
        assert!(brute_force(&g, &hd, 30, 1e6).is_err());
        assert_eq!(walk_count(&cycle(3), 4), 24.0);
    }

    #[test]
    fn length_gcds() {
        assert_eq!(circuit_length_gcd(&k4(), 12), 1);
        assert_eq!(circuit_length_gcd(&theta(1, 3, 5), 12), 2);
        assert_eq!(circuit_length_gcd(&cycle(4), 8), 4);
    }
}
