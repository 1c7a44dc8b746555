//! Finite connected multigraphs with a fixed orientation.
//!
//! Edge `i` in input order is the positively oriented edge `e_i`; oriented edge
//! index `i + m` is its inverse. Every matrix indexed by oriented edges in this
//! crate uses that layout.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Connected multigraph. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting empty, out-of-range and disconnected input.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for (i, &(t, h)) in edges.iter().enumerate() {
            for v in [t, h] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { edge: i, vertex: v, n });
                }
            }
        }
        let m = edges.len();
        let mut out = vec![Vec::new(); n];
        for (i, &(t, h)) in edges.iter().enumerate() {
            out[t].push(i);
            out[h].push(i + m);
        }
        let g = Graph { n, edges, out };
        if !g.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &a in &self.out[v] {
                let w = self.head(a);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// First Betti number `m - n + 1`.
    pub fn genus(&self) -> usize {
        self.m() + 1 - self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_oriented(&self) -> usize {
        2 * self.m()
    }

    pub fn tail(&self, a: usize) -> usize {
        let m = self.m();
        if a < m {
            self.edges[a].0
        } else {
            self.edges[a - m].1
        }
    }

    pub fn head(&self, a: usize) -> usize {
        let m = self.m();
        if a < m {
            self.edges[a].1
        } else {
            self.edges[a - m].0
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        let m = self.m();
        if a < m {
            a + m
        } else {
            a - m
        }
    }

    /// Underlying unoriented edge and orientation sign (+1 for `e_i`, -1 for its inverse).
    pub fn edge_sign(&self, a: usize) -> (usize, i64) {
        let m = self.m();
        if a < m {
            (a, 1)
        } else {
            (a - m, -1)
        }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (t, h) = self.edges[e];
        t == h
    }

    /// Oriented edges leaving `v`, in input edge order. A loop appears twice.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Degree of `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// `a` feeds into `b`: head of `a` is the tail of `b` and `b` is not `a^{-1}`.
    pub fn feeds_into(&self, a: usize, b: usize) -> bool {
        self.head(a) == self.tail(b) && b != self.inverse(a)
    }

    /// Oriented edges that `a` feeds into.
    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let inv = self.inverse(a);
        self.out[self.head(a)].iter().copied().filter(move |&b| b != inv)
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let m = self.m();
        let mut best: Option<usize> = None;
        if self.edges.iter().any(|&(t, h)| t == h) {
            return Some(1);
        }
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if (a == c && b == d) || (a == d && b == c) {
                    return Some(2);
                }
            }
        }
        // Shortest cycle through each edge: remove it and find the distance between its ends.
        for e in 0..m {
            let (s, t) = self.edges[e];
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &a in &self.out[v] {
                    if a % m == e {
                        continue;
                    }
                    let w = self.head(a);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if dist[t] != usize::MAX {
                let len = dist[t] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
        best
    }
}

/// BFS spanning tree rooted at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Tree edge indices, ascending.
    pub tree_edges: Vec<usize>,
    /// Non-tree edge indices, ascending. These index the homology basis.
    pub non_tree_edges: Vec<usize>,
    /// Oriented edge from the parent into each vertex; `None` at the root.
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl SpanningTree {
    /// Oriented edges of the unique tree path from `v` to `w`.
    pub fn path(&self, g: &Graph, v: usize, w: usize) -> Vec<usize> {
        let (mut x, mut y) = (v, w);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[x] > self.depth[y] {
            let a = self.parent[x].expect("non-root vertex has a parent");
            up.push(g.inverse(a));
            x = g.tail(a);
        }
        while self.depth[y] > self.depth[x] {
            let a = self.parent[y].expect("non-root vertex has a parent");
            down.push(a);
            y = g.tail(a);
        }
        while x != y {
            let a = self.parent[x].expect("non-root vertex has a parent");
            up.push(g.inverse(a));
            x = g.tail(a);
            let b = self.parent[y].expect("non-root vertex has a parent");
            down.push(b);
            y = g.tail(b);
        }
        down.reverse();
        up.extend(down);
        up
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree_edges.binary_search(&e).is_ok()
    }
}

/// Deterministic BFS tree from vertex 0, scanning incident edges in input order.
pub fn spanning_tree(g: &Graph) -> SpanningTree {
    let n = g.n();
    let m = g.m();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut in_tree = vec![false; m];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &a in g.out_edges(v) {
            let w = g.head(a);
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(a);
                depth[w] = depth[v] + 1;
                in_tree[a % m] = true;
                queue.push_back(w);
            }
        }
    }
    let (tree_edges, non_tree_edges) = (0..m).partition(|&e| in_tree[e]);
    SpanningTree {
        tree_edges,
        non_tree_edges,
        parent,
        depth,
    }
}

/// Two-coloring of the tree by depth parity; vertex 0 lands in the first class.
pub fn tree_bipartition(g: &Graph, t: &SpanningTree) -> (Vec<usize>, Vec<usize>) {
    (0..g.n()).partition(|&v| t.depth[v] % 2 == 0)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let t = spanning_tree(g);
    g.edges()
        .iter()
        .all(|&(a, b)| t.depth[a] % 2 != t.depth[b] % 2)
}

/// Result of pruning degree-one vertices.
#[derive(Debug, Clone)]
pub struct TwoCore {
    pub graph: Graph,
    /// Original index of each surviving vertex.
    pub vertex_map: Vec<usize>,
    /// Original index of each surviving edge.
    pub edge_map: Vec<usize>,
}

/// Repeatedly deletes degree-one vertices together with their edge.
pub fn two_core(g: &Graph) -> Result<TwoCore> {
    if g.genus() == 0 {
        return Err(Error::GenusZero);
    }
    let m = g.m();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive_v = vec![true; g.n()];
    let mut alive_e = vec![true; m];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive_v[v] || deg[v] != 1 {
            continue;
        }
        alive_v[v] = false;
        let a = g
            .out_edges(v)
            .iter()
            .copied()
            .find(|&a| alive_e[a % m])
            .expect("degree-one vertex has one live edge");
        alive_e[a % m] = false;
        deg[v] = 0;
        let w = g.head(a);
        deg[w] -= 1;
        if deg[w] == 1 {
            stack.push(w);
        }
    }
    let vertex_map: Vec<usize> = (0..g.n()).filter(|&v| alive_v[v]).collect();
    let mut relabel = vec![usize::MAX; g.n()];
    for (i, &v) in vertex_map.iter().enumerate() {
        relabel[v] = i;
    }
    let edge_map: Vec<usize> = (0..m).filter(|&e| alive_e[e]).collect();
    let edges = edge_map
        .iter()
        .map(|&e| {
            let (t, h) = g.edges()[e];
            (relabel[t], relabel[h])
        })
        .collect();
    Ok(TwoCore {
        graph: Graph::new(vertex_map.len(), edges)?,
        vertex_map,
        edge_map,
    })
}
