//! Immutable simple undirected graphs with per-vertex adjacency bitsets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::BitSet;

/// Hard cap on graph order, matching the graph6 codec limits we support.
pub const MAX_ORDER: usize = 4096;

/// Simple undirected graph. Vertices are `0..n`; `adj[u]` has bit `v` set
/// iff the edge `{u,v}` is present. Adjacency is kept symmetric and
/// loop-free by construction, and graphs are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, order: usize },
    OrderTooLarge { order: usize },
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::OrderTooLarge { order } => {
                write!(f, "graph order {order} exceeds the supported maximum {MAX_ORDER}")
            }
        }
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            n,
            adj: (0..n).map(|_| BitSet::new(n.max(1))).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|b| b.count()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closed neighborhood `N[u]` as a fresh bitset.
    pub fn closed_neighbors(&self, u: usize) -> BitSet {
        let mut s = self.adj[u].clone();
        s.insert(u);
        s
    }

    /// Deletes `v`, relabeling the survivors by compaction (labels above
    /// `v` shift down by one).
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let mut b = GraphBuilder::new(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let nu = u - (u > v) as usize;
            for w in self.adj[u].iter() {
                if w > u || w == v {
                    continue;
                }
                // w < u, w != v
                let nw = w - (w > v) as usize;
                b.add_edge(nu, nw);
            }
        }
        Ok(b.build())
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// Subgraph induced by the vertex set `s` (given as sorted-or-not
    /// labels; the result relabels them in increasing order).
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut labels: Vec<usize> = s.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if let Some(&bad) = labels.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, order: self.n });
        }
        let mut b = GraphBuilder::new(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// Applies a permutation: vertex `u` of `self` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]);
        }
        b.build()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = BitSet::new(self.n);
        let mut stack = alloc::vec![0usize];
        seen.insert(0);
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn component_count(&self) -> usize {
        let mut seen = BitSet::new(self.n.max(1));
        let mut comps = 0;
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            comps += 1;
            let mut stack = alloc::vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
        }
        comps
    }

    /// Debug-friendly edge list rendering, e.g. `G5{0-1,1-2}`.
    pub fn describe(&self) -> String {
        let body: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("G{}{{{}}}", self.n, body.join(","))
    }
}

/// Mutable construction phase; `build` freezes into a `Graph`.
pub struct GraphBuilder {
    n: usize,
    adj: Vec<BitSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> GraphBuilder {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        GraphBuilder {
            n,
            adj: (0..n).map(|_| BitSet::new(n.max(1))).collect(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for order {}", self.n);
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn build(self) -> Graph {
        Graph { n: self.n, adj: self.adj }
    }
}

/// Constructors for the named graphs used throughout the test corpus.
pub mod families {
    use super::{Graph, GraphBuilder};

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            b.add_edge(u, (u + 1) % n);
        }
        b.build()
    }

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 1..n {
            b.add_edge(u - 1, u);
        }
        b.build()
    }

    /// Star `K_{1,k}` with the center at label 0.
    pub fn star(k: usize) -> Graph {
        let mut b = GraphBuilder::new(k + 1);
        for leaf in 1..=k {
            b.add_edge(0, leaf);
        }
        b.build()
    }

    /// Hypercube on `2^k` vertices; vertices are bit patterns, edges flip
    /// one bit.
    pub fn hypercube(k: u32) -> Graph {
        let n = 1usize << k;
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for bit in 0..k {
                let v = u ^ (1 << bit);
                if v > u {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// Crown graph on `2n` vertices: `a_i ~ b_j` iff `i != j`.
    pub fn crown(n: usize) -> Graph {
        let mut b = GraphBuilder::new(2 * n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    b.add_edge(i, n + j);
                }
            }
        }
        b.build()
    }

    /// Triangular prism: two triangles joined by a perfect matching.
    pub fn triangular_prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
    }

    pub fn icosahedron() -> Graph {
        // Standard edge list: top vertex 0, upper ring 1-5, lower ring 6-10,
        // bottom vertex 11.
        Graph::from_edges(
            12,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
                (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
                (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
                (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
            ],
        )
    }
}
