//! Graph surgeries and products: short, partial short, tensor product,
//! merge, twin splitting and the weak/strong supergraph constructions.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphBuilder, GraphError, MAX_ORDER};
use crate::redundancy::{classify, is_redundant_first, GraphClass};

/// Shorts vertex `v`: completes `N(v)` into a clique, then deletes `v`.
pub fn short(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let nbrs = g.neighbors(v).to_vec();
    let mut b = GraphBuilder::new(g.order());
    for (u, w) in g.edges() {
        b.add_edge(u, w);
    }
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                b.add_edge(x, y);
            }
        }
    }
    b.build().delete_vertex(v)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TransformError {
    Graph(GraphError),
    /// Partial short requires searching subsets of N(v) pairs; degrees
    /// beyond this are out of contract.
    NeighborhoodTooLarge { degree: usize, cap: usize },
    /// Merge correspondence did not induce isomorphic subgraphs; the first
    /// offending pair of mapped vertices is reported.
    MergeMismatch { a_pair: (usize, usize), b_pair: (usize, usize) },
    /// Correspondence image repeats a vertex.
    MergeNotInjective { b_vertex: usize },
    ProductTooLarge { order: usize },
    /// Spider construction requires no isolated vertices.
    IsolatedVertex { vertex: usize },
}

impl From<GraphError> for TransformError {
    fn from(e: GraphError) -> Self {
        TransformError::Graph(e)
    }
}

impl core::fmt::Display for TransformError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TransformError::Graph(e) => write!(f, "{e}"),
            TransformError::NeighborhoodTooLarge { degree, cap } => {
                write!(f, "partial short: neighborhood of size {degree} exceeds search cap {cap}")
            }
            TransformError::MergeMismatch { a_pair, b_pair } => write!(
                f,
                "merge: edge relation differs at pair ({},{}) in A vs ({},{}) in B",
                a_pair.0, a_pair.1, b_pair.0, b_pair.1
            ),
            TransformError::MergeNotInjective { b_vertex } => {
                write!(f, "merge: correspondence maps two vertices onto {b_vertex}")
            }
            TransformError::ProductTooLarge { order } => {
                write!(f, "product order {order} exceeds the supported maximum {MAX_ORDER}")
            }
            TransformError::IsolatedVertex { vertex } => {
                write!(f, "spider construction rejects isolated vertex {vertex}")
            }
        }
    }
}

const PARTIAL_SHORT_CAP: usize = 12;

/// Partial short: adds, among `N(v)`, the lexicographically least
/// minimum-cardinality edge set leaving every neighbor with degree at
/// least 2 after `v` is deleted (capped at what edges inside the
/// neighborhood can achieve), then deletes `v`.
pub fn partial_short(g: &Graph, v: usize) -> Result<Graph, TransformError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() }.into());
    }
    let nbrs = g.neighbors(v).to_vec();
    if nbrs.len() > PARTIAL_SHORT_CAP {
        return Err(TransformError::NeighborhoodTooLarge {
            degree: nbrs.len(),
            cap: PARTIAL_SHORT_CAP,
        });
    }
    // Per-neighbor deficit: how many added edges it still needs so that
    // its degree after losing v reaches 2, capped at what is achievable
    // inside N(v).
    let deficit = |u: usize, added: &[(usize, usize)]| -> i64 {
        let base = g.degree(u) - 1; // degree after losing v
        let extra = added.iter().filter(|&&(a, b)| a == u || b == u).count();
        let missing_inside = nbrs
            .iter()
            .filter(|&&w| w != u && !g.has_edge(u, w))
            .count()
            - extra;
        let target = 2.min(base + extra + missing_inside);
        target as i64 - (base + extra) as i64
    };
    let candidates: Vec<(usize, usize)> = {
        let mut c = Vec::new();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if !g.has_edge(x, y) {
                    c.push((x, y));
                }
            }
        }
        c
    };
    let satisfied = |added: &[(usize, usize)]| nbrs.iter().all(|&u| deficit(u, added) <= 0);

    // Increasing cardinality, lexicographic within each size: the first
    // satisfying subset is the canonical choice.
    fn pick(
        candidates: &[(usize, usize)],
        size: usize,
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        satisfied: &dyn Fn(&[(usize, usize)]) -> bool,
    ) -> bool {
        if chosen.len() == size {
            return satisfied(chosen);
        }
        for i in start..candidates.len() {
            chosen.push(candidates[i]);
            if pick(candidates, size, i + 1, chosen, satisfied) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    for size in 0..=candidates.len() {
        chosen.clear();
        if pick(&candidates, size, 0, &mut chosen, &satisfied) {
            break;
        }
    }

    let mut b = GraphBuilder::new(g.order());
    for (u, w) in g.edges() {
        b.add_edge(u, w);
    }
    for &(x, y) in &chosen {
        b.add_edge(x, y);
    }
    Ok(b.build().delete_vertex(v)?)
}

/// Tensor (Kronecker) product: `(u,v) ~ (s,t)` iff `u~s` and `v~t`.
/// Vertex `(u,v)` gets index `u * |b| + v`.
pub fn tensor_product(a: &Graph, b: &Graph) -> Result<Graph, TransformError> {
    let order = a.order() * b.order();
    if order > MAX_ORDER {
        return Err(TransformError::ProductTooLarge { order });
    }
    let nb = b.order();
    let mut out = GraphBuilder::new(order);
    for (u, s) in a.edges() {
        for (v, t) in b.edges() {
            out.add_edge(u * nb + v, s * nb + t);
            out.add_edge(u * nb + t, s * nb + v);
        }
    }
    Ok(out.build())
}

/// Merges `a` into `b`, identifying each vertex `x` in the correspondence
/// domain with `map(x)` in `b`. The identified subgraphs must be
/// isomorphic under the map; this is verified. Result: `b`'s vertices
/// first (labels unchanged), then `a`'s unidentified vertices in
/// increasing order.
pub fn merge(a: &Graph, b: &Graph, correspondence: &[(usize, usize)]) -> Result<Graph, TransformError> {
    let mut image = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    for &(x, y) in correspondence {
        if x >= a.order() {
            return Err(GraphError::VertexOutOfRange { vertex: x, order: a.order() }.into());
        }
        if y >= b.order() {
            return Err(GraphError::VertexOutOfRange { vertex: y, order: b.order() }.into());
        }
        if used[y] || image[x] != usize::MAX {
            return Err(TransformError::MergeNotInjective { b_vertex: y });
        }
        image[x] = y;
        used[y] = true;
    }
    for &(x1, y1) in correspondence {
        for &(x2, y2) in correspondence {
            if x1 < x2 && a.has_edge(x1, x2) != b.has_edge(y1, y2) {
                return Err(TransformError::MergeMismatch { a_pair: (x1, x2), b_pair: (y1, y2) });
            }
        }
    }
    let mut label = image;
    let mut next = b.order();
    for x in 0..a.order() {
        if label[x] == usize::MAX {
            label[x] = next;
            next += 1;
        }
    }
    let mut out = GraphBuilder::new(next);
    for (u, v) in b.edges() {
        out.add_edge(u, v);
    }
    for (x1, x2) in a.edges() {
        out.add_edge(label[x1], label[x2]);
    }
    Ok(out.build())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitKind {
    /// New vertex gets N(v); not adjacent to v.
    Weak,
    /// New vertex gets N[v]: additionally adjacent to v.
    Strong,
}

/// Splits `v` into a pair of twins; the new vertex is appended with
/// label `n`.
pub fn split_twin(g: &Graph, v: usize, kind: SplitKind) -> Result<Graph, GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let n = g.order();
    let mut b = GraphBuilder::new(n + 1);
    for (u, w) in g.edges() {
        b.add_edge(u, w);
    }
    for u in g.neighbors(v).iter() {
        b.add_edge(n, u);
    }
    if kind == SplitKind::Strong {
        b.add_edge(n, v);
    }
    Ok(b.build())
}

/// Adds `k` mutually non-adjacent vertices, each adjacent to every
/// original vertex. For `k >= 2` and base order >= 2 the result is
/// strong: the added twins surround everything, and every pair of
/// vertices is adjacent or has two common neighbors.
pub fn add_dominating_twins(g: &Graph, k: usize) -> Result<Graph, TransformError> {
    assert!(k >= 2, "at least two dominating twins required");
    let n = g.order();
    if n + k > MAX_ORDER {
        return Err(TransformError::ProductTooLarge { order: n + k });
    }
    let mut b = GraphBuilder::new(n + k);
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for t in n..n + k {
        for u in 0..n {
            b.add_edge(t, u);
        }
    }
    Ok(b.build())
}

/// Weak-splits every non-redundant vertex of `g`, producing a strong
/// graph in which the original distances are unchanged. Already-strong
/// inputs come back as-is.
pub fn strengthen_by_twin_split(g: &Graph) -> Graph {
    let non_redundant: Vec<usize> =
        (0..g.order()).filter(|&v| !is_redundant_first(g, v)).collect();
    let mut out = g.clone();
    for &v in &non_redundant {
        out = split_twin(&out, v, SplitKind::Weak).expect("original vertex stays in range");
    }
    out
}

/// Adjoins a k-legged spider (star on k+1 vertices) and attaches each
/// redundant vertex of `g` to its own leaf, weakening the graph. Weak
/// inputs (k = 0) come back unchanged.
pub fn spider_weaken(g: &Graph) -> Result<Graph, TransformError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(TransformError::IsolatedVertex { vertex: v });
    }
    let redundant: Vec<usize> = (0..g.order()).filter(|&v| is_redundant_first(g, v)).collect();
    let k = redundant.len();
    if k == 0 {
        return Ok(g.clone());
    }
    let n = g.order();
    // Center at n, leaves n+1..n+k.
    let mut b = GraphBuilder::new(n + k + 1);
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (i, &r) in redundant.iter().enumerate() {
        b.add_edge(n, n + 1 + i);
        b.add_edge(n + 1 + i, r);
    }
    Ok(b.build())
}

/// Convenience: classification after a transform, used by tests and CLI.
pub fn class_of(g: &Graph) -> GraphClass {
    classify(g).class
}
