//! The surrounds relation, twins, weak/strong links and distance
//! redundancy.
//!
//! Vertex `v` surrounds `u` iff `N(u)` is contained in `N[v]` (non-strict;
//! a vertex with empty neighborhood is surrounded by every other vertex).
//! A vertex is first-order distance-redundant when deleting it changes no
//! distance among the others; a graph is *weak* when no vertex is
//! redundant and *strong* when all are.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::dist::{distance_matrix, Dist};
use crate::graph::Graph;
use crate::walks::{walk_count_matrix, WalkOverflow};

/// Classification of a vertex pair by 2-walk structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum LinkKind {
    Adjacent,
    /// Non-adjacent with at least two common neighbors.
    StrongNonAdj,
    /// Non-adjacent with exactly one common neighbor.
    Weak,
    /// Distance greater than two.
    None,
}

/// True iff `v` surrounds `u`: every neighbor of `u` lies in `N[v]`.
/// Rejects `u == v`; the reflexive case is a notational convention, not a
/// reported fact.
pub fn surrounds(g: &Graph, v: usize, u: usize) -> bool {
    assert_ne!(u, v, "surrounds is reported on distinct vertices only");
    let mut closed = g.neighbors(v).clone();
    closed.insert(v);
    g.neighbors(u).is_subset(&closed)
}

/// Pairwise surround relation for a whole graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurroundReport {
    n: usize,
    /// Row v, column u: v surrounds u (v != u).
    rel: Vec<bool>,
    pub surrounded: Vec<bool>,
}

impl SurroundReport {
    #[inline]
    pub fn surrounds(&self, v: usize, u: usize) -> bool {
        self.rel[v * self.n + u]
    }

    pub fn surrounded_count(&self) -> usize {
        self.surrounded.iter().filter(|&&s| s).count()
    }
}

/// Builds the surround relation by the matrix criterion: `v` surrounds `u`
/// iff `[a^2 + a]_{u,v} = d_u`, evaluated with bitset rows (conjunction +
/// popcount) instead of a matrix product.
pub fn surround_pairs_matrix(g: &Graph) -> SurroundReport {
    let n = g.order();
    let mut rel = vec![false; n * n];
    let mut surrounded = vec![false; n];
    let degs: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let two_walks = g.neighbors(u).intersection_count(g.neighbors(v));
            let entry = two_walks + g.has_edge(u, v) as usize;
            if entry == degs[u] {
                rel[v * n + u] = true;
                surrounded[u] = true;
            }
        }
    }
    SurroundReport { n, rel, surrounded }
}

/// Kind tag for a twin class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum TwinKind {
    /// Equal open neighborhoods (members pairwise non-adjacent).
    Weak,
    /// Equal closed neighborhoods (members pairwise adjacent).
    Strong,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwinClasses {
    /// Each class has at least two members, sorted ascending.
    pub classes: Vec<(TwinKind, Vec<usize>)>,
    pub untwinned: Vec<usize>,
}

impl TwinClasses {
    pub fn is_twinned(&self, v: usize) -> bool {
        self.classes.iter().any(|(_, c)| c.contains(&v))
    }

    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        self.classes.iter().any(|(_, c)| c.contains(&u) && c.contains(&v))
    }
}

/// Finds weak and strong twins by sorting adjacency rows as binary
/// numbers; the strong pass repeats it on `a + I`. The two collections of
/// classes are disjoint, so the result is a partition.
pub fn twin_classes(g: &Graph) -> TwinClasses {
    let n = g.order();
    let mut classes = Vec::new();
    let mut twinned = vec![false; n];
    for (kind, close) in [(TwinKind::Weak, false), (TwinKind::Strong, true)] {
        let mut rows: Vec<(BitSet, usize)> = (0..n)
            .map(|v| {
                let mut row = g.neighbors(v).clone();
                if close {
                    row.insert(v);
                }
                (row, v)
            })
            .collect();
        rows.sort();
        let mut start = 0;
        for i in 1..=n {
            if i == n || rows[i].0 != rows[start].0 {
                if i - start >= 2 {
                    let mut members: Vec<usize> = rows[start..i].iter().map(|r| r.1).collect();
                    members.sort_unstable();
                    for &m in &members {
                        twinned[m] = true;
                    }
                    classes.push((kind, members));
                }
                start = i;
            }
        }
    }
    classes.sort_by(|a, b| a.1.cmp(&b.1));
    TwinClasses {
        classes,
        untwinned: (0..n).filter(|&v| !twinned[v]).collect(),
    }
}

pub fn link_kind(g: &Graph, u: usize, v: usize) -> LinkKind {
    assert_ne!(u, v, "link kind is defined on distinct vertices");
    if g.has_edge(u, v) {
        return LinkKind::Adjacent;
    }
    match g.neighbors(u).intersection_count(g.neighbors(v)) {
        0 => LinkKind::None,
        1 => LinkKind::Weak,
        _ => LinkKind::StrongNonAdj,
    }
}

/// Fast first-order redundancy test: `v` is redundant iff every pair of
/// its neighbors is adjacent or has a common neighbor other than `v`.
/// Graphs of order at most 2 are vacuously all-redundant.
pub fn is_redundant_first(g: &Graph, v: usize) -> bool {
    let nbrs = g.neighbors(v).to_vec();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            let common = g.neighbors(x).intersection_count(g.neighbors(y));
            // v itself is always a common neighbor of the pair.
            if common < 2 {
                return false;
            }
        }
    }
    true
}

/// Ground-truth redundancy oracle: distances among the other vertices,
/// including unreachable entries, are unchanged by deleting `v`.
pub fn is_redundant_oracle(g: &Graph, v: usize) -> bool {
    let before = distance_matrix(g);
    let after = distance_matrix(&g.delete_vertex(v).expect("vertex in range"));
    let map = |w: usize| w - (w > v) as usize;
    for x in 0..g.order() {
        if x == v {
            continue;
        }
        for y in 0..g.order() {
            if y == v || y == x {
                continue;
            }
            if before.get(x, y) != after.get(map(x), map(y)) {
                return false;
            }
        }
    }
    true
}

/// Definitional k-th order redundancy: deleting `v` must not change
/// `d(x,y)` for any pair with `d(v,x) >= k`, `d(v,y) >= k`,
/// `d(x,y) >= 2k`.
pub fn kth_redundant_def(g: &Graph, v: usize, k: u32) -> bool {
    assert!(k >= 1);
    let before = distance_matrix(g);
    let after = distance_matrix(&g.delete_vertex(v).expect("vertex in range"));
    let map = |w: usize| w - (w > v) as usize;
    let far = |d: Dist, bound: u32| match d {
        Dist::Finite(x) => x >= bound,
        Dist::Unreachable => true,
    };
    for x in 0..g.order() {
        if x == v || !far(before.get(v, x), k) {
            continue;
        }
        for y in x + 1..g.order() {
            if y == v || !far(before.get(v, y), k) || !far(before.get(x, y), 2 * k) {
                continue;
            }
            if before.get(x, y) != after.get(map(x), map(y)) {
                return false;
            }
        }
    }
    true
}

/// Walk-count criterion for k-th order redundancy: `v` is redundant iff
/// for every pair `u,w` at distance exactly `k` from `v` with
/// `d(u,w) = 2k`, the 2k-walk count differs from the product of the two
/// k-walk counts through `v`.
pub fn kth_redundant_walks(g: &Graph, v: usize, k: u32) -> Result<bool, WalkOverflow> {
    assert!(k >= 1);
    let dm = distance_matrix(g);
    let wk = walk_count_matrix(g, k)?;
    let w2k = walk_count_matrix(g, 2 * k)?;
    let ring: Vec<usize> = (0..g.order())
        .filter(|&u| dm.get(v, u) == Dist::Finite(k))
        .collect();
    for (i, &u) in ring.iter().enumerate() {
        for &w in &ring[i + 1..] {
            if dm.get(u, w) != Dist::Finite(2 * k) {
                continue;
            }
            if w2k.get(u, w) == wk.get(u, v).saturating_mul(wk.get(v, w)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Cut vertex: deleting it increases the component count.
pub fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    if g.order() <= 1 {
        return false;
    }
    g.delete_vertex(v).expect("vertex in range").component_count() > g.component_count()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "UPPERCASE"))]
pub enum GraphClass {
    /// No vertex is redundant (distance-critical).
    Weak,
    /// Every vertex is redundant.
    Strong,
    Neither,
}

impl core::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphClass::Weak => write!(f, "WEAK"),
            GraphClass::Strong => write!(f, "STRONG"),
            GraphClass::Neither => write!(f, "NEITHER"),
        }
    }
}

/// Per-vertex redundancy flags and the weak/strong classification.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RedundancyReport {
    pub n: usize,
    pub surrounded: Vec<bool>,
    pub twin: Vec<bool>,
    pub first_order_redundant: Vec<bool>,
    pub cut_vertex: Vec<bool>,
    pub class: GraphClass,
    pub surrounded_count: usize,
    pub twin_count: usize,
    pub redundant_count: usize,
    pub cut_vertex_count: usize,
}

/// Strong test by the matrix corollary: no weakly linked pair exists,
/// i.e. no entry of `a^2 + 2(a + I)` equals 1.
pub fn is_strong_matrix(g: &Graph) -> bool {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let entry =
                g.neighbors(u).intersection_count(g.neighbors(v)) + 2 * g.has_edge(u, v) as usize;
            if entry == 1 {
                return false;
            }
        }
    }
    true
}

pub fn classify(g: &Graph) -> RedundancyReport {
    let n = g.order();
    let sur = surround_pairs_matrix(g);
    let twins = twin_classes(g);
    let redundant: Vec<bool> = (0..n).map(|v| is_redundant_first(g, v)).collect();
    let cut: Vec<bool> = (0..n).map(|v| is_cut_vertex(g, v)).collect();
    let redundant_count = redundant.iter().filter(|&&r| r).count();
    let class = if n > 0 && redundant_count == 0 {
        GraphClass::Weak
    } else if redundant_count == n {
        GraphClass::Strong
    } else {
        GraphClass::Neither
    };
    debug_assert_eq!(class == GraphClass::Strong, is_strong_matrix(g));
    RedundancyReport {
        n,
        twin: (0..n).map(|v| twins.is_twinned(v)).collect(),
        surrounded_count: sur.surrounded_count(),
        twin_count: (0..n).filter(|&v| twins.is_twinned(v)).count(),
        redundant_count,
        cut_vertex_count: cut.iter().filter(|&&c| c).count(),
        surrounded: sur.surrounded,
        first_order_redundant: redundant,
        cut_vertex: cut,
        class,
    }
}

/// Searches for an induced cycle of length at least `min_len` through `v`
/// by backtracking with chord pruning. Exponential in the worst case;
/// meant for small test corpora.
pub fn chordless_cycle_witness(g: &Graph, v: usize, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 4);
    let n = g.order();
    let mut path = vec![v];
    let mut on_path = BitSet::new(n.max(1));
    on_path.insert(v);
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut BitSet,
        min_len: usize,
    ) -> bool {
        let last = *path.last().unwrap();
        let root = path[0];
        for w in g.neighbors(last).iter() {
            if w == root && path.len() >= min_len {
                // Closing edge; ensure w is adjacent to no interior vertex
                // other than path[1] and last.
                let ok = path[1..path.len() - 1]
                    .iter()
                    .all(|&p| p == path[1] || !g.has_edge(w, p));
                if ok {
                    return true;
                }
            }
            if on_path.contains(w) {
                continue;
            }
            // Induced path: w may touch only `last` among path vertices,
            // except that the root is allowed once we could close later.
            let mut adj_count = 0;
            let mut adj_root = false;
            for &p in path.iter() {
                if g.has_edge(w, p) {
                    if p == last {
                        adj_count += 1;
                    } else if p == root {
                        adj_root = true;
                    } else {
                        adj_count += 2; // chord: prune
                        break;
                    }
                }
            }
            if adj_count != 1 {
                continue;
            }
            if adj_root && path.len() + 1 < min_len {
                continue;
            }
            path.push(w);
            on_path.insert(w);
            if extend(g, path, on_path, min_len) {
                return true;
            }
            on_path.remove(w);
            path.pop();
        }
        false
    }
    if extend(g, &mut path, &mut on_path, min_len) {
        Some(path)
    } else {
        None
    }
}
