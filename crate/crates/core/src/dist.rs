//! BFS distances, distance matrices and basic graph metrics.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Distance value. `Unreachable` is a true sentinel and compares greater
/// than every finite distance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Dist {
    Finite(u32),
    Unreachable,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }
}

impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dist {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        match (self, other) {
            (Dist::Finite(a), Dist::Finite(b)) => a.cmp(b),
            (Dist::Finite(_), Dist::Unreachable) => core::cmp::Ordering::Less,
            (Dist::Unreachable, Dist::Finite(_)) => core::cmp::Ordering::Greater,
            (Dist::Unreachable, Dist::Unreachable) => core::cmp::Ordering::Equal,
        }
    }
}

impl core::fmt::Display for Dist {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Unreachable => write!(f, "inf"),
        }
    }
}

/// All-pairs distances.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Max finite entry, or `Unreachable` when the graph is disconnected.
    /// The empty graph and K1 have diameter 0.
    pub fn diameter(&self) -> Dist {
        let mut best = Dist::Finite(0);
        for &x in &self.d {
            match x {
                Dist::Unreachable => return Dist::Unreachable,
                d => best = best.max(d),
            }
        }
        best
    }
}

/// Single-source BFS distances.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Dist> {
    let n = g.order();
    let mut out = vec![Dist::Unreachable; n];
    let mut frontier = BitSet::new(n.max(1));
    let mut seen = BitSet::new(n.max(1));
    frontier.insert(source);
    seen.insert(source);
    let mut depth = 0u32;
    loop {
        let mut any = false;
        let mut next = BitSet::new(n.max(1));
        for u in frontier.iter() {
            out[u] = Dist::Finite(depth);
            any = true;
            next.union_with(g.neighbors(u));
        }
        if !any {
            break;
        }
        for u in seen.to_vec() {
            next.remove(u);
        }
        seen.union_with(&next);
        frontier = next;
        depth += 1;
    }
    out
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs_distances(g, s));
    }
    DistanceMatrix { n, d }
}

/// Girth (length of a shortest cycle), or `None` for forests.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.order();
    let mut best: Option<u32> = None;
    for root in 0..n {
        // BFS recording depth and parent; a non-tree edge at depths du, dv
        // closes a cycle of length du + dv + 1 through this root.
        let mut depth = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = vec![root];
        depth[root] = 0;
        let mut qi = 0;
        while qi < queue.len() {
            let u = queue[qi];
            qi += 1;
            for v in g.neighbors(u).iter() {
                if depth[v] == u32::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                } else if v != parent[u] && depth[v] >= depth[u] {
                    let len = depth[u] + depth[v] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Summary metrics: connectivity, diameter, girth, degree sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Metrics {
    pub connected: bool,
    pub diameter: Dist,
    pub girth: Option<u32>,
    /// Sorted ascending.
    pub degree_sequence: Vec<usize>,
}

pub fn metrics(g: &Graph) -> Metrics {
    let dm = distance_matrix(g);
    let mut degs: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    Metrics {
        connected: g.is_connected(),
        diameter: dm.diameter(),
        girth: girth(g),
        degree_sequence: degs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn pentagon_distances() {
        let dm = distance_matrix(&cycle(5));
        assert_eq!(dm.get(0, 1), Dist::Finite(1));
        assert_eq!(dm.get(0, 2), Dist::Finite(2));
        assert_eq!(dm.get(2, 2), Dist::Finite(0));
        assert_eq!(dm.diameter(), Dist::Finite(2));
    }

    #[test]
    fn path_and_disconnected() {
        let dm = distance_matrix(&path(4));
        assert_eq!(dm.get(0, 3), Dist::Finite(3));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let dm = distance_matrix(&two_k2);
        assert_eq!(dm.get(0, 2), Dist::Unreachable);
        assert_eq!(dm.get(0, 1), Dist::Finite(1));
        assert_eq!(dm.diameter(), Dist::Unreachable);
    }

    #[test]
    fn unreachable_compares_greatest() {
        assert!(Dist::Unreachable > Dist::Finite(u32::MAX));
        assert_eq!(Dist::Unreachable, Dist::Unreachable);
    }

    #[test]
    fn metrics_spot_checks() {
        let m = metrics(&cycle(5));
        assert!(m.connected);
        assert_eq!(m.diameter, Dist::Finite(2));
        assert_eq!(m.girth, Some(5));

        let m = metrics(&hypercube(3));
        assert_eq!(m.diameter, Dist::Finite(3));
        assert_eq!(m.girth, Some(4));

        let m = metrics(&path(6));
        assert_eq!(m.girth, None);

        assert_eq!(metrics(&complete(4)).girth, Some(3));
        assert_eq!(metrics(&Graph::empty(0)).diameter, Dist::Finite(0));
    }

    #[test]
    fn distance_matrix_invariants_on_random_graphs() {
        // Symmetry, zero diagonal, adjacency = distance 1, triangle
        // inequality on finite entries.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let n = (next() % 12 + 1) as usize;
            let mut b = crate::graph::GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 3 == 0 {
                        b.add_edge(u, v);
                    }
                }
            }
            let g = b.build();
            let dm = distance_matrix(&g);
            for u in 0..n {
                assert_eq!(dm.get(u, u), Dist::Finite(0));
                for v in 0..n {
                    assert_eq!(dm.get(u, v), dm.get(v, u));
                    assert_eq!(dm.get(u, v) == Dist::Finite(1), g.has_edge(u, v));
                    for w in 0..n {
                        if let (Dist::Finite(a), Dist::Finite(b2)) =
                            (dm.get(u, w), dm.get(w, v))
                        {
                            if let Dist::Finite(c) = dm.get(u, v) {
                                assert!(c <= a + b2);
                            } else {
                                panic!("finite through-path but unreachable direct");
                            }
                        }
                    }
                }
            }
        }
    }
}
