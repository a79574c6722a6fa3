//! Canonical labeling by degree-partition refinement with backtracking.
//!
//! The canonical form of a graph is the lexicographically least upper
//! triangle bit encoding over all labelings compatible with the search:
//! an equitable partition is refined, the first non-singleton cell is
//! branched on, and every discrete leaf is encoded and compared. Two
//! graphs have equal keys iff they are isomorphic. Intended for the small
//! orders of the enumeration paths; it works above that, just slower.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Relabeling-invariant identity of a graph: the graph6 bytes of its
/// canonical labeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(pub Vec<u8>);

/// Upper-triangle bits of `g` relabeled by `perm` (vertex u -> perm[u]),
/// packed MSB-first into u64 words, in graph6 column order.
fn encode_perm(g: &Graph, inv: &[usize]) -> Vec<u64> {
    // inv[p] = original vertex placed at position p.
    let n = g.order();
    let mut words = vec![0u64; (n * (n - 1) / 2).div_ceil(64).max(1)];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(inv[u], inv[v]) {
                words[bit / 64] |= 1u64 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    words
}

/// Ordered partition of the vertex set into cells.
#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        Partition { cells: vec![(0..n).collect()] }
    }

    fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// 1-dimensional Weisfeiler-Leman refinement: split cells by the
    /// multiset of neighbor counts into every cell, iterating to a fixed
    /// point. Cell order after a split is by the count signature, so the
    /// refined partition is labeling-invariant.
    fn refine(&mut self, g: &Graph) {
        let n = g.order();
        loop {
            let mut cell_of = vec![0usize; n];
            for (ci, cell) in self.cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let ncells = self.cells.len();
            let mut changed = false;
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(ncells);
            for cell in &self.cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                // Signature: neighbor count per current cell.
                let mut sigs: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u32; ncells];
                        for w in g.neighbors(v).iter() {
                            sig[cell_of[w]] += 1;
                        }
                        (sig, v)
                    })
                    .collect();
                sigs.sort();
                let mut start = 0;
                for i in 1..=sigs.len() {
                    if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                        next.push(sigs[start..i].iter().map(|x| x.1).collect());
                        if i - start != cell.len() {
                            changed = true;
                        }
                        start = i;
                    }
                }
            }
            self.cells = next;
            if !changed {
                break;
            }
        }
    }
}

fn search(g: &Graph, part: Partition, best: &mut Option<Vec<u64>>) {
    if part.is_discrete() {
        let inv: Vec<usize> = part.cells.iter().map(|c| c[0]).collect();
        let enc = encode_perm(g, &inv);
        match best {
            Some(b) if *b <= enc => {}
            _ => *best = Some(enc),
        }
        return;
    }
    let target = part
        .cells
        .iter()
        .position(|c| c.len() > 1)
        .expect("non-discrete partition has a splittable cell");
    let cell = part.cells[target].clone();
    for &v in &cell {
        let mut child = part.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        child.cells[target] = vec![v];
        child.cells.insert(target + 1, rest);
        child.refine(g);
        search(g, child, best);
    }
}

/// Canonical form of `g`: the relabeling that minimizes the adjacency
/// encoding over the refinement search tree.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    let mut part = Partition::unit(n);
    part.refine(g);
    let mut best: Option<Vec<u64>> = None;
    search(g, part, &mut best);
    let words = best.expect("search visits at least one leaf");
    // Decode the winning encoding back into a graph.
    let mut b = crate::graph::GraphBuilder::new(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if words[bit / 64] & (1u64 << (63 - bit % 64)) != 0 {
                b.add_edge(u, v);
            }
            bit += 1;
        }
    }
    b.build()
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey(crate::graph6::to_graph6(&canonical_form(g)).into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Brute-force canonicalizer: minimum encoding over all n! labelings.
    pub fn brute_canonical_form(g: &Graph) -> Graph {
        let n = g.order();
        if n <= 1 {
            return g.clone();
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        permute(&mut perm, 0, &mut |p| {
            let enc = encode_perm(g, p);
            match &best {
                Some(b) if *b <= enc => {}
                _ => best = Some(enc),
            }
        });
        let words = best.unwrap();
        let mut b = crate::graph::GraphBuilder::new(n);
        let mut bit = 0usize;
        for v in 1..n {
            for u in 0..v {
                if words[bit / 64] & (1u64 << (63 - bit % 64)) != 0 {
                    b.add_edge(u, v);
                }
                bit += 1;
            }
        }
        b.build()
    }

    fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    #[test]
    fn c5_orbit_single_key() {
        let base = canonical_key(&cycle(5));
        let mut perm = alloc::vec![0, 1, 2, 3, 4];
        let c5 = cycle(5);
        permute(&mut perm, 0, &mut |p| {
            assert_eq!(canonical_key(&c5.relabel(p)), base);
        });
    }

    #[test]
    fn degree_sequences_distinguish() {
        assert_ne!(canonical_key(&path(4)), canonical_key(&star(3)));
    }

    #[test]
    fn labeled_n4_has_11_classes() {
        let mut keys = alloc::collections::BTreeSet::new();
        let mut brute = alloc::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let mut b = crate::graph::GraphBuilder::new(4);
            let mut bit = 0;
            for v in 1..4 {
                for u in 0..v {
                    if mask & (1 << bit) != 0 {
                        b.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            let g = b.build();
            keys.insert(canonical_key(&g));
            brute.insert(crate::graph6::to_graph6(&brute_canonical_form(&g)));
        }
        assert_eq!(keys.len(), 11);
        assert_eq!(brute.len(), 11);
    }

    #[test]
    fn agrees_with_brute_force_through_n5() {
        // Key equality must coincide with brute-force n!-canonicalization:
        // same partition into isomorphism classes. n <= 5 here; the full
        // n = 6 sweep lives in the integration suite.
        use alloc::collections::BTreeMap;
        for n in 0..=5usize {
            let pairs = n * n.saturating_sub(1) / 2;
            let mut by_brute: BTreeMap<alloc::string::String, CanonicalKey> = BTreeMap::new();
            let mut keys = alloc::collections::BTreeSet::new();
            for mask in 0u64..(1 << pairs) {
                let mut b = crate::graph::GraphBuilder::new(n);
                let mut bit = 0;
                for v in 1..n {
                    for u in 0..v {
                        if mask & (1 << bit) != 0 {
                            b.add_edge(u, v);
                        }
                        bit += 1;
                    }
                }
                let g = b.build();
                let brute = crate::graph6::to_graph6(&brute_canonical_form(&g));
                let key = canonical_key(&g);
                keys.insert(key.clone());
                if let Some(prev) = by_brute.insert(brute, key.clone()) {
                    assert_eq!(prev, key, "isomorphic graphs got distinct keys: {}", g.describe());
                }
            }
            assert_eq!(keys.len(), by_brute.len(), "key count != class count at n={n}");
        }
    }
}
