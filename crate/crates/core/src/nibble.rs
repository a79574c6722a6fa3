//! Repeated deletion of redundant vertices.
//!
//! A nibble run deletes one first-order redundant vertex at a time until
//! either no vertex is redundant (the remainder is weak) or the graph is
//! empty. Every deletion preserves the distances among the surviving
//! vertices, so the final graph is isometrically embedded in the input.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::canon::{canonical_key, CanonicalKey};
use crate::graph::Graph;
use crate::redundancy::is_redundant_first;

/// Rule for choosing which redundant vertex to delete at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NibblePolicy {
    /// Lowest current index among the redundant vertices.
    FirstIndex,
    /// Lowest degree, ties broken by current index.
    #[default]
    MinDegreeThenIndex,
}

/// Outcome class of a completed nibble run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NibbleOutcome {
    /// Every vertex was deleted.
    Empty,
    /// A nonempty weak graph remains.
    Weak,
}

/// Record of one nibble run.
#[derive(Clone, Debug)]
pub struct NibbleTrace {
    /// Deleted vertices, in deletion order, as labels of the input graph.
    pub deletions: Vec<usize>,
    /// The graph left when no redundant vertex remained.
    pub final_graph: Graph,
    pub final_class: NibbleOutcome,
    /// True when every deletion was re-checked against the distance
    /// oracle: removing the vertex changed no distance among survivors.
    pub steps_isometric: bool,
}

fn pick(g: &Graph, policy: NibblePolicy) -> Option<usize> {
    match policy {
        NibblePolicy::FirstIndex => (0..g.order()).find(|&v| is_redundant_first(g, v)),
        NibblePolicy::MinDegreeThenIndex => (0..g.order())
            .filter(|&v| is_redundant_first(g, v))
            .min_by_key(|&v| (g.degree(v), v)),
    }
}

/// Deletes redundant vertices one at a time under `policy` until none
/// remain. The trace reports deletions as labels of the input graph.
pub fn nibble(g: &Graph, policy: NibblePolicy) -> NibbleTrace {
    // labels[i] = input label of current vertex i.
    let mut labels: Vec<usize> = (0..g.order()).collect();
    let mut cur = g.clone();
    let mut deletions = Vec::new();
    let mut steps_isometric = true;
    while let Some(v) = pick(&cur, policy) {
        steps_isometric &= crate::redundancy::is_redundant_oracle(&cur, v);
        deletions.push(labels[v]);
        labels.remove(v);
        cur = cur.delete_vertex(v).unwrap();
    }
    let class = if cur.order() == 0 { NibbleOutcome::Empty } else { NibbleOutcome::Weak };
    NibbleTrace { deletions, final_graph: cur, final_class: class, steps_isometric }
}

/// Result of an exhaustive search over deletion orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NibbleSearchResult {
    /// A deletion order reaching the empty graph, as input labels.
    Erasable(Vec<usize>),
    /// Every deletion order stalls at a nonempty weak graph.
    Stuck,
    /// The node budget ran out before the search settled.
    Undecided,
}

/// Exhaustive search for a deletion order that empties the graph.
///
/// States are memoized by canonical key, so the memo can be shared
/// across a whole census of graphs. `budget` bounds the number of
/// distinct states expanded in one call.
pub struct NibbleSearch {
    pub memo: BTreeMap<CanonicalKey, bool>,
    pub budget: usize,
}

impl Default for NibbleSearch {
    fn default() -> Self {
        NibbleSearch { memo: BTreeMap::new(), budget: 1_000_000 }
    }
}

impl NibbleSearch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Can repeated redundant-vertex deletion erase `g` entirely?
    pub fn erasable(&mut self, g: &Graph) -> NibbleSearchResult {
        let mut remaining = self.budget;
        let mut order = Vec::new();
        let labels: Vec<usize> = (0..g.order()).collect();
        match self.walk(g, &labels, &mut order, &mut remaining) {
            Some(true) => NibbleSearchResult::Erasable(order),
            Some(false) => NibbleSearchResult::Stuck,
            None => NibbleSearchResult::Undecided,
        }
    }

    fn walk(
        &mut self,
        g: &Graph,
        labels: &[usize],
        order: &mut Vec<usize>,
        remaining: &mut usize,
    ) -> Option<bool> {
        if g.order() == 0 {
            return Some(true);
        }
        let key = canonical_key(g);
        if let Some(&known) = self.memo.get(&key) {
            return Some(known);
        }
        if *remaining == 0 {
            return None;
        }
        *remaining -= 1;
        let mut answer = Some(false);
        for v in 0..g.order() {
            if !is_redundant_first(g, v) {
                continue;
            }
            order.push(labels[v]);
            let mut sub_labels = labels.to_vec();
            sub_labels.remove(v);
            match self.walk(&g.delete_vertex(v).unwrap(), &sub_labels, order, remaining) {
                Some(true) => {
                    self.memo.insert(key, true);
                    return Some(true);
                }
                Some(false) => {
                    order.pop();
                }
                None => {
                    order.pop();
                    answer = None;
                }
            }
        }
        if answer == Some(false) {
            self.memo.insert(key, false);
        }
        answer
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, path, star, triangular_prism};
    use crate::graph::GraphBuilder;
    use crate::redundancy::{classify, GraphClass};

    #[test]
    fn complete_graph_erases() {
        let t = nibble(&complete(5), NibblePolicy::default());
        assert_eq!(t.final_class, NibbleOutcome::Empty);
        assert_eq!(t.deletions.len(), 5);
        assert_eq!(t.final_graph.order(), 0);
        assert!(t.steps_isometric);
    }

    #[test]
    fn weak_graph_is_fixed() {
        let c5 = cycle(5);
        let t = nibble(&c5, NibblePolicy::default());
        assert_eq!(t.final_class, NibbleOutcome::Weak);
        assert!(t.deletions.is_empty());
        assert_eq!(t.final_graph, c5);
    }

    #[test]
    fn path_nibbles_to_single_vertex_then_empty() {
        // Path endpoints are redundant; the path erases completely.
        let t = nibble(&path(6), NibblePolicy::default());
        assert_eq!(t.final_class, NibbleOutcome::Empty);
        assert_eq!(t.deletions.len(), 6);
    }

    #[test]
    fn star_deletes_leaves_first_under_min_degree() {
        let t = nibble(&star(5), NibblePolicy::MinDegreeThenIndex);
        assert_eq!(t.final_class, NibbleOutcome::Empty);
        // Center is 0 and has max degree, so it goes last or next-to-last.
        assert!(t.deletions[0] != 0);
    }

    #[test]
    fn deletions_are_input_labels() {
        let t = nibble(&path(4), NibblePolicy::FirstIndex);
        let mut seen = t.deletions.clone();
        seen.sort_unstable();
        assert_eq!(seen, alloc::vec![0, 1, 2, 3]);
    }

    #[test]
    fn each_step_is_isometric() {
        use crate::dist::distance_matrix;
        let g = triangular_prism();
        let mut labels: Vec<usize> = (0..g.order()).collect();
        let mut cur = g.clone();
        let full = distance_matrix(&g);
        for &orig in &nibble(&g, NibblePolicy::default()).deletions {
            let v = labels.iter().position(|&l| l == orig).unwrap();
            labels.remove(v);
            cur = cur.delete_vertex(v).unwrap();
            let d = distance_matrix(&cur);
            for i in 0..cur.order() {
                for j in 0..cur.order() {
                    assert_eq!(d.get(i, j), full.get(labels[i], labels[j]));
                }
            }
        }
    }

    #[test]
    fn search_agrees_with_greedy_on_easy_cases() {
        let mut s = NibbleSearch::new();
        match s.erasable(&complete(4)) {
            NibbleSearchResult::Erasable(order) => assert_eq!(order.len(), 4),
            other => panic!("expected erasable, got {other:?}"),
        }
        assert_eq!(s.erasable(&cycle(5)), NibbleSearchResult::Stuck);
        assert_eq!(s.erasable(&Graph::empty(0)), NibbleSearchResult::Erasable(Vec::new()));
    }

    #[test]
    fn search_erases_where_greedy_first_index_stalls_nowhere_easy() {
        // Two triangles joined at a vertex: every deletion order works.
        let mut b = GraphBuilder::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)] {
            b.add_edge(u, v);
        }
        let g = b.build();
        let mut s = NibbleSearch::new();
        match s.erasable(&g) {
            NibbleSearchResult::Erasable(order) => {
                // Replay the order and confirm it really empties the graph.
                let mut labels: Vec<usize> = (0..5).collect();
                let mut cur = g.clone();
                for orig in order {
                    let v = labels.iter().position(|&l| l == orig).unwrap();
                    assert!(is_redundant_first(&cur, v));
                    labels.remove(v);
                    cur = cur.delete_vertex(v).unwrap();
                }
                assert_eq!(cur.order(), 0);
            }
            other => panic!("expected erasable, got {other:?}"),
        }
    }

    #[test]
    fn tiny_budget_reports_undecided() {
        let mut s = NibbleSearch { memo: BTreeMap::new(), budget: 1 };
        assert_eq!(s.erasable(&complete(5)), NibbleSearchResult::Undecided);
    }

    #[test]
    fn remainder_is_weak_or_empty() {
        use crate::random::gnp_sample;
        use rand_chacha::ChaCha8Rng;
        use rand_core::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = gnp_sample(9, 0.4, &mut rng);
            let t = nibble(&g, NibblePolicy::default());
            match t.final_class {
                NibbleOutcome::Empty => assert_eq!(t.final_graph.order(), 0),
                NibbleOutcome::Weak => {
                    assert!(t.final_graph.order() > 0);
                    assert_eq!(classify(&t.final_graph).class, GraphClass::Weak);
                }
            }
        }
    }
}
