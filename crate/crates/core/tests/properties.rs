//! Cross-module property suites: every theorem the library leans on is
//! re-checked here against definitional oracles over exhaustive small
//! censuses and random samples.

use redgraph_core::canon::canonical_key;
use redgraph_core::dist::{bfs_distances, distance_matrix, Dist};
use redgraph_core::enumerate::generate_all;
use redgraph_core::graph::families::{complete, cycle, hypercube, triangular_prism};
use redgraph_core::graph::{Graph, GraphBuilder};
use redgraph_core::graph6::{from_graph6, to_graph6};
use redgraph_core::random::{gnp_sample_seeded, mix_seed};
use redgraph_core::redundancy::{
    chordless_cycle_witness, classify, is_redundant_first, kth_redundant_def,
    kth_redundant_walks, surround_pairs_matrix, surrounds, twin_classes, GraphClass, TwinKind,
};
use redgraph_core::transforms::{short, tensor_product};

/// every isomorphism class of order 1..=n_max
fn census(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(|n| generate_all(n).unwrap()).collect()
}

/// minimum upper-triangle encoding over all n! relabelings (oracle)
fn brute_canonical_code(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut code = Vec::with_capacity(n * (n - 1) / 2);
        'enc: {
            for i in 0..n {
                for j in i + 1..n {
                    let bit = g.has_edge(perm[i], perm[j]);
                    if let Some(b) = &best {
                        match bit.cmp(&b[code.len()]) {
                            std::cmp::Ordering::Greater => break 'enc,
                            std::cmp::Ordering::Less => best = None,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                    code.push(bit);
                }
            }
            best = Some(code);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap()
}

#[test]
fn canonical_key_agrees_with_brute_force_to_n6() {
    // keys must induce exactly the isomorphism classes: for every
    // labeled graph of order <= 6, equal keys <=> equal brute codes
    use std::collections::BTreeMap;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut key_to_code = BTreeMap::new();
        let mut code_to_key = BTreeMap::new();
        for mask in 0u32..1 << pairs.len() {
            let mut b = GraphBuilder::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    b.add_edge(u, v);
                }
            }
            let g = b.build();
            let key = canonical_key(&g);
            let code = brute_canonical_code(&g);
            assert_eq!(key_to_code.entry(key.clone()).or_insert_with(|| code.clone()), &code);
            assert_eq!(code_to_key.entry(code).or_insert_with(|| key.clone()), &key);
        }
    }
}

#[test]
fn graph6_roundtrip_on_random_graphs() {
    for i in 0..10_000u64 {
        let n = 1 + (mix_seed(1, i) % 64) as usize;
        let p = 0.05 + (mix_seed(2, i) % 90) as f64 / 100.0;
        let g = gnp_sample_seeded(n, p, mix_seed(3, i));
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn distance_matrix_invariants_on_censuses() {
    let mut corpus = census(6);
    for i in 0..50u64 {
        corpus.push(gnp_sample_seeded(40, 0.08, mix_seed(4, i)));
    }
    for g in &corpus {
        let n = g.order();
        let d = distance_matrix(g);
        for u in 0..n {
            assert_eq!(d.get(u, u), Dist::Finite(0));
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == Dist::Finite(1), g.has_edge(u, v));
                for w in 0..n {
                    if let (Dist::Finite(a), Dist::Finite(b)) = (d.get(u, w), d.get(w, v)) {
                        assert!(d.get(u, v) <= Dist::Finite(a + b));
                    }
                }
            }
        }
    }
}

#[test]
fn surrounding_is_a_partial_order() {
    for g in census(6) {
        let n = g.order();
        let s = surround_pairs_matrix(&g);
        let tw = twin_classes(&g);
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                // mutual surround <=> twins
                if s.surrounds(u, v) && s.surrounds(v, u) {
                    assert!(tw
                        .classes
                        .iter()
                        .any(|(_, c)| c.contains(&u) && c.contains(&v)));
                }
                for w in 0..n {
                    if w != u && w != v && s.surrounds(w, v) && s.surrounds(v, u) {
                        assert!(s.surrounds(w, u), "transitivity");
                    }
                }
            }
        }
    }
}

#[test]
fn surrounding_survives_deleting_a_lower_vertex() {
    // w >= v >= s implies w >= v in G-s; and with four distinct
    // vertices, w >= v and u >= s implies w >= v in G-s
    for g in census(6) {
        let n = g.order();
        let s_rel = surround_pairs_matrix(&g);
        for s in 0..n {
            let h = g.delete_vertex(s).unwrap();
            let re = |x: usize| x - (x > s) as usize;
            for w in 0..n {
                for v in 0..n {
                    if w == v || w == s || v == s || !s_rel.surrounds(w, v) {
                        continue;
                    }
                    let chain = s_rel.surrounds(v, s);
                    let disjoint = (0..n)
                        .any(|u| u != w && u != v && u != s && s_rel.surrounds(u, s));
                    if chain || disjoint {
                        assert!(surrounds(&h, re(w), re(v)));
                    }
                }
            }
        }
    }
}

#[test]
fn pruning_surrounded_non_twins_is_isometric() {
    for g in census(7) {
        let n = g.order();
        let s = surround_pairs_matrix(&g);
        let tw = twin_classes(&g);
        let prune: Vec<usize> =
            (0..n).filter(|&v| s.surrounded[v] && !tw.is_twinned(v)).collect();
        if prune.is_empty() {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|v| !prune.contains(v)).collect();
        let mut h = g.clone();
        for &v in prune.iter().rev() {
            h = h.delete_vertex(v).unwrap();
        }
        let dg = distance_matrix(&g);
        let dh = distance_matrix(&h);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                assert_eq!(dh.get(i, j), dg.get(u, v));
            }
        }
    }
}

#[test]
fn redundancy_order_is_monotone_in_k() {
    for g in census(6) {
        if !g.is_connected() {
            continue;
        }
        for v in 0..g.order() {
            for k in 1..=3u32 {
                if kth_redundant_def(&g, v, k) {
                    assert!(kth_redundant_def(&g, v, k + 1), "k={k} v={v}");
                }
            }
        }
    }
}

#[test]
fn degree_two_vertices_redundant_iff_surrounded() {
    for g in census(6) {
        let s = surround_pairs_matrix(&g);
        for v in 0..g.order() {
            if g.degree(v) == 2 {
                assert_eq!(is_redundant_first(&g, v), s.surrounded[v]);
            }
        }
    }
}

#[test]
fn diameter_bounds_redundancy_order() {
    // every vertex of a diameter-D graph is ceil((D+1)/2)-order redundant
    for g in census(6) {
        if !g.is_connected() || g.order() < 2 {
            continue;
        }
        let Dist::Finite(diam) = distance_matrix(&g).diameter() else { continue };
        let k = (diam + 1).div_ceil(2).max(1);
        for v in 0..g.order() {
            assert!(kth_redundant_def(&g, v, k));
        }
    }
}

#[test]
fn far_apart_redundant_vertices_stay_redundant() {
    // u, v redundant with d(u,v) > 2 implies v redundant in G-u
    for g in generate_all(7).unwrap() {
        if !g.is_connected() {
            continue;
        }
        let d = distance_matrix(&g);
        let red: Vec<bool> = (0..7).map(|v| is_redundant_first(&g, v)).collect();
        for u in 0..7 {
            for v in 0..7 {
                if u != v && red[u] && red[v] && d.get(u, v) > Dist::Finite(2) {
                    let h = g.delete_vertex(u).unwrap();
                    assert!(is_redundant_first(&h, v - (v > u) as usize));
                }
            }
        }
    }
}

#[test]
fn walk_criterion_matches_definition() {
    for g in generate_all(7).unwrap() {
        if !g.is_connected() {
            continue;
        }
        for v in 0..7 {
            for k in [1u32, 2] {
                assert_eq!(
                    kth_redundant_walks(&g, v, k).unwrap(),
                    kth_redundant_def(&g, v, k),
                    "v={v} k={k} {}",
                    to_graph6(&g)
                );
            }
        }
    }
}

#[test]
fn matrix_strong_test_matches_classification() {
    use redgraph_core::redundancy::is_strong_matrix;
    for g in census(6) {
        assert_eq!(is_strong_matrix(&g), classify(&g).class == GraphClass::Strong);
    }
}

#[test]
fn weak_graphs_put_every_vertex_on_long_chordless_cycles() {
    for n in 5..=7usize {
        for g in generate_all(n).unwrap() {
            if classify(&g).class != GraphClass::Weak {
                continue;
            }
            for v in 0..n {
                let cyc = chordless_cycle_witness(&g, v, 5).expect("witness exists");
                assert!(cyc.len() >= 5);
                assert!(cyc.contains(&v));
            }
        }
    }
    // The converse is false: a pentagon 0-3-5-1-4-0 plus a sixth vertex
    // attached to 4 and 5 puts every vertex on a chordless 5-cycle, yet
    // vertices 1 and 2 are redundant (4 and 5 keep another common
    // neighbor), so the graph is not weak.
    let g = from_graph6("ECxo").unwrap();
    assert!((0..6).all(|v| chordless_cycle_witness(&g, v, 5).is_some()));
    assert_ne!(classify(&g).class, GraphClass::Weak);
    use redgraph_core::redundancy::is_redundant_oracle;
    assert!(is_redundant_oracle(&g, 1));
    assert!(is_redundant_oracle(&g, 2));
}

#[test]
fn twin_edge_toggle_swaps_twin_kind() {
    for g in census(6) {
        for (kind, class) in twin_classes(&g).classes {
            let (u, v) = (class[0], class[1]);
            let toggled = match kind {
                // weak twins are non-adjacent; adding the edge makes
                // their closed neighborhoods equal
                TwinKind::Weak => {
                    assert!(!g.has_edge(u, v));
                    let mut b = GraphBuilder::new(g.order());
                    for (x, y) in g.edges() {
                        b.add_edge(x, y);
                    }
                    b.add_edge(u, v);
                    b.build()
                }
                // strong twins are adjacent; removing the edge makes
                // their open neighborhoods equal
                TwinKind::Strong => {
                    assert!(g.has_edge(u, v));
                    let mut b = GraphBuilder::new(g.order());
                    for (x, y) in g.edges() {
                        if (x.min(y), x.max(y)) != (u.min(v), u.max(v)) {
                            b.add_edge(x, y);
                        }
                    }
                    b.build()
                }
            };
            let want = match kind {
                TwinKind::Weak => TwinKind::Strong,
                TwinKind::Strong => TwinKind::Weak,
            };
            let found = twin_classes(&toggled)
                .classes
                .into_iter()
                .find(|(_, c)| c.contains(&u) && c.contains(&v))
                .expect("still twins");
            assert_eq!(found.0, want);
        }
    }
}

#[test]
fn shorting_a_strong_graph_stays_strong() {
    for g in census(6) {
        if classify(&g).class != GraphClass::Strong {
            continue;
        }
        for v in 0..g.order() {
            let h = short(&g, v).unwrap();
            assert_eq!(h.order(), g.order() - 1);
            assert_eq!(classify(&h).class, GraphClass::Strong, "{} v={v}", to_graph6(&g));
        }
    }
}

#[test]
fn tensor_products_preserve_the_classes() {
    // weak (x) weak is weak
    for (a, b) in [(cycle(5), cycle(5)), (cycle(5), cycle(6)), (cycle(7), cycle(5))] {
        let t = tensor_product(&a, &b).unwrap();
        assert_eq!(classify(&t).class, GraphClass::Weak);
    }
    // strong (x) strong is strong when neither factor has an endpoint
    for (a, b) in [
        (complete(3), hypercube(3)),
        (triangular_prism(), complete(4)),
        (hypercube(3), triangular_prism()),
    ] {
        assert!((0..a.order()).all(|v| a.degree(v) >= 2));
        assert!((0..b.order()).all(|v| b.degree(v) >= 2));
        let t = tensor_product(&a, &b).unwrap();
        assert_eq!(classify(&t).class, GraphClass::Strong);
    }
}

#[test]
fn redundant_deletion_is_isometric_everywhere() {
    // the core fact behind nibbling, checked definitionally
    for g in census(7) {
        for v in 0..g.order() {
            if !is_redundant_first(&g, v) {
                continue;
            }
            let h = g.delete_vertex(v).unwrap();
            for u in 0..g.order() {
                if u == v {
                    continue;
                }
                let before = bfs_distances(&g, u);
                let after = bfs_distances(&h, u - (u > v) as usize);
                for w in 0..g.order() {
                    if w != v {
                        assert_eq!(after[w - (w > v) as usize], before[w]);
                    }
                }
            }
        }
    }
}
