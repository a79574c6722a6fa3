//! Exhaustive generation of small graphs up to isomorphism, the
//! statistics tables over them, and the component-counting formulas.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::canon::canonical_key;
use crate::dist::{metrics, Dist};
use crate::graph::{Graph, GraphBuilder};
use crate::redundancy::{
    classify, is_redundant_first, link_kind, surround_pairs_matrix, GraphClass, LinkKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumError {
    /// Generation is exhaustive; orders above 10 are refused outright.
    OrderOutOfRange(usize),
}

impl core::fmt::Display for EnumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumError::OrderOutOfRange(n) => {
                write!(f, "exhaustive generation supports 1..=10 vertices, got {n}")
            }
        }
    }
}

/// All graphs of order `n`, one representative per isomorphism class,
/// built levelwise: every class of order n-1 is extended by a new
/// vertex with each of the 2^(n-1) possible neighborhoods, and the
/// results are deduplicated by canonical key. Deterministic order.
pub fn generate_all(n: usize) -> Result<Vec<Graph>, EnumError> {
    if n == 0 || n > 10 {
        return Err(EnumError::OrderOutOfRange(n));
    }
    let mut level = alloc::vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for parent in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut b = GraphBuilder::new(m);
                for (u, v) in parent.edges() {
                    b.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        b.add_edge(u, m - 1);
                    }
                }
                let g = b.build();
                if seen.insert(canonical_key(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Exact count of unlabeled simple graphs of order `n`, by the cycle
/// index of the pair group summed over integer partitions: a
/// permutation with cycle type λ fixes 2^{c(λ)} graphs, where c(λ) =
/// Σᵢ ⌊λᵢ/2⌋ + Σ_{i<j} gcd(λᵢ, λⱼ), and the class has n!/z_λ members.
pub fn polya_graph_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let mut total = BigUint::from(0u32);
    let mut parts: Vec<u64> = Vec::new();
    fn walk(remaining: u64, max_part: u64, parts: &mut Vec<u64>, total: &mut BigUint, n: u64) {
        if remaining == 0 {
            // pair-group cycle count
            let mut c = 0u64;
            for (i, &a) in parts.iter().enumerate() {
                c += a / 2;
                for &b in &parts[i + 1..] {
                    c += gcd(a, b);
                }
            }
            // class size n!/z_λ, with z_λ = Π k^{m_k} m_k!
            let mut z = BigUint::from(1u32);
            let mut k = 0;
            while k < parts.len() {
                let mut m = 1;
                while k + m < parts.len() && parts[k + m] == parts[k] {
                    m += 1;
                }
                z *= BigUint::from(parts[k]).pow(m as u32) * factorial(m as u64);
                k += m;
            }
            *total += factorial(n) / z * (BigUint::from(1u32) << c);
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            parts.push(p);
            walk(remaining - p, p, parts, total, n);
            parts.pop();
        }
    }
    walk(n as u64, n as u64, &mut parts, &mut total, n as u64);
    total / factorial(n as u64)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn g_count(k: i64) -> BigInt {
    if k < 0 {
        BigInt::from(0)
    } else {
        BigInt::from(polya_graph_count(k as usize))
    }
}

/// Signed coefficients of Π_{p≥1}(1 - x^p) up to degree n, negated:
/// c[m] = Σ over partitions of m into distinct parts of (-1)^{parts-1}.
fn distinct_part_coeffs(n: usize) -> Vec<i64> {
    let mut f = alloc::vec![0i64; n + 1];
    f[0] = 1;
    for p in 1..=n {
        for m in (p..=n).rev() {
            f[m] -= f[m - p];
        }
    }
    f.iter_mut().for_each(|c| *c = -*c);
    f
}

/// Number of graphs of order n containing one or more complete
/// components, by inclusion-exclusion over the set of distinct
/// complete-component orders:
///   κ_n = Σ_{S ⊆ {1,2,...}, S ≠ ∅} (-1)^{|S|-1} g_{n-ΣS}
/// with g_0 = 1 and g_{<0} = 0, collapsed to a sum over partitions of
/// the deficit into distinct parts.
pub fn kappa(n: usize) -> BigUint {
    let c = distinct_part_coeffs(n);
    let mut total = BigInt::from(0);
    for m in 1..=n {
        total += c[m] * g_count(n as i64 - m as i64);
    }
    total.try_into().expect("count is non-negative")
}

/// The κ formula with the g_{n-1} term replaced by the number of
/// order-(n-1) graphs of diameter < 3: counts strong graphs with one
/// or more full vertices or surrounding weak-twin sets. The deficit-1
/// term is the only one using g_{n-1}, so the replacement is a plain
/// substitution.
pub fn kappa_strong(n: usize, diam_lt3_at_n_minus_1: u64) -> BigUint {
    let total = BigInt::from(kappa(n)) - g_count(n as i64 - 1)
        + BigInt::from(diam_lt3_at_n_minus_1);
    total.try_into().expect("count is non-negative")
}

/// Graphs of order n with diameter 0, 1 or 2. A finite diameter
/// forces connectivity, so these are connected (or K1). The empty
/// order-0 graph counts as diameter 0.
pub fn diameter_lt3_count(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    generate_all(n)
        .expect("order in range")
        .iter()
        .filter(|g| matches!(metrics(g).diameter, Dist::Finite(d) if d < 3))
        .count() as u64
}

/// One row of a statistics table over all order-n graphs (or just the
/// connected ones).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StatsRow {
    pub n: usize,
    pub graphs: u64,
    /// graphs with no surrounded vertex
    pub no_surrounded: u64,
    /// graphs in which every vertex is surrounded
    pub all_surrounded: u64,
    /// weak graphs: no first-order redundant vertex
    pub no_redundant: u64,
    /// strong graphs: every vertex first-order redundant
    pub all_redundant: u64,
    /// strong graphs with no surrounded vertex
    pub redundant_not_surrounded: u64,
    /// strong, no surrounded vertex, diameter above 2
    pub redundant_not_surrounded_diam_gt2: u64,
    pub connected_only: bool,
}

/// Classifies every order-n graph into the table columns.
pub fn stats_row(n: usize, connected_only: bool) -> Result<StatsRow, EnumError> {
    let mut row = StatsRow {
        n,
        graphs: 0,
        no_surrounded: 0,
        all_surrounded: 0,
        no_redundant: 0,
        all_redundant: 0,
        redundant_not_surrounded: 0,
        redundant_not_surrounded_diam_gt2: 0,
        connected_only,
    };
    for g in generate_all(n)? {
        if connected_only && !g.is_connected() {
            continue;
        }
        row.graphs += 1;
        let sur = surround_pairs_matrix(&g);
        let none_surrounded = sur.surrounded.iter().all(|&s| !s);
        let report = classify(&g);
        if none_surrounded {
            row.no_surrounded += 1;
        }
        if sur.surrounded.iter().all(|&s| s) {
            row.all_surrounded += 1;
        }
        match report.class {
            GraphClass::Weak => row.no_redundant += 1,
            GraphClass::Strong => {
                row.all_redundant += 1;
                if none_surrounded {
                    row.redundant_not_surrounded += 1;
                    if metrics(&g).diameter > Dist::Finite(2) {
                        row.redundant_not_surrounded_diam_gt2 += 1;
                    }
                }
            }
            GraphClass::Neither => {}
        }
    }
    Ok(row)
}

/// Both statistics tables, rows 1..=n_max.
pub fn stats_table(n_max: usize, connected_only: bool) -> Result<Vec<StatsRow>, EnumError> {
    (1..=n_max).map(|n| stats_row(n, connected_only)).collect()
}

/// Maximum edge count over weak graphs of order n, and the complement
/// deficit f(n) = C(n,2) - max.
pub fn max_weak_edges(n: usize) -> Result<(u64, u64), EnumError> {
    let max = generate_all(n)?
        .iter()
        .filter(|g| classify(g).class == GraphClass::Weak)
        .map(|g| g.edge_count() as u64)
        .max()
        .unwrap_or(0);
    Ok((max, (n * (n - 1) / 2) as u64 - max))
}

/// Generation filter: no vertex is surrounded by a first-order
/// redundant vertex. Every single-vertex deletion of a weak graph
/// satisfies this, so only graphs passing it need be considered as
/// weak-graph predecessors.
pub fn filter_no_surrounded_by_redundant(g: &Graph) -> bool {
    let sur = surround_pairs_matrix(g);
    let n = g.order();
    for v in 0..n {
        if !is_redundant_first(g, v) {
            continue;
        }
        for u in 0..n {
            if u != v && sur.surrounds(v, u) {
                return false;
            }
        }
    }
    true
}

/// Generation filter: the set S of vertices involved in at least one
/// weak link is pairwise within distance 2. Every single-vertex
/// deletion of a strong graph satisfies this.
pub fn filter_weaklinks_within2(g: &Graph) -> bool {
    let n = g.order();
    let mut in_weak = alloc::vec![false; n];
    for u in 0..n {
        for v in u + 1..n {
            if link_kind(g, u, v) == LinkKind::Weak {
                in_weak[u] = true;
                in_weak[v] = true;
            }
        }
    }
    let s: Vec<usize> = (0..n).filter(|&v| in_weak[v]).collect();
    let d = crate::dist::distance_matrix(g);
    s.iter().all(|&u| s.iter().all(|&v| d.get(u, v) <= Dist::Finite(2)))
}

/// Empirical probe of the largest diameter among connected strong
/// graphs with no surrounded vertex. Reported, never asserted: the
/// suspicion is that the maximum grows like ⌊log₂ n⌋ with hypercubes
/// among the extremal graphs.
#[derive(Clone, Debug)]
pub struct DiameterProbe {
    pub n: usize,
    pub max_diameter: Option<u32>,
    pub maximizers: Vec<Graph>,
    pub includes_hypercube: bool,
}

pub fn diameter_probe(n: usize) -> Result<DiameterProbe, EnumError> {
    let mut best: Option<u32> = None;
    let mut maximizers = Vec::new();
    for g in generate_all(n)? {
        if !g.is_connected() {
            continue;
        }
        let sur = surround_pairs_matrix(&g);
        if sur.surrounded.iter().any(|&s| s) || classify(&g).class != GraphClass::Strong {
            continue;
        }
        if let Dist::Finite(d) = metrics(&g).diameter {
            if best.map_or(true, |b| d > b) {
                best = Some(d);
                maximizers.clear();
            }
            if best == Some(d) {
                maximizers.push(g);
            }
        }
    }
    let includes_hypercube = n == 8 && {
        let cube = canonical_key(&crate::graph::families::hypercube(3));
        maximizers.iter().any(|g| canonical_key(g) == cube)
    };
    Ok(DiameterProbe { n, max_diameter: best, maximizers, includes_hypercube })
}
