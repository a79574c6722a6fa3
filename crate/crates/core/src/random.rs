//! G(n,p) sampling and the analytic redundancy/diameter formulas.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::dist::{distance_matrix, Dist};
use crate::graph::{Graph, GraphBuilder};
use crate::redundancy::{is_redundant_first, kth_redundant_def};

/// One Monte-Carlo record for a single (n, p) cell. All statistics
/// except `p_connected` are taken over the connected samples only.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GnpRow {
    pub n: usize,
    pub p: f64,
    pub samples: usize,
    pub connected_samples: usize,
    pub p_connected: f64,
    pub mean_diameter: f64,
    pub mean_redundant_count: f64,
    /// Mean count of second-order redundant vertices; absent when the
    /// (expensive) computation was switched off.
    pub mean_2nd_order_redundant_count: Option<f64>,
    pub p_weak: f64,
    pub p_strong: f64,
    /// Fraction of connected samples with diameter 3 and at least half
    /// the vertices redundant.
    pub p_diam3_half_redundant: f64,
}

/// The five p-thresholds governing G(n,p) redundancy behaviour, with
/// L = ln(n)/n. "log" here is the natural logarithm, matching the
/// classical ln(n)/n connectivity threshold.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ThresholdSet {
    pub n: usize,
    pub l: f64,
    /// Almost surely connected above this: L.
    pub connected_p: f64,
    /// Almost all graphs weak above this: (5/4)L.
    pub weak_p: f64,
    /// Weak region ends near √L.
    pub weak_end_p: f64,
    /// Diameter drops to 2 near √(2L).
    pub diam2_p: f64,
    /// Almost all graphs strong above this: √((5/2)L).
    pub strong_p: f64,
}

/// Deterministic G(n,p) sample: each of the C(n,2) possible edges is
/// present independently with probability `p`.
pub fn gnp_sample(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability out of range");
    let mut b = GraphBuilder::new(n);
    if p > 0.0 {
        // 53-bit uniform in [0,1), the standard double-precision draw.
        for u in 0..n {
            for v in u + 1..n {
                let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if x < p {
                    b.add_edge(u, v);
                }
            }
        }
    }
    b.build()
}

/// Seeded convenience wrapper around [`gnp_sample`].
pub fn gnp_sample_seeded(n: usize, p: f64, seed: u64) -> Graph {
    gnp_sample(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// splitmix64: decorrelates cell/replicate indices into stream seeds so
/// that nearby cells do not share low-bit structure.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Binomial pmf C(n,k) p^k (1-p)^{n-k}, in log space via lgamma so it
/// stays finite for n up to 10^4.
pub fn binom_pmf(n: u64, k: u64, p: f64) -> f64 {
    assert!(k <= n, "k out of range");
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    if p == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if p == 1.0 {
        return if k == n { 1.0 } else { 0.0 };
    }
    let lchoose = libm::lgamma((n + 1) as f64)
        - libm::lgamma((k + 1) as f64)
        - libm::lgamma((n - k + 1) as f64);
    libm::exp(lchoose + k as f64 * libm::log(p) + (n - k) as f64 * libm::log(1.0 - p))
}

/// Analytic estimate of the probability that a fixed vertex of G(n,p)
/// is redundant:
///
///   P_red = B(n-1,0) + B(n-1,1)
///         + Σ_{d≥2} B(n-1,d) · [p + (1-p)(1 - (1-p²)^{n-3})]^{C(d,2)}
///
/// where B(m,k) is the binomial pmf at probability p. The degree sum is
/// truncated once B(n-1,d) < 10^{-15} past the mode; the discarded tail
/// contributes less than n·10^{-15} in absolute terms. The estimate is
/// known to undershoot the true value by about a factor of 2 near its
/// minimum, but locates the interesting p range correctly.
pub fn p_red_formula(n: usize, p: f64) -> f64 {
    assert!(n >= 3, "formula needs n >= 3");
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let m = (n - 1) as u64;
    // Probability that a fixed pair of neighbors is strongly linked.
    let q = p + (1.0 - p) * (1.0 - libm::pow(1.0 - p * p, (n - 3) as f64));
    let mode = (m as f64 * p) as u64;
    let mut total = binom_pmf(m, 0, p) + binom_pmf(m, 1, p);
    for d in 2..=m {
        let b = binom_pmf(m, d, p);
        if b < 1e-15 {
            if d > mode {
                break;
            }
            continue;
        }
        let pairs = (d * (d - 1) / 2) as f64;
        total += b * libm::pow(q, pairs);
    }
    total
}

/// Analytic probability that G(n,p) has diameter at most 2:
/// (1 - (1-p)(1-p²)^{n-2})^{C(n,2)}.
pub fn p_diam_le2(n: usize, p: f64) -> f64 {
    assert!(n >= 2, "formula needs n >= 2");
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let per_pair = 1.0 - (1.0 - p) * libm::pow(1.0 - p * p, (n - 2) as f64);
    libm::pow(per_pair, (n * (n - 1) / 2) as f64)
}

/// The threshold ladder for G(n,p).
pub fn thresholds(n: usize) -> ThresholdSet {
    assert!(n >= 3, "thresholds need n >= 3");
    let l = libm::log(n as f64) / n as f64;
    ThresholdSet {
        n,
        l,
        connected_p: l,
        weak_p: 1.25 * l,
        weak_end_p: libm::sqrt(l),
        diam2_p: libm::sqrt(2.0 * l),
        strong_p: libm::sqrt(2.5 * l),
    }
}

/// Monte-Carlo estimate for one (n, p) cell. Replicate r uses the
/// stream seed `mix_seed(seed, r)`, so results are reproducible
/// regardless of how replicates are scheduled. `second_order` switches
/// the expensive second-order redundancy count on.
pub fn gnp_cell(n: usize, p: f64, samples: usize, seed: u64, second_order: bool) -> GnpRow {
    let mut connected = 0usize;
    let mut diam_sum = 0u64;
    let mut red_sum = 0u64;
    let mut red2_sum = 0u64;
    let mut weak = 0usize;
    let mut strong = 0usize;
    let mut d3_half = 0usize;
    for r in 0..samples {
        let g = gnp_sample_seeded(n, p, mix_seed(seed, r as u64));
        let dm = distance_matrix(&g);
        let diam = match dm.diameter() {
            Dist::Finite(d) if g.order() > 0 => d,
            _ => continue, // disconnected (or empty) samples are excluded
        };
        connected += 1;
        diam_sum += diam as u64;
        let red = (0..n).filter(|&v| is_redundant_first(&g, v)).count();
        red_sum += red as u64;
        if second_order {
            red2_sum += (0..n).filter(|&v| kth_redundant_def(&g, v, 2)).count() as u64;
        }
        if red == 0 {
            weak += 1;
        }
        if red == n {
            strong += 1;
        }
        if diam == 3 && 2 * red >= n {
            d3_half += 1;
        }
    }
    let over = |count: usize| count as f64 / connected.max(1) as f64;
    GnpRow {
        n,
        p,
        samples,
        connected_samples: connected,
        p_connected: connected as f64 / samples.max(1) as f64,
        mean_diameter: diam_sum as f64 / connected.max(1) as f64,
        mean_redundant_count: red_sum as f64 / connected.max(1) as f64,
        mean_2nd_order_redundant_count: second_order
            .then(|| red2_sum as f64 / connected.max(1) as f64),
        p_weak: over(weak),
        p_strong: over(strong),
        p_diam3_half_redundant: over(d3_half),
    }
}

/// Sequential scan over a p grid. Parallel drivers live in the std
/// companion crate; the per-cell seeding makes the two agree exactly.
pub fn gnp_scan(
    n: usize,
    p_grid: &[f64],
    samples: usize,
    seed: u64,
    second_order: bool,
) -> Vec<GnpRow> {
    p_grid
        .iter()
        .enumerate()
        .map(|(i, &p)| gnp_cell(n, p, samples, mix_seed(seed, 0x10_0000 + i as u64), second_order))
        .collect()
}
