//! Walk counting via powers of the adjacency matrix.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkOverflow;

impl core::fmt::Display for WalkOverflow {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "walk count overflowed 64-bit unsigned range")
    }
}

/// Dense n x n matrix of walk counts, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalkMatrix {
    n: usize,
    w: Vec<u64>,
}

impl WalkMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.w[u * self.n + v]
    }

    fn identity(n: usize) -> WalkMatrix {
        let mut w = vec![0; n * n];
        for i in 0..n {
            w[i * n + i] = 1;
        }
        WalkMatrix { n, w }
    }

    pub fn adjacency(g: &Graph) -> WalkMatrix {
        let n = g.order();
        let mut w = vec![0; n * n];
        for (u, v) in g.edges() {
            w[u * n + v] = 1;
            w[v * n + u] = 1;
        }
        WalkMatrix { n, w }
    }

    /// Multiplies by the adjacency matrix with overflow checking.
    fn step(&self, g: &Graph) -> Result<WalkMatrix, WalkOverflow> {
        let n = self.n;
        let mut w = vec![0u64; n * n];
        for u in 0..n {
            for t in 0..n {
                let c = self.w[u * n + t];
                if c == 0 {
                    continue;
                }
                for v in g.neighbors(t).iter() {
                    let cell = &mut w[u * n + v];
                    *cell = cell.checked_add(c).ok_or(WalkOverflow)?;
                }
            }
        }
        Ok(WalkMatrix { n, w })
    }
}

/// Entry (u,v) counts walks of length `k` from u to v. Errors out rather
/// than wrapping when a count exceeds u64.
pub fn walk_count_matrix(g: &Graph, k: u32) -> Result<WalkMatrix, WalkOverflow> {
    let mut acc = WalkMatrix::identity(g.order());
    for _ in 0..k {
        acc = acc.step(g)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k0_is_identity_and_k1_is_adjacency() {
        let g = cycle(5);
        let w0 = walk_count_matrix(&g, 0).unwrap();
        let w1 = walk_count_matrix(&g, 1).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(w0.get(u, v), (u == v) as u64);
                assert_eq!(w1.get(u, v), g.has_edge(u, v) as u64);
            }
        }
        assert_eq!(w1, WalkMatrix::adjacency(&g));
    }

    #[test]
    fn pentagon_two_walks() {
        // On C5: 2-walks between adjacent vertices: 0. Diagonal: degree = 2.
        let w2 = walk_count_matrix(&cycle(5), 2).unwrap();
        assert_eq!(w2.get(0, 1), 0);
        assert_eq!(w2.get(0, 0), 2);
        assert_eq!(w2.get(0, 2), 1);
    }

    #[test]
    fn composition_identity() {
        // w_{j+k}(u,v) = sum_t w_j(u,t) w_k(t,v), here via matrix equality.
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            state >> 33
        };
        for _ in 0..20 {
            let n = (next() % 10 + 2) as usize;
            let mut b = crate::graph::GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 2 == 0 {
                        b.add_edge(u, v);
                    }
                }
            }
            let g = b.build();
            for j in 0..=3u32 {
                for k in 0..=3u32 {
                    let wj = walk_count_matrix(&g, j).unwrap();
                    let wk = walk_count_matrix(&g, k).unwrap();
                    let wjk = walk_count_matrix(&g, j + k).unwrap();
                    for u in 0..n {
                        for v in 0..n {
                            let sum: u64 = (0..n).map(|t| wj.get(u, t) * wk.get(t, v)).sum();
                            assert_eq!(sum, wjk.get(u, v));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn overflow_detected() {
        // K30 walk counts grow as 29^k; k=64 far exceeds u64.
        assert_eq!(walk_count_matrix(&complete(30), 64), Err(WalkOverflow));
    }
}
