//! Planar mesh graphs from square and triangular tilings, and the
//! nibbling-based distance query on them.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::dist::{bfs_distances, Dist};
use crate::graph::{Graph, GraphBuilder};


/// Lattice tiling flavour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshKind {
    /// Unit squares; cell (r, c) has corners (r..r+1, c..c+1).
    Square,
    /// Unit triangles. Cell (r, 2k) is the up triangle
    /// {(r,k), (r,k+1), (r+1,k)}; cell (r, 2k+1) is the down triangle
    /// {(r,k+1), (r+1,k), (r+1,k+1)}.
    Triangular,
}

/// A finite masked region of the lattice: one graph vertex per lattice
/// point incident to a masked cell, one edge per tile edge.
#[derive(Clone, Debug)]
pub struct MeshSpec {
    pub kind: MeshKind,
    pub cells: BTreeSet<(i64, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshError {
    EmptyMask,
    /// Query endpoint is not a vertex of the mesh.
    NotAVertex((i64, i64)),
    /// Query endpoints must be distinct, non-adjacent interior points.
    BadEndpoints,
}

impl core::fmt::Display for MeshError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MeshError::EmptyMask => write!(f, "mesh mask is empty"),
            MeshError::NotAVertex(p) => write!(f, "({}, {}) is not a mesh vertex", p.0, p.1),
            MeshError::BadEndpoints => {
                write!(f, "endpoints must be distinct non-adjacent interior vertices; use plain bfs")
            }
        }
    }
}

/// The corner points of one cell, paired with the tile edges among them.
fn cell_points(kind: MeshKind, cell: (i64, i64)) -> Vec<(i64, i64)> {
    let (r, c) = cell;
    match kind {
        MeshKind::Square => alloc::vec![(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)],
        MeshKind::Triangular => {
            let k = c.div_euclid(2);
            if c.rem_euclid(2) == 0 {
                alloc::vec![(r, k), (r, k + 1), (r + 1, k)]
            } else {
                alloc::vec![(r, k + 1), (r + 1, k), (r + 1, k + 1)]
            }
        }
    }
}

fn cell_edges(kind: MeshKind, cell: (i64, i64)) -> Vec<((i64, i64), (i64, i64))> {
    let pts = cell_points(kind, cell);
    match kind {
        // square: the four sides, not the diagonals
        MeshKind::Square => alloc::vec![
            (pts[0], pts[1]),
            (pts[0], pts[2]),
            (pts[1], pts[3]),
            (pts[2], pts[3]),
        ],
        // triangle: all three sides
        MeshKind::Triangular => {
            alloc::vec![(pts[0], pts[1]), (pts[0], pts[2]), (pts[1], pts[2])]
        }
    }
}

/// A mesh graph together with its lattice embedding.
#[derive(Clone, Debug)]
pub struct Mesh {
    pub graph: Graph,
    /// points[v] = lattice coordinates of vertex v; sorted ascending.
    pub points: Vec<(i64, i64)>,
    pub kind: MeshKind,
}

impl Mesh {
    pub fn vertex_at(&self, p: (i64, i64)) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    /// The cells of `kind` incident to lattice point `p`.
    fn incident_cells(&self, p: (i64, i64)) -> Vec<(i64, i64)> {
        let (i, j) = p;
        match self.kind {
            MeshKind::Square => {
                alloc::vec![(i - 1, j - 1), (i - 1, j), (i, j - 1), (i, j)]
            }
            MeshKind::Triangular => alloc::vec![
                (i, 2 * j),
                (i, 2 * j - 1),
                (i, 2 * j - 2),
                (i - 1, 2 * j),
                (i - 1, 2 * j + 1),
                (i - 1, 2 * j - 1),
            ],
        }
    }

    /// A point is interior when every cell it touches is in the mask.
    pub fn is_interior(&self, spec: &MeshSpec, p: (i64, i64)) -> bool {
        self.incident_cells(p).iter().all(|c| spec.cells.contains(c))
    }
}

/// Builds the graph of a masked tiling.
pub fn mesh_graph(spec: &MeshSpec) -> Result<Mesh, MeshError> {
    if spec.cells.is_empty() {
        return Err(MeshError::EmptyMask);
    }
    let mut points = BTreeSet::new();
    for &cell in &spec.cells {
        for p in cell_points(spec.kind, cell) {
            points.insert(p);
        }
    }
    let points: Vec<(i64, i64)> = points.into_iter().collect();
    let index: BTreeMap<(i64, i64), usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut b = GraphBuilder::new(points.len());
    for &cell in &spec.cells {
        for (p, q) in cell_edges(spec.kind, cell) {
            b.add_edge(index[&p], index[&q]);
        }
    }
    Ok(Mesh { graph: b.build(), points, kind: spec.kind })
}

/// Convenience rectangular mask: rows 0..h, cols 0..w of cells. For the
/// triangular kind the mask covers both orientations, giving a w×h
/// parallelogram of 2·w·h triangles.
pub fn rect_mask(kind: MeshKind, h: i64, w: i64) -> MeshSpec {
    let mut cells = BTreeSet::new();
    for r in 0..h {
        for c in 0..w {
            match kind {
                MeshKind::Square => {
                    cells.insert((r, c));
                }
                MeshKind::Triangular => {
                    cells.insert((r, 2 * c));
                    cells.insert((r, 2 * c + 1));
                }
            }
        }
    }
    MeshSpec { kind, cells }
}

/// Distance between two interior mesh points, computed the indirect
/// way: delete both endpoints, nibble the rest down to a weak graph,
/// and bridge through the surviving former neighbors. Each deletion
/// leaves the hole's boundary ring non-redundant, so the former
/// neighbors survive nibbling and
///   d(s,t) = 2 + min over former neighbors (x of s, y of t) of d'(x,y).
/// The result equals plain BFS distance on the intact mesh; callers
/// wanting boundary or adjacent endpoints should use BFS directly.
pub fn mesh_distance_query(
    spec: &MeshSpec,
    s: (i64, i64),
    t: (i64, i64),
) -> Result<Dist, MeshError> {
    let mesh = mesh_graph(spec)?;
    let sv = mesh.vertex_at(s).ok_or(MeshError::NotAVertex(s))?;
    let tv = mesh.vertex_at(t).ok_or(MeshError::NotAVertex(t))?;
    if sv == tv
        || mesh.graph.has_edge(sv, tv)
        || !mesh.is_interior(spec, s)
        || !mesh.is_interior(spec, t)
    {
        return Err(MeshError::BadEndpoints);
    }
    let s_nbrs: Vec<usize> = mesh.graph.neighbors(sv).iter().collect();
    let t_nbrs: Vec<usize> = mesh.graph.neighbors(tv).iter().collect();
    // Delete the higher index first so the lower one stays valid.
    let (hi, lo) = if sv > tv { (sv, tv) } else { (tv, sv) };
    let cut = mesh.graph.delete_vertex(hi).unwrap().delete_vertex(lo).unwrap();
    // label in cut graph of an original vertex
    let relabel = |v: usize| v - (v > lo) as usize - (v > hi) as usize;
    // The bridge needs the former neighbors alive, so they are exempt
    // from deletion. Usually the hole rings are chordless cycles and
    // could never be nibbled anyway, but when s and t are at distance 2
    // their rings overlap and an unrestricted nibble can eat them.
    // Deleting any subset of redundant vertices is isometric, so the
    // restriction costs nothing.
    let protected: BTreeSet<usize> =
        s_nbrs.iter().chain(t_nbrs.iter()).map(|&v| relabel(v)).collect();
    let mut survivors: Vec<usize> = (0..cut.order()).collect();
    let mut g = cut;
    loop {
        let pick = (0..g.order())
            .filter(|&v| !protected.contains(&survivors[v]))
            .filter(|&v| crate::redundancy::is_redundant_first(&g, v))
            .min_by_key(|&v| (g.degree(v), v));
        match pick {
            Some(v) => {
                survivors.remove(v);
                g = g.delete_vertex(v).unwrap();
            }
            None => break,
        }
    }
    let place = |orig: usize| survivors.iter().position(|&x| x == relabel(orig));
    let mut best = Dist::Unreachable;
    for &x in &s_nbrs {
        let xv = place(x).expect("former neighbors are protected");
        let row = bfs_distances(&g, xv);
        for &y in &t_nbrs {
            let yv = place(y).expect("former neighbors are protected");
            best = best.min(row[yv]);
        }
    }
    Ok(match best {
        Dist::Finite(d) => Dist::Finite(d + 2),
        Dist::Unreachable => Dist::Unreachable,
    })
}
