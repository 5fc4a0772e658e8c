//! The three regular tilings as indexed cell/vertex systems.
//!
//! Vertices of all three tilings land on integer quadruples
//! `(a, b, c, d)` meaning the exact point `(a + b√3, c + d√3)`, with the
//! lattice edge length normalized to 2 (circle radius 1). All adjacency,
//! direction and symmetry computations below are pure integer arithmetic.
//!
//! Embeddings:
//! - square: cell `(i, j)` has corners `(2i, 2j) … (2i, 2j+2)`;
//! - triangular: up cell `(i, j)` has corners `(2i+j, j√3)`,
//!   `(2i+j+2, j√3)`, `(2i+j+1, (j+1)√3)`; the down cell is its point
//!   reflection through the right edge midpoint;
//! - hexagonal: cell `(p, q)` is centered at `(2√3·p + √3·q, 3q)` with
//!   corners at angles 30° + 60°k, so tiling edges leave a vertex at odd
//!   direction indices, alternating `{1,5,9}` / `{3,7,11}` by sublattice.

use crate::error::TangleError;
use crate::geometry::{Dir, ExactPoint, QSqrt3, rat};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Tiling {
    Square,
    Hexagonal,
    Triangular,
}

impl Tiling {
    /// Links per circle: the n of the Gauss-Bonnet count j − k = n.
    pub fn links_per_circle(self) -> u32 {
        match self {
            Tiling::Square => 4,
            Tiling::Hexagonal => 3,
            Tiling::Triangular => 6,
        }
    }

    /// Unit link angle in 30° steps (90°/120°/60°).
    pub fn unit_steps(self) -> u8 {
        match self {
            Tiling::Square => 3,
            Tiling::Hexagonal => 4,
            Tiling::Triangular => 2,
        }
    }

    /// Number of cells incident to a vertex.
    pub fn cells_per_vertex(self) -> usize {
        match self {
            Tiling::Square => 4,
            Tiling::Hexagonal => 3,
            Tiling::Triangular => 6,
        }
    }

    /// Cells added by one fundamental operation.
    pub fn cells_per_op(self) -> u64 {
        match self {
            Tiling::Triangular => 2,
            _ => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tiling::Square => "square",
            Tiling::Hexagonal => "hexagonal",
            Tiling::Triangular => "triangular",
        }
    }

    pub fn from_str(s: &str) -> Result<Tiling, TangleError> {
        match s {
            "square" => Ok(Tiling::Square),
            "hexagonal" => Ok(Tiling::Hexagonal),
            "triangular" => Ok(Tiling::Triangular),
            other => Err(TangleError::UnknownTiling(other.to_string())),
        }
    }

    pub const ALL: [Tiling; 3] = [Tiling::Square, Tiling::Hexagonal, Tiling::Triangular];
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A lattice vertex, keyed by its exact position `(a + b√3, c + d√3)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl VertexId {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        VertexId { a, b, c, d }
    }

    pub fn pos(&self) -> ExactPoint {
        ExactPoint::new(
            QSqrt3::new(rat(self.a), rat(self.b)),
            QSqrt3::new(rat(self.c), rat(self.d)),
        )
    }

    /// Position doubled, stays integral for kiss points too.
    pub fn doubled(&self) -> (i64, i64, i64, i64) {
        (2 * self.a, 2 * self.b, 2 * self.c, 2 * self.d)
    }

    pub fn translate(&self, t: (i64, i64, i64, i64)) -> VertexId {
        VertexId::new(self.a + t.0, self.b + t.1, self.c + t.2, self.d + t.3)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = match (self.a, self.b) {
            (a, 0) => format!("{a}"),
            (0, b) => format!("{b}√3"),
            (a, b) => format!("{a}+{b}√3"),
        };
        let ys = match (self.c, self.d) {
            (c, 0) => format!("{c}"),
            (0, d) => format!("{d}√3"),
            (c, d) => format!("{c}+{d}√3"),
        };
        write!(f, "({xs},{ys})")
    }
}

/// A tile of one of the three tilings.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CellId {
    Square { i: i64, j: i64 },
    Hex { p: i64, q: i64 },
    Tri { i: i64, j: i64, up: bool },
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellId::Square { i, j } => write!(f, "[{i},{j}]"),
            CellId::Hex { p, q } => write!(f, "[{p},{q}]"),
            CellId::Tri { i, j, up } => write!(f, "[{i},{j},{}]", if *up { "U" } else { "D" }),
        }
    }
}

/// Corner list in CCW order; every edge has length 2.
pub fn cell_vertices(t: Tiling, c: &CellId) -> Vec<VertexId> {
    match (t, c) {
        (Tiling::Square, CellId::Square { i, j }) => vec![
            VertexId::new(2 * i, 0, 2 * j, 0),
            VertexId::new(2 * i + 2, 0, 2 * j, 0),
            VertexId::new(2 * i + 2, 0, 2 * j + 2, 0),
            VertexId::new(2 * i, 0, 2 * j + 2, 0),
        ],
        (Tiling::Triangular, CellId::Tri { i, j, up: true }) => vec![
            VertexId::new(2 * i + j, 0, 0, *j),
            VertexId::new(2 * i + j + 2, 0, 0, *j),
            VertexId::new(2 * i + j + 1, 0, 0, j + 1),
        ],
        (Tiling::Triangular, CellId::Tri { i, j, up: false }) => vec![
            VertexId::new(2 * i + j + 2, 0, 0, *j),
            VertexId::new(2 * i + j + 3, 0, 0, j + 1),
            VertexId::new(2 * i + j + 1, 0, 0, j + 1),
        ],
        (Tiling::Hexagonal, CellId::Hex { p, q }) => {
            let (cb, cc) = (2 * p + q, 3 * q);
            HEX_CORNER_OFFSETS
                .iter()
                .map(|(db, dc)| VertexId::new(0, cb + db, cc + dc, 0))
                .collect()
        }
        _ => panic!("cell {c:?} does not belong to tiling {t:?}"),
    }
}

/// Hexagon corner offsets in CCW order, at angles 30° + 60°k:
/// (√3,1), (0,2), (−√3,1), (−√3,−1), (0,−2), (√3,−1) as (Δb, Δc).
const HEX_CORNER_OFFSETS: [(i64, i64); 6] = [(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)];

/// Is `v` a vertex of tiling `t`?
pub fn is_vertex(t: Tiling, v: &VertexId) -> bool {
    match t {
        Tiling::Square => v.b == 0 && v.d == 0 && v.a % 2 == 0 && v.c % 2 == 0,
        Tiling::Triangular => v.b == 0 && v.c == 0 && (v.a - v.d).rem_euclid(2) == 0,
        Tiling::Hexagonal => {
            if v.a != 0 || v.d != 0 {
                return false;
            }
            match v.c.rem_euclid(3) {
                1 => {
                    let q = (v.c - 1).div_euclid(3);
                    (v.b - q).rem_euclid(2) == 1
                }
                2 => {
                    let q = (v.c - 2).div_euclid(3);
                    (v.b - q).rem_euclid(2) == 0
                }
                _ => false,
            }
        }
    }
}

/// The directions of the tiling edges leaving `v`, ascending.
pub fn edge_dirs(t: Tiling, v: &VertexId) -> Vec<Dir> {
    match t {
        Tiling::Square => vec![Dir::new(0), Dir::new(3), Dir::new(6), Dir::new(9)],
        Tiling::Triangular => (0..6).map(|k| Dir::new(2 * k)).collect(),
        Tiling::Hexagonal => {
            if v.c.rem_euclid(3) == 1 {
                vec![Dir::new(1), Dir::new(5), Dir::new(9)]
            } else {
                vec![Dir::new(3), Dir::new(7), Dir::new(11)]
            }
        }
    }
}

/// Neighbor of `v` along direction `k` (must be an edge direction of `v`).
pub fn neighbor(v: &VertexId, k: Dir) -> VertexId {
    let (xa, xb, yc, yd) = k.doubled_unit();
    VertexId::new(v.a + xa, v.b + xb, v.c + yc, v.d + yd)
}

/// All lattice neighbors (at squared distance exactly 4), in ascending
/// direction order.
pub fn vertex_neighbors(t: Tiling, v: &VertexId) -> Result<Vec<VertexId>, TangleError> {
    if !is_vertex(t, v) {
        return Err(TangleError::NotAVertex(v.to_string()));
    }
    Ok(edge_dirs(t, v).into_iter().map(|k| neighbor(v, k)).collect())
}

/// Direction index from `v` to its neighbor `u`.
pub fn direction(v: &VertexId, u: &VertexId) -> Result<Dir, TangleError> {
    let d = (u.a - v.a, u.b - v.b, u.c - v.c, u.d - v.d);
    for k in 0..12u8 {
        if Dir::new(k as i64).doubled_unit() == d {
            return Ok(Dir::new(k as i64));
        }
    }
    Err(TangleError::NotNeighbors)
}

/// Squared distance between two lattice vertices as `(r, s)` meaning
/// `r + s√3`; pure integer arithmetic.
pub fn dist_squared_quad(v: &VertexId, u: &VertexId) -> (i64, i64) {
    let (da, db, dc, dd) = (u.a - v.a, u.b - v.b, u.c - v.c, u.d - v.d);
    (da * da + 3 * db * db + dc * dc + 3 * dd * dd, 2 * (da * db + dc * dd))
}

/// One angular sector around a vertex: the incident cell between two
/// consecutive edge spokes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Sector {
    /// Direction of the spoke where the sector starts (CCW).
    pub start: Dir,
    /// Direction of the spoke where it ends; end = start + sector angle.
    pub end: Dir,
    pub cell: CellId,
}

/// All potential cells around `v` in CCW order, whether or not they belong
/// to any particular polyform.
pub fn sectors_at(t: Tiling, v: &VertexId) -> Vec<Sector> {
    debug_assert!(is_vertex(t, v), "not a vertex: {v}");
    match t {
        Tiling::Square => {
            let (u, w) = (v.a / 2, v.c / 2);
            [(0i64, (u, w)), (3, (u - 1, w)), (6, (u - 1, w - 1)), (9, (u, w - 1))]
                .into_iter()
                .map(|(k, (i, j))| Sector {
                    start: Dir::new(k),
                    end: Dir::new(k + 3),
                    cell: CellId::Square { i, j },
                })
                .collect()
        }
        Tiling::Triangular => {
            let (a, d) = (v.a, v.d);
            let h = (a - d).div_euclid(2);
            let cells = [
                CellId::Tri { i: h, j: d, up: true },
                CellId::Tri { i: h - 1, j: d, up: false },
                CellId::Tri { i: h - 1, j: d, up: true },
                CellId::Tri { i: h - 1, j: d - 1, up: false },
                CellId::Tri { i: h, j: d - 1, up: true },
                CellId::Tri { i: h, j: d - 1, up: false },
            ];
            cells
                .into_iter()
                .enumerate()
                .map(|(s, cell)| Sector {
                    start: Dir::new(2 * s as i64),
                    end: Dir::new(2 * s as i64 + 2),
                    cell,
                })
                .collect()
        }
        Tiling::Hexagonal => edge_dirs(t, v)
            .into_iter()
            .map(|k| {
                let center = neighbor(v, k.step(2));
                Sector { start: k, end: k.step(4), cell: hex_cell_of_center(&center) }
            })
            .collect(),
    }
}

fn hex_cell_of_center(center: &VertexId) -> CellId {
    debug_assert!(center.a == 0 && center.d == 0 && center.c % 3 == 0);
    let q = center.c / 3;
    debug_assert!((center.b - q) % 2 == 0);
    let p = (center.b - q) / 2;
    CellId::Hex { p, q }
}

/// The cells incident to vertex `v`.
pub fn incident_cells(t: Tiling, v: &VertexId) -> Vec<CellId> {
    sectors_at(t, v).into_iter().map(|s| s.cell).collect()
}

/// CCW-ordered edges of a cell as (from, to) pairs.
pub fn cell_edges(t: Tiling, c: &CellId) -> Vec<(VertexId, VertexId)> {
    let vs = cell_vertices(t, c);
    let n = vs.len();
    (0..n).map(|k| (vs[k], vs[(k + 1) % n])).collect()
}

/// Edge-adjacent cells (one per cell edge).
pub fn cell_edge_neighbors(t: Tiling, c: &CellId) -> Vec<CellId> {
    match (t, c) {
        (Tiling::Square, CellId::Square { i, j }) => vec![
            CellId::Square { i: i + 1, j: *j },
            CellId::Square { i: *i, j: j + 1 },
            CellId::Square { i: i - 1, j: *j },
            CellId::Square { i: *i, j: j - 1 },
        ],
        (Tiling::Hexagonal, CellId::Hex { p, q }) => vec![
            CellId::Hex { p: p + 1, q: *q },
            CellId::Hex { p: *p, q: q + 1 },
            CellId::Hex { p: p - 1, q: q + 1 },
            CellId::Hex { p: p - 1, q: *q },
            CellId::Hex { p: *p, q: q - 1 },
            CellId::Hex { p: p + 1, q: q - 1 },
        ],
        (Tiling::Triangular, CellId::Tri { i, j, up: true }) => vec![
            CellId::Tri { i: *i, j: *j, up: false },
            CellId::Tri { i: i - 1, j: *j, up: false },
            CellId::Tri { i: *i, j: j - 1, up: false },
        ],
        (Tiling::Triangular, CellId::Tri { i, j, up: false }) => vec![
            CellId::Tri { i: *i, j: *j, up: true },
            CellId::Tri { i: i + 1, j: *j, up: true },
            CellId::Tri { i: *i, j: j + 1, up: true },
        ],
        _ => panic!("cell {c:?} does not belong to tiling {t:?}"),
    }
}

/// One element of a tiling's point group about the origin.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Transform {
    /// Rotation in 30° steps, applied after the optional reflection.
    pub rot: u8,
    /// Reflection across the x axis, applied first.
    pub reflect: bool,
}

impl Transform {
    pub const IDENTITY: Transform = Transform { rot: 0, reflect: false };

    pub fn apply_vertex(&self, v: &VertexId) -> VertexId {
        let (a, b, c, d) = if self.reflect { (v.a, v.b, -v.c, -v.d) } else { (v.a, v.b, v.c, v.d) };
        let (xa, xb, yc, yd) = Dir::new(self.rot as i64).doubled_unit();
        // x' = x cosθ − y sinθ, y' = x sinθ + y cosθ, with 2cosθ = xa + xb√3
        // and 2sinθ = yc + yd√3; results stay integral on lattice points.
        let na2 = a * xa + 3 * b * xb - c * yc - 3 * d * yd;
        let nb2 = a * xb + b * xa - c * yd - d * yc;
        let nc2 = a * yc + 3 * b * yd + c * xa + 3 * d * xb;
        let nd2 = a * yd + b * yc + c * xb + d * xa;
        debug_assert!(
            na2 % 2 == 0 && nb2 % 2 == 0 && nc2 % 2 == 0 && nd2 % 2 == 0,
            "transform left the lattice: {v:?} rot {} reflect {}",
            self.rot,
            self.reflect
        );
        VertexId::new(na2 / 2, nb2 / 2, nc2 / 2, nd2 / 2)
    }

    pub fn apply_dir(&self, k: Dir) -> Dir {
        let k = if self.reflect { Dir::new(-(k.index() as i64)) } else { k };
        k.step(self.rot as i64)
    }

    pub fn apply_cell(&self, t: Tiling, c: &CellId) -> CellId {
        let vs: Vec<VertexId> = cell_vertices(t, c).iter().map(|v| self.apply_vertex(v)).collect();
        cell_from_vertices(t, &vs)
    }
}

/// The dihedral point group about the origin: order 8 for the square
/// tiling, order 12 for the other two.
pub fn point_group(t: Tiling) -> Vec<Transform> {
    let rots: Vec<u8> = match t {
        Tiling::Square => vec![0, 3, 6, 9],
        _ => vec![0, 2, 4, 6, 8, 10],
    };
    let mut out = Vec::with_capacity(rots.len() * 2);
    for &reflect in &[false, true] {
        for &rot in &rots {
            out.push(Transform { rot, reflect });
        }
    }
    out
}

/// Recover a CellId from its (unordered) transformed corner set.
pub fn cell_from_vertices(t: Tiling, vs: &[VertexId]) -> CellId {
    match t {
        Tiling::Square => {
            let i = vs.iter().map(|v| v.a).min().unwrap() / 2;
            let j = vs.iter().map(|v| v.c).min().unwrap() / 2;
            CellId::Square { i, j }
        }
        Tiling::Triangular => {
            let dmin = vs.iter().map(|v| v.d).min().unwrap();
            let low: Vec<&VertexId> = vs.iter().filter(|v| v.d == dmin).collect();
            if low.len() == 2 {
                let a = low.iter().map(|v| v.a).min().unwrap();
                CellId::Tri { i: (a - dmin) / 2, j: dmin, up: true }
            } else {
                let a = low[0].a;
                CellId::Tri { i: (a - dmin - 2) / 2, j: dmin, up: false }
            }
        }
        Tiling::Hexagonal => {
            let sb: i64 = vs.iter().map(|v| v.b).sum();
            let sc: i64 = vs.iter().map(|v| v.c).sum();
            debug_assert!(sb % 6 == 0 && sc % 6 == 0);
            hex_cell_of_center(&VertexId::new(0, sb / 6, sc / 6, 0))
        }
    }
}

/// Translation of cell indices by an integer cell-lattice shift; always a
/// symmetry of the tiling.
pub fn translate_cell(c: &CellId, di: i64, dj: i64) -> CellId {
    match c {
        CellId::Square { i, j } => CellId::Square { i: i + di, j: j + dj },
        CellId::Hex { p, q } => CellId::Hex { p: p + di, q: q + dj },
        CellId::Tri { i, j, up } => CellId::Tri { i: i + di, j: j + dj, up: *up },
    }
}

/// The position shift corresponding to `translate_cell(_, di, dj)`.
pub fn cell_translation_vector(t: Tiling, di: i64, dj: i64) -> (i64, i64, i64, i64) {
    match t {
        Tiling::Square => (2 * di, 0, 2 * dj, 0),
        Tiling::Triangular => (2 * di + dj, 0, 0, dj),
        Tiling::Hexagonal => (0, 2 * di + dj, 3 * dj, 0),
    }
}

/// Cell index pair used for translation normalization.
pub fn cell_key(c: &CellId) -> (i64, i64, bool) {
    match c {
        CellId::Square { i, j } => (*i, *j, false),
        CellId::Hex { p, q } => (*p, *q, false),
        CellId::Tri { i, j, up } => (*i, *j, !*up),
    }
}

/// Canonical base vertex for the degenerate (no-cell) form.
pub fn base_vertex(t: Tiling, class_of: &VertexId) -> VertexId {
    match t {
        Tiling::Square | Tiling::Triangular => VertexId::new(0, 0, 0, 0),
        Tiling::Hexagonal => {
            if class_of.c.rem_euclid(3) == 1 {
                VertexId::new(0, 1, 1, 0)
            } else {
                VertexId::new(0, 0, 2, 0)
            }
        }
    }
}

/// Vertex→incident-present-cell map for a cell set.
pub fn vertex_incidence(t: Tiling, cells: &[CellId]) -> BTreeMap<VertexId, Vec<CellId>> {
    let mut map: BTreeMap<VertexId, Vec<CellId>> = BTreeMap::new();
    for c in cells {
        for v in cell_vertices(t, c) {
            map.entry(v).or_default().push(*c);
        }
    }
    map
}
