//! Exact construction, verification, and enumeration of regular Tangles:
//! smooth simple closed curves spliced from quarter, third, or sixth circle
//! arcs over the square, hexagonal, and triangular tilings.
//!
//! The kernel works entirely in ℚ[√3]; lengths are counted in links, areas
//! are exact `a + b√3 + cπ` values in units of r².

pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod json;
pub mod lattice;
pub mod ops;
pub mod polyform;
pub mod render;
pub mod tangle;

pub use error::TangleError;
pub use geometry::{AreaValue, Dir, ExactPoint, QSqrt3, Rational};
pub use lattice::{CellId, Tiling, VertexId};
pub use polyform::{BoundaryWalk, Color, DualPolyform, ValidityReport};
pub use tangle::{Curvature, Link, Tangle, TangleMetrics};
