use thiserror::Error;

#[derive(Error, Debug)]
pub enum TangleError {
    #[error("cell set is empty and no circle vertex is designated")]
    EmptyPolyform,
    #[error("cell set is not connected")]
    Disconnected,
    #[error("cell set has a hole")]
    Holed,
    #[error("boundary splits into {components} closed walks (white cut vertex or disconnected cells)")]
    BoundarySplit { components: usize },
    #[error("arc extent at vertex {vertex} is not a positive multiple of the unit link angle (invalid coloring)")]
    BadArcExtent { vertex: String },
    #[error("polyform is invalid: {0}")]
    InvalidPolyform(String),
    #[error("tangle is not closed between links {at} and {next}")]
    NotClosed { at: usize, next: usize },
    #[error("inconsistent link sequence: {0}")]
    BadLinks(String),
    #[error("operation is not applicable: {0}")]
    NotApplicable(String),
    #[error("replay failed at step {index}: {reason}")]
    ReplayStep { index: usize, reason: String },
    #[error("deconstruction is stuck at size {size}; residual polyform retained")]
    DeconstructStuck { size: usize },
    #[error("enumeration budget exceeded (partial table returned)")]
    BudgetExceeded,
    #[error("unknown tiling: {0}")]
    UnknownTiling(String),
    #[error("vertex {0} is not on the lattice of this tiling")]
    NotAVertex(String),
    #[error("vertices are not neighbors")]
    NotNeighbors,
    #[error("JSON: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for TangleError {
    fn from(e: serde_json::Error) -> Self {
        TangleError::Json(e.to_string())
    }
}
