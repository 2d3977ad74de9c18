use thiserror::Error;

/// Errors surfaced by the polyhedral kernel and the modules built on it.
#[derive(Debug, Error)]
pub enum ToricError {
    #[error("ambient rank {0} unsupported (this library caps exact polyhedral routines at rank 3)")]
    UnsupportedRank(usize),

    #[error("polyhedron is unbounded where a bounded one is required")]
    UnboundedPolyhedron,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("point {0} is not covered by any cone of the fan")]
    NotCovered(String),

    #[error("operation requires a smooth complete fan of dimension 2: {0}")]
    UnsupportedFan(String),

    #[error("divisor is not ample: {0}")]
    NotAmple(String),

    #[error("unknown library fan name `{0}`")]
    UnknownFan(String),

    #[error("weight support touched the expanded bounding shell twice; kernel bug")]
    BoundingRegion,

    #[error("relative pair did not stabilize under epsilon refinement; perturb the input")]
    ToleranceInstability,

    #[error("degenerate cycle input: incidence counts did not stabilize")]
    DegenerateInput,

    #[error("unbounded support in a lattice-sum operation")]
    UnboundedSupport,

    #[error("no critical points found from the multistart grid")]
    NoCriticalPoints,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("figure kind `{kind}` is incompatible with the given source object")]
    IncompatibleFigure { kind: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, ToricError>;
