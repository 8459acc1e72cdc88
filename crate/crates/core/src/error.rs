use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {what} = {got}, limit {limit}")]
    CapacityExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list, line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error(
        "power iteration stalled at residual {residual:.3e} after {iterations} steps (tol {tol:.1e})"
    )]
    NoConvergence {
        tol: f64,
        residual: f64,
        iterations: u64,
    },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("no graph satisfies the constraints: {0}")]
    EmptyFamily(String),

    #[error("forbidden pattern `{0}` is not 2-connected; the connected-only reduction needs 2-connected patterns")]
    NotBiconnected(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
