use thiserror::Error;

/// Error type shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter or run configuration is out of range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An operation received inputs violating its preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested value is not defined at this input (e.g. a logarithmic
    /// divergence at the boundary of the domain).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature ran out of subdivision depth.
    #[error("quadrature did not converge: requested {requested:e}, achieved {achieved:e}")]
    QuadratureNoConverge { requested: f64, achieved: f64 },

    /// A numerical procedure broke down (singular solve, degenerate fit, ...).
    #[error("numerical failure: {0}")]
    Numeric(String),

    /// A sampled field is too coarse for the log transform.
    #[error("under-resolved field: {0}")]
    UnderResolved(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
