use thiserror::Error;

pub type Result<T> = std::result::Result<T, FinslerError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FinslerError {
    /// A parameter fell outside its admissible range.
    #[error("{name} = {value} violates {bound}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        bound: &'static str,
    },

    #[error("dimension {dim} is too small (need at least {min})")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is undefined at the zero vector")]
    ZeroVector(&'static str),

    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    /// Input sits on the pole of a rational map, e.g. `1 + g w = 0`.
    #[error("{map} has a pole at {pole}")]
    Pole { map: &'static str, pole: f64 },

    /// Input lies on one of the two null cones of the relativistic metric.
    #[error("point lies on the cone where {factor} vanishes")]
    OnCone { factor: &'static str },

    #[error("point is not on the unit surface (level {level})")]
    NotOnSurface { level: f64 },

    /// The profile has a vertical tangent here, so `dT/d|R|` does not exist.
    #[error("profile has a vertical tangent at T = {t}, |R| = {rho}")]
    VerticalTangent { t: f64, rho: f64 },

    #[error("matrix is not symmetric (max deviation {deviation:e})")]
    Asymmetric { deviation: f64 },

    #[error("matrix is singular")]
    Singular,

    #[error("non-finite function value at probe point {point:?}")]
    NonFiniteEvaluation { point: Vec<f64> },

    #[error("no convergence after {iterations} iterations (last iterate {last}, residual {residual:e})")]
    Convergence {
        iterations: usize,
        last: f64,
        residual: f64,
    },
}
