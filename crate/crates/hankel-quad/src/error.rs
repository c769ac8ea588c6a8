use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Expression text could not be parsed; `pos` is a byte offset into the source.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An expression could not be evaluated at a point (log of a non-positive
    /// value, fractional power of a negative value, division by zero, ...).
    #[error("evaluation error at x = {x}: {msg}")]
    Eval { x: f64, msg: String },

    /// More than one critical point was found; the caller must split the
    /// interval so each piece contains at most one.
    #[error("subdivide required: {} critical points in [{a}, {b}] at {points:?}", points.len())]
    SubdivideRequired { a: f64, b: f64, points: Vec<f64> },

    /// A method was invoked on an oscillator whose classification it does not handle.
    #[error("wrong method for this oscillator: {0}")]
    WrongMethod(String),

    /// Stationary point with g(zeta) != 0. Only the g(zeta) = 0 kind is supported.
    #[error("unsupported stationary point at {zeta}: g({zeta}) = {g_value} != 0")]
    UnsupportedStationaryKind { zeta: f64, g_value: f64 },

    /// Jet division with a vanishing denominator constant term. The caller must
    /// cancel the common zero first (see `Jet::shift_div_power`).
    #[error("singular jet division: denominator constant term is zero")]
    SingularJetDivision,

    /// A cancellation that should be exact left coefficients that are not
    /// numerically negligible; usually a sign of a misclassified critical point.
    #[error("non-removable singularity: {0}")]
    NonRemovable(String),

    /// Interpolation system too close to singular to trust.
    #[error("interpolation system ill-conditioned (condition estimate {cond:.3e})")]
    IllConditioned { cond: f64 },

    /// Reference integrator refused: resolving every oscillation would cost too much.
    #[error("oracle cost guard exceeded: omega * max|g| = {0:.3e} > 1e7")]
    CostGuard(f64),

    /// Requested accuracy cannot be met; carries the best achievable bound.
    #[error("tolerance {tol:.3e} unreachable; best achievable {best:.3e}")]
    ToleranceUnreachable { tol: f64, best: f64 },

    /// Catch-all for numerical breakdown with context.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
