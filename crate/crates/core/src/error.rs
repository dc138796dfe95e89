use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The integrand returned a non-finite value at a quadrature node.
    #[error("integrand evaluated to {value} at node ({a}, {b})")]
    Evaluation { a: f64, b: f64, value: f64 },

    /// A series could not reach the requested tail tolerance below the mode ceiling.
    #[error(
        "truncation error: tail {tail:.3e} still above tolerance {tol:.3e} at mode ceiling {ceiling}"
    )]
    Truncation { tol: f64, tail: f64, ceiling: usize },

    /// An oscillatory integrand is too fast for the quadrature order in use.
    #[error(
        "resolution error: mapped frequency {frequency:.3} exceeds limit {limit:.3} of order-{order} rule; raise the quadrature order"
    )]
    Resolution { frequency: f64, limit: f64, order: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
