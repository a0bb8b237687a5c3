//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration (bad resolution, unknown key, out-of-range
    /// tolerance override, ...). Maps to exit code 2 in the CLI.
    #[error("configuration error: {0}")]
    Config(String),

    /// An integrand callback misbehaved (non-finite value, asymmetric second
    /// derivatives, failed finite-difference self-check). Carries the probe
    /// location when one is known.
    #[error("integrand error: {message}{}", location_suffix(.location))]
    Integrand {
        message: String,
        location: Option<Vec<f64>>,
    },

    /// The leading Hessian is singular at the base state, so the eigenvalue
    /// pencil is not defined; the operator-family zero-group analysis still
    /// applies.
    #[error("degenerate base state: {0}")]
    Degenerate(String),

    /// A precondition of an operation failed (base state not a common
    /// critical point, no kernel at the requested parameter value, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Corrector Newton iteration failed to converge.
    #[error("corrector failure: {0}")]
    Corrector(String),

    /// Eigenvalue path tracking could not disambiguate paths.
    #[error("path-tracking failure: {0}")]
    Tracking(String),

    /// A lifted reduced critical point violated the full-space residual
    /// bound (reduction ball too large for the requested tolerance).
    #[error("lift correspondence violated: {0}")]
    Lift(String),

    /// Mode precondition of an index-formula classification failed.
    #[error("classification error: {0}")]
    Classification(String),

    /// An internal invariant was violated (singular gram factorization,
    /// eigensolver breakdown, ...).
    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

fn location_suffix(loc: &Option<Vec<f64>>) -> String {
    match loc {
        Some(x) => format!(
            " at x = ({})",
            x.iter()
                .map(|v| format!("{v:.6}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        None => String::new(),
    }
}

impl Error {
    pub fn integrand(message: impl Into<String>, location: &[f64]) -> Self {
        Error::Integrand {
            message: message.into(),
            location: Some(location.to_vec()),
        }
    }

    /// CLI exit code for this error: 2 for configuration problems, 1 for
    /// everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            _ => 1,
        }
    }
}
