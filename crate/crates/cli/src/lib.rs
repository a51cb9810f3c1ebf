//! Command-line front end for `legendre-core`.
//!
//! Holds the function catalog, the invariant checks behind `legendre check`,
//! and the CSV/JSON writers. [`run`] is the whole program minus process
//! exit, so it can be driven from tests.

mod app;
pub mod catalog;
pub mod checks;
pub mod output;

pub use app::run;
pub use catalog::{catalog, parse_function, CatalogEntry};

/// Exit code for a passing check or a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit code for a check that ran but failed its tolerance.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit code for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error(transparent)]
    Numeric(#[from] legendre_core::Error),
}

impl CliError {
    /// Error name printed on the error stream.
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::UnknownFunction(_) => "UnknownFunction",
            CliError::Numeric(e) => e.name(),
        }
    }
}
