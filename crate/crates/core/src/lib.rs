//! Numerical Legendre transform of smooth, strictly convex functions of one
//! variable.
//!
//! A [`ConvexModel`] wraps a function `F` on a compact [`Interval`] together
//! with its derivative `f = F'`, validated to be strictly increasing. The
//! conjugate is computed by inverting `f`:
//!
//! ```text
//! G(y) = x*y - F(x)   where f(x) = y
//! ```
//!
//! The [`transform`] module applies that map (once or twice), and checks the
//! area picture in which the rectangle `x*y` under a point of the graph of `f`
//! splits into `F~ = ∫f` and `G~ = ∫g`. The [`oracle`] module is a brute-force
//! discrete conjugate over sampled values that shares no code with the
//! inversion path.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod diff;
mod error;
mod interval;
mod model;
pub mod oracle;
pub mod quadrature;
mod report;
mod roots;
pub mod transform;

pub use diff::{fd_step, finite_difference};
pub use error::Error;
pub use interval::Interval;
pub use model::{ConvexModel, DerivativeKind, RealFn, VALIDATION_SAMPLES};
pub use quadrature::{integrate, DEFAULT_TOL, MAX_DEPTH};
pub use report::CheckReport;
pub use roots::{solve_increasing, ROOT_RTOL};

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;
