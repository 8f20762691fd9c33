//! Exact growth bounds for linear recurrence sequences over `Q(x)`, with a
//! number field counterpart over `Q`.
//!
//! Sequences are power sums `G_n = sum_j a_j(n) alpha_j^n` with rational
//! function data. The library computes valuations and heights, the
//! constants of the two-sided valuation bound, degree growth, independence
//! horizons and instances of the subspace inequality, all in exact
//! arithmetic.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod numfield;
pub mod places;
pub mod recurrence;

pub use error::{Error, Result};
