//! Set-theoretic Yang-Baxter solutions and the single-vertex k-graphs they
//! generate.
//!
//! Elements of a set of size `N` are the integers `1..=N`. A solution is a
//! bijection `R(x, y) = (alpha_x(y), beta_y(x))` of `[N]^2` satisfying the
//! braid relation `R12 R23 R12 = R23 R12 R23`.

pub mod classify;
pub mod constructions;
pub mod error;
pub mod homology;
pub mod io;
pub mod kgraph;
pub mod semigroup;
pub mod solution;
pub mod words;

pub use error::{Error, Result};
pub use solution::{builtin, Builtin, PropertyReport, Solution};
