//! Minimal linear codes built from functions over finite fields.
//!
//! For `f: F_q^n → F_q` the code `C_f` consists of the words
//! `(u f(x) + v·x)` indexed by the nonzero vectors `x` (or by projective
//! points, for homogeneous `f`). The crate builds these codes, checks
//! minimality exhaustively in two independent ways, certifies the
//! cutting-blocking-set hypotheses that imply minimality, and measures the
//! AB weight-ratio condition.

pub mod bitset;
pub mod cli;
pub mod blocking;
pub mod codes;
pub mod error;
pub mod field;
pub mod formats;
pub mod funcspec;
pub mod geometry;
pub mod linalg;
pub mod repro;

pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use geometry::{Mode, Space};
