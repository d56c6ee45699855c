//! Exact polynomial and rational-function arithmetic.

pub mod json;
pub mod matrix;
pub mod poly;
pub mod uni;

pub use matrix::PolyMatrix;
pub use poly::{Monomial, MultiPoly};
pub use uni::{rational_roots, segment_form, PoleReport, RatFn, UniPoly};
