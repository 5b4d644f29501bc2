//! Exact linear algebra: dense rational matrices, univariate polynomials
//! and truncated series.

pub mod matrix;
pub mod series;
pub mod upoly;

pub use matrix::{in_span, intersect, span_basis, Matrix};
pub use series::{Ser, SerMatrix};
pub use upoly::UPoly;
