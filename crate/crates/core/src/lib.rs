//! Exact analysis of isolated hypersurface singularities.
//!
//! Computes the Milnor algebra, the singularity spectrum via the Brieskorn
//! lattice, logarithmic vector fields, and decides (or excludes) the
//! logarithmic comparison theorem.

pub mod cache;
pub mod error;
pub mod gauss_manin;
pub mod linalg;
pub mod local;
pub mod logder;
pub mod poly;
pub mod quasihom;
pub mod rational;
pub mod selfcheck;
pub mod verdict;

pub use error::{Error, Result};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial};
pub use rational::Rational;
pub use verdict::{analyze, analyze_text, LctReport, Options, Verdict};
