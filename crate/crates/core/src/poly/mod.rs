//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::{DisplayMonomial, Monomial};
pub use order::{pot_cmp, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{ring_arithmetic, Polynomial, RingOp};

#[cfg(test)]
mod tests;
