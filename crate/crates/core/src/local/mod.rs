//! Local algebra at the origin: standard bases, Milnor data, syzygies.

pub mod milnor;
pub mod mora;
mod sorted;
pub mod syzygy;
pub mod truncated;

pub use milnor::{is_quasihomogeneous, is_quasihomogeneous_with, milnor_data, MilnorData};
pub use mora::{local_membership, mora_division, standard_basis, DivisionResult, StandardBasis};
pub use syzygy::{syzygies, SyzygyBasis};
pub use truncated::TruncatedReducer;

#[cfg(test)]
mod tests;
