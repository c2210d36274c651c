//! Exact integer matrices, permutations and the rational group ring.

pub mod constants;
pub mod group_ring;
pub mod matrix;
pub mod perm;
pub mod vectors;

pub use constants::{constants, Constants};
pub use group_ring::{group_sum, shuffle_element, GroupRingElem};
pub use matrix::IntMatrix;
pub use perm::Permutation;
pub use vectors::{vmp, IntVec, VecCombo};
