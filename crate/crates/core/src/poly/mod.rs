//! Homogeneous polynomials, truncated series, and the right action of the group ring.

pub mod hpoly;
pub mod series;
pub mod subst;

pub use hpoly::{Exps, HPoly};
pub use series::{sharp, tensor_slice, TruncSeries};
pub use subst::{act, subst_linear, subst_linear_rational};
