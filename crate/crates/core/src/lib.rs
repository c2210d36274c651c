//! Group-ring actions on generating functions of multiple zeta values.
//!
//! The crate has four layers:
//!
//! * [`exact`]: integer matrices, permutations, the group ring over the
//!   rationals and its action on integer row vectors.
//! * [`poly`]: homogeneous polynomials and truncated power series with the
//!   right action `(p|M)(x) = p(x M^-1)`, generic over the [`Scalar`] type.
//! * [`mzv`] and [`shuffle`]: high-precision evaluation of multiple zeta
//!   values, shuffle regularization, and the generating-polynomial slices.
//! * [`verify`]: exact and numeric check suites with structured reports.

pub mod bigfloat;
pub mod error;
pub mod exact;
pub mod mzv;
pub mod poly;
pub mod scalar;
pub mod shuffle;
pub mod verify;

pub use bigfloat::BigFloat;
pub use error::{MzvError, Result};
pub use exact::{GroupRingElem, IntMatrix, Permutation, VecCombo};

pub use poly::{HPoly, TruncSeries};
pub use mzv::{IndexSet, Letter, Word, ZetaEngine};
pub use verify::{run_all, Config, Report, Suite};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Polynomials with exact rational coefficients.
pub type ExactPoly = HPoly<BigRational>;
/// Polynomials with arbitrary-precision real coefficients.
pub type RealPoly = HPoly<BigFloat>;
/// Polynomials with machine double coefficients.
pub type F64Poly = HPoly<f64>;
/// Polynomials with machine single coefficients.
pub type F32Poly = HPoly<f32>;

pub type ExactSeries = TruncSeries<BigRational>;
pub type RealSeries = TruncSeries<BigFloat>;
pub type F64Series = TruncSeries<f64>;
