//! Index sets, words, and high-precision multiple zeta values.

pub mod bruteforce;
pub mod cache;
pub mod engine;
pub mod eval;
pub mod genpoly;
pub mod index;

pub use bruteforce::{mzv_bruteforce, BruteForce};
pub use cache::{CacheKey, CacheStats, MzvCache};
pub use engine::ZetaEngine;
pub use eval::{mzv, mzv_word, polylog_half};
pub use genpoly::{gen_poly_adm, gen_poly_qzv, gen_poly_target};
pub use index::{binomial, enumerate_index_sets, index_word, word_index, IndexSet, Letter, Word};
