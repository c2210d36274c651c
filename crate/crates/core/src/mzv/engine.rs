use std::sync::Arc;

use super::cache::{CacheKey, MzvCache};
use super::eval;
use super::index::{index_word, IndexSet, Word};
use crate::bigfloat::BigFloat;
use crate::error::{MzvError, Result};
use crate::shuffle::{combo_value, Regularizer, WordCombo};

/// Cached evaluation of plain and regularized values.
///
/// Shared by all checks of a run; every method is safe to call concurrently.
#[derive(Default)]
pub struct ZetaEngine {
    cache: MzvCache,
    reg: Regularizer,
}

impl ZetaEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache(cache: MzvCache) -> Self {
        Self { cache, reg: Regularizer::new() }
    }

    pub fn cache(&self) -> &MzvCache {
        &self.cache
    }

    pub fn regularizer(&self) -> &Regularizer {
        &self.reg
    }

    pub fn mzv(&self, l: &IndexSet, digits: u32) -> Result<BigFloat> {
        if !l.is_admissible() {
            return Err(MzvError::NotAdmissible(l.to_string()));
        }
        self.cache.get_or_compute(CacheKey::plain(l, digits), || eval::mzv(l, digits))
    }

    /// `ζ(w)` for an admissible word.
    pub fn mzv_word(&self, w: &Word, digits: u32) -> Result<BigFloat> {
        self.mzv(&super::index::word_index(w)?, digits)
    }

    /// Single zeta value `ζ(l)`, `l ≥ 2`.
    pub fn zeta(&self, l: u32, digits: u32) -> Result<BigFloat> {
        self.mzv(&IndexSet::new(vec![l])?, digits)
    }

    pub fn regularize(&self, w: &Word) -> Result<Arc<WordCombo>> {
        self.reg.regularize(w)
    }

    /// `ζ*(L)` at `T = 0`; equals `ζ(L)` for admissible `L`.
    pub fn reg_mzv(&self, l: &IndexSet, digits: u32) -> Result<BigFloat> {
        if l.is_admissible() {
            return self.mzv(l, digits);
        }
        self.cache.get_or_compute(CacheKey::reg(l, digits), || {
            let combo = self.reg.regularize(&index_word(l))?;
            combo_value(self, &combo, digits)
        })
    }
}
