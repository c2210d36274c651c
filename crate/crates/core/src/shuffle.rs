//! Shuffle products of words and shuffle regularization with `T = 0`.
//!
//! For `w = Y^{a+1} X v`, the shuffle `Y ш (Y^a X v)` contains `w` with
//! multiplicity `a+1` plus the words `Y^a X v'` where `v'` inserts one `Y`
//! into `v`. Since `reg(Y) = 0`, the shuffle regularizes to zero, which
//! expresses `reg(w)` through words with one leading `Y` fewer.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bigfloat::BigFloat;
use crate::error::{MzvError, Result};
use crate::mzv::{index_word, word_index, IndexSet, Letter, Word, ZetaEngine};
use crate::poly::HPoly;

/// Rational combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordCombo {
    terms: BTreeMap<Word, BigRational>,
}

impl WordCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(w: Word) -> Self {
        let mut c = Self::zero();
        c.add_term(w, BigRational::one());
        c
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &BigRational) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    fn prepend_all(&self, l: Letter) -> Self {
        Self { terms: self.terms.iter().map(|(w, c)| (w.prepend(l), c.clone())).collect() }
    }
}

impl fmt::Debug for WordCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `u ш v`: every interleaving that keeps the internal orders.
pub fn shuffle(u: &Word, v: &Word) -> WordCombo {
    let (a, b) = (u.letters(), v.letters());
    let (n, m) = (a.len(), b.len());
    // row[j] holds the shuffle of suffixes a[i..] and b[j..] for the current i.
    let mut next: Vec<WordCombo> = (0..=m).map(|j| WordCombo::single(Word::new(b[j..].to_vec()))).collect();
    for i in (0..n).rev() {
        let mut row = vec![WordCombo::zero(); m + 1];
        row[m] = WordCombo::single(Word::new(a[i..].to_vec()));
        for j in (0..m).rev() {
            let mut c = next[j].prepend_all(a[i]);
            c.add_scaled(&row[j + 1].prepend_all(b[j]), &BigRational::one());
            row[j] = c;
        }
        next = row;
    }
    next.swap_remove(0)
}

/// Memoized `T = 0` regularization, safe for concurrent use.
#[derive(Default)]
pub struct Regularizer {
    memo: RwLock<HashMap<Word, Arc<WordCombo>>>,
}

impl Regularizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn regularize(&self, w: &Word) -> Result<Arc<WordCombo>> {
        if !w.ends_in_y() {
            return Err(MzvError::InvalidWord(format!("{w} does not end in Y")));
        }
        if let Some(r) = self.memo.read().expect("memo lock").get(w) {
            return Ok(r.clone());
        }
        let r = Arc::new(self.compute(w)?);
        self.memo.write().expect("memo lock").entry(w.clone()).or_insert_with(|| r.clone());
        Ok(r)
    }

    fn compute(&self, w: &Word) -> Result<WordCombo> {
        let letters = w.letters();
        if letters[0] == Letter::X {
            return Ok(WordCombo::single(w.clone()));
        }
        let Some(x_pos) = letters.iter().position(|&l| l == Letter::X) else {
            return Ok(WordCombo::zero());
        };
        // w = Y^{a+1} X v
        let a = x_pos - 1;
        let v = &letters[x_pos + 1..];
        let mut out = WordCombo::zero();
        let scale = -BigRational::new(BigInt::one(), BigInt::from(a + 1));
        for p in 0..=v.len() {
            let mut word = vec![Letter::Y; a];
            word.push(Letter::X);
            word.extend_from_slice(&v[..p]);
            word.push(Letter::Y);
            word.extend_from_slice(&v[p..]);
            out.add_scaled(&*self.regularize(&Word::new(word))?, &scale);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Regularize a word ending in `Y` to a combination of admissible words.
pub fn regularize0(w: &Word) -> Result<WordCombo> {
    Regularizer::new().regularize(w).map(|r| (*r).clone())
}

/// `ζ*(L)` at `T = 0` without a shared cache.
pub fn reg_mzv(l: &IndexSet, digits: u32) -> Result<BigFloat> {
    ZetaEngine::new().reg_mzv(l, digits)
}

/// Weight-`l` slice of `Z*_n`: `Σ_{depth n, weight l} ζ*(L) x^{L−1}` (all index sets).
pub fn gen_poly_reg(engine: &ZetaEngine, n: usize, l: u32, digits: u32) -> Result<HPoly<BigFloat>> {
    if !(1..=4).contains(&n) || (l as usize) < n {
        return Err(MzvError::OutOfRange(format!("regularized slice needs 1 <= n <= 4 and l >= n (n={n}, l={l})")));
    }
    let sets = crate::mzv::enumerate_index_sets(n, l, false);
    let values: Vec<BigFloat> = sets.par_iter().map(|s| engine.reg_mzv(s, digits)).collect::<Result<_>>()?;
    HPoly::from_terms(n, l - n as u32, sets.iter().map(|s| s.exponents()).zip(values))
}

/// Numeric value of a regularized word combination.
pub fn combo_value(engine: &ZetaEngine, c: &WordCombo, digits: u32) -> Result<BigFloat> {
    let mut acc = BigFloat::zero_with_bits(crate::bigfloat::bits_for_digits(digits));
    for (w, q) in c.terms() {
        let v = engine.mzv(&word_index(w)?, digits)?;
        acc += &v.mul_ratio(q);
    }
    Ok(acc)
}

/// `regularize0(index_word(L))`.
pub fn regularize_index(l: &IndexSet) -> Result<WordCombo> {
    regularize0(&index_word(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_examples() {
        let xy = shuffle(&w("X"), &w("Y"));
        assert_eq!(xy.coeff(&w("XY")), int(1));
        assert_eq!(xy.coeff(&w("YX")), int(1));
        let s = shuffle(&w("Y"), &w("XY"));
        assert_eq!(s.coeff(&w("YXY")), int(1));
        assert_eq!(s.coeff(&w("XYY")), int(2));
        assert_eq!(s.len(), 2);
        assert_eq!(shuffle(&Word::empty(), &w("XYY")), WordCombo::single(w("XYY")));
        let big = shuffle(&w("XYXY"), &w("XXYY"));
        assert_eq!(big.mass(), int(70));
    }

    #[test]
    fn regularization_examples() {
        assert_eq!(regularize0(&w("XY")).unwrap(), WordCombo::single(w("XY")));
        assert!(regularize0(&w("Y")).unwrap().is_zero());
        assert!(regularize0(&w("YYY")).unwrap().is_zero());
        let r = regularize0(&w("YXY")).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.coeff(&w("XYY")), int(-2));
        assert!(regularize0(&w("YX")).is_err());
    }

    #[test]
    fn regularization_preserves_weight_and_depth() {
        for l in crate::mzv::enumerate_index_sets(3, 7, false) {
            let word = index_word(&l);
            let r = regularize0(&word).unwrap();
            for (out, _) in r.terms() {
                assert!(out.is_admissible());
                assert_eq!(out.len(), word.len());
                assert_eq!(out.count_y(), word.count_y());
                assert_eq!(regularize0(out).unwrap(), WordCombo::single(out.clone()));
            }
        }
    }

    #[test]
    fn regularized_values() {
        let e = ZetaEngine::new();
        assert!(e.reg_mzv(&"1".parse().unwrap(), 30).unwrap().is_zero());
        let z3 = e.mzv(&"3".parse().unwrap(), 30).unwrap();
        let r12 = e.reg_mzv(&"1,2".parse().unwrap(), 30).unwrap();
        assert!((&r12 + &z3.mul_u64(2)).abs().to_f64() < 1e-28);
        assert!(r12.to_decimal_string(20).starts_with("-2.404113806319188"));
        let r21 = e.reg_mzv(&"2,1".parse().unwrap(), 30).unwrap();
        assert!((&r21 - &z3).abs().to_f64() < 1e-28);
    }

    #[test]
    fn regularized_slices() {
        let e = ZetaEngine::new();
        assert!(gen_poly_reg(&e, 1, 1, 30).unwrap().is_zero());
        let p = gen_poly_reg(&e, 1, 4, 30).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p.coeff(&[3]).to_f64() - 1.0823232337111382).abs() < 1e-15);
        let q = gen_poly_reg(&e, 4, 5, 30).unwrap();
        assert_eq!(q.len(), 4);
        let z2111 = e.mzv(&"2,1,1,1".parse().unwrap(), 30).unwrap();
        assert_eq!(q.coeff(&[1, 0, 0, 0]), z2111);
    }
}
