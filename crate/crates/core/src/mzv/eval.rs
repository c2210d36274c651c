//! Multiple zeta values by Hölder convolution at `z = 1/2`.
//!
//! `F_v(z) = Σ_m c_m z^m` is the iterated integral of the word `v` from `0`
//! to `z`. Prepending `X` divides `c_m` by `m`; prepending `Y` replaces `c_m`
//! by `(1/m) Σ_{i<m} c_i`. At `z = 1/2` every series converges like `2^-m`.
//! Splitting the path `0 → 1` at `1/2` gives
//! `ζ(w) = Σ_j F_{τ(w_j…w_1)}(1/2) · F_{w_{j+1}…w_n}(1/2)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::index::{index_word, IndexSet, Letter, Word};
use crate::bigfloat::{bits_for_digits, BigFloat, GUARD_BITS};
use crate::error::{MzvError, Result};

/// Extra terms used for the convergence check.
const CHECK_TERMS: usize = 8;
const ESCALATION_STEP: usize = 32;

pub fn base_terms(digits: u32) -> usize {
    (3.33 * digits as f64).ceil() as usize + 16
}

fn max_terms(digits: u32) -> usize {
    8 * base_terms(digits) + 256
}

/// Fixed-point coefficient vector `c_0..c_N`, scaled by `2^bits`.
struct Chain {
    coeffs: Vec<BigInt>,
}

impl Chain {
    fn empty_word(terms: usize, bits: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); terms + 1];
        coeffs[0] = BigInt::one() << bits as usize;
        Self { coeffs }
    }

    fn prepend(&mut self, l: Letter) -> Result<()> {
        if !self.coeffs[0].is_zero() && l == Letter::X {
            return Err(MzvError::InvalidWord("X applied to the empty word diverges at 0".into()));
        }
        match l {
            Letter::X => {
                for (m, c) in self.coeffs.iter_mut().enumerate().skip(1) {
                    if !c.is_zero() {
                        *c = div_round(c, m as u64);
                    }
                }
            }
            Letter::Y => {
                let mut running = BigInt::zero();
                for m in 0..self.coeffs.len() {
                    let next = &running + &self.coeffs[m];
                    self.coeffs[m] = if m == 0 { BigInt::zero() } else { div_round(&running, m as u64) };
                    running = next;
                }
            }
        }
        Ok(())
    }

    /// `(Σ_{m≤N} c_m 2^-m, Σ_{m≤N-8} c_m 2^-m)` as mantissas.
    fn at_half(&self) -> (BigInt, BigInt) {
        let n = self.coeffs.len() - 1;
        let mut short = BigInt::zero();
        let mut full = BigInt::zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = shr_round(c, m);
            if m + CHECK_TERMS <= n {
                short += &t;
            }
            full += t;
        }
        (full, short)
    }
}

fn div_round(x: &BigInt, m: u64) -> BigInt {
    let twice = x * 2u32 + if x.is_negative() { -(m as i64) } else { m as i64 };
    twice / (2 * m)
}

fn shr_round(x: &BigInt, k: usize) -> BigInt {
    if k == 0 {
        return x.clone();
    }
    (x + (BigInt::one() << (k - 1))) >> k
}

fn check_letters(v: &Word) -> Result<()> {
    if !v.is_empty() && !v.ends_in_y() {
        return Err(MzvError::InvalidWord(format!("{v}: last letter must be Y")));
    }
    Ok(())
}

/// About `10^-digits` in mantissa units: the guard bits minus a small margin.
fn tolerance() -> BigInt {
    BigInt::one() << (GUARD_BITS as usize - 4)
}

/// Iterated integral of `v` over `[0, 1/2]`.
pub fn polylog_half(v: &Word, digits: u32) -> Result<BigFloat> {
    check_letters(v)?;
    let bits = bits_for_digits(digits);
    let mut terms = base_terms(digits);
    loop {
        let mut chain = Chain::empty_word(terms + CHECK_TERMS, bits);
        for &l in v.letters().iter().rev() {
            chain.prepend(l)?;
        }
        let (full, short) = chain.at_half();
        if (&full - &short).abs() <= tolerance() {
            return Ok(BigFloat::from_parts(full, bits));
        }
        terms += ESCALATION_STEP;
        if terms > max_terms(digits) {
            return Err(MzvError::PrecisionCap { digits, terms });
        }
    }
}

/// `ζ(w)` for an admissible word (starts with `X`, ends with `Y`).
pub fn mzv_word(w: &Word, digits: u32) -> Result<BigFloat> {
    if !w.is_admissible() {
        return Err(MzvError::InvalidWord(format!("{w} is not admissible")));
    }
    let bits = bits_for_digits(digits);
    let n = w.len();
    let mut terms = base_terms(digits);
    loop {
        let len = terms + CHECK_TERMS;
        // tails[j] = F_{w_{j+1}…w_n}(1/2)
        let mut tails = vec![(BigInt::zero(), BigInt::zero()); n + 1];
        let mut chain = Chain::empty_word(len, bits);
        tails[n] = chain.at_half();
        for j in (0..n).rev() {
            chain.prepend(w.letters()[j])?;
            tails[j] = chain.at_half();
        }
        let mut chain = Chain::empty_word(len, bits);
        let one = BigInt::one() << bits as usize;
        let (mut full, mut short) = (&one * &tails[0].0, &one * &tails[0].1);
        for j in 1..=n {
            chain.prepend(w.letters()[j - 1].swap())?;
            let (hf, hs) = chain.at_half();
            full += &hf * &tails[j].0;
            short += &hs * &tails[j].1;
        }
        let full = shr_round(&full, bits as usize);
        let short = shr_round(&short, bits as usize);
        if (&full - &short).abs() <= tolerance() {
            return Ok(BigFloat::from_parts(full, bits));
        }
        terms += ESCALATION_STEP;
        if terms > max_terms(digits) {
            return Err(MzvError::PrecisionCap { digits, terms });
        }
    }
}

/// `ζ(L)` for an admissible index set, without caching.
pub fn mzv(l: &IndexSet, digits: u32) -> Result<BigFloat> {
    if !l.is_admissible() {
        return Err(MzvError::NotAdmissible(l.to_string()));
    }
    mzv_word(&index_word(l), digits)
}
