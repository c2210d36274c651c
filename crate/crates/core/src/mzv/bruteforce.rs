//! Direct nested summation, an oracle independent of the iterated-integral path.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::index::IndexSet;
use crate::bigfloat::{bits_for_digits, BigFloat};
use crate::error::{MzvError, Result};

const WORK_DIGITS: u32 = 30;

#[derive(Clone, Debug)]
pub struct BruteForce {
    /// `Σ_{m_1 ≤ terms}` of the nested series.
    pub partial_sum: BigFloat,
    /// Upper bound on `ζ(L) − partial_sum`.
    pub partial_bound: f64,
    /// Partial sum plus the midpoint of the tail bracket.
    pub value: BigFloat,
    /// Bound on `|ζ(L) − value|`.
    pub error_bound: f64,
}

/// Truncate the outer sum at `m_1 ≤ terms` and bracket the tail.
///
/// With `S(m) = Σ_{m > m_2 > ⋯}` the inner sum, the tail
/// `Σ_{m > N} S(m-1) m^{-l_1}` lies between `S(N) Σ_{m>N} m^{-l_1}` and
/// `C Σ_{m>N} (1 + ln m)^r m^{-l_1}`, where `r` counts inner parts equal to
/// one and `C = Π_{l_i ≥ 2} (1 + 1/(l_i − 1))`.
pub fn mzv_bruteforce(l: &IndexSet, terms: u64) -> Result<BruteForce> {
    if !l.is_admissible() {
        return Err(MzvError::NotAdmissible(l.to_string()));
    }
    if terms == 0 {
        return Err(MzvError::OutOfRange("terms must be positive".into()));
    }
    let bits = bits_for_digits(WORK_DIGITS);
    let parts = l.parts();
    let k = parts.len();
    // level[i] = Σ over m_i ≤ m of m_i^{-l_i} · level[i+1](m_i − 1)
    let mut level = vec![BigFloat::zero_with_bits(bits); k];
    for m in 1..=terms {
        let mb = BigInt::from(m);
        for i in 0..k {
            let inner = if i + 1 < k { level[i + 1].clone() } else { BigFloat::one_with_bits(bits) };
            if inner.is_zero() {
                continue;
            }
            let pw: BigInt = Pow::pow(&mb, parts[i]);
            let term = BigFloat::from_parts(inner.mantissa() / pw, bits);
            level[i] += &term;
        }
    }
    let partial_sum = level[0].clone();
    let inner_n = if k > 1 { level[1].to_f64() } else { 1.0 };

    let l1 = parts[0] as f64;
    let a = l1 - 1.0;
    let n = terms as f64;
    let lower = inner_n * (n + 1.0).powf(-a) / a;
    let r = parts[1..].iter().filter(|&&x| x == 1).count() as i32;
    let c: f64 = parts[1..].iter().filter(|&&x| x >= 2).map(|&x| 1.0 + 1.0 / (x as f64 - 1.0)).product();
    let upper = c * log_tail_integral(n, l1, r) + c * log_tail_sup(n, l1, r);
    let rounding = (terms as f64) * (k as f64) * 2f64.powi(-(bits as i32) + 2);

    let mid = (lower + upper) / 2.0;
    let value = &partial_sum + &f64_to_bigfloat(mid, bits);
    Ok(BruteForce {
        partial_sum,
        partial_bound: upper + rounding,
        value,
        error_bound: (upper - lower) / 2.0 + rounding + mid * 1e-15,
    })
}

/// `∫_N^∞ (1 + ln x)^r x^{-s} dx = N^{-a} Σ_{i≤r} r!/(r−i)! (1 + ln N)^{r−i} / a^{i+1}`, `a = s − 1`.
fn log_tail_integral(n: f64, s: f64, r: i32) -> f64 {
    let a = s - 1.0;
    let u = 1.0 + n.ln();
    let mut falling = 1.0;
    let mut total = 0.0;
    for i in 0..=r {
        total += falling * u.powi(r - i) / a.powi(i + 1);
        falling *= (r - i) as f64;
    }
    n.powf(-a) * total
}

/// Correction for the integral comparison when the summand still increases past `N`.
fn log_tail_sup(n: f64, s: f64, r: i32) -> f64 {
    if r == 0 || 1.0 + n.ln() >= r as f64 / s {
        return 0.0;
    }
    let x = ((r as f64 / s) - 1.0).exp();
    (1.0 + x.ln()).powi(r) * x.powf(-s)
}

/// Exact conversion of a finite, non-negative double.
fn f64_to_bigfloat(x: f64, bits: u32) -> BigFloat {
    if x == 0.0 {
        return BigFloat::zero_with_bits(bits);
    }
    let raw = x.to_bits();
    let exp = ((raw >> 52) & 0x7ff) as i32;
    let frac = raw & ((1u64 << 52) - 1);
    // x = mant * 2^e
    let (mant, e) = if exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp - 1075) };
    let mant = BigInt::from(mant);
    if e >= 0 {
        BigFloat::from_bigint(&(mant << e as usize)).with_bits(bits)
    } else {
        BigFloat::from_ratio(&mant, &(BigInt::one() << (-e) as usize), bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzv::eval::mzv;

    #[test]
    fn agrees_with_holder_within_bound() {
        for s in ["2", "3,1", "2,1,1", "3", "2,2,1"] {
            let l: IndexSet = s.parse().unwrap();
            let bf = mzv_bruteforce(&l, 4000).unwrap();
            let exact = mzv(&l, 30).unwrap();
            let err = (&exact - &bf.value).abs().to_f64();
            assert!(err <= bf.error_bound, "{s}: err {err} > bound {}", bf.error_bound);
            let under = (&exact - &bf.partial_sum).to_f64();
            assert!(under >= 0.0 && under <= bf.partial_bound, "{s}: tail {under}");
        }
    }

    #[test]
    fn first_term_only() {
        for l in 2..=6 {
            let idx = IndexSet::new(vec![l]).unwrap();
            let bf = mzv_bruteforce(&idx, 1).unwrap();
            assert_eq!(bf.partial_sum.to_f64(), 1.0);
            let z = mzv(&idx, 30).unwrap().to_f64();
            assert!(bf.partial_bound >= z - 1.0);
        }
    }

    #[test]
    fn tiny_tails_survive_conversion() {
        for x in [1e-30, 3.5e-19, 0.25, 7.0] {
            let b = f64_to_bigfloat(x, 200);
            assert!((b.to_f64() - x).abs() <= x * 1e-15, "{x}");
        }
        for s in ["8", "7,1", "6,2"] {
            let l: IndexSet = s.parse().unwrap();
            let bf = mzv_bruteforce(&l, 4000).unwrap();
            let err = (&mzv(&l, 30).unwrap() - &bf.value).abs().to_f64();
            assert!(err <= bf.error_bound, "{s}: err {err} > bound {}", bf.error_bound);
        }
    }

    #[test]
    fn depth_one_bound_is_tight() {
        let bf = mzv_bruteforce(&"2".parse().unwrap(), 4000).unwrap();
        assert!(bf.error_bound < 1e-7);
    }
}
