//! Fixed-point arbitrary-precision reals.
//!
//! A [`BigFloat`] is a big-integer mantissa scaled by `2^-bits`. Every value
//! carries its own precision; binary operations work at the larger of the two
//! precisions. A precision of zero bits marks an exact integer, which is what
//! `Zero`, `One` and the integer constructors produce.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

/// Extra binary digits carried beyond the requested decimal precision.
pub const GUARD_BITS: u32 = 32;

/// Precision used when a division involves only exact integers.
pub const DEFAULT_DIGITS: u32 = 50;

/// Number of mantissa bits needed for `digits` decimal digits, guard bits included.
pub fn bits_for_digits(digits: u32) -> u32 {
    // ceil(digits * log2(10))
    ((digits as u64 * 33_220 + 9_999) / 10_000) as u32 + GUARD_BITS
}

#[derive(Clone)]
pub struct BigFloat {
    mant: BigInt,
    bits: u32,
}

impl BigFloat {
    pub fn from_parts(mant: BigInt, bits: u32) -> Self {
        Self { mant, bits }
    }

    pub fn from_i64(n: i64) -> Self {
        Self { mant: BigInt::from(n), bits: 0 }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self { mant: n.clone(), bits: 0 }
    }

    /// `num / den` rounded to `bits` fractional bits.
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        assert!(!den.is_zero(), "BigFloat::from_ratio: zero denominator");
        let scaled = num << bits as usize;
        Self { mant: div_round(&scaled, den), bits }
    }

    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        Self::from_ratio(q.numer(), q.denom(), bits)
    }

    pub fn zero_with_bits(bits: u32) -> Self {
        Self { mant: BigInt::zero(), bits }
    }

    pub fn one_with_bits(bits: u32) -> Self {
        Self { mant: BigInt::one() << bits as usize, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Decimal digits represented, not counting guard bits.
    pub fn digits(&self) -> u32 {
        (self.bits.saturating_sub(GUARD_BITS) as u64 * 10_000 / 33_220) as u32
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    /// Rescale to exactly `bits` fractional bits (rounding if precision drops).
    pub fn with_bits(&self, bits: u32) -> Self {
        match bits.cmp(&self.bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self { mant: &self.mant << (bits - self.bits) as usize, bits },
            Ordering::Less => Self { mant: shr_round(&self.mant, self.bits - bits), bits },
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), bits: self.bits }
    }

    /// Divide by a positive machine integer at the current precision.
    pub fn div_u64(&self, n: u64) -> Self {
        let d = BigInt::from(n);
        Self { mant: div_round(&self.mant, &d), bits: self.bits }
    }

    pub fn mul_u64(&self, n: u64) -> Self {
        Self { mant: &self.mant * n, bits: self.bits }
    }

    /// Multiply by `2^-k` at the current precision.
    pub fn shr(&self, k: u32) -> Self {
        Self { mant: shr_round(&self.mant, k), bits: self.bits }
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        Self { mant: &self.mant * n, bits: self.bits }
    }

    /// Multiply by an exact rational. Exact integers are first promoted to
    /// [`DEFAULT_DIGITS`] when the denominator is not one.
    pub fn mul_ratio(&self, q: &BigRational) -> Self {
        if q.denom().is_one() {
            return self.mul_int(q.numer());
        }
        let bits = if self.bits == 0 { bits_for_digits(DEFAULT_DIGITS) } else { self.bits };
        let base = self.with_bits(bits);
        Self { mant: div_round(&(&base.mant * q.numer()), q.denom()), bits }
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let len = self.mant.bits();
        let shift = len.saturating_sub(64);
        let top = (&self.mant >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let exp = shift as i64 - self.bits as i64;
        top * 2f64.powi(exp.clamp(-1100, 1100) as i32)
    }

    /// Decimal expansion with exactly `frac_digits` digits after the point.
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(frac_digits);
        let scaled = shr_round(&(self.mant.abs() * &scale), self.bits);
        let (int_part, frac_part) = scaled.div_rem(&scale);
        let sign = if self.mant.is_negative() && !scaled.is_zero() { "-" } else { "" };
        if frac_digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = frac_digits as usize)
    }

    /// Parse a decimal literal (`-12.5`, `3`, `1.25e-3`) to `bits` fractional bits.
    pub fn parse_with_bits(s: &str, bits: u32) -> Option<Self> {
        let s = s.trim();
        let (body, exp) = match s.find(['e', 'E']) {
            Some(pos) => (&s[..pos], s[pos + 1..].parse::<i64>().ok()?),
            None => (s, 0),
        };
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_str, frac_str) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_str.is_empty() && frac_str.is_empty() {
            return None;
        }
        if !int_str.bytes().chain(frac_str.bytes()).all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("0{int_str}{frac_str}").parse().ok()?;
        let scale10 = frac_str.len() as i64 - exp;
        let mut num = digits << bits as usize;
        let mut den = BigInt::one();
        if scale10 >= 0 {
            den = BigInt::from(10u32).pow(scale10 as u32);
        } else {
            num *= BigInt::from(10u32).pow((-scale10) as u32);
        }
        let mut mant = div_round(&num, &den);
        if neg {
            mant = -mant;
        }
        Some(Self { mant, bits })
    }

    /// pi by Machin's formula, independent of the zeta machinery.
    pub fn pi(bits: u32) -> Self {
        let work = bits + 16;
        let a = atan_inv(5, work).mul_u64(16);
        let b = atan_inv(239, work).mul_u64(4);
        (&a - &b).with_bits(bits)
    }

    /// ln 2 = 2 atanh(1/3), independent of the polylogarithm recurrences.
    pub fn ln2(bits: u32) -> Self {
        let work = bits + 16;
        let one = BigInt::one() << work as usize;
        let mut sum = BigInt::zero();
        let mut pow3 = BigInt::from(3u32);
        let mut k = 0u64;
        loop {
            let term = &one / (&pow3 * (2 * k + 1));
            if term.is_zero() {
                break;
            }
            sum += term;
            pow3 *= 9u32;
            k += 1;
        }
        Self { mant: sum * 2u32, bits: work }.with_bits(bits)
    }

    fn align(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let bits = self.bits.max(other.bits);
        let a = &self.mant << (bits - self.bits) as usize;
        let b = &other.mant << (bits - other.bits) as usize;
        (a, b, bits)
    }
}

fn atan_inv(x: u64, bits: u32) -> BigFloat {
    let one = BigInt::one() << bits as usize;
    let x2 = BigInt::from(x * x);
    let mut power = BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    loop {
        let term = &one / (&power * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
        k += 1;
    }
    BigFloat { mant: sum, bits }
}

/// Round-to-nearest integer division (ties away from zero).
fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    let twice = r.abs() * 2u32;
    if twice >= den.abs() {
        if (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

fn shr_round(m: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return m.clone();
    }
    let half = BigInt::one() << (k - 1) as usize;
    (m + half) >> k as usize
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({}, {} bits)", self.to_decimal_string(self.digits().clamp(1, 40)), self.bits)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|p| p as u32).unwrap_or_else(|| self.digits());
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl FromStr for BigFloat {
    type Err = String;

    /// Parses at [`DEFAULT_DIGITS`] precision.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_with_bits(s, bits_for_digits(DEFAULT_DIGITS)).ok_or_else(|| format!("invalid decimal literal: {s:?}"))
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.align(other);
        a == b
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.align(other);
        Some(a.cmp(&b))
    }
}

impl<'a> Add<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        let (a, b, bits) = self.align(rhs);
        BigFloat { mant: a + b, bits }
    }
}

impl<'a> Sub<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        let (a, b, bits) = self.align(rhs);
        BigFloat { mant: a - b, bits }
    }
}

impl<'a> Mul<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        let bits = self.bits.max(rhs.bits);
        let raw = &self.mant * &rhs.mant;
        let drop = self.bits + rhs.bits - bits;
        BigFloat { mant: shr_round(&raw, drop), bits }
    }
}

impl<'a> Div<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.mant.is_zero(), "BigFloat division by zero");
        let mut bits = self.bits.max(rhs.bits);
        if bits == 0 {
            bits = bits_for_digits(DEFAULT_DIGITS);
        }
        let num = &self.mant << (bits + rhs.bits - self.bits) as usize;
        BigFloat { mant: div_round(&num, &rhs.mant), bits }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&BigFloat> for BigFloat {
    fn add_assign(&mut self, rhs: &BigFloat) {
        if self.bits == rhs.bits {
            self.mant += &rhs.mant;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&BigFloat> for BigFloat {
    fn sub_assign(&mut self, rhs: &BigFloat) {
        if self.bits == rhs.bits {
            self.mant -= &rhs.mant;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -self.mant, bits: self.bits }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -&self.mant, bits: self.bits }
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        Self { mant: BigInt::zero(), bits: 0 }
    }
    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        Self { mant: BigInt::one(), bits: 0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_and_ln2_match_known_digits() {
        let bits = bits_for_digits(60);
        let pi = BigFloat::pi(bits);
        assert_eq!(pi.to_decimal_string(40), "3.1415926535897932384626433832795028841972");
        let ln2 = BigFloat::ln2(bits);
        assert_eq!(ln2.to_decimal_string(40), "0.6931471805599453094172321214581765680755");
    }

    #[test]
    fn arithmetic_mixes_precisions() {
        let bits = bits_for_digits(30);
        let third = BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(3), bits);
        let one = &(&third + &third) + &third;
        assert!((&one - &BigFloat::one()).abs().to_f64() < 1e-30);
        let six = BigFloat::from_i64(2) * BigFloat::from_i64(3);
        assert_eq!(six.bits(), 0);
        assert_eq!(six, BigFloat::from_i64(6));
        let q = BigFloat::from_i64(1) / BigFloat::from_i64(4);
        assert_eq!(q.to_decimal_string(3), "0.250");
    }

    #[test]
    fn decimal_round_trip() {
        let bits = bits_for_digits(40);
        let x = BigFloat::parse_with_bits("-1.0369277551433699263313654864570341680570809195019", bits).unwrap();
        assert_eq!(x.to_decimal_string(35), "-1.03692775514336992633136548645703417");
        let y = BigFloat::parse_with_bits("2.5e-3", bits).unwrap();
        assert!((y.to_f64() - 0.0025).abs() < 1e-18);
        assert!(BigFloat::parse_with_bits("1.2.3", bits).is_none());
        assert!(BigFloat::parse_with_bits("", bits).is_none());
    }

    #[test]
    fn ordering_and_to_f64() {
        let a = BigFloat::from_ratio(&BigInt::from(-7), &BigInt::from(2), 40);
        assert!(a < BigFloat::zero());
        assert_eq!(a.to_f64(), -3.5);
        assert_eq!(a.abs().to_f64(), 3.5);
        let tiny = BigFloat::one_with_bits(400).shr(300);
        assert!((tiny.to_f64() / 2f64.powi(-300) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mul_ratio_promotes_integers() {
        let half = BigFloat::one().mul_ratio(&BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_f64(), 0.5);
    }
}
