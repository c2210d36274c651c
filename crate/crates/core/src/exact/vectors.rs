use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::group_ring::GroupRingElem;
use super::matrix::IntMatrix;
use crate::error::{MzvError, Result};

pub type IntVec = Vec<BigInt>;

/// Element of the free module on integer row vectors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VecCombo {
    terms: BTreeMap<IntVec, BigRational>,
}

impl VecCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis<V: AsRef<[i64]>>(v: V) -> Self {
        Self::zero().plus(v, BigRational::one())
    }

    /// `e_{abcd}` from its digit string, e.g. `e("1100")`.
    pub fn e(digits: &str) -> Self {
        let v: Vec<i64> = digits.chars().map(|c| c.to_digit(10).expect("digit") as i64).collect();
        Self::basis(v)
    }

    /// Builder: add `c·e_v`.
    pub fn plus<V: AsRef<[i64]>>(mut self, v: V, c: BigRational) -> Self {
        let key: IntVec = v.as_ref().iter().map(|&x| BigInt::from(x)).collect();
        self.add_term(key, c);
        self
    }

    pub fn add_term(&mut self, v: IntVec, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(v) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&IntVec, &BigRational)> {
        self.terms.iter()
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

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(v.clone(), c * q);
        }
        out
    }

    /// `α·Γ = Σ a_j b_k x_j M_k`.
    pub fn act(&self, g: &GroupRingElem) -> Result<Self> {
        let mut out = Self::zero();
        for (v, a) in &self.terms {
            if v.len() != g.order() {
                return Err(MzvError::OrderMismatch { left: v.len(), right: g.order() });
            }
            for (m, b) in g.terms() {
                out.add_term(m.left_mul_vec(v), a * b);
            }
        }
        Ok(out)
    }

    /// Drop generators whose first coordinate is zero.
    pub fn congruence_reduce(&self) -> Self {
        Self {
            terms: self.terms.iter().filter(|(v, _)| v.first().is_some_and(|x| !x.is_zero())).map(|(v, c)| (v.clone(), c.clone())).collect(),
        }
    }

    pub fn congruent(&self, other: &Self) -> bool {
        (self - other).congruence_reduce().is_zero()
    }
}

/// `V_M^{idx} = e_δ·M`: the sum of the selected (1-based) rows of `M`.
pub fn vmp(m: &IntMatrix, idx: &[usize]) -> Result<IntVec> {
    let mut seen = Vec::new();
    for &i in idx {
        if i == 0 || i > m.order() || seen.contains(&i) {
            return Err(MzvError::OutOfRange(format!("row selection {idx:?} for order {}", m.order())));
        }
        seen.push(i);
    }
    if idx.is_empty() {
        return Err(MzvError::OutOfRange("empty row selection".into()));
    }
    let mut out = vec![BigInt::zero(); m.order()];
    for &i in idx {
        for (o, x) in out.iter_mut().zip(m.row(i - 1)) {
            *o += x;
        }
    }
    Ok(out)
}

impl Add for &VecCombo {
    type Output = VecCombo;
    fn add(self, rhs: &VecCombo) -> VecCombo {
        let mut out = self.clone();
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }
}

impl Sub for &VecCombo {
    type Output = VecCombo;
    fn sub(self, rhs: &VecCombo) -> VecCombo {
        let mut out = self.clone();
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), -c);
        }
        out
    }
}

impl fmt::Debug for VecCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VecCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(v, c)| {
                let name: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                let sep = if v.iter().all(|x| (0..10).contains(&i64::try_from(x).unwrap_or(-1))) { "" } else { "," };
                format!("{c}*e{}", name.join(sep))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
