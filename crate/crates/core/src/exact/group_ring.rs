use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, MAX_ORDER};
use super::perm::Permutation;
use crate::error::{MzvError, Result};

/// Finite rational combination of integer matrices of one order.
///
/// Terms are kept canonical: no zero coefficients, matrices ordered by their
/// entry list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    order: usize,
    terms: BTreeMap<IntMatrix, BigRational>,
}

impl GroupRingElem {
    pub fn zero(order: usize) -> Self {
        Self { order, terms: BTreeMap::new() }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_matrix(IntMatrix::identity(order))
    }

    pub fn from_matrix(m: IntMatrix) -> Self {
        let order = m.order();
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        Self { order, terms }
    }

    pub fn from_perm(p: &Permutation) -> Self {
        Self::from_matrix(p.to_matrix())
    }

    pub fn from_terms<I: IntoIterator<Item = (IntMatrix, BigRational)>>(order: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(order);
        for (m, c) in terms {
            if m.order() != order {
                return Err(MzvError::OrderMismatch { left: order, right: m.order() });
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// Sum of matrices, each with coefficient one.
    pub fn sum_of(mats: &[IntMatrix]) -> Result<Self> {
        let order = mats.first().map_or(1, |m| m.order());
        Self::from_terms(order, mats.iter().map(|m| (m.clone(), BigRational::one())))
    }

    fn add_term(&mut self, m: IntMatrix, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
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

    pub fn terms(&self) -> impl Iterator<Item = (&IntMatrix, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &IntMatrix) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(MzvError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.order);
        }
        Self { order: self.order, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    /// `Σ b_k M_k^{-1}`.
    pub fn bar(&self) -> Result<Self> {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(m.inv()?, c.clone());
        }
        Ok(out)
    }

    /// Extend every matrix `M` to `M ⊕ I_{n-m}`.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.order || n > MAX_ORDER {
            return Err(MzvError::OutOfRange(format!("cannot embed order {} into {n}", self.order)));
        }
        if n == self.order {
            return Ok(self.clone());
        }
        let pad = IntMatrix::identity(n - self.order);
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            out.add_term(m.block_diag(&pad)?, c.clone());
        }
        Ok(out)
    }

    /// Left-multiply every term by a single matrix.
    pub fn left_mul_matrix(&self, m: &IntMatrix) -> Result<Self> {
        GroupRingElem::from_matrix(m.clone()).try_mul(self)
    }

    pub fn right_mul_matrix(&self, m: &IntMatrix) -> Result<Self> {
        self.try_mul(&GroupRingElem::from_matrix(m.clone()))
    }

    /// Replace the coefficient of `m` (used to build perturbed controls).
    pub fn with_term(&self, m: IntMatrix, c: BigRational) -> Self {
        let mut out = self.clone();
        out.terms.remove(&m);
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }
}

/// `S(H) = Σ_{σ∈H} σ`.
pub fn group_sum(perms: &[Permutation]) -> Result<GroupRingElem> {
    let order = perms.first().map_or(1, |p| p.degree());
    let mut out = GroupRingElem::zero(order);
    for p in perms {
        if p.degree() != order {
            return Err(MzvError::OrderMismatch { left: order, right: p.degree() });
        }
        out.add_term(p.to_matrix(), BigRational::one());
    }
    Ok(out)
}

/// `sh_{j,n}`: permutations increasing on positions `1..j` and `j+1..n`.
pub fn shuffle_element(j: usize, n: usize) -> Result<GroupRingElem> {
    if n > MAX_ORDER || j == 0 || j >= n {
        return Err(MzvError::OutOfRange(format!("shuffle element sh({j},{n}) needs 1 <= j <= n-1 <= 7")));
    }
    let perms: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|s| (1..j).all(|i| s.apply(i) < s.apply(i + 1)) && (j + 1..n).all(|i| s.apply(i) < s.apply(i + 1)))
        .collect();
    group_sum(&perms)
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_add(rhs).expect("group ring order mismatch")
    }
}

impl Sub for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_sub(rhs).expect("group ring order mismatch")
    }
}

impl Mul for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_mul(rhs).expect("group ring order mismatch")
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} term(s) of order {}", self.terms.len(), self.order)?;
        for (m, c) in &self.terms {
            writeln!(f, "  {c:>4} * {}", m.rows_string())?;
        }
        Ok(())
    }
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
