use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{MzvError, Result};

pub const MAX_ORDER: usize = 8;

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(order: usize, entries: Vec<BigInt>) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(MzvError::InvalidOrder(order));
        }
        if entries.len() != order * order {
            return Err(MzvError::OutOfRange(format!("{} entries for order {order}", entries.len())));
        }
        Ok(Self { order, entries })
    }

    /// Build from literal rows. Panics on ragged input; meant for constants.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), order, "IntMatrix::from_rows: ragged rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self::new(order, entries).expect("IntMatrix::from_rows: bad order")
    }

    pub fn identity(order: usize) -> Self {
        Self::scalar(order, 1)
    }

    pub fn zero(order: usize) -> Self {
        Self::scalar(order, 0)
    }

    fn scalar(order: usize, d: i64) -> Self {
        assert!((1..=MAX_ORDER).contains(&order));
        let mut entries = vec![BigInt::zero(); order * order];
        for i in 0..order {
            entries[i * order + i] = BigInt::from(d);
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.order + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Entries as `i64` when they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.order).map(|i| self.row(i).iter().map(|x| x.to_i64()).collect()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            return Err(MzvError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let n = self.order;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(Self { order: n, entries })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.order;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let n = self.order;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != skip_row) {
            for j in (0..n).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { order: n - 1, entries }
    }

    /// Exact inverse via the adjugate. Fails unless `det = ±1`.
    pub fn inv(&self) -> Result<Self> {
        let det = self.det();
        if det.abs() != BigInt::one() {
            return Err(MzvError::NonUnimodular(det));
        }
        let n = self.order;
        if n == 1 {
            return Ok(Self { order: 1, entries: vec![det] });
        }
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det();
                let c = if (i + j) % 2 == 0 { c } else { -c };
                // adj[j][i] = cofactor[i][j]; divide by det = multiply by det.
                entries[j * n + i] = c * &det;
            }
        }
        Ok(Self { order: n, entries })
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == BigInt::one()
    }

    /// `A ⊕ B`.
    pub fn block_diag(&self, other: &Self) -> Result<Self> {
        let n = self.order + other.order;
        if n > MAX_ORDER {
            return Err(MzvError::InvalidOrder(n));
        }
        let mut m = Self::zero(n);
        for i in 0..self.order {
            for j in 0..self.order {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        let o = self.order;
        for i in 0..other.order {
            for j in 0..other.order {
                m.set(o + i, o + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.order);
        (0..self.order)
            .map(|j| v.iter().enumerate().fold(BigInt::zero(), |acc, (i, x)| acc + x * self.get(i, j)))
            .collect()
    }

    /// Lower-triangular all-ones matrix, the inverse of [`IntMatrix::p`].
    pub fn p_bar(n: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(j <= i)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Unit lower bidiagonal with -1 below the diagonal.
    pub fn p(n: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 } else if j + 1 == i { -1 } else { 0 }).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Rows in the form `(1,0,0,0),(-1,1,0,0),...`.
    pub fn rows_string(&self) -> String {
        (0..self.order)
            .map(|i| format!("({})", self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rows_string())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
