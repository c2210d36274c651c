use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use num_rational::BigRational;

use crate::error::{MzvError, Result};
use crate::scalar::Scalar;

pub type Exps = Vec<u32>;

/// Homogeneous polynomial in `nvars` variables, sparse in its monomials.
#[derive(Clone, PartialEq)]
pub struct HPoly<C> {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Exps, C>,
}

impl<C: Scalar> HPoly<C> {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        assert!((1..=8).contains(&nvars), "HPoly supports 1..=8 variables");
        Self { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: Exps, c: C) -> Self {
        let degree = exps.iter().sum();
        let mut p = Self::zero(exps.len(), degree);
        p.add_term(exps, c).expect("degree computed from exponents");
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, C)>>(nvars: usize, degree: u32, terms: I) -> Result<Self> {
        let mut p = Self::zero(nvars, degree);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[C]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone()).expect("unit exponent");
        }
        p
    }

    pub fn add_term(&mut self, exps: Exps, c: C) -> Result<()> {
        if exps.len() != self.nvars || exps.iter().sum::<u32>() != self.degree {
            return Err(MzvError::OutOfRange(format!(
                "monomial {exps:?} does not fit {} variables of degree {}",
                self.nvars, self.degree
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || self.degree != other.degree {
            return Err(MzvError::OutOfRange(format!(
                "shape mismatch: ({}, {}) vs ({}, {})",
                self.nvars, self.degree, other.nvars, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * s.clone()).expect("same shape");
        }
        out
    }

    pub fn scale_ratio(&self, q: &BigRational) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale_ratio(q)).expect("same shape");
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> HPoly<D> {
        let mut out = HPoly::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)).expect("same shape");
        }
        out
    }

    /// Ordinary product of polynomials in the same variables.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(MzvError::OrderMismatch { left: self.nvars, right: other.nvars });
        }
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone())?;
            }
        }
        Ok(out)
    }

    /// `f ⊛ g`: product with disjoint variable blocks, `f` first.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars + other.nvars, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut e = a.clone();
                e.extend_from_slice(b);
                out.add_term(e, ca.clone() * cb.clone()).expect("concatenated shape");
            }
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(MzvError::OrderMismatch { left: self.nvars, right: point.len() });
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Largest `|coefficient difference|` against another polynomial of the same shape.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        let d = self.sub(other)?;
        Ok(d.terms.values().map(|c| c.abs_f64()).fold(0.0, f64::max))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.abs_f64()).fold(0.0, f64::max)
    }
}

impl<C: Scalar + Display> HPoly<C> {
    /// One line per monomial: `e1 e2 … en : coefficient`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.terms {
            let ex: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{} : {c}", ex.join(" "));
        }
        out
    }
}

impl<C: fmt::Debug> fmt::Debug for HPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly[{} vars, deg {}]{{", self.nvars, self.degree)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}: {c:?}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn canonical_terms() {
        let mut p = HPoly::<BigRational>::zero(2, 2);
        p.add_term(vec![1, 1], int(3)).unwrap();
        p.add_term(vec![1, 1], int(-3)).unwrap();
        assert!(p.is_zero());
        assert!(p.add_term(vec![1, 0], int(1)).is_err());
    }

    #[test]
    fn tensor_and_eval() {
        let f = HPoly::linear(&[int(1), int(2)]);
        let g = HPoly::monomial(vec![2], rat(1, 2));
        let fg = f.tensor(&g);
        assert_eq!(fg.nvars(), 3);
        assert_eq!(fg.degree(), 3);
        assert_eq!(fg.coeff(&[0, 1, 2]), int(1));
        let v = fg.eval(&[int(1), int(1), int(2)]).unwrap();
        assert_eq!(v, int(6));
        let sum = HPoly::linear(&vec![int(1); 4]);
        assert_eq!(sum.eval(&[int(1), int(0), int(0), int(0)]).unwrap(), int(1));
    }

    #[test]
    fn dump_format() {
        let p = HPoly::monomial(vec![1, 0, 0, 0], rat(5, 2));
        assert_eq!(p.dump(), "1 0 0 0 : 5/2\n");
    }
}
