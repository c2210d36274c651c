use super::hpoly::HPoly;
use super::subst::act;
use crate::error::{MzvError, Result};
use crate::exact::{GroupRingElem, IntMatrix};
use crate::scalar::Scalar;

/// Power series truncated after total degree `cutoff`, one homogeneous part per degree.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    nvars: usize,
    parts: Vec<HPoly<C>>,
}

impl<C: Scalar> TruncSeries<C> {
    pub fn zero(nvars: usize, cutoff: u32) -> Self {
        Self { nvars, parts: (0..=cutoff).map(|d| HPoly::zero(nvars, d)).collect() }
    }

    /// The constant series `1`.
    pub fn one(nvars: usize, cutoff: u32) -> Self {
        let mut s = Self::zero(nvars, cutoff);
        s.parts[0] = HPoly::monomial(vec![0; nvars], C::one());
        s
    }

    pub fn from_parts(nvars: usize, parts: Vec<HPoly<C>>) -> Result<Self> {
        for (d, p) in parts.iter().enumerate() {
            if p.nvars() != nvars || p.degree() as usize != d {
                return Err(MzvError::OutOfRange(format!("part {d} has shape ({}, {})", p.nvars(), p.degree())));
            }
        }
        if parts.is_empty() {
            return Err(MzvError::OutOfRange("series needs at least the degree-0 part".into()));
        }
        Ok(Self { nvars, parts })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cutoff(&self) -> u32 {
        (self.parts.len() - 1) as u32
    }

    pub fn part(&self, d: u32) -> &HPoly<C> {
        &self.parts[d as usize]
    }

    pub fn set_part(&mut self, p: HPoly<C>) -> Result<()> {
        let d = p.degree() as usize;
        if p.nvars() != self.nvars || d >= self.parts.len() {
            return Err(MzvError::OutOfRange(format!("part of degree {d} does not fit")));
        }
        self.parts[d] = p;
        Ok(())
    }

    pub fn parts(&self) -> &[HPoly<C>] {
        &self.parts
    }

    /// Degree-preserving, so the action is applied part by part.
    pub fn act(&self, g: &GroupRingElem) -> Result<Self> {
        let parts = self.parts.iter().map(|p| act(p, g)).collect::<Result<_>>()?;
        Ok(Self { nvars: self.nvars, parts })
    }

    /// `(f⊗g)(x) = f(x_1..x_{n1}) g(x_{n1+1}..)`, truncated at the smaller cutoff.
    pub fn tensor(&self, other: &Self) -> Self {
        let cutoff = self.cutoff().min(other.cutoff());
        let mut out = Self::zero(self.nvars + other.nvars, cutoff);
        for d in 0..=cutoff {
            out.parts[d as usize] = tensor_slice(&self.parts, &other.parts, d);
        }
        out
    }

    /// `f♯ = f|P_n`.
    pub fn sharp(&self) -> Result<Self> {
        self.act(&GroupRingElem::from_matrix(IntMatrix::p(self.nvars)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars || self.cutoff() != other.cutoff() {
            return Err(MzvError::OutOfRange("series shape mismatch".into()));
        }
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(Self { nvars: self.nvars, parts })
    }
}

/// Degree-`d` part of a tensor product from the parts of each factor.
pub fn tensor_slice<C: Scalar>(f: &[HPoly<C>], g: &[HPoly<C>], d: u32) -> HPoly<C> {
    let n1 = f.first().map_or(0, |p| p.nvars());
    let n2 = g.first().map_or(0, |p| p.nvars());
    let mut out = HPoly::zero(n1 + n2, d);
    for a in 0..=d {
        let (Some(fa), Some(gb)) = (f.get(a as usize), g.get((d - a) as usize)) else { continue };
        if fa.is_zero() || gb.is_zero() {
            continue;
        }
        out = out.add(&fa.tensor(gb)).expect("tensor slices share a shape");
    }
    out
}

/// `p♯ = p|P_n` for a single homogeneous part.
pub fn sharp<C: Scalar>(p: &HPoly<C>) -> Result<HPoly<C>> {
    act(p, &GroupRingElem::from_matrix(IntMatrix::p(p.nvars())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::subst::subst_linear;
    use crate::scalar::{int, rat};
    use num_rational::BigRational;

    type Q = BigRational;

    fn series(nvars: usize, cutoff: u32, seed: i64) -> TruncSeries<Q> {
        let mut s = TruncSeries::zero(nvars, cutoff);
        for d in 0..=cutoff {
            let mut p = HPoly::zero(nvars, d);
            let mut k = seed;
            for e in all_monomials(nvars, d) {
                k = (k * 31 + 7) % 23;
                p.add_term(e, rat(k - 11, 3)).unwrap();
            }
            s.set_part(p).unwrap();
        }
        s
    }

    fn all_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
        if n == 1 {
            return vec![vec![d]];
        }
        (0..=d)
            .flat_map(|k| all_monomials(n - 1, d - k).into_iter().map(move |mut e| {
                e.insert(0, k);
                e
            }))
            .collect()
    }

    #[test]
    fn sharp_of_x1_sums_all_variables() {
        let mut s = TruncSeries::<Q>::zero(4, 1);
        s.set_part(HPoly::monomial(vec![1, 0, 0, 0], int(1))).unwrap();
        assert_eq!(s.sharp().unwrap().part(1), &HPoly::linear(&vec![int(1); 4]));
        let one_var = series(1, 5, 3);
        assert_eq!(one_var.sharp().unwrap(), one_var);
    }

    #[test]
    fn sharp_is_cumulative_substitution_and_inverts() {
        for n in 2..=4 {
            let f = series(n, 3, n as i64);
            let sh = f.sharp().unwrap();
            for d in 0..=3 {
                let direct = subst_linear(f.part(d), &IntMatrix::p_bar(n)).unwrap();
                assert_eq!(sh.part(d), &direct);
            }
            let back = sh.act(&GroupRingElem::from_matrix(IntMatrix::p_bar(n))).unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn tensor_laws() {
        let f = series(1, 3, 1);
        let g = series(1, 3, 2);
        let h = series(2, 3, 3);
        let fg = f.tensor(&g);
        assert_eq!(fg.part(2).coeff(&[1, 1]), f.part(1).coeff(&[1]) * g.part(1).coeff(&[1]));
        assert_eq!(fg.tensor(&h), f.tensor(&g.tensor(&h)));
        let one = TruncSeries::one(2, 3);
        let ext = f.tensor(&one);
        assert_eq!(ext.part(2).coeff(&[2, 0, 0]), f.part(2).coeff(&[2]));
        assert_eq!(ext.part(2).len(), f.part(2).len());
    }

    #[test]
    fn block_action_on_tensors() {
        let f = series(2, 3, 4);
        let g = series(2, 3, 5);
        let a = IntMatrix::p(2);
        let b = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        let ab = GroupRingElem::from_matrix(a.block_diag(&b).unwrap());
        let lhs = f.tensor(&g).act(&ab).unwrap();
        let rhs = f.act(&GroupRingElem::from_matrix(a)).unwrap().tensor(&g.act(&GroupRingElem::from_matrix(b)).unwrap());
        assert_eq!(lhs, rhs);
    }
}
