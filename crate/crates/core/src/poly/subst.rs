//! Linear substitution and the group-ring action on polynomials.
//!
//! A substitution `x ↦ xM` of degree `d` is a linear map on the monomials of
//! degree `d` with integer coefficients. It is built one degree at a time,
//! summed over every matrix of a group-ring element, and only then applied to
//! the (possibly inexact) polynomial coefficients.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::hpoly::{Exps, HPoly};
use crate::error::{MzvError, Result};
use crate::exact::{GroupRingElem, IntMatrix};
use crate::scalar::Scalar;

/// Monomial bases for degrees `0..=d`, with successor and parent tables.
struct Layers {
    nvars: usize,
    bases: Vec<Vec<Exps>>,
    /// `succ[k][s*n + i]`: index in degree `k+1` of `bases[k][s] + e_i`.
    succ: Vec<Vec<usize>>,
    /// `parent[k][s] = (t, j)` with `bases[k][s] = bases[k-1][t] + e_j`.
    parent: Vec<Vec<(usize, usize)>>,
}

fn monomials(nvars: usize, degree: u32) -> Vec<Exps> {
    fn rec(i: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out
}

impl Layers {
    fn new(nvars: usize, degree: u32) -> Self {
        let bases: Vec<Vec<Exps>> = (0..=degree).map(|k| monomials(nvars, k)).collect();
        let index: Vec<HashMap<&Exps, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(i, e)| (e, i)).collect()).collect();
        let mut succ = Vec::new();
        for k in 0..degree as usize {
            let mut table = Vec::with_capacity(bases[k].len() * nvars);
            for e in &bases[k] {
                for i in 0..nvars {
                    let mut f = e.clone();
                    f[i] += 1;
                    table.push(index[k + 1][&f]);
                }
            }
            succ.push(table);
        }
        let mut parent = vec![Vec::new()];
        for k in 1..=degree as usize {
            let table = bases[k]
                .iter()
                .map(|e| {
                    let j = (0..nvars).rev().find(|&j| e[j] > 0).expect("positive degree");
                    let mut f = e.clone();
                    f[j] -= 1;
                    (index[k - 1][&f], j)
                })
                .collect();
            parent.push(table);
        }
        Self { nvars, bases, succ, parent }
    }

    fn top(&self) -> &[Exps] {
        self.bases.last().expect("at least degree 0")
    }
}

/// Integer ring used for substitution coefficients.
trait SubstInt: Clone + Sized {
    fn zero() -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// `self += a*b`, `None` on overflow.
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()>;
    fn to_big(&self) -> BigInt;
}

impl SubstInt for i128 {
    fn zero() -> Self {
        0
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self = self.checked_add(a.checked_mul(*b)?)?;
        Some(())
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl SubstInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self += a * b;
        Some(())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense map on top-degree monomials: row = source, column = image monomial.
fn substitution_map<T: SubstInt>(layers: &Layers, m: &IntMatrix) -> Option<Vec<T>> {
    let n = layers.nvars;
    let entries: Vec<T> = m.entries().iter().map(T::from_big).collect::<Option<_>>()?;
    // Nonzero entries of each column j: the linear form x_j ↦ Σ_i m_ij x_i.
    let columns: Vec<Vec<(usize, T)>> = (0..n)
        .map(|j| (0..n).filter(|&i| !entries[i * n + j].is_zero()).map(|i| (i, entries[i * n + j].clone())).collect())
        .collect();
    let mut prev: Vec<T> = vec![T::from_big(&BigInt::one())?];
    let mut prev_dim = 1;
    for k in 1..layers.bases.len() {
        let dim = layers.bases[k].len();
        let mut cur = vec![T::zero(); dim * dim];
        for (s, &(ps, j)) in layers.parent[k].iter().enumerate() {
            let src = &prev[ps * prev_dim..(ps + 1) * prev_dim];
            let row = &mut cur[s * dim..(s + 1) * dim];
            for (t, c) in src.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, mij) in &columns[j] {
                    row[layers.succ[k - 1][t * n + i]].mul_add(c, mij)?;
                }
            }
        }
        prev = cur;
        prev_dim = dim;
    }
    Some(prev)
}

/// `Σ w_k · map(M_k)`, all in integers.
fn combined_map<T: SubstInt>(layers: &Layers, mats: &[(IntMatrix, BigInt)]) -> Option<Vec<T>> {
    let dim = layers.top().len();
    let mut acc = vec![T::zero(); dim * dim];
    for (m, w) in mats {
        let w = T::from_big(w)?;
        let map = substitution_map::<T>(layers, m)?;
        for (a, x) in acc.iter_mut().zip(&map) {
            if !x.is_zero() {
                a.mul_add(x, &w)?;
            }
        }
    }
    Some(acc)
}

/// Apply `Σ w_k p(x M_k) / den` to `p`.
fn apply_weighted<C: Scalar>(p: &HPoly<C>, mats: &[(IntMatrix, BigInt)], den: &BigInt) -> Result<HPoly<C>> {
    for (m, _) in mats {
        if m.order() != p.nvars() {
            return Err(MzvError::OrderMismatch { left: p.nvars(), right: m.order() });
        }
    }
    let mut out = HPoly::zero(p.nvars(), p.degree());
    if p.is_zero() || mats.is_empty() {
        return Ok(out);
    }
    let layers = Layers::new(p.nvars(), p.degree());
    let top = layers.top();
    let dim = top.len();
    let index: HashMap<&Exps, usize> = top.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let scale = BigRational::new(BigInt::one(), den.clone());
    let finish = |c: C| if den.is_one() { c } else { c.scale_ratio(&scale) };
    let sources: Vec<(usize, &C)> = p.terms().map(|(e, c)| (index[e], c)).collect();

    macro_rules! apply {
        ($map:expr) => {{
            let map = $map;
            for t in 0..dim {
                let mut acc = C::zero();
                let mut any = false;
                for &(s, c) in &sources {
                    let w = &map[s * dim + t];
                    if !SubstInt::is_zero(w) {
                        acc = acc + c.scale_int(&w.to_big());
                        any = true;
                    }
                }
                if any {
                    out.add_term(top[t].clone(), finish(acc))?;
                }
            }
        }};
    }
    match combined_map::<i128>(&layers, mats) {
        Some(map) => apply!(map),
        None => apply!(combined_map::<BigInt>(&layers, mats).expect("BigInt never overflows")),
    }
    Ok(out)
}

/// `p(xM)` for an integer matrix: variable `x_j` becomes `Σ_i x_i M_ij`.
pub fn subst_linear<C: Scalar>(p: &HPoly<C>, m: &IntMatrix) -> Result<HPoly<C>> {
    apply_weighted(p, &[(m.clone(), BigInt::one())], &BigInt::one())
}

/// `p(xM)` for a rational matrix given row-major.
pub fn subst_linear_rational<C: Scalar>(p: &HPoly<C>, m: &[BigRational]) -> Result<HPoly<C>> {
    let n = p.nvars();
    if m.len() != n * n {
        return Err(MzvError::OrderMismatch { left: n, right: (m.len() as f64).sqrt() as usize });
    }
    let den = m.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = m.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    let mat = IntMatrix::new(n, ints)?;
    let den_pow = num_traits::pow(den, p.degree() as usize);
    apply_weighted(p, &[(mat, BigInt::one())], &den_pow)
}

/// `(p|Γ)(x) = Σ a_k p(x M_k^{-1})`.
pub fn act<C: Scalar>(p: &HPoly<C>, g: &GroupRingElem) -> Result<HPoly<C>> {
    if g.order() != p.nvars() {
        return Err(MzvError::OrderMismatch { left: p.nvars(), right: g.order() });
    }
    let den = g.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut mats = Vec::with_capacity(g.len());
    for (m, c) in g.terms() {
        mats.push((m.inv()?, c.numer() * (&den / c.denom())));
    }
    apply_weighted(p, &mats, &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::constants::constants;
    use crate::exact::{group_sum, Permutation};
    use crate::scalar::{int, rat};
    use crate::BigFloat;

    type Q = BigRational;

    fn sample(nvars: usize, degree: u32) -> HPoly<Q> {
        let mut p = HPoly::zero(nvars, degree);
        for (k, e) in monomials(nvars, degree).into_iter().enumerate() {
            p.add_term(e, rat(k as i64 * 7 % 11 - 5, (k as i64 % 3) + 1)).unwrap();
        }
        p
    }

    #[test]
    fn monomial_bases() {
        assert_eq!(monomials(4, 2).len(), 10);
        assert_eq!(monomials(4, 8).len(), 165);
        assert_eq!(monomials(1, 5), vec![vec![5]]);
    }

    #[test]
    fn substitution_basics() {
        let x1 = HPoly::monomial(vec![1, 0, 0, 0], int(1));
        let got = subst_linear(&x1, &IntMatrix::p_bar(4)).unwrap();
        assert_eq!(got, HPoly::linear(&vec![int(1); 4]));
        let p = sample(4, 3);
        assert_eq!(subst_linear(&p, &IntMatrix::identity(4)).unwrap(), p);
        let x1x2 = HPoly::monomial(vec![1, 1], int(1));
        let swap = Permutation::parse_cycles("(12)", 2).unwrap().to_matrix();
        assert_eq!(subst_linear(&x1x2, &swap).unwrap(), x1x2);
    }

    #[test]
    fn composition_order() {
        let p = sample(3, 4);
        let a = IntMatrix::from_rows(&[[1, 2, 0], [0, 1, 0], [-1, 0, 1]]);
        let b = IntMatrix::from_rows(&[[1, 0, 0], [3, 1, 1], [0, 0, 1]]);
        let lhs = subst_linear(&subst_linear(&p, &a).unwrap(), &b).unwrap();
        let rhs = subst_linear(&p, &b.mul(&a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_action_permutes_variables() {
        // (p|σ)(x) = p(x_{σ^{-1}(1)}, …)
        let p = HPoly::monomial(vec![3, 1, 0, 0], int(1));
        let sigma = Permutation::parse_cycles("(1234)", 4).unwrap();
        let got = act(&p, &GroupRingElem::from_perm(&sigma)).unwrap();
        // x_{σ^{-1}(1)}^3 x_{σ^{-1}(2)} = x_4^3 x_1
        assert_eq!(got, HPoly::monomial(vec![1, 0, 0, 3], int(1)));
    }

    #[test]
    fn right_action_law() {
        let p = sample(4, 3);
        let c = constants();
        let g = &c.phi * &GroupRingElem::from_matrix(c.r.clone());
        let h = c.s_c4.clone();
        let lhs = act(&act(&p, &g).unwrap(), &h).unwrap();
        let rhs = act(&p, &(&g * &h)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_coefficients_and_matrices() {
        let p = sample(2, 3);
        let g = GroupRingElem::identity(2).scale(&rat(1, 3));
        assert_eq!(act(&p, &g).unwrap(), p.scale_ratio(&rat(1, 3)));
        let half: Vec<Q> = vec![rat(1, 2), int(0), int(0), rat(1, 2)];
        let got = subst_linear_rational(&p, &half).unwrap();
        assert_eq!(got, p.scale_ratio(&rat(1, 8)));
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let p = HPoly::monomial(vec![20, 0], int(1));
        let m = IntMatrix::from_rows(&[[1_000_000_000, 1], [0, 1]]);
        let got = subst_linear(&p, &m).unwrap();
        let want = num_traits::pow(BigInt::from(1_000_000_000i64), 20);
        assert_eq!(got.coeff(&[20, 0]), Q::from_integer(want));
    }

    #[test]
    fn exact_and_float_agree() {
        let p = sample(4, 4);
        let g = constants().omega.clone();
        let exact = act(&p, &g).unwrap();
        let bits = crate::bigfloat::bits_for_digits(40);
        let pf = p.map_coeffs(|q| BigFloat::from_rational(q, bits));
        let float = act(&pf, &g).unwrap();
        let back = exact.map_coeffs(|q| BigFloat::from_rational(q, bits));
        assert!(float.max_abs_diff(&back).unwrap() < 1e-35);
        let pd = p.map_coeffs(|q| Scalar::to_f64(q));
        let dbl = act(&pd, &g).unwrap();
        assert!(dbl.max_abs_diff(&exact.map_coeffs(|q| Scalar::to_f64(q))).unwrap() < 1e-9);
    }

    #[test]
    fn cyclic_sum_is_symmetrization() {
        let p = HPoly::monomial(vec![1, 0, 0, 0], int(1));
        let c4 = group_sum(&Permutation::cyclic(4)).unwrap();
        assert_eq!(act(&p, &c4).unwrap(), HPoly::linear(&vec![int(1); 4]));
    }
}
