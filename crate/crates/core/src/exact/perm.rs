use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::{IntMatrix, MAX_ORDER};
use crate::error::{MzvError, Result};

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    /// From the 1-based image list `σ(1), …, σ(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_ORDER {
            return Err(MzvError::InvalidOrder(n));
        }
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(MzvError::InvalidPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
            image.push(x - 1);
        }
        Ok(Self { image })
    }

    /// Parse cycle notation such as `(1234)`, `(13)(24)` or `id`.
    ///
    /// `(1234)` sends 1→2→3→4→1. A product of cycles is composed right to
    /// left, like matrix products.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(MzvError::InvalidOrder(n));
        }
        let bad = || MzvError::InvalidPermutation(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut result = Self::identity(n);
        if t == "id" || t == "e" || t.is_empty() {
            return Ok(result);
        }
        let mut rest = t.as_str();
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let mut points = Vec::new();
            for c in body[..close].chars() {
                let d = c.to_digit(10).ok_or_else(bad)? as usize;
                if d == 0 || d > n || points.contains(&(d - 1)) {
                    return Err(bad());
                }
                points.push(d - 1);
            }
            cycles.push(points);
            rest = &body[close + 1..];
        }
        for points in cycles.iter().rev() {
            let mut image: Vec<usize> = (0..n).collect();
            for (k, &p) in points.iter().enumerate() {
                image[p] = points[(k + 1) % points.len()];
            }
            result = Self { image }.compose(&result);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `σ(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self { image: other.image.iter().map(|&j| self.image[j]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.degree()];
        for (i, &s) in self.image.iter().enumerate() {
            image[s] = i;
        }
        Self { image }
    }

    /// Extend by fixed points to degree `n`.
    pub fn extend(&self, n: usize) -> Self {
        let mut image = self.image.clone();
        image.extend(self.degree()..n);
        Self { image }
    }

    /// Matrix `(δ_{i σ(j)})`.
    pub fn to_matrix(&self) -> IntMatrix {
        let n = self.degree();
        let mut entries = vec![BigInt::zero(); n * n];
        for (j, &s) in self.image.iter().enumerate() {
            entries[s * n + j] = BigInt::from(1);
        }
        IntMatrix::new(n, entries).expect("degree checked at construction")
    }

    /// All permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation { image: prefix.clone() });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Cyclic group generated by the `n`-cycle `(12…n)`.
    pub fn cyclic(n: usize) -> Vec<Self> {
        let gen = Self { image: (0..n).map(|i| (i + 1) % n).collect() };
        let mut out = vec![Self::identity(n)];
        for _ in 1..n {
            out.push(gen.compose(out.last().unwrap()));
        }
        out
    }

    /// Closure of a generating set under composition.
    pub fn generated(gens: &[Self]) -> Vec<Self> {
        let n = gens.first().map_or(1, |g| g.degree());
        let mut group = vec![Self::identity(n)];
        let mut frontier = group.clone();
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = g.compose(&x);
                if !group.contains(&y) {
                    group.push(y.clone());
                    frontier.push(y);
                }
            }
        }
        group.sort();
        group
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                write!(f, "{}", x + 1)?;
                x = self.image[x];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "id")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse_cycles(s, 4).unwrap()
    }

    #[test]
    fn cycle_notation_convention() {
        let c = p("(1234)");
        assert_eq!((1..=4).map(|i| c.apply(i)).collect::<Vec<_>>(), vec![2, 3, 4, 1]);
        assert_eq!(c.to_string(), "(1234)");
        assert_eq!(p("(13)(24)").to_string(), "(13)(24)");
        assert_eq!(p("id"), Permutation::identity(4));
        assert_eq!(p("(1432)"), c.inverse());
        assert!(Permutation::parse_cycles("(15)", 4).is_err());
        assert!(Permutation::parse_cycles("(11)", 4).is_err());
        assert!(Permutation::parse_cycles("12", 4).is_err());
    }

    #[test]
    fn matrix_embedding() {
        assert!(Permutation::identity(4).to_matrix().is_identity());
        assert_eq!(
            p("(13)(24)").to_matrix(),
            IntMatrix::from_rows(&[[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
        );
    }

    #[test]
    fn embedding_is_injective_homomorphism_on_s4() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let mats: Vec<IntMatrix> = all.iter().map(|s| s.to_matrix()).collect();
        for (s, ms) in all.iter().zip(&mats) {
            for (t, mt) in all.iter().zip(&mats) {
                assert_eq!(s.compose(t).to_matrix(), ms.mul(mt).unwrap());
            }
        }
        let mut uniq = mats.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), 24);
    }

    #[test]
    fn groups() {
        let c4 = Permutation::cyclic(4);
        let names: Vec<String> = c4.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["id", "(1234)", "(13)(24)", "(1432)"]);
        assert_eq!(Permutation::generated(&[p("(23)"), p("(234)")]).len(), 6);
        assert_eq!(p("(123)").extend(4), p("(123)"));
        assert_eq!(Permutation::parse_cycles("(123)", 3).unwrap().extend(4), p("(123)"));
    }
}
