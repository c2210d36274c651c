use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MzvError, Result};

/// Index set `(l_1, …, l_k)`, `l_1` outermost (largest summation variable).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(MzvError::Parse(format!("index set {parts:?} must be non-empty positive integers")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    /// Exponent vector `L − (1,…,1)` of the generating-function monomial.
    pub fn exponents(&self) -> Vec<u32> {
        self.0.iter().map(|l| l - 1).collect()
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        Self(e.iter().map(|x| x + 1).collect())
    }
}

impl FromStr for IndexSet {
    type Err = MzvError;

    /// `2,1,1,1` (surrounding parentheses and spaces allowed).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Err(MzvError::Parse(format!("empty index set {s:?}")));
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| MzvError::Parse(format!("bad index entry {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// Word over `{X, Y}`; `X^{l_1-1} Y ⋯ X^{l_k-1} Y` encodes `(l_1, …, l_k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Starts with `X` and ends with `Y`.
    pub fn is_admissible(&self) -> bool {
        self.0.first() == Some(&Letter::X) && self.0.last() == Some(&Letter::Y)
    }

    pub fn ends_in_y(&self) -> bool {
        self.0.last() == Some(&Letter::Y)
    }

    /// `τ(reverse(w))`, the dual word.
    pub fn dual(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    pub fn count_y(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Y).count()
    }

    pub fn prepend(&self, l: Letter) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Self {
        Self(self.0[from..to].to_vec())
    }
}

impl FromStr for Word {
    type Err = MzvError;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'X' | 'x' => Ok(Letter::X),
                'Y' | 'y' => Ok(Letter::Y),
                _ => Err(MzvError::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::X { 'X' } else { 'Y' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn index_word(l: &IndexSet) -> Word {
    let mut v = Vec::with_capacity(l.weight() as usize);
    for &k in l.parts() {
        v.extend(std::iter::repeat(Letter::X).take(k as usize - 1));
        v.push(Letter::Y);
    }
    Word(v)
}

pub fn word_index(w: &Word) -> Result<IndexSet> {
    if !w.ends_in_y() {
        return Err(MzvError::InvalidWord(format!("{w} does not end in Y")));
    }
    let mut parts = Vec::new();
    let mut run = 1;
    for l in w.letters() {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                parts.push(run);
                run = 1;
            }
        }
    }
    IndexSet::new(parts)
}

/// All index sets of the given depth and weight, sorted lexicographically.
pub fn enumerate_index_sets(depth: usize, weight: u32, admissible_only: bool) -> Vec<IndexSet> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<IndexSet>) {
        if slots == 1 {
            cur.push(left);
            out.push(IndexSet(cur.clone()));
            cur.pop();
            return;
        }
        for k in 1..=left.saturating_sub(slots as u32 - 1) {
            cur.push(k);
            rec(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if depth == 0 || (weight as usize) < depth {
        return out;
    }
    rec(weight, depth, &mut Vec::with_capacity(depth), &mut out);
    if admissible_only {
        out.retain(|l| l.is_admissible());
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(s: &str) -> IndexSet {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_index_sets(4, 5, true), vec![ix("2,1,1,1")]);
        let mut six = enumerate_index_sets(4, 6, true);
        six.sort();
        let mut want = vec![ix("3,1,1,1"), ix("2,2,1,1"), ix("2,1,2,1"), ix("2,1,1,2")];
        want.sort();
        assert_eq!(six, want);
        assert_eq!(enumerate_index_sets(4, 6, false).len(), 10);
        assert!(enumerate_index_sets(4, 3, false).is_empty());
        assert!(enumerate_index_sets(4, 4, true).is_empty());
    }

    #[test]
    fn enumeration_counts_match_binomials() {
        for l in 5..=16u32 {
            for depth in 1..=4usize {
                let all = enumerate_index_sets(depth, l, false);
                assert_eq!(all.len() as u64, binomial(l as u64 - 1, depth as u64 - 1));
                let adm = enumerate_index_sets(depth, l, true);
                assert_eq!(adm.len() as u64, binomial(l as u64 - 2, depth as u64 - 1));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn words_round_trip() {
        for (s, w) in [("2", "XY"), ("2,1", "XYY"), ("2,1,1,1", "XYYYY"), ("1,3", "YXXY")] {
            let l = ix(s);
            let word: Word = w.parse().unwrap();
            assert_eq!(index_word(&l), word);
            assert_eq!(word_index(&word).unwrap(), l);
            assert_eq!(word.len() as u32, l.weight());
        }
        assert!(word_index(&"XYX".parse().unwrap()).is_err());
        assert_eq!("XXYXY".parse::<Word>().unwrap().dual().to_string(), "XYXYY");
    }

    #[test]
    fn parsing() {
        assert_eq!(ix("(2, 1,1)").parts(), &[2, 1, 1]);
        assert!("0,1".parse::<IndexSet>().is_err());
        assert!("".parse::<IndexSet>().is_err());
        assert!("2,a".parse::<IndexSet>().is_err());
        assert!(ix("2,1").is_admissible());
        assert!(!ix("1,2").is_admissible());
    }
}
