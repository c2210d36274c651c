//! Transcribed matrix lists and vector tables, with small parsers.
//!
//! Matrices are written row by row: `"1 0 0 0; 0 1 0 0; -1 -1 1 0; 0 0 0 1"`.
//! Vector combinations use `e`-words with optional rational weights:
//! `"2*e2221 - 2*e1221 + 1/2*e1010"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{MzvError, Result};
use crate::exact::{GroupRingElem, IntMatrix, VecCombo};

pub fn parse_matrix(s: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| {
            r.split_whitespace()
                .map(|x| x.parse::<i64>().map_err(|e| MzvError::Parse(format!("matrix entry {x:?}: {e}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(MzvError::Parse(format!("matrix is not square: {s:?}")));
    }
    IntMatrix::new(n, rows.into_iter().flatten().map(BigInt::from).collect())
}

/// Sum of the listed matrices, each with coefficient one.
pub fn matrix_sum(list: &[&str]) -> Result<GroupRingElem> {
    let ms: Vec<IntMatrix> = list.iter().map(|s| parse_matrix(s)).collect::<Result<_>>()?;
    GroupRingElem::sum_of(&ms)
}

pub fn parse_combo(s: &str) -> Result<VecCombo> {
    let err = |m: &str| MzvError::Parse(format!("{m} in combination {s:?}"));
    let mut out = VecCombo::zero();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let neg = rest.starts_with('-');
        if rest.starts_with('+') || neg {
            rest = &rest[1..];
        }
        let end = rest[1..].find(['+', '-']).map_or(rest.len(), |i| i + 1);
        let term = &rest[..end];
        rest = &rest[end..];
        let (coeff, word) = match term.split_once('*') {
            Some((c, w)) => (c.parse::<BigRational>().map_err(|_| err("bad coefficient"))?, w),
            None => (BigRational::one(), term),
        };
        let digits = word.strip_prefix('e').ok_or_else(|| err("expected e-vector"))?;
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err("bad e-vector"));
        }
        let v = digits.chars().map(|c| BigInt::from(c.to_digit(10).unwrap())).collect();
        out.add_term(v, if neg { -coeff } else { coeff });
    }
    Ok(out)
}

/// ΨS as four matrices.
pub const PSI_S: [&str; 4] = [
    "1 0 0 0; 0 1 0 0; 0 0 1 0; -1 -1 -1 1",
    "1 0 0 0; 0 1 0 0; -1 -1 0 1; 1 1 1 -1",
    "1 0 0 0; -1 0 0 1; 1 1 0 -1; 0 0 1 0",
    "0 0 0 1; 1 0 0 -1; 0 1 0 0; 0 0 1 0",
];

/// ΦR as three matrices.
pub const PHI_R: [&str; 3] = [
    "1 0 0 0; 0 1 0 0; -1 -1 1 0; 0 0 0 1",
    "1 0 0 0; -1 0 1 0; 1 1 -1 0; -1 -1 1 1",
    "0 0 1 0; 1 0 -1 0; 0 1 0 0; -1 -1 1 1",
];

/// ΨΦQ as twelve matrices.
pub const PSI_PHI_Q: [&str; 12] = [
    "1 0 0 0; 0 1 0 0; -1 -1 1 0; 0 0 -1 1",
    "1 0 0 0; 0 1 0 0; -1 -1 0 1; 0 0 1 -1",
    "1 0 0 0; -1 0 0 1; 1 1 0 -1; -1 -1 1 0",
    "0 0 0 1; 1 0 0 -1; 0 1 0 0; -1 -1 1 0",
    "1 0 0 0; -1 0 1 0; 1 1 -1 0; -1 -1 0 1",
    "1 0 0 0; -1 0 1 0; 0 0 -1 1; 1 1 0 -1",
    "1 0 0 0; -1 0 0 1; 0 0 1 -1; 1 1 -1 0",
    "0 0 0 1; 1 0 0 -1; -1 0 1 0; 1 1 -1 0",
    "0 0 1 0; 1 0 -1 0; 0 1 0 0; -1 -1 0 1",
    "0 0 1 0; 1 0 -1 0; -1 0 0 1; 1 1 0 -1",
    "0 0 1 0; 0 0 -1 1; 1 0 0 -1; 0 1 0 0",
    "0 0 0 1; 0 0 1 -1; 1 0 -1 0; 0 1 0 0",
];

pub const PSI_PHI_Q_BAR: [&str; 12] = [
    "1 0 0 0; 0 1 0 0; 1 1 1 0; 1 1 1 1",
    "1 0 0 0; 0 1 0 0; 1 1 1 1; 1 1 1 0",
    "1 0 0 0; 0 1 1 0; 1 1 1 1; 1 1 0 0",
    "1 1 0 0; 0 0 1 0; 1 1 1 1; 1 0 0 0",
    "1 0 0 0; 0 1 1 0; 1 1 0 0; 1 1 1 1",
    "1 0 0 0; 0 1 1 1; 1 1 0 0; 1 1 1 0",
    "1 0 0 0; 0 1 1 1; 1 1 1 0; 1 1 0 0",
    "1 1 0 0; 0 0 1 1; 1 1 1 0; 1 0 0 0",
    "1 1 0 0; 0 0 1 0; 1 0 0 0; 1 1 1 1",
    "1 1 0 0; 0 0 1 1; 1 0 0 0; 1 1 1 0",
    "1 1 1 0; 0 0 0 1; 1 0 0 0; 1 1 0 0",
    "1 1 1 0; 0 0 0 1; 1 1 0 0; 1 0 0 0",
];

pub const PHI_R_BAR: [&str; 3] = [
    "1 0 0 0; 0 1 0 0; 1 1 1 0; 0 0 0 1",
    "1 0 0 0; 0 1 1 0; 1 1 0 0; 0 0 1 1",
    "1 1 0 0; 0 0 1 0; 1 0 0 0; 0 1 1 1",
];

pub const PSI_S_BAR: [&str; 4] = [
    "1 0 0 0; 0 1 0 0; 0 0 1 0; 1 1 1 1",
    "1 0 0 0; 0 1 0 0; 0 0 1 1; 1 1 1 0",
    "1 0 0 0; 0 1 1 0; 0 0 0 1; 1 1 0 0",
    "1 1 0 0; 0 0 1 0; 0 0 0 1; 1 0 0 0",
];

/// bar(ΨS)·J, matrix by matrix.
pub const PSI_S_BAR_J: [&str; 4] = [
    "0 0 0 0; 0 1 0 0; 0 0 1 0; 0 1 1 1",
    "0 0 0 0; 0 1 0 0; 0 0 1 1; 0 1 1 0",
    "0 0 0 0; 0 1 1 0; 0 0 0 1; 0 1 0 0",
    "0 1 0 0; 0 0 1 0; 0 0 0 1; 0 0 0 0",
];

/// The twelve permutations making up sh₂,₄·S(⟨(34)⟩).
pub const SH24_S34: [&str; 12] =
    ["id", "(23)", "(24)", "(34)", "(13)(24)", "(123)", "(124)", "(234)", "(243)", "(1234)", "(1243)", "(1324)"];

pub const SH34: [&str; 4] = ["id", "(34)", "(234)", "(1234)"];
pub const SH24: [&str; 6] = ["id", "(23)", "(13)(24)", "(123)", "(243)", "(1243)"];

/// A congruence table: the acting element and `(x, right-hand side)` rows.
pub struct CongruenceTable {
    pub name: &'static str,
    pub rows: &'static [(&'static str, &'static str)],
}

/// x·bar(Ω).
pub const OMEGA_ROWS: &[(&str, &str)] = &[
    ("e1000", "e1111"),
    ("e1100", "2*e2221 - 2*e1221 + e2211 + e2111 - e1211 - 3*e1111"),
    ("e1100 - 1/2*e1010", "e2111 + 2*e1121 - 3*e1111"),
    ("e1100 + 1/2*e1010 + e1110 + 1/4*e1111", "6*e4321 - 6*e2321 - 2*e2121 - e1111"),
];

/// Intermediate values of x·bar(Ω) for the remaining basis vectors.
pub const OMEGA_INTERMEDIATE: &[(&str, &str)] = &[
    ("e1010", "4*e2221 - 4*e1221 - 4*e1121 + 2*e2211 - 2*e1211"),
    (
        "e1110",
        "-8*e2221 + 6*e3321 - 6*e2321 + 4*e3221 + 4*e1221 - 4*e2211 + 3*e1111 \
         + 2*e3211 + 2*e1211 + 2*e1121 - 2*e2121 - 2*e2111",
    ),
    ("e1111", "24*e4321 - 24*e3321 + 16*e2221 - 16*e3221 + 8*e2211 - 8*e3211 + 4*e2111 - 4*e1111"),
];

/// x·bar(P·S(𝔖₄)).
pub const TABLE_P_SYM4: &[(&str, &str)] = &[
    ("e1000", "6*e1111 + 6*e1110 + 6*e1100 + 6*e1000"),
    ("e1100", "4*e2221 + 4*e2211 + 4*e2210 + 4*e2111 + 4*e2110 + 4*e2100"),
    ("e1010", "4*e2221 + 4*e2211 + 4*e2210 + 4*e2111 + 4*e2110 + 4*e2100"),
    ("e1110", "6*e3321 + 6*e3221 + 6*e3211 + 6*e3210"),
    ("e1111", "24*e4321"),
];

/// x·bar(ΨΦQ·S(C₄)).
pub const TABLE_PSI_PHI_Q: &[(&str, &str)] = &[
    ("e1000", "12*e1000 + 10*e1100 + 8*e1110 + 6*e1111"),
    (
        "e1100",
        "6*e2100 + 6*e1111 + 5*e2110 + 4*e2210 + 4*e2111 + 4*e1110 + 3*e2211 + 2*e2221 + 2*e1221 \
         + 2*e1211 + 2*e1210 + 2*e1121 + 2*e1100 + e1101 + e1011 + e1010 + e1001",
    ),
    (
        "e1010",
        "8*e2100 + 6*e2110 + 4*e2210 + 4*e2111 + 4*e1221 + 4*e1211 + 4*e1210 + 4*e1121 \
         + 2*e2211 + 2*e1101 + 2*e1011 + 2*e1010 + 2*e1001",
    ),
    (
        "e1110",
        "8*e2221 + 6*e3210 + 6*e2321 + 6*e2211 + 4*e3211 + 4*e2210 + 4*e2121 + 4*e2111 \
         + 2*e3221 + 2*e2110 + 2*e2101",
    ),
    ("e1111", "24*e3321 + 16*e3221 + 8*e3211"),
];

/// x·bar(ΦR·S(C₄)).
pub const TABLE_PHI_R: &[(&str, &str)] = &[
    ("e1000", "3*e1000 + 2*e1100 + e1110"),
    ("e1100", "3*e1111 + 2*e1210 + 2*e1110 + e1211 + e1100 + e1011 + e1010 + e1001"),
    ("e1010", "4*e2100 + 2*e2110"),
    ("e1110", "2*e2210 + 2*e2111 + 2*e1221 + 2*e1121 + e2211 + e2110 + e1211 + e1101"),
    ("e1111", "8*e2221 + 4*e2211"),
];

/// x·bar(ΨS·S(C₄)).
pub const TABLE_PSI_S: &[(&str, &str)] = &[
    ("e1000", "4*e1000 + 2*e1100 + e1111 + e1110"),
    ("e1100", "2*e2100 + 2*e1121 + 2*e1110 + 2*e1100 + e2111 + e2110 + e1101 + e1001"),
    ("e1010", "4*e1210 + 4*e1010 + 2*e1211 + 2*e1101 + 2*e1011 + 2*e1001"),
    (
        "e1110",
        "3*e1111 + 2*e2210 + 2*e2121 + 2*e2101 + 2*e1221 + e2211 + e2110 + e1211 + e1110 + e1011",
    ),
    ("e1111", "8*e2221 + 4*e2211 + 4*e2111"),
];

/// x·bar(S(C₄)).
pub const TABLE_CYCLIC: &[(&str, &str)] = &[
    ("e1000", "e1000"),
    ("e1100", "e1100 + e1001"),
    ("e1010", "2*e1010"),
    ("e1110", "e1110 + e1101 + e1011"),
    ("e1111", "4*e1111"),
];

pub const TABLES: [CongruenceTable; 5] = [
    CongruenceTable { name: "p_sym4", rows: TABLE_P_SYM4 },
    CongruenceTable { name: "psi_phi_q_cyclic", rows: TABLE_PSI_PHI_Q },
    CongruenceTable { name: "phi_r_cyclic", rows: TABLE_PHI_R },
    CongruenceTable { name: "psi_s_cyclic", rows: TABLE_PSI_S },
    CongruenceTable { name: "cyclic", rows: TABLE_CYCLIC },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn parsers() {
        let m = parse_matrix("1 0; -1 1").unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1, 0], [-1, 1]]));
        assert!(parse_matrix("1 0; 1").is_err());
        let c = parse_combo("2*e2221 - e1221 + 1/2*e1010 - 1/4*e1111").unwrap();
        let want = VecCombo::zero()
            .plus([2, 2, 2, 1], rat(2, 1))
            .plus([1, 2, 2, 1], rat(-1, 1))
            .plus([1, 0, 1, 0], rat(1, 2))
            .plus([1, 1, 1, 1], rat(-1, 4));
        assert_eq!(c, want);
        assert!(parse_combo("2*x11").is_err());
        assert_eq!(parse_combo("e11 - e11").unwrap(), VecCombo::zero());
    }

    #[test]
    fn every_fixture_parses() {
        for list in [&PSI_S[..], &PHI_R[..], &PSI_PHI_Q[..], &PSI_PHI_Q_BAR[..], &PHI_R_BAR[..], &PSI_S_BAR[..]] {
            let g = matrix_sum(list).unwrap();
            assert_eq!(g.len(), list.len());
            assert!(g.terms().all(|(m, _)| m.is_unimodular()));
        }
        for t in &TABLES {
            for (x, rhs) in t.rows {
                parse_combo(x).unwrap();
                parse_combo(rhs).unwrap();
            }
        }
    }
}
