//! Run configuration and its validation.

use std::fmt;
use std::str::FromStr;

use crate::error::{MzvError, Result};

pub const MIN_DIGITS: u32 = 20;
pub const WEIGHT_FLOOR: u32 = 5;
pub const WEIGHT_CAP: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Exact,
    Theorem,
    Corollary,
    Props,
    Cyclic,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Exact, Suite::Theorem, Suite::Corollary, Suite::Props, Suite::Cyclic, Suite::Appendix];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Theorem => "theorem",
            Suite::Corollary => "corollary",
            Suite::Props => "props",
            Suite::Cyclic => "cyclic",
            Suite::Appendix => "appendix",
        }
    }

    /// Parse a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = MzvError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| MzvError::Config(format!("unknown suite {s:?} (expected exact|theorem|corollary|props|cyclic|appendix|all)")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub digits: u32,
    pub weights: (u32, u32),
    pub tol: f64,
    pub suites: Vec<Suite>,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Self { digits: 50, weights: (5, 10), tol: 1e-30, suites: Suite::ALL.to_vec(), jobs: None }
    }
}

/// Parse `A..B` (inclusive).
pub fn parse_weights(s: &str) -> Result<(u32, u32)> {
    let err = || MzvError::Config(format!("weight range {s:?} is not of the form A..B"));
    let (a, b) = s.split_once("..").ok_or_else(err)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((a.trim().parse().map_err(|_| err())?, b.trim().parse().map_err(|_| err())?))
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.digits < MIN_DIGITS {
            return Err(MzvError::Config(format!("digits must be at least {MIN_DIGITS}, got {}", self.digits)));
        }
        let floor = 10f64.powi(10 - self.digits as i32);
        if !self.tol.is_finite() || self.tol <= floor {
            return Err(MzvError::Config(format!("tolerance {:e} must exceed 1e{}", self.tol, 10 - self.digits as i32)));
        }
        let (lo, hi) = self.weights;
        if lo > hi {
            return Err(MzvError::Config(format!("empty weight range {lo}..{hi}")));
        }
        if lo < WEIGHT_FLOOR || hi > WEIGHT_CAP {
            return Err(MzvError::Config(format!("weight range {lo}..{hi} must lie within {WEIGHT_FLOOR}..{WEIGHT_CAP}")));
        }
        if self.suites.is_empty() {
            return Err(MzvError::Config("no suites selected".into()));
        }
        if self.jobs == Some(0) {
            return Err(MzvError::Config("jobs must be positive".into()));
        }
        Ok(())
    }

    pub fn has(&self, s: Suite) -> bool {
        self.suites.contains(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        Config::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_configs() {
        let bad = [
            Config { digits: 19, ..Config::default() },
            Config { tol: 1e-45, ..Config::default() },
            Config { tol: f64::NAN, ..Config::default() },
            Config { weights: (5, 4), ..Config::default() },
            Config { weights: (4, 8), ..Config::default() },
            Config { weights: (5, 17), ..Config::default() },
            Config { suites: vec![], ..Config::default() },
            Config { jobs: Some(0), ..Config::default() },
        ];
        for c in bad {
            assert!(matches!(c.validate(), Err(MzvError::Config(_))), "{c:?}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_weights("5..8").unwrap(), (5, 8));
        assert_eq!(parse_weights("5..=8").unwrap(), (5, 8));
        assert!(parse_weights("5-8").is_err());
        assert_eq!(Suite::parse_list("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(Suite::parse_list("props,exact,exact").unwrap(), vec![Suite::Exact, Suite::Props]);
        assert!(Suite::parse_list("nothing").is_err());
    }
}
