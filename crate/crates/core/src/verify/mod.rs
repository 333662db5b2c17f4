//! Oracle cross-checks: every closed form against exhaustive generation,
//! every bijection round-tripped, every Lagrange route against the others.
//!
//! Each suite returns a [`VerificationReport`]. Checks are exact; a report
//! passes iff it has no failures.

mod bijections;
mod cacti;
mod counts;
mod lagrange;
mod trees;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::model::Profile;
use crate::{Bounds, Error, Result};

/// How far the suites sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest total vertex count `Σ n_t` (plane trees: largest `n`).
    pub max_vertices: usize,
    /// Largest number of types.
    pub max_d: usize,
    /// Seed for the random substitutions of the determinant check.
    pub seed: u64,
    pub bounds: Bounds,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_vertices: 7,
            max_d: 3,
            seed: 20_240_917,
            bounds: Bounds::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Unitype,
    Gf,
    Determinant,
    Forests,
    Counts,
    Bijections,
    Lagrange,
    Cacti,
    Plane,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Unitype,
        Suite::Gf,
        Suite::Determinant,
        Suite::Forests,
        Suite::Counts,
        Suite::Bijections,
        Suite::Lagrange,
        Suite::Cacti,
        Suite::Plane,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Unitype => "unitype",
            Suite::Gf => "gf",
            Suite::Determinant => "determinant",
            Suite::Forests => "forests",
            Suite::Counts => "counts",
            Suite::Bijections => "bijections",
            Suite::Lagrange => "lagrange",
            Suite::Cacti => "cacti",
            Suite::Plane => "plane",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    /// Total number of failed cases; only the first few are kept below.
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Wall time in milliseconds.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

const KEPT_FAILURES: usize = 20;

/// Accumulates cases and failures for one suite.
#[derive(Default)]
pub(crate) struct Checker {
    cases: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl Checker {
    /// One case: `expected == actual`. `input` is only rendered on failure.
    pub(crate) fn eq<T, F>(&mut self, input: F, expected: T, actual: T)
    where
        T: PartialEq + fmt::Debug,
        F: FnOnce() -> String,
    {
        self.cases += 1;
        if expected != actual {
            self.fail(input(), format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    /// One case that must hold.
    pub(crate) fn holds<F: FnOnce() -> String>(&mut self, input: F, ok: bool) {
        self.eq(input, true, ok);
    }

    /// `cases` checks run in a tight loop; `violation` describes the first
    /// one that failed, if any.
    pub(crate) fn batch(&mut self, cases: u64, what: String, violation: Option<String>) {
        self.cases += cases;
        if let Some(v) = violation {
            self.fail(what, "no violation".into(), v);
        }
    }

    fn fail(&mut self, input: String, expected: String, actual: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(Failure { input, expected, actual });
        }
    }

    fn into_report(self, suite: Suite, start: Instant) -> VerificationReport {
        VerificationReport {
            suite: suite.name().to_string(),
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut ck = Checker::default();
    match suite {
        Suite::Unitype => trees::unitype(&mut ck, config)?,
        Suite::Gf => trees::gf(&mut ck, config)?,
        Suite::Determinant => trees::determinant(&mut ck, config)?,
        Suite::Forests => trees::forests(&mut ck, config)?,
        Suite::Counts => counts::counts(&mut ck, config)?,
        Suite::Bijections => bijections::bijections(&mut ck, config)?,
        Suite::Lagrange => lagrange::lagrange(&mut ck, config)?,
        Suite::Cacti => cacti::cacti(&mut ck, config)?,
        Suite::Plane => trees::plane(&mut ck, config)?,
    }
    Ok(ck.into_report(suite, start))
}

pub fn run_all(config: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    Suite::ALL.into_iter().map(|s| run_suite(s, config)).collect()
}

/// Every profile with `d ≤ max_d` types and `d ≤ Σ n_t ≤ max_vertices`, by
/// `d`, then total, then lexicographically.
pub(crate) fn profiles(max_d: usize, max_vertices: usize) -> Vec<Profile> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for total in d..=max_vertices {
            for c in compositions(total as u32, d, 1) {
                out.push(Profile::new(c).expect("positive entries"));
            }
        }
    }
    out
}

/// Sequences of `parts` integers `≥ min` summing to `total`, lexicographic.
pub(crate) fn compositions(total: u32, parts: usize, min: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn go(rest: u32, parts: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == parts {
            if rest >= min {
                cur.push(rest);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let reserve = min * (parts - cur.len() - 1) as u32;
        if rest < reserve + min {
            return;
        }
        for k in min..=rest - reserve {
            cur.push(k);
            go(rest - k, parts, min, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, min, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2, 1), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(3, 3, 0).len(), 10);
        assert_eq!(compositions(0, 0, 0), vec![Vec::<u32>::new()]);
        assert!(compositions(1, 2, 1).is_empty());
        assert_eq!(profiles(2, 3).len(), 3 + 3);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
