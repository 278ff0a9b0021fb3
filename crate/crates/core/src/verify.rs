//! Published cycle counts and a harness that checks enumeration against them.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::enumeration::{enumerate, Algorithm, EnumerationError, EnumerationOptions, MAX_LENGTH};

/// Known `(total, simple)` counts per cycle length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedCounts {
    rows: BTreeMap<usize, (u64, u64)>,
}

impl ExpectedCounts {
    /// Counts of inequivalent and of non-self-intersecting closed knight
    /// paths for every even length up to 16, as published.
    pub fn published() -> Self {
        let rows = [
            (4, (3, 3)),
            (6, (25, 13)),
            (8, (480, 178)),
            (10, (12_000, 3_034)),
            (12, (350_256, 64_877)),
            (14, (10_780_549, 1_503_790)),
            (16, (344_680_960, 36_930_111)),
        ];
        ExpectedCounts {
            rows: rows.into_iter().collect(),
        }
    }

    pub fn get(&self, k: usize) -> Option<(u64, u64)> {
        self.rows.get(&k).copied()
    }

    pub fn set(&mut self, k: usize, total: u64, simple: u64) {
        self.rows.insert(k, (total, simple));
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }
}

impl Default for ExpectedCounts {
    fn default() -> Self {
        Self::published()
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("maximum length {0} must be an even value in 4..=16")]
    InvalidMaxLength(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(
        "k={k} ({algorithm}): expected {expected_total}/{expected_simple}, got {total}/{simple}"
    )]
    Mismatch {
        k: usize,
        algorithm: Algorithm,
        expected_total: u64,
        expected_simple: u64,
        total: u64,
        simple: u64,
    },
}

#[derive(Debug, Clone)]
pub struct VerificationRow {
    pub k: usize,
    pub algorithm: Algorithm,
    pub expected_total: u64,
    pub expected_simple: u64,
    pub total: u64,
    pub simple: u64,
    pub elapsed: Duration,
}

impl VerificationRow {
    pub fn passed(&self) -> bool {
        self.total == self.expected_total && self.simple == self.expected_simple
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(VerificationRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows.iter().filter(|r| !r.passed())
    }

    /// The first mismatch as an error, if any.
    pub fn into_result(self) -> Result<Self, VerifyError> {
        if let Some(r) = self.failures().next() {
            return Err(VerifyError::Mismatch {
                k: r.k,
                algorithm: r.algorithm,
                expected_total: r.expected_total,
                expected_simple: r.expected_simple,
                total: r.total,
                simple: r.simple,
            });
        }
        Ok(self)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3}  {:<5} {:>12} {:>12} {:>12} {:>12}  {:>10}  status",
            "k", "alg", "total", "expected", "simple", "expected", "elapsed"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3}  {:<5} {:>12} {:>12} {:>12} {:>12}  {:>9.3}s  {}",
                r.k,
                r.algorithm.name(),
                r.total,
                r.expected_total,
                r.simple,
                r.expected_simple,
                r.elapsed.as_secs_f64(),
                if r.passed() { "PASS" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Enumerates every even length from 4 to `k_max` with each algorithm and
/// compares against the published counts.
pub fn verify_tables(
    k_max: usize,
    algorithms: &[Algorithm],
    jobs: usize,
) -> Result<VerificationReport, VerifyError> {
    verify_against(
        &ExpectedCounts::published(),
        k_max,
        algorithms,
        &EnumerationOptions::default().with_jobs(jobs),
    )
}

pub fn verify_against(
    expected: &ExpectedCounts,
    k_max: usize,
    algorithms: &[Algorithm],
    options: &EnumerationOptions,
) -> Result<VerificationReport, VerifyError> {
    if k_max < 4 || k_max % 2 == 1 || k_max > MAX_LENGTH {
        return Err(VerifyError::InvalidMaxLength(k_max));
    }
    let options = EnumerationOptions {
        count_simple: true,
        ..options.clone()
    };
    let mut report = VerificationReport::default();
    for k in (4..=k_max).step_by(2) {
        let Some((expected_total, expected_simple)) = expected.get(k) else {
            continue;
        };
        for &algorithm in algorithms {
            let summary = enumerate(k, algorithm, &options, None)?;
            report.rows.push(VerificationRow {
                k,
                algorithm,
                expected_total,
                expected_simple,
                total: summary.total,
                simple: summary.simple.unwrap_or(0),
                elapsed: summary.elapsed,
            });
        }
    }
    Ok(report)
}
