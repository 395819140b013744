//! The cross-check suites behind `qdivisor-lab verify`.
//!
//! Each suite sweeps one identity over an explicit range and reports the
//! smallest counterexample, if any. Detected disagreements are verification
//! failures (reported, exit code 2), not crashes; only unexpected internal
//! errors propagate.

use std::collections::BTreeSet;

use qdivisor_core::arithmetic::{divisors, sigma};
use qdivisor_core::erdos_nicolas::{
    erdos_nicolas_f, mean_f_table, means_strictly_increasing, window_count,
};
use qdivisor_core::kr_poly::{
    coefficient_value_set, g_of, largest_coefficient, polynomial,
};
use qdivisor_core::pythagorean::{has_close_divisor_pair, is_double_perimeter, perimeter_oracle};
use qdivisor_core::series_oracle::{expand_product, extract_polynomial};
use qdivisor_core::{Error, Result};

/// Outcome of one suite: the range it swept and the first counterexample.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub scale: u64,
    pub checked: u64,
    pub counterexample: Option<u64>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Upper bound the window-oracle suite is capped at (O(d^2) per n).
pub const WINDOW_ORACLE_CAP: u64 = 2_000;

/// Upper bound the triangle-search suite is capped at (O(n^2) per n).
pub const PYTHAGOREAN_CAP: u64 = 1_500;

/// Runs every suite; `max_n` scales the exhaustive sweeps and `oracle_max`
/// is the series truncation order for the expansion comparison.
pub fn run_all(max_n: u64, oracle_max: u64) -> Result<Vec<SuiteOutcome>> {
    Ok(vec![
        golden_p12()?,
        oracle_equivalence(oracle_max)?,
        largest_equals_f(max_n)?,
        checksum(max_n)?,
        palindrome(max_n)?,
        staircase(max_n)?,
        g_gap(max_n)?,
        reflection(max_n)?,
        window_oracle(max_n.min(WINDOW_ORACLE_CAP))?,
        pythagorean_equivalence(max_n.min(PYTHAGOREAN_CAP))?,
        divergence(max_n)?,
    ])
}

fn sweep(
    name: &'static str,
    scale: u64,
    mut check: impl FnMut(u64) -> Result<bool>,
) -> Result<SuiteOutcome> {
    let mut counterexample = None;
    let mut checked = 0;
    for n in 1..=scale {
        checked += 1;
        if !check(n)? {
            counterexample = Some(n);
            break;
        }
    }
    Ok(SuiteOutcome {
        name,
        scale,
        checked,
        counterexample,
    })
}

fn golden_p12() -> Result<SuiteOutcome> {
    let expected: Vec<u64> = [vec![1u64; 9], vec![2u64; 5], vec![1u64; 9]].concat();
    let pass = polynomial(12)?.full_coefficients() == expected;
    Ok(SuiteOutcome {
        name: "golden p12",
        scale: 12,
        checked: 1,
        counterexample: if pass { None } else { Some(12) },
    })
}

fn oracle_equivalence(oracle_max: u64) -> Result<SuiteOutcome> {
    let series = expand_product(oracle_max)?;
    sweep("oracle equivalence", oracle_max, |n| {
        match extract_polynomial(&series, n) {
            Ok(extracted) => Ok(extracted == polynomial(n)?),
            Err(Error::OracleSelfCheck(_)) | Err(Error::NotDivisible) => Ok(false),
            Err(other) => Err(other),
        }
    })
}

fn largest_equals_f(max_n: u64) -> Result<SuiteOutcome> {
    sweep("largest coefficient", max_n, |n| {
        Ok(largest_coefficient(n)? == erdos_nicolas_f(n)?.value())
    })
}

fn checksum(max_n: u64) -> Result<SuiteOutcome> {
    sweep("checksum", max_n, |n| {
        Ok(polynomial(n)?.value_at_one()? == sigma(n)?)
    })
}

fn palindrome(max_n: u64) -> Result<SuiteOutcome> {
    sweep("palindrome", max_n, |n| {
        let full = polynomial(n)?.full_coefficients();
        let len = full.len() as u64;
        let symmetric = (0..full.len() / 2).all(|i| full[i] == full[full.len() - 1 - i]);
        Ok(len == 2 * n - 1 && symmetric && full[0] == 1 && *full.last().unwrap() == 1)
    })
}

fn staircase(max_n: u64) -> Result<SuiteOutcome> {
    sweep("staircase", max_n, |n| {
        let expected: BTreeSet<u64> = (0..=largest_coefficient(n)?).collect();
        Ok(coefficient_value_set(n)? == expected)
    })
}

fn g_gap(max_n: u64) -> Result<SuiteOutcome> {
    sweep("g gap", max_n, |n| {
        let divs = divisors(2 * n)?;
        let mut previous: Option<i64> = None;
        for &y in divs.iter() {
            let value = g_of(n, y)?.value();
            if let Some(prev) = previous {
                if value - prev < 2 {
                    return Ok(false);
                }
            }
            previous = Some(value);
        }
        Ok(true)
    })
}

fn reflection(max_n: u64) -> Result<SuiteOutcome> {
    sweep("reflection", max_n, |n| {
        let two_n = 2 * n;
        for &y in divisors(two_n)?.iter() {
            if g_of(n, y)?.value() != -g_of(n, two_n / y)?.value() {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn window_oracle(max_n: u64) -> Result<SuiteOutcome> {
    sweep("window oracle", max_n, |n| {
        let f = erdos_nicolas_f(n)?;
        f.validate()?;
        let mut best = 0;
        for &t in divisors(n)?.iter() {
            let count = window_count(n, t as i64, 1)?;
            if count > f.value() {
                return Ok(false);
            }
            best = best.max(count);
        }
        Ok(best == f.value())
    })
}

fn pythagorean_equivalence(max_n: u64) -> Result<SuiteOutcome> {
    sweep("pythagorean", max_n, |n| {
        let by_pair = has_close_divisor_pair(n)?.is_some();
        let by_coefficient = largest_coefficient(n)? > 1;
        let by_triangle = perimeter_oracle(2 * n)?.is_some();
        let decision = match is_double_perimeter(n) {
            Ok(d) => d,
            Err(Error::InvariantBreach(_)) => return Ok(false),
            Err(other) => return Err(other),
        };
        Ok(by_pair == by_coefficient
            && by_pair == by_triangle
            && by_pair == decision.is_perimeter)
    })
}

fn divergence(max_n: u64) -> Result<SuiteOutcome> {
    let checkpoints: Vec<u64> = [100u64, 1_000, 10_000, 100_000, 1_000_000]
        .into_iter()
        .filter(|&x| x <= max_n)
        .collect();
    let checked = checkpoints.len() as u64;
    let pass = if checkpoints.len() < 2 {
        true
    } else {
        means_strictly_increasing(&mean_f_table(&checkpoints)?)
    };
    Ok(SuiteOutcome {
        name: "divergence",
        scale: max_n,
        checked,
        counterexample: if pass { None } else { Some(0) },
    })
}
