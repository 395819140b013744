//! The divisor-window function F(n): the maximum number of divisors of n
//! in any half-open interval (t/2, t], together with a certifying chain.
//!
//! A window of divisors d_1 < ... < d_h with d_h < 2*d_1 fits in the
//! interval (d_h/2, d_h], and conversely any (t/2, t] window yields such a
//! chain, so F(n) is the longest run of divisors whose extremes stay within
//! a factor of two. The sweep below walks the sorted divisor list with two
//! pointers; shrinking t down to the largest divisor it contains loses
//! nothing, so only divisor right-endpoints need to be considered (the
//! brute-force cross-check in the test suite confirms this).

use std::fmt;

use crate::arithmetic::divisors;
use crate::error::{Error, Result};

/// Bound on n so that 2*d fits in u64 for every divisor d.
pub const MAX_N_F: u64 = 1 << 62;

/// Largest checkpoint `mean_f_table` accepts.
pub const MAX_MEAN_CHECKPOINT: u64 = 10_000_000;

/// A maximal divisor chain d_1 < ... < d_h < 2*d_1 certifying F(n) = h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowWitness {
    n: u64,
    value: u64,
    chain: Vec<u64>,
    t_endpoint: u64,
}

impl WindowWitness {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// F(n).
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The divisors d_1 < ... < d_h with d_h < 2*d_1.
    pub fn chain(&self) -> &[u64] {
        &self.chain
    }

    /// The divisor d_h chosen as the window right endpoint.
    pub fn t_endpoint(&self) -> u64 {
        self.t_endpoint
    }

    /// Re-checks the witness invariants.
    pub fn validate(&self) -> Result<()> {
        if self.chain.is_empty() || self.chain.len() as u64 != self.value {
            return Err(Error::InvariantBreach("witness chain length != value"));
        }
        if !self.chain.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvariantBreach("witness chain not increasing"));
        }
        if self.chain.iter().any(|&d| d == 0 || self.n % d != 0) {
            return Err(Error::InvariantBreach("witness chain element not a divisor"));
        }
        let first = self.chain[0];
        let last = *self.chain.last().expect("nonempty");
        if last >= 2 * first {
            return Err(Error::InvariantBreach("witness chain spans a factor of two"));
        }
        if self.t_endpoint != last {
            return Err(Error::InvariantBreach("witness endpoint != last chain element"));
        }
        Ok(())
    }
}

impl fmt::Display for WindowWitness {
    /// `F(12) = 2, witness divisors 2 < 3 < 4 = 2*2` (bare `F(n) = 1` when
    /// the chain is a single divisor).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({}) = {}", self.n, self.value)?;
        if self.value > 1 {
            f.write_str(", witness divisors ")?;
            for d in &self.chain {
                write!(f, "{d} < ")?;
            }
            write!(f, "{} = 2*{}", 2 * self.chain[0], self.chain[0])?;
        }
        Ok(())
    }
}

/// Counts divisors of n in the half-open window (t/2, t] for a positive
/// rational t = num/den. All comparisons are exact cross-multiplications.
pub fn window_count(n: u64, t_num: i64, t_den: i64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n >= MAX_N_F {
        return Err(Error::OutOfRange {
            what: "window count",
            n,
            limit: MAX_N_F,
        });
    }
    if t_num <= 0 || t_den <= 0 {
        return Err(Error::NonPositiveBound {
            num: t_num,
            den: t_den,
        });
    }
    let num = t_num as i128;
    let den = t_den as i128;
    let divs = divisors(n)?;
    let count = divs
        .iter()
        .filter(|&&d| {
            let d = d as i128;
            // t/2 < d  <=>  num < 2*d*den;   d <= t  <=>  d*den <= num
            num < 2 * d * den && d * den <= num
        })
        .count();
    Ok(count as u64)
}

/// Longest window in a sorted divisor slice: returns (start, end) indices,
/// inclusive, of the first maximal window (smallest d_1 on ties).
fn max_window(divs: &[u64]) -> (usize, usize) {
    let mut best = (0usize, 0usize);
    let mut best_len = 1usize;
    let mut left = 0usize;
    for right in 0..divs.len() {
        while divs[right] >= 2 * divs[left] {
            left += 1;
        }
        let len = right - left + 1;
        if len > best_len {
            best_len = len;
            best = (left, right);
        }
    }
    best
}

/// F(n) with a certifying witness chain, via a two-pointer sweep over the
/// sorted divisor list. Among equal-length maximal windows the one with
/// the smallest first divisor is reported.
pub fn erdos_nicolas_f(n: u64) -> Result<WindowWitness> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n >= MAX_N_F {
        return Err(Error::OutOfRange {
            what: "F",
            n,
            limit: MAX_N_F,
        });
    }
    let divs = divisors(n)?;
    let (left, right) = max_window(divs.as_slice());
    let chain = divs.as_slice()[left..=right].to_vec();
    let witness = WindowWitness {
        n,
        value: chain.len() as u64,
        t_endpoint: *chain.last().expect("window is nonempty"),
        chain,
    };
    debug_assert!(witness.validate().is_ok());
    Ok(witness)
}

/// F(n) alone, for bulk scans: same sweep, no witness allocation.
pub fn f_value(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n >= MAX_N_F {
        return Err(Error::OutOfRange {
            what: "F",
            n,
            limit: MAX_N_F,
        });
    }
    let divs = divisors(n)?;
    let (left, right) = max_window(divs.as_slice());
    Ok((right - left + 1) as u64)
}

/// One row of the running-mean table: the exact mean of F over n <= x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeanPoint {
    x: u64,
    sum: u64,
    numerator: u64,
    denominator: u64,
}

impl MeanPoint {
    pub fn x(&self) -> u64 {
        self.x
    }

    /// The raw sum of F(n) for n <= x.
    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// Reduced numerator of the mean sum/x.
    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    /// Reduced denominator of the mean sum/x.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// The mean rounded to six decimal places, e.g. `1.000000`.
    pub fn decimal(&self) -> String {
        const SCALE: u128 = 1_000_000;
        let scaled =
            (u128::from(self.sum) * SCALE * 2 + u128::from(self.x)) / (2 * u128::from(self.x));
        format!("{}.{:06}", scaled / SCALE, scaled % SCALE)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Running mean of F at each checkpoint, computed in a single cumulative
/// pass over n = 1..=max(checkpoints). Checkpoints must be positive,
/// strictly increasing and at most `MAX_MEAN_CHECKPOINT`.
pub fn mean_f_table(checkpoints: &[u64]) -> Result<Vec<MeanPoint>> {
    if checkpoints.is_empty() {
        return Ok(Vec::new());
    }
    if checkpoints[0] == 0 {
        return Err(Error::UnsortedCheckpoints);
    }
    if !checkpoints.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::UnsortedCheckpoints);
    }
    let max = *checkpoints.last().expect("nonempty");
    if max > MAX_MEAN_CHECKPOINT {
        return Err(Error::CheckpointTooLarge {
            x: max,
            max: MAX_MEAN_CHECKPOINT,
        });
    }

    let mut table = Vec::with_capacity(checkpoints.len());
    let mut sum = 0u64;
    let mut next = 0usize;
    for n in 1..=max {
        sum = sum
            .checked_add(f_value(n)?)
            .ok_or(Error::Overflow("mean table sum"))?;
        if checkpoints[next] == n {
            let g = gcd(sum, n);
            table.push(MeanPoint {
                x: n,
                sum,
                numerator: sum / g,
                denominator: n / g,
            });
            next += 1;
            if next == checkpoints.len() {
                break;
            }
        }
    }
    Ok(table)
}

/// Whether the means are strictly increasing, compared as exact fractions.
pub fn means_strictly_increasing(table: &[MeanPoint]) -> bool {
    table.windows(2).all(|w| {
        u128::from(w[0].numerator) * u128::from(w[1].denominator)
            < u128::from(w[1].numerator) * u128::from(w[0].denominator)
    })
}
