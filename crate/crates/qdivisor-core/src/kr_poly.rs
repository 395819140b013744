//! The q-analog P_n(q) of the sum of divisors, computed coefficient by
//! coefficient from a divisor-interval formula.
//!
//! P_n(q) is monic of degree 2n-2, palindromic, and satisfies
//! P_n(1) = sigma(n). Writing
//!
//! ```text
//! P_n(q) / q^(n-1) = sum over i of a(n,i) * q^i,
//! ```
//!
//! the coefficient a(n,i) counts the divisors d of n with
//! g(d) <= 2i < g(2d), where
//!
//! ```text
//! g(y) = y - 2n/y.
//! ```
//!
//! On divisors of 2n the map g is integral, strictly increasing, and
//! satisfies the reflection g(y) = -g(2n/y). Its inverse is
//! f(x) = (x + sqrt(8n + x^2))/2; the 8n radicand is what makes the
//! round-trips g(f(x)) = x and f(g(y)) = y hold, and the test suite checks
//! the interval condition against an exact evaluation of that radical.
//! The implementation itself never evaluates f: every interval test is done
//! in integer arithmetic through g, so results are bit-exact.
//!
//! Divisor d contributes +1 to exactly the indices i in
//! `[ceil(g(d)/2), ceil(g(2d)/2) - 1]`, a nonempty range because
//! consecutive divisors of 2n have g-gap at least 2. `polynomial` exploits
//! this with a difference array over i in [-(n-1), n-1] followed by one
//! prefix sum, which is O(d(n) + n) instead of O(d(n) * n).

use std::collections::BTreeSet;
use std::fmt;

use crate::arithmetic::divisors;
use crate::error::{Error, Result};

/// Bound for g evaluation: keeps 2n and every g value inside `i64`.
pub const MAX_N_G: u64 = 1 << 62;

/// Bound for `polynomial`: a coefficient array of length 2n-1 is allocated.
pub const MAX_N_POLY: u64 = 1 << 31;

/// The value of g at a divisor y of 2n: `y - 2n/y`, an exact integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GValue {
    n: u64,
    y: u64,
    value: i64,
}

impl GValue {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn value(&self) -> i64 {
        self.value
    }
}

fn check_n(n: u64, what: &'static str, limit: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n >= limit {
        return Err(Error::OutOfRange { what, n, limit });
    }
    Ok(())
}

/// Evaluates g(y) = y - 2n/y, defined only where y divides 2n (there g is
/// an integer; elsewhere it is not needed).
pub fn g_of(n: u64, y: u64) -> Result<GValue> {
    check_n(n, "g", MAX_N_G)?;
    let two_n = 2 * n;
    if y == 0 || two_n % y != 0 {
        return Err(Error::NotADivisor { y, two_n });
    }
    let value = y as i64 - (two_n / y) as i64;
    Ok(GValue { n, y, value })
}

/// ceil(x / 2) for signed x.
fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// g(d) and g(2d) for a divisor d of n, without revalidating divisibility.
#[inline]
fn g_pair(n: u64, d: u64) -> (i64, i64) {
    debug_assert!(n % d == 0);
    let g_d = d as i64 - (2 * n / d) as i64;
    let g_2d = (2 * d) as i64 - (n / d) as i64;
    (g_d, g_2d)
}

/// The index interval [lo, hi] that divisor d covers: exactly the integers
/// i with g(d) <= 2i < g(2d).
#[inline]
fn index_interval(n: u64, d: u64) -> (i64, i64) {
    let (g_d, g_2d) = g_pair(n, d);
    let lo = ceil_half(g_d);
    let hi = ceil_half(g_2d) - 1;
    debug_assert!(lo <= hi);
    (lo, hi)
}

/// The coefficient a(n,i) of q^(n-1+i) in P_n(q): the number of divisors d
/// of n with g(d) <= 2i < g(2d). Zero whenever |i| >= n.
pub fn coefficient_at(n: u64, i: i64) -> Result<u64> {
    check_n(n, "coefficient", MAX_N_G)?;
    if i.unsigned_abs() >= n {
        return Ok(0);
    }
    let divs = divisors(n)?;
    let doubled = 2 * i;
    let count = divs
        .iter()
        .filter(|&&d| {
            let (g_d, g_2d) = g_pair(n, d);
            g_d <= doubled && doubled < g_2d
        })
        .count();
    Ok(count as u64)
}

/// The polynomial P_n(q), stored as the half vector [a(n,0), ..., a(n,n-1)];
/// the coefficient of q^(n-1+i) and of q^(n-1-i) is a(n,i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrPolynomial {
    n: u64,
    half: Vec<u64>,
}

impl KrPolynomial {
    /// Builds the polynomial from its full ascending coefficient vector
    /// (q^0 up to q^(2n-2)), validating shape: length 2n-1, palindromic,
    /// extreme coefficients 1. Interior coefficients may be zero (the
    /// central one is, for example, whenever n is an odd prime).
    pub fn from_full_coefficients(n: u64, full: Vec<u64>) -> Result<Self> {
        check_n(n, "polynomial", MAX_N_POLY)?;
        let len = (2 * n - 1) as usize;
        if full.len() != len {
            return Err(Error::InvariantBreach("coefficient vector length != 2n-1"));
        }
        let half_len = n as usize;
        for i in 0..half_len {
            if full[len - 1 - i] != full[i] {
                return Err(Error::InvariantBreach("coefficient vector not palindromic"));
            }
        }
        if full[0] != 1 || full[len - 1] != 1 {
            return Err(Error::InvariantBreach("extreme coefficients != 1"));
        }
        let half = full[half_len - 1..].to_vec();
        Ok(KrPolynomial { n, half })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Degree 2n-2.
    pub fn degree(&self) -> u64 {
        2 * self.n - 2
    }

    /// [a(n,0), ..., a(n,n-1)].
    pub fn half(&self) -> &[u64] {
        &self.half
    }

    /// a(n,i), for any integer i (zero once |i| >= n).
    pub fn coefficient_centered(&self, i: i64) -> u64 {
        let abs = i.unsigned_abs();
        if abs >= self.n {
            0
        } else {
            self.half[abs as usize]
        }
    }

    /// Coefficient of q^power.
    pub fn coefficient_of_power(&self, power: u64) -> u64 {
        if power > self.degree() {
            return 0;
        }
        let center = self.n - 1;
        let dist = power.abs_diff(center);
        self.half[dist as usize]
    }

    /// Full ascending coefficient vector, q^0 up to q^(2n-2).
    pub fn full_coefficients(&self) -> Vec<u64> {
        let mut full: Vec<u64> = self.half.iter().rev().copied().collect();
        full.extend_from_slice(&self.half[1..]);
        full
    }

    /// The largest coefficient.
    pub fn largest(&self) -> u64 {
        *self.half.iter().max().expect("half vector is nonempty")
    }

    /// P_n(1) = a(n,0) + 2 * sum of the rest; equals sigma(n).
    pub fn value_at_one(&self) -> Result<u64> {
        let mut total = self.half[0];
        for &a in &self.half[1..] {
            let doubled = a.checked_mul(2).ok_or(Error::Overflow("P_n(1)"))?;
            total = total
                .checked_add(doubled)
                .ok_or(Error::Overflow("P_n(1)"))?;
        }
        Ok(total)
    }
}

impl fmt::Display for KrPolynomial {
    /// Descending powers, e.g. `q^4 + 2*q^3 + q^2 + q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let full = self.full_coefficients();
        let mut first = true;
        for (power, &coeff) in full.iter().enumerate().rev() {
            if coeff == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&term_string(coeff, power as u64))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// One monomial in display form: `1`, `q`, `q^5`, `2*q`, `3*q^7`, ...
pub fn term_string(coeff: u64, power: u64) -> String {
    match (coeff, power) {
        (c, 0) => format!("{c}"),
        (1, 1) => "q".to_string(),
        (1, p) => format!("q^{p}"),
        (c, 1) => format!("{c}*q"),
        (c, p) => format!("{c}*q^{p}"),
    }
}

/// Computes P_n(q) by accumulating every divisor's index interval into a
/// difference array over i in [-(n-1), n-1], prefix-summing, and folding
/// the (verified) palindrome onto the half vector.
pub fn polynomial(n: u64) -> Result<KrPolynomial> {
    check_n(n, "polynomial", MAX_N_POLY)?;
    let divs = divisors(n)?;
    let len = (2 * n - 1) as usize;

    let mut diff: Vec<i64> = Vec::new();
    diff.try_reserve_exact(len + 1)
        .map_err(|_| Error::Allocation {
            len: (len + 1) as u64,
        })?;
    diff.resize(len + 1, 0);

    let shift = (n - 1) as i64;
    for &d in divs.iter() {
        let (lo, hi) = index_interval(n, d);
        diff[(lo + shift) as usize] += 1;
        diff[(hi + shift + 1) as usize] -= 1;
    }

    let mut full: Vec<u64> = Vec::new();
    full.try_reserve_exact(len)
        .map_err(|_| Error::Allocation { len: len as u64 })?;
    let mut running = 0i64;
    for &delta in &diff[..len] {
        running += delta;
        debug_assert!(running >= 0);
        full.push(running as u64);
    }
    KrPolynomial::from_full_coefficients(n, full)
}

/// The largest coefficient of P_n(q), computed by sweeping the divisor
/// index intervals without materializing the coefficient array.
pub fn largest_coefficient(n: u64) -> Result<u64> {
    check_n(n, "largest coefficient", MAX_N_POLY)?;
    let divs = divisors(n)?;
    let mut events: Vec<(i64, i64)> = Vec::with_capacity(2 * divs.len());
    for &d in divs.iter() {
        let (lo, hi) = index_interval(n, d);
        events.push((lo, 1));
        events.push((hi + 1, -1));
    }
    events.sort_unstable();
    let mut best = 0i64;
    let mut depth = 0i64;
    let mut idx = 0;
    while idx < events.len() {
        let pos = events[idx].0;
        while idx < events.len() && events[idx].0 == pos {
            depth += events[idx].1;
            idx += 1;
        }
        best = best.max(depth);
    }
    Ok(best as u64)
}

/// The set of values taken by the coefficients a(n,i) over all integers i,
/// including the zero attained once |i| >= n.
pub fn coefficient_value_set(n: u64) -> Result<BTreeSet<u64>> {
    let poly = polynomial(n)?;
    let mut set: BTreeSet<u64> = poly.half().iter().copied().collect();
    set.insert(0);
    Ok(set)
}
