//! Exact integer arithmetic: factorization, sorted divisor enumeration and
//! the sum of divisors.
//!
//! Everything here is deterministic and uses checked 64-bit arithmetic.
//! Inputs are positive integers below 2^63; anything else is rejected with
//! an error rather than wrapped around.

use crate::error::{Error, Result};

/// Inputs must satisfy `1 <= n < MAX_INPUT`.
pub const MAX_INPUT: u64 = 1 << 63;

/// A prime together with its exponent in a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// Prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and the product of `prime^exponent`
/// recovers `n` exactly. `n = 1` has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Number of divisors, `prod (exponent + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|pp| u64::from(pp.exponent) + 1)
            .product()
    }

    /// Re-checks the structural invariants. Cheap except for the primality
    /// test on each factor; meant for test builds and sanity sweeps.
    pub fn validate(&self) -> Result<()> {
        let mut product: u64 = 1;
        let mut last_prime = 0u64;
        for pp in &self.factors {
            if pp.prime <= last_prime {
                return Err(Error::InvariantBreach("factor primes not increasing"));
            }
            if pp.exponent == 0 {
                return Err(Error::InvariantBreach("zero exponent in factorization"));
            }
            if !is_prime(pp.prime) {
                return Err(Error::InvariantBreach("composite entry in factorization"));
            }
            last_prime = pp.prime;
            for _ in 0..pp.exponent {
                product = product
                    .checked_mul(pp.prime)
                    .ok_or(Error::Overflow("factorization product"))?;
            }
        }
        if product != self.n {
            return Err(Error::InvariantBreach("factorization product != n"));
        }
        Ok(())
    }
}

/// All divisors of a positive integer, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.divisors.iter()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.divisors
    }
}

fn check_range(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n >= MAX_INPUT {
        return Err(Error::OutOfRange {
            what,
            n,
            limit: MAX_INPUT,
        });
    }
    Ok(())
}

/// Deterministic primality test for the full `u64` range.
///
/// Strong-probable-prime test to the twelve bases 2..=37, which is known to
/// be exact for every n < 2^64. No randomness is involved.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    match n {
        0 | 1 => return false,
        2 | 3 => return true,
        _ => {}
    }
    if n % 2 == 0 {
        return false;
    }
    let trailing = (n - 1).trailing_zeros();
    let odd_part = (n - 1) >> trailing;
    'bases: for &base in &BASES {
        let base = base % n;
        if base == 0 {
            continue;
        }
        let mut x = pow_mod(base, odd_part, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime-power decomposition by trial division: 2, 3, then 6k +/- 1 up to
/// the square root of the remaining cofactor.
pub fn factorize(n: u64) -> Result<Factorization> {
    check_range(n, "factorize")?;
    let mut remaining = n;
    let mut factors = Vec::new();

    let mut strip = |p: u64, remaining: &mut u64| {
        let mut exponent = 0u32;
        while *remaining % p == 0 {
            *remaining /= p;
            exponent += 1;
        }
        if exponent > 0 {
            factors.push(PrimePower { prime: p, exponent });
        }
    };

    strip(2, &mut remaining);
    strip(3, &mut remaining);
    let mut candidate = 5u64;
    while candidate
        .checked_mul(candidate)
        .is_some_and(|sq| sq <= remaining)
    {
        strip(candidate, &mut remaining);
        strip(candidate + 2, &mut remaining);
        candidate += 6;
    }
    if remaining > 1 {
        factors.push(PrimePower {
            prime: remaining,
            exponent: 1,
        });
    }

    let result = Factorization { n, factors };
    debug_assert!(result.validate().is_ok());
    Ok(result)
}

/// Sorted list of every divisor of `n`, generated from the prime-power
/// decomposition and sorted once at the end.
pub fn divisors(n: u64) -> Result<DivisorList> {
    check_range(n, "divisors")?;
    let factorization = factorize(n)?;
    let mut divs: Vec<u64> = Vec::with_capacity(factorization.divisor_count() as usize);
    divs.push(1);
    for pp in factorization.factors() {
        let prior = divs.len();
        let mut power = 1u64;
        for _ in 0..pp.exponent {
            power *= pp.prime; // exact: power divides n
            for idx in 0..prior {
                divs.push(divs[idx] * power);
            }
        }
    }
    divs.sort_unstable();
    debug_assert!(divs.windows(2).all(|w| w[0] < w[1]));
    debug_assert_eq!(divs.len() as u64, factorization.divisor_count());
    Ok(DivisorList { n, divisors: divs })
}

/// Sum of all divisors of `n`, with overflow detected and reported.
pub fn sigma(n: u64) -> Result<u64> {
    let divs = divisors(n)?;
    let mut total = 0u64;
    for &d in divs.iter() {
        total = total.checked_add(d).ok_or(Error::Overflow("sigma"))?;
    }
    Ok(total)
}
