//! Laurent polynomials in q with 64-bit integer coefficients.
//!
//! A polynomial is stored as its lowest exponent (`offset`) plus a dense
//! coefficient vector. The representation is kept normalized: the first and
//! last stored coefficients are nonzero, and the zero polynomial is the
//! empty vector with offset 0. All arithmetic is checked; overflow surfaces
//! as an error instead of wrapping.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: vec![1],
        }
    }

    /// `coeff * q^exponent`.
    pub fn monomial(coeff: i64, exponent: i64) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        LaurentPoly {
            offset: exponent,
            coeffs: vec![coeff],
        }
    }

    /// Builds from a dense vector where `coeffs[k]` is the coefficient of
    /// `q^(offset + k)`, trimming zero fringes.
    pub fn from_coefficients(offset: i64, coeffs: Vec<i64>) -> Self {
        let mut poly = LaurentPoly { offset, coeffs };
        poly.normalize();
        poly
    }

    fn normalize(&mut self) {
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros == self.coeffs.len() {
            self.offset = 0;
            self.coeffs.clear();
            return;
        }
        let trailing_zeros = self.coeffs.iter().rev().take_while(|&&c| c == 0).count();
        self.coeffs.truncate(self.coeffs.len() - trailing_zeros);
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.offset += leading_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero poly.
    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero poly.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    /// Dense coefficients from `min_exp` upward.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^exponent`.
    pub fn coefficient(&self, exponent: i64) -> i64 {
        if self.is_zero() {
            return 0;
        }
        let idx = exponent - self.offset;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    /// The same polynomial multiplied by `q^delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset.checked_add(delta).expect("exponent overflow"),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.offset.min(rhs.offset);
        let hi = (self.max_exp().expect("nonzero")).max(rhs.max_exp().expect("nonzero"));
        let mut out = vec![0i64; (hi - lo + 1) as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(self.offset - lo) as usize + k] = c;
        }
        for (k, &c) in rhs.coeffs.iter().enumerate() {
            let slot = (rhs.offset - lo) as usize + k;
            out[slot] = out[slot]
                .checked_add(c)
                .ok_or(Error::Overflow("Laurent addition"))?;
        }
        Ok(Self::from_coefficients(lo, out))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.scaled(-1)?)
    }

    /// Every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: i64) -> Result<Self> {
        if factor == 0 || self.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(
                c.checked_mul(factor)
                    .ok_or(Error::Overflow("Laurent scaling"))?,
            );
        }
        Ok(LaurentPoly {
            offset: self.offset,
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let term = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow("Laurent multiplication"))?;
                out[i + j] = out[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("Laurent multiplication"))?;
            }
        }
        let offset = self
            .offset
            .checked_add(rhs.offset)
            .expect("exponent overflow");
        Ok(Self::from_coefficients(offset, out))
    }

    /// Sum of all coefficients: the value at q = 1.
    pub fn eval_at_one(&self) -> Result<i64> {
        let mut total = 0i64;
        for &c in &self.coeffs {
            total = total
                .checked_add(c)
                .ok_or(Error::Overflow("evaluation at q = 1"))?;
        }
        Ok(total)
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents: `q^-1 - 2 + q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let exp = self.offset + k as i64;
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.unsigned_abs();
            match (mag, exp) {
                (m, 0) => write!(f, "{m}")?,
                (1, 1) => f.write_str("q")?,
                (1, e) => write!(f, "q^{e}")?,
                (m, 1) => write!(f, "{m}*q")?,
                (m, e) => write!(f, "{m}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Exact division: returns the quotient iff `numerator = quotient * divisor`
/// over the integers, by long division from the lowest exponent. A nonzero
/// remainder (or a coefficient that does not divide evenly) is an error.
pub fn laurent_exact_div(numerator: &LaurentPoly, divisor: &LaurentPoly) -> Result<LaurentPoly> {
    if divisor.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if numerator.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let num_len = numerator.coeffs.len();
    let div_len = divisor.coeffs.len();
    if num_len < div_len {
        return Err(Error::NotDivisible);
    }
    let lead = divisor.coeffs[0];
    let steps = num_len - div_len + 1;
    let mut work = numerator.coeffs.clone();
    let mut quotient = vec![0i64; steps];
    for k in 0..steps {
        let current = work[k];
        if current == 0 {
            continue;
        }
        if current % lead != 0 {
            return Err(Error::NotDivisible);
        }
        let q = current / lead;
        quotient[k] = q;
        for (j, &d) in divisor.coeffs.iter().enumerate() {
            let term = q.checked_mul(d).ok_or(Error::Overflow("Laurent division"))?;
            work[k + j] = work[k + j]
                .checked_sub(term)
                .ok_or(Error::Overflow("Laurent division"))?;
        }
    }
    if work.iter().any(|&c| c != 0) {
        return Err(Error::NotDivisible);
    }
    let offset = numerator
        .offset
        .checked_sub(divisor.offset)
        .expect("exponent overflow");
    Ok(LaurentPoly::from_coefficients(offset, quotient))
}
