//! Independent oracle for P_n(q): expands the infinite product
//!
//! ```text
//! prod over m >= 1 of (1 - t^m)^2 / ((1 - q t^m)(1 - q^-1 t^m))
//!     = 1 + (q + q^-1 - 2) * sum over n >= 1 of P_n(q) q^-(n-1) t^n
//! ```
//!
//! as a power series in t truncated at a chosen order, with one Laurent
//! polynomial in q per power of t, and recovers P_n(q) from the t^n term by
//! exact division. This route never looks at divisors, so it cross-checks
//! the interval formula in `kr_poly` coefficient for coefficient.
//!
//! Each reciprocal factor is expanded directly as the geometric series
//! `sum over k of q^(+/-k) t^(mk)`; every multiplication truncates at the
//! target order, which is lossless for the retained degrees.

mod laurent;

pub use laurent::{laurent_exact_div, LaurentPoly};

use crate::error::{Error, Result};
use crate::kr_poly::KrPolynomial;

/// Hard cap on the truncation order; memory is O(order^2) coefficients.
pub const MAX_TRUNCATION: u64 = 500;

/// The product expanded to order N in t: `terms[j]` is the coefficient of
/// t^j, a Laurent polynomial in q supported within [-j, j].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: u64,
    terms: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    /// The truncation order N.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficient of t^j; panics if j > N.
    pub fn term(&self, j: u64) -> &LaurentPoly {
        &self.terms[j as usize]
    }

    /// All N+1 coefficients, t^0 up to t^N.
    pub fn terms(&self) -> &[LaurentPoly] {
        &self.terms
    }
}

/// One sparse factor term: the summand `scale * q^q_shift * t^t_exp`.
struct FactorTerm {
    t_exp: usize,
    q_shift: i64,
    scale: i64,
}

/// state := state * factor, truncated at `order` in t.
fn mul_factor(
    state: &[LaurentPoly],
    factor: &[FactorTerm],
    order: usize,
) -> Result<Vec<LaurentPoly>> {
    let mut out = Vec::with_capacity(order + 1);
    for j in 0..=order {
        // The t^j coefficient stays supported within [-j, j].
        let base = -(j as i64);
        let mut buf = vec![0i64; 2 * j + 1];
        for term in factor {
            if term.t_exp > j {
                continue;
            }
            let src = &state[j - term.t_exp];
            if src.is_zero() {
                continue;
            }
            let lo = src.min_exp().expect("nonzero") + term.q_shift;
            for (k, &c) in src.coefficients().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let exp = lo + k as i64;
                debug_assert!(exp >= base && exp <= j as i64);
                let slot = (exp - base) as usize;
                let contribution = c
                    .checked_mul(term.scale)
                    .ok_or(Error::Overflow("series expansion"))?;
                buf[slot] = buf[slot]
                    .checked_add(contribution)
                    .ok_or(Error::Overflow("series expansion"))?;
            }
        }
        out.push(LaurentPoly::from_coefficients(base, buf));
    }
    Ok(out)
}

/// Expands the product for m = 1..=order, multiplying in, per m, the
/// numerator (1 - t^m)^2 and the two geometric series
/// `sum q^k t^(mk)` and `sum q^-k t^(mk)`, truncating at t^order throughout.
pub fn expand_product(order: u64) -> Result<TruncatedSeries> {
    if order == 0 || order > MAX_TRUNCATION {
        return Err(Error::TruncationOutOfRange {
            n: order,
            max: MAX_TRUNCATION,
        });
    }
    let n = order as usize;
    let mut state = vec![LaurentPoly::zero(); n + 1];
    state[0] = LaurentPoly::one();

    for m in 1..=n {
        let numerator: Vec<FactorTerm> = [(0usize, 1i64), (m, -2), (2 * m, 1)]
            .into_iter()
            .filter(|&(t_exp, _)| t_exp <= n)
            .map(|(t_exp, scale)| FactorTerm {
                t_exp,
                q_shift: 0,
                scale,
            })
            .collect();
        state = mul_factor(&state, &numerator, n)?;

        for sign in [1i64, -1] {
            let geometric: Vec<FactorTerm> = (0..=n / m)
                .map(|k| FactorTerm {
                    t_exp: m * k,
                    q_shift: sign * k as i64,
                    scale: 1,
                })
                .collect();
            state = mul_factor(&state, &geometric, n)?;
        }
    }

    let series = TruncatedSeries {
        order,
        terms: state,
    };
    debug_assert_eq!(series.terms[0], LaurentPoly::one());
    Ok(series)
}

/// Recovers P_n(q) from the t^n coefficient: divides out (q + q^-1 - 2),
/// multiplies by q^(n-1), and validates that the result is a genuine
/// palindromic polynomial of degree 2n-2 with nonnegative coefficients.
pub fn extract_polynomial(series: &TruncatedSeries, n: u64) -> Result<KrPolynomial> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n > series.order {
        return Err(Error::BeyondTruncation {
            n,
            trunc: series.order,
        });
    }
    let kernel = LaurentPoly::from_coefficients(-1, vec![1, -2, 1]);
    let quotient = laurent_exact_div(series.term(n), &kernel).map_err(|e| match e {
        Error::NotDivisible => Error::OracleSelfCheck("t^n term not divisible by q + q^-1 - 2"),
        other => other,
    })?;
    let poly = quotient.shifted(n as i64 - 1);
    if poly.is_zero() {
        return Err(Error::OracleSelfCheck("extracted polynomial is zero"));
    }
    if poly.min_exp() != Some(0) {
        return Err(Error::OracleSelfCheck("extracted polynomial has q^-k terms"));
    }
    if poly.max_exp() != Some(2 * n as i64 - 2) {
        return Err(Error::OracleSelfCheck("extracted polynomial has wrong degree"));
    }
    let mut full = Vec::with_capacity(2 * n as usize - 1);
    let width = poly.max_exp().expect("nonzero") + 1;
    for exp in 0..width {
        let c = poly.coefficient(exp);
        if c < 0 {
            return Err(Error::OracleSelfCheck("negative coefficient"));
        }
        full.push(c as u64);
    }
    KrPolynomial::from_full_coefficients(n, full)
        .map_err(|_| Error::OracleSelfCheck("extracted polynomial fails shape validation"))
}
