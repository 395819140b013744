//! Exact arithmetic for a q-analog of the sum of divisors.
//!
//! The polynomial P_n(q) defined by the generating function
//!
//! ```text
//! prod over m >= 1 of (1 - t^m)^2 / ((1 - q t^m)(1 - q^-1 t^m))
//!     = 1 + (q + q^-1 - 2) * sum over n >= 1 of P_n(q) q^-(n-1) t^n
//! ```
//!
//! is palindromic of degree 2n-2 with P_n(1) = sigma(n). Its largest
//! coefficient equals the divisor-window function F(n), the maximum number
//! of divisors of n in any interval (t/2, t]; consequently P_n(q) has a
//! coefficient larger than 1 exactly when 2n is the perimeter of a
//! Pythagorean triangle, and the set of coefficient values is the full
//! staircase {0, 1, ..., F(n)}.
//!
//! This crate computes both sides of those identities by independent
//! routes, entirely in checked 64-bit integer arithmetic:
//!
//! - [`arithmetic`]: factorization, divisor enumeration, sigma.
//! - [`kr_poly`]: P_n(q) from the divisor-interval coefficient formula.
//! - [`series_oracle`]: P_n(q) from the truncated product expansion.
//! - [`erdos_nicolas`]: F(n) with a certifying divisor chain, plus the
//!   running mean of F.
//! - [`pythagorean`]: the perimeter criterion with witness triangles.
//!
//! All operations are pure functions over immutable values; everything may
//! be called concurrently without coordination.

pub mod arithmetic;
pub mod erdos_nicolas;
pub mod error;
pub mod kr_poly;
pub mod pythagorean;
pub mod series_oracle;

pub use arithmetic::{DivisorList, Factorization, PrimePower};
pub use erdos_nicolas::{MeanPoint, WindowWitness};
pub use error::{Error, Result};
pub use kr_poly::{GValue, KrPolynomial};
pub use pythagorean::{PerimeterDecision, TriangleWitness};
pub use series_oracle::{LaurentPoly, TruncatedSeries};
