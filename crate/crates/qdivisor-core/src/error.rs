//! Crate-wide error type.
//!
//! Every fallible operation rejects bad input explicitly; nothing wraps
//! around or saturates silently.

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The input was zero where a positive integer is required.
    #[error("input must be a positive integer")]
    ZeroInput,

    /// The input exceeds the range the operation supports.
    #[error("n = {n} is out of range for {what} (requires n < {limit})")]
    OutOfRange {
        what: &'static str,
        n: u64,
        limit: u64,
    },

    /// Checked integer arithmetic overflowed 64 bits.
    #[error("64-bit overflow in {0}; input is out of the supported range")]
    Overflow(&'static str),

    /// A coefficient buffer could not be allocated.
    #[error("allocation of {len} coefficients failed")]
    Allocation { len: u64 },

    /// `g` was requested at a point where it is not an integer.
    #[error("{y} does not divide 2n = {two_n}; g is only defined on divisors of 2n")]
    NotADivisor { y: u64, two_n: u64 },

    /// A window bound `t` must be a positive rational.
    #[error("window bound t must be positive (got {num}/{den})")]
    NonPositiveBound { num: i64, den: i64 },

    /// Checkpoint lists must be strictly increasing.
    #[error("checkpoints must be strictly increasing and positive")]
    UnsortedCheckpoints,

    /// A checkpoint exceeds the supported bulk range.
    #[error("checkpoint {x} exceeds the supported maximum {max}")]
    CheckpointTooLarge { x: u64, max: u64 },

    /// The requested truncation order is outside the supported window.
    #[error("truncation order {n} is out of range (1..={max})")]
    TruncationOutOfRange { n: u64, max: u64 },

    /// Extraction was requested beyond the series truncation order.
    #[error("order {n} exceeds the series truncation {trunc}")]
    BeyondTruncation { n: u64, trunc: u64 },

    /// Laurent division by the zero polynomial.
    #[error("division by the zero Laurent polynomial")]
    DivisionByZero,

    /// Laurent division left a nonzero remainder.
    #[error("Laurent division left a nonzero remainder")]
    NotDivisible,

    /// The series oracle produced something other than the expected polynomial.
    #[error("series oracle self-check failed: {0}")]
    OracleSelfCheck(&'static str),

    /// A Pythagorean perimeter must be even.
    #[error("perimeter {0} is odd; Pythagorean perimeters are even")]
    OddPerimeter(u64),

    /// The brute-force perimeter search is capped.
    #[error("perimeter {p} exceeds the brute-force search bound {max}")]
    PerimeterTooLarge { p: u64, max: u64 },

    /// Two routes that must agree disagreed. This is a bug, not bad input.
    #[error("internal invariant breach: {0}")]
    InvariantBreach(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
