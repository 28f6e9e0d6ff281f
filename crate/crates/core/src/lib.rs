//! Exact and floating-point evaluation of finite sums that mix harmonic
//! numbers with (inverse) central binomial coefficients.
//!
//! The crate is split into four layers:
//!
//! * [`exact`]: big rationals, binomials, harmonic families and the constant
//!   ring spanned by `1, ln2, ln2^2, pi^2`.
//! * [`catalog`]: every closed form paired with a term-by-term summation
//!   oracle, plus exact point and range verification.
//! * [`recursions`]: the power sums `U_d(n)` and `V_d(n)` solved by
//!   recursion in `d`, and exact discovery of their polynomial structure.
//! * [`numeric`]: digamma/trigamma numerics used to check the parametric
//!   identities at arbitrary real `m`.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod recursions;

pub use error::{Error, Result};
pub use exact::{ExactParam, Rational, SymValue};
