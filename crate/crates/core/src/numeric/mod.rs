//! Double-precision layer: digamma/trigamma, real-parameter checks of the
//! parametric identities, finite-difference checks, and the residual sum.

mod derivative;
mod residual;
pub mod special;
mod verify;

pub use derivative::{derivative_check, DerivativeKind, BINOMIAL_K_MAX};
pub use residual::{residual_sum, residual_sum_numeric, ResidualEstimate, ResidualSum, TailBound};
pub use special::{digamma, harmonic2_num, harmonic_num, trigamma, EULER_GAMMA, ZETA2};
pub use verify::{
    check_param, numeric_sides, rel_err, verify_numeric, NumericIdentity, NumericReport,
    DEFAULT_TOL, EXCLUSION_EPS,
};
