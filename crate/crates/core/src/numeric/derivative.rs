//! Central finite differences in `m` against analytic derivatives.
//!
//! These exercise the two differentiation rules that carry the parametric
//! harmonic identities:
//!
//! * `d/dm C(m+k,k) = C(m+k,k) (H_{m+k} - H_m)`
//! * `d/dm H_m = zeta(2) - H_m^(2)`

use super::special::{binom_real, harmonic2_num, harmonic_num, ZETA2};
use super::verify::{check_param, numeric_sides, rel_err, NumericIdentity};
use crate::error::{Error, Result};

/// Largest `k` examined by [`DerivativeKind::Binomial`].
pub const BINOMIAL_K_MAX: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeKind {
    /// `H_m` against `zeta(2) - H_m^(2)`.
    Harmonic,
    /// `C(m+k,k)` for `k <= 20` against the product rule above.
    Binomial,
    /// Both sides of the parametric central binomial sum at `n`, compared
    /// with each other and with the term-wise analytic derivative of the
    /// left side.
    Identity14 { n: u64 },
}

fn central(f: impl Fn(f64) -> Result<f64>, m: f64, h: f64) -> Result<f64> {
    Ok((f(m + h)? - f(m - h)?) / (2.0 * h))
}

/// Maximum deviation between the finite difference and the analytic
/// derivative, measured as `|a - b| / max(1, |a|, |b|)` so that large
/// binomials do not swamp the budget with rounding noise.
pub fn derivative_check(kind: DerivativeKind, m: f64, h: f64) -> Result<f64> {
    if !(1e-7..=1e-4).contains(&h) {
        return Err(Error::Domain(format!("step h = {h} outside [1e-7, 1e-4]")));
    }
    for x in [m - h, m, m + h] {
        check_param(x)?;
    }
    // the stencil must not straddle a pole either
    let (lo, hi) = (m - h, m + h);
    if (lo..=hi).contains(&-1.5) || (lo.ceil() <= hi && lo.ceil() < 0.0) {
        return Err(Error::Domain(format!("stencil [{lo}, {hi}] crosses an excluded point")));
    }
    match kind {
        DerivativeKind::Harmonic => {
            let fd = central(harmonic_num, m, h)?;
            Ok(rel_err(fd, ZETA2 - harmonic2_num(m)?))
        }
        DerivativeKind::Binomial => {
            let h_m = harmonic_num(m)?;
            let mut worst: f64 = 0.0;
            for k in 0..=BINOMIAL_K_MAX {
                let fd = central(|x| binom_real(x, k), m, h)?;
                let exact = binom_real(m, k)? * (harmonic_num(m + k as f64)? - h_m);
                worst = worst.max(rel_err(fd, exact));
            }
            Ok(worst)
        }
        DerivativeKind::Identity14 { n } => {
            let side = |pick_rhs: bool| {
                move |x: f64| {
                    numeric_sides(NumericIdentity::CbGen, x, n).map(|(l, r)| if pick_rhs { r } else { l })
                }
            };
            let fd_lhs = central(side(false), m, h)?;
            let fd_rhs = central(side(true), m, h)?;
            // term-wise derivative of the left side
            let h_m = harmonic_num(m)?;
            let mut u = 1.0;
            let mut analytic = 0.0;
            for k in 0..=n {
                let kf = k as f64;
                analytic += u * binom_real(m, k)? * (harmonic_num(m + kf)? - h_m);
                u *= 2.0 * (kf + 1.0) / (2.0 * kf + 1.0);
            }
            Ok(rel_err(fd_lhs, fd_rhs).max(rel_err(fd_rhs, analytic)))
        }
    }
}
