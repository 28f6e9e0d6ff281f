//! Digamma, trigamma and signed log-gamma in double precision.
//!
//! All three shift the argument upward with the unit-step recurrences until
//! it reaches [`ASYMPTOTIC_THRESHOLD`], then sum the Bernoulli asymptotic
//! series through `B_14`. Negative non-integer arguments go through
//! reflection.

use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// `zeta(2) = pi^2 / 6`.
pub const ZETA2: f64 = PI * PI / 6.0;

const ASYMPTOTIC_THRESHOLD: f64 = 10.0;
const POLE_EPS: f64 = 1e-12;

/// `B_2, B_4, ..., B_14`.
const BERNOULLI: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

fn check_pole(x: f64) -> Result<()> {
    if x <= POLE_EPS && (x - x.round()).abs() < POLE_EPS {
        return Err(Error::Pole(x));
    }
    Ok(())
}

/// `psi(x) = Gamma'(x) / Gamma(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    check_pole(x)?;
    if x < 0.0 {
        // psi(x) = psi(1-x) - pi cot(pi x)
        return Ok(digamma(1.0 - x)? - PI / (PI * x).tan());
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < ASYMPTOTIC_THRESHOLD {
        shift += 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pw = inv2;
    let mut series = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        series += b / (2.0 * (k as f64 + 1.0)) * pw;
        pw *= inv2;
    }
    Ok(y.ln() - 0.5 / y - series - shift)
}

/// `psi'(x)`.
pub fn trigamma(x: f64) -> Result<f64> {
    check_pole(x)?;
    if x < 0.0 {
        // psi'(x) = pi^2 / sin^2(pi x) - psi'(1-x)
        let s = (PI * x).sin();
        return Ok(PI * PI / (s * s) - trigamma(1.0 - x)?);
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < ASYMPTOTIC_THRESHOLD {
        shift += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pw = inv2 * inv;
    let mut series = 0.0;
    for b in BERNOULLI {
        series += b * pw;
        pw *= inv2;
    }
    Ok(inv + 0.5 * inv2 + series + shift)
}

/// `(ln |Gamma(x)|, sign Gamma(x))`.
pub fn ln_gamma(x: f64) -> Result<(f64, f64)> {
    check_pole(x)?;
    if x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let s = (PI * x).sin();
        let (lg, sg) = ln_gamma(1.0 - x)?;
        return Ok((PI.ln() - s.abs().ln() - lg, s.signum() * sg));
    }
    let mut prod_log = 0.0;
    let mut y = x;
    while y < ASYMPTOTIC_THRESHOLD {
        prod_log += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pw = inv;
    let mut series = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let two_k = 2.0 * (k as f64 + 1.0);
        series += b / (two_k * (two_k - 1.0)) * pw;
        pw *= inv2;
    }
    let stirling = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + series;
    Ok((stirling - prod_log, 1.0))
}

/// `H_z = psi(z+1) + gamma`.
pub fn harmonic_num(z: f64) -> Result<f64> {
    Ok(digamma(z + 1.0)? + EULER_GAMMA)
}

/// `H_z^(2) = zeta(2) - psi'(z+1)`.
pub fn harmonic2_num(z: f64) -> Result<f64> {
    Ok(ZETA2 - trigamma(z + 1.0)?)
}

/// Smallest admissible `|x + j|` for the factors of a real binomial.
const FACTOR_EPS: f64 = 1e-9;

/// `C(x+k, k) = Gamma(x+k+1) / (Gamma(k+1) Gamma(x+1))`, evaluated in log
/// space with explicit sign tracking.
pub fn binom_real(x: f64, k: u64) -> Result<f64> {
    if let Some(j) = (1..=k).find(|&j| (x + j as f64).abs() < FACTOR_EPS) {
        return Err(Error::Domain(format!(
            "C({x}+{k}, {k}): factor x+{j} is within {FACTOR_EPS} of zero"
        )));
    }
    let kf = k as f64;
    let (a, sa) = ln_gamma(x + kf + 1.0)?;
    let (b, _) = ln_gamma(kf + 1.0)?;
    let (c, sc) = ln_gamma(x + 1.0)?;
    Ok(sa * sc * (a - b - c).exp())
}

/// `4^n / C(2n, n)` via log-gamma.
pub fn central_ratio(n: u64) -> f64 {
    let nf = n as f64;
    let (a, _) = ln_gamma(2.0 * nf + 1.0).expect("positive argument");
    let (b, _) = ln_gamma(nf + 1.0).expect("positive argument");
    (nf * 4f64.ln() - a + 2.0 * b).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn digamma_known_values() {
        assert!(close(digamma(1.0).unwrap(), -EULER_GAMMA, 1e-14));
        let h_half = 2.0 - 2.0 * std::f64::consts::LN_2;
        assert!(close(digamma(1.5).unwrap() + EULER_GAMMA, h_half, 1e-13));
        // psi(1/2) = -gamma - 2 ln 2
        assert!(close(digamma(0.5).unwrap(), -EULER_GAMMA - 2.0 * std::f64::consts::LN_2, 1e-14));
        // reflection: psi(-1/2) = psi(1/2) + 2
        assert!(close(digamma(-0.5).unwrap(), digamma(0.5).unwrap() + 2.0, 1e-13));
    }

    #[test]
    fn trigamma_known_values() {
        assert!(close(trigamma(1.0).unwrap(), ZETA2, 1e-14));
        // psi'(1/2) = pi^2/2
        assert!(close(trigamma(0.5).unwrap(), PI * PI / 2.0, 1e-14));
        // psi'(-1/2) = psi'(1/2) + 4
        assert!(close(trigamma(-0.5).unwrap(), PI * PI / 2.0 + 4.0, 1e-13));
    }

    #[test]
    fn poles() {
        for x in [0.0, -1.0, -7.0, -1e-13] {
            assert!(matches!(digamma(x), Err(Error::Pole(_))));
            assert!(matches!(trigamma(x), Err(Error::Pole(_))));
            assert!(ln_gamma(x).is_err());
        }
        assert!(harmonic_num(-1.0).is_err());
        assert!(harmonic_num(-3.0).is_err());
    }

    #[test]
    fn ln_gamma_values() {
        // Gamma(5) = 24
        let (lg, s) = ln_gamma(5.0).unwrap();
        assert!(close(lg, 24f64.ln(), 1e-14));
        assert_eq!(s, 1.0);
        // Gamma(1/2) = sqrt(pi)
        assert!(close(ln_gamma(0.5).unwrap().0, 0.5 * PI.ln(), 1e-14));
        // Gamma(-1/2) = -2 sqrt(pi)
        let (lg, s) = ln_gamma(-0.5).unwrap();
        assert!(close(lg, (2.0 * PI.sqrt()).ln(), 1e-14));
        assert_eq!(s, -1.0);
        // Gamma(-3/2) = 4 sqrt(pi)/3
        let (lg, s) = ln_gamma(-1.5).unwrap();
        assert!(close(lg, (4.0 * PI.sqrt() / 3.0).ln(), 1e-13));
        assert_eq!(s, 1.0);
    }

    #[test]
    fn binom_real_against_product() {
        for &x in &[0.37, 2.5, -0.45, -1.3, 7.9, -2.6] {
            let mut prod = 1.0;
            for k in 0..25u64 {
                if k > 0 {
                    prod *= (x + k as f64) / k as f64;
                }
                assert!(close(binom_real(x, k).unwrap(), prod, 1e-12), "x={x} k={k}");
            }
        }
        assert!(binom_real(-2.0 + 1e-12, 3).is_err());
    }

    #[test]
    fn central_ratio_small() {
        for (n, c) in [(0u64, 1.0), (1, 2.0), (2, 6.0), (10, 184756.0)] {
            assert!(close(central_ratio(n), 4f64.powi(n as i32) / c, 1e-13));
        }
    }

    #[test]
    fn harmonic_values() {
        assert!(close(harmonic_num(5.0).unwrap(), 137.0 / 60.0, 1e-13));
        assert!(harmonic2_num(0.0).unwrap().abs() < 1e-12);
        assert!(close(harmonic_num(-0.5).unwrap(), -2.0 * std::f64::consts::LN_2, 1e-13));
    }
}
