use serde::Serialize;

use super::special::{binom_real, central_ratio, harmonic2_num, harmonic_num};
use crate::catalog::ReportRecord;
use crate::error::{Error, Result};

/// Distance from an excluded parameter below which `m` is rejected.
pub const EXCLUSION_EPS: f64 = 1e-9;

/// Default relative tolerance for numeric checks.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Parametric identities that can be checked at real `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericIdentity {
    CbGen,
    Thm21,
    Thm41,
    Thm51,
}

impl NumericIdentity {
    pub const ALL: [NumericIdentity; 4] = [
        NumericIdentity::CbGen,
        NumericIdentity::Thm21,
        NumericIdentity::Thm41,
        NumericIdentity::Thm51,
    ];

    pub fn id(self) -> &'static str {
        match self {
            NumericIdentity::CbGen => "I-cb-gen",
            NumericIdentity::Thm21 => "I-thm21",
            NumericIdentity::Thm41 => "I-thm41",
            NumericIdentity::Thm51 => "I-thm51",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == id)
            .ok_or_else(|| Error::Domain(format!("{id} has no real-parameter evaluator")))
    }

    pub fn n_min(self) -> u64 {
        match self {
            NumericIdentity::CbGen | NumericIdentity::Thm21 => 0,
            NumericIdentity::Thm41 | NumericIdentity::Thm51 => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericReport {
    pub id: String,
    pub m: f64,
    pub n: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    pub pass: bool,
    pub tol: f64,
}

/// `|a - b| / max(1, |a|, |b|)`.
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

impl NumericReport {
    /// Same layout as exact records, with 17-significant-digit decimals.
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            identity: self.id.clone(),
            m: Some(sci(self.m)),
            n: self.n,
            equal: self.pass,
            lhs: sci(self.lhs),
            rhs: sci(self.rhs),
            terms: self.n + 1,
            t_lhs_ns: 0,
            t_rhs_ns: 0,
            rel_err: Some(sci(self.rel_err)),
            tol: Some(sci(self.tol)),
        }
    }
}

/// Rejects `m` near a negative integer or near `-3/2`.
pub fn check_param(m: f64) -> Result<()> {
    if !m.is_finite() {
        return Err(Error::Domain(format!("m = {m} is not finite")));
    }
    if (m + 1.5).abs() < EXCLUSION_EPS {
        return Err(Error::Domain(format!("m = {m} is too close to -3/2")));
    }
    if m.round() < 0.0 && (m - m.round()).abs() < EXCLUSION_EPS {
        return Err(Error::Domain(format!("m = {m} is too close to a negative integer")));
    }
    Ok(())
}

/// `4^k / C(2k,k)` for `k = 0..=n` by the ratio `u_{k+1} = u_k 2(k+1)/(2k+1)`.
fn running_ratios(n: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut u = 1.0;
    for k in 0..=n {
        out.push(u);
        u *= 2.0 * (k as f64 + 1.0) / (2.0 * k as f64 + 1.0);
    }
    out
}

fn cb_gen_sides(m: f64, n: u64) -> Result<(f64, f64)> {
    let mut lhs = 0.0;
    for (k, u) in running_ratios(n).into_iter().enumerate() {
        lhs += u * binom_real(m, k as u64)?;
    }
    let nf = n as f64;
    let rhs = ((m + nf + 1.0) * binom_real(m, n)? * 2.0 * central_ratio(n) + 1.0) / (2.0 * m + 3.0);
    Ok((lhs, rhs))
}

fn thm21_sides(m: f64, n: u64) -> Result<(f64, f64)> {
    let mut lhs = 0.0;
    for (k, u) in running_ratios(n).into_iter().enumerate() {
        lhs += u * binom_real(m, k as u64)? * harmonic_num(m + k as f64)?;
    }
    let nf = n as f64;
    let t = 2.0 * m + 3.0;
    let ratio = binom_real(m, n)? * central_ratio(n);
    let h_mn = harmonic_num(m + nf)?;
    let h_m = harmonic_num(m)?;
    let rhs = (2.0 * ratio * (m + nf + 1.0) * h_mn + h_m) / t
        - 2.0 / (t * t) * (ratio * (2.0 * nf - 1.0) + 1.0);
    Ok((lhs, rhs))
}

fn thm41_sides(m: f64, n: u64) -> Result<(f64, f64)> {
    let mut lhs = 0.0;
    for (k, u) in running_ratios(n).into_iter().enumerate().skip(1) {
        let kf = k as f64;
        lhs += harmonic_num(m + kf + 1.0)? / (u * (2.0 * kf - 1.0) * binom_real(m + 1.0, k as u64)?);
    }
    let nf = n as f64;
    let t = 2.0 * m + 3.0;
    let head = (4.0 * m + 5.0) / ((m + 1.0) * t * t) + harmonic_num(m)? / t;
    let tail = (harmonic_num(m + nf + 1.0)? + 2.0 / t)
        / (t * central_ratio(n) * binom_real(m + 1.0, n)?);
    Ok((lhs, head - tail))
}

fn thm51_sides(m: f64, n: u64) -> Result<(f64, f64)> {
    let mut lhs = 0.0;
    for (k, u) in running_ratios(n).into_iter().enumerate() {
        let z = m + k as f64;
        let h = harmonic_num(z)?;
        lhs += u * binom_real(m, k as u64)? * (h * h - harmonic2_num(z)?);
    }
    let nf = n as f64;
    let t = 2.0 * m + 3.0;
    let ratio = binom_real(m, n)? * central_ratio(n);
    let (h_m, h2_m) = (harmonic_num(m)?, harmonic2_num(m)?);
    let (h_mn, h2_mn) = (harmonic_num(m + nf)?, harmonic2_num(m + nf)?);
    let a = h_m * h_m - h2_m + 2.0 * ratio * (h_mn + (m + nf + 1.0) * (h_mn * h_mn - h2_mn));
    let b = 4.0 * ratio * (m + nf + 1.0) * h_mn + 4.0 * h_m + 2.0 * ratio * (2.0 * nf - 1.0) * h_mn;
    let c = ratio * (2.0 * nf - 1.0) + 1.0;
    Ok((lhs, a / t - b / (t * t) + 8.0 * c / (t * t * t)))
}

/// Both sides of a parametric identity in double precision.
pub fn numeric_sides(which: NumericIdentity, m: f64, n: u64) -> Result<(f64, f64)> {
    check_param(m)?;
    if n < which.n_min() {
        return Err(Error::Domain(format!(
            "{}: n = {n} is below n_min = {}",
            which.id(),
            which.n_min()
        )));
    }
    match which {
        NumericIdentity::CbGen => cb_gen_sides(m, n),
        NumericIdentity::Thm21 => thm21_sides(m, n),
        NumericIdentity::Thm41 => thm41_sides(m, n),
        NumericIdentity::Thm51 => thm51_sides(m, n),
    }
}

pub fn verify_numeric(id: &str, m: f64, n: u64, tol: f64) -> Result<NumericReport> {
    let which = NumericIdentity::from_id(id)?;
    let (lhs, rhs) = numeric_sides(which, m, n)?;
    let err = rel_err(lhs, rhs);
    Ok(NumericReport {
        id: which.id().to_string(),
        m,
        n,
        lhs,
        rhs,
        rel_err: err,
        pass: err <= tol,
        tol,
    })
}
