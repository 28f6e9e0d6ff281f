//! Exact discovery of the polynomial shape of `V_d(n)` and `U_d(n)`.
//!
//! With `N(d) = prod_{j=0..d+1} (2j+1)` the sums take the form
//!
//! ```text
//! V_d(n) = 2^(2n+1) / (N C(2n,n)) * ((n+1) P_d(n) H_n - (2n-1) Q_d(n) / N) + C_d / N^2
//! U_d(n) = 2^(2n+1) (n+1) R_d(n) / (N C(2n,n)) + K_d
//! ```
//!
//! with `deg P_d = deg Q_d = deg R_d = d`. The unknown coefficients are
//! solved from exact values at `n = 1, 2, ...` and then checked on a
//! disjoint block of further `n`.

use serde::Serialize;

use super::linsolve::solve;
use super::{u_rec, v_rec};
use crate::error::{Error, Result};
use crate::exact::{central_binomial, harmonic, pow2, Rational};

/// `N(d) = 1 * 3 * 5 * ... * (2d+3)`.
pub fn normalizer(d: u32) -> Rational {
    (0..=d as i64 + 1).map(|j| Rational::from(2 * j + 1)).fold(Rational::one(), |a, b| a * b)
}

fn poly_eval(coeffs: &[Rational], n: u64) -> Rational {
    let x = Rational::from(n);
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * &x + c)
}

fn powers(n: u64, d: u32) -> Vec<Rational> {
    let x = Rational::from(n);
    std::iter::successors(Some(Rational::one()), |p| Some(p * &x))
        .take(d as usize + 1)
        .collect()
}

/// `2^(2n+1) / (N C(2n,n))`.
fn scaled_lead(n: u64, norm: &Rational) -> Rational {
    Rational::from_bigints(pow2(2 * n + 1), central_binomial(n)) / norm
}

/// Fitted shape of `V_d(n)`. Coefficient vectors are lowest degree first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialFit {
    pub d: u32,
    #[serde(serialize_with = "ser_vec")]
    pub p: Vec<Rational>,
    #[serde(serialize_with = "ser_vec")]
    pub q: Vec<Rational>,
    #[serde(serialize_with = "ser_one")]
    pub constant: Rational,
    #[serde(serialize_with = "ser_one")]
    pub normalizer: Rational,
    pub residual_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl PolynomialFit {
    /// The ansatz evaluated at `n`.
    pub fn eval(&self, n: u64) -> Rational {
        let norm = &self.normalizer;
        let lead = scaled_lead(n, norm);
        let h_part = Rational::from(n + 1) * poly_eval(&self.p, n) * harmonic(n);
        let q_part = Rational::from(2 * n as i64 - 1) * poly_eval(&self.q, n) / norm;
        lead * (h_part - q_part) + &self.constant / &(norm * norm)
    }

    /// Validation block used by the fitter: `n = 2d+4 ..= 4d+6`.
    pub fn validation_range(&self) -> std::ops::RangeInclusive<u64> {
        let d = self.d as u64;
        2 * d + 4..=4 * d + 6
    }
}

/// Fitted shape of `U_d(n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UFit {
    pub d: u32,
    #[serde(serialize_with = "ser_vec")]
    pub r: Vec<Rational>,
    #[serde(serialize_with = "ser_one")]
    pub constant: Rational,
    #[serde(serialize_with = "ser_one")]
    pub normalizer: Rational,
    pub residual_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl UFit {
    pub fn eval(&self, n: u64) -> Rational {
        scaled_lead(n, &self.normalizer) * Rational::from(n + 1) * poly_eval(&self.r, n)
            + &self.constant
    }
}

fn ser_one<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

fn check_block(
    range: std::ops::RangeInclusive<u64>,
    eval: impl Fn(u64) -> Rational,
    truth: impl Fn(u64) -> Rational,
) -> Option<String> {
    range.into_iter().find_map(|n| {
        let (got, want) = (eval(n), truth(n));
        (got != want).then(|| format!("ansatz mismatch at n = {n}: fitted {got}, exact {want}"))
    })
}

/// Fits `P_d`, `Q_d` and `C_d` from `V_d(1..=2d+3)` and validates on
/// `n = 2d+4 ..= 4d+6`.
pub fn fit_structure(d: u32) -> Result<PolynomialFit> {
    if d == 0 {
        return Err(Error::Domain("fit_structure needs d >= 1".into()));
    }
    let norm = normalizer(d);
    let unknowns = 2 * d as usize + 3;
    let mut rows = Vec::with_capacity(unknowns);
    let mut rhs = Vec::with_capacity(unknowns);
    for n in 1..=unknowns as u64 {
        let lead = scaled_lead(n, &norm);
        let pw = powers(n, d);
        let h_scale = &lead * Rational::from(n + 1) * harmonic(n);
        let q_scale = -(&lead * Rational::from(2 * n as i64 - 1) / &norm);
        let mut row: Vec<Rational> = pw.iter().map(|p| &h_scale * p).collect();
        row.extend(pw.iter().map(|p| &q_scale * p));
        row.push((&norm * &norm).recip());
        rows.push(row);
        rhs.push(v_rec(d, n));
    }
    let sol = solve(&rows, &rhs).ok_or_else(|| Error::SingularSystem {
        d,
        detail: format!("{unknowns}x{unknowns} system for V_d has no unique solution"),
    })?;
    let k = d as usize + 1;
    let mut fit = PolynomialFit {
        d,
        p: sol[..k].to_vec(),
        q: sol[k..2 * k].to_vec(),
        constant: sol[2 * k].clone(),
        normalizer: norm,
        residual_ok: false,
        diagnostic: None,
    };
    fit.diagnostic = check_block(fit.validation_range(), |n| fit.eval(n), |n| v_rec(d, n));
    fit.residual_ok = fit.diagnostic.is_none();
    Ok(fit)
}

/// Fits `R_d` and `K_d` from `U_d(1..=d+2)` with the same normalizer as
/// [`fit_structure`], validating on `n = d+3 ..= 2d+4`.
pub fn fit_u_structure(d: u32) -> Result<UFit> {
    if d == 0 {
        return Err(Error::Domain("fit_u_structure needs d >= 1".into()));
    }
    let norm = normalizer(d);
    let unknowns = d as usize + 2;
    let mut rows = Vec::with_capacity(unknowns);
    let mut rhs = Vec::with_capacity(unknowns);
    for n in 1..=unknowns as u64 {
        let scale = scaled_lead(n, &norm) * Rational::from(n + 1);
        let mut row: Vec<Rational> = powers(n, d).iter().map(|p| &scale * p).collect();
        row.push(Rational::one());
        rows.push(row);
        rhs.push(u_rec(d, n));
    }
    let sol = solve(&rows, &rhs).ok_or_else(|| Error::SingularSystem {
        d,
        detail: format!("{unknowns}x{unknowns} system for U_d has no unique solution"),
    })?;
    let k = d as usize + 1;
    let mut fit = UFit {
        d,
        r: sol[..k].to_vec(),
        constant: sol[k].clone(),
        normalizer: norm,
        residual_ok: false,
        diagnostic: None,
    };
    let dd = d as u64;
    fit.diagnostic = check_block(dd + 3..=2 * dd + 4, |n| fit.eval(n), |n| u_rec(d, n));
    fit.residual_ok = fit.diagnostic.is_none();
    Ok(fit)
}
