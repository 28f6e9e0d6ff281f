//! Power sums `U_d(n) = sum_{k=1..n} 4^k k^d / C(2k,k)` and
//! `V_d(n) = sum_{k=1..n} 4^k k^d H_k / C(2k,k)`.
//!
//! Both satisfy a recursion in `d` at fixed `n`, obtained by summation by
//! parts with `a_k = (2k-1)(k-1)^d` and the step relation
//! `(2k+1)(u_{k+1} - u_k) = u_k` for `u_k = 4^k / C(2k,k)`.

mod fit;
pub mod linsolve;

pub use fit::{fit_structure, fit_u_structure, normalizer, PolynomialFit, UFit};

use crate::error::{Error, Result};
use crate::exact::{binom_nat, central_binomial, harmonic, pow2, pow4, Rational};

/// The coefficients `c_{d,j} = C(d+1, j+1) + C(d, j+1)` for `j = 1..d`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    d: u32,
    entries: Vec<Rational>,
}

impl CoeffTable {
    pub fn new(d: u32) -> Self {
        let d64 = d as u64;
        let entries = (1..=d64)
            .map(|j| binom_nat(d64 + 1, j + 1) + binom_nat(d64, j + 1))
            .collect();
        CoeffTable { d, entries }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `c_{d,j}` for `1 <= j <= d`.
    pub fn get(&self, j: u32) -> Option<&Rational> {
        (j >= 1).then(|| self.entries.get(j as usize - 1)).flatten()
    }
}

pub fn c_coeff(d: u32, j: u32) -> Result<Rational> {
    if j == 0 || j > d {
        return Err(Error::Domain(format!("c_{{d,j}} needs 1 <= j <= d, got d={d}, j={j}")));
    }
    Ok(binom_nat(d as u64 + 1, j as u64 + 1) + binom_nat(d as u64, j as u64 + 1))
}

/// `2^(2n+1) / C(2n,n)`.
fn lead(n: u64) -> Rational {
    Rational::from_bigints(pow2(2 * n + 1), central_binomial(n))
}

fn alternating_tail(table: &CoeffTable, lower: &[Rational]) -> Rational {
    let d = table.d();
    (1..=d)
        .map(|j| {
            let term = table.get(j).expect("j in range") * &lower[(d - j) as usize];
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `U_0(n), ..., U_d(n)` by the recursion in `d`.
pub fn u_table(d: u32, n: u64) -> Vec<Rational> {
    let lead = lead(n);
    let np1 = Rational::from(n + 1);
    let nq = Rational::from(n);
    let mut out = Vec::with_capacity(d as usize + 1);
    out.push((&np1 * &lead - Rational::from(2)) / Rational::from(3));
    let mut n_pow = Rational::one();
    for e in 1..=d {
        n_pow *= &nq;
        let table = CoeffTable::new(e);
        let boundary = &np1 * &lead * &n_pow;
        let value = (boundary - alternating_tail(&table, &out)) / Rational::from(2 * e + 3);
        out.push(value);
    }
    out
}

/// `V_0(n), ..., V_d(n)` by the recursion in `d`, seeded with `U`.
pub fn v_table(d: u32, n: u64) -> Vec<Rational> {
    let u = u_table(d, n);
    let lead = lead(n);
    let np1 = Rational::from(n + 1);
    let nq = Rational::from(n);
    let h_n = harmonic(n);
    let h_n1 = &h_n + Rational::new(1, n as i64 + 1);
    let mut out = Vec::with_capacity(d as usize + 1);
    let v0 = &lead / Rational::from(3)
        * (&np1 * &h_n - Rational::new(2 * n as i64 - 1, 3))
        - Rational::new(2, 9);
    out.push(v0);
    let mut n_pow = Rational::one();
    for e in 1..=d {
        n_pow *= &nq;
        let table = CoeffTable::new(e);
        let boundary = &np1 * &lead * &n_pow * &h_n1;
        let value = (boundary - alternating_tail(&table, &out) - Rational::from(2) * &u[e as usize])
            / Rational::from(2 * e + 3);
        out.push(value);
    }
    out
}

pub fn u_rec(d: u32, n: u64) -> Rational {
    u_table(d, n).pop().expect("non-empty")
}

pub fn v_rec(d: u32, n: u64) -> Rational {
    v_table(d, n).pop().expect("non-empty")
}

/// Naive summation of `U_d(n)`; the baseline for benchmarks.
pub fn u_direct(d: u32, n: u64) -> Rational {
    (1..=n)
        .map(|k| {
            Rational::from_bigints(pow4(k) * num_bigint::BigInt::from(k).pow(d), central_binomial(k))
        })
        .sum()
}

/// Naive summation of `V_d(n)`.
pub fn v_direct(d: u32, n: u64) -> Rational {
    let mut h = Rational::zero();
    let mut acc = Rational::zero();
    for k in 1..=n {
        h += Rational::new(1, k as i64);
        let w = Rational::from_bigints(pow4(k) * num_bigint::BigInt::from(k).pow(d), central_binomial(k));
        acc += w * &h;
    }
    acc
}

/// The printed closed forms for `U_1`, `U_2`, `U_3`.
pub fn u_closed_small(d: u32, n: u64) -> Result<Rational> {
    let n_i = n as i64;
    let (poly, denom, constant) = match d {
        1 => (3 * n_i + 1, 15, -2),
        2 => (15 * n_i * n_i + 12 * n_i - 1, 105, 2),
        3 => (105 * n_i.pow(3) + 135 * n_i * n_i + 3 * n_i - 9, 945, 18),
        _ => return Err(Error::Domain(format!("no explicit U_d for d = {d}"))),
    };
    let main = Rational::from(poly) * Rational::from(n + 1) * lead(n);
    Ok((main + Rational::from(constant)) / Rational::from(denom))
}

/// The printed closed forms for `V_1`, `V_2`.
pub fn v_closed_small(d: u32, n: u64) -> Result<Rational> {
    let n_i = n as i64;
    let (p, p_den, q, q_den, constant) = match d {
        1 => (3 * n_i + 1, 15, 18 * n_i * n_i - 11 * n_i + 1, 225, Rational::new(2, 225)),
        2 => (
            15 * n_i * n_i + 12 * n_i - 1,
            105,
            450 * n_i.pow(3) - 261 * n_i * n_i - 328 * n_i + 173,
            11025,
            Rational::new(346, 11025),
        ),
        _ => return Err(Error::Domain(format!("no explicit V_d for d = {d}"))),
    };
    let lead = lead(n);
    let h_term = Rational::from(n + 1) * Rational::from(p) * &lead * harmonic(n) / Rational::from(p_den);
    let q_term = Rational::from(q) * &lead / Rational::from(q_den);
    Ok(h_term - q_term + constant)
}
