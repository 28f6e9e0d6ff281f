//! Left sides (term-by-term sums) and right sides (closed forms) of every
//! catalogued identity.
//!
//! Left sides walk `k` with running products and running harmonic sums;
//! right sides evaluate each binomial and harmonic value at the endpoint
//! from scratch, so the two routes share nothing beyond exact arithmetic.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::exact::{
    binom_gen, central_binomial, harmonic, harmonic2, harmonic2_exact, harmonic_exact,
    odd_harmonic, pow2, pow4, ExactParam, Rational, SymValue,
};

pub(crate) type Lhs = Result<(SymValue, u64)>;
pub(crate) type Rhs = Result<SymValue>;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn r<T: Into<Rational>>(x: T) -> Rational {
    x.into()
}

fn frac(num: BigInt, den: BigInt) -> Rational {
    Rational::from_bigints(num, den)
}

fn param(m: Option<ExactParam>) -> ExactParam {
    m.expect("catalog checks the parameter domain before evaluation")
}

fn int_param(m: Option<ExactParam>) -> u64 {
    param(m)
        .as_integer()
        .expect("catalog checks integrality before evaluation")
}

fn rational(v: Rational) -> Rhs {
    Ok(v.into())
}

/// `1/(m+k)` as an exact rational.
fn inv_shift(m: ExactParam, k: u64) -> Rational {
    (m.value() + r(k)).recip()
}

/// Yields `(k, 4^k, C(2k,k))` for `k = 0, 1, 2, ...`, updating both
/// integers incrementally.
struct CentralWeights {
    k: u64,
    pow4: BigInt,
    cb: BigInt,
}

impl CentralWeights {
    fn new() -> Self {
        CentralWeights {
            k: 0,
            pow4: BigInt::one(),
            cb: BigInt::one(),
        }
    }
}

impl Iterator for CentralWeights {
    type Item = (u64, BigInt, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        let item = (self.k, self.pow4.clone(), self.cb.clone());
        let k = self.k;
        self.pow4 <<= 2u32;
        // C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)
        self.cb *= 2 * (2 * k + 1);
        self.cb /= k + 1;
        self.k += 1;
        Some(item)
    }
}

/// `4^k / C(2k,k)` for `k = 0..=n`.
fn central_ratios(n: u64) -> impl Iterator<Item = (u64, Rational)> {
    CentralWeights::new()
        .take(n as usize + 1)
        .map(|(k, p, c)| (k, frac(p, c)))
}

/// `C(2k,k)` for `k = 0..=n`.
fn central_table(n: u64) -> Vec<BigInt> {
    CentralWeights::new()
        .take(n as usize + 1)
        .map(|(_, _, c)| c)
        .collect()
}

/// `2^(2n+1) / C(2n,n)`.
fn lead(n: u64) -> Rational {
    frac(pow2(2 * n + 1), central_binomial(n))
}

/// `4^n / C(2n,n)`.
fn quarter_lead(n: u64) -> Rational {
    frac(pow4(n), central_binomial(n))
}

/// `sum_{j=1..n} 4^j / (j^2 C(2j,j))`, summed term by term.
pub fn residual_partial_sum(n: u64) -> Rational {
    central_ratios(n)
        .skip(1)
        .map(|(j, w)| w / r(j * j))
        .sum()
}

// ---------------------------------------------------------------- rockett

pub(crate) fn rockett_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut c = BigInt::one();
    let mut acc = Rational::zero();
    for k in 0..=n {
        if k > 0 {
            c *= n - k + 1;
            c /= k;
        }
        acc += frac(BigInt::one(), c.clone());
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn rockett_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let inner: Rational = (1..=n + 1).map(|k| frac(pow2(k), k.into())).sum();
    rational(frac((n + 1).into(), pow2(n + 1)) * inner)
}

// ---------------------------------------------------------------- cb0

pub(crate) fn cb0_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let acc: Rational = central_ratios(n).map(|(_, w)| w).sum();
    Ok((acc.into(), n + 1))
}

pub(crate) fn cb0_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    rational((r(n + 1) * lead(n) + r(1)) / r(3))
}

/// The same right side written with the Catalan number `C_n`:
/// `(2^(2n+1)/C_n + 1)/3`.
pub fn cb0_catalan_form(n: u64) -> Rational {
    (frac(pow2(2 * n + 1), BigInt::one()) / crate::exact::catalan(n) + r(1)) / r(3)
}

// ---------------------------------------------------------------- cb-gen

/// Partial sums for `n = 0..=n_max`.
pub(crate) type Prefix = Result<Vec<SymValue>>;

fn last(prefix: Prefix, terms: u64) -> Lhs {
    Ok((prefix?.pop().expect("prefix has n + 1 entries"), terms))
}

pub(crate) fn cb_gen_prefix(m: Option<ExactParam>, n_max: u64) -> Prefix {
    let m = param(m).value();
    let mut b = Rational::one();
    let mut acc = Rational::zero();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for (k, w) in central_ratios(n_max) {
        if k > 0 {
            b = b * (&m + r(k)) / r(k);
        }
        acc += w * &b;
        out.push(acc.clone().into());
    }
    Ok(out)
}

pub(crate) fn cb_gen_lhs(m: Option<ExactParam>, n: u64) -> Lhs {
    last(cb_gen_prefix(m, n), n + 1)
}

pub(crate) fn cb_gen_rhs(m: Option<ExactParam>, n: u64) -> Rhs {
    let m = param(m).value();
    let t = r(2) * &m + r(3);
    let main = (&m + r(n + 1)) * binom_gen(&m, n) * lead(n);
    rational((main + r(1)) / t)
}

// ---------------------------------------------------------------- thm21

pub(crate) fn thm21_prefix(m: Option<ExactParam>, n_max: u64) -> Prefix {
    let p = param(m);
    let mv = p.value();
    let mut b = Rational::one();
    let mut h = harmonic_exact(p);
    let mut acc = SymValue::zero();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for (k, w) in central_ratios(n_max) {
        if k > 0 {
            b = b * (&mv + r(k)) / r(k);
            h += &inv_shift(p, k);
        }
        acc += &(&h * &(w * &b));
        out.push(acc.clone());
    }
    Ok(out)
}

pub(crate) fn thm21_lhs(m: Option<ExactParam>, n: u64) -> Lhs {
    last(thm21_prefix(m, n), n + 1)
}

pub(crate) fn thm21_rhs(m: Option<ExactParam>, n: u64) -> Rhs {
    let p = param(m);
    let mv = p.value();
    let t = r(2) * &mv + r(3);
    let ratio = binom_gen(&mv, n) / frac(central_binomial(n), BigInt::one());
    let h_m = harmonic_exact(p);
    let h_mn = harmonic_exact(p.shift(n));
    let first = (h_mn * &(frac(pow2(2 * n + 1), BigInt::one()) * (&mv + r(n + 1)) * &ratio) + h_m)
        * &t.recip();
    let second = (frac(pow4(n), BigInt::one()) * r(2 * n as i64 - 1) * &ratio + r(1)) * r(2)
        / (&t * &t);
    Ok(first - second)
}

// ---------------------------------------------------------------- har

pub(crate) fn har_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut h = Rational::zero();
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n) {
        if k > 0 {
            h += q(1, k as i64);
        }
        acc += w * &h;
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn har_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let inner = r(n + 1) * harmonic(n) - q(2 * n as i64 - 1, 3);
    rational(lead(n) / r(3) * inner - q(2, 9))
}

// ---------------------------------------------------------------- har-mn

pub(crate) fn har_mn_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut c = Rational::one();
    let mut h = harmonic(n);
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n) {
        if k > 0 {
            c = c * r(n + k) / r(k);
            h += q(1, (n + k) as i64);
        }
        acc += w * &c * &h;
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn har_mn_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let t = r(2 * n + 3);
    let first = frac(pow2(2 * n + 1), BigInt::one()) / &t
        * (r(2 * n + 1) * harmonic(2 * n) - r(2 * n as i64 - 1) / &t);
    let second = (harmonic(n) - r(2) / &t) / &t;
    rational(first + second)
}

// ---------------------------------------------------------------- ohar

pub(crate) fn ohar_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut o = Rational::zero();
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n) {
        if k > 0 {
            o += q(1, 2 * k as i64 - 1);
        }
        acc += w * &o;
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn ohar_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let tail = q(2, 9) * quarter_lead(n) * r(n + 1) * (r(3) * odd_harmonic(n) - r(1));
    rational(q(2, 9) + tail)
}

// ---------------------------------------------------------------- evenhar

pub(crate) fn evenhar_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut h = Rational::zero();
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n) {
        if k > 0 {
            h += q(1, 2 * k as i64 - 1);
            h += q(1, 2 * k as i64);
        }
        acc += w * &h;
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn evenhar_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let inner = r(2 * (n + 1)) * harmonic(2 * n) - q(4 * n as i64 + 1, 3);
    rational(q(1, 9) + quarter_lead(n) / r(3) * inner)
}

// ---------------------------------------------------------------- o1 / o2

pub(crate) fn o1_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut o = Rational::zero();
    let mut acc = Rational::zero();
    for k in 0..=n {
        o += q(1, 2 * k as i64 + 1);
        acc += r(2 * k + 1) * &o;
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn o1_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let ni = n as i64;
    let v = r((2 * ni + 1) * (2 * ni + 3)) * odd_harmonic(n + 1) - r((ni - 1) * (ni + 1));
    rational(v / r(4))
}

pub(crate) fn o2_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut o = Rational::zero();
    let mut acc = Rational::zero();
    for k in 1..=n {
        o += q(1, 2 * k as i64 - 1);
        acc += &o;
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn o2_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    rational(q(2 * n as i64 + 1, 2) * odd_harmonic(n) - q(n as i64, 2))
}

// ---------------------------------------------------------------- chujin

pub(crate) fn chujin_lhs(m: Option<ExactParam>, n: u64) -> Lhs {
    let m = int_param(m);
    let mut c = BigInt::one();
    let mut b = Rational::one();
    let mut h = Rational::zero();
    let mut acc = Rational::zero();
    for k in 0..=n {
        if k > 0 {
            c *= n - k + 1;
            c /= k;
            b = b * r(m + k) / r(k);
            h += q(1, k as i64);
        }
        let term = frac(c.clone(), BigInt::one()) / &b * &h;
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn chujin_rhs(m: Option<ExactParam>, n: u64) -> Rhs {
    let m = int_param(m);
    rational(q(m as i64, (n + m) as i64) * (harmonic(m - 1) - harmonic(n + m - 1)))
}

// ---------------------------------------------------------------- cb2

pub(crate) fn cb2_lhs(m: Option<ExactParam>, n: u64) -> Lhs {
    let top = param(m).value() + r(n + 1);
    let cbs = central_table(n);
    let mut c_top = Rational::one();
    let mut c_n = BigInt::one();
    let mut p4 = BigInt::one();
    let mut acc = Rational::zero();
    for k in 0..n {
        if k > 0 {
            c_top = c_top * (&top - r(k - 1)) / r(k);
            c_n *= n - k + 1;
            c_n /= k;
            p4 <<= 2u32;
        }
        let j = n - k;
        let w = frac(p4.clone() * &cbs[j as usize], c_n.clone() * (2 * j - 1));
        acc += w * &c_top;
    }
    Ok((acc.into(), n))
}

pub(crate) fn cb2_rhs(m: Option<ExactParam>, n: u64) -> Rhs {
    let m = param(m).value();
    let t = r(2) * &m + r(3);
    let first = frac(pow4(n), BigInt::one()) * (&m + r(n + 1)) / ((&m + r(1)) * &t) * binom_gen(&m, n);
    let second = frac(central_binomial(n), BigInt::one()) / &t;
    rational(first - second)
}

// ---------------------------------------------------------------- thm41 family

/// `sum_{k=1..n} C(2k,k) / (4^k (2k-1) C(m+k+1,k)) * H_{m+k+1}` for
/// `n = 0..=n_max`.
pub(crate) fn thm41_prefix(m: Option<ExactParam>, n_max: u64) -> Prefix {
    let p = param(m);
    let m1 = p.value() + r(1);
    let mut g = Rational::one();
    let mut h = harmonic_exact(p.shift(1));
    let mut acc = SymValue::zero();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(acc.clone());
    for (k, w) in central_ratios(n_max).skip(1) {
        g = g * (&m1 + r(k)) / r(k);
        h += &inv_shift(p, k + 1);
        let weight = (w * r(2 * k - 1) * &g).recip();
        acc += &(&h * &weight);
        out.push(acc.clone());
    }
    Ok(out)
}

pub(crate) fn thm41_lhs(m: Option<ExactParam>, n: u64) -> Lhs {
    last(thm41_prefix(m, n), n)
}

pub(crate) fn thm41_rhs(m: Option<ExactParam>, n: u64) -> Rhs {
    let p = param(m);
    let mv = p.value();
    let t = r(2) * &mv + r(3);
    let m1 = &mv + r(1);
    let head = (r(4) * &mv + r(5)) / (&m1 * &t * &t);
    let h_m = harmonic_exact(p);
    let h_end = harmonic_exact(p.shift(n + 1));
    let scale = frac(central_binomial(n), pow4(n)) / binom_gen(&m1, n) / &t;
    let tail = (h_end + r(2) / &t) * &scale;
    Ok(h_m * &t.recip() + head - tail)
}

pub(crate) fn c41a_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut acc = Rational::zero();
    let mut h = r(1);
    for (k, w) in central_ratios(n).skip(1) {
        h += q(1, k as i64 + 1);
        acc += (w * r((2 * k - 1) * (k + 1))).recip() * &h;
    }
    Ok((acc.into(), n))
}

pub(crate) fn c41a_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let scale = frac(central_binomial(n), pow4(n) * 3u32 * (n + 1));
    rational(q(5, 9) - scale * (harmonic(n + 1) + q(2, 3)))
}

pub(crate) fn c41b_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut acc = Rational::zero();
    let mut h = q(3, 2);
    for (k, w) in central_ratios(n).skip(1) {
        h += q(1, k as i64 + 2);
        acc += (w * r((2 * k - 1) * (k + 1) * (k + 2))).recip() * &h;
    }
    Ok((acc.into(), n))
}

pub(crate) fn c41b_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let scale = frac(central_binomial(n), pow4(n) * 5u32 * (n + 1) * (n + 2));
    rational(q(19, 100) - scale * (harmonic(n + 2) + q(2, 5)))
}

pub(crate) fn c42_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut acc = Rational::zero();
    let mut c = Rational::one();
    let mut h = harmonic(n);
    for (k, w) in central_ratios(n).skip(1) {
        c = c * r(n + k) / r(k);
        h += q(1, (n + k) as i64);
        acc += (w * r(2 * k - 1) * &c).recip() * &h;
    }
    Ok((acc.into(), n))
}

pub(crate) fn c42_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let t = r(2 * n + 1);
    let first = (harmonic(n) + r(2) / &t) / &t;
    let second = (harmonic(2 * n) + r(2) / &t) / (&t * frac(pow4(n), BigInt::one()));
    rational(first - second)
}

// ---------------------------------------------------------------- riordan

pub(crate) fn riordan_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let acc: Rational = central_ratios(n)
        .map(|(k, w)| (w * r(2 * k as i64 - 1)).recip())
        .sum();
    Ok((acc.into(), n + 1))
}

pub(crate) fn riordan_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    rational(-frac(central_binomial(n), pow4(n)))
}

// ---------------------------------------------------------------- thm51

pub(crate) fn thm51_prefix(m: Option<ExactParam>, n_max: u64) -> Prefix {
    let p = param(m);
    let mv = p.value();
    let mut b = Rational::one();
    let mut h = harmonic_exact(p);
    let mut h2 = harmonic2_exact(p);
    let mut acc = SymValue::zero();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for (k, w) in central_ratios(n_max) {
        if k > 0 {
            b = b * (&mv + r(k)) / r(k);
            let step = inv_shift(p, k);
            h2 += &(&step * &step);
            h += &step;
        }
        let inner = h.square()? - h2.clone();
        acc += &(inner * &(w * &b));
        out.push(acc.clone());
    }
    Ok(out)
}

pub(crate) fn thm51_lhs(m: Option<ExactParam>, n: u64) -> Lhs {
    last(thm51_prefix(m, n), n + 1)
}

pub(crate) fn thm51_rhs(m: Option<ExactParam>, n: u64) -> Rhs {
    let p = param(m);
    let mv = p.value();
    let t = r(2) * &mv + r(3);
    let ratio = binom_gen(&mv, n) / frac(central_binomial(n), BigInt::one());
    let h_m = harmonic_exact(p);
    let h2_m = harmonic2_exact(p);
    let h_mn = harmonic_exact(p.shift(n));
    let h2_mn = harmonic2_exact(p.shift(n));
    let two_pow = |e: u64| frac(pow2(e), BigInt::one());
    let mn1 = &mv + r(n + 1);

    let a = h_m.square()? - h2_m
        + (h_mn.clone() + (h_mn.square()? - h2_mn) * &mn1) * &(two_pow(2 * n + 1) * &ratio);
    let b = &h_mn * &(two_pow(2 * n + 2) * &mn1 * &ratio)
        + h_m * &r(4)
        + &h_mn * &(two_pow(2 * n + 1) * r(2 * n as i64 - 1) * &ratio);
    let c = two_pow(2 * n) * r(2 * n as i64 - 1) * &ratio + r(1);

    let t2 = &t * &t;
    Ok(a * &t.recip() - b * &t2.recip() + (c * r(8) / (t2 * t)))
}

pub(crate) fn thm51_0_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut h = Rational::zero();
    let mut h2 = Rational::zero();
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n) {
        if k > 0 {
            h += q(1, k as i64);
            h2 += q(1, (k * k) as i64);
        }
        acc += w * (&h * &h - &h2);
    }
    Ok((acc.into(), n + 1))
}

pub(crate) fn thm51_0_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let h = harmonic(n);
    let h2 = harmonic2(n);
    let two_n1 = r(2 * n as i64 - 1);
    let first = lead(n) / r(3) * (r(n + 1) * (&h * &h - h2) - q(2, 3) * &two_n1 * &h);
    let second = q(8, 27) * (two_n1 * quarter_lead(n) + r(1));
    rational(first + second)
}

// ---------------------------------------------------------------- hsq / h2o / parker

pub(crate) fn hsq_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut h = Rational::zero();
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n).skip(1) {
        h += q(1, k as i64);
        acc += w * &h * &h;
    }
    Ok((acc.into(), n))
}

pub(crate) fn hsq_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let h = harmonic(n);
    let ni = n as i64;
    let inner = r(n + 1) * &h * &h - q(2 * (2 * ni - 1), 3) * &h + q(8 * ni - 22, 9);
    rational(q(44, 27) + lead(n) / r(3) * inner + residual_partial_sum(n) / r(3))
}

pub(crate) fn h2o_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let mut h2 = Rational::zero();
    let mut acc = Rational::zero();
    for (k, w) in central_ratios(n).skip(1) {
        h2 += q(1, (k * k) as i64);
        acc += w * &h2;
    }
    Ok((acc.into(), n))
}

pub(crate) fn h2o_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    let inner = r(n + 1) * harmonic2(n) - r(2);
    rational(q(4, 3) + lead(n) / r(3) * inner + residual_partial_sum(n) / r(3))
}

pub(crate) fn parker_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let acc: Rational = central_ratios(n).skip(1).map(|(j, w)| w / r(j)).sum();
    Ok((acc.into(), n))
}

pub(crate) fn parker_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    rational(r(2) * (quarter_lead(n) - r(1)))
}

// ---------------------------------------------------------------- haroddhar

pub(crate) fn haroddhar_lhs(_: Option<ExactParam>, n: u64) -> Lhs {
    let acc: Rational = (1..=2 * n).map(|k| q(1, k as i64)).sum();
    Ok((acc.into(), 2 * n))
}

pub(crate) fn haroddhar_rhs(_: Option<ExactParam>, n: u64) -> Rhs {
    rational(harmonic(n) / r(2) + odd_harmonic(n))
}
