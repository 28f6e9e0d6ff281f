//! Independent reference arithmetic for integration tests.
//!
//! Everything here is built straight on `BigRational` with factorials, so
//! nothing is shared with the running products used by the library.
#![allow(dead_code)]

use hbe_core::{Rational, SymValue};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

pub fn qi(a: u64) -> Q {
    Q::from_integer(BigInt::from(a))
}

pub fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// `n! / (k! (n-k)!)`, zero for `k > n`.
pub fn choose(n: u64, k: u64) -> Q {
    if k > n {
        return Q::zero();
    }
    Q::new(fact(n), fact(k) * fact(n - k))
}

pub fn four_pow(k: u64) -> Q {
    Q::from_integer(BigInt::from(4).pow(k as u32))
}

pub fn h(n: u64) -> Q {
    (1..=n).map(qi).map(|x| x.recip()).fold(Q::zero(), |a, b| a + b)
}

pub fn h2(n: u64) -> Q {
    (1..=n).map(|k| qi(k * k).recip()).fold(Q::zero(), |a, b| a + b)
}

pub fn o(n: u64) -> Q {
    (1..=n).map(|k| qi(2 * k - 1).recip()).fold(Q::zero(), |a, b| a + b)
}

pub fn o2(n: u64) -> Q {
    (1..=n)
        .map(|k| qi((2 * k - 1) * (2 * k - 1)).recip())
        .fold(Q::zero(), |a, b| a + b)
}

pub fn sum(it: impl Iterator<Item = Q>) -> Q {
    it.fold(Q::zero(), |a, b| a + b)
}

/// `sum_{k=1..n} 4^k k^d / C(2k,k)`.
pub fn u_sum(d: u32, n: u64) -> Q {
    sum((1..=n).map(|k| four_pow(k) * qi(k.pow(d)) / choose(2 * k, k)))
}

/// `sum_{k=1..n} 4^k k^d H_k / C(2k,k)`.
pub fn v_sum(d: u32, n: u64) -> Q {
    sum((1..=n).map(|k| four_pow(k) * qi(k.pow(d)) * h(k) / choose(2 * k, k)))
}

pub fn to_q(r: &Rational) -> Q {
    Q::new(r.numer().clone(), r.denom().clone())
}

pub fn from_q(x: &Q) -> Rational {
    Rational::from_bigints(x.numer().clone(), x.denom().clone())
}

pub fn sym(x: &Q) -> SymValue {
    SymValue::from(from_q(x))
}
