use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::Rational;
use crate::error::{Error, Result};

pub const LN2: f64 = std::f64::consts::LN_2;
pub const PI_SQUARED: f64 = std::f64::consts::PI * std::f64::consts::PI;

/// Basis element of the constant ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    One,
    Ln2,
    Ln2Squared,
    PiSquared,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::Ln2, Basis::Ln2Squared, Basis::PiSquared];

    fn index(self) -> usize {
        self as usize
    }

    fn label(self) -> &'static str {
        match self {
            Basis::One => "",
            Basis::Ln2 => "ln2",
            Basis::Ln2Squared => "ln2^2",
            Basis::PiSquared => "pi^2",
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Basis::One => 1.0,
            Basis::Ln2 => LN2,
            Basis::Ln2Squared => LN2 * LN2,
            Basis::PiSquared => PI_SQUARED,
        }
    }

    fn product(self, other: Basis) -> Option<Basis> {
        use Basis::*;
        match (self, other) {
            (One, b) | (b, One) => Some(b),
            (Ln2, Ln2) => Some(Ln2Squared),
            _ => None,
        }
    }
}

/// Element of the rational span of `1, ln2, ln2^2, pi^2`.
///
/// The basis is treated as linearly independent, so equality is
/// coefficient-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymValue {
    coeffs: [Rational; 4],
}

impl SymValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(one: Rational, ln2: Rational, ln2_sq: Rational, pi_sq: Rational) -> Self {
        SymValue {
            coeffs: [one, ln2, ln2_sq, pi_sq],
        }
    }

    pub fn basis(b: Basis) -> Self {
        let mut v = Self::zero();
        v.coeffs[b.index()] = Rational::one();
        v
    }

    pub fn coeff(&self, b: Basis) -> &Rational {
        &self.coeffs[b.index()]
    }

    pub fn rational_part(&self) -> &Rational {
        self.coeff(Basis::One)
    }

    /// `Some(q)` if only the rational coefficient is nonzero.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Rational::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        SymValue {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
        }
    }

    /// Ring product; fails when a product term has no basis representative
    /// (for example `ln2 * pi^2`).
    pub fn try_mul(&self, other: &SymValue) -> Result<Self> {
        let mut out = SymValue::zero();
        for a in Basis::ALL {
            let ca = self.coeff(a);
            if ca.is_zero() {
                continue;
            }
            for b in Basis::ALL {
                let cb = other.coeff(b);
                if cb.is_zero() {
                    continue;
                }
                let target = a.product(b).ok_or_else(|| {
                    Error::OutOfSpan(format!("{} * {}", a.label(), b.label()))
                })?;
                out.coeffs[target.index()] += ca * cb;
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> Result<Self> {
        self.try_mul(self)
    }

    pub fn to_f64(&self) -> f64 {
        Basis::ALL
            .iter()
            .map(|&b| self.coeff(b).to_f64() * b.to_f64())
            .sum()
    }
}

impl From<Rational> for SymValue {
    fn from(q: Rational) -> Self {
        SymValue::new(q, Rational::zero(), Rational::zero(), Rational::zero())
    }
}

impl PartialEq<Rational> for SymValue {
    fn eq(&self, other: &Rational) -> bool {
        self.as_rational() == Some(other)
    }
}

/// Renders as `a + b*ln2 + c*ln2^2 + d*pi^2`, omitting zero terms.
impl fmt::Display for SymValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in Basis::ALL {
            let c = self.coeff(b);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match b {
                Basis::One => write!(f, "{mag}")?,
                _ if mag == Rational::one() => write!(f, "{}", b.label())?,
                _ => write!(f, "{mag}*{}", b.label())?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&SymValue> for &SymValue {
    type Output = SymValue;
    fn add(self, rhs: &SymValue) -> SymValue {
        SymValue {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Add for SymValue {
    type Output = SymValue;
    fn add(mut self, rhs: SymValue) -> SymValue {
        self += &rhs;
        self
    }
}

impl Sub<&SymValue> for &SymValue {
    type Output = SymValue;
    fn sub(self, rhs: &SymValue) -> SymValue {
        SymValue {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Sub for SymValue {
    type Output = SymValue;
    fn sub(mut self, rhs: SymValue) -> SymValue {
        self -= &rhs;
        self
    }
}

impl AddAssign<&SymValue> for SymValue {
    fn add_assign(&mut self, rhs: &SymValue) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&SymValue> for SymValue {
    fn sub_assign(&mut self, rhs: &SymValue) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl AddAssign<&Rational> for SymValue {
    fn add_assign(&mut self, rhs: &Rational) {
        self.coeffs[0] += rhs;
    }
}

impl Add<Rational> for SymValue {
    type Output = SymValue;
    fn add(mut self, rhs: Rational) -> SymValue {
        self.coeffs[0] += rhs;
        self
    }
}

impl Sub<Rational> for SymValue {
    type Output = SymValue;
    fn sub(mut self, rhs: Rational) -> SymValue {
        self.coeffs[0] -= &rhs;
        self
    }
}

impl Mul<&Rational> for &SymValue {
    type Output = SymValue;
    fn mul(self, rhs: &Rational) -> SymValue {
        self.scale(rhs)
    }
}

impl Mul<&Rational> for SymValue {
    type Output = SymValue;
    fn mul(self, rhs: &Rational) -> SymValue {
        self.scale(rhs)
    }
}

impl Neg for SymValue {
    type Output = SymValue;
    fn neg(self) -> SymValue {
        SymValue {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}
