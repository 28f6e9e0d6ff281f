use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Parameter `m` restricted to the points where harmonic values have exact
/// closed forms: integers `m >= 0` and half-integers `m >= -1/2`.
///
/// Stored as `2m`, so the admitted set is `twice_m >= -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct ExactParam {
    twice_m: i64,
}

impl ExactParam {
    pub fn from_twice(twice_m: i64) -> Result<Self> {
        if twice_m < -1 {
            return Err(Error::Domain(format!(
                "m = {twice_m}/2 is outside the exact domain (m >= -1/2)"
            )));
        }
        Ok(ExactParam { twice_m })
    }

    pub fn integer(m: u64) -> Self {
        ExactParam {
            twice_m: 2 * m as i64,
        }
    }

    /// `m = n + 1/2` for `n >= -1`.
    pub fn half(n: i64) -> Result<Self> {
        Self::from_twice(2 * n + 1)
    }

    pub fn twice(&self) -> i64 {
        self.twice_m
    }

    pub fn is_integer(&self) -> bool {
        self.twice_m % 2 == 0
    }

    /// `Some(m)` when `m` is a nonnegative integer.
    pub fn as_integer(&self) -> Option<u64> {
        self.is_integer().then_some((self.twice_m / 2) as u64)
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.twice_m, 2)
    }

    pub fn to_f64(&self) -> f64 {
        self.twice_m as f64 / 2.0
    }

    /// `m + k`.
    pub fn shift(&self, k: u64) -> Self {
        ExactParam {
            twice_m: self.twice_m + 2 * k as i64,
        }
    }

    /// All admitted `m` with `-1 <= 2m <= twice_max`, ascending.
    pub fn grid(twice_max: i64) -> Vec<Self> {
        (-1..=twice_max).map(|t| ExactParam { twice_m: t }).collect()
    }

    /// Render as `"p/2"`.
    pub fn render(&self) -> String {
        format!("{}/2", self.twice_m)
    }
}

impl fmt::Display for ExactParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for ExactParam {
    type Err = Error;

    /// Accepts `p/q` with `2p/q` integral, plain integers, and decimals whose
    /// double is integral (`2.5`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let value: Rational = if let Some((int, frac)) = s.split_once('.') {
            let digits = frac.len() as u32;
            let scaled: Rational = format!("{int}{frac}").parse()?;
            scaled / Rational::from_integer(num_bigint::BigInt::from(10).pow(digits))
        } else {
            s.parse()?
        };
        let twice = value * Rational::from(2);
        if !twice.is_integer() {
            return Err(Error::Domain(format!(
                "m = {s} is neither an integer nor a half-integer"
            )));
        }
        let t: i64 = twice
            .numer()
            .try_into()
            .map_err(|_| Error::Parse(format!("m = {s} out of range")))?;
        Self::from_twice(t)
    }
}

impl TryFrom<i64> for ExactParam {
    type Error = Error;
    fn try_from(t: i64) -> Result<Self> {
        Self::from_twice(t)
    }
}

impl From<ExactParam> for i64 {
    fn from(p: ExactParam) -> i64 {
        p.twice_m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain() {
        assert!(ExactParam::from_twice(-1).is_ok());
        assert!(ExactParam::from_twice(-2).is_err());
        assert!(ExactParam::from_twice(-3).is_err());
        assert_eq!(ExactParam::half(-1).unwrap().value(), Rational::new(-1, 2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3/2".parse::<ExactParam>().unwrap().twice(), 3);
        assert_eq!("6/2".parse::<ExactParam>().unwrap().twice(), 6);
        assert_eq!("4".parse::<ExactParam>().unwrap().twice(), 8);
        assert_eq!("2.5".parse::<ExactParam>().unwrap().twice(), 5);
        assert_eq!("-0.5".parse::<ExactParam>().unwrap().twice(), -1);
        assert!("1/3".parse::<ExactParam>().is_err());
        assert!("-1".parse::<ExactParam>().is_err());
        assert!("-3/2".parse::<ExactParam>().is_err());
    }

    #[test]
    fn render() {
        assert_eq!(ExactParam::integer(3).render(), "6/2");
        assert_eq!(ExactParam::half(0).unwrap().render(), "1/2");
        assert_eq!(ExactParam::grid(3).len(), 5);
    }
}
