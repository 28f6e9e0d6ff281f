use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExactParam, Rational, SymValue};

/// `sum 1/den(k)` over `lo..hi` as an unreduced `(p, q)` by binary splitting.
fn split(lo: u64, hi: u64, den: &impl Fn(u64) -> BigInt) -> (BigInt, BigInt) {
    match hi.saturating_sub(lo) {
        0 => (BigInt::zero(), BigInt::one()),
        1 => (BigInt::one(), den(lo)),
        len => {
            let mid = lo + len / 2;
            let (p1, q1) = split(lo, mid, den);
            let (p2, q2) = split(mid, hi, den);
            (p1 * &q2 + p2 * &q1, q1 * q2)
        }
    }
}

fn unit_fraction_sum(n: u64, den: impl Fn(u64) -> BigInt) -> Rational {
    let (p, q) = split(1, n + 1, &den);
    Rational::from_bigints(p, q)
}

/// `H_n = sum_{k=1..n} 1/k`.
pub fn harmonic(n: u64) -> Rational {
    unit_fraction_sum(n, BigInt::from)
}

/// `O_n = sum_{k=1..n} 1/(2k-1)`.
pub fn odd_harmonic(n: u64) -> Rational {
    unit_fraction_sum(n, |k| BigInt::from(2 * k - 1))
}

/// `H_n^(2) = sum_{k=1..n} 1/k^2`.
pub fn harmonic2(n: u64) -> Rational {
    unit_fraction_sum(n, |k| BigInt::from(k) * k)
}

/// `O_n^(2) = sum_{k=1..n} 1/(2k-1)^2`.
pub fn odd_harmonic2(n: u64) -> Rational {
    unit_fraction_sum(n, |k| {
        let o = BigInt::from(2 * k - 1);
        &o * &o
    })
}

/// `H_m` at an exact parameter.
///
/// For `m = n + 1/2` this is `2 O_{n+1} - 2 ln2`.
pub fn harmonic_exact(m: ExactParam) -> SymValue {
    match m.as_integer() {
        Some(k) => harmonic(k).into(),
        None => {
            let n1 = ((m.twice() + 1) / 2) as u64;
            SymValue::new(
                odd_harmonic(n1) * Rational::from(2),
                Rational::from(-2),
                Rational::zero(),
                Rational::zero(),
            )
        }
    }
}

/// `H_m^(2)` at an exact parameter.
///
/// For `m = n + 1/2` this is `4 O_{n+1}^(2) - pi^2/3`, obtained from
/// `H_z^(2) = zeta(2) - psi'(z+1)` and `sum_{j odd} 1/j^2 = pi^2/8`.
pub fn harmonic2_exact(m: ExactParam) -> SymValue {
    match m.as_integer() {
        Some(k) => harmonic2(k).into(),
        None => {
            let n1 = ((m.twice() + 1) / 2) as u64;
            SymValue::new(
                odd_harmonic2(n1) * Rational::from(4),
                Rational::zero(),
                Rational::zero(),
                Rational::new(-1, 3),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Basis;

    #[test]
    fn integer_values() {
        assert_eq!(harmonic(3), Rational::new(11, 6));
        assert_eq!(odd_harmonic(2), Rational::new(4, 3));
        assert_eq!(harmonic2(0), Rational::zero());
        assert_eq!(harmonic2(2), Rational::new(5, 4));
        assert_eq!(odd_harmonic2(2), Rational::new(10, 9));
    }

    #[test]
    fn exact_params() {
        assert_eq!(harmonic_exact(ExactParam::integer(3)), Rational::new(11, 6));
        let h_half = harmonic_exact(ExactParam::half(0).unwrap());
        assert_eq!(h_half.to_string(), "2 - 2*ln2");
        let h_mhalf = harmonic_exact(ExactParam::half(-1).unwrap());
        assert_eq!(h_mhalf.to_string(), "-2*ln2");
        assert_eq!(harmonic2_exact(ExactParam::integer(2)), Rational::new(5, 4));
        assert_eq!(harmonic2_exact(ExactParam::integer(0)), Rational::zero());
        let h2_half = harmonic2_exact(ExactParam::half(0).unwrap());
        assert_eq!(h2_half.to_string(), "4 - 1/3*pi^2");
        assert!((h2_half.to_f64() - 0.710132).abs() < 1e-6);
    }

    #[test]
    fn half_integer_recurrence() {
        // H_{z} = H_{z-1} + 1/z also holds in the ring
        for n in 0..30i64 {
            let z = ExactParam::half(n).unwrap();
            let prev = ExactParam::half(n - 1).unwrap();
            let step = Rational::new(2, 2 * n + 1);
            assert_eq!(harmonic_exact(z), harmonic_exact(prev) + step.clone());
            assert_eq!(
                harmonic2_exact(z),
                harmonic2_exact(prev) + &step * &step
            );
            assert_eq!(*harmonic_exact(z).coeff(Basis::Ln2), Rational::from(-2));
        }
    }
}
