use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// `2^e` as an exact integer.
pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `4^n = 2^(2n)`.
pub fn pow4(n: u64) -> BigInt {
    pow2(2 * n)
}

fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    // Each partial product C(n-k+j, j) is an integer, so the division is exact.
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc *= n - k + j;
        acc /= j;
    }
    acc
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> BigInt {
    binom_int(2 * n, n)
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binom_nat(n: u64, k: u64) -> Rational {
    Rational::from_integer(binom_int(n, k))
}

/// Product of `f(j)` over `lo..hi`, balanced so operands stay similar in size.
pub(crate) fn product_tree(lo: u64, hi: u64, f: &impl Fn(u64) -> BigInt) -> BigInt {
    match hi.saturating_sub(lo) {
        0 => BigInt::one(),
        1 => f(lo),
        len => {
            let mid = lo + len / 2;
            product_tree(lo, mid, f) * product_tree(mid, hi, f)
        }
    }
}

/// `C(m+k, k) = prod_{j=1..k} (m+j)/j` for rational `m`.
///
/// With `m = a/b` this is `prod (a + j b) / (b^k k!)`, reduced once.
pub fn binom_gen(m: &Rational, k: u64) -> Rational {
    let (a, b) = (m.numer(), m.denom());
    let num = product_tree(1, k + 1, &|j| a + b * j);
    let den = b.pow(k as u32) * product_tree(1, k + 1, &BigInt::from);
    Rational::from_bigints(num, den)
}

/// `C(r, k) = r(r-1)...(r-k+1)/k!` for rational `r`.
pub fn binom_rat(r: &Rational, k: u64) -> Rational {
    binom_gen(&(r - Rational::from(k)), k)
}

/// Catalan number `C(2n,n)/(n+1)`.
pub fn catalan(n: u64) -> Rational {
    Rational::from_bigints(central_binomial(n), BigInt::from(n + 1))
}
