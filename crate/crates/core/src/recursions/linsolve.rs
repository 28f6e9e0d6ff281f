//! Exact square linear solve by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Rational;

/// Solves `a * x = b` exactly. Returns `None` when `a` is singular.
///
/// Rows are first scaled to integers; elimination then stays in the
/// integers, dividing exactly by the previous pivot at each step.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let lcm = row
                .iter()
                .chain(std::iter::once(rhs))
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot_row);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= &(Rational::from_integer(m[i][j].clone()) * &x[j]);
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn small_system() {
        // x + y/2 = 2, x/3 - y = -1/3
        let a = vec![vec![q(1, 1), q(1, 2)], vec![q(1, 3), q(-1, 1)]];
        let b = vec![q(2, 1), q(-1, 3)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![q(11, 7), q(6, 7)]);
    }

    #[test]
    fn needs_row_swap() {
        let a = vec![
            vec![q(0, 1), q(1, 1), q(0, 1)],
            vec![q(2, 1), q(0, 1), q(0, 1)],
            vec![q(0, 1), q(0, 1), q(5, 3)],
        ];
        let b = vec![q(3, 1), q(4, 1), q(5, 1)];
        assert_eq!(solve(&a, &b).unwrap(), vec![q(2, 1), q(3, 1), q(3, 1)]);
    }

    #[test]
    fn singular() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(1, 2), q(1, 1)]];
        assert!(solve(&a, &[q(1, 1), q(1, 1)]).is_none());
    }

    #[test]
    fn hilbert_inverse_row() {
        // Hilbert matrix H_4 times x = e_1 gives the first column of H_4^{-1}.
        let n = 4;
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| q(1, (i + j + 1) as i64)).collect())
            .collect();
        let mut b = vec![Rational::zero(); n];
        b[0] = Rational::one();
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![q(16, 1), q(-120, 1), q(240, 1), q(-140, 1)]);
    }
}
