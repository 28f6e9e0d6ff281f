mod common;

use common::*;
use hbe_core::recursions::{
    c_coeff, fit_structure, fit_u_structure, u_closed_small, u_rec, u_table, v_closed_small,
    v_rec, v_table, CoeffTable,
};
use hbe_core::Rational;

/// Prefix sums of `4^k k^d / C(2k,k)` and the `H_k`-weighted version for
/// `n = 0..=n_max`, built from factorial binomials and naive harmonics.
fn reference_prefixes(d: u32, n_max: u64) -> (Vec<Q>, Vec<Q>) {
    let (mut u, mut v) = (vec![qi(0)], vec![qi(0)]);
    let mut hk = qi(0);
    for k in 1..=n_max {
        hk += qi(k).recip();
        let w = four_pow(k) * qi(k.pow(d)) / choose(2 * k, k);
        u.push(u.last().unwrap() + &w);
        v.push(v.last().unwrap() + w * &hk);
    }
    (u, v)
}

#[test]
fn recursions_equal_direct_summation() {
    let refs: Vec<_> = (0..=6).map(|d| reference_prefixes(d, 100)).collect();
    for n in 1..=100u64 {
        let us = u_table(6, n);
        let vs = v_table(6, n);
        for d in 0..=6usize {
            assert_eq!(to_q(&us[d]), refs[d].0[n as usize], "U d={d} n={n}");
            assert_eq!(to_q(&vs[d]), refs[d].1[n as usize], "V d={d} n={n}");
        }
    }
    assert_eq!(u_rec(1, 2), Rational::new(22, 3));
    assert_eq!(v_rec(0, 2), Rational::from(6));
    assert_eq!(u_rec(3, 1), Rational::from(2));
    assert_eq!(v_rec(2, 1), Rational::from(2));
}

#[test]
fn single_sum_helpers_agree() {
    for n in [1u64, 2, 7, 19] {
        assert_eq!(to_q(&u_rec(4, n)), u_sum(4, n));
        assert_eq!(to_q(&v_rec(3, n)), v_sum(3, n));
    }
}

#[test]
fn printed_small_forms_agree() {
    for n in 1..=200u64 {
        let us = u_table(3, n);
        let vs = v_table(2, n);
        for d in 1..=3u32 {
            assert_eq!(u_closed_small(d, n).unwrap(), us[d as usize], "U d={d} n={n}");
        }
        for d in 1..=2u32 {
            assert_eq!(v_closed_small(d, n).unwrap(), vs[d as usize], "V d={d} n={n}");
        }
    }
    assert!(u_closed_small(4, 3).is_err());
    assert!(v_closed_small(3, 3).is_err());
}

#[test]
fn fits_hold_beyond_their_samples() {
    for d in 1..=6u32 {
        let fit = fit_structure(d).unwrap();
        assert!(fit.residual_ok, "d={d}: {:?}", fit.diagnostic);
        let start = *fit.validation_range().end() + 1;
        for n in start..start + 10 {
            assert_eq!(to_q(&fit.eval(n)), v_sum(d, n), "V fit d={d} n={n}");
        }
        let ufit = fit_u_structure(d).unwrap();
        assert!(ufit.residual_ok, "d={d}");
        // the U and V shapes share their leading polynomial
        assert_eq!(ufit.r, fit.p, "d={d}");
        for n in 30..40 {
            assert_eq!(to_q(&ufit.eval(n)), u_sum(d, n), "U fit d={d} n={n}");
        }
    }
}

#[test]
fn boundary_expansion() {
    for d in 1..=8u32 {
        let table = CoeffTable::new(d);
        assert_eq!(table.get(1).unwrap(), &Rational::from(d * d));
        assert_eq!(c_coeff(d, d).unwrap(), Rational::one());
        for k in 0..=30i64 {
            let kq = Rational::from(k);
            let lhs = Rational::from(2 * k + 1) * kq.pow(d as i32)
                - Rational::from(2 * k - 1) * Rational::from(k - 1).pow(d as i32);
            let mut rhs = Rational::from(2 * d + 2) * kq.pow(d as i32);
            for j in 1..=d {
                let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
                rhs += &(sign * table.get(j).unwrap() * kq.pow((d - j) as i32));
            }
            assert_eq!(lhs, rhs, "d={d} k={k}");
        }
    }
    assert!(c_coeff(3, 0).is_err() && c_coeff(3, 4).is_err());
    assert_eq!(c_coeff(3, 2).unwrap(), Rational::from(5));
}
