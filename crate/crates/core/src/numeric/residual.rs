//! Partial sums of `S_n = sum_{j=1..n} 4^j / (j^2 C(2j,j))` with tail
//! bounds.
//!
//! No closed form is assumed. The tail bounds come from the central
//! binomial estimates `sqrt(pi j) <= 4^j / C(2j,j) <= sqrt(pi (j + 1/2))`,
//! which sandwich each term between multiples of `j^(-3/2)`; comparing with
//! `integral x^(-3/2) dx` then gives
//!
//! ```text
//! 2 sqrt(pi) / sqrt(n+1)  <=  sum_{j>n} t_j  <=  2 sqrt(pi) sqrt(1 + 1/(2n+2)) / sqrt(n)
//! ```

use serde::Serialize;

use crate::catalog::residual_partial_sum;
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailBound {
    pub lower: f64,
    pub upper: f64,
}

impl TailBound {
    pub fn for_n(n: u64) -> Self {
        let nf = n as f64;
        let c = 2.0 * std::f64::consts::PI.sqrt();
        TailBound {
            lower: c / (nf + 1.0).sqrt(),
            upper: c * (1.0 + 1.0 / (2.0 * nf + 2.0)).sqrt() / nf.sqrt(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualEstimate {
    pub n: u64,
    /// `S_n` in double precision.
    pub partial: f64,
    pub tail: TailBound,
}

impl ResidualEstimate {
    /// Bracket `[S_n + lower, S_n + upper]` for the infinite sum.
    pub fn limit_bracket(&self) -> (f64, f64) {
        (self.partial + self.tail.lower, self.partial + self.tail.upper)
    }

    pub fn limit_estimate(&self) -> f64 {
        let (lo, hi) = self.limit_bracket();
        0.5 * (lo + hi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSum {
    pub exact: Rational,
    pub estimate: ResidualEstimate,
}

/// Exact `S_n` plus its float rendering and tail bounds. Requires `n >= 1`.
pub fn residual_sum(n: u64) -> ResidualSum {
    assert!(n >= 1, "residual sum starts at n = 1");
    let exact = residual_partial_sum(n);
    let partial = exact.to_f64();
    ResidualSum {
        exact,
        estimate: ResidualEstimate {
            n,
            partial,
            tail: TailBound::for_n(n),
        },
    }
}

/// Float-only `S_n` for large `n`, with terms from the ratio
/// `t_{j+1}/t_j = 2 j^2 / ((j+1)(2j+1))` and compensated summation.
pub fn residual_sum_numeric(n: u64) -> ResidualEstimate {
    assert!(n >= 1, "residual sum starts at n = 1");
    let mut t = 2.0;
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for j in 1..=n {
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        let jf = j as f64;
        t *= 2.0 * jf * jf / ((jf + 1.0) * (2.0 * jf + 1.0));
    }
    ResidualEstimate {
        n,
        partial: sum,
        tail: TailBound::for_n(n),
    }
}
