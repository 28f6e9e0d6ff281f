//! Registry of closed-form identities, each paired with a term-by-term
//! summation oracle, and exact verification at points and over ranges.

mod identities;
mod report;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use identities::{cb0_catalan_form, residual_partial_sum};
pub use report::ReportRecord;

use crate::error::{Error, Result};
use crate::exact::{ExactParam, SymValue};

/// Left side evaluator: the value and the number of summed terms.
pub type LhsFn = fn(Option<ExactParam>, u64) -> Result<(SymValue, u64)>;
/// Right side (closed form) evaluator.
pub type RhsFn = fn(Option<ExactParam>, u64) -> Result<SymValue>;
/// Left side partial sums for `n = 0..=n_max`, for identities whose summand
/// does not depend on `n`.
pub type PrefixFn = fn(Option<ExactParam>, u64) -> Result<Vec<SymValue>>;

/// Which constant ring an identity's values live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    Rational,
    Sym,
}

/// Admitted values of the parameter `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MDomain {
    /// The identity has no parameter.
    None,
    /// Every [`ExactParam`].
    Exact,
    /// Integers `m >= min`.
    Integer { min: u64 },
}

impl MDomain {
    pub fn admits(&self, m: &ExactParam) -> bool {
        match self {
            MDomain::None => false,
            MDomain::Exact => true,
            MDomain::Integer { min } => m.as_integer().is_some_and(|v| v >= *min),
        }
    }
}

#[derive(Clone)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub title: &'static str,
    /// Compact statement of the identity.
    pub anchor: &'static str,
    pub m_domain: MDomain,
    pub n_min: u64,
    pub ring: Ring,
    pub lhs: LhsFn,
    pub rhs: RhsFn,
    /// Lets range verification share one running sum across all `n`.
    pub lhs_prefix: Option<PrefixFn>,
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("m_domain", &self.m_domain)
            .field("n_min", &self.n_min)
            .field("ring", &self.ring)
            .finish_non_exhaustive()
    }
}

impl IdentityDescriptor {
    pub fn requires_m(&self) -> bool {
        self.m_domain != MDomain::None
    }

    pub fn check(&self, point: &EvalPoint) -> Result<()> {
        if point.n < self.n_min {
            return Err(Error::Domain(format!(
                "{}: n = {} is below n_min = {}",
                self.id, point.n, self.n_min
            )));
        }
        match (&point.m, self.requires_m()) {
            (None, true) => Err(Error::Domain(format!("{} requires a parameter m", self.id))),
            (Some(_), false) => Err(Error::Domain(format!("{} takes no parameter m", self.id))),
            (Some(m), true) if !self.m_domain.admits(m) => Err(Error::Domain(format!(
                "{}: m = {m} is outside {:?}",
                self.id, self.m_domain
            ))),
            _ => Ok(()),
        }
    }

    /// The admitted parameters among `-1 <= 2m <= twice_max`.
    pub fn param_grid(&self, twice_max: i64) -> Vec<ExactParam> {
        ExactParam::grid(twice_max)
            .into_iter()
            .filter(|m| self.m_domain.admits(m))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvalPoint {
    pub m: Option<ExactParam>,
    pub n: u64,
}

impl EvalPoint {
    pub fn n(n: u64) -> Self {
        EvalPoint { m: None, n }
    }

    pub fn with_m(m: ExactParam, n: u64) -> Self {
        EvalPoint { m: Some(m), n }
    }
}

/// Outcome of checking one identity at one point.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: String,
    pub point: EvalPoint,
    pub lhs: SymValue,
    pub rhs: SymValue,
    pub equal: bool,
    pub lhs_terms: u64,
    pub wall_time_lhs: Duration,
    pub wall_time_rhs: Duration,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CatalogOptions {
    /// Admit half-integer `m` for the order-2 identity. Only meaningful once
    /// the half-integer order-2 harmonic closed form has been validated
    /// numerically.
    pub thm51_half_integers: bool,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<IdentityDescriptor>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}

/// The shared standard catalog.
pub fn registry() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::standard)
}

impl Catalog {
    pub fn standard() -> Self {
        Self::with_options(CatalogOptions::default())
    }

    pub fn with_options(opts: CatalogOptions) -> Self {
        Catalog {
            entries: standard_entries(opts),
        }
    }

    pub fn empty() -> Self {
        Catalog {
            entries: Vec::new(),
        }
    }

    pub fn descriptors(&self) -> &[IdentityDescriptor] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Result<&IdentityDescriptor> {
        self.entries
            .iter()
            .find(|d| d.id == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    /// Adds an entry; ids must stay unique.
    pub fn insert(&mut self, desc: IdentityDescriptor) -> Result<()> {
        if self.entries.iter().any(|d| d.id == desc.id) {
            return Err(Error::Domain(format!("duplicate identity id {}", desc.id)));
        }
        self.entries.push(desc);
        Ok(())
    }

    /// Term-by-term evaluation of the left side; returns the value and the
    /// number of summed terms.
    pub fn lhs_direct(&self, id: &str, point: &EvalPoint) -> Result<(SymValue, u64)> {
        let d = self.get(id)?;
        d.check(point)?;
        (d.lhs)(point.m, point.n)
    }

    pub fn rhs_closed(&self, id: &str, point: &EvalPoint) -> Result<SymValue> {
        let d = self.get(id)?;
        d.check(point)?;
        (d.rhs)(point.m, point.n)
    }

    pub fn verify_point(&self, id: &str, point: &EvalPoint) -> Result<VerificationReport> {
        let d = self.get(id)?;
        d.check(point)?;
        let t0 = Instant::now();
        let (lhs, lhs_terms) = (d.lhs)(point.m, point.n)?;
        let t1 = Instant::now();
        let rhs = (d.rhs)(point.m, point.n)?;
        let t2 = Instant::now();
        Ok(VerificationReport {
            id: d.id.to_string(),
            point: *point,
            equal: lhs == rhs,
            lhs,
            rhs,
            lhs_terms,
            wall_time_lhs: t1 - t0,
            wall_time_rhs: t2 - t1,
        })
    }

    /// Verifies `n = n_min..=n_max` crossed with `m_set` (ignored for
    /// identities without a parameter). Points are evaluated in parallel;
    /// reports come back ordered by `(m, n)`.
    ///
    /// When the descriptor has a prefix evaluator the left side is summed
    /// once per `m` and each report carries the amortized left-side time.
    pub fn verify_range(
        &self,
        id: &str,
        n_max: u64,
        m_set: &[ExactParam],
    ) -> Result<Vec<VerificationReport>> {
        let d = self.get(id)?;
        let mut ms: Vec<Option<ExactParam>> = if d.requires_m() {
            m_set.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        ms.sort();
        ms.dedup();
        for &m in &ms {
            for n in d.n_min..=n_max {
                d.check(&EvalPoint { m, n })?;
            }
        }
        if n_max < d.n_min {
            return Ok(Vec::new());
        }
        match d.lhs_prefix {
            Some(prefix) => {
                let blocks = ms
                    .par_iter()
                    .map(|&m| self.verify_prefix_block(d, prefix, m, n_max))
                    .collect::<Result<Vec<_>>>()?;
                Ok(blocks.into_iter().flatten().collect())
            }
            None => {
                let points: Vec<EvalPoint> = ms
                    .iter()
                    .flat_map(|&m| (d.n_min..=n_max).map(move |n| EvalPoint { m, n }))
                    .collect();
                points.par_iter().map(|p| self.verify_point(id, p)).collect()
            }
        }
    }

    fn verify_prefix_block(
        &self,
        d: &IdentityDescriptor,
        prefix: PrefixFn,
        m: Option<ExactParam>,
        n_max: u64,
    ) -> Result<Vec<VerificationReport>> {
        let t0 = Instant::now();
        let sums = prefix(m, n_max)?;
        let per_point = t0.elapsed() / (n_max - d.n_min + 1) as u32;
        let mut out = Vec::with_capacity(sums.len());
        for (n, lhs) in sums.into_iter().enumerate().skip(d.n_min as usize) {
            let n = n as u64;
            let t1 = Instant::now();
            let rhs = (d.rhs)(m, n)?;
            let t_rhs = t1.elapsed();
            out.push(VerificationReport {
                id: d.id.to_string(),
                point: EvalPoint { m, n },
                equal: lhs == rhs,
                lhs,
                rhs,
                lhs_terms: if d.n_min == 0 { n + 1 } else { n },
                wall_time_lhs: per_point,
                wall_time_rhs: t_rhs,
            });
        }
        Ok(out)
    }
}

fn standard_entries(opts: CatalogOptions) -> Vec<IdentityDescriptor> {
    use identities::*;
    use MDomain::{Exact, Integer, None as NoM};
    use Ring::{Rational as Q, Sym};

    macro_rules! entry {
        ($id:expr, $title:expr, $anchor:expr, $dom:expr, $nmin:expr, $ring:expr, $lhs:ident, $rhs:ident) => {
            IdentityDescriptor {
                id: $id,
                title: $title,
                anchor: $anchor,
                m_domain: $dom,
                n_min: $nmin,
                ring: $ring,
                lhs: $lhs,
                rhs: $rhs,
                lhs_prefix: None,
            }
        };
        ($id:expr, $title:expr, $anchor:expr, $dom:expr, $nmin:expr, $ring:expr, $lhs:ident, $rhs:ident, $prefix:ident) => {
            IdentityDescriptor {
                lhs_prefix: Some($prefix),
                ..entry!($id, $title, $anchor, $dom, $nmin, $ring, $lhs, $rhs)
            }
        };
    }

    let thm51_domain = if opts.thm51_half_integers {
        Exact
    } else {
        Integer { min: 0 }
    };

    vec![
        entry!("I-rockett", "reciprocal binomial row sum",
            "sum_{k=0}^n 1/C(n,k) = (n+1)/2^(n+1) * sum_{k=1}^{n+1} 2^k/k",
            NoM, 0, Q, rockett_lhs, rockett_rhs),
        entry!("I-cb0", "inverse central binomial sum",
            "sum_{k=0}^n 4^k/C(2k,k) = ((n+1) 2^(2n+1)/C(2n,n) + 1)/3",
            NoM, 0, Q, cb0_lhs, cb0_rhs),
        entry!("I-cb-gen", "parametric inverse central binomial sum",
            "sum_{k=0}^n 4^k C(m+k,k)/C(2k,k) = ((m+n+1) C(m+n,n)/C(2n,n) 2^(2n+1) + 1)/(2m+3)",
            Exact, 0, Q, cb_gen_lhs, cb_gen_rhs, cb_gen_prefix),
        entry!("I-thm21", "parametric harmonic sum",
            "sum_{k=0}^n 4^k C(m+k,k)/C(2k,k) H_{k+m} = (2^(2n+1)(m+n+1) C(m+n,n)/C(2n,n) H_{n+m} + H_m)/(2m+3) - 2(4^n (2n-1) C(m+n,n)/C(2n,n) + 1)/(2m+3)^2",
            Exact, 0, Sym, thm21_lhs, thm21_rhs, thm21_prefix),
        entry!("I-har", "harmonic sum",
            "sum_{k=0}^n 4^k H_k/C(2k,k) = 2^(2n+1)/(3 C(2n,n)) ((n+1) H_n - (2n-1)/3) - 2/9",
            NoM, 0, Q, har_lhs, har_rhs),
        entry!("I-har-mn", "harmonic sum at m = n",
            "sum_{k=0}^n 4^k C(n+k,k) H_{n+k}/C(2k,k) = 2^(2n+1)/(2n+3) ((2n+1) H_{2n} - (2n-1)/(2n+3)) + (H_n - 2/(2n+3))/(2n+3)",
            NoM, 0, Q, har_mn_lhs, har_mn_rhs),
        entry!("I-ohar", "odd harmonic sum",
            "sum_{k=0}^n 4^k O_k/C(2k,k) = 2/9 + 2/9 4^n/C(2n,n) (n+1)(3 O_n - 1)",
            NoM, 0, Q, ohar_lhs, ohar_rhs),
        entry!("I-evenhar", "even-index harmonic sum",
            "sum_{k=0}^n 4^k H_{2k}/C(2k,k) = 1/9 + 4^n/(3 C(2n,n)) (2(n+1) H_{2n} - (4n+1)/3)",
            NoM, 0, Q, evenhar_lhs, evenhar_rhs),
        entry!("I-o1", "weighted odd harmonic sum (m = 1/2)",
            "sum_{k=0}^n (2k+1) O_{k+1} = ((2n+1)(2n+3) O_{n+1} - (n-1)(n+1))/4",
            NoM, 0, Q, o1_lhs, o1_rhs),
        entry!("I-o2", "odd harmonic partial sums (m = -1/2)",
            "sum_{k=0}^n O_k = (n + 1/2) O_n - n/2",
            NoM, 0, Q, o2_lhs, o2_rhs),
        entry!("I-chujin", "alternating inverse binomial harmonic sum",
            "sum_{k=0}^n (-1)^k C(n,k)/C(m+k,k) H_k = m/(n+m) (H_{m-1} - H_{n+m-1})",
            Integer { min: 1 }, 0, Q, chujin_lhs, chujin_rhs),
        entry!("I-cb2", "reflected parametric central binomial sum",
            "sum_{k=0}^{n-1} 4^k/(2(n-k)-1) C(m+n+1,k) C(2(n-k),n-k)/C(n,k) = 4^n (m+n+1)/((m+1)(2m+3)) C(m+n,n) - C(2n,n)/(2m+3)",
            Exact, 0, Q, cb2_lhs, cb2_rhs),
        entry!("I-thm41", "second parametric harmonic family",
            "sum_{k=1}^n C(2k,k)/(4^k (2k-1) C(m+k+1,k)) H_{m+k+1} = (4m+5)/((m+1)(2m+3)^2) + H_m/(2m+3) - C(2n,n)/(4^n (2m+3) C(m+n+1,n)) (H_{m+n+1} + 2/(2m+3))",
            Exact, 1, Sym, thm41_lhs, thm41_rhs, thm41_prefix),
        entry!("I-c41a", "second family at m = 0",
            "sum_{k=1}^n C(2k,k)/(4^k (2k-1)(k+1)) H_{k+1} = 5/9 - C(2n,n)/(4^n 3(n+1)) (H_{n+1} + 2/3)",
            NoM, 1, Q, c41a_lhs, c41a_rhs),
        entry!("I-c41b", "second family at m = 1",
            "sum_{k=1}^n C(2k,k)/(4^k (2k-1)(k+1)(k+2)) H_{k+2} = 19/100 - C(2n,n)/(4^n 5(n+1)(n+2)) (H_{n+2} + 2/5)",
            NoM, 1, Q, c41b_lhs, c41b_rhs),
        entry!("I-c42", "second family at m = n-1",
            "sum_{k=1}^n C(2k,k)/(4^k (2k-1) C(n+k,k)) H_{n+k} = (H_n + 2/(2n+1))/(2n+1) - (H_{2n} + 2/(2n+1))/(4^n (2n+1))",
            NoM, 1, Q, c42_lhs, c42_rhs),
        entry!("I-riordan", "central binomial sum with odd weights",
            "sum_{k=0}^n C(2k,k)/(4^k (2k-1)) = -C(2n,n)/4^n",
            NoM, 0, Q, riordan_lhs, riordan_rhs),
        entry!("I-thm51", "parametric second-order harmonic sum",
            "sum_{k=0}^n 4^k C(m+k,k)/C(2k,k) (H_{k+m}^2 - H^(2)_{k+m}) = A/(2m+3) - B/(2m+3)^2 + 8C/(2m+3)^3",
            thm51_domain, 1, Sym, thm51_lhs, thm51_rhs, thm51_prefix),
        entry!("I-thm51-0", "second-order harmonic sum at m = 0",
            "sum_{k=0}^n 4^k (H_k^2 - H^(2)_k)/C(2k,k) = 2^(2n+1)/(3 C(2n,n)) ((n+1)(H_n^2 - H^(2)_n) - 2/3 (2n-1) H_n) + 8/27 ((2n-1) 4^n/C(2n,n) + 1)",
            NoM, 1, Q, thm51_0_lhs, thm51_0_rhs),
        entry!("I-hsq", "squared harmonic sum with residual",
            "sum_{k=1}^n 4^k H_k^2/C(2k,k) = 44/27 + 2^(2n+1)/(3 C(2n,n)) ((n+1) H_n^2 - 2(2n-1)/3 H_n + (8n-22)/9) + R_n/3",
            NoM, 1, Q, hsq_lhs, hsq_rhs),
        entry!("I-h2o", "second-order harmonic sum with residual",
            "sum_{k=1}^n 4^k H^(2)_k/C(2k,k) = 4/3 + 2^(2n+1)/(3 C(2n,n)) ((n+1) H^(2)_n - 2) + R_n/3",
            NoM, 1, Q, h2o_lhs, h2o_rhs),
        entry!("I-parker", "inverse central binomial sum over j",
            "sum_{j=1}^n 4^j/(j C(2j,j)) = 2 (4^n/C(2n,n) - 1)",
            NoM, 1, Q, parker_lhs, parker_rhs),
        entry!("I-haroddhar", "even harmonic split",
            "H_{2n} = H_n/2 + O_n  (equivalently H_{2n-1} = H_{n-1}/2 + O_n)",
            NoM, 1, Q, haroddhar_lhs, haroddhar_rhs),
    ]
}
