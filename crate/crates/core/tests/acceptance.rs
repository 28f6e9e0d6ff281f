//! Acceptance suite. Run with `cargo test -p hbe-core --test acceptance`.
//!
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fail.
//! Tolerances and workloads are pinned in the constants below.

mod common;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use common::*;
use hbe_core::catalog::{registry, EvalPoint};
use hbe_core::exact::{harmonic2_exact, harmonic_exact, ExactParam};
use hbe_core::numeric::{
    derivative_check, harmonic2_num, verify_numeric, DerivativeKind, NumericIdentity,
};
use hbe_core::recursions::{
    fit_structure, u_closed_small, u_table, v_closed_small, v_table,
};
use hbe_core::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_N_MAX: u64 = 200;
const SWEEP_TWICE_M_MAX: i64 = 40;
const SWEEP_BUDGET: Duration = Duration::from_secs(120);
const REC_D_MAX: u32 = 6;
const REC_N_MAX: u64 = 100;
const SMALL_FORM_N_MAX: u64 = 200;
const FIT_D_MAX: u32 = 6;
const HELD_OUT: u64 = 10;
const NUMERIC_SEED: u64 = 20_240_601;
const NUMERIC_POINTS: usize = 50;
const NUMERIC_TOL: f64 = 1e-8;
const EXCLUSION_RADIUS: f64 = 1e-3;
const DERIV_STEP: f64 = 1e-6;
const DERIV_TOL: f64 = 1e-5;
const GATE_TOL: f64 = 1e-10;
const BENCH_N: u64 = 5000;
const BENCH_SPEEDUP: f64 = 5.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn both_sides(id: &str, n: u64, want: &Q) -> Result<(), String> {
    let p = EvalPoint::n(n);
    let l = registry().lhs_direct(id, &p).map_err(|e| e.to_string())?.0;
    let r = registry().rhs_closed(id, &p).map_err(|e| e.to_string())?;
    let w = sym(want);
    ensure(l == w && r == w, || format!("{id} n={n}: lhs {l}, rhs {r}, expected {w}"))
}

fn exact_sweep() -> Outcome {
    // spot values from independent reference sums
    let cb0 = sum((0..=2).map(|k| four_pow(k) / choose(2 * k, k)));
    both_sides("I-cb0", 2, &cb0)?;
    both_sides("I-har", 1, &sum((0..=1).map(|k| four_pow(k) * h(k) / choose(2 * k, k))))?;
    both_sides("I-evenhar", 1, &sum((0..=1).map(|k| four_pow(k) * h(2 * k) / choose(2 * k, k))))?;
    both_sides("I-o2", 2, &sum((0..=2).map(o)))?;
    both_sides("I-c41a", 1, &(choose(2, 1) * h(2) / (four_pow(1) * qi(2))))?;
    both_sides("I-riordan", 1, &sum((0..=1).map(|k| choose(2 * k, k) / (four_pow(k) * q(2 * k as i64 - 1, 1)))))?;
    both_sides("I-thm51-0", 1, &sum((0..=1).map(|k| four_pow(k) * (h(k) * h(k) - h2(k)) / choose(2 * k, k))))?;
    both_sides("I-hsq", 1, &(four_pow(1) * h(1) * h(1) / choose(2, 1)))?;
    both_sides("I-parker", 1, &(four_pow(1) / choose(2, 1)))?;

    let start = Instant::now();
    let mut points = 0usize;
    for desc in registry().descriptors() {
        let grid = desc.param_grid(SWEEP_TWICE_M_MAX);
        let reports = registry()
            .verify_range(desc.id, SWEEP_N_MAX, &grid)
            .map_err(|e| format!("{}: {e}", desc.id))?;
        if let Some(bad) = reports.iter().find(|r| !r.equal) {
            return Err(format!("{} at {:?}: {} != {}", bad.id, bad.point, bad.lhs, bad.rhs));
        }
        points += reports.len();
    }
    let took = start.elapsed();
    ensure(took <= SWEEP_BUDGET, || format!("sweep took {took:?}, budget {SWEEP_BUDGET:?}"))?;
    Ok(format!("{} identities, {points} points equal in {:.1?}; 9 spot values", registry().len(), took))
}

fn recursion_oracle() -> Outcome {
    for d in 0..=REC_D_MAX {
        let mut hk = qi(0);
        let (mut u, mut v) = (qi(0), qi(0));
        for n in 1..=REC_N_MAX {
            hk += qi(n).recip();
            let w = four_pow(n) * qi(n.pow(d)) / choose(2 * n, n);
            u += &w;
            v += w * &hk;
            let (ut, vt) = (u_table(d, n), v_table(d, n));
            ensure(to_q(&ut[d as usize]) == u, || format!("U_{d}({n})"))?;
            ensure(to_q(&vt[d as usize]) == v, || format!("V_{d}({n})"))?;
        }
    }
    for n in 1..=SMALL_FORM_N_MAX {
        let (ut, vt) = (u_table(3, n), v_table(2, n));
        for d in 1..=3 {
            ensure(u_closed_small(d, n).unwrap() == ut[d as usize], || format!("small U_{d}({n})"))?;
        }
        for d in 1..=2 {
            ensure(v_closed_small(d, n).unwrap() == vt[d as usize], || format!("small V_{d}({n})"))?;
        }
    }
    Ok(format!("d <= {REC_D_MAX}, n <= {REC_N_MAX} exact; small forms n <= {SMALL_FORM_N_MAX}"))
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

fn structure_fit() -> Outcome {
    let f1 = fit_structure(1).map_err(|e| e.to_string())?;
    ensure(
        f1.p == ints(&[1, 3]) && f1.q == ints(&[-1, 9]) && f1.constant == 2.into() && f1.normalizer == 15.into(),
        || format!("d=1: {f1:?}"),
    )?;
    let f2 = fit_structure(2).map_err(|e| e.to_string())?;
    ensure(
        f2.q == ints(&[-173, -18, 225]) && f2.constant == 346.into() && f2.normalizer == 105.into(),
        || format!("d=2: {f2:?}"),
    )?;
    // P_2 is whatever the held-out oracle values force
    let start = *f2.validation_range().end() + 1;
    for n in start..start + HELD_OUT {
        ensure(to_q(&f2.eval(n)) == v_sum(2, n), || format!("d=2 held-out n={n}"))?;
    }
    for d in 1..=FIT_D_MAX {
        let f = fit_structure(d).map_err(|e| e.to_string())?;
        ensure(f.residual_ok, || format!("d={d}: {:?}", f.diagnostic))?;
    }
    let p2: Vec<String> = f2.p.iter().map(|c| c.to_string()).collect();
    Ok(format!("d=1 and d=2 match; P_2 = [{}]; residual_ok for d <= {FIT_D_MAX}", p2.join(", ")))
}

fn numeric_theorems() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(NUMERIC_SEED);
    let mut worst: f64 = 0.0;
    for _ in 0..NUMERIC_POINTS {
        let m = loop {
            let m: f64 = rng.gen_range(-1.45..10.0);
            if (m + 1.0).abs() > EXCLUSION_RADIUS && (m + 1.5).abs() > EXCLUSION_RADIUS {
                break m;
            }
        };
        let n = rng.gen_range(1..=15u64);
        for which in NumericIdentity::ALL {
            let rep = verify_numeric(which.id(), m, n, NUMERIC_TOL).map_err(|e| e.to_string())?;
            ensure(rep.pass, || format!("{} m={m} n={n} rel_err={:e}", rep.id, rep.rel_err))?;
            worst = worst.max(rep.rel_err);
        }
    }
    let checks = [
        (DerivativeKind::Harmonic, 2.5),
        (DerivativeKind::Binomial, 0.8),
        (DerivativeKind::Identity14 { n: 8 }, 1.3),
    ];
    let mut devs = String::new();
    for (kind, m) in checks {
        let dev = derivative_check(kind, m, DERIV_STEP).map_err(|e| e.to_string())?;
        ensure(dev < DERIV_TOL, || format!("{kind:?} at m={m}: {dev:e}"))?;
        let _ = write!(devs, " {dev:.1e}");
    }
    Ok(format!("{NUMERIC_POINTS} points x 4 identities, worst rel_err {worst:.1e}; derivatives{devs}"))
}

fn cross_representation() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..=9 {
        let m = ExactParam::half(k).unwrap();
        let exact = harmonic2_exact(m).to_f64();
        let num = harmonic2_num(m.to_f64()).map_err(|e| e.to_string())?;
        let rel = (exact - num).abs() / exact.abs();
        ensure(rel <= GATE_TOL, || format!("m={m}: {exact} vs {num}"))?;
        worst = worst.max(rel);
    }
    let half = harmonic_exact(ExactParam::half(0).unwrap()).to_string();
    ensure(half == "2 - 2*ln2", || format!("H_(1/2) rendered {half}"))?;
    Ok(format!("worst rel_err {worst:.1e}; H_(1/2) = {half}"))
}

fn benchmark() -> Outcome {
    let p = EvalPoint::n(BENCH_N);
    let t0 = Instant::now();
    let (l, terms) = registry().lhs_direct("I-cb0", &p).map_err(|e| e.to_string())?;
    let t1 = Instant::now();
    let r = registry().rhs_closed("I-cb0", &p).map_err(|e| e.to_string())?;
    let t2 = Instant::now();
    let (tl, tr) = (t1 - t0, t2 - t1);
    let report = hbe_core::catalog::VerificationReport {
        id: "I-cb0".into(),
        point: p,
        equal: l == r,
        lhs: l,
        rhs: r,
        lhs_terms: terms,
        wall_time_lhs: tl,
        wall_time_rhs: tr,
    };
    let record = report.to_record(true);
    let mut csv = hbe_core::catalog::ReportRecord::CSV_HEADER.join(",");
    csv.push('\n');
    csv.push_str(&record.csv_row().join(","));
    csv.push('\n');
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance_bench.csv");
    std::fs::write(&path, &csv).map_err(|e| e.to_string())?;
    let speedup = tl.as_secs_f64() / tr.as_secs_f64().max(1e-9);
    ensure(report.equal, || "sides differ at n = 5000".into())?;
    ensure(speedup >= BENCH_SPEEDUP, || format!("speedup {speedup:.1}x below {BENCH_SPEEDUP}x"))?;
    Ok(format!("lhs {tl:.2?}, rhs {tr:.2?}, {speedup:.0}x; csv at {}", path.display()))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("exact identity sweep", exact_sweep),
        ("recursion vs direct summation", recursion_oracle),
        ("structure discovery", structure_fit),
        ("numeric verification and derivatives", numeric_theorems),
        ("half-integer cross-representation", cross_representation),
        ("closed form vs direct timing", benchmark),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
