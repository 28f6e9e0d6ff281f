use std::io::Write;
use std::time::Instant;

use hbe_core::catalog::{Catalog, EvalPoint, MDomain, ReportRecord, Ring};
use hbe_core::exact::ExactParam;
use hbe_core::numeric::{derivative_check, verify_numeric, DerivativeKind, NumericIdentity};
use hbe_core::recursions::{
    fit_structure, fit_u_structure, u_direct, u_rec, v_direct, v_rec, PolynomialFit,
};
use hbe_core::{Rational, SymValue};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::render;
use crate::{
    BenchArgs, CliError, CliResult, Command, EvalArgs, FitArgs, Format, NumericArgs, RunConfig,
    Side, SumKind, VerifyArgs,
};

/// `Ok(true)` when every check passed.
pub fn dispatch(cfg: &RunConfig, catalog: &Catalog, out: &mut dyn Write) -> CliResult<bool> {
    match &cfg.command {
        Command::List => list(cfg.format, catalog, out),
        Command::Verify(a) => verify(cfg, catalog, a, out),
        Command::Eval(a) => eval(cfg.format, catalog, a, out),
        Command::Fit(a) => fit(cfg.format, a, out),
        Command::Bench(a) => bench(cfg, catalog, a, out),
        Command::Numeric(a) => numeric(cfg, a, out),
    }
}

fn domain_label(d: MDomain) -> String {
    match d {
        MDomain::None => "-".into(),
        MDomain::Exact => "2m >= -1".into(),
        MDomain::Integer { min } => format!("integer m >= {min}"),
    }
}

#[derive(Serialize)]
struct ListEntry<'a> {
    id: &'a str,
    title: &'a str,
    statement: &'a str,
    m_domain: String,
    n_min: u64,
    ring: &'a str,
}

fn list(format: Format, catalog: &Catalog, out: &mut dyn Write) -> CliResult<bool> {
    let rows: Vec<ListEntry> = catalog
        .descriptors()
        .iter()
        .map(|d| ListEntry {
            id: d.id,
            title: d.title,
            statement: d.anchor,
            m_domain: domain_label(d.m_domain),
            n_min: d.n_min,
            ring: match d.ring {
                Ring::Rational => "rational",
                Ring::Sym => "symbolic",
            },
        })
        .collect();
    match format {
        Format::Json => render::json(&rows, out)?,
        Format::Csv => render::csv_table(
            &["id", "title", "statement", "m_domain", "n_min", "ring"],
            rows.iter().map(|r| {
                [r.id.to_string(), r.title.to_string(), r.statement.to_string(), r.m_domain.clone(), r.n_min.to_string(), r.ring.to_string()]
            }),
            out,
        )?,
        Format::Text => {
            for r in &rows {
                writeln!(out, "{:<13} {:<18} n >= {}  {}  [{}]", r.id, r.m_domain, r.n_min, r.title, r.ring)?;
                writeln!(out, "              {}", r.statement)?;
            }
        }
    }
    Ok(true)
}

fn selected_ids<'a>(catalog: &'a Catalog, wanted: &[String]) -> CliResult<Vec<&'a str>> {
    if wanted.iter().any(|w| w == "all") {
        return Ok(catalog.descriptors().iter().map(|d| d.id).collect());
    }
    wanted
        .iter()
        .map(|w| catalog.get(w).map(|d| d.id).map_err(CliError::from))
        .collect()
}

fn parse_params(specs: &[String]) -> CliResult<Vec<ExactParam>> {
    specs.iter().map(|s| s.parse().map_err(CliError::from)).collect()
}

fn verify(cfg: &RunConfig, catalog: &Catalog, a: &VerifyArgs, out: &mut dyn Write) -> CliResult<bool> {
    let ids = selected_ids(catalog, &a.identity)?;
    let explicit = parse_params(&a.m)?;
    let mut records = Vec::new();
    for id in ids {
        let desc = catalog.get(id)?;
        if a.n_max < desc.n_min {
            return Err(CliError::Usage(format!("{id}: --n-max {} is below n_min {}", a.n_max, desc.n_min)));
        }
        let grid = if explicit.is_empty() {
            desc.param_grid(a.twice_m_max)
        } else {
            explicit.clone()
        };
        if desc.requires_m() && grid.is_empty() {
            return Err(CliError::Usage(format!("{id}: no admitted m in the requested grid")));
        }
        let reports = catalog.verify_range(id, a.n_max, &grid)?;
        records.extend(reports.iter().map(|r| r.to_record(!cfg.no_timing)));
    }
    render::records(cfg.format, &records, out)?;
    Ok(records.iter().all(|r| r.equal))
}

#[derive(Serialize)]
struct SumValue {
    sum: &'static str,
    d: u32,
    n: u64,
    value: String,
}

#[derive(Serialize)]
struct SideValues {
    identity: String,
    m: Option<String>,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
}

fn eval(format: Format, catalog: &Catalog, a: &EvalArgs, out: &mut dyn Write) -> CliResult<bool> {
    if let Some(kind) = a.sum {
        let d = a.d.ok_or_else(|| CliError::Usage("--sum needs --d".into()))?;
        if a.n == 0 {
            return Err(CliError::Usage("--sum needs --n >= 1".into()));
        }
        let (label, value) = match kind {
            SumKind::U => ("U", u_rec(d, a.n)),
            SumKind::V => ("V", v_rec(d, a.n)),
        };
        let rec = SumValue { sum: label, d, n: a.n, value: value.to_string() };
        match format {
            Format::Json => render::json(&rec, out)?,
            Format::Csv => render::csv_table(
                &["sum", "d", "n", "value"],
                [[label.to_string(), d.to_string(), a.n.to_string(), rec.value.clone()]],
                out,
            )?,
            Format::Text => writeln!(out, "{}", rec.value)?,
        }
        return Ok(true);
    }
    let id = a
        .identity
        .as_deref()
        .ok_or_else(|| CliError::Usage("eval needs --sum or --identity".into()))?;
    let m = a.m.as_deref().map(str::parse::<ExactParam>).transpose()?;
    let point = EvalPoint { m, n: a.n };
    let lhs = matches!(a.side, Side::Lhs | Side::Both)
        .then(|| catalog.lhs_direct(id, &point).map(|(v, _)| v))
        .transpose()?;
    let rhs = matches!(a.side, Side::Rhs | Side::Both)
        .then(|| catalog.rhs_closed(id, &point))
        .transpose()?;
    let agree = match (&lhs, &rhs) {
        (Some(l), Some(r)) => l == r,
        _ => true,
    };
    let rec = SideValues {
        identity: id.to_string(),
        m: m.map(|m| m.render()),
        n: a.n,
        lhs: lhs.as_ref().map(SymValue::to_string),
        rhs: rhs.as_ref().map(SymValue::to_string),
    };
    match format {
        Format::Json => render::json(&rec, out)?,
        Format::Csv => render::csv_table(
            &["identity", "m", "n", "lhs", "rhs"],
            [[
                rec.identity.clone(),
                rec.m.clone().unwrap_or_default(),
                rec.n.to_string(),
                rec.lhs.clone().unwrap_or_default(),
                rec.rhs.clone().unwrap_or_default(),
            ]],
            out,
        )?,
        Format::Text => match (&rec.lhs, &rec.rhs) {
            (Some(v), None) | (None, Some(v)) => writeln!(out, "{v}")?,
            (Some(l), Some(r)) => writeln!(out, "lhs = {l}\nrhs = {r}")?,
            (None, None) => {}
        },
    }
    Ok(agree)
}

/// For `d = 2` the leading polynomial has circulated with constant term
/// `+1` as well as `-1`; report which one the exact values select.
fn p2_note(f: &PolynomialFit) -> Option<String> {
    if f.d != 2 {
        return None;
    }
    let mut flipped = f.clone();
    flipped.p[0] = -flipped.p[0].clone();
    let truth = v_rec(2, 1);
    Some(format!(
        "P_2(n) = {}; the variant with constant term {} gives V_2(1) = {} instead of {}",
        poly_string(&f.p),
        flipped.p[0],
        flipped.eval(1),
        truth
    ))
}

fn poly_string(c: &[Rational]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (e, coef) in c.iter().enumerate().rev() {
        if coef.is_zero() {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => "n".into(),
            _ => format!("n^{e}"),
        };
        let (neg, mag) = (coef.is_negative(), coef.abs());
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag == Rational::one() {
            mono
        } else {
            format!("{mag}{mono}")
        };
        match (terms.is_empty(), neg) {
            (true, true) => terms.push(format!("-{body}")),
            (true, false) => terms.push(body),
            (false, true) => terms.push(format!("- {body}")),
            (false, false) => terms.push(format!("+ {body}")),
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" ")
    }
}

fn list_string(c: &[Rational]) -> String {
    let parts: Vec<String> = c.iter().map(Rational::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Serialize)]
struct FitOutput<T: Serialize> {
    sum: &'static str,
    #[serde(flatten)]
    fit: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn fit(format: Format, a: &FitArgs, out: &mut dyn Write) -> CliResult<bool> {
    match a.sum {
        SumKind::V => {
            let f = match fit_structure(a.d) {
                Ok(f) => f,
                Err(hbe_core::Error::SingularSystem { d, detail }) => {
                    writeln!(out, "V_{d}: singular system: {detail}")?;
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            let note = p2_note(&f);
            match format {
                Format::Json => render::json(&FitOutput { sum: "V", fit: &f, note: note.clone() }, out)?,
                Format::Csv => render::csv_table(
                    &["sum", "d", "P", "Q", "C", "N", "residual_ok"],
                    [[
                        "V".to_string(),
                        f.d.to_string(),
                        list_string(&f.p),
                        list_string(&f.q),
                        f.constant.to_string(),
                        f.normalizer.to_string(),
                        f.residual_ok.to_string(),
                    ]],
                    out,
                )?,
                Format::Text => {
                    writeln!(out, "V_{}(n), N = {}", f.d, f.normalizer)?;
                    writeln!(out, "P = {}", list_string(&f.p))?;
                    writeln!(out, "Q = {}", list_string(&f.q))?;
                    writeln!(out, "C = {}", f.constant)?;
                    let r = f.validation_range();
                    writeln!(out, "residual_ok = {} (checked on n = {}..={})", f.residual_ok, r.start(), r.end())?;
                    if let Some(d) = &f.diagnostic {
                        writeln!(out, "diagnostic: {d}")?;
                    }
                }
            }
            if let (Format::Text, Some(n)) = (format, &note) {
                writeln!(out, "note: {n}")?;
            }
            Ok(f.residual_ok)
        }
        SumKind::U => {
            let f = match fit_u_structure(a.d) {
                Ok(f) => f,
                Err(hbe_core::Error::SingularSystem { d, detail }) => {
                    writeln!(out, "U_{d}: singular system: {detail}")?;
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            match format {
                Format::Json => render::json(&FitOutput { sum: "U", fit: &f, note: None }, out)?,
                Format::Csv => render::csv_table(
                    &["sum", "d", "R", "K", "N", "residual_ok"],
                    [[
                        "U".to_string(),
                        f.d.to_string(),
                        list_string(&f.r),
                        f.constant.to_string(),
                        f.normalizer.to_string(),
                        f.residual_ok.to_string(),
                    ]],
                    out,
                )?,
                Format::Text => {
                    writeln!(out, "U_{}(n), N = {}", f.d, f.normalizer)?;
                    writeln!(out, "R = {}", list_string(&f.r))?;
                    writeln!(out, "K = {}", f.constant)?;
                    writeln!(out, "residual_ok = {}", f.residual_ok)?;
                    if let Some(d) = &f.diagnostic {
                        writeln!(out, "diagnostic: {d}")?;
                    }
                }
            }
            Ok(f.residual_ok)
        }
    }
}

type SumFn = fn(u32, u64) -> Rational;

#[derive(Serialize)]
struct BenchRow {
    target: String,
    n: u64,
    t_direct_ns: u64,
    t_closed_ns: u64,
    speedup: f64,
    agree: bool,
}

fn geometric_grid(lo: u64, hi: u64) -> Vec<u64> {
    let mut grid: Vec<u64> = std::iter::successors(Some(lo.max(1)), |&n| n.checked_mul(2))
        .take_while(|&n| n <= hi)
        .collect();
    if grid.last() != Some(&hi) && hi >= lo {
        grid.push(hi);
    }
    grid
}

fn timed<T>(f: impl FnOnce() -> CliResult<T>) -> CliResult<(T, u64)> {
    let t = Instant::now();
    let v = f()?;
    Ok((v, t.elapsed().as_nanos() as u64))
}

fn bench(cfg: &RunConfig, catalog: &Catalog, a: &BenchArgs, out: &mut dyn Write) -> CliResult<bool> {
    let grid = geometric_grid(a.n_min, a.n_max);
    if grid.is_empty() {
        return Err(CliError::Usage("empty n grid".into()));
    }
    let mut rows = Vec::with_capacity(grid.len());
    for &n in &grid {
        let (target, (da, ta), (db, tb)) = match a.sum {
            Some(kind) => {
                let (direct, rec): (SumFn, SumFn) = match kind {
                    SumKind::U => (u_direct, u_rec),
                    SumKind::V => (v_direct, v_rec),
                };
                let label = format!("{}_{} recursion", if kind == SumKind::U { "U" } else { "V" }, a.d);
                let d = a.d;
                let x = timed(|| Ok(SymValue::from(direct(d, n))))?;
                let y = timed(|| Ok(SymValue::from(rec(d, n))))?;
                (label, x, y)
            }
            None => {
                let desc = catalog.get(&a.identity)?;
                let m = desc.requires_m().then(|| a.m.parse::<ExactParam>()).transpose()?;
                let p = EvalPoint { m, n: n.max(desc.n_min) };
                let x = timed(|| Ok(catalog.lhs_direct(desc.id, &p)?.0))?;
                let y = timed(|| Ok(catalog.rhs_closed(desc.id, &p)?))?;
                (format!("{} closed form", desc.id), x, y)
            }
        };
        let (ta, tb) = if cfg.no_timing { (0, 0) } else { (ta, tb) };
        rows.push(BenchRow {
            target,
            n,
            t_direct_ns: ta,
            t_closed_ns: tb,
            speedup: if tb == 0 { 0.0 } else { ta as f64 / tb as f64 },
            agree: da == db,
        });
    }
    match cfg.format {
        Format::Json => render::json(&rows, out)?,
        Format::Csv => render::csv_table(
            &["target", "n", "t_direct_ns", "t_closed_ns", "speedup", "agree"],
            rows.iter().map(|r| {
                [r.target.clone(), r.n.to_string(), r.t_direct_ns.to_string(), r.t_closed_ns.to_string(), format!("{:.2}", r.speedup), r.agree.to_string()]
            }),
            out,
        )?,
        Format::Text => {
            writeln!(out, "{:<24} {:>7} {:>14} {:>14} {:>9}", "target", "n", "direct_ns", "closed_ns", "speedup")?;
            for r in &rows {
                writeln!(out, "{:<24} {:>7} {:>14} {:>14} {:>8.1}x{}", r.target, r.n, r.t_direct_ns, r.t_closed_ns, r.speedup, if r.agree { "" } else { "  MISMATCH" })?;
            }
        }
    }
    Ok(rows.iter().all(|r| r.agree))
}

/// Uniform in `(-1.45, 10)`, resampled within `1e-3` of `-1` or `-3/2`.
pub fn sample_param(rng: &mut impl Rng) -> f64 {
    loop {
        let m: f64 = rng.gen_range(-1.45..10.0);
        if (m + 1.0).abs() > 1e-3 && (m + 1.5).abs() > 1e-3 {
            return m;
        }
    }
}

#[derive(Serialize)]
struct DerivativeRow {
    kind: String,
    m: f64,
    n: Option<u64>,
    h: f64,
    deviation: f64,
    pass: bool,
}

#[derive(Serialize)]
struct NumericOutput {
    seed: u64,
    points: Vec<ReportRecord>,
    derivatives: Vec<DerivativeRow>,
}

const DERIVATIVE_TOL: f64 = 1e-5;

fn numeric(cfg: &RunConfig, a: &NumericArgs, out: &mut dyn Write) -> CliResult<bool> {
    let which: Vec<NumericIdentity> = if a.identity.iter().any(|w| w == "all") {
        NumericIdentity::ALL.to_vec()
    } else {
        a.identity.iter().map(|id| NumericIdentity::from_id(id)).collect::<Result<_, _>>()?
    };
    if a.n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let points: Vec<(f64, u64)> = if a.m.is_empty() {
        (0..a.points)
            .map(|_| {
                let m = sample_param(&mut rng);
                (m, rng.gen_range(1..=a.n_max))
            })
            .collect()
    } else {
        a.m.iter().map(|&m| (m, rng.gen_range(1..=a.n_max))).collect()
    };
    let jobs: Vec<(NumericIdentity, f64, u64)> = points
        .iter()
        .flat_map(|&(m, n)| which.iter().map(move |&w| (w, m, n)))
        .collect();
    let reports = jobs
        .par_iter()
        .map(|&(w, m, n)| verify_numeric(w.id(), m, n, a.tol))
        .collect::<Result<Vec<_>, _>>()?;
    let records: Vec<ReportRecord> = reports.iter().map(|r| r.to_record()).collect();

    let checks = [
        ("harmonic", DerivativeKind::Harmonic, 2.5, None),
        ("binomial", DerivativeKind::Binomial, 0.8, None),
        ("identity", DerivativeKind::Identity14 { n: 8 }, 1.3, Some(8)),
    ];
    let mut derivs = Vec::new();
    for (name, kind, m, n) in checks {
        let dev = derivative_check(kind, m, a.h)?;
        derivs.push(DerivativeRow { kind: name.into(), m, n, h: a.h, deviation: dev, pass: dev < DERIVATIVE_TOL });
    }
    let ok = records.iter().all(|r| r.equal) && derivs.iter().all(|d| d.pass);

    match cfg.format {
        Format::Json => render::json(&NumericOutput { seed: cfg.seed, points: records, derivatives: derivs }, out)?,
        Format::Csv => {
            // derivative rows reuse the columns: lhs = deviation, rhs = tolerance
            let extra = derivs.iter().map(|d| ReportRecord {
                identity: format!("d/dm {}", d.kind),
                m: Some(format!("{:.16e}", d.m)),
                n: d.n.unwrap_or(0),
                equal: d.pass,
                lhs: format!("{:.16e}", d.deviation),
                rhs: format!("{:.16e}", DERIVATIVE_TOL),
                terms: 0,
                t_lhs_ns: 0,
                t_rhs_ns: 0,
                rel_err: None,
                tol: None,
            });
            let all: Vec<ReportRecord> = records.into_iter().chain(extra).collect();
            render::records(Format::Csv, &all, out)?;
        }
        Format::Text => {
            render::records(Format::Text, &records, out)?;
            for d in &derivs {
                let n = d.n.map(|n| format!(" n={n}")).unwrap_or_default();
                writeln!(
                    out,
                    "{} d/dm {} m={}{n} h={:e}: deviation {:.3e}",
                    if d.pass { "ok      " } else { "FAIL    " },
                    d.kind,
                    d.m,
                    d.h,
                    d.deviation
                )?;
            }
        }
    }
    Ok(ok)
}
