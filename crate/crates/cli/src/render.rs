use std::io::Write;

use hbe_core::catalog::ReportRecord;
use serde::Serialize;

use crate::{CliResult, Format};

pub fn json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn csv_table<I, R>(header: &[&str], rows: I, out: &mut dyn Write) -> CliResult<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn text_line(r: &ReportRecord) -> String {
    let m = r.m.as_deref().map(|m| format!(" m={m}")).unwrap_or_default();
    let extra = match (&r.rel_err, &r.tol) {
        (Some(e), Some(t)) => format!(" rel_err={e} tol={t}"),
        _ => String::new(),
    };
    if r.equal {
        format!("ok       {}{m} n={}: {}{extra}", r.identity, r.n, r.rhs)
    } else {
        format!(
            "MISMATCH {}{m} n={}: lhs = {}, rhs = {}{extra}",
            r.identity, r.n, r.lhs, r.rhs
        )
    }
}

pub fn records(format: Format, recs: &[ReportRecord], out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Json => json(recs, out),
        Format::Csv => csv_table(&ReportRecord::CSV_HEADER, recs.iter().map(|r| r.csv_row()), out),
        Format::Text => {
            for r in recs {
                writeln!(out, "{}", text_line(r))?;
            }
            let bad = recs.iter().filter(|r| !r.equal).count();
            writeln!(out, "{} points, {} mismatches", recs.len(), bad)?;
            Ok(())
        }
    }
}
