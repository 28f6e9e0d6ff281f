use serde::{Deserialize, Serialize};

use super::VerificationReport;

/// One serialized verification record.
///
/// Exact reports carry rendered ring elements in `lhs`/`rhs` and `m` as
/// `"p/2"`; numeric reports reuse the layout with decimal strings and add
/// `rel_err`/`tol`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub m: Option<String>,
    pub n: u64,
    pub equal: bool,
    pub lhs: String,
    pub rhs: String,
    pub terms: u64,
    pub t_lhs_ns: u64,
    pub t_rhs_ns: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_err: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<String>,
}

impl ReportRecord {
    pub const CSV_HEADER: [&'static str; 9] = [
        "identity", "m", "n", "equal", "lhs", "rhs", "terms", "t_lhs_ns", "t_rhs_ns",
    ];

    /// The nine fixed CSV columns.
    pub fn csv_row(&self) -> [String; 9] {
        [
            self.identity.clone(),
            self.m.clone().unwrap_or_default(),
            self.n.to_string(),
            self.equal.to_string(),
            self.lhs.clone(),
            self.rhs.clone(),
            self.terms.to_string(),
            self.t_lhs_ns.to_string(),
            self.t_rhs_ns.to_string(),
        ]
    }
}

impl VerificationReport {
    /// With `timing = false` both timing fields are zero, making the record
    /// a deterministic function of the point.
    pub fn to_record(&self, timing: bool) -> ReportRecord {
        let ns = |d: std::time::Duration| if timing { d.as_nanos() as u64 } else { 0 };
        ReportRecord {
            identity: self.id.clone(),
            m: self.point.m.map(|m| m.render()),
            n: self.point.n,
            equal: self.equal,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            terms: self.lhs_terms,
            t_lhs_ns: ns(self.wall_time_lhs),
            t_rhs_ns: ns(self.wall_time_rhs),
            rel_err: None,
            tol: None,
        }
    }
}
