//! Serialized views of [`DiscordReport`]: JSON documents, CSV rows and a
//! short plain-text summary.

use std::fmt::Write as _;

use serde::Serialize;

use crate::measures::{Condition, Contribution, DiscordReport};

/// One nonzero summand, 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub condition: Condition,
    pub mu: usize,
    pub nu_or_alpha_beta: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

impl From<&Contribution> for PairRecord {
    fn from(c: &Contribution) -> Self {
        PairRecord {
            condition: c.condition,
            mu: c.mu + 1,
            nu_or_alpha_beta: c.others.iter().map(|x| x + 1).collect(),
            i: c.i + 1,
            j: c.j + 1,
            value: c.value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub m: usize,
    pub n: usize,
    pub s: i64,
    pub prop2: u64,
    pub prop3: u64,
    pub prop4: u64,
    pub prop5: u64,
    pub qd: u64,
    pub zero_discord: bool,
    pub per_pair: Vec<PairRecord>,
}

impl From<&DiscordReport> for ReportRecord {
    fn from(r: &DiscordReport) -> Self {
        let b = &r.breakdown;
        ReportRecord {
            m: r.m(),
            n: r.n(),
            s: r.sign.value(),
            prop2: b.prop2_total,
            prop3: b.prop3_total,
            prop4: b.prop4_total,
            prop5: b.prop5_total,
            qd: r.qd_total,
            zero_discord: r.is_zero_discord(),
            per_pair: b.per_pair.iter().map(PairRecord::from).collect(),
        }
    }
}

pub fn to_json(report: &DiscordReport) -> String {
    serde_json::to_string(&ReportRecord::from(report)).expect("plain data serializes")
}

pub const CSV_HEADER: &str = "graph_id,m,n,s,prop2,prop3,prop4,prop5,qd,zero_discord";

/// One CSV row without a trailing newline.
pub fn to_csv_row(graph_id: &str, report: &DiscordReport) -> String {
    let b = &report.breakdown;
    let fields = [
        graph_id.to_string(),
        report.m().to_string(),
        report.n().to_string(),
        report.sign.value().to_string(),
        b.prop2_total.to_string(),
        b.prop3_total.to_string(),
        b.prop4_total.to_string(),
        b.prop5_total.to_string(),
        report.qd_total.to_string(),
        report.is_zero_discord().to_string(),
    ];
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(&fields).expect("in-memory write");
    let mut row = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields");
    row.pop();
    row
}

pub fn to_plain(graph_id: &str, report: &DiscordReport) -> String {
    let b = &report.breakdown;
    let mut out = String::new();
    let _ = write!(
        out,
        "{graph_id} m={} n={} s={:+} qd={} (prop2={} prop3={} prop4={} prop5={}) {}",
        report.m(),
        report.n(),
        report.sign.value(),
        report.qd_total,
        b.prop2_total,
        b.prop3_total,
        b.prop4_total,
        b.prop5_total,
        if report.is_zero_discord() { "zero discord" } else { "nonzero discord" }
    );
    out
}
