//! Report rendering: JSON records, CSV rows, and a text table.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::arith::Valuation;
use crate::claims::VerificationOutcome;
use crate::engine::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Infinity {
    #[serde(rename = "inf")]
    Inf,
}

/// `diff_valuation` as it appears in JSON: an integer or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DiffValuation {
    Finite(i64),
    Infinite(Infinity),
}

impl From<Valuation> for DiffValuation {
    fn from(v: Valuation) -> Self {
        match v {
            Valuation::Finite(v) => DiffValuation::Finite(v),
            Valuation::Infinite => DiffValuation::Infinite(Infinity::Inf),
        }
    }
}

/// One outcome, flattened to strings where values can exceed 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub claim: String,
    pub p: u64,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    pub modulus: String,
    pub diff_valuation: DiffValuation,
    pub path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

impl From<&VerificationOutcome> for Record {
    fn from(o: &VerificationOutcome) -> Self {
        Record {
            claim: o.claim.to_string(),
            p: o.p,
            holds: o.holds,
            lhs: o.lhs.to_string(),
            rhs: o.rhs.to_string(),
            modulus: o.modulus.to_string(),
            diff_valuation: o.diff_valuation.into(),
            path: o.path.to_string(),
            instance: o.instance.map(|i| i.to_string()),
        }
    }
}

pub fn records(report: &Report) -> Vec<Record> {
    report.outcomes.iter().map(Record::from).collect()
}

/// A JSON array with one record per outcome.
pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(&records(report)).expect("records always serialize")
}

pub const CSV_HEADER: [&str; 9] =
    ["claim", "p", "holds", "lhs", "rhs", "modulus", "diff_valuation", "path", "instance"];

pub fn write_csv<W: io::Write>(report: &Report, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records(report) {
        let v = match r.diff_valuation {
            DiffValuation::Finite(v) => v.to_string(),
            DiffValuation::Infinite(_) => "inf".to_string(),
        };
        w.write_record([
            r.claim,
            r.p.to_string(),
            r.holds.to_string(),
            r.lhs,
            r.rhs,
            r.modulus,
            v,
            r.path,
            r.instance.unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv(report: &Report) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// Long exact values are elided in the table; JSON and CSV keep them whole.
fn clip(s: &str) -> String {
    const MAX: usize = 36;
    if s.len() <= MAX {
        return s.to_string();
    }
    format!("{}...{} ({} chars)", &s[..14], &s[s.len() - 10..], s.len())
}

/// Aligned outcome table followed by per-claim summary, decomposition
/// checks, errors and timings.
pub fn to_text(report: &Report) -> String {
    let header = ["claim", "p", "instance", "holds", "lhs", "rhs", "modulus", "v", "path"];
    let rows: Vec<[String; 9]> = records(report)
        .into_iter()
        .map(|r| {
            let v = match r.diff_valuation {
                DiffValuation::Finite(v) => v.to_string(),
                DiffValuation::Infinite(_) => "inf".into(),
            };
            [
                r.claim,
                r.p.to_string(),
                r.instance.unwrap_or_else(|| "-".into()),
                if r.holds { "yes".into() } else { "NO".into() },
                clip(&r.lhs),
                clip(&r.rhs),
                clip(&r.modulus),
                v,
                r.path,
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[&str]| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(width).enumerate() {
            // numbers right-aligned, text left-aligned
            if matches!(i, 1 | 4 | 5 | 6 | 7) {
                let _ = write!(s, "{c:>w$}  ");
            } else {
                let _ = write!(s, "{c:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut out, &header);
    for row in &rows {
        line(&mut out, &row.iter().map(String::as_str).collect::<Vec<_>>());
    }

    out.push_str("\nsummary\n");
    let id_w = report.summary.iter().map(|s| s.claim.len()).max().unwrap_or(5).max(5);
    let _ = writeln!(out, "{:<id_w$}  {:>6}  {:>6}  {:>6}  {:>9}", "claim", "pass", "fail", "error", "seconds");
    for s in &report.summary {
        let _ = writeln!(out, "{:<id_w$}  {:>6}  {:>6}  {:>6}  {:>9.3}", s.claim, s.pass, s.fail, s.error, s.seconds);
    }
    if !report.decompositions.is_empty() {
        let bad: Vec<_> = report.decompositions.iter().filter(|d| !d.holds()).collect();
        let _ = writeln!(out, "\ndecomposition checks: {} run, {} failed", report.decompositions.len(), bad.len());
        for d in bad {
            let _ = writeln!(out, "  {} at p={}: lhs {} rhs {}", d.pair, d.p, d.lhs_recombines, d.rhs_recombines);
        }
    }
    if !report.errors.is_empty() {
        let _ = writeln!(out, "\nerrors");
        for e in &report.errors {
            let _ = writeln!(out, "  {e}");
        }
    }
    let fails = report.counterexamples().count();
    let _ = writeln!(
        out,
        "\n{} outcomes, {} counterexamples, {} errors, {:.2}s wall",
        report.outcomes.len(),
        fails,
        report.errors.len(),
        report.elapsed.as_secs_f64()
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{run_suite, RunConfig};

    fn report() -> Report {
        let cfg = RunConfig {
            p_max: 13,
            identity_n_max: 4,
            ..RunConfig::with_claims(&["thm1", "jacobsthal", "lemma26b"])
        };
        run_suite(&cfg).unwrap()
    }

    #[test]
    fn json_round_trips() {
        let r = report();
        let json = to_json(&r);
        let parsed: Vec<Record> = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, records(&r));
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap(), json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let first = &value[0];
        assert_eq!(first["claim"], "thm1");
        assert_eq!(first["p"], 5);
        assert_eq!(first["lhs"], "130");
        assert_eq!(first["modulus"], "625");
        assert!(first["diff_valuation"].is_i64());
        assert!(first.get("instance").is_none());
        let ident = value.as_array().unwrap().iter().find(|v| v["claim"] == "lemma26b").unwrap();
        assert_eq!(ident["diff_valuation"], "inf");
        assert_eq!(ident["modulus"], "exact");
    }

    #[test]
    fn csv_has_header_and_one_row_per_outcome() {
        let r = report();
        let text = to_csv(&r);
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), CSV_HEADER);
        let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
        assert_eq!(rows.len(), r.outcomes.len());
        let j = rows.iter().find(|row| &row[0] == "jacobsthal").unwrap();
        // instance labels contain commas and must come back intact
        assert!(j[8].starts_with("a=") && j[8].contains(",b="));
        assert!(text.contains("\"a=2,b=1,r=1,s=1\""));
    }

    #[test]
    fn text_table_lists_every_claim() {
        let r = report();
        let text = to_text(&r);
        for id in ["thm1", "jacobsthal", "lemma26b"] {
            assert!(text.contains(id));
        }
        assert!(text.contains("summary"));
        assert!(text.contains("0 counterexamples"));
        assert!(text.contains("decomposition checks"));
    }

    #[test]
    fn clipping_keeps_short_values() {
        assert_eq!(clip("12345"), "12345");
        let long = "9".repeat(100);
        assert!(clip(&long).ends_with("(100 chars)"));
    }
}
