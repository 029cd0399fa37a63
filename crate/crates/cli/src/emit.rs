//! Rendering of verification reports as JSON, CSV or a plain-text table.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use klcat_core::VerificationReport;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_WIDTH: usize = 80;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "table",
        })
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmitOptions {
    pub width: usize,
    pub timings: bool,
}

impl Default for EmitOptions {
    fn default() -> Self {
        EmitOptions {
            width: DEFAULT_WIDTH,
            timings: false,
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    suite: &'a str,
    checks: Vec<JsonCheck<'a>>,
    pass: bool,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    pass: bool,
    detail: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

/// Renders `report`; the result always ends with a newline. Elapsed times
/// appear only when `opts.timings` is set, so default output is reproducible.
pub fn emit(report: &VerificationReport, format: Format, opts: EmitOptions) -> String {
    match format {
        Format::Json => json(report, opts),
        Format::Csv => csv_text(report, opts),
        Format::Table => table(report, opts),
    }
}

fn json(report: &VerificationReport, opts: EmitOptions) -> String {
    let doc = JsonReport {
        schema: SCHEMA_VERSION,
        suite: &report.suite,
        checks: report
            .checks
            .iter()
            .map(|c| JsonCheck {
                name: &c.name,
                pass: c.pass,
                detail: &c.detail,
                elapsed_ms: opts.timings.then_some(c.elapsed_ms),
            })
            .collect(),
        pass: report.pass(),
    };
    let mut s = serde_json::to_string(&doc).expect("report serializes");
    s.push('\n');
    s
}

fn csv_text(report: &VerificationReport, opts: EmitOptions) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["name", "pass", "detail"];
    if opts.timings {
        header.push("elapsed_ms");
    }
    w.write_record(&header).expect("in-memory write");
    for c in &report.checks {
        let mut row = vec![c.name.clone(), c.pass.to_string(), c.detail.clone()];
        if opts.timings {
            row.push(c.elapsed_ms.to_string());
        }
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn table(report: &VerificationReport, opts: EmitOptions) -> String {
    let mut out = format!("suite {}\n", report.suite);
    let name_w = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &report.checks {
        let mut lead = format!(
            "{}  {:<name_w$}  ",
            if c.pass { "PASS" } else { "FAIL" },
            c.name
        );
        if opts.timings {
            lead.push_str(&format!("{:>7} ms  ", c.elapsed_ms));
        }
        let room = opts.width.saturating_sub(lead.len()).max(20);
        let lines = if c.detail.is_empty() {
            Vec::new()
        } else {
            textwrap::wrap(&c.detail, room)
        };
        let pad = " ".repeat(lead.len());
        if lines.is_empty() {
            out.push_str(lead.trim_end());
        }
        for (i, line) in lines.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(if i == 0 { &lead } else { &pad });
            out.push_str(line);
        }
        out.push('\n');
    }
    let n = report.checks.len();
    let failed = report.failures().count();
    if failed == 0 {
        out.push_str(&format!("overall PASS ({n} checks)\n"));
    } else {
        out.push_str(&format!("overall FAIL ({failed} of {n} checks failed)\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use klcat_core::Check;

    #[test]
    fn empty_report_json() {
        let r = VerificationReport::new("k0:A2", vec![]);
        assert_eq!(
            emit(&r, Format::Json, EmitOptions::default()),
            "{\"schema\":1,\"suite\":\"k0:A2\",\"checks\":[],\"pass\":true}\n"
        );
    }

    #[test]
    fn failing_check_fails_report() {
        let r = VerificationReport::new(
            "x",
            vec![Check::new("a", true, ""), Check::new("b", false, "no")],
        );
        let j: serde_json::Value =
            serde_json::from_str(&emit(&r, Format::Json, EmitOptions::default())).unwrap();
        assert_eq!(j["pass"], false);
        assert_eq!(j["checks"][1]["pass"], false);
        assert!(emit(&r, Format::Table, EmitOptions::default())
            .ends_with("overall FAIL (1 of 2 checks failed)\n"));
    }

    #[test]
    fn table_wraps_details() {
        let detail = "alpha beta gamma delta epsilon zeta eta theta iota kappa lambda mu";
        let r = VerificationReport::new("x", vec![Check::new("c", true, detail)]);
        let text = emit(
            &r,
            Format::Table,
            EmitOptions {
                width: 40,
                timings: false,
            },
        );
        let body: Vec<&str> = text
            .lines()
            .skip(1)
            .take_while(|l| !l.starts_with("overall"))
            .collect();
        assert!(body.len() > 1);
        for l in &body {
            assert!(l.chars().count() <= 40, "{l:?}");
        }
        for l in &body[1..] {
            assert!(l.starts_with("         "));
        }
        let rejoined: Vec<&str> = body
            .iter()
            .flat_map(|l| l.split_whitespace())
            .skip(2)
            .collect();
        assert_eq!(rejoined.join(" "), detail);
    }

    #[test]
    fn csv_quotes_and_timings() {
        let mut c = Check::new("a", true, "1, 2");
        c.elapsed_ms = 7;
        let r = VerificationReport::new("x", vec![c]);
        assert_eq!(
            emit(&r, Format::Csv, EmitOptions::default()),
            "name,pass,detail\na,true,\"1, 2\"\n"
        );
        assert_eq!(
            emit(
                &r,
                Format::Csv,
                EmitOptions {
                    width: 80,
                    timings: true
                }
            ),
            "name,pass,detail,elapsed_ms\na,true,\"1, 2\",7\n"
        );
    }
}
