//! Machine-readable run reports and their renderings.
//!
//! JSON layout (field names are stable):
//!
//! ```text
//! { "command": "thm-a1 --k 4",
//!   "results": [ { "check": "thm-a1", "instance": "k=4",
//!                  "values": { "k": "4", "j": "2", "ord": "5", "bound": "5" },
//!                  "witness": "108000/3617", "holds": true } ],
//!   "summary": { "checked": 1, "held": 1, "failed": 0 },
//!   "version": "0.1.0" }
//! ```
//!
//! Every value is a string; rationals are written `p/q` (or `p` when
//! integral) and valuations of zero as `+inf`.

use std::fmt::Write as _;

use clap::ValueEnum;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub check: String,
    pub instance: String,
    pub values: IndexMap<String, String>,
    /// Exact value the check was evaluated on; omitted from the human table.
    pub witness: Option<String>,
    pub holds: bool,
}

impl CheckRow {
    pub fn new(check: &str, instance: impl Into<String>) -> Self {
        CheckRow {
            check: check.to_string(),
            instance: instance.into(),
            values: IndexMap::new(),
            witness: None,
            holds: true,
        }
    }

    pub fn value(mut self, name: &str, v: impl ToString) -> Self {
        self.values.insert(name.to_string(), v.to_string());
        self
    }

    pub fn witness(mut self, w: impl ToString) -> Self {
        self.witness = Some(w.to_string());
        self
    }

    pub fn holds(mut self, holds: bool) -> Self {
        self.holds = holds;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub results: Vec<CheckRow>,
    pub summary: Summary,
    pub version: String,
}

impl Report {
    pub fn new(command: impl Into<String>, results: Vec<CheckRow>) -> Self {
        let held = results.iter().filter(|r| r.holds).count();
        Report {
            command: command.into(),
            summary: Summary { checked: results.len(), held, failed: results.len() - held },
            results,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    fn value_columns(&self) -> Vec<&str> {
        let mut cols: Vec<&str> = Vec::new();
        for row in &self.results {
            for k in row.values.keys() {
                if !cols.contains(&k.as_str()) {
                    cols.push(k);
                }
            }
        }
        cols
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Human => render_human(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
    }
}

fn render_human(report: &Report) -> String {
    let mut header: Vec<&str> = report.value_columns();
    header.push("holds");
    let rows: Vec<Vec<&str>> = report
        .results
        .iter()
        .map(|r| {
            let mut cells: Vec<&str> = header[..header.len() - 1]
                .iter()
                .map(|c| r.values.get(*c).map(String::as_str).unwrap_or(""))
                .collect();
            cells.push(if r.holds { "yes" } else { "NO" });
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap())
        .collect();
    let line = |cells: &[&str]| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };

    let mut out = String::new();
    if !rows.is_empty() {
        writeln!(out, "{}", line(&header)).unwrap();
        for r in &rows {
            writeln!(out, "{}", line(r)).unwrap();
        }
    }
    let s = report.summary;
    writeln!(out, "checked {}, held {}, failed {}", s.checked, s.held, s.failed).unwrap();
    out
}

fn render_csv(report: &Report) -> String {
    let cols = report.value_columns();
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["check", "instance"];
    header.extend(&cols);
    header.extend(["witness", "holds"]);
    w.write_record(&header).unwrap();
    for r in &report.results {
        let mut rec: Vec<&str> = vec![&r.check, &r.instance];
        rec.extend(cols.iter().map(|c| r.values.get(*c).map(String::as_str).unwrap_or("")));
        rec.push(r.witness.as_deref().unwrap_or(""));
        rec.push(if r.holds { "true" } else { "false" });
        w.write_record(&rec).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "x",
            vec![
                CheckRow::new("t", "a").value("k", 2).value("note", "has, comma").witness("1/5"),
                CheckRow::new("t", "b").value("k", 10).holds(false),
            ],
        )
    }

    #[test]
    fn summary_and_exit_code() {
        let r = sample();
        assert_eq!(r.summary, Summary { checked: 2, held: 1, failed: 1 });
        assert_eq!(r.exit_code(), 1);
        assert_eq!(Report::new("y", vec![]).exit_code(), 0);
    }

    #[test]
    fn csv_quotes_and_header() {
        let text = render(&sample(), Format::Csv);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "check,instance,k,note,witness,holds");
        assert_eq!(lines[1], "t,a,2,\"has, comma\",1/5,true");
        assert_eq!(lines[2], "t,b,10,,,false");
    }

    #[test]
    fn empty_json() {
        let v: serde_json::Value =
            serde_json::from_str(&render(&Report::new("e", vec![]), Format::Json)).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "results", "summary", "version"]);
        assert_eq!(v["results"], serde_json::json!([]));
        assert_eq!(v["summary"]["checked"], 0);
    }

    #[test]
    fn human_aligns_columns() {
        let text = render(&sample(), Format::Human);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], " k        note  holds");
        assert_eq!(lines[1], " 2  has, comma    yes");
        assert_eq!(lines[2], "10                 NO");
        assert_eq!(lines[3], "checked 2, held 1, failed 1");
    }
}
