use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::{Format, Method};
use crate::BenchError;

pub const CSV_HEADER: [&str; 9] = [
    "function",
    "method",
    "N",
    "refined",
    "best_value",
    "best_point",
    "evals",
    "iters",
    "wall_ms",
];

/// Rounds to the 7 decimals reports carry.
pub fn round7(x: f64) -> f64 {
    if x.is_finite() {
        (x * 1e7).round() / 1e7 + 0.0
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub function: u8,
    pub method: Method,
    #[serde(rename = "N")]
    pub n: u64,
    pub refined: bool,
    pub best_value: f64,
    pub best_point: Vec<f64>,
    /// Objective evaluations, refinement included.
    pub evals: u64,
    /// Refinement iterations (0 for raw records).
    pub iters: u64,
    pub wall_ms: f64,
}

impl Record {
    /// Stores values at report precision.
    pub fn rounded(mut self) -> Self {
        self.best_value = round7(self.best_value);
        self.best_point.iter_mut().for_each(|v| *v = round7(*v));
        self.wall_ms = round7(self.wall_ms);
        self
    }

    fn sort_key(&self) -> (u8, &'static str, u64, bool) {
        (self.function, self.method.as_str(), self.n, self.refined)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Self { records }
    }

    pub fn find(&self, function: u8, method: Method, n: u64, refined: bool) -> Option<&Record> {
        self.records
            .iter()
            .find(|r| r.function == function && r.method == method && r.n == n && r.refined == refined)
    }

    pub fn from_json(text: &str) -> Result<Self, BenchError> {
        Ok(serde_json::from_str(text)?)
    }
}

fn fmt7(x: f64) -> String {
    format!("{x:.7}")
}

/// Serializes the report. CSV keeps `best_point` in one column with
/// coordinates separated by `;`.
pub fn render(report: &Report, format: Format) -> Result<String, BenchError> {
    if report.records.is_empty() {
        return Err(BenchError::EmptyReport);
    }
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for r in &report.records {
                let point = r.best_point.iter().map(|&v| fmt7(v)).collect::<Vec<_>>().join(";");
                w.write_record([
                    r.function.to_string(),
                    r.method.to_string(),
                    r.n.to_string(),
                    r.refined.to_string(),
                    fmt7(r.best_value),
                    point,
                    r.evals.to_string(),
                    r.iters.to_string(),
                    fmt7(r.wall_ms),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| BenchError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(report: &Report, format: Format, path: Option<&Path>) -> Result<(), BenchError> {
    let text = render(report, format)?;
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Parses CSV produced by [`render`].
pub fn read_csv<R: Read>(reader: R) -> Result<Report, BenchError> {
    let mut rdr = csv::Reader::from_reader(reader);
    if rdr.headers()?.iter().ne(CSV_HEADER) {
        return Err(BenchError::Config("unexpected CSV header".into()));
    }
    let bad = |what: &str| BenchError::Config(format!("bad {what} field"));
    let mut records = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let field = |i: usize| row.get(i).unwrap_or("");
        records.push(Record {
            function: field(0).parse().map_err(|_| bad("function"))?,
            method: field(1).parse()?,
            n: field(2).parse().map_err(|_| bad("N"))?,
            refined: field(3).parse().map_err(|_| bad("refined"))?,
            best_value: field(4).parse().map_err(|_| bad("best_value"))?,
            best_point: field(5)
                .split(';')
                .map(|v| v.parse().map_err(|_| bad("best_point")))
                .collect::<Result<_, _>>()?,
            evals: field(6).parse().map_err(|_| bad("evals"))?,
            iters: field(7).parse().map_err(|_| bad("iters"))?,
            wall_ms: field(8).parse().map_err(|_| bad("wall_ms"))?,
        });
    }
    Ok(Report::new(records))
}
