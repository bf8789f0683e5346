//! Sweeps of the test suite over methods and trial counts, with CSV/JSON
//! reports.

pub mod config;
pub mod published;
pub mod report;
pub mod run;

pub use config::{Format, Method, Preset, RunConfig, TableSource};
pub use report::{emit_report, read_csv, render, Record, Report};
pub use run::{quasi_vs_random, run_benchmark, HitComparison};

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Search(#[from] lpsearch::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("report has no records")]
    EmptyReport,
}
