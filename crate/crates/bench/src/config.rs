use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use lpsearch::{DirectionTable, GeneratorKind};
use serde::{Deserialize, Serialize};

use crate::BenchError;

pub const DEFAULT_POINTS: [u64; 4] = [2000, 8192, 32767, 65535];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Halton,
    Sobol,
    Hybrid,
    Random,
    Grid,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Halton,
        Method::Sobol,
        Method::Hybrid,
        Method::Random,
        Method::Grid,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Halton => "halton",
            Method::Sobol => "sobol",
            Method::Hybrid => "hybrid",
            Method::Random => "random",
            Method::Grid => "grid",
        }
    }

    /// Generator for an `n`-point run in `dim` dimensions.
    pub fn kind(&self, n: u64, dim: usize, seed: Option<u64>) -> Result<GeneratorKind, BenchError> {
        Ok(match self {
            Method::Halton => GeneratorKind::Halton,
            Method::Sobol => GeneratorKind::Sobol,
            Method::Hybrid => GeneratorKind::Hybrid {
                seed: seed.unwrap_or(0),
            },
            Method::Random => GeneratorKind::Random {
                seed: seed.ok_or_else(|| BenchError::Config("method random needs --seed".into()))?,
            },
            Method::Grid => GeneratorKind::Grid {
                per_axis: grid_side(n, dim),
            },
        })
    }
}

/// Largest M with M^dim <= n, at least 2.
pub fn grid_side(n: u64, dim: usize) -> u64 {
    let fits = |m: u64| {
        u32::try_from(dim)
            .ok()
            .and_then(|d| m.checked_pow(d))
            .is_some_and(|p| p <= n)
    };
    let mut m = (n as f64).powf(1.0 / dim as f64).round() as u64 + 1;
    while m > 2 && !fits(m) {
        m -= 1;
    }
    m.max(2)
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "halton" => Ok(Method::Halton),
            "sobol" | "lp" | "lptau" => Ok(Method::Sobol),
            "hybrid" => Ok(Method::Hybrid),
            "random" => Ok(Method::Random),
            "grid" => Ok(Method::Grid),
            other => Err(BenchError::Config(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(BenchError::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TableSource {
    /// The built-in table, whose fourth dimension matches the worked examples.
    #[default]
    Embedded,
    /// The classical 40-dimensional table the published runs used.
    BratleyFox,
    File(PathBuf),
}

impl TableSource {
    pub fn load(&self) -> Result<Arc<DirectionTable>, BenchError> {
        Ok(Arc::new(match self {
            TableSource::Embedded => DirectionTable::embedded().clone(),
            TableSource::BratleyFox => DirectionTable::bratley_fox().clone(),
            TableSource::File(path) => DirectionTable::load(path)?,
        }))
    }
}

impl FromStr for TableSource {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "" => return Err(BenchError::Config("empty direction table".into())),
            "builtin" | "embedded" => TableSource::Embedded,
            "bratley-fox" => TableSource::BratleyFox,
            path => TableSource::File(PathBuf::from(path)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Functions 1-7, Halton and LP columns, raw and refined, with the
    /// settings the published result tables reproduce under.
    Published,
    /// First-hit counts on function 5, random search over many seeds.
    QuasiVsRandom,
}

impl FromStr for Preset {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "paper-tables" => Ok(Preset::Published),
            "quasi-vs-random" => Ok(Preset::QuasiVsRandom),
            other => Err(BenchError::Config(format!("unknown preset {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub functions: Vec<u8>,
    pub methods: Vec<Method>,
    pub points: Vec<u64>,
    /// Also emit a refined record for every raw one.
    pub refine: bool,
    pub epsilon: f64,
    pub seed: Option<u64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub direction_table: TableSource,
    /// Run Fletcher-Powell on x1 in [0, 1], where the published columns reproduce.
    pub published_boxes: bool,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            functions: vec![1],
            methods: vec![Method::Halton, Method::Sobol],
            points: DEFAULT_POINTS.to_vec(),
            refine: false,
            epsilon: 1e-6,
            seed: None,
            format: Format::Csv,
            out: None,
            direction_table: TableSource::Embedded,
            published_boxes: false,
            timing: true,
        }
    }
}

impl RunConfig {
    pub fn published_tables() -> Self {
        Self {
            functions: (1..=7).collect(),
            refine: true,
            direction_table: TableSource::BratleyFox,
            published_boxes: true,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.functions.is_empty() || self.methods.is_empty() || self.points.is_empty() {
            return Err(BenchError::Config("need at least one function, method and N".into()));
        }
        if let Some(id) = self.functions.iter().find(|id| !lpsearch::testbed::IDS.contains(id)) {
            return Err(BenchError::Config(format!("unknown function {id}")));
        }
        if self.points.contains(&0) {
            return Err(BenchError::Config("N values must be positive".into()));
        }
        if self.refine && !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(BenchError::Config(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.methods.contains(&Method::Random) && self.seed.is_none() {
            return Err(BenchError::Config("method random needs a seed".into()));
        }
        Ok(())
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), BenchError> {
        let value = value.trim();
        match key.trim() {
            "function" | "functions" => self.functions = parse_functions(value)?,
            "method" | "methods" => self.methods = parse_list(value)?,
            "points" | "n" | "N" => self.points = parse_list(value)?,
            "refine" => self.refine = parse_bool(value)?,
            "epsilon" => self.epsilon = parse_one(value)?,
            "seed" => self.seed = Some(parse_one(value)?),
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            "direction_table" | "direction-table" => self.direction_table = value.parse()?,
            "published_boxes" | "published-boxes" => self.published_boxes = parse_bool(value)?,
            "timing" => self.timing = parse_bool(value)?,
            "preset" => {
                if let Preset::Published = value.parse()? {
                    *self = RunConfig::published_tables();
                }
            }
            other => return Err(BenchError::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    /// Reads a `key = value` file (`#` starts a comment) on top of `self`.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), BenchError> {
        let text = std::fs::read_to_string(path)?;
        self.apply_text(&text)
    }

    pub fn apply_text(&mut self, text: &str) -> Result<(), BenchError> {
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| BenchError::Config(format!("line {}: expected key = value", no + 1)))?;
            self.set(key, value)
                .map_err(|e| BenchError::Config(format!("line {}: {e}", no + 1)))?;
        }
        Ok(())
    }
}

pub fn parse_functions(s: &str) -> Result<Vec<u8>, BenchError> {
    if s.trim() == "all" {
        return Ok(lpsearch::testbed::IDS.collect());
    }
    parse_list(s)
}

pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, BenchError>
where
    T::Err: fmt::Display,
{
    s.split(',').map(|item| parse_one(item)).collect::<Result<Vec<T>, _>>()
}

fn parse_one<T: FromStr>(s: &str) -> Result<T, BenchError>
where
    T::Err: fmt::Display,
{
    s.trim()
        .parse()
        .map_err(|e| BenchError::Config(format!("cannot parse {:?}: {e}", s.trim())))
}

fn parse_bool(s: &str) -> Result<bool, BenchError> {
    match s.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        other => Err(BenchError::Config(format!("expected a boolean, got {other:?}"))),
    }
}
