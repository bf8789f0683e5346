use std::sync::Arc;
use std::time::Instant;

use lpsearch::testbed::{self, TestFunction};
use lpsearch::{
    dfp_refine, first_hit, global_search, DirectionTable, Generator, GeneratorKind, Objective, RefineConfig, SearchBox,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Method, RunConfig};
use crate::report::{Record, Report};
use crate::BenchError;

/// Box the published Fletcher-Powell columns were computed on.
pub fn fletcher_powell_published_box() -> SearchBox {
    SearchBox::new(vec![0.0, 0.0, 0.0], vec![1.0, 2.0, 2.0]).expect("valid box")
}

fn search_box(f: &TestFunction, config: &RunConfig) -> SearchBox {
    if config.published_boxes && f.id() == 2 {
        fletcher_powell_published_box()
    } else {
        f.default_box().clone()
    }
}

fn run_cell(
    f: &TestFunction,
    method: Method,
    n: u64,
    config: &RunConfig,
    table: &Arc<DirectionTable>,
) -> Result<Vec<Record>, BenchError> {
    let bounds = search_box(f, config);
    let kind = method.kind(n, f.dimension(), config.seed)?;
    // A grid run evaluates the whole grid, which may differ from N.
    let trials = match kind {
        GeneratorKind::Grid { per_axis } => per_axis.pow(f.dimension() as u32),
        _ => n,
    };
    let generator = Generator::with_table(kind, Arc::clone(table));
    let elapsed = |t: Instant| {
        if config.timing {
            t.elapsed().as_secs_f64() * 1e3
        } else {
            0.0
        }
    };

    let start = Instant::now();
    let raw = global_search(f, &bounds, trials, &generator)?;
    let raw_ms = elapsed(start);
    let raw_record = Record {
        function: f.id(),
        method,
        n,
        refined: false,
        best_value: raw.best_value,
        best_point: raw.best_point.clone(),
        evals: raw.evaluations,
        iters: 0,
        wall_ms: raw_ms,
    };
    if !config.refine {
        return Ok(vec![raw_record.rounded()]);
    }

    let start = Instant::now();
    let refine = RefineConfig::with_epsilon(config.epsilon);
    let mut refined = Record {
        refined: true,
        ..raw_record.clone()
    };
    // A refinement that cannot start keeps the raw incumbent.
    if let Ok(out) = dfp_refine(f, &raw.best_point, &bounds, &refine) {
        if out.value <= raw.best_value {
            refined.best_value = out.value;
            refined.best_point = out.point;
        }
        refined.evals += out.evaluations;
        refined.iters = out.trace.iterations() as u64;
    }
    refined.wall_ms = raw_ms + elapsed(start);
    Ok(vec![raw_record.rounded(), refined.rounded()])
}

/// One record per (function, method, N), plus a refined record for each when
/// refinement is on; sorted by (function, method, N, refined).
pub fn run_benchmark(config: &RunConfig) -> Result<Report, BenchError> {
    config.validate()?;
    let table = config.direction_table.load()?;
    let functions: Vec<TestFunction> = config
        .functions
        .iter()
        .map(|&id| testbed::function(id))
        .collect::<Result<_, _>>()?;
    let mut cells = Vec::new();
    for f in &functions {
        for &method in &config.methods {
            for &n in &config.points {
                cells.push((f, method, n));
            }
        }
    }
    let records: Vec<Vec<Record>> = cells
        .into_par_iter()
        .map(|(f, method, n)| run_cell(f, method, n, config, &table))
        .collect::<Result<_, _>>()?;
    Ok(Report::new(records.into_iter().flatten().collect()))
}

/// First-hit counts for the vicinity of the function-5 minimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HitComparison {
    pub half_width: f64,
    pub max_n: u64,
    pub sobol: Option<u64>,
    pub halton: Option<u64>,
    /// One entry per seed; `None` when no hit within `max_n`.
    pub random: Vec<Option<u64>>,
    /// Misses count as `max_n + 1`.
    pub random_median: f64,
    /// `random_median / sobol`.
    pub ratio: Option<f64>,
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let m = values.len() / 2;
    if values.len() % 2 == 1 {
        values[m]
    } else {
        (values[m - 1] + values[m]) / 2.0
    }
}

/// Trial counts needed to first enter the `half_width` (box-relative)
/// vicinity of (0, 0) on function 5: Sobol, Halton, and random search with
/// seeds `first_seed..first_seed + seeds`.
pub fn quasi_vs_random(
    seeds: u64,
    first_seed: u64,
    half_width: f64,
    max_n: u64,
    table: Arc<DirectionTable>,
) -> Result<HitComparison, BenchError> {
    if seeds == 0 {
        return Err(BenchError::Config("need at least one seed".into()));
    }
    let f = testbed::function(5)?;
    let bounds = f.default_box();
    let target = &f.minimizers()[0];
    let hit = |kind| {
        first_hit(
            &Generator::with_table(kind, Arc::clone(&table)),
            bounds,
            target,
            half_width,
            max_n,
        )
    };
    let sobol = hit(GeneratorKind::Sobol)?;
    let halton = hit(GeneratorKind::Halton)?;
    let random: Vec<Option<u64>> = (first_seed..first_seed + seeds)
        .into_par_iter()
        .map(|seed| hit(GeneratorKind::Random { seed }))
        .collect::<Result<_, _>>()?;
    let mut counts: Vec<f64> = random.iter().map(|h| h.unwrap_or(max_n + 1) as f64).collect();
    let random_median = median(&mut counts);
    Ok(HitComparison {
        half_width,
        max_n,
        sobol,
        halton,
        random,
        random_median,
        ratio: sobol.map(|s| random_median / s as f64),
    })
}
