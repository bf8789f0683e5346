//! Best-of-N global search over trial points from a sequence generator.

use std::sync::Arc;

use crate::domain::{map_to_box, SearchBox};
use crate::error::{Error, Result};
use crate::lowdisc::{halton_point, hybrid_point, hybrid_rng, sobol_point, DirectionTable, PrimeList, UnitPoint};
use crate::objective::Objective;
use crate::refine::Refinement;
use rand::Rng;

/// Source of trial points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Halton,
    Sobol,
    /// Sobol coordinates up to the table's dimension, seeded pseudo-random
    /// coordinates beyond it.
    Hybrid {
        seed: u64,
    },
    /// Independent uniform points.
    Random {
        seed: u64,
    },
    /// Cell-centred even grid with `per_axis` nodes `(k + 1/2) / M` per axis.
    Grid {
        per_axis: u64,
    },
}

impl GeneratorKind {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorKind::Halton => "halton",
            GeneratorKind::Sobol => "sobol",
            GeneratorKind::Hybrid { .. } => "hybrid",
            GeneratorKind::Random { .. } => "random",
            GeneratorKind::Grid { .. } => "grid",
        }
    }

    /// Whether the point sequence is fully determined without a seed.
    pub fn is_quasi(&self) -> bool {
        matches!(
            self,
            GeneratorKind::Halton | GeneratorKind::Sobol | GeneratorKind::Grid { .. }
        )
    }
}

/// A generator kind bound to the direction table it uses.
#[derive(Debug, Clone)]
pub struct Generator {
    kind: GeneratorKind,
    table: Arc<DirectionTable>,
}

impl Generator {
    /// Uses the embedded direction table.
    pub fn new(kind: GeneratorKind) -> Self {
        Self::with_table(kind, Arc::new(DirectionTable::embedded().clone()))
    }

    pub fn with_table(kind: GeneratorKind, table: Arc<DirectionTable>) -> Self {
        Self { kind, table }
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn table(&self) -> &DirectionTable {
        &self.table
    }

    /// Random-access view of the sequence in dimension `dim`.
    pub fn stream(&self, dim: usize) -> Result<PointStream<'_>> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be >= 1"));
        }
        let state = match self.kind {
            GeneratorKind::Halton => StreamState::Halton(PrimeList::with_count(dim)),
            GeneratorKind::Sobol => {
                if dim > self.table.max_dim() {
                    return Err(Error::Capacity(format!(
                        "Sobol search in {dim} dimensions exceeds the {}-dimensional direction table; use the hybrid generator",
                        self.table.max_dim()
                    )));
                }
                StreamState::Plain
            }
            GeneratorKind::Grid { per_axis } => {
                if per_axis < 2 {
                    return Err(Error::invalid(format!(
                        "grid needs at least 2 nodes per axis, got {per_axis}"
                    )));
                }
                let total = grid_size(per_axis, dim)?;
                StreamState::Grid { per_axis, total }
            }
            GeneratorKind::Hybrid { .. } | GeneratorKind::Random { .. } => StreamState::Plain,
        };
        Ok(PointStream {
            generator: self,
            dim,
            state,
        })
    }
}

fn grid_size(per_axis: u64, dim: usize) -> Result<u64> {
    u32::try_from(dim)
        .ok()
        .and_then(|d| per_axis.checked_pow(d))
        .ok_or_else(|| Error::Capacity(format!("{per_axis}^{dim} grid points overflow u64")))
}

enum StreamState {
    Plain,
    Halton(PrimeList),
    Grid { per_axis: u64, total: u64 },
}

/// Trial points of one generator in a fixed dimension, indexed from 1.
pub struct PointStream<'a> {
    generator: &'a Generator,
    dim: usize,
    state: StreamState,
}

impl PointStream<'_> {
    /// Number of points available, if finite.
    pub fn len_limit(&self) -> Option<u64> {
        match self.state {
            StreamState::Grid { total, .. } => Some(total),
            _ => None,
        }
    }

    pub fn point(&self, i: u64) -> Result<UnitPoint> {
        if i == 0 {
            return Err(Error::invalid("trial indices start at 1"));
        }
        let table = self.generator.table.as_ref();
        match (&self.state, self.generator.kind) {
            (StreamState::Halton(primes), _) => halton_point(i, self.dim, primes),
            (StreamState::Grid { per_axis, total }, _) => {
                if i > *total {
                    return Err(Error::Capacity(format!("grid has only {total} points, asked for {i}")));
                }
                Ok(grid_node(i - 1, *per_axis, self.dim))
            }
            (StreamState::Plain, GeneratorKind::Sobol) => sobol_point(i, self.dim, table),
            (StreamState::Plain, GeneratorKind::Hybrid { seed }) => {
                hybrid_point(i, self.dim, table, &mut hybrid_rng(seed, i))
            }
            (StreamState::Plain, GeneratorKind::Random { seed }) => {
                let mut rng = hybrid_rng(seed, i);
                Ok(UnitPoint::new((0..self.dim).map(|_| rng.gen::<f64>()).collect()))
            }
            (StreamState::Plain, _) => unreachable!("stream state matches generator kind"),
        }
    }
}

/// Node `k` (0-based) of the cell-centred grid; the last axis varies fastest.
fn grid_node(mut k: u64, per_axis: u64, dim: usize) -> UnitPoint {
    let m = per_axis as f64;
    let mut coords = vec![0.0; dim];
    for c in coords.iter_mut().rev() {
        *c = ((k % per_axis) as f64 + 0.5) / m;
        k /= per_axis;
    }
    UnitPoint::new(coords)
}

/// All `per_axis^dim` nodes of the cell-centred even grid.
pub fn grid_points(per_axis: u64, dim: usize) -> Result<impl Iterator<Item = UnitPoint>> {
    if per_axis < 2 {
        return Err(Error::invalid(format!(
            "grid needs at least 2 nodes per axis, got {per_axis}"
        )));
    }
    if dim == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    let total = grid_size(per_axis, dim)?;
    Ok((0..total).map(move |k| grid_node(k, per_axis, dim)))
}

/// Probability that at least one of `n` independent uniform points falls
/// into a vicinity of measure `u`: `1 - (1 - u)^n`.
pub fn hit_probability(u: f64, n: u64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::invalid(format!("vicinity measure must lie in (0, 1), got {u}")));
    }
    if n == 0 {
        return Err(Error::invalid("need at least one trial"));
    }
    Ok(-(n as f64 * (-u).ln_1p()).exp_m1())
}

/// A new incumbent found during the search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Improvement {
    pub index: u64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_point: Vec<f64>,
    pub best_value: f64,
    /// 1-based trial index of the incumbent (for refined results, of the
    /// raw incumbent the refinement started from).
    pub best_index: u64,
    /// Objective evaluations of the global phase; infeasible trials are not
    /// evaluated.
    pub evaluations: u64,
    pub trials: u64,
    /// Strictly decreasing record of incumbents.
    pub history: Vec<Improvement>,
    pub refinement: Option<Refinement>,
}

/// Evaluates the objective at trial points `1..=n` mapped into `bounds` and
/// keeps the smallest value, the lowest index winning ties.
///
/// Trials that fail the objective's feasibility test, or at which it is
/// undefined, keep their index but are not counted as evaluations.
pub fn global_search<O>(objective: &O, bounds: &SearchBox, n: u64, generator: &Generator) -> Result<SearchResult>
where
    O: Objective + ?Sized,
{
    if n == 0 {
        return Err(Error::invalid("need at least one trial point"));
    }
    let dim = objective.dimension();
    if dim != bounds.dimension() {
        return Err(Error::invalid(format!(
            "objective has dimension {dim}, box has {}",
            bounds.dimension()
        )));
    }
    let stream = generator.stream(dim)?;
    if let Some(limit) = stream.len_limit() {
        if n > limit {
            return Err(Error::Capacity(format!("grid has {limit} points, {n} requested")));
        }
    }

    let mut best: Option<(Vec<f64>, f64, u64)> = None;
    let mut evaluations = 0u64;
    let mut history = Vec::new();
    for i in 1..=n {
        let x = map_to_box(&stream.point(i)?, bounds)?;
        if !objective.is_feasible(&x) {
            continue;
        }
        let value = match objective.evaluate(&x) {
            Ok(v) if v.is_nan() => continue,
            Ok(v) => v,
            Err(Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        };
        evaluations += 1;
        if best.as_ref().is_none_or(|(_, b, _)| value < *b) {
            history.push(Improvement { index: i, value });
            best = Some((x, value, i));
        }
    }

    let (best_point, best_value, best_index) = best.ok_or(Error::NoFeasiblePoint { trials: n })?;
    Ok(SearchResult {
        best_point,
        best_value,
        best_index,
        evaluations,
        trials: n,
        history,
        refinement: None,
    })
}

/// First trial index, up to `max_n`, whose mapped point lies within
/// `half_width * (b_j - a_j)` of `target` in every coordinate.
pub fn first_hit(
    generator: &Generator,
    bounds: &SearchBox,
    target: &[f64],
    half_width: f64,
    max_n: u64,
) -> Result<Option<u64>> {
    if target.len() != bounds.dimension() {
        return Err(Error::invalid("target dimension differs from the box"));
    }
    if half_width <= 0.0 {
        return Err(Error::invalid("vicinity half-width must be positive"));
    }
    let stream = generator.stream(bounds.dimension())?;
    let limit = stream.len_limit().map_or(max_n, |l| l.min(max_n));
    for i in 1..=limit {
        let x = map_to_box(&stream.point(i)?, bounds)?;
        let inside = x
            .iter()
            .zip(target)
            .enumerate()
            .all(|(j, (v, t))| (v - t).abs() <= half_width * bounds.width(j));
        if inside {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
