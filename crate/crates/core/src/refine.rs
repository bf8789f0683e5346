//! Davidon-Fletcher-Powell refinement of a search incumbent.

use crate::domain::SearchBox;
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::search::{global_search, Generator, SearchResult};

const ARMIJO_C: f64 = 1e-4;
const BACKTRACK: f64 = 0.5;
const MAX_BACKTRACKS: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefineConfig {
    /// Stop once the gradient norm drops below this.
    pub epsilon: f64,
    pub max_iterations: u32,
    /// Relative finite-difference step.
    pub fd_step: f64,
    /// Iterates are clamped to the box shrunk by `box_margin * (b_j - a_j)`.
    pub box_margin: f64,
}

impl Default for RefineConfig {
    fn default() -> Self {
        Self {
            epsilon: 1e-6,
            max_iterations: 1000,
            fd_step: 1e-6,
            box_margin: 0.0,
        }
    }
}

impl RefineConfig {
    pub fn with_epsilon(epsilon: f64) -> Self {
        Self {
            epsilon,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::invalid(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::invalid("max_iterations must be >= 1"));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 1.0) {
            return Err(Error::invalid(format!(
                "fd_step must lie in (0, 1), got {}",
                self.fd_step
            )));
        }
        if !(0.0..0.5).contains(&self.box_margin) {
            return Err(Error::invalid(format!(
                "box_margin must lie in [0, 0.5), got {}",
                self.box_margin
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Converged,
    MaxIterations,
    /// No step along the search direction gave sufficient decrease.
    LineSearchFailure,
    /// The objective was undefined at every probe.
    DomainFailure,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::Converged => "converged",
            Termination::MaxIterations => "max_iterations",
            Termination::LineSearchFailure => "line_search_failure",
            Termination::DomainFailure => "domain_failure",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Iterate {
    pub point: Vec<f64>,
    pub value: f64,
    pub grad_norm: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RefineTrace {
    /// Starting point first, then one entry per accepted step.
    pub iterates: Vec<Iterate>,
    pub termination: Termination,
}

impl RefineTrace {
    /// Accepted steps.
    pub fn iterations(&self) -> usize {
        self.iterates.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RefineOutcome {
    pub point: Vec<f64>,
    pub value: f64,
    /// Objective evaluations, finite-difference probes included.
    pub evaluations: u64,
    pub trace: RefineTrace,
}

/// Refinement record attached to a [`SearchResult`].
#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    pub raw_point: Vec<f64>,
    pub raw_value: f64,
    /// The refinement, or why it could not start.
    pub outcome: std::result::Result<RefineOutcome, Error>,
}

struct Counted<'a, O: ?Sized> {
    objective: &'a O,
    evaluations: u64,
}

impl<O: Objective + ?Sized> Counted<'_, O> {
    fn eval(&mut self, x: &[f64]) -> Result<f64> {
        if !self.objective.is_feasible(x) {
            return Err(Error::domain("point outside the objective's domain"));
        }
        self.evaluations += 1;
        match self.objective.evaluate(x) {
            Ok(v) if v.is_nan() => Err(Error::domain("objective returned NaN")),
            other => other,
        }
    }

    fn gradient(&mut self, x: &[f64], fx: f64, fd_step: f64) -> Result<Vec<f64>> {
        let mut probe = x.to_vec();
        let mut g = Vec::with_capacity(x.len());
        for j in 0..x.len() {
            let h = fd_step * x[j].abs().max(1.0);
            probe[j] = x[j] + h;
            let forward = self.eval(&probe);
            probe[j] = x[j] - h;
            let backward = self.eval(&probe);
            probe[j] = x[j];
            g.push(match (forward, backward) {
                (Ok(fp), Ok(fm)) => (fp - fm) / (2.0 * h),
                (Ok(fp), Err(_)) => (fp - fx) / h,
                (Err(_), Ok(fm)) => (fx - fm) / h,
                (Err(e), Err(_)) => {
                    return Err(Error::domain(format!(
                        "gradient probes along axis {j} both failed: {e}"
                    )))
                }
            });
        }
        Ok(g)
    }
}

/// Central-difference gradient with step `fd_step * max(|x_j|, 1)`, falling
/// back to a one-sided difference where one probe leaves the domain.
pub fn fd_gradient<O: Objective + ?Sized>(objective: &O, x: &[f64], fd_step: f64) -> Result<Vec<f64>> {
    if x.len() != objective.dimension() {
        return Err(Error::invalid("point dimension differs from the objective"));
    }
    if !(fd_step > 0.0 && fd_step < 1.0) {
        return Err(Error::invalid(format!("fd_step must lie in (0, 1), got {fd_step}")));
    }
    let mut counted = Counted {
        objective,
        evaluations: 0,
    };
    let fx = counted.eval(x)?;
    counted.gradient(x, fx, fd_step)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Row-major symmetric matrix.
struct InverseHessian {
    n: usize,
    h: Vec<f64>,
    identity: bool,
}

impl InverseHessian {
    fn new(n: usize) -> Self {
        let mut m = Self {
            n,
            h: vec![0.0; n * n],
            identity: false,
        };
        m.reset();
        m
    }

    fn reset(&mut self) {
        self.h.iter_mut().for_each(|v| *v = 0.0);
        for i in 0..self.n {
            self.h[i * self.n + i] = 1.0;
        }
        self.identity = true;
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.h.chunks(self.n).map(|row| dot(row, v)).collect()
    }

    /// H <- H + s s'/(s'y) - (Hy)(Hy)'/(y'Hy); resets instead when the
    /// curvature condition fails.
    fn update(&mut self, s: &[f64], y: &[f64]) {
        let sy = dot(s, y);
        let hy = self.apply(y);
        let yhy = dot(y, &hy);
        if !(sy > 0.0 && yhy > 0.0) || !sy.is_finite() || !yhy.is_finite() {
            self.reset();
            return;
        }
        let n = self.n;
        for i in 0..n {
            for j in i..n {
                let v = self.h[i * n + j] + s[i] * s[j] / sy - hy[i] * hy[j] / yhy;
                self.h[i * n + j] = v;
                self.h[j * n + i] = v;
            }
        }
        self.identity = false;
    }
}

enum Step {
    Accepted(Vec<f64>, f64),
    NoDecrease,
    Undefined,
}

fn line_search<O: Objective + ?Sized>(
    counted: &mut Counted<'_, O>,
    bounds: &SearchBox,
    x: &[f64],
    fx: f64,
    g: &[f64],
    d: &[f64],
) -> Step {
    let mut alpha = 1.0;
    let mut any_defined = false;
    for _ in 0..MAX_BACKTRACKS {
        let mut trial: Vec<f64> = x.iter().zip(d).map(|(xi, di)| xi + alpha * di).collect();
        bounds.clamp(&mut trial);
        if trial == x {
            // Clamping leaves no room to move.
            any_defined = true;
            break;
        }
        let s: Vec<f64> = trial.iter().zip(x).map(|(a, b)| a - b).collect();
        if let Ok(ft) = counted.eval(&trial) {
            any_defined = true;
            if ft <= fx + ARMIJO_C * dot(g, &s) && ft.is_finite() {
                return Step::Accepted(trial, ft);
            }
        }
        alpha *= BACKTRACK;
    }
    if any_defined {
        Step::NoDecrease
    } else {
        Step::Undefined
    }
}

/// Quasi-Newton descent from `x0` with the DFP inverse-Hessian update,
/// backtracking (Armijo) line search and iterates clamped to the box.
pub fn dfp_refine<O: Objective + ?Sized>(
    objective: &O,
    x0: &[f64],
    bounds: &SearchBox,
    config: &RefineConfig,
) -> Result<RefineOutcome> {
    config.validate()?;
    let n = objective.dimension();
    if n != bounds.dimension() || x0.len() != n {
        return Err(Error::invalid("dimensions of objective, start point and box differ"));
    }
    if !bounds.contains(x0) {
        return Err(Error::invalid(format!("start point {x0:?} lies outside the box")));
    }
    let inner = bounds.shrunk(config.box_margin)?;
    let mut x = x0.to_vec();
    inner.clamp(&mut x);

    let mut counted = Counted {
        objective,
        evaluations: 0,
    };
    let mut fx = counted.eval(&x).map_err(|e| match e {
        Error::Domain(m) => Error::invalid(format!("start point is infeasible: {m}")),
        other => other,
    })?;
    let finish = |x: Vec<f64>, fx: f64, iterates, termination, evaluations| RefineOutcome {
        point: x,
        value: fx,
        evaluations,
        trace: RefineTrace { iterates, termination },
    };

    let mut iterates = Vec::new();
    let mut g = match counted.gradient(&x, fx, config.fd_step) {
        Ok(g) => g,
        Err(_) => {
            iterates.push(Iterate {
                point: x.clone(),
                value: fx,
                grad_norm: f64::NAN,
            });
            let evals = counted.evaluations;
            return Ok(finish(x, fx, iterates, Termination::DomainFailure, evals));
        }
    };
    iterates.push(Iterate {
        point: x.clone(),
        value: fx,
        grad_norm: norm(&g),
    });

    let mut h = InverseHessian::new(n);
    let mut termination = Termination::MaxIterations;
    for _ in 0..config.max_iterations {
        if norm(&g) < config.epsilon {
            termination = Termination::Converged;
            break;
        }
        let step = loop {
            let mut d: Vec<f64> = h.apply(&g).into_iter().map(|v| -v).collect();
            if dot(&d, &g) >= 0.0 && !h.identity {
                h.reset();
                d = g.iter().map(|v| -v).collect();
            }
            match line_search(&mut counted, &inner, &x, fx, &g, &d) {
                Step::Accepted(xn, fxn) => break Ok((xn, fxn)),
                failure if h.identity => break Err(failure),
                _ => h.reset(),
            }
        };
        let (xn, fxn) = match step {
            Ok(s) => s,
            Err(Step::Undefined) => {
                termination = Termination::DomainFailure;
                break;
            }
            Err(_) => {
                termination = Termination::LineSearchFailure;
                break;
            }
        };
        let gn = match counted.gradient(&xn, fxn, config.fd_step) {
            Ok(gn) => gn,
            Err(_) => {
                // Keep the accepted point; its gradient is unavailable.
                iterates.push(Iterate {
                    point: xn.clone(),
                    value: fxn,
                    grad_norm: f64::NAN,
                });
                x = xn;
                fx = fxn;
                termination = Termination::DomainFailure;
                break;
            }
        };
        let s: Vec<f64> = xn.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = gn.iter().zip(&g).map(|(a, b)| a - b).collect();
        h.update(&s, &y);
        x = xn;
        fx = fxn;
        g = gn;
        iterates.push(Iterate {
            point: x.clone(),
            value: fx,
            grad_norm: norm(&g),
        });
    }
    if termination == Termination::MaxIterations && norm(&g) < config.epsilon {
        termination = Termination::Converged;
    }
    let evals = counted.evaluations;
    Ok(finish(x, fx, iterates, termination, evals))
}

/// Global search followed by DFP refinement of the incumbent. A refinement
/// that cannot start leaves the raw incumbent in place.
pub fn search_and_refine<O: Objective + ?Sized>(
    objective: &O,
    bounds: &SearchBox,
    n: u64,
    generator: &Generator,
    config: &RefineConfig,
) -> Result<SearchResult> {
    config.validate()?;
    let mut result = global_search(objective, bounds, n, generator)?;
    let outcome = dfp_refine(objective, &result.best_point, bounds, config);
    let raw_point = result.best_point.clone();
    let raw_value = result.best_value;
    if let Ok(o) = &outcome {
        if o.value <= raw_value {
            result.best_point = o.point.clone();
            result.best_value = o.value;
        }
    }
    result.refinement = Some(Refinement {
        raw_point,
        raw_value,
        outcome,
    });
    Ok(result)
}
