//! Search boxes and feasibility filtering.
//!
//! Only inequality-type regions of positive volume can be searched: trial
//! points are kept or rejected by a membership predicate. Equality
//! constraints must be eliminated (for example by substitution) before the
//! search, since a rejection filter never hits a zero-volume set.

use crate::error::{Error, Result};

/// Axis-aligned parallelepiped `a_j <= x_j <= b_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchBox {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::invalid(format!(
                "bounds have {} lower and {} upper entries",
                lower.len(),
                upper.len()
            )));
        }
        if lower.is_empty() {
            return Err(Error::invalid("a box needs at least one dimension"));
        }
        for (j, (a, b)) in lower.iter().zip(&upper).enumerate() {
            if !(a.is_finite() && b.is_finite() && a < b) {
                return Err(Error::invalid(format!(
                    "dimension {}: need finite a < b, got [{a}, {b}]",
                    j + 1
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// `[a, b]^dim`.
    pub fn cube(a: f64, b: f64, dim: usize) -> Result<Self> {
        Self::new(vec![a; dim], vec![b; dim])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, j: usize) -> f64 {
        self.upper[j] - self.lower[j]
    }

    pub fn volume(&self) -> f64 {
        (0..self.dimension()).map(|j| self.width(j)).product()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (a, b))| *a <= *v && *v <= *b)
    }

    /// The box pulled inwards by `margin * (b_j - a_j)` on every side.
    pub fn shrunk(&self, margin: f64) -> Result<Self> {
        if !(0.0..0.5).contains(&margin) {
            return Err(Error::invalid(format!("margin {margin} outside [0, 0.5)")));
        }
        if margin == 0.0 {
            return Ok(self.clone());
        }
        let (lower, upper) = (0..self.dimension())
            .map(|j| {
                let pad = margin * self.width(j);
                (self.lower[j] + pad, self.upper[j] - pad)
            })
            .unzip();
        Self::new(lower, upper)
    }

    /// Projects `x` coordinate-wise onto the box.
    pub fn clamp(&self, x: &mut [f64]) {
        for ((v, a), b) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*a, *b);
        }
    }
}

/// `x_j = a_j + q_j (b_j - a_j)`.
pub fn map_to_box(q: &[f64], bounds: &SearchBox) -> Result<Vec<f64>> {
    if q.len() != bounds.dimension() {
        return Err(Error::invalid(format!(
            "point has dimension {}, box has {}",
            q.len(),
            bounds.dimension()
        )));
    }
    Ok(q.iter()
        .enumerate()
        .map(|(j, &qj)| bounds.lower[j] + qj * bounds.width(j))
        .collect())
}

type Predicate<'a> = Box<dyn Fn(&[f64]) -> bool + Sync + 'a>;

/// A box together with a deterministic membership test for `G` inside it.
pub struct FeasibleRegion<'a> {
    bounds: SearchBox,
    predicate: Predicate<'a>,
}

impl<'a> FeasibleRegion<'a> {
    pub fn new(bounds: SearchBox, predicate: impl Fn(&[f64]) -> bool + Sync + 'a) -> Self {
        Self {
            bounds,
            predicate: Box::new(predicate),
        }
    }

    /// The whole box is feasible.
    pub fn whole(bounds: SearchBox) -> Self {
        Self::new(bounds, |_| true)
    }

    pub fn bounds(&self) -> &SearchBox {
        &self.bounds
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        (self.predicate)(x)
    }
}

/// Outcome of [`select_feasible`].
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub accepted: Vec<Vec<f64>>,
    pub offered: usize,
    /// Acceptance ratio `accepted / offered`, an estimate of `V_G / V_Pi`.
    pub efficiency: f64,
}

/// Keeps the points that pass the region's predicate, in input order.
pub fn select_feasible<I>(points: I, region: &FeasibleRegion<'_>) -> Result<Selection>
where
    I: IntoIterator<Item = Vec<f64>>,
{
    let mut offered = 0usize;
    let accepted: Vec<Vec<f64>> = points
        .into_iter()
        .inspect(|_| offered += 1)
        .filter(|x| region.contains(x))
        .collect();
    if offered == 0 {
        return Err(Error::invalid("no points supplied"));
    }
    let efficiency = accepted.len() as f64 / offered as f64;
    Ok(Selection {
        accepted,
        offered,
        efficiency,
    })
}
