use crate::error::Result;

/// A scalar function to be minimised.
///
/// Implementations must be callable from several threads at once. `evaluate`
/// returns [`Error::Domain`](crate::Error::Domain) where the function is
/// undefined; searches treat such points as infeasible.
pub trait Objective: Sync {
    fn dimension(&self) -> usize;

    fn evaluate(&self, x: &[f64]) -> Result<f64>;

    /// Membership test for an implicit feasible region inside the search box.
    fn is_feasible(&self, _x: &[f64]) -> bool {
        true
    }
}

/// Adapts a closure into an [`Objective`].
pub struct FnObjective<F> {
    dimension: usize,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> Result<f64> + Sync,
{
    pub fn new(dimension: usize, f: F) -> Self {
        Self { dimension, f }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> Result<f64> + Sync,
{
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        (self.f)(x)
    }
}
