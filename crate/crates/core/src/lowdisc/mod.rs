//! Low-discrepancy point generators: Halton, Sobol LP-tau and the hybrid
//! quasi/pseudo-random fallback used beyond the direction table's dimension.

mod dyadic;
mod halton;
mod primes;
mod sobol;
mod table;

use std::ops::Deref;

pub use dyadic::{dyadic_xor, DyadicFraction};
pub use halton::{halton_point, radical_inverse, radical_inverse_fraction};
pub use primes::{sieve_primes, PrimeList};
pub use sobol::{hybrid_point, hybrid_rng, sobol_point, sobol_point_exact};
pub use table::{DirectionTable, REFERENCE_NUMERATORS};

/// A point of the unit cube produced by one of the sequence generators.
///
/// Halton and Sobol coordinates always lie in the open interval (0, 1) for
/// indices `i >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitPoint(Vec<f64>);

impl UnitPoint {
    pub fn new(coords: Vec<f64>) -> Self {
        Self(coords)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for UnitPoint {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for UnitPoint {
    fn from(coords: Vec<f64>) -> Self {
        Self(coords)
    }
}
