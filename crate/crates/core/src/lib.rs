//! Deterministic quasi-random global search.
//!
//! Trial points come from Halton or Sobol LP-tau sequences in the unit cube,
//! are mapped affinely into a search box, and the best evaluated point is kept.
//! The incumbent can then be polished with a Davidon-Fletcher-Powell
//! quasi-Newton iteration driven by finite-difference gradients.
//!
//! ```
//! use lpsearch::{global_search, testbed, Generator, GeneratorKind};
//!
//! let rosenbrock = testbed::function(1).unwrap();
//! let result = global_search(
//!     &rosenbrock,
//!     rosenbrock.default_box(),
//!     2000,
//!     &Generator::new(GeneratorKind::Halton),
//! )
//! .unwrap();
//! assert!((result.best_value - 0.0034812).abs() < 5e-8);
//! ```

pub mod domain;
mod error;
pub mod lowdisc;
mod objective;
pub mod refine;
pub mod search;
pub mod testbed;

pub use domain::{map_to_box, select_feasible, FeasibleRegion, SearchBox, Selection};
pub use error::{Error, Result};
pub use lowdisc::{
    dyadic_xor, halton_point, hybrid_point, hybrid_rng, radical_inverse, radical_inverse_fraction, sieve_primes,
    sobol_point, sobol_point_exact, DirectionTable, DyadicFraction, PrimeList, UnitPoint,
};
pub use objective::{FnObjective, Objective};
pub use refine::{
    dfp_refine, fd_gradient, search_and_refine, Iterate, RefineConfig, RefineOutcome, RefineTrace, Refinement,
    Termination,
};
pub use search::{
    first_hit, global_search, grid_points, hit_probability, Generator, GeneratorKind, Improvement, PointStream,
    SearchResult,
};
