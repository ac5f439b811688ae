//! Homological invariants of monomial quotients.
//!
//! Betti numbers come from Hochster-type upper Koszul complexes over the lcm
//! lattice; depth of squarefree quotients can also be read from skeleta via
//! Reisner's criterion, which the tests use as an independent route.

mod betti;
mod complex;
mod field;
pub(crate) mod linalg;
mod summary;

pub use betti::{betti_table, lcm_lattice, upper_koszul, BettiTable};
pub use complex::SimplicialComplex;
pub use field::Field;
pub use summary::{
    depth, depth_zero_witness, homological_summary, skeleton_depth, terai_check,
    HomologicalSummary, TeraiCheck, WitnessOutcome,
};
