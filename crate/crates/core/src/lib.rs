//! Exact computations on monomial ideals: depth, regularity, projective
//! dimension and Cohen–Macaulayness through polarization and Hochster-type
//! homology, plus the clutter and graph criteria that control how depth and
//! regularity move along ordinary and symbolic powers.

pub mod caps;
pub mod clutter;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod polarization;

pub use caps::Caps;
pub use error::{Error, Result};
pub use homology::{Field, HomologicalSummary};
pub use ideal::{Ctx, Monomial, MonomialIdeal, PrimeSet, VarContext, VarSet};
