//! Exact adjunction theory for convex lattice polygons.
//!
//! Everything here is integer or rational arithmetic on ℤ²: convex hulls,
//! unimodular canonical forms, lattice point counts, normal fans and their
//! minimal smooth resolutions, interior hulls ("onion peeling"), the level
//! of a polarized toric surface as an exact rational LP, intersection
//! numbers on the Picard lattice of a blown-up plane, and an exhaustive
//! verifier that checks the adjunction inequalities over polygon corpora.
//!
//! No floating point is used anywhere in the crate.

pub mod adjunction;
pub mod enumeration;
pub mod error;
pub mod fan;
pub mod inequalities;
pub mod invariants;
pub mod json;
pub mod lattice;
pub mod oracle;
pub mod picard;
pub mod rat;

pub use error::{Error, Result};
pub use lattice::{EdgeDatum, LatticePoint, LatticePolytope, UnimodularMap};
pub use rat::Rational;

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
