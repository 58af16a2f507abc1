//! Exact integer geometry in the plane: points, unimodular maps, convex
//! lattice polytopes, canonical forms, and edge data.

mod canonical;
mod point;
mod polytope;
mod unimodular;

pub use point::{cross, det2, gcd_nonneg, primitive, LatticePoint};
pub use polytope::{Dim, EdgeDatum, LatticePolytope};
pub use unimodular::UnimodularMap;
