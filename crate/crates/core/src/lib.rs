//! Exact combinatorics, geometry and homology of the torus orbit spaces of
//! the complex Grassmannians G(n,2).
//!
//! The crate is organized around one module per concern:
//!
//! * [`exact`] — arbitrary-precision rational and Gaussian-rational numbers,
//!   integer/rational matrices, Smith normal form and mod-2 linear algebra;
//! * [`plucker`] — Plücker coordinates of 2-planes and their supports;
//! * [`strata`] — enumeration of admissible sets, representatives, defects;
//! * [`polytope`] — weight polytopes, hypersimplices, exact face structure;
//! * [`symmetry`] — the symmetric-group action, orbits and fundamental strata;
//! * [`moment`] — the moment map and regular/singular classification;
//! * [`params`] — chart parameters, the cubic surface, its blowup, chart
//!   transitions, virtual parameter families and the (CP¹)⁵ embedding;
//! * [`homology`] — chain complexes for the filtration of G(5,2)/T⁵ and the
//!   homology of the orbit spaces.

pub mod exact;
pub mod homology;
pub mod moment;
pub mod params;
pub mod plucker;
pub mod polytope;
pub mod strata;
pub mod symmetry;
