//! Glued annulus surfaces, their gentle quivers, and the stacky nodal curves
//! mirror to them, with the loop, chain and Brieskorn–Pham families of
//! two-variable invertible polynomials as the main source of examples.
//!
//! The pipeline: an [`invertible::InvertiblePoly`] and an admissible index
//! give a [`bside::StackyCurveSpec`]; its node characters determine gluing
//! permutations and hence a [`surface::GluedSurfaceSpec`], whose invariants
//! and generating quiver can be compared with closed formulas and with the
//! curve's exceptional quiver.

pub mod abelian;
pub mod bside;
pub mod invertible;
pub mod perms;
pub mod quiver;
pub mod report;
pub mod surface;
pub mod sweep;

pub use abelian::{Character, FinAbGroup};
pub use bside::{NodeData, StackyCurveSpec};
pub use invertible::InvertiblePoly;
pub use perms::Permutation;
pub use quiver::{generating_quiver, Quiver};
pub use surface::{Column, GluedSurfaceSpec, GluingMode};
