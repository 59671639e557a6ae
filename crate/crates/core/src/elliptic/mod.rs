//! Elliptic curves in long Weierstrass form.

mod curve;
mod divpoly;
mod model;
mod torsion;

pub use curve::{EPoint, WeierstrassCurve};
pub use model::IntegralModel;
pub use torsion::{TorsionGroup, TorsionStructure, MAZUR_MAX_ORDER};
