//! Exact arithmetic toolkit for the rational points of the plane quartics
//!
//! ```text
//! C_k : x^3 z + x^2 y^2 + y^3 z = k z^4
//! ```
//!
//! For `k` outside `{0, -27/16}` the curve has genus 3 and maps onto three
//! elliptic curves `E1`, `E2`, `E3`. When one of them has rank zero the
//! rational points of `C_k` are the preimages of its torsion points; the
//! [`classify`] module implements that decision procedure, and [`cases`]
//! reproduces the torsion case analysis behind it.

pub mod algebra;
pub mod cases;
pub mod classify;
pub mod diophantine;
pub mod elliptic;
pub mod error;
pub mod family;
pub mod ffcheck;
pub mod localsolve;
pub mod search;
mod serde_util;

pub use algebra::{
    cube_divisors, divisors, ext_gcd, rational_roots, resultant_in_y, BiPoly, Field, Fp, Polynomial, Rational,
    RationalFunction,
};
pub use classify::{classify, Branch, ClassificationResult, RankFact, Status};
pub use elliptic::{EPoint, TorsionGroup, TorsionStructure, WeierstrassCurve};
pub use error::{Error, Result};
pub use family::{CPoint, CurveIndex, QuarticCurve};
pub use search::HeightBound;
