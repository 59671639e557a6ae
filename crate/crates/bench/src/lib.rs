//! Inputs shared by the benchmarks.

use quartic_core::cases::CASE6_OCTIC;
use quartic_core::localsolve::SuperellipticModel;
use quartic_core::QuarticCurve;

/// The values of `k` with nontrivial torsion on some quotient.
pub const SPECIAL_K: [i64; 9] = [-1, -2, -17, -72, 135, 368, 864, 2058, -56000];

pub fn curve(k: i64) -> QuarticCurve {
    QuarticCurve::from_int(k).expect("nonzero k")
}

pub fn order7_model() -> SuperellipticModel {
    SuperellipticModel::from_i64(9, 4, &CASE6_OCTIC).expect("valid model")
}
