//! Frozen reference values shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use quartic_core::algebra::qq;
use quartic_core::{CPoint, TorsionStructure};

/// Affine points of `C_k` with x-height at most 10, for every `k` in `-10..=10` that has any.
/// The rows at `k = -3` and `k = -8` are closed under `(x, y) -> (y, x)`.
/// `(numerator, denominator)`.
type Frac = (i64, i64);

pub const TABLE_POINTS: &[(i64, &[(Frac, Frac)])] = &[
    (-10, &[((-9, 4), (1, 2)), ((1, 2), (-9, 4))]),
    (
        -8,
        &[
            ((-4, 1), (-2, 1)),
            ((-2, 1), (-4, 1)),
            ((-2, 1), (0, 1)),
            ((0, 1), (-2, 1)),
        ],
    ),
    (-5, &[((-2, 1), (-1, 1)), ((-1, 1), (-2, 1))]),
    (-3, &[((-2, 1), (1, 1)), ((1, 1), (-2, 1))]),
    (-1, &[((-1, 1), (-1, 1)), ((-1, 1), (0, 1)), ((0, 1), (-1, 1))]),
    (
        1,
        &[
            ((-3, 1), (-2, 1)),
            ((-2, 1), (-3, 1)),
            ((-1, 1), (1, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (-1, 1)),
            ((1, 1), (0, 1)),
        ],
    ),
    (3, &[((1, 1), (1, 1))]),
    (6, &[((-1, 2), (7, 4)), ((7, 4), (-1, 2))]),
    (
        8,
        &[((-4, 1), (2, 1)), ((0, 1), (2, 1)), ((2, 1), (-4, 1)), ((2, 1), (0, 1))],
    ),
];

pub fn table_points(k: i64) -> BTreeSet<CPoint> {
    TABLE_POINTS
        .iter()
        .find(|(kk, _)| *kk == k)
        .map(|(_, pts)| {
            pts.iter()
                .map(|&((xn, xd), (yn, yd))| CPoint::affine(&qq(xn, xd), &qq(yn, yd)))
                .collect()
        })
        .unwrap_or_default()
}

pub fn with_infinity(mut s: BTreeSet<CPoint>) -> BTreeSet<CPoint> {
    s.insert(CPoint::infinity_x());
    s.insert(CPoint::infinity_y());
    s
}

pub fn affine(pts: &[(i64, i64)]) -> BTreeSet<CPoint> {
    pts.iter().map(|&(x, y)| CPoint::from_i64(x, y, 1).unwrap()).collect()
}

/// Expected `C_k(Q)` for the classification examples, infinite points included.
pub fn classification_points() -> Vec<(i64, BTreeSet<CPoint>)> {
    vec![
        (-9, with_infinity(affine(&[]))),
        (2, with_infinity(affine(&[]))),
        (-2, with_infinity(affine(&[]))),
        (-72, with_infinity(affine(&[]))),
        (864, with_infinity(affine(&[(-6, -6)]))),
        (-1, with_infinity(affine(&[(-1, 0), (0, -1), (-1, -1)]))),
        (135, with_infinity(affine(&[(3, 3), (-6, 3), (3, -6)]))),
        (-56000, with_infinity(affine(&[]))),
    ]
}

/// Torsion of `E1`, `E2`, `E3` at the special `k`.
pub const TORSION_TABLE: &[(i64, [u32; 3])] = &[
    (-1, [2, 5, 2]),
    (-2, [1, 6, 3]),
    (-17, [2, 1, 2]),
    (-72, [3, 1, 1]),
    (135, [4, 1, 2]),
    (368, [2, 1, 2]),
    (864, [5, 1, 1]),
    (2058, [1, 3, 3]),
    (-56000, [3, 1, 1]),
];

pub fn torsion_row(k: i64) -> [TorsionStructure; 3] {
    let (_, row) = TORSION_TABLE.iter().find(|(kk, _)| *kk == k).expect("tabulated k");
    row.map(TorsionStructure::Cyclic)
}
