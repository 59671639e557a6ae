//! Height-bounded point searches.
//!
//! Completeness is relative to the height of the x-coordinate only; the y-coordinates
//! come from exact root finding.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{integer_roots_i128, q, rational_roots, rational_sqrt, Polynomial, Rational};
use crate::elliptic::{EPoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::family::{CPoint, QuarticCurve};

/// Bound on the naive height `max(|numerator|, denominator)` of searched x-coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct HeightBound(u64);

impl HeightBound {
    pub const DEFAULT: HeightBound = HeightBound(100);

    pub fn new(h: u64) -> Result<Self> {
        if h == 0 {
            return Err(Error::domain("height bound must be at least 1"));
        }
        Ok(HeightBound(h))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl Default for HeightBound {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for HeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Coprime pairs `(a, b)` with `|a| <= h` and `b` in `denominators`, ordered by `b` then `|a|`.
fn numerators(h: i64, b: i64) -> impl Iterator<Item = i64> {
    (0..=h)
        .flat_map(|m| if m == 0 { vec![0] } else { vec![-m, m] })
        .filter(move |&a| a.gcd(&b) == 1)
}

/// Points of `C_k` with x-coordinate of height at most `h`, plus the two points at infinity.
pub fn search_ck(k: &Rational, h: HeightBound) -> Result<BTreeSet<CPoint>> {
    let curve = QuarticCurve::new(k.clone())?;
    let hh = h.get() as i64;
    let int_k = k.is_integer().then(|| k.to_integer().to_i128()).flatten();
    let found: Vec<CPoint> = (1..=hh)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut out = Vec::new();
            for a in numerators(hh, b) {
                // y = Y / b^2 turns the fiber into Y^3 + a^2 Y^2 + a^3 b^3 - k b^6
                let ys: Vec<Rational> = match int_k {
                    Some(k) => {
                        let (a, b) = (a as i128, b as i128);
                        let b3 = b * b * b;
                        let c0 = a * a * a * b3 - k * b3 * b3;
                        integer_roots_i128(&[c0, 0, a * a, 1])
                            .into_iter()
                            .map(|y| Rational::new(BigInt::from(y), BigInt::from(b * b)))
                            .collect()
                    }
                    None => {
                        let x = Rational::new(a.into(), b.into());
                        let fiber = Polynomial::new(vec![x.pow(3) - k, q(0), &x * &x, q(1)]);
                        rational_roots(&fiber).expect("monic fiber").into_iter().collect()
                    }
                };
                let x = Rational::new(a.into(), b.into());
                for y in ys {
                    out.push(CPoint::affine(&x, &y));
                }
            }
            out
        })
        .collect();
    let mut set: BTreeSet<CPoint> = found.into_iter().collect();
    set.insert(CPoint::infinity_x());
    set.insert(CPoint::infinity_y());
    debug_assert!(set.iter().all(|p| curve.contains(p)));
    Ok(set)
}

/// Affine points of `e` with x-coordinate of height at most `h`.
///
/// On an integral model every affine rational point has `x = m / d^2`, so only square
/// denominators are tried there.
pub fn search_e(e: &WeierstrassCurve, h: HeightBound) -> BTreeSet<EPoint> {
    let hh = h.get() as i64;
    let square_only = e.is_integral();
    let dens: Vec<i64> = (1..=hh)
        .filter(|&b| !square_only || (b as f64).sqrt().round().powi(2) as i64 == b)
        .collect();
    let found: Vec<EPoint> = dens
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut out = Vec::new();
            for a in numerators(hh, b) {
                let x = Rational::new(a.into(), b.into());
                let lin = &e.a1 * &x + &e.a3;
                let g = ((&x + &e.a2) * &x + &e.a4) * &x + &e.a6;
                let disc = &lin * &lin + q(4) * g;
                if let Some(s) = rational_sqrt(&disc) {
                    for y in [(&s - &lin) / q(2), (-&s - &lin) / q(2)] {
                        out.push(EPoint::affine(x.clone(), y));
                    }
                }
            }
            out
        })
        .collect();
    found.into_iter().collect()
}

/// A point `(x : y : z)` on `y^2 = F(x, z)` in weighted projective space with weights
/// `(1, 3, 1)`, normalized so `gcd(x, z) = 1` and `z > 0`, or `(1 : y : 0)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeightedPoint {
    pub x: i64,
    pub y: i128,
    pub z: i64,
}

impl fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.x, self.y, self.z)
    }
}

impl Serialize for WeightedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn isqrt_exact(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Points on `y^2 = f(x)` for `deg f <= 6`, `f` given lowest degree first, with
/// `x = a/b` of height at most `h`; points at infinity included.
pub fn search_sextic(f: &[i64], h: HeightBound) -> Result<BTreeSet<WeightedPoint>> {
    if f.len() > 7 || f.iter().all(|&c| c == 0) {
        return Err(Error::domain("expected a nonzero polynomial of degree at most 6"));
    }
    let mut c = [0i128; 7];
    for (i, &v) in f.iter().enumerate() {
        c[i] = v as i128;
    }
    let hh = h.get() as i64;
    let hom = move |a: i128, b: i128| -> Option<i128> {
        let mut acc: i128 = 0;
        let mut bp: i128 = 1;
        let mut terms = [0i128; 7];
        for i in (0..=6).rev() {
            terms[i] = bp;
            bp = bp.checked_mul(b)?;
        }
        let mut ap: i128 = 1;
        for (i, ci) in c.iter().enumerate() {
            acc = acc.checked_add(ci.checked_mul(ap)?.checked_mul(terms[i])?)?;
            if i < 6 {
                ap = ap.checked_mul(a)?;
            }
        }
        Some(acc)
    };
    let found: Vec<Result<Vec<WeightedPoint>>> = (1..=hh)
        .into_par_iter()
        .map(|b| {
            let mut out = Vec::new();
            for a in numerators(hh, b) {
                let v =
                    hom(a as i128, b as i128).ok_or_else(|| Error::SizeCap(format!("F({a}, {b}) overflows i128")))?;
                if let Some(s) = isqrt_exact(v) {
                    out.push(WeightedPoint { x: a, y: s, z: b });
                    if s != 0 {
                        out.push(WeightedPoint { x: a, y: -s, z: b });
                    }
                }
            }
            Ok(out)
        })
        .collect();
    let mut set = BTreeSet::new();
    for r in found {
        set.extend(r?);
    }
    if let Some(s) = isqrt_exact(c[6]) {
        set.insert(WeightedPoint { x: 1, y: s, z: 0 });
        set.insert(WeightedPoint { x: 1, y: -s, z: 0 });
    }
    Ok(set)
}
