//! Point counts over prime fields: the trace identity
//! `#C_k(F_p) = p + 1 - a1 - a2 - a3` and fiber sizes of the three maps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{is_prime, q};
use crate::error::{Error, Result};
use crate::family::{CurveIndex, QuarticCurve};

/// Largest prime accepted; counting is `O(p^2)`.
pub const MAX_PRIME: u64 = 20_000;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceReport {
    pub k: i64,
    pub p: u64,
    pub count_c: u64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub identity_holds: bool,
}

impl TraceReport {
    pub fn traces(&self) -> [i64; 3] {
        [self.a1, self.a2, self.a3]
    }

    /// `a^2 <= 4p` for each trace.
    pub fn hasse_holds(&self) -> bool {
        self.traces().iter().all(|a| (a * a) as u64 <= 4 * self.p)
    }
}

#[derive(Clone, Copy, Debug)]
struct Fp {
    p: u64,
}

impl Fp {
    fn red(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
    /// Legendre symbol.
    fn chi(&self, a: u64) -> i64 {
        if a == 0 {
            0
        } else if self.pow(a, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }
}

/// Reduction data for `C_k` at `p`, after the good-reduction checks.
struct Reduction {
    f: Fp,
    k: u64,
    /// `(a1, a2, a4, a6)` of `E1`, `E2`, `E3`, reduced (all have `a3 = 0`).
    coeffs: [[u64; 4]; 3],
}

fn reduce(k: i64, p: u64) -> Result<Reduction> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p > MAX_PRIME {
        return Err(Error::domain(format!("p = {p} exceeds the counting limit {MAX_PRIME}")));
    }
    let bad = |what: String| Error::BadReduction { p, what };
    if 6 % p == 0 {
        return Err(bad("6".into()));
    }
    let c = QuarticCurve::from_int(k)?;
    let pb = BigInt::from(p);
    for i in CurveIndex::ALL {
        let d = c.elliptic(i).discriminant();
        if d.numer().is_multiple_of(&pb) {
            return Err(bad(format!("the discriminant {} of {i}", d.numer())));
        }
    }
    let f = Fp { p };
    let kk = f.red(k);
    let coeffs = [
        [3, 0, 0, kk],
        [0, f.mul(4, kk), 0, f.mul(16, f.mul(kk, kk))],
        [0, f.red(-27), 0, f.mul(f.red(-1728), kk)],
    ];
    let r = Reduction { f, k: kk, coeffs };
    if let Some((x, y, z)) = r.singular_point() {
        return Err(bad(format!("C_{k} (singular at ({x}:{y}:{z}) mod {p})")));
    }
    debug_assert!(c.k() == &q(k));
    Ok(r)
}

impl Reduction {
    fn on_c(&self, x: u64, y: u64) -> bool {
        let f = self.f;
        let lhs = f.add(f.add(f.pow(x, 3), f.mul(f.mul(x, x), f.mul(y, y))), f.pow(y, 3));
        lhs == self.k
    }

    /// A singular `F_p`-point of `C_k`, if any. The points at infinity are always smooth.
    fn singular_point(&self) -> Option<(u64, u64, u64)> {
        let f = self.f;
        (0..f.p).find_map(|x| {
            (0..f.p).find_map(|y| {
                let fx = f.add(f.mul(3, f.mul(x, x)), f.mul(2, f.mul(x, f.mul(y, y))));
                let fy = f.add(f.mul(3, f.mul(y, y)), f.mul(2, f.mul(y, f.mul(x, x))));
                (fx == 0 && fy == 0 && self.on_c(x, y)).then_some((x, y, 1))
            })
        })
    }

    fn count_c(&self) -> u64 {
        let p = self.f.p;
        let affine: u64 = (0..p)
            .into_par_iter()
            .map(|x| (0..p).filter(|&y| self.on_c(x, y)).count() as u64)
            .sum();
        affine + 2
    }

    fn count_e(&self, i: CurveIndex) -> u64 {
        let f = self.f;
        let [a1, a2, a4, a6] = self.coeffs[i.number() as usize - 1];
        let affine: i64 = (0..f.p)
            .into_par_iter()
            .map(|x| {
                // y^2 + a1 x y = g(x) has 1 + chi((a1 x)^2 + 4 g(x)) solutions
                let g = f.add(f.add(f.pow(x, 3), f.mul(a2, f.mul(x, x))), f.add(f.mul(a4, x), a6));
                let ax = f.mul(a1, x);
                1 + f.chi(f.add(f.mul(ax, ax), f.mul(4, g)))
            })
            .sum();
        affine as u64 + 1
    }

    /// `phi_i` on an affine point of `C_k(F_p)`; `None` is the identity.
    fn phi(&self, i: CurveIndex, x: u64, y: u64) -> Option<(u64, u64)> {
        let f = self.f;
        let e = |c: i64, a: u64, b: u64, xe: u64, ye: u64| f.mul(f.red(c), f.mul(f.pow(a, xe), f.pow(b, ye)));
        match i {
            CurveIndex::E1 => Some((f.sub(0, f.add(x, y)), f.mul(x, y))),
            CurveIndex::E2 => {
                let xx = f.add(e(-4, x, y, 3, 0), e(-4, x, y, 1, 1));
                let yy = [
                    e(-8, x, y, 4, 1),
                    e(16, x, y, 3, 0),
                    e(8, x, y, 0, 3),
                    f.mul(f.red(-12), self.k),
                ]
                .into_iter()
                .fold(0, |a, b| f.add(a, b));
                Some((xx, yy))
            }
            CurveIndex::E3 => {
                let d = f.sub(x, y);
                if d == 0 {
                    return None;
                }
                let sum = |t: &[(i64, u32, u32)]| {
                    t.iter()
                        .fold(0, |a, &(c, i, j)| f.add(a, e(c, x, y, i as u64, j as u64)))
                };
                let nx = sum(&[
                    (16, 2, 2),
                    (12, 3, 0),
                    (12, 2, 1),
                    (12, 1, 2),
                    (12, 0, 3),
                    (36, 2, 0),
                    (-36, 1, 1),
                    (36, 0, 2),
                ]);
                let ny = sum(&[
                    (72, 4, 1),
                    (108, 4, 0),
                    (64, 3, 3),
                    (72, 3, 2),
                    (108, 3, 0),
                    (72, 2, 3),
                    (216, 2, 2),
                    (72, 1, 4),
                    (108, 0, 4),
                    (108, 0, 3),
                ]);
                let di = f.inv(d);
                Some((f.mul(nx, f.pow(di, 2)), f.mul(ny, f.pow(di, 3))))
            }
        }
    }

    fn on_e(&self, i: CurveIndex, (x, y): (u64, u64)) -> bool {
        let f = self.f;
        let [a1, a2, a4, a6] = self.coeffs[i.number() as usize - 1];
        let lhs = f.add(f.mul(y, y), f.mul(a1, f.mul(x, y)));
        let rhs = f.add(f.add(f.pow(x, 3), f.mul(a2, f.mul(x, x))), f.add(f.mul(a4, x), a6));
        lhs == rhs
    }
}

/// Counts `C_k` and `E_{1,k}`, `E_{2,k}`, `E_{3,k}` over `F_p` and checks the trace identity.
pub fn count_curve_points(k: i64, p: u64) -> Result<TraceReport> {
    let r = reduce(k, p)?;
    let count_c = r.count_c();
    let [a1, a2, a3] = CurveIndex::ALL.map(|i| p as i64 + 1 - r.count_e(i) as i64);
    Ok(TraceReport {
        k,
        p,
        count_c,
        a1,
        a2,
        a3,
        identity_holds: count_c as i64 == p as i64 + 1 - a1 - a2 - a3,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FiberStats {
    pub i: CurveIndex,
    pub k: i64,
    pub p: u64,
    pub degree: usize,
    /// Fiber size to the number of image points with that many `F_p`-preimages.
    pub histogram: BTreeMap<usize, usize>,
    pub max_fiber: usize,
}

/// Sizes of the fibers of `phi_i : C_k(F_p) -> E_{i,k}(F_p)` over its image.
pub fn fiber_stats(i: CurveIndex, k: i64, p: u64) -> Result<FiberStats> {
    let r = reduce(k, p)?;
    let mut fibers: BTreeMap<Option<(u64, u64)>, usize> = BTreeMap::new();
    // (1:0:0) and (0:1:0) both go to the identity
    *fibers.entry(None).or_default() += 2;
    for x in 0..p {
        for y in 0..p {
            if r.on_c(x, y) {
                let img = r.phi(i, x, y);
                if let Some(pt) = img {
                    if !r.on_e(i, pt) {
                        return Err(Error::Integrity(format!(
                            "phi_{} image {pt:?} is off {i} mod {p}",
                            i.number()
                        )));
                    }
                }
                *fibers.entry(img).or_default() += 1;
            }
        }
    }
    let mut histogram = BTreeMap::new();
    for n in fibers.values() {
        *histogram.entry(*n).or_default() += 1;
    }
    Ok(FiberStats {
        i,
        k,
        p,
        degree: i.map_degree(),
        max_fiber: fibers.values().copied().max().unwrap_or(0),
        histogram,
    })
}
