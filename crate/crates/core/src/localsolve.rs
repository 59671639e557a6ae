//! Solubility of `c y^e = f(t)` over `Q_p` for `e` in `{2, 4}`.
//!
//! Residue classes `t0 + p^n Z_p` are refined one digit at a time. A class is settled
//! when `f` is constant up to a factor `1 + p^r Z_p` on it (`r = 1` for odd `p`, `3` or
//! `4` for `p = 2`), or when Hensel's lemma gives a root of `f` inside it. Points with
//! `t` outside `Z_p` are handled on the patch `t = 1/u`, `u` in `p Z_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{is_prime, Polynomial, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_DEPTH_CAP: u32 = 40;

/// `c y^e = f(t)` with integer `c` and integer coefficients `f`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuperellipticModel {
    #[serde(serialize_with = "crate::serde_util::display")]
    c: BigInt,
    e: u32,
    #[serde(serialize_with = "crate::serde_util::display_seq")]
    f: Vec<BigInt>,
}

impl SuperellipticModel {
    pub fn new(c: BigInt, e: u32, mut f: Vec<BigInt>) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::domain("c must be nonzero"));
        }
        if e != 2 && e != 4 {
            return Err(Error::domain(format!("exponent {e} not in {{2, 4}}")));
        }
        while f.last().is_some_and(|x| x.is_zero()) {
            f.pop();
        }
        if f.is_empty() {
            return Err(Error::domain("f must be nonzero"));
        }
        Ok(SuperellipticModel { c, e, f })
    }

    pub fn from_i64(c: i64, e: u32, f: &[i64]) -> Result<Self> {
        Self::new(c.into(), e, f.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_polynomial(c: BigInt, e: u32, f: &Polynomial<Rational>) -> Result<Self> {
        if f.coeffs().iter().any(|x| !x.is_integer()) {
            return Err(Error::domain("f must have integer coefficients"));
        }
        Self::new(c, e, f.coeffs().iter().map(|x| x.to_integer()).collect())
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn f(&self) -> &[BigInt] {
        &self.f
    }

    /// `u^D f(1/u)` with `D` the least multiple of `e` that is at least `deg f`.
    fn at_infinity(&self) -> Vec<BigInt> {
        let deg = self.f.len() - 1;
        let e = self.e as usize;
        let d = deg.div_ceil(e) * e;
        let mut g = vec![BigInt::zero(); d + 1];
        for (i, c) in self.f.iter().enumerate() {
            g[d - i] = c.clone();
        }
        g
    }
}

impl fmt::Display for SuperellipticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Polynomial::new(self.f.iter().map(|c| Rational::from_integer(c.clone())).collect());
        write!(f, "{} y^{} = {}", self.c, self.e, p)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum LocalStatus {
    Soluble,
    Insoluble,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Patch {
    /// `t` in `Z_p`.
    Affine,
    /// `t = 1/u`, `y = w / u^(D/e)`, coordinates `(u, w)`.
    Infinity,
}

/// For every `t' = t (mod modulus)` on the given patch, `v_p(c y^e - f(t')) >= precision`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct LocalWitness {
    pub patch: Patch,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub t: BigInt,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub modulus: BigInt,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub y: Rational,
    pub precision: u32,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct LocalVerdict {
    pub p: u64,
    pub status: LocalStatus,
    pub witness: Option<LocalWitness>,
    pub depth_used: u32,
}

fn valuation(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// Coefficients of `f(t0 + m s)` in `s`.
fn shift(f: &[BigInt], t0: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = Vec::with_capacity(f.len());
    for c in f.iter().rev() {
        // acc <- acc * (t0 + m s) + c
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] += a * t0;
            next[i + 1] += a * m;
        }
        next[0] += c;
        acc = next;
    }
    acc
}

fn eval(f: &[BigInt], t: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
}

enum Branch {
    Soluble(LocalWitness),
    Insoluble,
    Unknown,
}

struct Search {
    p: BigInt,
    pu: u64,
    vc: u32,
    cu: BigInt,
    e: u32,
    r: u32,
    cap: u32,
    depth_used: u32,
}

impl Search {
    /// Smallest `y0` in `[1, p^r)` with `y0^e = unit (mod p^r)`, if any.
    fn unit_root(&self, unit: &BigInt) -> Option<BigInt> {
        let pr = self.p.pow(self.r);
        let target = unit.mod_floor(&pr);
        let limit = pr.to_u64().unwrap_or(u64::MAX);
        (1..limit)
            .map(BigInt::from)
            .filter(|y| !(y % &self.p).is_zero())
            .find(|y| y.modpow(&BigInt::from(self.e), &pr) == target)
    }

    fn is_unit_power(&self, unit: &BigInt) -> bool {
        if self.pu == 2 {
            let m = BigInt::from(if self.e == 2 { 8 } else { 16 });
            return unit.mod_floor(&m).is_one();
        }
        let g = (self.e as u64).gcd(&(self.pu - 1));
        let exp = BigInt::from((self.pu - 1) / g);
        unit.mod_floor(&self.p).modpow(&exp, &self.p).is_one()
    }

    fn explore(&mut self, f: &[BigInt], patch: Patch, t0: BigInt, n: u32) -> Branch {
        self.depth_used = self.depth_used.max(n);
        let m = self.p.pow(n);
        let h = shift(f, &t0, &m);
        let witness = |y: Rational, precision: u32| LocalWitness {
            patch,
            t: t0.clone(),
            modulus: m.clone(),
            y,
            precision,
        };
        let vals: Vec<Option<u32>> = h.iter().map(|c| valuation(c, &self.p)).collect();
        let Some(v0) = vals[0] else {
            return Branch::Soluble(witness(
                Rational::zero(),
                vals.iter().flatten().copied().min().unwrap_or(0),
            ));
        };
        if let Some(v1) = vals.get(1).copied().flatten() {
            if v0 > 2 * v1 {
                let min_v = vals.iter().flatten().copied().min().unwrap_or(0);
                return Branch::Soluble(witness(Rational::zero(), min_v));
            }
        }
        let settled = vals[1..].iter().all(|v| v.is_none_or(|v| v >= v0 + self.r));
        if settled {
            let diff = v0 as i64 - self.vc as i64;
            if diff.rem_euclid(self.e as i64) != 0 {
                return Branch::Insoluble;
            }
            let h0u = &h[0] / self.p.pow(v0);
            // unit part of h0 / c, as an integer modulo p^r
            let pr = self.p.pow(self.r);
            let cinv = self.cu.modinv(&pr).expect("unit");
            let ratio = (h0u * cinv).mod_floor(&pr);
            if !self.is_unit_power(&ratio) {
                return Branch::Insoluble;
            }
            let y0 = self.unit_root(&ratio).expect("e-th power residue has a root");
            let j = diff / self.e as i64;
            let scale = if j >= 0 {
                Rational::from_integer(self.p.pow(j as u32))
            } else {
                Rational::new(BigInt::one(), self.p.pow((-j) as u32))
            };
            return Branch::Soluble(witness(scale * Rational::from_integer(y0), v0 + self.r));
        }
        if n >= self.cap {
            return Branch::Unknown;
        }
        let mut unknown = false;
        for s in 0..self.pu {
            let t = &t0 + &m * BigInt::from(s);
            match self.explore(f, patch, t, n + 1) {
                Branch::Soluble(w) => return Branch::Soluble(w),
                Branch::Unknown => unknown = true,
                Branch::Insoluble => {}
            }
        }
        if unknown {
            Branch::Unknown
        } else {
            Branch::Insoluble
        }
    }
}

/// Decides whether `c y^e = f(t)` has a point over `Q_p`, refining residues to `depth_cap` digits.
pub fn qp_soluble(model: &SuperellipticModel, p: u64, depth_cap: u32) -> Result<LocalVerdict> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if depth_cap == 0 {
        return Err(Error::domain("depth cap must be positive"));
    }
    let pb = BigInt::from(p);
    let vc = valuation(&model.c, &pb).expect("c is nonzero");
    let cu = &model.c / pb.pow(vc);
    let r = match (p, model.e) {
        (2, 2) => 3,
        (2, _) => 4,
        _ => 1,
    };
    let mut search = Search {
        p: pb.clone(),
        pu: p,
        vc,
        cu,
        e: model.e,
        r,
        cap: depth_cap,
        depth_used: 0,
    };
    let mut unknown = false;
    let patches = [
        (model.f.clone(), Patch::Affine, 0u32),
        (model.at_infinity(), Patch::Infinity, 1u32),
    ];
    for (f, patch, start) in patches {
        match search.explore(&f, patch, BigInt::zero(), start) {
            Branch::Soluble(w) => {
                return Ok(LocalVerdict {
                    p,
                    status: LocalStatus::Soluble,
                    witness: Some(w),
                    depth_used: search.depth_used,
                })
            }
            Branch::Unknown => unknown = true,
            Branch::Insoluble => {}
        }
    }
    Ok(LocalVerdict {
        p,
        status: if unknown {
            LocalStatus::Unknown
        } else {
            LocalStatus::Insoluble
        },
        witness: None,
        depth_used: search.depth_used,
    })
}

/// Checks the witness congruence at the lift `t + modulus * s`.
pub fn witness_holds(model: &SuperellipticModel, p: u64, w: &LocalWitness, s: &BigInt) -> bool {
    let f = match w.patch {
        Patch::Affine => model.f.clone(),
        Patch::Infinity => model.at_infinity(),
    };
    let t = &w.t + &w.modulus * s;
    let lhs = Rational::from_integer(model.c.clone()) * num_traits::Pow::pow(&w.y, model.e);
    let diff = lhs - Rational::from_integer(eval(&f, &t));
    if diff.is_zero() {
        return true;
    }
    let pb = BigInt::from(p);
    let vn = valuation(diff.numer(), &pb).unwrap_or(0) as i64;
    let vd = valuation(diff.denom(), &pb).unwrap_or(0) as i64;
    vn - vd >= w.precision as i64
}
