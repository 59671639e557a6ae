//! Gcd bounds for values of coprime polynomials, box-bounded Thue solving and the
//! small enumeration systems behind the special values of `k`.
//!
//! Thue solutions here are complete only inside the search box `|u|, |v| <= B`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    cube_divisors, divisors, ext_gcd, integer_roots, integer_roots_i128, iroot_floor, isqrt, q, rational_roots,
    Polynomial, Rational,
};
use crate::error::{Error, Result};

/// Default search box for Thue equations.
pub const DEFAULT_THUE_BOX: i64 = 10_000;

/// Homogeneous binary form `sum c_i u^i v^(n - i)` of degree `n >= 3`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ThueForm {
    #[serde(serialize_with = "crate::serde_util::display_seq")]
    coeffs: Vec<BigInt>,
}

impl ThueForm {
    /// `coeffs[i]` multiplies `u^i v^(n - i)`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 4 {
            return Err(Error::domain("a Thue form needs degree at least 3"));
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::domain("the zero form"));
        }
        Ok(ThueForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * u.pow(i as u32) * v.pow((n - i) as u32))
            .sum()
    }

    /// `F(u, v) = F(-u, -v)`, true for every even-degree form.
    pub fn is_even(&self) -> bool {
        self.degree().is_multiple_of(2)
    }

    /// `F(u, 1)` as a polynomial.
    pub fn dehomogenize(&self) -> Polynomial<Rational> {
        Polynomial::new(self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }
}

/// Every `(u, v)` with `F(u, v) = m` and `|u|, |v| <= bound`.
pub fn thue_bounded(form: &ThueForm, m: &BigInt, bound: i64) -> BTreeSet<(i64, i64)> {
    let bound = bound.max(0);
    let n = form.degree();
    let small: Option<Vec<i128>> = form.coeffs.iter().map(|c| c.to_i128()).collect();
    let m_small = m.to_i128();
    let found: Vec<(i64, i64)> = (-bound..=bound)
        .into_par_iter()
        .flat_map_iter(|v| {
            let vb = BigInt::from(v);
            let mut p: Vec<BigInt> = form
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * vb.pow((n - i) as u32))
                .collect();
            p[0] -= m;
            let us: Vec<i64> = if p.iter().all(|c| c.is_zero()) {
                (-bound..=bound).collect()
            } else {
                let fits = small.is_some() && m_small.is_some() && p.iter().all(|c| c.bits() < 100);
                let roots: Vec<BigInt> = if fits {
                    let p: Vec<i128> = p.iter().map(|c| c.to_i128().unwrap()).collect();
                    integer_roots_i128(&p).into_iter().map(BigInt::from).collect()
                } else {
                    let (lo, hi) = (BigInt::from(-bound), BigInt::from(bound));
                    integer_roots(&p, Some((&lo, &hi)))
                };
                roots
                    .into_iter()
                    .filter_map(|u| u.to_i64())
                    .filter(|u| u.abs() <= bound)
                    .collect()
            };
            us.into_iter().map(move |u| (u, v))
        })
        .collect();
    found.into_iter().collect()
}

/// Data for the bound `gcd(n^d phi(m/n), n^d psi(m/n)) | R` for coprime `m, n`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct GcdBoundCertificate {
    #[serde(serialize_with = "crate::serde_util::display")]
    pub f: Polynomial<Rational>,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub g: Polynomial<Rational>,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub a0: BigInt,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub r: BigInt,
}

impl GcdBoundCertificate {
    /// Checks `F phi + G psi = 1` exactly.
    pub fn verify(&self, phi: &Polynomial<Rational>, psi: &Polynomial<Rational>) -> bool {
        &(&self.f * phi) + &(&self.g * psi) == Polynomial::one()
    }
}

/// Gcd bound for integer polynomials `phi`, `psi` without common complex roots.
///
/// Finds `F`, `G` with `F phi + G psi = 1`, `A` the lcm of their coefficient
/// denominators and `R = A a0^(deg phi + deg psi)` with `a0` the leading coefficient of `phi`.
pub fn gcd_bound(phi: &Polynomial<Rational>, psi: &Polynomial<Rational>) -> Result<GcdBoundCertificate> {
    let integral = |p: &Polynomial<Rational>| p.coeffs().iter().all(|c| c.is_integer());
    if !integral(phi) || !integral(psi) {
        return Err(Error::domain("gcd_bound expects integer coefficients"));
    }
    let (f, g, d) = ext_gcd(phi, psi)?;
    if d != Polynomial::one() {
        return Err(Error::domain(format!("phi and psi share the factor {d}")));
    }
    let a = f
        .coeffs()
        .iter()
        .chain(g.coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let a0 = phi.leading().expect("phi is nonzero").to_integer();
    let e = (phi.degree().unwrap_or(0) + psi.degree().unwrap_or(0)) as u32;
    let r = &a * a0.abs().pow(e);
    Ok(GcdBoundCertificate { f, g, a, a0, r })
}

/// `n^d p(m/n)` for `d >= deg p`.
pub fn homogenize_at(p: &Polynomial<Rational>, d: usize, m: &BigInt, n: &BigInt) -> BigInt {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.to_integer() * m.pow(i as u32) * n.pow((d - i) as u32))
        .sum()
}

/// `gcd(n^d phi(m/n), n^d psi(m/n))` with `d = max(deg phi, deg psi)`.
pub fn value_gcd(phi: &Polynomial<Rational>, psi: &Polynomial<Rational>, m: &BigInt, n: &BigInt) -> BigInt {
    let d = phi.degree().unwrap_or(0).max(psi.degree().unwrap_or(0));
    homogenize_at(phi, d, m, n).gcd(&homogenize_at(psi, d, m, n))
}

/// One solution of `(u + v)^3 = d1`, `u - 3v = d / d1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Case3Solution {
    pub d: i64,
    pub d1: i64,
    pub u: i64,
    pub v: i64,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub k: Rational,
}

/// `u^3 (-2u - 3v) / ((u + v)^3 (u - 3v))`, undefined when the denominator vanishes.
pub fn case3_k(u: i64, v: i64) -> Option<Rational> {
    let (u, v) = (BigInt::from(u), BigInt::from(v));
    let den = (&u + &v).pow(3) * (&u - BigInt::from(3) * &v);
    if den.is_zero() {
        return None;
    }
    let num = u.pow(3) * (BigInt::from(-2) * &u - BigInt::from(3) * &v);
    Some(Rational::new(num, den))
}

/// All integer solutions of the divisor systems for `(u+v)^3 (u-3v) = d`, `d | bound`,
/// over both signs of `d` and of the cube factor.
pub fn case3_divisor_solve(bound: i64) -> Result<Vec<Case3Solution>> {
    let mut out = BTreeSet::new();
    for d in divisors(&BigInt::from(bound))? {
        let d = d.to_i64().expect("divisor of an i64");
        for d in [d, -d] {
            for c in cube_divisors(&BigInt::from(d))? {
                let c = c.to_i64().expect("divisor of an i64");
                let w0 = iroot_floor(&BigInt::from(c), 3).to_i64().unwrap();
                for (d1, w) in [(c, w0), (-c, -w0)] {
                    let e = d / d1;
                    // u + v = w, u - 3v = e
                    if (w - e) % 4 != 0 {
                        continue;
                    }
                    let v = (w - e) / 4;
                    let u = w - v;
                    if let Some(k) = case3_k(u, v) {
                        out.insert(Case3Solution { d, d1, u, v, k });
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `(a, b)` with `a^2 - 3b^2 = c` and `|a|, |b| <= bound`.
pub fn pell_bounded(c: i64, bound: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for b in -bound..=bound {
        let t = c as i128 + 3 * (b as i128) * (b as i128);
        if t < 0 {
            continue;
        }
        let r = isqrt(&BigInt::from(t)).to_i64().unwrap();
        if (r as i128) * (r as i128) == t && r <= bound {
            out.insert((r, b));
            out.insert((-r, b));
        }
    }
    out
}

/// Rational roots of `16k^2 + 27k - m`.
pub fn k_from_16k2_27k(m: &BigInt) -> BTreeSet<Rational> {
    let p = Polynomial::new(vec![-Rational::from_integer(m.clone()), q(27), q(16)]);
    rational_roots(&p).expect("nonzero quadratic")
}
