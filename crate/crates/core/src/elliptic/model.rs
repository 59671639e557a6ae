use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{EPoint, WeierstrassCurve};
use crate::algebra::{factor, q, Rational};
use crate::error::{Error, Result};

/// Small primes tried when shrinking an already integral short model.
const MINIMIZE_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// `y^2 = x^3 + a x + b` with integer `a`, `b`, isomorphic to a given curve `E`.
///
/// A point `(x, y)` of `E` maps to `(u^2 (x + r), u^3 (y + (a1 x + a3) / 2))`
/// with `r = b2 / 12`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralModel {
    pub a: BigInt,
    pub b: BigInt,
    pub u: Rational,
    source: WeierstrassCurve,
}

impl IntegralModel {
    pub fn curve(&self) -> WeierstrassCurve {
        WeierstrassCurve::new_unchecked(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::from_integer(self.a.clone()),
            Rational::from_integer(self.b.clone()),
        )
    }

    pub fn forward(&self, p: &EPoint) -> EPoint {
        let Some((x, y)) = p.coords() else {
            return EPoint::Identity;
        };
        let e = &self.source;
        let u2 = &self.u * &self.u;
        let u3 = &u2 * &self.u;
        let r = e.b2() / q(12);
        let s = (&e.a1 * x + &e.a3) / q(2);
        EPoint::affine(u2 * (x + r), u3 * (y + s))
    }

    pub fn backward(&self, p: &EPoint) -> EPoint {
        let Some((x, y)) = p.coords() else {
            return EPoint::Identity;
        };
        let e = &self.source;
        let u2 = &self.u * &self.u;
        let u3 = &u2 * &self.u;
        let x0 = x / u2 - e.b2() / q(12);
        let s = (&e.a1 * &x0 + &e.a3) / q(2);
        let y0 = y / u3 - s;
        EPoint::affine(x0, y0)
    }

    /// `4a^3 + 27b^2`.
    pub fn nl_discriminant(&self) -> BigInt {
        BigInt::from(4) * self.a.pow(3) + BigInt::from(27) * self.b.pow(2)
    }
}

impl WeierstrassCurve {
    /// `(A, B)` with `y^2 = x^3 + A x + B`, `A = -c4/48`, `B = -c6/864`.
    pub fn short_coefficients(&self) -> (Rational, Rational) {
        (-self.c4() / q(48), -self.c6() / q(864))
    }

    /// The short model reached by `(x, y) -> (x + b2/12, y + (a1 x + a3)/2)`.
    pub fn short_model(&self) -> WeierstrassCurve {
        let (a, b) = self.short_coefficients();
        WeierstrassCurve::new_unchecked(Rational::zero(), Rational::zero(), Rational::zero(), a, b)
    }

    /// Short model with integer coefficients, made small by removing `p^4 | A`, `p^6 | B`.
    pub fn short_integral_model(&self) -> Result<IntegralModel> {
        let (a, b) = self.short_coefficients();
        let d = a.denom().lcm(b.denom());
        let mut u = Rational::from_integer(d.clone());
        let mut primes: Vec<u64> = if d.is_one() {
            Vec::new()
        } else {
            factor(&d)?.into_iter().map(|(p, _)| p).collect()
        };
        primes.extend(
            MINIMIZE_PRIMES
                .iter()
                .filter(|p| !primes.contains(p))
                .collect::<Vec<_>>(),
        );
        let integral = |u: &Rational| {
            let u2 = u * u;
            let sa = &a * &u2 * &u2;
            let sb = &b * &u2 * &u2 * &u2;
            (sa.is_integer() && sb.is_integer()).then(|| (sa.to_integer(), sb.to_integer()))
        };
        let (mut sa, mut sb) = integral(&u).expect("lcm of denominators clears both");
        for p in primes {
            let pq = Rational::from_integer(BigInt::from(p));
            loop {
                let trial = &u / &pq;
                match integral(&trial) {
                    Some((ta, tb)) if !(ta.is_zero() && tb.is_zero()) => {
                        u = trial;
                        sa = ta;
                        sb = tb;
                    }
                    _ => break,
                }
            }
        }
        let model = IntegralModel {
            a: sa,
            b: sb,
            u,
            source: self.clone(),
        };
        if model.nl_discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(model)
    }

    /// `y^2 = x^3 + A D^2 x + B D^3` for the short model `(A, B)`.
    pub fn quadratic_twist(&self, d: &Rational) -> Result<WeierstrassCurve> {
        if d.is_zero() {
            return Err(Error::domain("quadratic twist by 0"));
        }
        let (a, b) = self.short_coefficients();
        WeierstrassCurve::short(a * d * d, b * d * d * d)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
            .iter()
            .all(|c| c.is_integer())
    }

    /// Sign-insensitive check used by tests: same model up to `u`-scaling.
    pub fn is_isomorphic_short(&self, other: &WeierstrassCurve) -> bool {
        let (a1, b1) = self.short_coefficients();
        let (a2, b2) = other.short_coefficients();
        // a2 = u^4 a1, b2 = u^6 b1 for some rational u
        if a1.is_zero() != a2.is_zero() || b1.is_zero() != b2.is_zero() {
            return false;
        }
        match (a1.is_zero(), b1.is_zero()) {
            (true, _) => crate::algebra::rational_sqrt(&(&b2 / &b1))
                .and_then(|s| rational_cbrt(&s))
                .is_some(),
            (_, true) => crate::algebra::rational_sqrt(&(&a2 / &a1))
                .and_then(|s| crate::algebra::rational_sqrt(&s))
                .is_some(),
            _ => {
                // u^2 = (b2 a1) / (b1 a2)
                let u2 = (&b2 * &a1) / (&b1 * &a2);
                !u2.is_negative() && crate::algebra::rational_sqrt(&u2).is_some() && &u2 * &u2 * &a1 == a2
            }
        }
    }
}

fn rational_cbrt(x: &Rational) -> Option<Rational> {
    let c = |n: &BigInt| {
        let r = n.cbrt();
        (&r * &r * &r == *n).then_some(r)
    };
    Some(Rational::new(c(x.numer())?, c(x.denom())?))
}
