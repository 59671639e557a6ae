use std::fmt;

use crate::algebra::{Field, Rational};
use crate::error::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over a field `F`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassCurve<F = Rational> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
}

/// A point on a Weierstrass curve. `Identity` is the point at infinity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EPoint<F = Rational> {
    Identity,
    Affine { x: F, y: F },
}

impl<F> EPoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        EPoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, EPoint::Identity)
    }

    pub fn coords(&self) -> Option<(&F, &F)> {
        match self {
            EPoint::Identity => None,
            EPoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl<F: fmt::Display> fmt::Display for EPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EPoint::Identity => write!(f, "(0 : 1 : 0)"),
            EPoint::Affine { x, y } => write!(f, "({x} : {y} : 1)"),
        }
    }
}

impl EPoint<Rational> {
    pub fn from_i64(x: i64, y: i64) -> Self {
        EPoint::affine(Rational::from_i64(x), Rational::from_i64(y))
    }
}

impl<F: Field> WeierstrassCurve<F> {
    /// Builds a curve, rejecting singular models.
    pub fn new(a1: F, a2: F, a3: F, a4: F, a6: F) -> Result<Self> {
        let e = Self::new_unchecked(a1, a2, a3, a4, a6);
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    pub(crate) fn new_unchecked(a1: F, a2: F, a3: F, a4: F, a6: F) -> Self {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// `y^2 = x^3 + a x + b`.
    pub fn short(a: F, b: F) -> Result<Self> {
        Self::new(F::zero(), F::zero(), F::zero(), a, b)
    }

    pub fn b2(&self) -> F {
        self.a1.clone() * self.a1.clone() + F::from_i64(4) * self.a2.clone()
    }

    pub fn b4(&self) -> F {
        F::from_i64(2) * self.a4.clone() + self.a1.clone() * self.a3.clone()
    }

    pub fn b6(&self) -> F {
        self.a3.clone() * self.a3.clone() + F::from_i64(4) * self.a6.clone()
    }

    pub fn b8(&self) -> F {
        let (a1, a2, a3, a4, a6) = self.coeffs();
        a1.clone() * a1.clone() * a6.clone() + F::from_i64(4) * a2.clone() * a6.clone()
            - a1.clone() * a3.clone() * a4.clone()
            + a2.clone() * a3.clone() * a3.clone()
            - a4.clone() * a4.clone()
    }

    pub fn c4(&self) -> F {
        let b2 = self.b2();
        b2.clone() * b2 - F::from_i64(24) * self.b4()
    }

    pub fn c6(&self) -> F {
        let (b2, b4, b6) = (self.b2(), self.b4(), self.b6());
        -(b2.clone() * b2.clone() * b2.clone()) + F::from_i64(36) * b2 * b4 - F::from_i64(216) * b6
    }

    pub fn discriminant(&self) -> F {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(b2.clone() * b2.clone() * b8)
            - F::from_i64(8) * b4.clone() * b4.clone() * b4.clone()
            - F::from_i64(27) * b6.clone() * b6.clone()
            + F::from_i64(9) * b2 * b4 * b6
    }

    /// `c4^3 / discriminant`.
    pub fn j_invariant(&self) -> Result<F> {
        let d = self.discriminant();
        if d.is_zero() {
            return Err(Error::SingularCurve);
        }
        let c4 = self.c4();
        Ok(c4.clone() * c4.clone() * c4 / d)
    }

    fn coeffs(&self) -> (&F, &F, &F, &F, &F) {
        (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6)
    }

    /// Left side minus right side of the equation at `(x, y)`.
    pub fn defect(&self, x: &F, y: &F) -> F {
        let (a1, a2, a3, a4, a6) = self.coeffs();
        let lhs = y.clone() * y.clone() + a1.clone() * x.clone() * y.clone() + a3.clone() * y.clone();
        let rhs = ((x.clone() + a2.clone()) * x.clone() + a4.clone()) * x.clone() + a6.clone();
        lhs - rhs
    }

    pub fn contains(&self, p: &EPoint<F>) -> bool {
        match p {
            EPoint::Identity => true,
            EPoint::Affine { x, y } => self.defect(x, y).is_zero(),
        }
    }

    fn check(&self, p: &EPoint<F>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::domain(format!("{p} is not on the curve")))
        }
    }

    pub fn neg(&self, p: &EPoint<F>) -> EPoint<F> {
        match p {
            EPoint::Identity => EPoint::Identity,
            EPoint::Affine { x, y } => {
                EPoint::affine(x.clone(), -y.clone() - self.a1.clone() * x.clone() - self.a3.clone())
            }
        }
    }

    /// Group sum; both points must lie on the curve.
    pub fn add(&self, p: &EPoint<F>, q: &EPoint<F>) -> Result<EPoint<F>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &EPoint<F>, q: &EPoint<F>) -> EPoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (EPoint::Identity, _) => return q.clone(),
            (_, EPoint::Identity) => return p.clone(),
            (EPoint::Affine { x: x1, y: y1 }, EPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (a1, a2, a3, a4, a6) = self.coeffs();
        let (lambda, nu) = if x1 == x2 {
            let den = y1.clone() + y2.clone() + a1.clone() * x2.clone() + a3.clone();
            if den.is_zero() {
                return EPoint::Identity;
            }
            let den = F::from_i64(2) * y1.clone() + a1.clone() * x1.clone() + a3.clone();
            let x1sq = x1.clone() * x1.clone();
            let lam = (F::from_i64(3) * x1sq.clone() + F::from_i64(2) * a2.clone() * x1.clone() + a4.clone()
                - a1.clone() * y1.clone())
                / den.clone();
            let nu = (-(x1sq * x1.clone()) + a4.clone() * x1.clone() + F::from_i64(2) * a6.clone()
                - a3.clone() * y1.clone())
                / den;
            (lam, nu)
        } else {
            let dx = x2.clone() - x1.clone();
            let lam = (y2.clone() - y1.clone()) / dx.clone();
            let nu = (y1.clone() * x2.clone() - y2.clone() * x1.clone()) / dx;
            (lam, nu)
        };
        let x3 = lambda.clone() * lambda.clone() + a1.clone() * lambda.clone() - a2.clone() - x1.clone() - x2.clone();
        let y3 = -(lambda + a1.clone()) * x3.clone() - nu - a3.clone();
        EPoint::affine(x3, y3)
    }

    /// `n * p` for any integer `n`.
    pub fn mul(&self, p: &EPoint<F>, n: i64) -> Result<EPoint<F>> {
        self.check(p)?;
        Ok(self.mul_unchecked(p, n))
    }

    pub(crate) fn mul_unchecked(&self, p: &EPoint<F>, n: i64) -> EPoint<F> {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = EPoint::Identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl<F: Field> fmt::Display for WeierstrassCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}
