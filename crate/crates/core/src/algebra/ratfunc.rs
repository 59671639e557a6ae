use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Field, Polynomial, Rational};
use crate::error::{Error, Result};

/// Element of `Q(t)`: a reduced quotient with monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalFunction {
    num: Polynomial<Rational>,
    den: Polynomial<Rational>,
}

impl RationalFunction {
    pub fn new(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero").clone();
        let inv = Rational::from_integer(1.into()) / lc;
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Polynomial<Rational>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<Rational> {
        &self.den
    }

    /// Value at `t`; errors at a pole.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        let d = self.den.eval(t);
        if Field::is_zero(&d) {
            return Err(Error::domain(format!("t = {t} is a pole of {self}")));
        }
        Ok(self.num.eval(t) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den);
        }
        Self::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RationalFunction {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by the zero rational function");
        Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(Polynomial::from_i64(&[n]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qq};

    type P = Polynomial<Rational>;

    #[test]
    fn normalizes_to_lowest_terms_with_monic_denominator() {
        // (2t^2 - 2) / (4t - 4) = (t + 1) / 2
        let r = RationalFunction::new(P::from_i64(&[-2, 0, 2]), P::from_i64(&[-4, 4])).unwrap();
        assert_eq!(r.denominator(), &P::one());
        assert_eq!(r.numerator(), &P::new(vec![qq(1, 2), qq(1, 2)]));
    }

    #[test]
    fn arithmetic_round_trip() {
        let t = RationalFunction::t();
        let a = RationalFunction::one() / (t.clone() - RationalFunction::from_i64(3));
        let b = a.clone() * (t.clone() - RationalFunction::from_i64(3));
        assert_eq!(b, RationalFunction::one());
        assert_eq!(a.eval(&q(5)).unwrap(), qq(1, 2));
        assert!(a.eval(&q(3)).is_err());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(P::one(), P::zero()).is_err());
    }
}
