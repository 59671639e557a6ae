use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales to a monic polynomial; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = F::one() / l.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d
            .leading()
            .ok_or_else(|| Error::domain("polynomial division by zero"))?
            .clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() / dl.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::domain("inexact polynomial division"))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Extended Euclid: returns `(F, G, d)` with `F f + G g = d`, `d = gcd(f, g)` monic.
///
/// When both inputs are nonzero, `deg F < deg g - deg d` and `deg G < deg f - deg d`.
pub fn ext_gcd<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<(Polynomial<F>, Polynomial<F>, Polynomial<F>)> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::domain("ext_gcd of two zero polynomials"));
    }
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
    let (mut t0, mut t1) = (Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lc = r0.leading().expect("nonzero gcd").clone();
    let inv = F::one() / lc;
    Ok((s0.scale(&inv), t0.scale(&inv), r0.scale(&inv)))
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial<Rational> {
    /// Integer polynomial with the same roots: denominators cleared, content removed,
    /// positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<num_bigint::BigInt> {
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        let mut l = num_bigint::BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let mut ints: Vec<_> = self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut g = num_bigint::BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            if ints.last().is_some_and(|c| c.is_negative()) {
                g = -g;
            }
            for c in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        ints
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qq, Fp};

    type P = Polynomial<Rational>;

    #[test]
    fn ext_gcd_linear_pair() {
        let f = P::from_i64(&[-1, 1]);
        let g = P::from_i64(&[1, 1]);
        let (a, b, d) = ext_gcd(&f, &g).unwrap();
        assert_eq!(d, P::one());
        assert_eq!(a, P::constant(qq(-1, 2)));
        assert_eq!(b, P::constant(qq(1, 2)));
    }

    #[test]
    fn ext_gcd_identity_case() {
        let f = P::from_i64(&[2, 0, 4]);
        let (a, b, d) = ext_gcd(&f, &f).unwrap();
        assert_eq!(d, f.monic());
        assert_eq!(&(&a * &f) + &(&b * &f), d);
    }

    #[test]
    fn ext_gcd_case3_pair_is_coprime() {
        // phi = (x+1)^3 (x-3), psi = -2x^4 - 3x^3
        let phi = &P::from_i64(&[1, 1]).pow(3) * &P::from_i64(&[-3, 1]);
        let psi = P::from_i64(&[0, 0, 0, -3, -2]);
        let (a, b, d) = ext_gcd(&phi, &psi).unwrap();
        assert_eq!(d, P::one());
        assert_eq!(&(&a * &phi) + &(&b * &psi), P::one());
    }

    #[test]
    fn ext_gcd_zero_zero_is_error() {
        assert!(ext_gcd(&P::zero(), &P::zero()).is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = &P::from_i64(&[-1, 1]) * &P::from_i64(&[2, 1]);
        let b = &P::from_i64(&[-1, 1]) * &P::from_i64(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), P::from_i64(&[-1, 1]));
        let (qt, r) = b.div_rem(&a).unwrap();
        assert_eq!(&(&qt * &a) + &r, b);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn compose_and_eval() {
        let p = P::from_i64(&[1, 0, 1]);
        let s = P::from_i64(&[1, 1]);
        let c = p.compose(&s);
        assert_eq!(c, P::from_i64(&[2, 2, 1]));
        assert_eq!(c.eval(&q(3)), q(17));
    }

    #[test]
    fn prime_field_coefficients() {
        type F7 = Fp<7>;
        let f = Polynomial::<F7>::from_i64(&[1, 0, 1]); // x^2 + 1, irreducible mod 7
        let g = Polynomial::<F7>::from_i64(&[-1, 1]);
        let (a, b, d) = ext_gcd(&f, &g).unwrap();
        assert!(d.is_one_poly());
        assert_eq!(&(&a * &f) + &(&b * &g), d);
    }

    impl<F: Field> Polynomial<F> {
        fn is_one_poly(&self) -> bool {
            *self == Self::one()
        }
    }

    #[test]
    fn primitive_integer_clears_denominators() {
        let p = P::new(vec![qq(1, 2), qq(-3, 4), qq(-1, 6)]);
        let ints = p.primitive_integer();
        assert_eq!(
            ints,
            vec![(-6).into(), 9.into(), 2.into()]
                .into_iter()
                .collect::<Vec<num_bigint::BigInt>>()
        );
    }
}
