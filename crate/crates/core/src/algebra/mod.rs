//! Integers, rationals and univariate polynomial algebra.

mod field;
mod integer;
mod poly;
mod ratfunc;
mod resultant;
mod roots;

pub use field::{Field, Fp};
pub(crate) use integer::integer_roots_i128;
pub use integer::{
    cube_divisors, divisors, factor, integer_roots, iroot_floor, is_perfect_square, is_prime, isqrt,
    square_divisor_roots, FACTOR_CAP,
};
pub use poly::{ext_gcd, Polynomial};
pub use ratfunc::RationalFunction;
pub use resultant::{resultant_in_y, BiPoly};
pub use roots::{rational_roots, rational_sqrt};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Naive height `max(|numerator|, denominator)`.
pub fn height(x: &Rational) -> BigInt {
    let n = x.numer().abs();
    let d = x.denom().clone();
    n.max(d)
}

/// Parses `"a"` or `"a/b"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}
