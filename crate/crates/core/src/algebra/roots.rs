use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::integer::{integer_roots, is_perfect_square};
use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Distinct rational roots of `p`, ascending.
///
/// A root `r` of the primitive integer polynomial `sum c_i x^i` with leading
/// coefficient `c_n` satisfies `c_n r = m` for an integer root `m` of the monic
/// polynomial `c_n^(n-1) f(m / c_n)`, so the search is reduced to integer roots.
pub fn rational_roots(p: &Polynomial<Rational>) -> Result<BTreeSet<Rational>> {
    if p.is_zero() {
        return Err(Error::domain("rational_roots of the zero polynomial"));
    }
    let mut c = p.primitive_integer();
    let mut out = BTreeSet::new();
    let zeros = c.iter().take_while(|a| a.is_zero()).count();
    if zeros > 0 {
        out.insert(Rational::zero());
        c.drain(..zeros);
    }
    let n = c.len() - 1;
    if n == 0 {
        return Ok(out);
    }
    let lead = c[n].clone();
    let monic: Vec<BigInt> = if lead.is_one() {
        c.clone()
    } else {
        let mut pw = BigInt::one();
        let mut m = vec![BigInt::zero(); n + 1];
        for i in (0..n).rev() {
            m[i] = &c[i] * &pw;
            pw *= &lead;
        }
        m[n] = BigInt::one();
        m
    };
    for m in integer_roots(&monic, None) {
        let r = Rational::new(m, lead.clone());
        debug_assert!(super::Field::is_zero(&p.eval(&r)));
        out.insert(r);
    }
    Ok(out)
}

/// Square root of a rational, when it is rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = is_perfect_square(x.numer())?;
    let d = is_perfect_square(x.denom())?;
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qq};

    type P = Polynomial<Rational>;

    fn set(v: &[Rational]) -> BTreeSet<Rational> {
        v.iter().cloned().collect()
    }

    #[test]
    fn quadratic_roots() {
        let p = P::from_i64(&[6, -5, 1]);
        assert_eq!(rational_roots(&p).unwrap(), set(&[q(2), q(3)]));
    }

    #[test]
    fn fiber_of_c1_over_x_equals_one() {
        // y^3 + y^2 = y^2 (y + 1)
        let p = P::from_i64(&[0, 0, 1, 1]);
        assert_eq!(rational_roots(&p).unwrap(), set(&[q(-1), q(0)]));
    }

    #[test]
    fn quartic_with_k_135() {
        // a^4 + 2a^3 - 135 = (a - 3)(a^3 + 5a^2 + 15a + 45)
        let p = P::from_i64(&[-135, 0, 0, 2, 1]);
        assert_eq!(rational_roots(&p).unwrap(), set(&[q(3)]));
    }

    #[test]
    fn non_monic_rational_roots() {
        // 16k^2 + 27k - 11967264 has roots 864 and -13851/16
        let p = P::from_i64(&[-11967264, 27, 16]);
        assert_eq!(rational_roots(&p).unwrap(), set(&[qq(-13851, 16), q(864)]));
    }

    #[test]
    fn zero_polynomial_is_error() {
        assert!(rational_roots(&P::zero()).is_err());
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rational_sqrt(&qq(9, 4)), Some(qq(3, 2)));
        assert_eq!(rational_sqrt(&qq(2, 1)), None);
        assert_eq!(rational_sqrt(&qq(-1, 1)), None);
    }
}
