use crate::algebra::{qq, Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// `j`-invariant families: a curve with a rational point of order `i` has `j = f_i(t)`
/// for some rational `t`, `2 <= i <= 7`.
#[derive(Clone, PartialEq, Debug)]
pub struct JFamily {
    i: u8,
    f: RationalFunction,
}

fn p(c: &[i64]) -> Polynomial<Rational> {
    Polynomial::from_i64(c)
}

impl JFamily {
    pub fn new(i: u8) -> Result<Self> {
        let (num, den) = match i {
            2 => (p(&[0, 0, 0, 1]), p(&[16, 1])),
            3 => (p(&[0, 0, 0, 24, 1]), p(&[-3, 1])),
            4 => {
                let q = Polynomial::new(vec![qq(1, 16), qq(-1, 1), qq(1, 1)]);
                let num = q.pow(3).scale(&qq(-256, 1));
                let den = &Polynomial::monomial(qq(1, 1), 4) * &Polynomial::new(vec![qq(-1, 16), qq(1, 1)]);
                (num, den)
            }
            5 => {
                let num = -&p(&[1, -12, 14, 12, 1]).pow(3);
                (num, &Polynomial::monomial(qq(1, 1), 5) * &p(&[-1, 11, 1]))
            }
            6 => {
                let num = &p(&[0, 0, 0, 1]) * &p(&[-48, -24, 0, 1]).pow(3);
                let den = &(&p(&[-6, 1]) * &p(&[3, 1])) * &p(&[2, 1]).pow(3);
                (num, den)
            }
            7 => {
                let num = &p(&[1, 1, 1]).pow(3) * &p(&[1, 11, 30, 15, -10, -5, 1]).pow(3);
                let den = &(&Polynomial::monomial(qq(1, 1), 7) * &p(&[1, 1]).pow(7)) * &p(&[-1, -8, -5, 1]);
                (num, den)
            }
            _ => return Err(Error::domain(format!("no j-family for order {i}"))),
        };
        Ok(JFamily {
            i,
            f: RationalFunction::new(num, den)?,
        })
    }

    pub fn order(&self) -> u8 {
        self.i
    }

    pub fn function(&self) -> &RationalFunction {
        &self.f
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        self.f.eval(t)
    }
}

/// `f_i(t)`; errors at poles.
pub fn jfamily_eval(i: u8, t: &Rational) -> Result<Rational> {
    JFamily::new(i)?.eval(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::family::{CurveIndex, QuarticCurve};

    #[test]
    fn order_two_at_48() {
        assert_eq!(jfamily_eval(2, &q(48)).unwrap(), q(1728));
    }

    #[test]
    fn poles_rejected() {
        assert!(jfamily_eval(3, &q(3)).is_err());
        assert!(jfamily_eval(2, &q(-16)).is_err());
        assert!(jfamily_eval(8, &q(1)).is_err());
    }

    #[test]
    fn order_five_meets_k_864() {
        // (u, v) = (-2, 1) gives 16k^2 + 27k = 11967264
        let j = QuarticCurve::from_int(864)
            .unwrap()
            .elliptic(CurveIndex::E1)
            .j_invariant()
            .unwrap();
        assert_eq!(jfamily_eval(5, &q(-2)).unwrap(), j);
        assert_eq!(jfamily_eval(5, &qq(1, 2)).unwrap(), j);
    }

    #[test]
    fn order_three_meets_k_minus_72() {
        // j = -3^9 / (16 k^2 + 27 k) takes the value f_3(t) for some rational t
        let j = QuarticCurve::from_int(-72)
            .unwrap()
            .elliptic(CurveIndex::E1)
            .j_invariant()
            .unwrap();
        let f = JFamily::new(3).unwrap();
        let num = f.function().numerator() - &f.function().denominator().scale(&j);
        assert!(!crate::algebra::rational_roots(&num).unwrap().is_empty());
    }
}
