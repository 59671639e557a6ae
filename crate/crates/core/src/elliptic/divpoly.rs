use super::WeierstrassCurve;
use crate::algebra::{Field, Polynomial};
use crate::error::{Error, Result};

impl<F: Field> WeierstrassCurve<F> {
    /// `4x^3 + b2 x^2 + 2 b4 x + b6`, the square of the 2-division polynomial.
    pub fn two_torsion_polynomial(&self) -> Polynomial<F> {
        Polynomial::new(vec![self.b6(), F::from_i64(2) * self.b4(), self.b2(), F::from_i64(4)])
    }

    /// Division polynomial in `x` for `2 <= n <= 12`.
    ///
    /// For odd `n` this is `psi_n`. For even `n >= 4` the factor `psi_2 = 2y + a1 x + a3`
    /// is divided out, leaving a polynomial in `x` whose roots are the x-coordinates of
    /// points with `nP = O` other than the 2-torsion. For `n = 2` the result is
    /// [`two_torsion_polynomial`](Self::two_torsion_polynomial), whose roots are the
    /// x-coordinates of the 2-torsion.
    pub fn division_polynomial(&self, n: u32) -> Result<Polynomial<F>> {
        if !(2..=12).contains(&n) {
            return Err(Error::domain(format!("division polynomial index {n} outside 2..=12")));
        }
        if n == 2 {
            return Ok(self.two_torsion_polynomial());
        }
        Ok(self.reduced_division_polynomials(n as usize).swap_remove(n as usize))
    }

    /// `f_0, ..., f_n` with `f_m = psi_m` for odd `m` and `psi_m / psi_2` for even `m`.
    fn reduced_division_polynomials(&self, n: usize) -> Vec<Polynomial<F>> {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        let c = |v: i64| F::from_i64(v);
        let f2sq = {
            let t = self.two_torsion_polynomial();
            &t * &t
        };
        let mut f: Vec<Polynomial<F>> = vec![
            Polynomial::zero(),
            Polynomial::one(),
            Polynomial::one(),
            Polynomial::new(vec![b8.clone(), c(3) * b6.clone(), c(3) * b4.clone(), b2.clone(), c(3)]),
            Polynomial::new(vec![
                b4.clone() * b8.clone() - b6.clone() * b6.clone(),
                b2.clone() * b8.clone() - b4.clone() * b6.clone(),
                c(10) * b8,
                c(10) * b6,
                c(5) * b4,
                b2,
                c(2),
            ]),
        ];
        for idx in 5..=n.max(4) {
            let m = idx / 2;
            let next = if idx % 2 == 1 {
                let a = &f[m + 2] * &f[m].pow(3);
                let b = &f[m - 1] * &f[m + 1].pow(3);
                if m % 2 == 0 {
                    &(&f2sq * &a) - &b
                } else {
                    &a - &(&f2sq * &b)
                }
            } else {
                let a = &f[m + 2] * &f[m - 1].pow(2);
                let b = &f[m - 2] * &f[m + 1].pow(2);
                &f[m] * &(&a - &b)
            };
            f.push(next);
        }
        f.truncate(n + 1);
        f
    }
}
