use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Bivariate polynomial in `x, y` over the rationals, stored as a polynomial in `y`
/// whose coefficients are polynomials in `x`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly {
    by_y: Vec<Polynomial<Rational>>,
}

impl BiPoly {
    /// Builds from terms `(c, i, j)` meaning `c x^i y^j`.
    pub fn from_terms(terms: &[(Rational, usize, usize)]) -> Self {
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (c, i, j) in terms {
            let e = acc.entry((*j, *i)).or_insert_with(Rational::zero);
            *e = e.clone() + c.clone();
        }
        let ydeg = acc.keys().map(|(j, _)| *j).max().unwrap_or(0);
        let mut by_y = vec![Polynomial::zero(); ydeg + 1];
        for ((j, i), c) in acc {
            by_y[j] = &by_y[j] + &Polynomial::monomial(c, i);
        }
        Self::from_y_coeffs(by_y)
    }

    pub fn from_y_coeffs(mut by_y: Vec<Polynomial<Rational>>) -> Self {
        while by_y.last().is_some_and(|p| p.is_zero()) {
            by_y.pop();
        }
        BiPoly { by_y }
    }

    pub fn is_zero(&self) -> bool {
        self.by_y.is_empty()
    }

    pub fn y_coeffs(&self) -> &[Polynomial<Rational>] {
        &self.by_y
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.by_y.len().checked_sub(1)
    }

    /// Specializes `x = x0`, leaving a polynomial in `y`.
    pub fn at_x(&self, x0: &Rational) -> Polynomial<Rational> {
        Polynomial::new(self.by_y.iter().map(|p| p.eval(x0)).collect())
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        self.at_x(x0).eval(y0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.by_y.len().max(other.by_y.len());
        let get = |v: &Vec<Polynomial<Rational>>, i: usize| v.get(i).cloned().unwrap_or_else(Polynomial::zero);
        Self::from_y_coeffs((0..n).map(|i| &get(&self.by_y, i) + &get(&other.by_y, i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_y_coeffs(self.by_y.iter().map(|p| p.scale(c)).collect())
    }
}

/// Resultant with respect to `y`, as the determinant of the Sylvester matrix.
///
/// The determinant is computed by fraction-free (Bareiss) elimination over `Q[x]`.
pub fn resultant_in_y(f: &BiPoly, g: &BiPoly) -> Result<Polynomial<Rational>> {
    let (m, n) = match (f.y_degree(), g.y_degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(Error::domain("resultant of a zero polynomial")),
    };
    if m == 0 && n == 0 {
        return Ok(Polynomial::one());
    }
    let size = m + n;
    let mut a = vec![vec![Polynomial::<Rational>::zero(); size]; size];
    // Rows 0..n hold shifts of f, rows n..n+m shifts of g; leading coefficients first.
    for r in 0..n {
        for (j, c) in f.by_y.iter().rev().enumerate() {
            a[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in g.by_y.iter().rev().enumerate() {
            a[n + r][r + j] = c.clone();
        }
    }
    Ok(bareiss_det(a))
}

fn bareiss_det(mut a: Vec<Vec<Polynomial<Rational>>>) -> Polynomial<Rational> {
    let n = a.len();
    let mut sign = false;
    let mut prev = Polynomial::<Rational>::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, rational_roots, Field};

    fn bp(terms: &[(i64, usize, usize)]) -> BiPoly {
        BiPoly::from_terms(&terms.iter().map(|&(c, i, j)| (q(c), i, j)).collect::<Vec<_>>())
    }

    #[test]
    fn linear_pair() {
        // y - x and y - 2x: Sylvester det [[1, -x], [1, -2x]] = -x
        let r = resultant_in_y(&bp(&[(1, 0, 1), (-1, 1, 0)]), &bp(&[(1, 0, 1), (-2, 1, 0)])).unwrap();
        assert_eq!(r, Polynomial::from_i64(&[0, -1]));
    }

    #[test]
    fn quadratic_against_linear() {
        // y^2 - x and y - 3 -> x - 9 up to sign
        let r = resultant_in_y(&bp(&[(1, 0, 2), (-1, 1, 0)]), &bp(&[(1, 0, 1), (-3, 0, 0)])).unwrap();
        assert_eq!(r.monic(), Polynomial::from_i64(&[-9, 1]));
    }

    #[test]
    fn curve_fiber_against_phi1_constraint() {
        // C_{-1}: y^3 + x^2 y^2 + x^3 + 1, against x + y = s with s = -1
        let f = bp(&[(1, 0, 3), (1, 2, 2), (1, 3, 0), (1, 0, 0)]);
        let g = bp(&[(1, 0, 1), (1, 1, 0), (1, 0, 0)]);
        let r = resultant_in_y(&f, &g).unwrap();
        let roots = rational_roots(&r).unwrap();
        assert_eq!(roots.into_iter().collect::<Vec<_>>(), vec![q(-1), q(0)]);
        for x in [q(-1), q(0)] {
            let y = q(-1) - x.clone();
            assert!(Field::is_zero(&f.eval(&x, &y)));
        }
    }

    #[test]
    fn zero_input_rejected() {
        assert!(resultant_in_y(&BiPoly::from_terms(&[]), &bp(&[(1, 0, 1)])).is_err());
    }
}
