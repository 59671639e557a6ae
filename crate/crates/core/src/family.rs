//! The quartics `C_k`, their three elliptic quotients and the maps between them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{q, qq, rational_roots, resultant_in_y, BiPoly, Polynomial, Rational};
use crate::elliptic::{EPoint, WeierstrassCurve};
use crate::error::{Error, Result};

/// Which of the three elliptic quotients.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum CurveIndex {
    E1,
    E2,
    E3,
}

impl CurveIndex {
    pub const ALL: [CurveIndex; 3] = [CurveIndex::E1, CurveIndex::E2, CurveIndex::E3];

    pub fn from_number(i: u8) -> Result<Self> {
        match i {
            1 => Ok(CurveIndex::E1),
            2 => Ok(CurveIndex::E2),
            3 => Ok(CurveIndex::E3),
            _ => Err(Error::domain(format!("curve index {i} not in 1..=3"))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            CurveIndex::E1 => 1,
            CurveIndex::E2 => 2,
            CurveIndex::E3 => 3,
        }
    }

    /// Degree of `phi_i`.
    pub fn map_degree(self) -> usize {
        match self {
            CurveIndex::E1 => 2,
            CurveIndex::E2 => 3,
            CurveIndex::E3 => 6,
        }
    }
}

impl fmt::Display for CurveIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.number())
    }
}

/// A projective point with coprime integer coordinates, first nonzero coordinate positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CPoint {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl CPoint {
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Result<Self> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(Error::domain("(0 : 0 : 0) is not a projective point"));
        }
        let g = x.gcd(&y).gcd(&z);
        let (mut x, mut y, mut z) = (x / &g, y / &g, z / &g);
        let first = [&x, &y, &z].into_iter().find(|c| !c.is_zero()).cloned().unwrap();
        if first.is_negative() {
            x = -x;
            y = -y;
            z = -z;
        }
        Ok(CPoint { x, y, z })
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(x.into(), y.into(), z.into())
    }

    /// `(x : y : 1)`.
    pub fn affine(x: &Rational, y: &Rational) -> Self {
        let d = x.denom().lcm(y.denom());
        let xn = x.numer() * (&d / x.denom());
        let yn = y.numer() * (&d / y.denom());
        Self::new(xn, yn, d).expect("z is nonzero")
    }

    pub fn infinity_x() -> Self {
        CPoint {
            x: BigInt::one(),
            y: BigInt::zero(),
            z: BigInt::zero(),
        }
    }

    pub fn infinity_y() -> Self {
        CPoint {
            x: BigInt::zero(),
            y: BigInt::one(),
            z: BigInt::zero(),
        }
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn is_at_infinity(&self) -> bool {
        self.z.is_zero()
    }

    pub fn to_affine(&self) -> Option<(Rational, Rational)> {
        if self.z.is_zero() {
            return None;
        }
        Some((
            Rational::new(self.x.clone(), self.z.clone()),
            Rational::new(self.y.clone(), self.z.clone()),
        ))
    }

    /// The image under `(x : y : z) -> (y : x : z)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.y.clone(), self.x.clone(), self.z.clone()).expect("nonzero")
    }

    /// Parses `"x,y"` (affine, rational coordinates) or `"x:y:z"` (integers).
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse point {s:?}"));
        if s.contains(':') {
            let parts: Vec<BigInt> = s
                .split(':')
                .map(|p| p.trim().parse::<BigInt>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?;
            let [x, y, z] = <[BigInt; 3]>::try_from(parts).map_err(|_| bad())?;
            return Self::new(x, y, z);
        }
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let x = crate::algebra::parse_rational(a).ok_or_else(bad)?;
        let y = crate::algebra::parse_rational(b).ok_or_else(bad)?;
        Ok(Self::affine(&x, &y))
    }
}

impl fmt::Display for CPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.x, self.y, self.z)
    }
}

impl Serialize for CPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `x^3 z + x^2 y^2 + y^3 z = k z^4`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuarticCurve {
    k: Rational,
}

fn terms(t: &[(i64, usize, usize)]) -> BiPoly {
    BiPoly::from_terms(&t.iter().map(|&(c, i, j)| (q(c), i, j)).collect::<Vec<_>>())
}

/// `16x^2y^2 + 12(x^3 + x^2y + xy^2 + y^3) + 36(x^2 - xy + y^2)`
fn phi3_x_numerator() -> BiPoly {
    terms(&[
        (16, 2, 2),
        (12, 3, 0),
        (12, 2, 1),
        (12, 1, 2),
        (12, 0, 3),
        (36, 2, 0),
        (-36, 1, 1),
        (36, 0, 2),
    ])
}

fn phi3_y_numerator() -> BiPoly {
    terms(&[
        (72, 4, 1),
        (108, 4, 0),
        (64, 3, 3),
        (72, 3, 2),
        (108, 3, 0),
        (72, 2, 3),
        (216, 2, 2),
        (72, 1, 4),
        (108, 0, 4),
        (108, 0, 3),
    ])
}

impl QuarticCurve {
    pub fn new(k: Rational) -> Result<Self> {
        if k.is_zero() || k == qq(-27, 16) {
            return Err(Error::SingularFamily(format!("C_k is singular for k = {k}")));
        }
        Ok(QuarticCurve { k })
    }

    pub fn from_int(k: i64) -> Result<Self> {
        Self::new(q(k))
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    /// The affine equation `y^3 + x^2 y^2 + x^3 - k` as a polynomial in `y` over `Q[x]`.
    pub fn affine_equation(&self) -> BiPoly {
        BiPoly::from_terms(&[(q(1), 0, 3), (q(1), 2, 2), (q(1), 3, 0), (-self.k.clone(), 0, 0)])
    }

    pub fn contains(&self, p: &CPoint) -> bool {
        let (x, y, z) = (p.x(), p.y(), p.z());
        let lhs = x.pow(3) * z + x * x * y * y + y.pow(3) * z;
        let z4 = z.pow(4);
        Rational::from_integer(lhs) == &self.k * Rational::from_integer(z4)
    }

    pub fn elliptic(&self, i: CurveIndex) -> WeierstrassCurve {
        let k = self.k.clone();
        let z = Rational::zero;
        let (a1, a2, a4, a6) = match i {
            CurveIndex::E1 => (q(3), z(), z(), k),
            CurveIndex::E2 => (z(), q(4) * &k, z(), q(16) * &k * &k),
            CurveIndex::E3 => (z(), q(-27), z(), q(-1728) * k),
        };
        WeierstrassCurve::new(a1, a2, z(), a4, a6).expect("E_i,k is nonsingular for admissible k")
    }

    /// `phi_i(P)`. Both points at infinity go to the identity, as does `x = y` under `phi_3`.
    pub fn phi(&self, i: CurveIndex, p: &CPoint) -> Result<EPoint> {
        if !self.contains(p) {
            return Err(Error::domain(format!("{p} is not on C_{}", self.k)));
        }
        let Some((x, y)) = p.to_affine() else {
            return Ok(EPoint::Identity);
        };
        let image = match i {
            CurveIndex::E1 => EPoint::affine(-(&x + &y), &x * &y),
            CurveIndex::E2 => {
                let xx = q(-4) * x.pow(3) - q(4) * &x * &y;
                let yy = q(-8) * x.pow(4) * &y + q(16) * x.pow(3) + q(8) * y.pow(3) - q(12) * &self.k;
                EPoint::affine(xx, yy)
            }
            CurveIndex::E3 => {
                let d = &x - &y;
                if d.is_zero() {
                    EPoint::Identity
                } else {
                    let xx = phi3_x_numerator().eval(&x, &y) / d.pow(2);
                    let yy = phi3_y_numerator().eval(&x, &y) / d.pow(3);
                    EPoint::affine(xx, yy)
                }
            }
        };
        if !self.elliptic(i).contains(&image) {
            return Err(Error::Integrity(format!(
                "phi_{} image {image} is off the curve",
                i.number()
            )));
        }
        Ok(image)
    }

    /// All rational points of `C_k` mapping to `target` under `phi_i`.
    pub fn preimages(&self, i: CurveIndex, target: &EPoint) -> Result<BTreeSet<CPoint>> {
        if !self.elliptic(i).contains(target) {
            return Err(Error::domain(format!("{target} is not on {i}")));
        }
        let mut out = BTreeSet::new();
        let Some((tx, ty)) = target.coords() else {
            out.insert(CPoint::infinity_x());
            out.insert(CPoint::infinity_y());
            if i == CurveIndex::E3 {
                // x = y: y^3 + x^2 y^2 + x^3 = x^4 + 2x^3
                let diag = Polynomial::new(vec![-self.k.clone(), q(0), q(0), q(2), q(1)]);
                for a in rational_roots(&diag)? {
                    out.insert(CPoint::affine(&a, &a));
                }
            }
            return Ok(out);
        };
        let candidates = match i {
            CurveIndex::E1 => {
                // x, y are the roots of T^2 + X T + Y
                let quad = Polynomial::new(vec![ty.clone(), tx.clone(), q(1)]);
                let roots: Vec<Rational> = rational_roots(&quad)?.into_iter().collect();
                match roots.as_slice() {
                    [r] => vec![(r.clone(), r.clone())],
                    [r, s] => vec![(r.clone(), s.clone()), (s.clone(), r.clone())],
                    _ => vec![],
                }
            }
            CurveIndex::E2 => {
                let g1 = terms(&[(-4, 3, 0), (-4, 1, 1)]).add(&BiPoly::from_terms(&[(-tx.clone(), 0, 0)]));
                let g2 = terms(&[(-8, 4, 1), (16, 3, 0), (8, 0, 3)]).add(&BiPoly::from_terms(&[(
                    -(q(12) * &self.k) - ty,
                    0,
                    0,
                )]));
                self.eliminate(&[g1, g2])?
            }
            CurveIndex::E3 => {
                let diff2 = terms(&[(1, 2, 0), (-2, 1, 1), (1, 0, 2)]);
                let diff3 = terms(&[(1, 3, 0), (-3, 2, 1), (3, 1, 2), (-1, 0, 3)]);
                let g1 = phi3_x_numerator().add(&diff2.scale(&-tx.clone()));
                let g2 = phi3_y_numerator().add(&diff3.scale(&-ty.clone()));
                self.eliminate(&[g1, g2])?
            }
        };
        for (x, y) in candidates {
            let p = CPoint::affine(&x, &y);
            if self.contains(&p) && self.phi(i, &p)? == *target {
                out.insert(p);
            }
        }
        Ok(out)
    }

    /// Common rational solutions of the curve equation and `constraints`, by elimination of `y`.
    fn eliminate(&self, constraints: &[BiPoly]) -> Result<Vec<(Rational, Rational)>> {
        let f = self.affine_equation();
        let mut g = Polynomial::<Rational>::zero();
        for c in constraints {
            if c.is_zero() {
                continue;
            }
            let r = resultant_in_y(&f, c)?;
            g = g.gcd(&r);
        }
        if g.is_zero() {
            return Err(Error::Integrity("elimination produced no constraint on x".into()));
        }
        let mut out = Vec::new();
        for x in rational_roots(&g)? {
            let mut fiber = f.at_x(&x);
            for c in constraints {
                let cy = c.at_x(&x);
                if !cy.is_zero() {
                    fiber = fiber.gcd(&cy);
                }
            }
            if fiber.degree().unwrap_or(0) == 0 {
                continue;
            }
            for y in rational_roots(&fiber)? {
                out.push((x.clone(), y));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}: x^3 z + x^2 y^2 + y^3 z = {} z^4", self.k, self.k)
    }
}

/// The curve and its three quotients.
pub fn make_family(k: Rational) -> Result<(QuarticCurve, [WeierstrassCurve; 3])> {
    let c = QuarticCurve::new(k)?;
    let es = CurveIndex::ALL.map(|i| c.elliptic(i));
    Ok((c, es))
}

/// The point `(0, 4k)` on `E_{2,k}` with its order, `None` meaning infinite.
pub fn e2_generic_point(k: &Rational) -> Result<(EPoint, Option<u32>)> {
    if k.is_zero() {
        return Err(Error::domain("k = 0"));
    }
    let e = WeierstrassCurve::new(q(0), q(4) * k, q(0), q(0), q(16) * k * k)?;
    let p = EPoint::affine(q(0), q(4) * k);
    let order = e.point_order(&p)?;
    Ok((p, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> CPoint {
        CPoint::from_i64(x, y, z).unwrap()
    }

    fn set(v: &[CPoint]) -> BTreeSet<CPoint> {
        v.iter().cloned().collect()
    }

    #[test]
    fn normalization() {
        assert_eq!(pt(-2, 4, -2), pt(1, -2, 1));
        assert_eq!(pt(0, -3, 0), CPoint::infinity_y());
        assert_eq!(CPoint::affine(&qq(1, 2), &qq(-9, 4)), pt(2, -9, 4));
        assert_eq!(CPoint::parse("1/2,-9/4").unwrap(), pt(2, -9, 4));
        assert_eq!(CPoint::parse("-6:3:1").unwrap(), pt(-6, 3, 1));
        assert!(CPoint::from_i64(0, 0, 0).is_err());
    }

    #[test]
    fn family_models() {
        let (_, [e1, e2, e3]) = make_family(q(7)).unwrap();
        assert_eq!((e1.a1.clone(), e1.a6.clone()), (q(3), q(7)));
        assert_eq!((e2.a2.clone(), e2.a6.clone()), (q(28), q(784)));
        assert_eq!((e3.a2.clone(), e3.a6.clone()), (q(-27), q(-12096)));
        assert!(matches!(make_family(q(0)), Err(Error::SingularFamily(_))));
        assert!(matches!(make_family(qq(-27, 16)), Err(Error::SingularFamily(_))));
    }

    #[test]
    fn phi_examples() {
        let c1 = QuarticCurve::from_int(1).unwrap();
        assert_eq!(c1.phi(CurveIndex::E1, &pt(1, 0, 1)).unwrap(), EPoint::from_i64(-1, 0));
        let c = QuarticCurve::from_int(135).unwrap();
        assert_eq!(c.phi(CurveIndex::E3, &pt(3, 3, 1)).unwrap(), EPoint::Identity);
        let c = QuarticCurve::from_int(-1).unwrap();
        assert_eq!(c.phi(CurveIndex::E2, &pt(-1, 0, 1)).unwrap(), EPoint::from_i64(4, -4));
        for i in CurveIndex::ALL {
            assert_eq!(c.phi(i, &CPoint::infinity_x()).unwrap(), EPoint::Identity);
        }
        assert!(c.phi(CurveIndex::E1, &pt(1, 1, 1)).is_err());
    }

    #[test]
    fn preimage_examples() {
        let c = QuarticCurve::from_int(135).unwrap();
        assert_eq!(
            c.preimages(CurveIndex::E3, &EPoint::from_i64(72, 0)).unwrap(),
            set(&[pt(-6, 3, 1), pt(3, -6, 1)])
        );
        let c = QuarticCurve::from_int(-1).unwrap();
        assert_eq!(
            c.preimages(CurveIndex::E3, &EPoint::Identity).unwrap(),
            set(&[pt(-1, -1, 1), pt(0, 1, 0), pt(1, 0, 0)])
        );
        assert_eq!(
            c.preimages(CurveIndex::E3, &EPoint::from_i64(24, 0)).unwrap(),
            set(&[pt(-1, 0, 1), pt(0, -1, 1)])
        );
        let c1 = QuarticCurve::from_int(1).unwrap();
        assert_eq!(
            c1.preimages(CurveIndex::E1, &EPoint::from_i64(-1, 0)).unwrap(),
            set(&[pt(1, 0, 1), pt(0, 1, 1)])
        );
        assert!(c1.preimages(CurveIndex::E1, &EPoint::from_i64(5, 5)).is_err());
    }

    #[test]
    fn round_trip_through_every_map() {
        let c = QuarticCurve::from_int(1).unwrap();
        for p in [
            pt(-3, -2, 1),
            pt(1, 0, 1),
            pt(0, 1, 1),
            pt(1, -1, 1),
            pt(-1, 1, 1),
            pt(-2, -3, 1),
        ] {
            for i in CurveIndex::ALL {
                let img = c.phi(i, &p).unwrap();
                assert!(c.preimages(i, &img).unwrap().contains(&p), "{p} via {i}");
            }
        }
    }

    #[test]
    fn e2_point_orders() {
        assert_eq!(e2_generic_point(&q(-1)).unwrap().1, Some(5));
        assert_eq!(e2_generic_point(&q(-2)).unwrap().1, Some(6));
        assert_eq!(e2_generic_point(&q(3)).unwrap().1, None);
    }
}
