use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{parse_rational, q, qq, rational_roots, rational_sqrt, Polynomial, Rational};
use crate::elliptic::{EPoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::family::{CPoint, CurveIndex, QuarticCurve};

/// Rational parametrizations of `k` by a torsion condition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum ParamFamily {
    /// A point of `C_k` whose image on `E_1` has order 2.
    C12,
    /// Both `E_1` and `E_3` with a rational 2-torsion point.
    D12,
    /// `E_1` with a rational point of order 3.
    D13,
    /// `E_3` with a rational point of order 3.
    D33,
    /// `E_1` with a rational point of order 4, over `y^2 = x^3 - 12x`.
    D14,
}

impl ParamFamily {
    pub const ALL: [ParamFamily; 5] = [Self::C12, Self::D12, Self::D13, Self::D33, Self::D14];
}

impl fmt::Display for ParamFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::C12 => "c12",
            Self::D12 => "d12",
            Self::D13 => "d13",
            Self::D33 => "d33",
            Self::D14 => "d14",
        };
        f.write_str(s)
    }
}

impl FromStr for ParamFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum ParamArg {
    Scalar(Rational),
    Point(Rational, Rational),
}

impl ParamArg {
    /// `"a/b"` or `"x,y"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse argument {s:?}"));
        match s.split_once(',') {
            Some((x, y)) => Ok(ParamArg::Point(
                parse_rational(x).ok_or_else(bad)?,
                parse_rational(y).ok_or_else(bad)?,
            )),
            None => parse_rational(s).map(ParamArg::Scalar).ok_or_else(bad),
        }
    }
}

impl fmt::Display for ParamArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamArg::Scalar(t) => write!(f, "{t}"),
            ParamArg::Point(x, y) => write!(f, "{x},{y}"),
        }
    }
}

/// Witness that `k` really has the property the family parametrizes.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamCertificate {
    ImageOfOrder {
        point: CPoint,
        #[serde(serialize_with = "crate::serde_util::display")]
        image: EPoint,
        order: u32,
    },
    TwoTorsion {
        #[serde(serialize_with = "crate::serde_util::display")]
        e1: EPoint,
        #[serde(serialize_with = "crate::serde_util::display")]
        e3: EPoint,
    },
    TorsionPoint {
        curve: CurveIndex,
        #[serde(serialize_with = "crate::serde_util::display")]
        point: EPoint,
        order: u32,
    },
}

impl ParamCertificate {
    /// Re-checks the witness against `C_k` and its quotients.
    pub fn verify(&self, k: &Rational) -> bool {
        let Ok(c) = QuarticCurve::new(k.clone()) else {
            return false;
        };
        match self {
            ParamCertificate::ImageOfOrder { point, image, order } => {
                c.phi(CurveIndex::E1, point).ok().as_ref() == Some(image)
                    && c.elliptic(CurveIndex::E1).point_order(image).ok() == Some(Some(*order))
            }
            ParamCertificate::TwoTorsion { e1, e3 } => {
                c.elliptic(CurveIndex::E1).point_order(e1).ok() == Some(Some(2))
                    && c.elliptic(CurveIndex::E3).point_order(e3).ok() == Some(Some(2))
            }
            ParamCertificate::TorsionPoint { curve, point, order } => {
                c.elliptic(*curve).point_order(point).ok() == Some(Some(*order))
            }
        }
    }
}

fn scalar(family: ParamFamily, arg: &ParamArg) -> Result<Rational> {
    match arg {
        ParamArg::Scalar(t) => Ok(t.clone()),
        ParamArg::Point(..) => Err(Error::domain(format!("{family} takes a rational argument"))),
    }
}

fn pole(family: ParamFamily, arg: &ParamArg) -> Error {
    Error::domain(format!("{arg} is a pole of the {family} parametrization"))
}

/// Rational point of exact order `n` with `x` a root of the `n`-division polynomial.
fn point_of_order(e: &WeierstrassCurve, n: u32) -> Result<Option<EPoint>> {
    let psi = e.division_polynomial(n)?;
    for x in rational_roots(&psi)? {
        // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
        let b = &e.a1 * &x + &e.a3;
        let c = -(x.pow(3) + &e.a2 * x.pow(2) + &e.a4 * &x + &e.a6);
        let disc = &b * &b - q(4) * &c;
        let Some(r) = rational_sqrt(&disc) else {
            continue;
        };
        let pt = EPoint::affine(x.clone(), (r - b) / q(2));
        if e.point_order(&pt)? == Some(n) {
            return Ok(Some(pt));
        }
    }
    Ok(None)
}

fn torsion_certificate(k: &Rational, curve: CurveIndex, n: u32) -> Result<ParamCertificate> {
    let e = QuarticCurve::new(k.clone())?.elliptic(curve);
    let point = point_of_order(&e, n)?
        .ok_or_else(|| Error::Integrity(format!("{curve} at k = {k} has no rational point of order {n}")))?;
    Ok(ParamCertificate::TorsionPoint { curve, point, order: n })
}

/// D14 numerator pieces `f`, `g` and the base of `h = (x^2 - 12x - 12)^6`.
fn d14_polys() -> [Polynomial<Rational>; 3] {
    let f = Polynomial::from_i64(&[
        -725594112,
        2841910272,
        -1763596800,
        330884352,
        6438528,
        -11897280,
        1982880,
        -151632,
        5832,
    ]);
    let g = Polynomial::from_i64(&[
        403107840,
        -6651279360,
        9216052992,
        -2831832576,
        -162922752,
        192316032,
        -33195744,
        2869344,
        -186624,
        11664,
        -729,
    ]);
    [f, g, Polynomial::from_i64(&[-12, -12, 1])]
}

/// `k` attached to a parameter value, with a self-verifying witness.
pub fn param_k(family: ParamFamily, arg: &ParamArg) -> Result<(Rational, ParamCertificate)> {
    match family {
        ParamFamily::C12 => {
            let t = scalar(family, arg)?;
            let d = &t - q(1);
            if d.is_zero() {
                return Err(pole(family, arg));
            }
            let k = qq(27, 8) * t.pow(4) * (t.pow(2) - qq(3, 2) * &t + qq(3, 2)) / d.pow(3);
            let c = QuarticCurve::new(k.clone())?;
            let den = q(2) * &t - q(2);
            let x = q(3) * &t / &den;
            let y = (q(3) * t.pow(2) - q(3) * &t) / &den;
            let point = CPoint::affine(&x, &y);
            let image = c.phi(CurveIndex::E1, &point)?;
            let order = c
                .elliptic(CurveIndex::E1)
                .point_order(&image)?
                .filter(|&n| n == 2)
                .ok_or_else(|| Error::Integrity(format!("image {image} does not have order 2")))?;
            Ok((k, ParamCertificate::ImageOfOrder { point, image, order }))
        }
        ParamFamily::D12 => {
            let a = scalar(family, arg)?;
            let k = qq(-27, 64) * a.pow(3) + qq(81, 64) * &a - qq(27, 32);
            let c = QuarticCurve::new(k.clone())?;
            let mut pts = [CurveIndex::E1, CurveIndex::E3].into_iter().map(|i| {
                point_of_order(&c.elliptic(i), 2)?
                    .ok_or_else(|| Error::Integrity(format!("{i} at k = {k} has no rational 2-torsion")))
            });
            let e1 = pts.next().expect("two curves")?;
            let e3 = pts.next().expect("two curves")?;
            Ok((k, ParamCertificate::TwoTorsion { e1, e3 }))
        }
        ParamFamily::D13 | ParamFamily::D33 => {
            let a = scalar(family, arg)?;
            if a.is_zero() {
                return Err(pole(family, arg));
            }
            let s = a.pow(2) + q(3);
            let (k, curve) = if family == ParamFamily::D13 {
                let k = q(-27) * (&a - q(1)).pow(3) * (&a + q(1)).pow(3) * &s / (q(256) * a.pow(2));
                (k, CurveIndex::E1)
            } else {
                let k = (&a - q(3)) * (&a + q(3)) * s.pow(3) / (q(256) * a.pow(2));
                (k, CurveIndex::E3)
            };
            let cert = torsion_certificate(&k, curve, 3)?;
            Ok((k, cert))
        }
        ParamFamily::D14 => {
            let ParamArg::Point(x, y) = arg else {
                return Err(Error::domain("d14 takes a point x,y on y^2 = x^3 - 12x"));
            };
            if y.pow(2) != x.pow(3) - q(12) * x {
                return Err(Error::domain(format!("({x}, {y}) is not on y^2 = x^3 - 12x")));
            }
            let [f, g, h] = d14_polys();
            let hx = h.eval(x).pow(6);
            if hx.is_zero() {
                return Err(pole(family, arg));
            }
            let k = (f.eval(x) * y + g.eval(x)) / hx;
            let cert = torsion_certificate(&k, CurveIndex::E1, 4)?;
            Ok((k, cert))
        }
    }
}
