use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{EPoint, WeierstrassCurve};
use crate::algebra::{integer_roots, square_divisor_roots, Rational};
use crate::error::{Error, Result};

/// Largest order of a rational torsion point (Mazur).
pub const MAZUR_MAX_ORDER: u32 = 12;

/// Abstract structure of a torsion subgroup.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TorsionStructure {
    /// `Z/nZ`
    Cyclic(u32),
    /// `Z/2Z x Z/2mZ`
    TwoByTwoM(u32),
}

impl TorsionStructure {
    pub fn order(&self) -> u32 {
        match *self {
            TorsionStructure::Cyclic(n) => n,
            TorsionStructure::TwoByTwoM(m) => 4 * m,
        }
    }

    fn is_mazur(&self) -> bool {
        match *self {
            TorsionStructure::Cyclic(n) => (1..=10).contains(&n) || n == 12,
            TorsionStructure::TwoByTwoM(m) => (1..=4).contains(&m),
        }
    }
}

impl fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TorsionStructure::Cyclic(1) => write!(f, "trivial"),
            TorsionStructure::Cyclic(n) => write!(f, "Z/{n}Z"),
            TorsionStructure::TwoByTwoM(m) => write!(f, "Z/2Z x Z/{}Z", 2 * m),
        }
    }
}

/// The rational torsion subgroup with all of its points, identity included.
#[derive(Clone, PartialEq, Debug)]
pub struct TorsionGroup {
    pub structure: TorsionStructure,
    pub points: BTreeSet<EPoint>,
}

impl TorsionGroup {
    pub fn order(&self) -> u32 {
        self.structure.order()
    }
}

impl WeierstrassCurve {
    /// Order of `p` if it is at most 12, otherwise `None` (infinite order by Mazur).
    pub fn point_order(&self, p: &EPoint) -> Result<Option<u32>> {
        if !self.contains(p) {
            return Err(Error::domain(format!("{p} is not on the curve")));
        }
        Ok(self.small_order(p))
    }

    fn small_order(&self, p: &EPoint) -> Option<u32> {
        let mut acc = p.clone();
        for n in 1..=MAZUR_MAX_ORDER {
            if acc.is_identity() {
                return Some(n);
            }
            acc = self.add_unchecked(&acc, p);
        }
        None
    }

    /// True iff `nP != O` for all `n <= 12`.
    pub fn has_infinite_order(&self, p: &EPoint) -> Result<bool> {
        if p.is_identity() {
            return Err(Error::domain("the identity has finite order"));
        }
        Ok(self.point_order(p)?.is_none())
    }

    /// Torsion subgroup by Nagell-Lutz on a short integral model.
    ///
    /// Candidates are integral points with `y = 0` or `y^2 | 4A^3 + 27B^2`; each is kept
    /// only after its order is checked by repeated addition.
    pub fn torsion_subgroup(&self) -> Result<TorsionGroup> {
        let model = self.short_integral_model()?;
        let short = model.curve();
        let (a, b) = (&model.a, &model.b);
        let cubic = |c0: BigInt| vec![c0, a.clone(), BigInt::zero(), BigInt::from(1)];
        let mut found: BTreeSet<EPoint> = BTreeSet::new();
        found.insert(EPoint::Identity);
        let mut consider = |x: &BigInt, y: &BigInt| {
            let pt = EPoint::affine(Rational::from_integer(x.clone()), Rational::from_integer(y.clone()));
            if short.small_order(&pt).is_some() {
                found.insert(model.backward(&pt));
            }
        };
        for x in integer_roots(&cubic(b.clone()), None) {
            consider(&x, &BigInt::zero());
        }
        let disc = model.nl_discriminant();
        for y in square_divisor_roots(&disc)? {
            for x in integer_roots(&cubic(b - &y * &y), None) {
                consider(&x, &y);
                consider(&x, &-&y);
            }
        }
        let n = found.len() as u32;
        let two_torsion = found
            .iter()
            .filter(|p| !p.is_identity() && self.small_order(p) == Some(2))
            .count();
        let structure = if two_torsion == 3 {
            TorsionStructure::TwoByTwoM(n / 4)
        } else {
            TorsionStructure::Cyclic(n)
        };
        if !structure.is_mazur() {
            return Err(Error::Integrity(format!("torsion order {n} outside Mazur's list")));
        }
        Ok(TorsionGroup {
            structure,
            points: found,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn family(i: u8, k: i64) -> WeierstrassCurve {
        match i {
            1 => WeierstrassCurve::new(q(3), q(0), q(0), q(0), q(k)),
            2 => WeierstrassCurve::new(q(0), q(4 * k), q(0), q(0), q(16 * k * k)),
            _ => WeierstrassCurve::new(q(0), q(-27), q(0), q(0), q(-1728 * k)),
        }
        .unwrap()
    }

    #[test]
    fn e3_135_is_z2() {
        let t = family(3, 135).torsion_subgroup().unwrap();
        assert_eq!(t.structure, TorsionStructure::Cyclic(2));
        assert!(t.points.contains(&EPoint::from_i64(72, 0)));
    }

    #[test]
    fn e1_864_is_z5_and_e1_minus_2_trivial() {
        assert_eq!(
            family(1, 864).torsion_subgroup().unwrap().structure,
            TorsionStructure::Cyclic(5)
        );
        let t = family(1, -2).torsion_subgroup().unwrap();
        assert_eq!(t.structure, TorsionStructure::Cyclic(1));
        assert_eq!(t.points.len(), 1);
    }

    #[test]
    fn full_two_torsion() {
        let e = WeierstrassCurve::short(q(-1), q(0)).unwrap();
        let t = e.torsion_subgroup().unwrap();
        assert_eq!(t.structure, TorsionStructure::TwoByTwoM(1));
        assert_eq!(t.structure.to_string(), "Z/2Z x Z/2Z");
    }

    #[test]
    fn points_are_annihilated() {
        for (i, k) in [(2, -1), (2, -2), (1, 135), (1, -72), (3, -2)] {
            let e = family(i, k);
            let t = e.torsion_subgroup().unwrap();
            for p in &t.points {
                assert!(e.contains(p));
                assert_eq!(e.mul(p, t.order() as i64).unwrap(), EPoint::Identity);
            }
        }
    }

    #[test]
    fn infinite_order_checks() {
        assert!(family(2, 1).has_infinite_order(&EPoint::from_i64(0, 4)).unwrap());
        assert!(!family(2, -1).has_infinite_order(&EPoint::from_i64(0, -4)).unwrap());
        assert!(!family(3, 135).has_infinite_order(&EPoint::from_i64(72, 0)).unwrap());
        assert!(family(2, 1).has_infinite_order(&EPoint::Identity).is_err());
    }
}
