use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use quartic_core::algebra::{ext_gcd, q, qq, resultant_in_y, BiPoly, Polynomial, Rational};
use quartic_core::cases::{param_k, ParamArg, ParamFamily, CASE5_FORM};
use quartic_core::diophantine::{gcd_bound, thue_bounded, value_gcd, ThueForm};
use quartic_core::elliptic::{EPoint, WeierstrassCurve};
use quartic_core::family::{e2_generic_point, CurveIndex, QuarticCurve};
use quartic_core::localsolve::{qp_soluble, witness_holds, LocalStatus, SuperellipticModel};
use quartic_core::search::{search_ck, HeightBound};
use quartic_core::Error;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=20).prop_map(|(n, d)| qq(n, d))
}

fn nonzero_k() -> impl Strategy<Value = i64> {
    (-60i64..=60).prop_filter("k != 0", |k| *k != 0)
}

// E_{2,k} with its point (0, 4k), of infinite order away from k = -1, -2.
fn e2(k: i64) -> (WeierstrassCurve, EPoint) {
    let c = QuarticCurve::from_int(k).unwrap();
    (c.elliptic(CurveIndex::E2), EPoint::affine(q(0), q(4 * k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_law_axioms(k in (3i64..=40), a in -4i64..=4, b in -4i64..=4, c in -4i64..=4) {
        let (e, g) = e2(k);
        let (p, q_, r) = (e.mul(&g, a).unwrap(), e.mul(&g, b).unwrap(), e.mul(&g, c).unwrap());
        for pt in [&p, &q_, &r] {
            prop_assert!(e.contains(pt));
        }
        prop_assert_eq!(e.add(&p, &q_).unwrap(), e.add(&q_, &p).unwrap());
        let lhs = e.add(&e.add(&p, &q_).unwrap(), &r).unwrap();
        let rhs = e.add(&p, &e.add(&q_, &r).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, e.mul(&g, a + b + c).unwrap());
        prop_assert_eq!(e.add(&p, &e.neg(&p)).unwrap(), EPoint::Identity);
    }

    #[test]
    fn gcd_bound_divides_case3(m in -2000i64..=2000, n in 1i64..=2000) {
        prop_assume!(m.gcd(&n) == 1);
        let phi = &Polynomial::from_i64(&[1, 1]).pow(3) * &Polynomial::from_i64(&[-3, 1]);
        let psi = Polynomial::from_i64(&[0, 0, 0, -3, -2]);
        let cert = gcd_bound(&phi, &psi).unwrap();
        prop_assert!(cert.verify(&phi, &psi));
        let g = value_gcd(&phi, &psi, &BigInt::from(m), &BigInt::from(n));
        prop_assert!(cert.r.gcd(&BigInt::from(243)).is_multiple_of(&g), "gcd {} at ({}, {})", g, m, n);
    }

    #[test]
    fn gcd_bound_divides_case5(m in -2000i64..=2000, n in 1i64..=2000) {
        prop_assume!(m.gcd(&n) == 1);
        let phi = Polynomial::from_i64(&[1, -12, 14, 12, 1]).pow(3);
        let psi = Polynomial::from_i64(&[0, 0, 0, 0, 0, -19683, 11 * 19683, 19683]);
        let cert = gcd_bound(&phi, &psi).unwrap();
        let g = value_gcd(&phi, &psi, &BigInt::from(m), &BigInt::from(n));
        prop_assert!(cert.r.gcd(&BigInt::from(2460375)).is_multiple_of(&g), "gcd {} at ({}, {})", g, m, n);
    }

    #[test]
    fn ext_gcd_identity(f in prop::collection::vec(-9i64..=9, 1..7), g in prop::collection::vec(-9i64..=9, 1..7)) {
        let (f, g) = (Polynomial::<Rational>::from_i64(&f), Polynomial::<Rational>::from_i64(&g));
        prop_assume!(!f.is_zero() || !g.is_zero());
        let (a, b, d) = ext_gcd(&f, &g).unwrap();
        prop_assert_eq!(&(&a * &f) + &(&b * &g), d.clone());
        prop_assert!(f.div_rem(&d).unwrap().1.is_zero());
        prop_assert!(g.div_rem(&d).unwrap().1.is_zero());
    }

    #[test]
    fn resultant_vanishes_at_common_points(x0 in rational(), y0 in rational(), m in rational(), c in -5i64..=5) {
        // f: y^3 + x^2 y^2 + x^3 + c x y - k0 through (x0, y0); g: the line of slope m through it
        let k0 = y0.pow(3) + x0.pow(2) * y0.pow(2) + x0.pow(3) + q(c) * &x0 * &y0;
        let f = BiPoly::from_terms(&[(q(1), 0, 3), (q(1), 2, 2), (q(1), 3, 0), (q(c), 1, 1), (-k0, 0, 0)]);
        let g = BiPoly::from_terms(&[(q(1), 0, 1), (-m.clone(), 1, 0), (m * &x0 - &y0, 0, 0)]);
        let r = resultant_in_y(&f, &g).unwrap();
        prop_assert!(num_traits::Zero::is_zero(&r.eval(&x0)));
    }

    #[test]
    fn param_certificates_verify(t in rational(), family in 0usize..4) {
        let family = [ParamFamily::C12, ParamFamily::D12, ParamFamily::D13, ParamFamily::D33][family];
        match param_k(family, &ParamArg::Scalar(t.clone())) {
            Ok((k, cert)) => prop_assert!(cert.verify(&k), "{} at {}", family, t),
            // only poles and the singular members are rejected
            Err(Error::Domain(_)) | Err(Error::SingularFamily(_)) => {}
            Err(e) => prop_assert!(false, "{} at {}: {}", family, t, e),
        }
    }
}

fn d14_points() -> &'static Vec<EPoint> {
    static PTS: OnceLock<Vec<EPoint>> = OnceLock::new();
    PTS.get_or_init(|| {
        let e = WeierstrassCurve::short(q(-12), q(0)).unwrap();
        let (p, r) = (EPoint::from_i64(-2, 4), EPoint::from_i64(-3, 3));
        let mut out = Vec::new();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                let s = e.add(&e.mul(&p, a).unwrap(), &e.mul(&r, b).unwrap()).unwrap();
                if s != EPoint::Identity {
                    out.push(s);
                }
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d14_certificates_verify(i in 0usize..64) {
        let pts = d14_points();
        let (x, y) = pts[i % pts.len()].coords().unwrap();
        match param_k(ParamFamily::D14, &ParamArg::Point(x.clone(), y.clone())) {
            Ok((k, cert)) => prop_assert!(cert.verify(&k)),
            Err(Error::Domain(_)) | Err(Error::SingularFamily(_)) => {}
            Err(e) => prop_assert!(false, "({}, {}): {}", x, y, e),
        }
    }

    #[test]
    fn thue_solutions_resubstitute(m in prop::sample::select(vec![1i64, -1, 3, 5, 9, 15, 27, 45, 135, -135])) {
        let form = ThueForm::from_i64(&CASE5_FORM).unwrap();
        let sols = thue_bounded(&form, &BigInt::from(m), 300);
        for &(u, v) in &sols {
            prop_assert_eq!(form.eval(&BigInt::from(u), &BigInt::from(v)), BigInt::from(m));
            if form.is_even() {
                prop_assert!(sols.contains(&(-u, -v)));
            }
        }
    }

    #[test]
    fn twist_preserves_j(k in nonzero_k(), i in 0usize..3, d in prop::sample::select(vec![-15i64, -7, -3, -2, -1, 2, 3, 5, 6, 10])) {
        let e = QuarticCurve::from_int(k).unwrap().elliptic(CurveIndex::ALL[i]);
        let t = e.quadratic_twist(&q(d)).unwrap();
        prop_assert_eq!(e.j_invariant().unwrap(), t.j_invariant().unwrap());
    }

    #[test]
    fn generic_point_has_infinite_order(k in -10_000i64..=10_000) {
        prop_assume!(![-2, -1, 0].contains(&k));
        let (p, order) = e2_generic_point(&q(k)).unwrap();
        prop_assert!(order.is_none(), "{} has order {:?} at k = {}", p, order, k);
    }
}

fn model() -> impl Strategy<Value = SuperellipticModel> {
    (
        prop::sample::select(vec![-6i64, -3, -2, -1, 1, 2, 3, 5, 9]),
        prop::sample::select(vec![2u32, 4]),
        prop::collection::vec(-9i64..=9, 3..7),
    )
        .prop_filter_map("nonzero f", |(c, e, f)| SuperellipticModel::from_i64(c, e, &f).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn witnesses_lift(m in model(), p in prop::sample::select(vec![2u64, 3, 5, 7]), s in -50i64..=50) {
        let v = qp_soluble(&m, p, 30).unwrap();
        if let Some(w) = &v.witness {
            prop_assert_eq!(v.status, LocalStatus::Soluble);
            prop_assert!(witness_holds(&m, p, w, &BigInt::from(s)), "{} at {}: {:?}", m, p, w);
        }
    }

    #[test]
    fn verdicts_monotone_in_depth(m in model(), p in prop::sample::select(vec![2u64, 3, 5]), lo in 1u32..10, extra in 1u32..20) {
        let a = qp_soluble(&m, p, lo).unwrap();
        let b = qp_soluble(&m, p, lo + extra).unwrap();
        if a.status != LocalStatus::Unknown {
            prop_assert_eq!(a.status, b.status, "{} at {}", m, p);
        }
    }

    #[test]
    fn obvious_points_are_locally_soluble(c in prop::sample::select(vec![1i64, 2, 3, 5]), rest in prop::collection::vec(-9i64..=9, 2..5), p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        // f(0) = c, so (t, y) = (0, 1) is a rational point
        let mut f = vec![c];
        f.extend(rest);
        for e in [2, 4] {
            let m = SuperellipticModel::from_i64(c, e, &f).unwrap();
            prop_assert_eq!(qp_soluble(&m, p, 40).unwrap().status, LocalStatus::Soluble, "{} at {}", m, p);
        }
    }
}

#[test]
fn search_points_round_trip_through_every_map() {
    let h = HeightBound::new(15).unwrap();
    for k in (-10i64..=10).filter(|&k| k != 0) {
        let c = QuarticCurve::from_int(k).unwrap();
        for p in search_ck(&q(k), h).unwrap() {
            assert!(c.contains(&p));
            for i in CurveIndex::ALL {
                let img = c.phi(i, &p).unwrap();
                assert!(c.elliptic(i).contains(&img));
                let pre = c.preimages(i, &img).unwrap();
                assert!(pre.contains(&p), "{p} not in preimages of {img} on {i} at k = {k}");
                if i == CurveIndex::E1 && img != EPoint::Identity {
                    assert!(pre.len() <= 2);
                }
            }
        }
    }
}

#[test]
fn search_is_monotone_in_height() {
    for k in [-8i64, -1, 1, 6, 135] {
        let lo = search_ck(&q(k), HeightBound::new(5).unwrap()).unwrap();
        let hi = search_ck(&q(k), HeightBound::new(20).unwrap()).unwrap();
        assert!(lo.is_subset(&hi), "k = {k}");
    }
}
