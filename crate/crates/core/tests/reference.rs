mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use quartic_core::algebra::{q, rational_roots, Polynomial, Rational};
use quartic_core::cases::{run_case, CaseTarget};
use quartic_core::classify::{default_rank_facts, refute_rank_zero, Branch, RankCheck};
use quartic_core::search::{search_ck, HeightBound};
use quartic_core::{classify, CPoint, CurveIndex, QuarticCurve, Status};

#[test]
fn table_points_at_height_ten() {
    let h = HeightBound::new(10).unwrap();
    for k in (-10i64..=10).filter(|&k| k != 0) {
        let found = search_ck(&q(k), h).unwrap();
        assert_eq!(found, with_infinity(table_points(k)), "k = {k}");
    }
}

#[test]
fn classification_examples() {
    let facts = default_rank_facts();
    for (k, expected) in classification_points() {
        let r = classify(k, &facts, HeightBound::new(30).unwrap()).unwrap();
        assert_eq!(r.status, Status::Classified, "k = {k}");
        assert_eq!(r.points, expected, "k = {k}");
        assert!(r.certificate.branch_consistent, "k = {k}");
    }
}

#[test]
fn classification_matches_table_at_default_height() {
    let facts = default_rank_facts();
    for k in (-10i64..=10).filter(|&k| k != 0) {
        let r = classify(k, &facts, HeightBound::DEFAULT).unwrap();
        if facts.iter().any(|f| f.k == k && f.rank == 0) {
            assert_eq!(r.status, Status::Classified, "k = {k}");
            assert_eq!(r.points, with_infinity(table_points(k)), "k = {k}");
        } else {
            assert_eq!(r.status, Status::NeedsRankFact, "k = {k}");
        }
    }
}

#[test]
fn classification_invariants() {
    let facts = default_rank_facts();
    let h = HeightBound::new(40).unwrap();
    let ks: BTreeSet<i64> = facts.iter().map(|f| f.k).collect();
    for k in ks {
        let r = classify(k, &facts, h).unwrap();
        assert!(r.points.contains(&CPoint::infinity_x()) && r.points.contains(&CPoint::infinity_y()));
        let swapped: BTreeSet<CPoint> = r.points.iter().map(CPoint::swapped).collect();
        assert_eq!(swapped, r.points, "k = {k}");
        if r.status != Status::Classified {
            continue;
        }
        if let Branch::Diagonal { a } = r.branch {
            assert!(r.points.contains(&CPoint::from_i64(a, a, 1).unwrap()), "k = {k}");
        }
        for f in &r.certificate.facts_used {
            assert_eq!(refute_rank_zero(k, f.i, h).unwrap(), RankCheck::ConfirmedTentative);
        }
    }
}

#[test]
fn torsion_table() {
    for &(k, _) in TORSION_TABLE {
        let c = QuarticCurve::from_int(k).unwrap();
        let got = CurveIndex::ALL.map(|i| c.elliptic(i).torsion_subgroup().unwrap().structure);
        assert_eq!(got, torsion_row(k), "k = {k}");
    }
}

#[test]
fn torsion_points_are_roots_of_division_polynomials() {
    for &(k, _) in TORSION_TABLE {
        let c = QuarticCurve::from_int(k).unwrap();
        for i in CurveIndex::ALL {
            let e = c.elliptic(i);
            let t = e.torsion_subgroup().unwrap();
            for p in &t.points {
                assert!(e.contains(p));
                let n = e.point_order(p).unwrap().unwrap();
                assert!(e.mul(p, n as i64).unwrap().is_identity());
                if let Some((x, _)) = p.coords() {
                    let psi = e.division_polynomial(n).unwrap();
                    assert!(
                        num_traits::Zero::is_zero(&psi.eval(x)),
                        "{p} of order {n} on {i} at k = {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn case_values_carry_the_target_torsion() {
    for (n, order) in [(2u8, 2u32), (3, 3), (4, 4), (5, 5)] {
        for report in run_case(n).unwrap() {
            let curves: &[CurveIndex] = match report.target {
                CaseTarget::E1 => &[CurveIndex::E1],
                CaseTarget::E3 => &[CurveIndex::E3],
                CaseTarget::Both => &[CurveIndex::E1, CurveIndex::E3],
            };
            for k in report.integral_k_set.iter().filter(|k| **k != BigInt::from(0)) {
                let c = QuarticCurve::new(Rational::from_integer(k.clone())).unwrap();
                let hit = curves.iter().any(|&i| {
                    let s = c.elliptic(i).torsion_subgroup().unwrap().structure;
                    match s {
                        quartic_core::TorsionStructure::Cyclic(m) => m % order == 0,
                        quartic_core::TorsionStructure::TwoByTwoM(m) => (2 * m) % order == 0,
                    }
                });
                assert!(hit, "case {n}: k = {k} lacks a point of order {order}");
            }
        }
    }
}

#[test]
fn rational_roots_are_exhaustive_on_random_cubics() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        // (a x - b)(c x^2 + d x + e) with a random rational root b/a
        let (a, b) = (rng.gen_range(1i64..=12), rng.gen_range(-12i64..=12));
        let (c, d, e) = (
            rng.gen_range(1i64..=9),
            rng.gen_range(-9i64..=9),
            rng.gen_range(-9i64..=9),
        );
        let p = &Polynomial::<Rational>::from_i64(&[-b, a]) * &Polynomial::from_i64(&[e, d, c]);
        let roots = rational_roots(&p).unwrap();
        let coeffs = [-b * e, a * e - b * d, a * d - b * c, a * c];
        let lead = coeffs[3];
        let cst = coeffs.iter().find(|&&x| x != 0).unwrap().abs();
        let divs = |n: i64| (1..=n.max(1)).filter(move |d| n == 0 || n % d == 0);
        let mut brute = BTreeSet::new();
        for num in divs(cst).chain(std::iter::once(0)) {
            for den in divs(lead) {
                for s in [-1, 1] {
                    let r = Rational::new(BigInt::from(s * num), BigInt::from(den));
                    if num_traits::Zero::is_zero(&p.eval(&r)) {
                        brute.insert(r);
                    }
                }
            }
        }
        assert_eq!(roots, brute, "{p}");
        assert!(roots
            .iter()
            .all(|r| num_integer::Integer::gcd(r.numer(), r.denom()) == BigInt::from(1)));
    }
}
