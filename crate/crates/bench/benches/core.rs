use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use num_bigint::BigInt;
use quartic_bench::{curve, order7_model, SPECIAL_K};
use quartic_core::algebra::q;
use quartic_core::cases::{case3, CASE5_FORM};
use quartic_core::classify::{classify, default_rank_facts};
use quartic_core::diophantine::{thue_bounded, ThueForm};
use quartic_core::ffcheck::count_curve_points;
use quartic_core::localsolve::qp_soluble;
use quartic_core::search::{search_ck, HeightBound};
use quartic_core::{CPoint, CurveIndex};

fn torsion(c: &mut Criterion) {
    let mut g = c.benchmark_group("torsion_subgroup");
    for k in SPECIAL_K {
        let e = curve(k).elliptic(CurveIndex::E1);
        g.bench_with_input(BenchmarkId::from_parameter(k), &e, |b, e| {
            b.iter(|| e.torsion_subgroup().unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search_ck");
    g.sample_size(10);
    for h in [10u64, 30, 100] {
        let hb = HeightBound::new(h).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(h), &hb, |b, &hb| {
            b.iter(|| search_ck(&q(1), black_box(hb)).unwrap())
        });
    }
    g.finish();
}

fn maps(c: &mut Criterion) {
    let k = curve(135);
    let p = CPoint::from_i64(-6, 3, 1).unwrap();
    let img = k.phi(CurveIndex::E3, &p).unwrap();
    c.bench_function("preimages_e3_k135", |b| {
        b.iter(|| k.preimages(CurveIndex::E3, black_box(&img)).unwrap())
    });
}

fn classification(c: &mut Criterion) {
    let facts = default_rank_facts();
    let h = HeightBound::new(30).unwrap();
    c.bench_function("classify_135", |b| {
        b.iter(|| classify(black_box(135), &facts, h).unwrap())
    });
}

fn diophantine(c: &mut Criterion) {
    let form = ThueForm::from_i64(&CASE5_FORM).unwrap();
    let mut g = c.benchmark_group("thue_bounded");
    g.sample_size(10);
    for bound in [100i64, 1000] {
        g.bench_with_input(BenchmarkId::from_parameter(bound), &bound, |b, &bound| {
            b.iter(|| thue_bounded(&form, &BigInt::from(135), bound))
        });
    }
    g.finish();
    c.bench_function("case3", |b| b.iter(|| case3().unwrap()));
}

fn local_and_finite(c: &mut Criterion) {
    let m = order7_model();
    c.bench_function("qp_soluble_order7_p3", |b| b.iter(|| qp_soluble(&m, 3, 40).unwrap()));
    let mut g = c.benchmark_group("count_curve_points_k7");
    for p in [53u64, 101, 211] {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| {
            b.iter(|| count_curve_points(7, p).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    torsion,
    search,
    maps,
    classification,
    diophantine,
    local_and_finite
);
criterion_main!(benches);
