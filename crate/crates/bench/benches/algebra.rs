use altkit::identities::{IdentityContext, IdentityKind};
use altkit::lie::{check_jacobi, lieify};
use altkit::sampling::{self, sample_coords};
use altkit::units::{solve_units_sampled, NewtonOptions};
use altkit::{catalog, check_identity, classify_middle_c, classify_tp_lie, q, Rational};
use altkit_bench::{ak, representatives, tn_mplus};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiply");
    for k in [1, 3, 5] {
        let a = ak(k);
        let mut rng = sampling::rng(0);
        let x = a.element(sample_coords::<Rational>(a.dim(), &mut rng)).unwrap();
        let y = a.element(sample_coords::<Rational>(a.dim(), &mut rng)).unwrap();
        g.bench_with_input(BenchmarkId::new("ak-exact", k), &k, |b, _| b.iter(|| a.mul(black_box(&x), black_box(&y)).unwrap()));
        let f = a.to_float(1e-9);
        let (xf, yf) = (f.element(x.coords().iter().map(altkit::Scalar::to_f64).collect()).unwrap(), f.element(y.coords().iter().map(altkit::Scalar::to_f64).collect()).unwrap());
        g.bench_with_input(BenchmarkId::new("ak-float", k), &k, |b, _| b.iter(|| f.mul(black_box(&xf), black_box(&yf)).unwrap()));
    }
    g.finish();
}

fn identities(c: &mut Criterion) {
    let none = IdentityContext::none();
    let mut g = c.benchmark_group("identity");
    for (name, alg) in representatives() {
        g.bench_function(BenchmarkId::new("associative", &name), |b| {
            b.iter(|| check_identity(black_box(&alg), IdentityKind::Associative, &none).unwrap())
        });
    }
    g.finish();
}

fn units(c: &mut Criterion) {
    let h = catalog::quaternions();
    let opts = NewtonOptions { seeds: 50, ..Default::default() };
    c.bench_function("newton-units-quaternions-50", |b| b.iter(|| solve_units_sampled(black_box(&h), &opts).unwrap()));
}

fn classification(c: &mut Criterion) {
    let p = tn_mplus();
    c.bench_function("classify-middle-c", |b| b.iter(|| classify_middle_c(black_box(&p), 1e-9, 0).unwrap()));
    c.bench_function("classify-tp-lie", |b| b.iter(|| classify_tp_lie(black_box(&q(3, 1)), black_box(&q(-5, 1))).unwrap()));
    let l = lieify(&catalog::quaternions());
    c.bench_function("jacobi-quaternions", |b| b.iter(|| check_jacobi(black_box(&l))));
}

criterion_group!(benches, multiply, identities, units, classification);
criterion_main!(benches);
