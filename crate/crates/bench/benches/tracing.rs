use criterion::{criterion_group, criterion_main, Criterion};

use constangle::{ray_bisection_trace, tangent_pair_trace, Angle, ConvexShape, Point2};

fn bench_tracers(c: &mut Criterion) {
    let alpha = Angle::new(std::f64::consts::PI / 2.0).unwrap();
    let grid: Vec<f64> = (1..64)
        .map(|i| std::f64::consts::PI * i as f64 / 64.0)
        .collect();
    c.bench_function("trace/tangent_pair_sine_64", |b| {
        b.iter(|| tangent_pair_trace(&ConvexShape::SineArch, alpha, &grid, 1e-8).unwrap())
    });
    let ellipse = ConvexShape::ellipse(2.0, 1.0).unwrap();
    c.bench_function("trace/ray_bisect_ellipse_64", |b| {
        b.iter(|| {
            ray_bisection_trace(&ellipse, alpha, Point2::new(0.0, 0.0), 64, 1e-9).unwrap()
        })
    });
}

criterion_group!(benches, bench_tracers);
criterion_main!(benches);
