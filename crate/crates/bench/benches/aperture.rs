use criterion::{black_box, criterion_group, criterion_main, Criterion};

use constangle::{aperture, ConvexShape, Point2};

fn bench_aperture(c: &mut Criterion) {
    let shapes = [
        ("parabola", ConvexShape::ParabolaRegion),
        ("ellipse", ConvexShape::ellipse(2.0, 1.0).unwrap()),
        ("sine", ConvexShape::SineArch),
        (
            "polygon64",
            constangle::polygon_inscribe(&ConvexShape::ellipse(2.0, 1.0).unwrap(), 64).unwrap(),
        ),
    ];
    let x = Point2::new(4.0, -3.0);
    for (name, shape) in &shapes {
        c.bench_function(&format!("aperture/{name}"), |b| {
            b.iter(|| aperture(black_box(shape), black_box(x)).angle)
        });
    }
}

criterion_group!(benches, bench_aperture);
criterion_main!(benches);
