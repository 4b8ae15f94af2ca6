//! Acceptance gate: one test per acceptance criterion, each printing a
//! single PASS/FAIL line. Run with `--nocapture` to see the lines.

use std::f64::consts::PI;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use constangle::{
    aperture, aperture_oracle, inscribed_arc, parabola_curve_y, polygon_inscribe,
    ray_bisection_trace, tangent_pair_trace, wedge_curve, Angle, ArcSide, ConvexShape, Point2,
    TangencyKind, TraceEntry, WedgeCase,
};
use constangle_cli::experiments::{convexity_scan, convexity_threshold, waveform_scan};

fn angle(r: f64) -> Angle {
    Angle::new(r).unwrap()
}

fn report(id: u32, what: &str, ok: bool) {
    println!("criterion {id:02} ({what}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {what}");
}

#[test]
fn criterion_01_parabola_closed_form() {
    let start = Instant::now();
    let mut ok = true;
    for &a in &[PI / 4.0, PI / 3.0, PI / 2.5, PI / 1.5, PI / 1.2] {
        for i in 0..201 {
            let x = -5.0 + 10.0 * i as f64 / 200.0;
            let y = parabola_curve_y(angle(a), x).unwrap();
            let got = aperture(&ConvexShape::ParabolaRegion, Point2::new(x, y)).angle;
            if (got - a).abs() > 1e-9 {
                ok = false;
            }
        }
    }
    ok &= start.elapsed().as_secs_f64() < 5.0;
    report(1, "explicit parabola curve has constant aperture", ok);
}

#[test]
fn criterion_02_directrix() {
    let mut ok = true;
    for i in 0..50 {
        let x = -20.0 + 40.0 * i as f64 / 49.0;
        ok &= parabola_curve_y(angle(PI / 2.0), x).unwrap() == -0.25;
    }
    let trace = ray_bisection_trace(
        &ConvexShape::ParabolaRegion,
        angle(PI / 2.0),
        Point2::new(0.0, 1.0),
        100,
        1e-8,
    )
    .unwrap();
    let mut hits = 0;
    for s in trace.samples() {
        if (s.point.y + 0.25).abs() > 1e-8 {
            ok = false;
        }
        hits += 1;
    }
    ok &= hits > 20;
    report(2, "right-angle curve is the directrix", ok);
}

#[test]
fn criterion_03_asymptote_slopes() {
    let mut ok = true;
    for &a in &[PI / 4.0, PI / 3.0, 2.0 * PI / 3.0] {
        let y = parabola_curve_y(angle(a), 1e6).unwrap();
        let want = 1.0 / a.tan().abs();
        ok &= (y.abs() / 1e6 - want).abs() < 1e-5;
    }
    report(3, "parabola curve approaches slope 1/|tan a| asymptotes", ok);
}

#[test]
fn criterion_04_director_circle() {
    let start = Instant::now();
    let e = ConvexShape::ellipse(2.0, 1.0).unwrap();
    let trace =
        ray_bisection_trace(&e, angle(PI / 2.0), Point2::new(0.0, 0.0), 360, 1e-9).unwrap();
    let r = 5.0f64.sqrt();
    let mut ok = trace.samples().count() == 360;
    for s in trace.samples() {
        if (s.point.norm() - r).abs() > 1e-9 {
            ok = false;
        }
    }
    ok &= start.elapsed().as_secs_f64() < 2.0;
    report(4, "right-angle ellipse curve is the radius sqrt(5) circle", ok);
}

#[test]
fn criterion_05_wedge_case_table() {
    let mut ok = true;
    for &theta in &[PI / 6.0, PI / 4.0, PI / 3.0] {
        for &a in &[PI / 6.0, PI / 4.0, PI / 3.0, PI / 2.0] {
            let w = ConvexShape::wedge(Point2::new(0.0, 0.0), theta, Point2::new(1.0, 0.0))
                .unwrap();
            let result = wedge_curve(angle(theta), angle(a));
            let expected_case = if a < theta - 1e-12 {
                WedgeCase::Empty
            } else if (a - theta).abs() <= 1e-12 {
                WedgeCase::OppositeWedge
            } else {
                WedgeCase::OppositeAngleRegion
            };
            ok &= result.case == expected_case;
            match result.case {
                WedgeCase::Empty => {
                    // No exterior point may see the wedge below theta.
                    for &(x, y) in &[(-3.0, 0.0), (0.0, 5.0), (2.0, -2.0)] {
                        let p = Point2::new(x, y);
                        if !w.contains(p) {
                            ok &= aperture(&w, p).angle >= theta - 1e-12;
                        }
                    }
                }
                _ => {
                    let half = result.region_angle.unwrap().radians() / 2.0;
                    let base = result.bisector_direction.angle();
                    let dirs: Vec<f64> = match result.case {
                        WedgeCase::OppositeWedge => {
                            vec![base, base - 0.9 * half, base + 0.5 * half, base + half]
                        }
                        _ => vec![base - half, base + half],
                    };
                    for d in dirs {
                        for &r in &[0.3, 2.0, 25.0] {
                            let p = Point2::from_angle(d).scale(r);
                            ok &= (aperture(&w, p).angle - a).abs() <= 1e-12;
                        }
                    }
                }
            }
        }
    }
    report(5, "wedge curve case analysis is exact", ok);
}

#[test]
fn criterion_06_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let shapes = vec![
        ConvexShape::ellipse(2.0, 1.0).unwrap(),
        ConvexShape::SineArch,
        polygon_inscribe(&ConvexShape::ellipse(1.5, 0.8).unwrap(), 11).unwrap(),
        ConvexShape::ParabolaRegion,
        ConvexShape::wedge(Point2::new(0.0, 0.0), PI / 3.0, Point2::new(1.0, 1.0)).unwrap(),
    ];
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for shape in &shapes {
        let bounded = shape.is_bounded();
        let (tol, n_samples) = if bounded { (1e-3, 20_000) } else { (1e-2, 50_001) };
        let mut tested = 0;
        while tested < 200 {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = if bounded {
                rng.gen_range(2.5..40.0)
            } else {
                rng.gen_range(1.5..5.0)
            };
            let p = Point2::from_angle(t).scale(r);
            if shape.contains(p) {
                continue;
            }
            tested += 1;
            let exact = aperture(shape, p).angle;
            let approx = aperture_oracle(shape, p, n_samples, Some(1e3)).unwrap();
            let diff = (exact - approx).abs();
            worst = worst.max(diff / tol);
            if diff > tol {
                ok = false;
            }
        }
    }
    ok &= start.elapsed().as_secs_f64() < 60.0;
    report(6, "support-line aperture matches the sampling oracle", ok);
}

#[test]
fn criterion_07_method_agreement() {
    let graph = constangle::FunctionGraph::new(
        std::sync::Arc::new(|x: f64| x * x),
        std::sync::Arc::new(|x: f64| 2.0 * x),
        std::sync::Arc::new(|_| 2.0),
        -10.0,
        10.0,
    )
    .unwrap();
    let graph_shape = ConvexShape::function_graph(graph);
    let mut ok = true;
    for &a in &[PI / 4.0, PI / 2.2, 2.0 * PI / 3.0] {
        let alpha = angle(a);
        // Tangent-pair trace on the parabola graph against the closed
        // form. The wide grid covers the left-tangency abscissae of all
        // three angles.
        let grid: Vec<f64> = (0..100).map(|i| -8.0 + 16.0 * i as f64 / 99.0).collect();
        let trace = tangent_pair_trace(&graph_shape, alpha, &grid, 1e-9).unwrap();
        let mut compared = 0;
        for s in trace.samples() {
            if s.tangency_kinds
                == Some((TangencyKind::SmoothPoint, TangencyKind::SmoothPoint))
                && s.point.x.abs() <= 3.0
            {
                let y = parabola_curve_y(alpha, s.point.x).unwrap();
                if (s.point.y - y).abs() > 1e-7 {
                    ok = false;
                }
                compared += 1;
            }
        }
        ok &= compared >= 25;
        // Ray-bisection trace on the true parabola region against the
        // closed form.
        let trace = ray_bisection_trace(
            &ConvexShape::ParabolaRegion,
            alpha,
            Point2::new(0.0, 1.0),
            100,
            1e-8,
        )
        .unwrap();
        let mut compared = 0;
        for s in trace.samples() {
            let y = parabola_curve_y(alpha, s.point.x).unwrap();
            if (s.point.y - y).abs() > 1e-7 {
                ok = false;
            }
            compared += 1;
        }
        ok &= compared >= 20;
    }
    report(7, "newton, bisection and closed-form traces agree", ok);
}

#[test]
fn criterion_08_sine_waveform() {
    let start = Instant::now();
    let rows = waveform_scan(1.80, 2.00, 0.005, 512, 1e-8).unwrap();
    let concave_tol = 1e-7;
    let at = |alpha: f64| {
        rows.iter()
            .min_by(|x, y| {
                (x.0 - alpha).abs().partial_cmp(&(y.0 - alpha).abs()).unwrap()
            })
            .unwrap()
    };
    let mut ok = at(1.80).1 <= concave_tol;
    ok &= at(1.93).1 > concave_tol;
    let min_wave = rows
        .iter()
        .filter(|(_, amp, _)| *amp > concave_tol)
        .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
        .map(|(al, _, _)| *al);
    ok &= matches!(min_wave, Some(a) if (1.85..=1.95).contains(&a));
    ok &= start.elapsed().as_secs_f64() < 120.0;
    report(8, "sine-arch central section: concavity onset and wave minimum", ok);
}

#[test]
fn criterion_09_ellipse_convexity_threshold() {
    let start = Instant::now();
    let ratios: Vec<f64> = (0..=40).map(|k| 0.60 + 0.005 * k as f64).collect();
    let rows = convexity_scan(&ratios, 60, 240, 1e-8).unwrap();
    let threshold = convexity_threshold(&rows);
    let mut ok = matches!(threshold, Some(t) if (0.687..=0.727).contains(&t));
    ok &= start.elapsed().as_secs_f64() < 300.0;
    report(9, "ellipse curves turn all-convex near axis ratio sqrt(2)/2", ok);
}

#[test]
fn criterion_10_inscribed_arcs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut ok = true;
    let seen = |p: Point2, a: Point2, b: Point2| {
        let d = constangle::geom::ccw_arc(a.sub(p).angle(), b.sub(p).angle());
        d.min(std::f64::consts::TAU - d)
    };
    for _ in 0..10 {
        let a = Point2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let b = Point2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        if a.dist(b) < 0.5 {
            continue;
        }
        let alpha = rng.gen_range(0.3..2.8);
        for side in [ArcSide::Below, ArcSide::Above] {
            let arc = inscribed_arc(a, b, angle(alpha), side).unwrap();
            for k in 1..50 {
                let p = arc.point_at(k as f64 / 50.0);
                if (seen(p, a, b) - alpha).abs() > 1e-9 {
                    ok = false;
                }
            }
        }
        // Thales: the right-angle locus is the circle on AB as diameter.
        let arc = inscribed_arc(a, b, angle(PI / 2.0), ArcSide::Below).unwrap();
        ok &= arc.center.dist(a.add(b).scale(0.5)) <= 1e-12;
        for k in 1..50 {
            let p = arc.point_at(k as f64 / 50.0);
            if (seen(p, a, b) - PI / 2.0).abs() > 1e-12 {
                ok = false;
            }
        }
    }
    report(10, "inscribed-angle arcs see their segment at the set angle", ok);
}

#[test]
fn criterion_11_polygon_convergence() {
    let shape = ConvexShape::ellipse(2.0, 1.0).unwrap();
    let alpha = angle(PI / 2.0);
    let smooth =
        ray_bisection_trace(&shape, alpha, Point2::new(0.0, 0.0), 360, 1e-8).unwrap();
    let smooth_pts: Vec<Point2> = smooth.samples().map(|s| s.point).collect();
    let mut distances = Vec::new();
    let mut ok = true;
    for n in [8usize, 16, 32, 64, 128] {
        let poly = polygon_inscribe(&shape, n).unwrap();
        let trace =
            ray_bisection_trace(&poly, alpha, Point2::new(0.0, 0.0), 360, 1e-8).unwrap();
        ok &= trace
            .entries
            .iter()
            .all(|e| matches!(e, TraceEntry::Sample(_)));
        let pts: Vec<Point2> = trace.samples().map(|s| s.point).collect();
        distances.push(constangle::hausdorff_distance(&pts, &smooth_pts));
    }
    ok &= distances.windows(2).all(|w| w[1] < w[0]);
    ok &= *distances.last().unwrap() < 1e-2;
    report(11, "inscribed-polygon curves converge to the smooth one", ok);
}
