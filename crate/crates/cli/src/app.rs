//! Command-line front end: traces constant-aperture curves, evaluates
//! apertures with an optional brute-force cross-check, and runs the three
//! numerical experiments.

use crate::{experiments, shape_arg};

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index::sample as index_sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use constangle::trace_io::{trace_to_csv, trace_to_json, trace_to_svg, wedge_region_to_json};
use constangle::{
    aperture, aperture_oracle, director_circle, parabola_curve_y, ray_bisection_trace,
    tangent_pair_trace, wedge_curve_at, Angle, ConvexShape, CurveSample, CurveTrace, Point2,
    TraceEntry, TraceMethod, WedgeCase,
};

#[derive(Parser)]
#[command(
    name = "constangle",
    version,
    about = "Curves of constant aperture (visibility) angle around convex plane sets"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace the level curve C(alpha, Q) and write CSV/SVG/JSON.
    Trace(TraceArgs),
    /// Evaluate the aperture angle of one point.
    Aperture(ApertureArgs),
    /// Run one of the numerical experiments.
    #[command(subcommand)]
    Experiment(experiments::ExperimentCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Analytic,
    Newton,
    Bisect,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// Parabola region, seven angles from pi/4 up to pi/1.2.
    Fig3,
    /// Sine arch, ten angles pi/(1 + 0.1 k).
    Fig5,
    /// Sine arch, twenty angles across [1.92, 1.95].
    Fig6,
}

#[derive(Args)]
struct TraceArgs {
    /// Shape JSON, or @file containing it.
    #[arg(long)]
    shape: Option<String>,
    /// Aperture angle(s) in radians.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    /// Named shape+angle family; overrides --shape/--alpha.
    #[arg(long)]
    preset: Option<Preset>,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Sample count per curve.
    #[arg(long, default_value_t = 256)]
    samples: usize,
    /// Residual tolerance gating every emitted sample.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output path; with several angles an index is inserted before the
    /// extension. Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cross-check a random subset of samples against the sampling oracle.
    #[arg(long)]
    verify: bool,
    /// Seed for the --verify subset selection.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ApertureArgs {
    #[arg(long)]
    shape: String,
    /// Query point as "x,y".
    #[arg(long)]
    point: String,
    /// Also run the brute-force oracle cross-check.
    #[arg(long)]
    verify: bool,
    /// Oracle boundary sample count.
    #[arg(long, default_value_t = 20_000)]
    samples: usize,
}

pub fn run() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Trace(args) => cmd_trace(args),
        Cmd::Aperture(args) => cmd_aperture(args),
        Cmd::Experiment(cmd) => experiments::run(cmd),
    }
}

pub(crate) fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::FAILURE
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("point '{s}' must be 'x,y'"));
    }
    let x: f64 = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let y: f64 = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Point2::new(x, y))
}

fn preset_config(p: Preset) -> (ConvexShape, Vec<f64>) {
    match p {
        Preset::Fig3 => (
            ConvexShape::ParabolaRegion,
            [4.0, 3.5, 3.0, 2.5, 2.0, 1.5, 1.2]
                .iter()
                .map(|d| PI / d)
                .collect(),
        ),
        Preset::Fig5 => (
            ConvexShape::SineArch,
            (1..=10).map(|k| PI / (1.0 + 0.1 * k as f64)).collect(),
        ),
        Preset::Fig6 => (
            ConvexShape::SineArch,
            (0..20)
                .map(|k| 1.92 + 0.03 * k as f64 / 19.0)
                .collect(),
        ),
    }
}

/// Interior reference point used by the ray-bisection tracer.
pub fn reference_point(shape: &ConvexShape) -> Point2 {
    match shape {
        ConvexShape::Wedge { apex, bisector, .. } => apex.add(bisector.scale(1.0)),
        ConvexShape::ParabolaRegion => Point2::new(0.0, 1.0),
        ConvexShape::Ellipse { .. } => Point2::new(0.0, 0.0),
        ConvexShape::SineArch => Point2::new(PI / 2.0, -0.5),
        ConvexShape::Polygon { vertices } => {
            let n = vertices.len() as f64;
            vertices
                .iter()
                .fold(Point2::new(0.0, 0.0), |acc, v| acc.add(*v))
                .scale(1.0 / n)
        }
        ConvexShape::FunctionGraph(g) => {
            let mid = 0.5 * (g.a_dom + g.b_dom);
            Point2::new(mid, g.eval(mid) + 1.0)
        }
    }
}

fn auto_method(shape: &ConvexShape, alpha: Angle) -> MethodArg {
    match shape {
        ConvexShape::ParabolaRegion | ConvexShape::Wedge { .. } => MethodArg::Analytic,
        ConvexShape::Ellipse { .. } if alpha.is_right() => MethodArg::Analytic,
        ConvexShape::SineArch | ConvexShape::FunctionGraph(_) => MethodArg::Newton,
        _ => MethodArg::Bisect,
    }
}

fn verified_sample(shape: &ConvexShape, alpha: f64, param: f64, point: Point2) -> CurveSample {
    let a = aperture(shape, point);
    CurveSample {
        param,
        point,
        aperture_residual: (a.angle - alpha).abs(),
        tangency_kinds: a.tangent_solution.map(|s| (s.left.kind, s.right.kind)),
        region: None,
    }
}

/// Closed-form traces: the explicit parabola curve, the director circle,
/// and the symbolic wedge regions sampled along their rays.
fn analytic_trace(
    shape: &ConvexShape,
    alpha: Angle,
    samples: usize,
    tol: f64,
) -> Result<CurveTrace, String> {
    let a = alpha.radians();
    let mut entries = Vec::new();
    match shape {
        ConvexShape::ParabolaRegion => {
            let xmax = 5.0;
            for i in 0..samples {
                let x = -xmax + 2.0 * xmax * i as f64 / (samples - 1) as f64;
                let y = parabola_curve_y(alpha, x).map_err(|e| e.to_string())?;
                entries.push(TraceEntry::Sample(verified_sample(
                    shape,
                    a,
                    x,
                    Point2::new(x, y),
                )));
            }
        }
        ConvexShape::Ellipse { a: ea, b: eb } => {
            if !alpha.is_right() {
                return Err("no closed form for the ellipse away from alpha = pi/2".into());
            }
            let circle = director_circle(*ea, *eb);
            for i in 0..samples {
                let t = i as f64 / samples as f64;
                entries.push(TraceEntry::Sample(verified_sample(
                    shape,
                    a,
                    t * std::f64::consts::TAU,
                    circle.point_at(t),
                )));
            }
        }
        ConvexShape::Wedge { apex, theta, bisector } => {
            let result = wedge_curve_at(*apex, *bisector, *theta, alpha);
            if let Some(region) = result.region_angle {
                let half = region.radians() / 2.0;
                let base = result.bisector_direction.angle();
                let n = (samples / 2).max(2);
                // Two boundary rays, parameterized by signed distance from
                // the apex.
                for i in 0..n {
                    let r = 10.0 * (i + 1) as f64 / n as f64;
                    for (sgn, ang) in [(-1.0, base - half), (1.0, base + half)] {
                        entries.push(TraceEntry::Sample(verified_sample(
                            shape,
                            a,
                            sgn * r,
                            apex.add(Point2::from_angle(ang).scale(r)),
                        )));
                    }
                }
                entries.sort_by(|x, y| {
                    let p = |e: &TraceEntry| match e {
                        TraceEntry::Sample(s) => s.param,
                        TraceEntry::Gap { param } => *param,
                    };
                    p(x).partial_cmp(&p(y)).unwrap()
                });
            }
        }
        _ => return Err("no closed-form curve for this shape".into()),
    }
    Ok(CurveTrace {
        shape_id: shape.id(),
        alpha: a,
        method: TraceMethod::Analytic,
        tolerance: tol,
        entries,
        skipped: vec![],
    })
}

fn run_trace(
    shape: &ConvexShape,
    alpha: Angle,
    method: MethodArg,
    samples: usize,
    tol: f64,
) -> Result<CurveTrace, String> {
    let method = if method == MethodArg::Auto {
        auto_method(shape, alpha)
    } else {
        method
    };
    match method {
        MethodArg::Analytic => analytic_trace(shape, alpha, samples, tol),
        MethodArg::Newton => {
            let (a_dom, b_dom) = match shape {
                ConvexShape::SineArch => (0.0, PI),
                ConvexShape::FunctionGraph(g) => (g.a_dom, g.b_dom),
                _ => return Err("newton tracing requires a graph-like shape".into()),
            };
            // Open grid: tangents at the exact corner abscissae are
            // degenerate for the sine arch.
            let grid: Vec<f64> = (1..=samples)
                .map(|i| a_dom + (b_dom - a_dom) * i as f64 / (samples + 1) as f64)
                .collect();
            tangent_pair_trace(shape, alpha, &grid, tol).map_err(|e| e.to_string())
        }
        MethodArg::Bisect => {
            ray_bisection_trace(shape, alpha, reference_point(shape), samples, tol)
                .map_err(|e| e.to_string())
        }
        MethodArg::Auto => unreachable!(),
    }
}

/// Oracle cross-check on a seeded random subset of samples.
fn verify_trace(shape: &ConvexShape, trace: &CurveTrace, seed: u64) -> Result<(), String> {
    let samples: Vec<&CurveSample> = trace.samples().collect();
    if samples.is_empty() {
        return Ok(());
    }
    let oracle_tol = if shape.is_bounded() { 1e-2 } else { 3e-2 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = samples.len().min(16);
    for idx in index_sample(&mut rng, samples.len(), count) {
        let s = samples[idx];
        let got = aperture_oracle(shape, s.point, 20_000, None).map_err(|e| e.to_string())?;
        if (got - trace.alpha).abs() > oracle_tol {
            return Err(format!(
                "oracle disagrees at param {}: {} vs alpha {}",
                s.param, got, trace.alpha
            ));
        }
    }
    Ok(())
}

fn render(trace: &CurveTrace, shape: &ConvexShape, alpha: Angle, format: FormatArg) -> String {
    match format {
        FormatArg::Csv => trace_to_csv(trace),
        FormatArg::Svg => trace_to_svg(trace),
        FormatArg::Json => {
            // The wedge curve has an exact symbolic description; JSON
            // output reports it instead of point samples.
            if let ConvexShape::Wedge { apex, theta, bisector } = shape {
                let w = wedge_curve_at(*apex, *bisector, *theta, alpha);
                let mut v = wedge_region_to_json(&w);
                v["alpha"] = trace.alpha.into();
                if w.case == WedgeCase::Empty {
                    v["note"] = "curve is empty: alpha below the wedge angle".into();
                }
                return format!("{}\n", serde_json::to_string_pretty(&v).unwrap());
            }
            format!(
                "{}\n",
                serde_json::to_string_pretty(&trace_to_json(trace)).unwrap()
            )
        }
    }
}

fn indexed_path(base: &Path, i: usize, many: bool) -> PathBuf {
    if !many {
        return base.to_path_buf();
    }
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("trace");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("dat");
    base.with_file_name(format!("{stem}_{i:02}.{ext}"))
}

fn cmd_trace(args: TraceArgs) -> ExitCode {
    let (shape, alphas) = if let Some(p) = args.preset {
        preset_config(p)
    } else {
        let Some(shape_arg) = args.shape.as_deref() else {
            return fail("either --shape or --preset is required");
        };
        let shape = match shape_arg::parse_shape(shape_arg) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        if args.alpha.is_empty() {
            return fail("at least one --alpha is required");
        }
        (shape, args.alpha.clone())
    };
    if args.samples < 2 {
        return fail("--samples must be at least 2");
    }
    let mut all_ok = true;
    for (i, &alpha_raw) in alphas.iter().enumerate() {
        let alpha = match Angle::new(alpha_raw) {
            Ok(a) if a.radians() > 0.0 => a,
            _ => return fail(&format!("alpha {alpha_raw} must lie in (0, pi)")),
        };
        let trace = match run_trace(&shape, alpha, args.method, args.samples, args.tol) {
            Ok(t) => t,
            Err(e) => return fail(&e),
        };
        if trace.max_residual() > args.tol {
            eprintln!(
                "warning: alpha {alpha_raw}: max residual {} exceeds tolerance {}",
                trace.max_residual(),
                args.tol
            );
            all_ok = false;
        }
        for (param, why) in &trace.skipped {
            eprintln!("warning: alpha {alpha_raw}: skipped param {param}: {why}");
        }
        if args.verify {
            if let Err(e) = verify_trace(&shape, &trace, args.seed) {
                eprintln!("warning: alpha {alpha_raw}: {e}");
                all_ok = false;
            }
        }
        let rendered = render(&trace, &shape, alpha, args.format);
        match &args.out {
            Some(path) => {
                let path = indexed_path(path, i, alphas.len() > 1);
                if let Err(e) = std::fs::write(&path, rendered) {
                    return fail(&format!("cannot write {}: {e}", path.display()));
                }
            }
            None => print!("{rendered}"),
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_aperture(args: ApertureArgs) -> ExitCode {
    let shape = match shape_arg::parse_shape(&args.shape) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let point = match parse_point(&args.point) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    let result = aperture(&shape, point);
    if result.inside {
        return fail("point lies inside the shape; the aperture is trivially pi");
    }
    println!(
        "aperture: {:.12} rad ({:.8} deg)",
        result.angle,
        result.angle.to_degrees()
    );
    match &result.tangent_solution {
        Some(sol) => {
            println!(
                "left tangency:  {:?} at ({:.12}, {:.12})",
                sol.left.kind, sol.left.point.x, sol.left.point.y
            );
            println!(
                "right tangency: {:?} at ({:.12}, {:.12})",
                sol.right.kind, sol.right.point.x, sol.right.point.y
            );
        }
        None => println!("tangencies: none (wedge supporting lines pass through the apex)"),
    }
    if args.verify {
        match aperture_oracle(&shape, point, args.samples.max(100), None) {
            Ok(got) => {
                let diff = (got - result.angle).abs();
                println!("oracle: {got:.12} rad (|diff| = {diff:.3e})");
                let tol = if shape.is_bounded() { 1e-2 } else { 3e-2 };
                if diff > tol {
                    return fail("oracle cross-check failed");
                }
            }
            Err(e) => return fail(&e.to_string()),
        }
    }
    ExitCode::SUCCESS
}
