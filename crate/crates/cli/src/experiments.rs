//! The three numerical experiments: sine waveform scan, ellipse convexity
//! threshold, and polygonal approximation convergence.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Subcommand};
use serde_json::json;

use constangle::{
    hausdorff_distance, polygon_inscribe, ray_bisection_trace, tangent_pair_trace, Angle,
    ConvexShape, CurveTrace, Point2, SineRegionLabel,
};

use crate::app::{fail, reference_point};
use crate::shape_arg;

#[derive(Subcommand)]
pub enum ExperimentCmd {
    /// Scan the sine-arch curves for central wave oscillations.
    Waveform(WaveformArgs),
    /// Find the axis ratio above which all ellipse curves are convex.
    EllipseConvexity(ConvexityArgs),
    /// Convergence of inscribed-polygon curves to the smooth-shape curve.
    PolygonConvergence(ConvergenceArgs),
}

#[derive(Args)]
pub struct WaveformArgs {
    #[arg(long, default_value_t = 1.80)]
    alpha_min: f64,
    #[arg(long, default_value_t = 2.00)]
    alpha_max: f64,
    #[arg(long, default_value_t = 0.005)]
    step: f64,
    #[arg(long, default_value_t = 512)]
    samples: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Amplitude below which the central section counts as concave.
    #[arg(long, default_value_t = 1e-7)]
    concave_tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ConvexityArgs {
    #[arg(long, default_value_t = 0.60)]
    ratio_min: f64,
    #[arg(long, default_value_t = 0.80)]
    ratio_max: f64,
    #[arg(long, default_value_t = 0.005)]
    ratio_step: f64,
    /// Number of aperture angles tested across (0, pi).
    #[arg(long, default_value_t = 60)]
    alpha_count: usize,
    /// Ray directions per traced curve.
    #[arg(long, default_value_t = 240)]
    directions: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ConvergenceArgs {
    /// Smooth shape to approximate (JSON or @file).
    #[arg(long, default_value = r#"{"kind":"ellipse","a":2,"b":1}"#)]
    shape: String,
    #[arg(long, default_value_t = PI / 2.0)]
    alpha: f64,
    #[arg(long, value_delimiter = ',', default_value = "8,16,32,64,128")]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 360)]
    directions: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(cmd: ExperimentCmd) -> ExitCode {
    let (report, ok, out) = match cmd {
        ExperimentCmd::Waveform(a) => {
            let out = a.out.clone();
            match waveform_report(&a) {
                Ok((r, ok)) => (r, ok, out),
                Err(e) => return fail(&e),
            }
        }
        ExperimentCmd::EllipseConvexity(a) => {
            let out = a.out.clone();
            match convexity_report(&a) {
                Ok((r, ok)) => (r, ok, out),
                Err(e) => return fail(&e),
            }
        }
        ExperimentCmd::PolygonConvergence(a) => {
            let out = a.out.clone();
            match convergence_report(&a) {
                Ok((r, ok)) => (r, ok, out),
                Err(e) => return fail(&e),
            }
        }
    };
    let text = format!("{}\n", serde_json::to_string_pretty(&report).unwrap());
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                return fail(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// Max vertical deviation of the points from their upper concave envelope
/// (the upper convex hull). Zero exactly when the section is concave.
pub fn wave_amplitude(points: &[Point2]) -> f64 {
    if points.len() < 3 {
        return 0.0;
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap());
    let mut hull: Vec<Point2> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            if a.sub(o).cross(p.sub(o)) >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let envelope_y = |x: f64| -> f64 {
        let i = hull.partition_point(|h| h.x < x).min(hull.len() - 1).max(1);
        let (a, b) = (hull[i - 1], hull[i]);
        if b.x == a.x {
            a.y.max(b.y)
        } else {
            a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)
        }
    };
    pts.iter()
        .map(|p| envelope_y(p.x) - p.y)
        .fold(0.0, f64::max)
}

/// Scan alpha over the grid, tracing the sine-arch curve and measuring the
/// oscillation amplitude of its smooth-tangency central section.
pub fn waveform_scan(
    alpha_min: f64,
    alpha_max: f64,
    step: f64,
    samples: usize,
    tol: f64,
) -> Result<Vec<(f64, f64, f64)>, String> {
    if !(alpha_min > PI / 2.0 && alpha_max < PI && alpha_min < alpha_max && step > 0.0) {
        return Err("waveform range must lie within (pi/2, pi)".into());
    }
    let grid: Vec<f64> = (1..=samples)
        .map(|i| PI * i as f64 / (samples + 1) as f64)
        .collect();
    let mut rows = Vec::new();
    let n_steps = ((alpha_max - alpha_min) / step).round() as usize;
    for k in 0..=n_steps {
        let alpha = alpha_min + step * k as f64;
        if alpha > alpha_max + 1e-12 {
            break;
        }
        let trace = tangent_pair_trace(
            &ConvexShape::SineArch,
            Angle::new(alpha).map_err(|e| e.to_string())?,
            &grid,
            tol,
        )
        .map_err(|e| e.to_string())?;
        let central: Vec<Point2> = trace
            .samples()
            .filter(|s| s.region == Some(SineRegionLabel::I))
            .map(|s| s.point)
            .collect();
        rows.push((alpha, wave_amplitude(&central), trace.max_residual()));
    }
    Ok(rows)
}

fn waveform_report(a: &WaveformArgs) -> Result<(serde_json::Value, bool), String> {
    let rows = waveform_scan(a.alpha_min, a.alpha_max, a.step, a.samples, a.tol)?;
    let ok = rows.iter().all(|(_, _, res)| *res <= a.tol);
    let verdict = |amp: f64| if amp <= a.concave_tol { "concave" } else { "waveform" };
    let onset = rows
        .iter()
        .find(|(_, amp, _)| *amp > a.concave_tol)
        .map(|(al, _, _)| *al);
    let min_wave = rows
        .iter()
        .filter(|(_, amp, _)| *amp > a.concave_tol)
        .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
        .map(|(al, _, _)| *al);
    let report = json!({
        "experiment": "waveform",
        "parameters": {
            "alpha_min": a.alpha_min,
            "alpha_max": a.alpha_max,
            "step": a.step,
            "samples": a.samples,
            "tolerance": a.tol,
            "concave_tol": a.concave_tol,
        },
        "per_alpha": rows.iter().map(|(al, amp, res)| json!({
            "alpha": al,
            "amplitude": amp,
            "verdict": verdict(*amp),
            "max_residual": res,
        })).collect::<Vec<_>>(),
        "concavity_onset_alpha": onset,
        "amplitude_minimizing_alpha": min_wave,
    });
    Ok((report, ok))
}

/// Cyclic convexity test for a closed traced polyline: all cross products
/// of consecutive edges must be nonnegative within a slack scaled by the
/// local edge lengths.
pub fn polyline_is_convex(points: &[Point2]) -> bool {
    let n = points.len();
    if n < 4 {
        return true;
    }
    for i in 0..n {
        let e1 = points[(i + 1) % n].sub(points[i]);
        let e2 = points[(i + 2) % n].sub(points[(i + 1) % n]);
        if e1.cross(e2) < -1e-9 * e1.norm() * e2.norm() {
            return false;
        }
    }
    true
}

fn closed_trace_points(trace: &CurveTrace) -> Result<Vec<Point2>, String> {
    if trace.samples().count() != trace.entries.len() {
        return Err("trace has gaps; expected a closed curve".into());
    }
    Ok(trace.samples().map(|s| s.point).collect())
}

/// For each axis ratio, test the convexity of every traced constant-angle
/// curve. Returns (ratio, all_convex, first_nonconvex_alpha, max_residual).
pub fn convexity_scan(
    ratios: &[f64],
    alpha_count: usize,
    directions: usize,
    tol: f64,
) -> Result<Vec<(f64, bool, Option<f64>, f64)>, String> {
    let mut rows = Vec::new();
    for &ratio in ratios {
        let shape = ConvexShape::ellipse(1.0, ratio).map_err(|e| e.to_string())?;
        let mut all_convex = true;
        let mut first_bad = None;
        let mut max_res = 0.0f64;
        for j in 0..alpha_count {
            let alpha = PI * (j + 1) as f64 / (alpha_count + 1) as f64;
            let trace = ray_bisection_trace(
                &shape,
                Angle::new(alpha).map_err(|e| e.to_string())?,
                Point2::new(0.0, 0.0),
                directions,
                tol,
            )
            .map_err(|e| e.to_string())?;
            max_res = max_res.max(trace.max_residual());
            let pts = closed_trace_points(&trace)?;
            if !polyline_is_convex(&pts) {
                all_convex = false;
                first_bad.get_or_insert(alpha);
            }
        }
        rows.push((ratio, all_convex, first_bad, max_res));
    }
    Ok(rows)
}

/// Smallest ratio from which every larger tested ratio yields only convex
/// curves.
pub fn convexity_threshold(rows: &[(f64, bool, Option<f64>, f64)]) -> Option<f64> {
    let mut threshold = None;
    for (ratio, all_convex, _, _) in rows.iter().rev() {
        if *all_convex {
            threshold = Some(*ratio);
        } else {
            break;
        }
    }
    threshold
}

fn convexity_report(a: &ConvexityArgs) -> Result<(serde_json::Value, bool), String> {
    if !(a.ratio_min > 0.0 && a.ratio_max <= 1.0 && a.ratio_min <= a.ratio_max) {
        return Err("ratios must lie in (0, 1]".into());
    }
    let n_steps = ((a.ratio_max - a.ratio_min) / a.ratio_step).round() as usize;
    let ratios: Vec<f64> = (0..=n_steps)
        .map(|k| a.ratio_min + a.ratio_step * k as f64)
        .collect();
    let rows = convexity_scan(&ratios, a.alpha_count, a.directions, a.tol)?;
    let ok = rows.iter().all(|(_, _, _, res)| *res <= a.tol);
    let report = json!({
        "experiment": "ellipse_convexity",
        "parameters": {
            "ratio_min": a.ratio_min,
            "ratio_max": a.ratio_max,
            "ratio_step": a.ratio_step,
            "alpha_count": a.alpha_count,
            "directions": a.directions,
            "tolerance": a.tol,
            "convexity_slack": 1e-9,
        },
        "per_ratio": rows.iter().map(|(r, c, bad, res)| json!({
            "ratio": r,
            "all_convex": c,
            "first_nonconvex_alpha": bad,
            "max_residual": res,
        })).collect::<Vec<_>>(),
        "convexity_threshold_ratio": convexity_threshold(&rows),
    });
    Ok((report, ok))
}

/// Hausdorff distances between the smooth-shape curve and the curves of
/// its inscribed n-gons.
pub fn convergence_distances(
    shape: &ConvexShape,
    alpha: Angle,
    n_list: &[usize],
    directions: usize,
    tol: f64,
) -> Result<(Vec<(usize, f64, f64)>, f64), String> {
    let reference = reference_point(shape);
    let smooth = ray_bisection_trace(shape, alpha, reference, directions, tol)
        .map_err(|e| e.to_string())?;
    let smooth_pts = closed_trace_points(&smooth)?;
    let mut rows = Vec::new();
    for &n in n_list {
        let poly = polygon_inscribe(shape, n).map_err(|e| e.to_string())?;
        let trace = ray_bisection_trace(&poly, alpha, reference, directions, tol)
            .map_err(|e| e.to_string())?;
        let pts = closed_trace_points(&trace)?;
        rows.push((n, hausdorff_distance(&pts, &smooth_pts), trace.max_residual()));
    }
    Ok((rows, smooth.max_residual()))
}

fn convergence_report(a: &ConvergenceArgs) -> Result<(serde_json::Value, bool), String> {
    let shape = shape_arg::parse_shape(&a.shape)?;
    let alpha = Angle::new(a.alpha).map_err(|e| e.to_string())?;
    let (rows, smooth_res) =
        convergence_distances(&shape, alpha, &a.n_list, a.directions, a.tol)?;
    let ok = smooth_res <= a.tol && rows.iter().all(|(_, _, res)| *res <= a.tol);
    let decreasing = rows.windows(2).all(|w| w[1].1 < w[0].1);
    let report = json!({
        "experiment": "polygon_convergence",
        "parameters": {
            "shape": shape.id(),
            "alpha": a.alpha,
            "n_list": a.n_list,
            "directions": a.directions,
            "tolerance": a.tol,
        },
        "per_n": rows.iter().map(|(n, d, res)| json!({
            "n": n,
            "hausdorff_distance": d,
            "max_residual": res,
        })).collect::<Vec<_>>(),
        "distances_strictly_decreasing": decreasing,
        "smooth_trace_max_residual": smooth_res,
    });
    Ok((report, ok))
}
