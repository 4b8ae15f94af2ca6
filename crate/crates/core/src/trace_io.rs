//! Serialization of traced curves and analytic results: CSV, SVG and JSON.

use serde_json::json;

use crate::analytic::{CircularArc, WedgeCase, WedgeCurveResult};
use crate::shapes::TangencyKind;
use crate::tracer::{CurveTrace, TraceEntry};

/// Deterministic float formatting with 17 significant digits, enough to
/// round-trip any f64 exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn kind_label(k: TangencyKind) -> &'static str {
    match k {
        TangencyKind::SmoothPoint => "smooth",
        TangencyKind::Corner => "corner",
    }
}

/// CSV rendering of a trace, LF line endings. Gap markers become rows with
/// empty coordinate columns.
pub fn trace_to_csv(trace: &CurveTrace) -> String {
    let mut out = String::from("param,x,y,aperture_residual,left_kind,right_kind,region\n");
    for e in &trace.entries {
        match e {
            TraceEntry::Gap { param } => {
                out.push_str(&fmt_f64(*param));
                out.push_str(",,,,,,\n");
            }
            TraceEntry::Sample(s) => {
                let (lk, rk) = match s.tangency_kinds {
                    Some((l, r)) => (kind_label(l), kind_label(r)),
                    None => ("", ""),
                };
                let region = s.region.map(|r| format!("{r:?}")).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    fmt_f64(s.param),
                    fmt_f64(s.point.x),
                    fmt_f64(s.point.y),
                    fmt_f64(s.aperture_residual),
                    lk,
                    rk,
                    region
                ));
            }
        }
    }
    out
}

/// SVG rendering: one polyline path per contiguous run of samples (gaps
/// split runs), 100 px per unit, y axis flipped to screen coordinates.
pub fn trace_to_svg(trace: &CurveTrace) -> String {
    const SCALE: f64 = 100.0;
    const MARGIN: f64 = 20.0;
    let mut segments: Vec<Vec<(f64, f64)>> = vec![Vec::new()];
    for e in &trace.entries {
        match e {
            TraceEntry::Gap { .. } => {
                if !segments.last().unwrap().is_empty() {
                    segments.push(Vec::new());
                }
            }
            TraceEntry::Sample(s) => {
                segments
                    .last_mut()
                    .unwrap()
                    .push((s.point.x * SCALE, -s.point.y * SCALE));
            }
        }
    }
    segments.retain(|s| !s.is_empty());
    let all: Vec<(f64, f64)> = segments.iter().flatten().copied().collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    if let Some(&(fx, fy)) = all.first() {
        (x0, y0, x1, y1) = (fx, fy, fx, fy);
        for &(x, y) in &all {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
    }
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.2} {:.2} {:.2} {:.2}\">\n",
        x0 - MARGIN,
        y0 - MARGIN,
        (x1 - x0) + 2.0 * MARGIN,
        (y1 - y0) + 2.0 * MARGIN
    );
    for seg in &segments {
        svg.push_str("  <path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"");
        for (i, &(x, y)) in seg.iter().enumerate() {
            let op = if i == 0 { 'M' } else { 'L' };
            svg.push_str(&format!("{op}{x:.4} {y:.4} "));
        }
        svg.push_str("\"/>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

/// JSON rendering of a trace.
pub fn trace_to_json(trace: &CurveTrace) -> serde_json::Value {
    serde_json::to_value(trace).expect("trace serialization cannot fail")
}

/// JSON rendering of a circular-arc analytic result.
pub fn arc_to_json(arc: &CircularArc) -> serde_json::Value {
    json!({
        "kind": "arc",
        "center": [arc.center.x, arc.center.y],
        "radius": arc.radius,
        "start_angle": arc.start_angle,
        "end_angle": arc.end_angle,
    })
}

/// JSON rendering of the symbolic wedge result.
pub fn wedge_region_to_json(result: &WedgeCurveResult) -> serde_json::Value {
    let case = match result.case {
        WedgeCase::Empty => "empty",
        WedgeCase::OppositeWedge => "opposite_wedge",
        WedgeCase::OppositeAngleRegion => "opposite_angle_region",
    };
    json!({
        "kind": "wedge_region",
        "case": case,
        "region_angle": result.region_angle.map(|a| a.radians()),
        "apex": [result.apex.x, result.apex.y],
        "bisector_direction": [result.bisector_direction.x, result.bisector_direction.y],
    })
}
