//! Numerical tracing of constant-aperture curves: the associated-tangent
//! Newton solver, the tangent-pair procedure for convex graphs and the
//! sine arch (with corner branches), and a generic ray-bisection level-set
//! tracer for any shape.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::aperture::aperture;
use crate::error::{Error, Result};
use crate::geom::{line_intersection, Angle, Point2, PI, TAU};
use crate::shapes::{ConvexShape, FunctionGraph, TangencyKind, SINE_CORNER_A, SINE_CORNER_B};

/// Default residual tolerance for emitted curve samples.
pub const DEFAULT_TRACE_TOL: f64 = 1e-8;
/// Radial search cap for ray bisection; beyond it a direction is reported
/// as unreachable.
pub const DEFAULT_SEARCH_RADIUS: f64 = 1e4;
pub const DEFAULT_MAX_BISECTIONS: usize = 200;

/// Absolute slack when testing that a corner line supports the shape.
const SUPPORT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceMethod {
    NewtonTangent,
    RayBisection,
    Analytic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SineRegionLabel {
    I,
    II,
    III,
    IV,
}

impl SineRegionLabel {
    /// Region from the (left, right) tangency kinds.
    pub fn from_kinds(kinds: (TangencyKind, TangencyKind)) -> SineRegionLabel {
        use TangencyKind::*;
        match kinds {
            (SmoothPoint, SmoothPoint) => SineRegionLabel::I,
            (Corner, Corner) => SineRegionLabel::II,
            (Corner, SmoothPoint) => SineRegionLabel::III,
            (SmoothPoint, Corner) => SineRegionLabel::IV,
        }
    }
}

/// One traced point of C(alpha, Q).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSample {
    /// Monotone tracing parameter: the direction angle of the left
    /// supporting line (tangent-pair traces) or the ray direction
    /// (ray-bisection traces).
    pub param: f64,
    pub point: Point2,
    pub aperture_residual: f64,
    pub tangency_kinds: Option<(TangencyKind, TangencyKind)>,
    pub region: Option<SineRegionLabel>,
}

/// A trace entry: either a verified sample or an explicit gap marker for a
/// direction in which the curve escapes to infinity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum TraceEntry {
    Sample(CurveSample),
    Gap { param: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveTrace {
    pub shape_id: String,
    pub alpha: f64,
    pub method: TraceMethod,
    pub tolerance: f64,
    pub entries: Vec<TraceEntry>,
    /// Parameters that produced no sample, with a diagnostic each.
    pub skipped: Vec<(f64, String)>,
}

impl CurveTrace {
    pub fn samples(&self) -> impl Iterator<Item = &CurveSample> {
        self.entries.iter().filter_map(|e| match e {
            TraceEntry::Sample(s) => Some(s),
            TraceEntry::Gap { .. } => None,
        })
    }

    pub fn max_residual(&self) -> f64 {
        self.samples()
            .map(|s| s.aperture_residual)
            .fold(0.0, f64::max)
    }
}

/// The associated-tangent problem: given a fixed tangency abscissa on a
/// convex graph and the aperture angle, find the abscissa whose tangent
/// slope equals M.
#[derive(Debug, Clone)]
pub struct NewtonProblem {
    graph: FunctionGraph,
    pub x_tilde: f64,
    pub alpha: Angle,
    pub m: f64,
}

impl NewtonProblem {
    pub fn new(graph: FunctionGraph, x_tilde: f64, alpha: Angle) -> Result<Self> {
        if !(graph.a_dom..=graph.b_dom).contains(&x_tilde) {
            return Err(Error::ParameterOutOfRange(x_tilde));
        }
        let k1 = graph.deriv(x_tilde);
        let m = if alpha.is_right() {
            -1.0 / k1
        } else {
            let k = alpha.tangent_k();
            let denom = 1.0 + k * k1;
            if denom.abs() <= 1e-12 * (1.0 + (k * k1).abs()) {
                // Perpendicular configuration: the slope algebra is
                // singular, fall back to direction angles.
                (k1.atan() - alpha.radians()).tan()
            } else {
                (k1 - k) / denom
            }
        };
        Ok(NewtonProblem { graph, x_tilde, alpha, m })
    }
}

/// Solve f'(x) = M on the graph domain with safeguarded Newton: steps that
/// leave the current sign-change bracket are replaced by bisection, so the
/// iteration never escapes [a_dom, b_dom].
pub fn associated_tangent(
    problem: &NewtonProblem,
    x0: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let g = &problem.graph;
    let m = problem.m;
    let (a, b) = (g.a_dom, g.b_dom);
    if !(a..=b).contains(&x0) {
        return Err(Error::ParameterOutOfRange(x0));
    }
    // f' is strictly increasing; no root unless M lies in its range.
    if !m.is_finite() || m < g.deriv(a) || m > g.deriv(b) {
        return Err(Error::NoRootInDomain(m));
    }
    let (mut lo, mut hi) = (a, b);
    let mut x = x0;
    for _ in 0..max_iter {
        let fx = g.deriv(x) - m;
        if fx.abs() <= tol {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let step = fx / g.deriv2(x);
        let mut next = x - step;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        x = next;
    }
    if (g.deriv(x) - m).abs() <= tol {
        Ok(x)
    } else {
        Err(Error::MaxIterationsExceeded(max_iter))
    }
}

/// Graph view of a shape traced by the tangent-pair procedure.
fn graph_view(shape: &ConvexShape) -> Result<FunctionGraph> {
    match shape {
        ConvexShape::FunctionGraph(g) => Ok(g.clone()),
        ConvexShape::SineArch => Ok(FunctionGraph::new_unchecked(
            Arc::new(|x: f64| -x.sin()),
            Arc::new(|x: f64| -x.cos()),
            Arc::new(|x: f64| x.sin()),
            0.0,
            PI,
        )),
        _ => Err(Error::InvalidShape(
            "tangent-pair tracing requires a function graph or the sine arch".into(),
        )),
    }
}

fn graph_corners(shape: &ConvexShape, g: &FunctionGraph) -> (Point2, Point2) {
    match shape {
        ConvexShape::SineArch => (SINE_CORNER_A, SINE_CORNER_B),
        _ => (
            Point2::new(g.a_dom, g.eval(g.a_dom)),
            Point2::new(g.b_dom, g.eval(g.b_dom)),
        ),
    }
}

/// Does the line through `point` with direction angle `dir` support the
/// shape? `normal` is the outward normal angle of the candidate line.
fn line_supports(shape: &ConvexShape, point: Point2, normal: f64) -> bool {
    let u = Point2::from_angle(normal);
    let h = shape.support(u);
    h.is_finite() && (h - point.dot(u)).abs() <= SUPPORT_TOL
}

/// The three-step tangent-pair procedure: for each grid abscissa, take the
/// tangent line there, find the associated tangent making the aperture
/// angle with it (or the corner line when the associated tangency leaves
/// the smooth domain), and intersect the two lines.
///
/// Samples are ordered by the direction angle of the left supporting line,
/// a parameter that increases monotonically along the curve and sweeps the
/// corner-A region first, then the smooth region, then the corner-B one.
pub fn tangent_pair_trace(
    shape: &ConvexShape,
    alpha: Angle,
    xi_grid: &[f64],
    tol: f64,
) -> Result<CurveTrace> {
    if alpha.radians() == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    let graph = graph_view(shape)?;
    let (corner_a, corner_b) = graph_corners(shape, &graph);
    let a = alpha.radians();
    let is_sine = matches!(shape, ConvexShape::SineArch);
    let mut samples: Vec<CurveSample> = Vec::new();
    let mut skipped: Vec<(f64, String)> = Vec::new();

    let push = |samples: &mut Vec<CurveSample>,
                    skipped: &mut Vec<(f64, String)>,
                    param: f64,
                    t1_point: Point2,
                    t1_dir: f64,
                    t2_point: Point2,
                    t2_dir: f64,
                    kinds: (TangencyKind, TangencyKind),
                    hard: bool| {
        let Some(t) = line_intersection(t1_point, t1_dir, t2_point, t2_dir) else {
            if hard {
                skipped.push((param, "tangent lines are parallel".into()));
            }
            return;
        };
        if shape.contains(t) {
            if hard {
                skipped.push((param, "intersection fell inside the shape".into()));
            }
            return;
        }
        let residual = (aperture(shape, t).angle - a).abs();
        if residual > tol {
            if hard {
                skipped.push((param, format!("aperture residual {residual:.3e} above tolerance")));
            }
            return;
        }
        samples.push(CurveSample {
            param,
            point: t,
            aperture_residual: residual,
            tangency_kinds: Some(kinds),
            region: is_sine.then(|| SineRegionLabel::from_kinds(kinds)),
        });
    };

    for &xi in xi_grid {
        if !(graph.a_dom..=graph.b_dom).contains(&xi) {
            skipped.push((xi, "grid abscissa outside the graph domain".into()));
            continue;
        }
        let p1 = Point2::new(xi, graph.eval(xi));
        let phi1 = graph.deriv(xi).atan();

        // Branch 1: xi is the left tangency; partner line to the right.
        let delta_l = phi1 + PI;
        let delta_r = delta_l - a;
        let problem = NewtonProblem::new(graph.clone(), xi, alpha)?;
        match associated_tangent(&problem, 0.5 * (graph.a_dom + graph.b_dom), 1e-13, 100) {
            Ok(xr) => {
                if xr > xi {
                    let p2 = Point2::new(xr, graph.eval(xr));
                    push(
                        &mut samples,
                        &mut skipped,
                        delta_l,
                        p1,
                        phi1,
                        p2,
                        graph.deriv(xr).atan(),
                        (TangencyKind::SmoothPoint, TangencyKind::SmoothPoint),
                        true,
                    );
                }
            }
            Err(Error::NoRootInDomain(_)) => {
                // Corner branch: the partner passes through whichever
                // corner the candidate line actually supports.
                if line_supports(shape, corner_b, delta_r - PI / 2.0) {
                    push(
                        &mut samples,
                        &mut skipped,
                        delta_l,
                        p1,
                        phi1,
                        corner_b,
                        delta_r,
                        (TangencyKind::SmoothPoint, TangencyKind::Corner),
                        true,
                    );
                }
            }
            Err(e) => skipped.push((xi, e.to_string())),
        }

        // Branch 2: xi is the right tangency and the left partner leaves
        // the smooth range through corner A. Smooth-smooth configurations
        // are already produced by branch 1 at their left abscissa.
        let delta_l2 = phi1 + a;
        let m_left = delta_l2.tan();
        let smooth_left =
            m_left.is_finite() && m_left > graph.deriv(graph.a_dom) && m_left < graph.deriv(graph.b_dom);
        if !smooth_left && line_supports(shape, corner_a, delta_l2 + PI / 2.0) {
            push(
                &mut samples,
                &mut skipped,
                delta_l2,
                p1,
                phi1,
                corner_a,
                delta_l2,
                (TangencyKind::Corner, TangencyKind::SmoothPoint),
                false,
            );
        }
    }

    samples.sort_by(|x, y| x.param.partial_cmp(&y.param).unwrap());
    Ok(CurveTrace {
        shape_id: shape.id(),
        alpha: a,
        method: TraceMethod::NewtonTangent,
        tolerance: tol,
        entries: samples.into_iter().map(TraceEntry::Sample).collect(),
        skipped,
    })
}

/// Generic level-set tracer: from a reference point, bisect along equally
/// spaced rays for the radius at which the aperture equals alpha.
/// Directions in which the aperture never drops to alpha within the search
/// radius produce explicit gap markers.
pub fn ray_bisection_trace(
    shape: &ConvexShape,
    alpha: Angle,
    reference: Point2,
    n_directions: usize,
    tol: f64,
) -> Result<CurveTrace> {
    let a = alpha.radians();
    if a == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    if !shape.contains(reference) {
        return Err(Error::ReferenceNotInterior);
    }
    let is_sine = matches!(shape, ConvexShape::SineArch);
    let mut entries = Vec::with_capacity(n_directions);
    let mut skipped = Vec::new();
    for k in 0..n_directions {
        let theta = TAU * k as f64 / n_directions as f64;
        let dir = Point2::from_angle(theta);
        let ap = |r: f64| aperture(shape, reference.add(dir.scale(r))).angle;
        // Expand until the aperture drops below alpha.
        let mut lo = 0.0;
        let mut hi = 1.0;
        let mut g_lo = PI - a;
        let mut reachable = true;
        loop {
            let g = ap(hi) - a;
            if g < 0.0 {
                break;
            }
            // Monotonicity guard: outside the shape the aperture must not
            // increase along the ray.
            if g_lo < PI - a && g > g_lo + 1e-9 {
                return Err(Error::NonBracketedRoot);
            }
            g_lo = g;
            lo = hi;
            hi *= 2.0;
            if hi > DEFAULT_SEARCH_RADIUS {
                reachable = false;
                break;
            }
        }
        if !reachable {
            entries.push(TraceEntry::Gap { param: theta });
            continue;
        }
        for _ in 0..DEFAULT_MAX_BISECTIONS {
            if hi - lo <= 1e-13 * hi.max(1.0) {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if ap(mid) - a >= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let r = 0.5 * (lo + hi);
        let point = reference.add(dir.scale(r));
        let residual = (ap(r) - a).abs();
        if residual > tol {
            skipped.push((theta, format!("residual {residual:.3e} above tolerance")));
            continue;
        }
        let kinds = shape
            .support_pair(point)
            .ok()
            .map(|p| (p.lo.locus.kind, p.hi.locus.kind));
        entries.push(TraceEntry::Sample(CurveSample {
            param: theta,
            point,
            aperture_residual: residual,
            tangency_kinds: kinds,
            region: if is_sine {
                kinds.map(SineRegionLabel::from_kinds)
            } else {
                None
            },
        }));
    }
    Ok(CurveTrace {
        shape_id: shape.id(),
        alpha: a,
        method: TraceMethod::RayBisection,
        tolerance: tol,
        entries,
        skipped,
    })
}

/// Region of the lower half-plane an exterior point falls in, per the
/// tangency kinds of its supporting lines.
pub fn classify_sine_region(x: Point2) -> Result<SineRegionLabel> {
    let shape = ConvexShape::SineArch;
    if shape.contains(x) {
        return Err(Error::PointInsideShape);
    }
    if x.y >= 0.0 {
        return Err(Error::AboveVisibilityHalfPlane);
    }
    let sol = shape.tangents_from(x)?;
    Ok(SineRegionLabel::from_kinds((sol.left.kind, sol.right.kind)))
}

/// Inscribed polygon with vertices at equally spaced boundary parameters.
/// For the sine arch the vertices sit on the bottom curve (corners
/// included) so the polygon closes with the segment AB.
pub fn polygon_inscribe(shape: &ConvexShape, n: usize) -> Result<ConvexShape> {
    if !shape.is_bounded() {
        return Err(Error::UnboundedShape);
    }
    if n < 3 {
        return Err(Error::InvalidShape("inscribed polygon needs n >= 3".into()));
    }
    let vertices: Vec<Point2> = match shape {
        ConvexShape::SineArch => (0..n)
            .map(|i| {
                let t = PI * i as f64 / (n - 1) as f64;
                Point2::new(t, -t.sin())
            })
            .collect(),
        _ => {
            let (t0, t1) = shape.param_range();
            (0..n)
                .map(|i| {
                    shape
                        .boundary_point(t0 + (t1 - t0) * i as f64 / n as f64)
                        .unwrap()
                })
                .collect()
        }
    };
    ConvexShape::polygon(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::parabola_curve_y;

    fn angle(r: f64) -> Angle {
        Angle::new(r).unwrap()
    }

    fn parabola_graph() -> FunctionGraph {
        FunctionGraph::new(
            Arc::new(|x: f64| x * x),
            Arc::new(|x: f64| 2.0 * x),
            Arc::new(|_x: f64| 2.0),
            -10.0,
            10.0,
        )
        .unwrap()
    }

    #[test]
    fn newton_exact_for_linear_derivative() {
        // f = x^2, x~ = 1, alpha = pi/4: M = (2-1)/(1+2) = 1/3, root 1/6.
        let p = NewtonProblem::new(parabola_graph(), 1.0, angle(PI / 4.0)).unwrap();
        assert!((p.m - 1.0 / 3.0).abs() < 1e-15);
        let x = associated_tangent(&p, 7.0, 1e-14, 100).unwrap();
        assert!((x - 1.0 / 6.0).abs() < 1e-13);
    }

    #[test]
    fn newton_quartic_case() {
        let g = FunctionGraph::new(
            Arc::new(|x: f64| x.powi(4)),
            Arc::new(|x: f64| 4.0 * x.powi(3)),
            Arc::new(|x: f64| 12.0 * x * x),
            0.1,
            2.0,
        )
        .unwrap();
        // Target slope 0.5 = 4 * 0.5^3.
        let mut p = NewtonProblem::new(g, 0.5, angle(PI / 4.0)).unwrap();
        p.m = 0.5;
        let x = associated_tangent(&p, 1.5, 1e-12, 100).unwrap();
        assert!((x - 0.5).abs() < 1e-10, "x = {x}");
    }

    #[test]
    fn newton_reports_missing_root() {
        let g = graph_view(&ConvexShape::SineArch).unwrap();
        let mut p = NewtonProblem::new(g, PI / 4.0, angle(PI / 4.0)).unwrap();
        p.m = 3.0; // outside f' range [-1, 1]
        assert!(matches!(
            associated_tangent(&p, 1.0, 1e-12, 100),
            Err(Error::NoRootInDomain(_))
        ));
    }

    #[test]
    fn tangent_pair_matches_parabola_closed_form() {
        let shape = ConvexShape::function_graph(parabola_graph());
        let grid: Vec<f64> = (0..64).map(|i| -3.0 + 6.0 * i as f64 / 63.0).collect();
        let trace = tangent_pair_trace(&shape, angle(PI / 4.0), &grid, 1e-8).unwrap();
        let mut checked = 0;
        for s in trace.samples() {
            if s.tangency_kinds == Some((TangencyKind::SmoothPoint, TangencyKind::SmoothPoint)) {
                let y = parabola_curve_y(angle(PI / 4.0), s.point.x).unwrap();
                assert!((s.point.y - y).abs() < 1e-9, "x={} dy={}", s.point.x, (s.point.y - y).abs());
                checked += 1;
            }
        }
        assert!(checked > 20, "only {checked} smooth samples");
    }

    #[test]
    fn sine_trace_is_symmetric_and_accurate() {
        let grid: Vec<f64> = (1..256).map(|i| PI * i as f64 / 256.0).collect();
        let trace = tangent_pair_trace(&ConvexShape::SineArch, angle(PI / 2.0), &grid, 1e-8).unwrap();
        assert!(trace.max_residual() <= 1e-8);
        let pts: Vec<Point2> = trace.samples().map(|s| s.point).collect();
        assert!(pts.len() > 100, "len {}", pts.len());
        // y(pi - x) = y(x): compare mirrored samples via nearest match.
        for p in pts.iter().step_by(7) {
            let mx = PI - p.x;
            let nearest = pts
                .iter()
                .map(|q| (q.x - mx).abs())
                .fold(f64::INFINITY, f64::min);
            if nearest < 1e-3 {
                let q = pts
                    .iter()
                    .min_by(|u, v| {
                        (u.x - mx).abs().partial_cmp(&(v.x - mx).abs()).unwrap()
                    })
                    .unwrap();
                assert!((q.y - p.y).abs() < 1e-4, "asymmetric at x={}", p.x);
            }
        }
    }

    #[test]
    fn sine_region_order_along_trace() {
        let grid: Vec<f64> = (1..512).map(|i| PI * i as f64 / 512.0).collect();
        let trace = tangent_pair_trace(&ConvexShape::SineArch, angle(1.9), &grid, 1e-8).unwrap();
        let regions: Vec<SineRegionLabel> = trace.samples().map(|s| s.region.unwrap()).collect();
        let mut seen = Vec::new();
        for r in regions {
            if seen.last() != Some(&r) {
                seen.push(r);
            }
        }
        assert_eq!(
            seen,
            vec![SineRegionLabel::III, SineRegionLabel::I, SineRegionLabel::IV]
        );
    }

    #[test]
    fn ray_bisection_director_circle() {
        let e = ConvexShape::ellipse(2.0, 1.0).unwrap();
        let trace =
            ray_bisection_trace(&e, angle(PI / 2.0), Point2::new(0.0, 0.0), 90, 1e-9).unwrap();
        let r = 5.0f64.sqrt();
        for s in trace.samples() {
            assert!((s.point.norm() - r).abs() < 1e-9, "param {}", s.param);
        }
        assert_eq!(trace.samples().count(), 90);
    }

    #[test]
    fn ray_bisection_circle_radius_formula() {
        let c = ConvexShape::ellipse(1.0, 1.0).unwrap();
        let alpha = angle(PI / 3.0);
        let trace =
            ray_bisection_trace(&c, alpha, Point2::new(0.0, 0.0), 36, 1e-9).unwrap();
        let expected = 1.0 / (PI / 6.0).sin();
        for s in trace.samples() {
            assert!((s.point.norm() - expected).abs() < 1e-8);
        }
    }

    #[test]
    fn ray_bisection_parabola_gaps_and_directrix_match() {
        let trace = ray_bisection_trace(
            &ConvexShape::ParabolaRegion,
            angle(PI / 3.0),
            Point2::new(0.0, 1.0),
            72,
            1e-8,
        )
        .unwrap();
        let mut gaps = 0;
        let mut matched = 0;
        for e in &trace.entries {
            match e {
                TraceEntry::Gap { .. } => gaps += 1,
                TraceEntry::Sample(s) => {
                    let y = parabola_curve_y(angle(PI / 3.0), s.point.x).unwrap();
                    assert!((s.point.y - y).abs() < 1e-7, "x={}", s.point.x);
                    matched += 1;
                }
            }
        }
        assert!(gaps > 0, "expected unreachable upward directions");
        assert!(matched > 20);
    }

    #[test]
    fn ray_bisection_rejects_exterior_reference() {
        let e = ConvexShape::ellipse(2.0, 1.0).unwrap();
        assert!(matches!(
            ray_bisection_trace(&e, angle(1.0), Point2::new(5.0, 0.0), 8, 1e-8),
            Err(Error::ReferenceNotInterior)
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_sine_region(Point2::new(PI / 2.0, -50.0)).unwrap(),
            SineRegionLabel::II
        );
        assert_eq!(
            classify_sine_region(Point2::new(PI / 2.0, -1.2)).unwrap(),
            SineRegionLabel::I
        );
        assert_eq!(
            classify_sine_region(Point2::new(0.1, -3.0)).unwrap(),
            SineRegionLabel::III
        );
        assert!(matches!(
            classify_sine_region(Point2::new(1.0, 0.5)),
            Err(Error::AboveVisibilityHalfPlane)
        ));
        assert!(matches!(
            classify_sine_region(Point2::new(1.0, -0.1)),
            Err(Error::PointInsideShape)
        ));
    }

    #[test]
    fn inscribe_square_in_circle() {
        let c = ConvexShape::ellipse(1.0, 1.0).unwrap();
        let p = polygon_inscribe(&c, 4).unwrap();
        let ConvexShape::Polygon { vertices } = &p else { panic!() };
        assert!(vertices[0].dist(Point2::new(1.0, 0.0)) < 1e-12);
        assert!(vertices[1].dist(Point2::new(0.0, 1.0)) < 1e-12);
        assert_eq!(vertices.len(), 4);
    }

    #[test]
    fn inscribe_sine_arch_closes_with_segment() {
        let p = polygon_inscribe(&ConvexShape::SineArch, 32).unwrap();
        let ConvexShape::Polygon { vertices } = &p else { panic!() };
        assert!(vertices[0].dist(SINE_CORNER_A) < 1e-12);
        assert!(vertices[31].dist(SINE_CORNER_B) < 1e-12);
    }

    #[test]
    fn inscribe_rejects_unbounded() {
        assert!(matches!(
            polygon_inscribe(&ConvexShape::ParabolaRegion, 8),
            Err(Error::UnboundedShape)
        ));
    }
}
