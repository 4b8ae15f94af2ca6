//! Convex-set abstraction: supported shapes, support functions, boundary
//! parameterizations and tangent (supporting) lines from exterior points.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ccw_arc, wrap_tau, Angle, Point2, Slope, PI, TAU};

/// Callable payload of a convex function graph.
pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Epigraph of a strictly convex C^2 function restricted to the vertical
/// strip over [a_dom, b_dom].
#[derive(Clone)]
pub struct FunctionGraph {
    f: RealFn,
    df: RealFn,
    ddf: RealFn,
    pub a_dom: f64,
    pub b_dom: f64,
}

impl fmt::Debug for FunctionGraph {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "FunctionGraph[{}, {}]", self.a_dom, self.b_dom)
    }
}

impl FunctionGraph {
    /// Strict convexity is checked by sampling f'' on a 1000-point grid.
    pub fn new(f: RealFn, df: RealFn, ddf: RealFn, a_dom: f64, b_dom: f64) -> Result<Self> {
        if !(a_dom.is_finite() && b_dom.is_finite() && a_dom < b_dom) {
            return Err(Error::InvalidShape("graph domain must be a finite segment".into()));
        }
        let n = 1000;
        for i in 0..=n {
            let x = a_dom + (b_dom - a_dom) * i as f64 / n as f64;
            if !((ddf)(x) > 0.0) {
                return Err(Error::InvalidShape(format!(
                    "second derivative not strictly positive at x={x}"
                )));
            }
        }
        Ok(FunctionGraph { f, df, ddf, a_dom, b_dom })
    }

    /// Internal constructor for graphs whose convexity is known a priori
    /// but fails the strict sampled check (e.g. curvature vanishing at an
    /// endpoint only).
    pub(crate) fn new_unchecked(f: RealFn, df: RealFn, ddf: RealFn, a_dom: f64, b_dom: f64) -> Self {
        FunctionGraph { f, df, ddf, a_dom, b_dom }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn deriv(&self, x: f64) -> f64 {
        (self.df)(x)
    }

    pub fn deriv2(&self, x: f64) -> f64 {
        (self.ddf)(x)
    }

    /// Solve f'(x) = m on the domain; f' is strictly increasing.
    pub fn solve_slope(&self, m: f64) -> Result<f64> {
        solve_increasing(
            |x| self.deriv(x) - m,
            |x| self.deriv2(x),
            self.a_dom,
            self.b_dom,
        )
        .ok_or(Error::NoRootInDomain(m))
    }
}

/// Root of a strictly increasing function on [a, b], Newton with a
/// bisection bracket. None when g(a), g(b) do not straddle zero.
fn solve_increasing(g: impl Fn(f64) -> f64, dg: impl Fn(f64) -> f64, a: f64, b: f64) -> Option<f64> {
    let (ga, gb) = (g(a), g(b));
    if ga > 0.0 || gb < 0.0 {
        return None;
    }
    if ga == 0.0 {
        return Some(a);
    }
    if gb == 0.0 {
        return Some(b);
    }
    let (mut lo, mut hi) = (a, b);
    let mut x = 0.5 * (a + b);
    for _ in 0..200 {
        let gx = g(x);
        if gx == 0.0 {
            return Some(x);
        }
        if gx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = dg(x);
        let mut next = x - gx / d;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-16 * x.abs().max(1.0) {
            return Some(next);
        }
        x = next;
    }
    Some(x)
}

/// Tagged union of the supported convex sets.
#[derive(Debug, Clone)]
pub enum ConvexShape {
    Wedge {
        apex: Point2,
        theta: Angle,
        bisector: Point2,
    },
    /// The fixed set y >= x^2.
    ParabolaRegion,
    Ellipse {
        a: f64,
        b: f64,
    },
    /// The fixed set 0 <= x <= pi, -sin x <= y <= 0.
    SineArch,
    /// Counter-clockwise, strictly convex.
    Polygon {
        vertices: Vec<Point2>,
    },
    FunctionGraph(FunctionGraph),
}

/// Left corner of the sine arch.
pub const SINE_CORNER_A: Point2 = Point2 { x: 0.0, y: 0.0 };
/// Right corner of the sine arch.
pub const SINE_CORNER_B: Point2 = Point2 { x: PI, y: 0.0 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TangencyKind {
    SmoothPoint,
    Corner,
}

/// Where (and how) a supporting line touches the shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangencyLocus {
    pub kind: TangencyKind,
    pub point: Point2,
    pub slope: Slope,
}

/// The pair of supporting lines from an exterior point. `right` bounds the
/// viewing cone clockwise-most, `left` counter-clockwise-most; the cone
/// sweeps counter-clockwise from right to left. `slopes` is
/// (right slope, left slope), matching the closed-form (k1, k2) order for
/// the parabola region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangentSolution {
    pub left: TangencyLocus,
    pub right: TangencyLocus,
    pub slopes: (Slope, Slope),
}

/// Internal: one supporting line described by its outward normal angle.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SupportLine {
    pub normal: f64,
    pub locus: TangencyLocus,
}

/// Internal: the arc of outward normals psi with h(u) <= <X,u> runs
/// counter-clockwise from `lo.normal` to `hi.normal`. The aperture angle is
/// pi minus that arc length.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SupportPair {
    pub lo: SupportLine,
    pub hi: SupportLine,
}

impl SupportPair {
    pub fn aperture(&self) -> f64 {
        PI - ccw_arc(self.lo.normal, self.hi.normal)
    }

    pub fn solution(&self) -> TangentSolution {
        TangentSolution {
            left: self.lo.locus,
            right: self.hi.locus,
            slopes: (self.hi.locus.slope, self.lo.locus.slope),
        }
    }
}

impl ConvexShape {
    pub fn wedge(apex: Point2, theta: f64, bisector: Point2) -> Result<Self> {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::InvalidShape("wedge angle must lie in (0, pi)".into()));
        }
        let n = bisector.norm();
        if n < 1e-300 {
            return Err(Error::InvalidShape("wedge bisector must be nonzero".into()));
        }
        Ok(ConvexShape::Wedge {
            apex,
            theta: Angle::new(theta)?,
            bisector: bisector.normalize(),
        })
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        if !(a >= b && b > 0.0) {
            return Err(Error::InvalidShape("ellipse requires a >= b > 0".into()));
        }
        Ok(ConvexShape::Ellipse { a, b })
    }

    pub fn polygon(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidShape("polygon needs at least 3 vertices".into()));
        }
        let n = vertices.len();
        for i in 0..n {
            let p = vertices[i];
            let q = vertices[(i + 1) % n];
            let r = vertices[(i + 2) % n];
            if q.sub(p).cross(r.sub(q)) <= 0.0 {
                return Err(Error::InvalidShape(
                    "polygon must be counter-clockwise and strictly convex".into(),
                ));
            }
        }
        Ok(ConvexShape::Polygon { vertices })
    }

    pub fn function_graph(graph: FunctionGraph) -> Self {
        ConvexShape::FunctionGraph(graph)
    }

    pub fn id(&self) -> String {
        match self {
            ConvexShape::Wedge { theta, .. } => format!("wedge({:.6})", theta.radians()),
            ConvexShape::ParabolaRegion => "parabola".into(),
            ConvexShape::Ellipse { a, b } => format!("ellipse({a},{b})"),
            ConvexShape::SineArch => "sine".into(),
            ConvexShape::Polygon { vertices } => format!("polygon({})", vertices.len()),
            ConvexShape::FunctionGraph(g) => format!("graph[{},{}]", g.a_dom, g.b_dom),
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(
            self,
            ConvexShape::Ellipse { .. } | ConvexShape::SineArch | ConvexShape::Polygon { .. }
        )
    }

    pub fn contains(&self, p: Point2) -> bool {
        match self {
            ConvexShape::Wedge { apex, theta, bisector } => {
                let v = p.sub(*apex);
                let r = v.norm();
                if r == 0.0 {
                    return true;
                }
                let d = wrap_tau(v.angle() - bisector.angle());
                let d = if d > PI { TAU - d } else { d };
                d <= theta.radians() / 2.0
            }
            ConvexShape::ParabolaRegion => p.y >= p.x * p.x,
            ConvexShape::Ellipse { a, b } => {
                let (u, v) = (p.x / a, p.y / b);
                u * u + v * v <= 1.0
            }
            ConvexShape::SineArch => (0.0..=PI).contains(&p.x) && p.y <= 0.0 && p.y >= -p.x.sin(),
            ConvexShape::Polygon { vertices } => {
                let n = vertices.len();
                (0..n).all(|i| {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    b.sub(a).cross(p.sub(a)) >= 0.0
                })
            }
            ConvexShape::FunctionGraph(g) => {
                (g.a_dom..=g.b_dom).contains(&p.x) && p.y >= g.eval(p.x)
            }
        }
    }

    /// Support function h_Q(u) = sup over q in Q of <q, u>. Returns
    /// +infinity for directions in which an unbounded shape is unbounded.
    pub fn support(&self, u: Point2) -> f64 {
        match self {
            ConvexShape::Wedge { apex, theta, bisector } => {
                // Finite iff u lies in the polar cone of the wedge's
                // direction cone; then the supremum sits at the apex.
                let half = theta.radians() / 2.0;
                let d = wrap_tau(u.angle() - bisector.angle());
                let d = if d > PI { TAU - d } else { d };
                if d >= half + PI / 2.0 {
                    apex.dot(u)
                } else {
                    f64::INFINITY
                }
            }
            ConvexShape::ParabolaRegion => {
                if u.y > 0.0 || (u.y == 0.0 && u.x != 0.0) {
                    f64::INFINITY
                } else if u.y == 0.0 {
                    0.0
                } else {
                    u.x * u.x / (-4.0 * u.y)
                }
            }
            ConvexShape::Ellipse { a, b } => (a * a * u.x * u.x + b * b * u.y * u.y).sqrt(),
            ConvexShape::SineArch => sine_support(u).0,
            ConvexShape::Polygon { vertices } => vertices
                .iter()
                .map(|v| v.dot(u))
                .fold(f64::NEG_INFINITY, f64::max),
            ConvexShape::FunctionGraph(g) => graph_support(g, u).0,
        }
    }

    /// Parameter range of the boundary parameterization, when one exists.
    pub fn param_range(&self) -> (f64, f64) {
        match self {
            ConvexShape::Wedge { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            ConvexShape::ParabolaRegion => (f64::NEG_INFINITY, f64::INFINITY),
            ConvexShape::Ellipse { .. } => (0.0, TAU),
            ConvexShape::SineArch => (0.0, TAU),
            ConvexShape::Polygon { vertices } => (0.0, vertices.len() as f64),
            ConvexShape::FunctionGraph(g) => (g.a_dom, g.b_dom),
        }
    }

    pub fn boundary_point(&self, t: f64) -> Result<Point2> {
        let (t0, t1) = self.param_range();
        // Function graphs use a closed parameter interval, the cyclic
        // parameterizations a half-open one.
        let in_range = if matches!(self, ConvexShape::FunctionGraph(_)) {
            t >= t0 && t <= t1
        } else {
            t >= t0 && (t < t1 || t1.is_infinite())
        };
        if !t.is_finite() || !in_range {
            return Err(Error::ParameterOutOfRange(t));
        }
        Ok(match self {
            ConvexShape::Wedge { apex, theta, bisector } => {
                let half = theta.radians() / 2.0;
                let dir = if t < 0.0 {
                    Point2::from_angle(bisector.angle() - half)
                } else {
                    Point2::from_angle(bisector.angle() + half)
                };
                apex.add(dir.scale(t.abs()))
            }
            ConvexShape::ParabolaRegion => Point2::new(t, t * t),
            ConvexShape::Ellipse { a, b } => Point2::new(a * t.cos(), b * t.sin()),
            ConvexShape::SineArch => {
                if t <= PI {
                    Point2::new(t, -t.sin())
                } else {
                    Point2::new(TAU - t, 0.0)
                }
            }
            ConvexShape::Polygon { vertices } => {
                let n = vertices.len();
                let i = t.floor() as usize;
                let frac = t - i as f64;
                let a = vertices[i % n];
                let b = vertices[(i + 1) % n];
                a.add(b.sub(a).scale(frac))
            }
            ConvexShape::FunctionGraph(g) => Point2::new(t, g.eval(t)),
        })
    }

    /// The two supporting lines through an exterior point.
    pub fn tangents_from(&self, x: Point2) -> Result<TangentSolution> {
        Ok(self.support_pair(x)?.solution())
    }

    pub(crate) fn support_pair(&self, x: Point2) -> Result<SupportPair> {
        if self.contains(x) {
            return Err(Error::PointInsideShape);
        }
        match self {
            ConvexShape::Wedge { .. } => Err(Error::UnsupportedTangency),
            ConvexShape::ParabolaRegion => Ok(parabola_support_pair(x)),
            ConvexShape::Ellipse { a, b } => Ok(ellipse_support_pair(*a, *b, x)),
            ConvexShape::Polygon { vertices } => Ok(polygon_support_pair(vertices, x)),
            ConvexShape::SineArch | ConvexShape::FunctionGraph(_) => {
                numeric_support_pair(self, x)
            }
        }
    }
}

fn smooth_locus(point: Point2, slope: Slope) -> TangencyLocus {
    TangencyLocus { kind: TangencyKind::SmoothPoint, point, slope }
}

fn corner_locus(point: Point2, slope: Slope) -> TangencyLocus {
    TangencyLocus { kind: TangencyKind::Corner, point, slope }
}

/// Closed-form tangency pair for y >= x^2: slopes 2(x1 +- sqrt(x1^2 - y1)).
fn parabola_support_pair(p: Point2) -> SupportPair {
    let disc = (p.x * p.x - p.y).sqrt();
    let t_lo = p.x - disc;
    let t_hi = p.x + disc;
    let line = |t: f64| SupportLine {
        normal: (-1.0f64).atan2(2.0 * t),
        locus: smooth_locus(Point2::new(t, t * t), Slope::Finite(2.0 * t)),
    };
    SupportPair { lo: line(t_lo), hi: line(t_hi) }
}

fn ellipse_support_pair(a: f64, b: f64, p: Point2) -> SupportPair {
    // Map to the unit circle; the affine map preserves tangency.
    let q = Point2::new(p.x / a, p.y / b);
    let d = q.norm();
    let beta = (1.0 / d).acos();
    let phi = q.angle();
    let line = |t: f64| {
        let pt = Point2::new(a * t.cos(), b * t.sin());
        let tangent_dir = (b * t.cos()).atan2(-a * t.sin());
        SupportLine {
            normal: (t.sin() / b).atan2(t.cos() / a),
            locus: smooth_locus(pt, Slope::from_direction_angle(tangent_dir)),
        }
    };
    SupportPair { lo: line(phi - beta), hi: line(phi + beta) }
}

fn polygon_support_pair(vertices: &[Point2], p: Point2) -> SupportPair {
    let n = vertices.len();
    let mut dirs: Vec<(f64, usize)> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (wrap_tau(v.sub(p).angle()), i))
        .collect();
    dirs.sort_unstable_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    // The cone of directions toward the polygon is bounded by the largest
    // angular gap between consecutive vertex directions.
    let mut gap_at = 0;
    let mut max_gap = f64::NEG_INFINITY;
    for i in 0..n {
        let next = (i + 1) % n;
        let gap = ccw_arc(dirs[i].0, dirs[next].0);
        if gap > max_gap {
            max_gap = gap;
            gap_at = i;
        }
    }
    let right = dirs[(gap_at + 1) % n]; // clockwise-most direction of the cone
    let left = dirs[gap_at]; // counter-clockwise-most
    let locus = |dir: f64, idx: usize| {
        let v = vertices[idx];
        let slope = Slope::from_direction_angle(dir);
        // Tie with an incident edge means the supporting line contains the
        // edge; report a smooth tangency then.
        let prev = vertices[(idx + n - 1) % n];
        let next = vertices[(idx + 1) % n];
        let d = Point2::from_angle(dir);
        let aligned = d.cross(prev.sub(v)).abs() < 1e-12 * prev.sub(v).norm().max(1.0)
            || d.cross(next.sub(v)).abs() < 1e-12 * next.sub(v).norm().max(1.0);
        if aligned {
            smooth_locus(v, slope)
        } else {
            corner_locus(v, slope)
        }
    };
    SupportPair {
        lo: SupportLine {
            normal: left.0 + PI / 2.0,
            locus: locus(left.0, left.1),
        },
        hi: SupportLine {
            normal: right.0 - PI / 2.0,
            locus: locus(right.0, right.1),
        },
    }
}

/// Support of the sine arch together with its attaining boundary point.
fn sine_support(u: Point2) -> (f64, TangencyLocus) {
    let va = 0.0;
    let vb = PI * u.x;
    let mut best = if va >= vb {
        (va, sine_corner(SINE_CORNER_A, u))
    } else {
        (vb, sine_corner(SINE_CORNER_B, u))
    };
    if u.y != 0.0 {
        let c = u.x / u.y;
        if (-1.0..=1.0).contains(&c) {
            let xc = c.acos();
            let vc = u.x * xc - u.y * xc.sin();
            let tie = 1e-12 * (1.0 + vc.abs());
            if vc > best.0 - tie {
                // Ties with a corner mean the line is aligned with the
                // curve tangent there; the smooth report wins.
                let pt = Point2::new(xc, -xc.sin());
                let sl = Slope::Finite(-xc.cos());
                if vc >= best.0 {
                    best = (vc, smooth_locus(pt, sl));
                } else {
                    best.1 = smooth_locus(pt, sl);
                }
            }
        }
    }
    best
}

fn sine_corner(c: Point2, u: Point2) -> TangencyLocus {
    // Slope of the supporting line with outward normal u.
    corner_locus(c, Slope::from_direction_angle(u.angle() + PI / 2.0))
}

/// Support of a function-graph epigraph with its attaining boundary point.
fn graph_support(g: &FunctionGraph, u: Point2) -> (f64, TangencyLocus) {
    if u.y > 0.0 {
        // Unbounded direction; the locus reported here is the nearby
        // vertical-side tangency so that root refinement straddling
        // u.y = 0 still yields a sensible answer.
        let x = if u.x > 0.0 { g.b_dom } else { g.a_dom };
        let locus = smooth_locus(Point2::new(x, g.eval(x)), Slope::Vertical);
        return (f64::INFINITY, locus);
    }
    let line_slope = Slope::from_direction_angle(u.angle() + PI / 2.0);
    if u.y == 0.0 {
        // Supporting line is a vertical side; aligned with the edge.
        let x = if u.x > 0.0 { g.b_dom } else { g.a_dom };
        return (u.x * x, smooth_locus(Point2::new(x, g.eval(x)), Slope::Vertical));
    }
    let m = -u.x / u.y;
    if m <= g.deriv(g.a_dom) {
        let x = g.a_dom;
        let val = u.x * x + u.y * g.eval(x);
        let kind = if (m - g.deriv(x)).abs() <= 1e-12 * (1.0 + m.abs()) {
            smooth_locus(Point2::new(x, g.eval(x)), Slope::Finite(g.deriv(x)))
        } else {
            corner_locus(Point2::new(x, g.eval(x)), line_slope)
        };
        (val, kind)
    } else if m >= g.deriv(g.b_dom) {
        let x = g.b_dom;
        let val = u.x * x + u.y * g.eval(x);
        let kind = if (m - g.deriv(x)).abs() <= 1e-12 * (1.0 + m.abs()) {
            smooth_locus(Point2::new(x, g.eval(x)), Slope::Finite(g.deriv(x)))
        } else {
            corner_locus(Point2::new(x, g.eval(x)), line_slope)
        };
        (val, kind)
    } else {
        let x = g.solve_slope(m).expect("slope inside derivative range");
        let val = u.x * x + u.y * g.eval(x);
        (val, smooth_locus(Point2::new(x, g.eval(x)), Slope::Finite(g.deriv(x))))
    }
}

fn support_with_locus(shape: &ConvexShape, u: Point2) -> (f64, TangencyLocus) {
    match shape {
        ConvexShape::SineArch => sine_support(u),
        ConvexShape::FunctionGraph(g) => graph_support(g, u),
        _ => unreachable!("numeric support pair is only used for sine/graph shapes"),
    }
}

/// Generic supporting-line pair via root finding on
/// g(psi) = h(u(psi)) - <X, u(psi)> over normal angles psi. For a strictly
/// exterior point {g < 0} is a single arc; its two endpoints are the
/// supporting normals.
fn numeric_support_pair(shape: &ConvexShape, x: Point2) -> Result<SupportPair> {
    let g = |psi: f64| {
        let u = Point2::from_angle(psi);
        let h = shape.support(u);
        if h.is_infinite() {
            f64::INFINITY
        } else {
            h - x.dot(u)
        }
    };
    // Locate one normal with g < 0 by progressively refined scanning.
    let mut center = 0.0;
    let mut span = TAU;
    let mut found = None;
    for level in 0..6 {
        let n = if level == 0 { 1440 } else { 400 };
        let mut best = (f64::INFINITY, 0.0);
        for i in 0..n {
            let psi = center - span / 2.0 + span * (i as f64 + 0.5) / n as f64;
            let v = g(psi);
            if v < best.0 {
                best = (v, psi);
            }
        }
        if best.0 < 0.0 {
            found = Some((best.1, span / n as f64));
            break;
        }
        center = best.1;
        span /= n as f64 / 4.0;
    }
    let (psi_neg, step) = found.ok_or(Error::PointInsideShape)?;
    // Expand to a sign-change bracket on each side, then bisect.
    let bracket = |mut a: f64, dir: f64| -> f64 {
        let mut b = a + dir * step;
        let mut i: i32 = 0;
        while g(b) < 0.0 {
            a = b;
            // Single steps stay well under pi so the (unique) nonnegative
            // region cannot be skipped over.
            b += dir * (step * 2.0f64.powi(i)).min(0.1);
            i += 1;
            if i > 400 {
                break;
            }
        }
        // Bisect the root between a (negative) and b (non-negative).
        for _ in 0..100 {
            let m = 0.5 * (a + b);
            if g(m) < 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    };
    let psi_lo = bracket(psi_neg, -1.0);
    let psi_hi = bracket(psi_neg, 1.0);
    let mk = |psi: f64| {
        let (_, locus) = support_with_locus(shape, Point2::from_angle(psi));
        SupportLine { normal: psi, locus }
    };
    Ok(SupportPair { lo: mk(psi_lo), hi: mk(psi_hi) })
}

/// Serializable shape description consumed by the CLI; the function-graph
/// variant is only constructible through the library API.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ShapeSpec {
    Wedge {
        apex: [f64; 2],
        theta: f64,
        bisector: [f64; 2],
    },
    Parabola,
    Ellipse {
        a: f64,
        b: f64,
    },
    Sine,
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
}

impl ShapeSpec {
    pub fn build(&self) -> Result<ConvexShape> {
        match self {
            ShapeSpec::Wedge { apex, theta, bisector } => ConvexShape::wedge(
                Point2::new(apex[0], apex[1]),
                *theta,
                Point2::new(bisector[0], bisector[1]),
            ),
            ShapeSpec::Parabola => Ok(ConvexShape::ParabolaRegion),
            ShapeSpec::Ellipse { a, b } => ConvexShape::ellipse(*a, *b),
            ShapeSpec::Sine => Ok(ConvexShape::SineArch),
            ShapeSpec::Polygon { vertices } => ConvexShape::polygon(
                vertices.iter().map(|v| Point2::new(v[0], v[1])).collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> ConvexShape {
        ConvexShape::polygon(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn support_examples() {
        let e = ConvexShape::ellipse(2.0, 1.0).unwrap();
        assert!((e.support(Point2::new(1.0, 0.0)) - 2.0).abs() < 1e-15);
        assert!(ConvexShape::ParabolaRegion
            .support(Point2::new(0.0, 1.0))
            .is_infinite());
        assert!((triangle().support(Point2::new(1.0, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parabola_tangent_slopes_match_closed_form() {
        let sol = ConvexShape::ParabolaRegion
            .tangents_from(Point2::new(0.0, -1.0))
            .unwrap();
        assert_eq!(sol.slopes.0, Slope::Finite(2.0));
        assert_eq!(sol.slopes.1, Slope::Finite(-2.0));
        let sol = ConvexShape::ParabolaRegion
            .tangents_from(Point2::new(1.0, 0.0))
            .unwrap();
        assert_eq!(sol.slopes.0, Slope::Finite(4.0));
        assert_eq!(sol.slopes.1, Slope::Finite(0.0));
    }

    #[test]
    fn sine_far_below_sees_both_corners() {
        let sol = ConvexShape::SineArch
            .tangents_from(Point2::new(PI / 2.0, -10.0))
            .unwrap();
        assert_eq!(sol.left.kind, TangencyKind::Corner);
        assert_eq!(sol.right.kind, TangencyKind::Corner);
        assert!(sol.left.point.dist(SINE_CORNER_A) < 1e-9);
        assert!(sol.right.point.dist(SINE_CORNER_B) < 1e-9);
    }

    #[test]
    fn boundary_point_examples() {
        let e = ConvexShape::ellipse(2.0, 1.0).unwrap();
        let p = e.boundary_point(0.0).unwrap();
        assert!(p.dist(Point2::new(2.0, 0.0)) < 1e-15);
        let s = ConvexShape::SineArch.boundary_point(PI / 2.0).unwrap();
        assert!(s.dist(Point2::new(PI / 2.0, -1.0)) < 1e-15);
        let t = triangle().boundary_point(0.0).unwrap();
        assert!(t.dist(Point2::new(0.0, 0.0)) < 1e-15);
        assert!(e.boundary_point(7.0).is_err());
    }

    #[test]
    fn inside_point_is_rejected() {
        assert_eq!(
            ConvexShape::ParabolaRegion.tangents_from(Point2::new(0.0, 1.0)),
            Err(Error::PointInsideShape)
        );
    }

    #[test]
    fn polygon_validation() {
        assert!(ConvexShape::polygon(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 0.0),
        ])
        .is_err(), "clockwise polygon must be rejected");
        assert!(ConvexShape::polygon(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]).is_err());
    }

    #[test]
    fn shape_spec_round_trip() {
        let spec: ShapeSpec = serde_json::from_str(r#"{"kind":"ellipse","a":2.0,"b":1.0}"#).unwrap();
        let shape = spec.build().unwrap();
        assert_eq!(shape.id(), "ellipse(2,1)");
        let spec: ShapeSpec =
            serde_json::from_str(r#"{"kind":"polygon","vertices":[[0,0],[1,0],[0,1]]}"#).unwrap();
        assert!(spec.build().is_ok());
    }
}
