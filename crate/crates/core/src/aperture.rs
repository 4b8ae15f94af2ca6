//! Aperture (visibility) angle of a point with respect to a convex set:
//! the exact evaluation via supporting lines, and an independent
//! boundary-sampling oracle used for verification.

use crate::error::{Error, Result};
use crate::geom::{ccw_arc, smallest_enclosing_arc, wrap_tau, Point2, PI};
use crate::shapes::{ConvexShape, TangentSolution};

/// Default truncation radius for the oracle on unbounded shapes; the
/// induced error is O(1/R).
pub const DEFAULT_TRUNCATION_RADIUS: f64 = 1e3;

#[derive(Debug, Clone)]
pub struct ApertureResult {
    /// Angle in (0, pi]; by convention pi for points inside the set.
    pub angle: f64,
    /// Absent for interior points and for shapes whose supporting lines
    /// have no finite tangency (the wedge).
    pub tangent_solution: Option<TangentSolution>,
    pub inside: bool,
}

/// Aperture angle of `x` with respect to `shape`. Interior points report
/// the angle pi with `inside = true`; this is a value, not an error.
pub fn aperture(shape: &ConvexShape, x: Point2) -> ApertureResult {
    if shape.contains(x) {
        return ApertureResult { angle: PI, tangent_solution: None, inside: true };
    }
    if let ConvexShape::Wedge { apex, theta, bisector } = shape {
        return ApertureResult {
            angle: wedge_aperture(*apex, theta.radians(), bisector.angle(), x),
            tangent_solution: None,
            inside: false,
        };
    }
    let pair = shape
        .support_pair(x)
        .expect("exterior point of a non-wedge shape has a tangent pair");
    ApertureResult {
        angle: pair.aperture(),
        tangent_solution: Some(pair.solution()),
        inside: false,
    }
}

/// Smallest arc of directions from `x` covering the wedge: the wedge's own
/// direction interval extended, if necessary, to the apex direction.
fn wedge_aperture(apex: Point2, theta: f64, bisector_angle: f64, x: Point2) -> f64 {
    let lo = bisector_angle - theta / 2.0;
    let hi = bisector_angle + theta / 2.0;
    let d = wrap_tau(apex.sub(x).angle());
    if ccw_arc(lo, d) <= theta {
        theta
    } else {
        theta + ccw_arc(hi, d).min(ccw_arc(d, lo))
    }
}

/// Boundary sample points used by the oracle. Unbounded shapes are
/// truncated at radius `r_trunc`.
pub fn boundary_samples(shape: &ConvexShape, n: usize, r_trunc: f64) -> Vec<Point2> {
    match shape {
        ConvexShape::Ellipse { .. } | ConvexShape::SineArch => {
            let (t0, t1) = shape.param_range();
            (0..n)
                .map(|i| {
                    shape
                        .boundary_point(t0 + (t1 - t0) * i as f64 / n as f64)
                        .unwrap()
                })
                .collect()
        }
        ConvexShape::Polygon { vertices } => {
            // The vertices themselves are always included: the direction
            // extremes are attained there, so the oracle is exact for
            // polygons regardless of the sample count.
            let m = vertices.len() as f64;
            let mut pts: Vec<Point2> = (0..n.saturating_sub(vertices.len()))
                .map(|i| shape.boundary_point(m * i as f64 / n as f64).unwrap())
                .collect();
            pts.extend_from_slice(vertices);
            pts
        }
        ConvexShape::ParabolaRegion => {
            let xm = r_trunc.sqrt();
            (0..n)
                .map(|i| {
                    let t = -xm + 2.0 * xm * i as f64 / (n - 1) as f64;
                    Point2::new(t, t * t)
                })
                .collect()
        }
        ConvexShape::Wedge { .. } => (0..n)
            .map(|i| {
                let t = -r_trunc + 2.0 * r_trunc * i as f64 / (n - 1) as f64;
                shape.boundary_point(t).unwrap()
            })
            .collect(),
        ConvexShape::FunctionGraph(g) => {
            // Bottom curve plus the two vertical sides up to the
            // truncation height.
            let n_curve = n / 2;
            let n_side = (n - n_curve) / 2;
            let mut pts = Vec::with_capacity(n_curve + 2 * n_side);
            for i in 0..n_curve {
                let t = g.a_dom + (g.b_dom - g.a_dom) * i as f64 / (n_curve - 1) as f64;
                pts.push(Point2::new(t, g.eval(t)));
            }
            let top = g.eval(g.a_dom).max(g.eval(g.b_dom)) + r_trunc;
            for i in 0..n_side {
                let fa = g.eval(g.a_dom);
                let fb = g.eval(g.b_dom);
                let s = i as f64 / (n_side - 1) as f64;
                pts.push(Point2::new(g.a_dom, fa + (top - fa) * s));
                pts.push(Point2::new(g.b_dom, fb + (top - fb) * s));
            }
            pts
        }
    }
}

/// Brute-force aperture: the length of the smallest circular interval
/// containing the directions from `x` to `n_samples` boundary points.
/// Converges to `aperture` as n and r_trunc grow.
pub fn aperture_oracle(
    shape: &ConvexShape,
    x: Point2,
    n_samples: usize,
    r_trunc: Option<f64>,
) -> Result<f64> {
    if n_samples < 100 {
        return Err(Error::InvalidShape("oracle needs at least 100 samples".into()));
    }
    if shape.contains(x) {
        return Err(Error::PointInsideShape);
    }
    let r = r_trunc.unwrap_or(DEFAULT_TRUNCATION_RADIUS);
    let mut angles: Vec<f64> = boundary_samples(shape, n_samples, r)
        .into_iter()
        .map(|p| p.sub(x).angle())
        .collect();
    Ok(smallest_enclosing_arc(&mut angles))
}
