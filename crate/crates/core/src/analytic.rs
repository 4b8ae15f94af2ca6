//! Closed-form constant-aperture results: the wedge case analysis, the
//! explicit parabola curve with its sign branches, the ellipse director
//! circle and inscribed-angle circular arcs for segment visibility.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ccw_arc, wrap_tau, Angle, Point2, PI, TAU};

/// Absolute tolerance on |alpha - theta| for the singular wedge case.
pub const WEDGE_CASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WedgeCase {
    Empty,
    OppositeWedge,
    OppositeAngleRegion,
}

/// Symbolic description of C(alpha, W) for a wedge W: either empty, the
/// full opposite wedge (the singular alpha = theta case), or the pair of
/// rays forming the opposite angle of value 2*alpha - theta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WedgeCurveResult {
    pub case: WedgeCase,
    pub region_angle: Option<Angle>,
    pub apex: Point2,
    /// Unit direction of the result's bisector (opposite to the wedge's).
    pub bisector_direction: Point2,
}

impl WedgeCurveResult {
    /// Membership test for the symbolic region, with angular tolerance
    /// `tol` for the ray case.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        let v = p.sub(self.apex);
        let r = v.norm();
        if r == 0.0 {
            return false; // the apex itself lies in W, aperture pi
        }
        let Some(region_angle) = self.region_angle else {
            return false;
        };
        let half = region_angle.radians() / 2.0;
        let d = wrap_tau(v.angle() - self.bisector_direction.angle());
        let d = if d > PI { TAU - d } else { d };
        match self.case {
            WedgeCase::Empty => false,
            WedgeCase::OppositeWedge => d <= half + tol,
            WedgeCase::OppositeAngleRegion => (d - half).abs() <= tol,
        }
    }
}

/// Case analysis of C(alpha, W) for the canonical wedge with the given
/// apex and bisector.
pub fn wedge_curve_at(
    apex: Point2,
    bisector: Point2,
    theta: Angle,
    alpha: Angle,
) -> WedgeCurveResult {
    let opposite = bisector.normalize().scale(-1.0);
    let (t, a) = (theta.radians(), alpha.radians());
    if a < t - WEDGE_CASE_TOL {
        WedgeCurveResult {
            case: WedgeCase::Empty,
            region_angle: None,
            apex,
            bisector_direction: opposite,
        }
    } else if (a - t).abs() <= WEDGE_CASE_TOL {
        WedgeCurveResult {
            case: WedgeCase::OppositeWedge,
            region_angle: Some(theta),
            apex,
            bisector_direction: opposite,
        }
    } else {
        WedgeCurveResult {
            case: WedgeCase::OppositeAngleRegion,
            region_angle: Some(Angle::new(2.0 * a - t).expect("2a - t in (0, pi)")),
            apex,
            bisector_direction: opposite,
        }
    }
}

/// Case analysis for the wedge with apex at the origin and bisector +x.
pub fn wedge_curve(theta: Angle, alpha: Angle) -> WedgeCurveResult {
    wedge_curve_at(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), theta, alpha)
}

/// The explicit constant-aperture curve for the region y >= x^2:
/// y(x) = (-K^2 - 2 +- 2 sqrt(4 K^2 x^2 + K^2 + 1)) / (4 K^2) with the
/// plus sign for obtuse angles; exactly -1/4 for the right angle (the
/// directrix).
pub fn parabola_curve_y(alpha: Angle, x: f64) -> Result<f64> {
    let a = alpha.radians();
    if a == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    if alpha.is_right() {
        return Ok(-0.25);
    }
    let k = alpha.tangent_k();
    let k2 = k * k;
    let root = (4.0 * k2 * x * x + k2 + 1.0).sqrt();
    let sign = if a > PI / 2.0 { 1.0 } else { -1.0 };
    Ok((-k2 - 2.0 + sign * 2.0 * root) / (4.0 * k2))
}

/// A circular arc swept counter-clockwise from start_angle to end_angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircularArc {
    pub center: Point2,
    pub radius: f64,
    pub start_angle: f64,
    pub end_angle: f64,
}

impl CircularArc {
    pub fn sweep(&self) -> f64 {
        let s = ccw_arc(self.start_angle, self.end_angle);
        if s == 0.0 {
            TAU
        } else {
            s
        }
    }

    /// Point at fraction `t` in [0, 1] of the sweep.
    pub fn point_at(&self, t: f64) -> Point2 {
        let ang = self.start_angle + self.sweep() * t;
        self.center.add(Point2::from_angle(ang).scale(self.radius))
    }
}

/// The locus of points seeing an ellipse under a right angle: the circle
/// of radius sqrt(a^2 + b^2) about the center.
pub fn director_circle(a: f64, b: f64) -> CircularArc {
    CircularArc {
        center: Point2::new(0.0, 0.0),
        radius: (a * a + b * b).sqrt(),
        start_angle: 0.0,
        end_angle: TAU,
    }
}

/// Side of the directed segment A->B on which the arc is requested;
/// `Below` is the clockwise side (negative y for a left-to-right
/// horizontal segment).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArcSide {
    Below,
    Above,
}

/// Locus of points on the requested side of AB that see the segment AB
/// under angle exactly alpha: an arc of the circle through A and B with
/// radius |AB| / (2 sin alpha). Major arc for sharp angles, minor arc for
/// obtuse ones, the semicircle for the right angle.
pub fn inscribed_arc(a: Point2, b: Point2, alpha: Angle, side: ArcSide) -> Result<CircularArc> {
    let chord = b.sub(a);
    let len = chord.norm();
    if !(len > 0.0) {
        return Err(Error::DegenerateSegment);
    }
    let ang = alpha.radians();
    if ang == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    let e = chord.scale(1.0 / len);
    let n_side = match side {
        ArcSide::Below => Point2::new(e.y, -e.x),
        ArcSide::Above => Point2::new(-e.y, e.x),
    };
    let mid = a.add(b).scale(0.5);
    // Signed center offset: positive (arc side) for sharp angles,
    // negative for obtuse ones; zero for the Thales case.
    let offset = if alpha.is_right() {
        0.0
    } else {
        (len / 2.0) / alpha.tangent_k()
    };
    let center = mid.add(n_side.scale(offset));
    let radius = len / (2.0 * ang.sin());
    let ta = wrap_tau(a.sub(center).angle());
    let tb = wrap_tau(b.sub(center).angle());
    // Choose the sweep whose midpoint lies on the requested side.
    let probe = |s: f64, t: f64| {
        let m = s + ccw_arc(s, t) / 2.0;
        center
            .add(Point2::from_angle(m).scale(radius))
            .sub(mid)
            .dot(n_side)
            > 0.0
    };
    let (start, end) = if probe(ta, tb) { (ta, tb) } else { (tb, ta) };
    Ok(CircularArc { center, radius, start_angle: start, end_angle: end })
}
