//! Basic planar primitives: points, direction angles, slopes and the
//! validated aperture angle type.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const TAU: f64 = std::f64::consts::TAU;
pub const PI: f64 = std::f64::consts::PI;

/// Tolerance under which an angle counts as a right angle.
pub const RIGHT_ANGLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Point2 { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating both as vectors.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }

    pub fn add(self, other: Point2) -> Point2 {
        Point2::new(self.x + other.x, self.y + other.y)
    }

    pub fn scale(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point2) -> f64 {
        self.sub(other).norm()
    }

    pub fn normalize(self) -> Point2 {
        let n = self.norm();
        Point2::new(self.x / n, self.y / n)
    }

    /// Direction angle in (-pi, pi].
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn from_angle(theta: f64) -> Point2 {
        Point2::new(theta.cos(), theta.sin())
    }

    /// Rotate by +90 degrees.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }
}

/// Slope of a line; vertical lines carry an explicit marker instead of an
/// infinite real. Angle arithmetic is done on direction angles, never on
/// slopes, except where a closed-form slope formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Slope {
    Finite(f64),
    Vertical,
}

impl Slope {
    pub fn from_direction_angle(theta: f64) -> Slope {
        let c = theta.cos();
        // A direction within ~1e-14 of vertical has no representable slope.
        if c.abs() < 1e-14 {
            Slope::Vertical
        } else {
            Slope::Finite(theta.sin() / c)
        }
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            Slope::Finite(k) => Some(k),
            Slope::Vertical => None,
        }
    }
}

/// A validated aperture/slope angle in [0, pi) with its cached tangent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angle {
    radians: f64,
    tangent_k: f64,
    is_right: bool,
}

impl Angle {
    pub fn new(radians: f64) -> Result<Angle> {
        if !radians.is_finite() || !(0.0..PI).contains(&radians) {
            return Err(Error::InvalidShape(format!(
                "angle {radians} outside [0, pi)"
            )));
        }
        let is_right = (radians - PI / 2.0).abs() <= RIGHT_ANGLE_TOL;
        Ok(Angle {
            radians,
            tangent_k: radians.tan(),
            is_right,
        })
    }

    pub fn radians(self) -> f64 {
        self.radians
    }

    /// Cached K = tan(alpha). Meaningless for right angles; callers must
    /// branch on `is_right` first.
    pub fn tangent_k(self) -> f64 {
        self.tangent_k
    }

    pub fn is_right(self) -> bool {
        self.is_right
    }
}

/// Wrap an angle into [0, 2*pi).
pub fn wrap_tau(theta: f64) -> f64 {
    let t = theta % TAU;
    if t < 0.0 {
        t + TAU
    } else {
        t
    }
}

/// Counter-clockwise arc length from `from` to `to`, in [0, 2*pi).
pub fn ccw_arc(from: f64, to: f64) -> f64 {
    wrap_tau(to - from)
}

/// Length of the smallest circular interval containing all direction
/// angles. The input slice is sorted in place.
pub fn smallest_enclosing_arc(angles: &mut [f64]) -> f64 {
    if angles.len() < 2 {
        return 0.0;
    }
    for a in angles.iter_mut() {
        *a = wrap_tau(*a);
    }
    angles.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let mut max_gap = TAU - angles[angles.len() - 1] + angles[0];
    for w in angles.windows(2) {
        let gap = w[1] - w[0];
        if gap > max_gap {
            max_gap = gap;
        }
    }
    TAU - max_gap
}

/// Intersection of the line through `p1` with direction angle `t1` and the
/// line through `p2` with direction angle `t2`. None when parallel.
pub fn line_intersection(p1: Point2, t1: f64, p2: Point2, t2: f64) -> Option<Point2> {
    let d1 = Point2::from_angle(t1);
    let d2 = Point2::from_angle(t2);
    let denom = d1.cross(d2);
    if denom.abs() < 1e-14 {
        return None;
    }
    let rhs = p2.sub(p1);
    let s = rhs.cross(d2) / denom;
    Some(p1.add(d1.scale(s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_rejects_out_of_range() {
        assert!(Angle::new(-0.1).is_err());
        assert!(Angle::new(PI).is_err());
        assert!(Angle::new(f64::NAN).is_err());
        assert!(Angle::new(0.0).is_ok());
    }

    #[test]
    fn angle_caches_tangent() {
        let a = Angle::new(PI / 4.0).unwrap();
        assert!((a.tangent_k() - 1.0).abs() < 1e-15);
        assert!(!a.is_right());
        assert!(Angle::new(PI / 2.0).unwrap().is_right());
        assert!(Angle::new(PI / 2.0 + 5e-13).unwrap().is_right());
    }

    #[test]
    fn enclosing_arc_handles_wraparound() {
        let mut angles = [0.1, -0.1, 0.05];
        let arc = smallest_enclosing_arc(&mut angles);
        assert!((arc - 0.2).abs() < 1e-12);
    }

    #[test]
    fn line_intersection_basic() {
        let p = line_intersection(
            Point2::new(0.0, 0.0),
            PI / 4.0,
            Point2::new(2.0, 0.0),
            3.0 * PI / 4.0,
        )
        .unwrap();
        assert!((p.x - 1.0).abs() < 1e-12 && (p.y - 1.0).abs() < 1e-12);
        assert!(line_intersection(
            Point2::new(0.0, 0.0),
            0.3,
            Point2::new(1.0, 1.0),
            0.3 + PI
        )
        .is_none());
    }
}
