//! Discrete set distances used to compare traced curves.

use crate::geom::Point2;

/// One-sided discrete Hausdorff distance from `a` to `b`.
pub fn directed_hausdorff(a: &[Point2], b: &[Point2]) -> f64 {
    a.iter()
        .map(|p| {
            b.iter()
                .map(|q| p.dist(*q))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Symmetric discrete Hausdorff distance between two point sets.
pub fn hausdorff_distance(a: &[Point2], b: &[Point2]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}
