//! Curves of constant aperture angle for convex planar sets.
//!
//! The aperture (visibility) angle of an exterior point X with respect to
//! a convex set Q is the opening of the smallest cone with apex X that
//! contains Q. This crate evaluates that angle exactly through support
//! functions, provides closed forms where they exist (wedges, the parabola
//! region, director circles, inscribed arcs) and traces the level curve
//! C(alpha, Q) numerically for general shapes.

pub mod analytic;
pub mod aperture;
pub mod error;
pub mod geom;
pub mod metrics;
pub mod shapes;
pub mod trace_io;
pub mod tracer;

pub use analytic::{
    director_circle, inscribed_arc, parabola_curve_y, wedge_curve, wedge_curve_at, ArcSide,
    CircularArc, WedgeCase, WedgeCurveResult,
};
pub use aperture::{aperture, aperture_oracle, ApertureResult, DEFAULT_TRUNCATION_RADIUS};
pub use error::{Error, Result};
pub use geom::{Angle, Point2, Slope};
pub use metrics::hausdorff_distance;
pub use shapes::{
    ConvexShape, FunctionGraph, RealFn, ShapeSpec, TangencyKind, TangencyLocus, TangentSolution,
};
pub use tracer::{
    associated_tangent, classify_sine_region, polygon_inscribe, ray_bisection_trace,
    tangent_pair_trace, CurveSample, CurveTrace, NewtonProblem, SineRegionLabel, TraceEntry,
    TraceMethod, DEFAULT_TRACE_TOL,
};
