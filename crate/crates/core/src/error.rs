use thiserror::Error;

/// Errors shared across the shape, aperture and tracing modules.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("query point lies inside the convex set; no tangent pair exists")]
    PointInsideShape,
    #[error("boundary parameter {0} outside the shape's parameter range")]
    ParameterOutOfRange(f64),
    #[error("angle is degenerate (zero aperture)")]
    DegenerateAngle,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("target slope {0} outside the derivative range of the graph")]
    NoRootInDomain(f64),
    #[error("root solver exceeded {0} iterations")]
    MaxIterationsExceeded(usize),
    #[error("trace reference point is not interior to the shape")]
    ReferenceNotInterior,
    #[error("aperture is not monotone along the search ray; bisection bracket lost")]
    NonBracketedRoot,
    #[error("operation requires a bounded shape")]
    UnboundedShape,
    #[error("point is above the visibility half-plane of the sine arch")]
    AboveVisibilityHalfPlane,
    #[error("no finite tangency exists for this shape/point configuration")]
    UnsupportedTangency,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
