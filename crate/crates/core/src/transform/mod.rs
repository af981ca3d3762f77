//! Transformations that map one affine frustum to another while keeping
//! the projection matrix and its inverse in step, without re-inverting.

mod crop;
mod lens;
mod rect;
mod reflect;

pub use crop::{crop, crop_dense, CropSpec};
pub use lens::{lens_distort, lens_tile_frustums, quad_area, LensSpec, TileFrustum, TileGrid, DEFAULT_FAR_FACTOR};
pub use rect::{reflect_rect, ReflectiveRect};
pub use reflect::{reflect, reflect_and_clip, reflect_and_clip_with, reflection_matrix, ClippedReflection, FarAnchor};

use thiserror::Error;

use crate::build::BuildError;
use crate::extract::FrustumError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("invalid crop: {0}")]
    InvalidCrop(String),
    #[error("mirror plane has a zero normal")]
    ZeroNormal,
    #[error("reflected camera is on the positive side of the mirror (c·O = {value:e})")]
    CameraInPositiveHalfspace { value: f64 },
    #[error("clip is degenerate: {0}")]
    DegenerateClip(&'static str),
    #[error("rectangle sides are parallel or zero")]
    DegenerateRect,
    #[error("rectangle sides are not perpendicular")]
    NotRectangular,
    #[error("observer lies on the rectangle's plane")]
    ObserverOnPlane,
    #[error("far distance {far} must exceed near distance {near}")]
    FarNotBeyondNear { near: f64, far: f64 },
    #[error("invalid lens: {0}")]
    InvalidLens(String),
    #[error("point {index} is {distance:e} off the refraction plane")]
    PointOffPlane { index: usize, distance: f64 },
    #[error("tile origin lies on the refraction plane")]
    OriginOnPlane,
    #[error(transparent)]
    Frustum(#[from] FrustumError),
    #[error(transparent)]
    Build(#[from] BuildError),
}
