//! Affine viewing frustum algebra.
//!
//! An [`AffineFrustum`](extract::AffineFrustum) is a projection matrix paired
//! with its inverse. Points are row vectors (`p' = p·M`), NDC spans
//! `x, y ∈ [-1, 1]` and `z ∈ [0, 1]`. Column `j` of `M` is a plane whose value
//! at a world point is clip coordinate `j`; row `i` of `M⁻¹` is a homogeneous
//! world point.

// `!(x < tol)` is used deliberately so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod build;
pub mod cli;
pub mod corpus;
pub mod extract;
#[allow(clippy::needless_range_loop)]
pub mod linalg;
pub mod projection;
pub mod transform;
pub mod validate;

pub use build::{build_frustum, BuildError, FarStrategy, SidePlanes};
pub use extract::{extract_planes, key_points, AffineFrustum, FrustumError, KeyPoints, PlaneSet};
pub use linalg::{HomPoint, Mat3, Mat4, Plane, Vec3};
pub use transform::TransformError;
pub use validate::{validate, ValidationReport};
