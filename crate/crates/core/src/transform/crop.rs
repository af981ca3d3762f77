use crate::extract::AffineFrustum;
use crate::linalg::{HomPoint, Mat4};

use super::TransformError;

/// A sub-rectangle of the near plane.
///
/// Offsets are measured from the NDC `(-1, -1)` corner of the full
/// rectangle, which is the upper-left corner in a y-down viewport.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CropSpec {
    pub x_offset: f64,
    pub y_offset: f64,
    pub block_width: f64,
    pub block_height: f64,
    pub width: f64,
    pub height: f64,
}

struct CropParams {
    w: f64,
    h: f64,
    tx: f64,
    ty: f64,
    rw: f64,
    rh: f64,
    itx: f64,
    ity: f64,
}

impl CropSpec {
    pub fn full(width: f64, height: f64) -> Self {
        Self { x_offset: 0.0, y_offset: 0.0, block_width: width, block_height: height, width, height }
    }

    pub fn check(&self) -> Result<(), TransformError> {
        let all = [self.x_offset, self.y_offset, self.block_width, self.block_height, self.width, self.height];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(TransformError::InvalidCrop("non-finite field".into()));
        }
        if !(self.width > 0.0 && self.height > 0.0 && self.block_width > 0.0 && self.block_height > 0.0) {
            return Err(TransformError::InvalidCrop("sizes must be positive".into()));
        }
        let slack = 1e-12 * self.width.max(self.height);
        if self.x_offset < -slack || self.x_offset > self.width - self.block_width + slack {
            return Err(TransformError::InvalidCrop(format!("x offset {} out of range", self.x_offset)));
        }
        if self.y_offset < -slack || self.y_offset > self.height - self.block_height + slack {
            return Err(TransformError::InvalidCrop(format!("y offset {} out of range", self.y_offset)));
        }
        Ok(())
    }

    fn params(&self) -> CropParams {
        let x = self.x_offset / self.block_width;
        let y = self.y_offset / self.block_height;
        let w = self.width / self.block_width;
        let h = self.height / self.block_height;
        let rw = self.block_width / self.width;
        let rh = self.block_height / self.height;
        CropParams {
            w,
            h,
            tx: w - 1.0 - 2.0 * x,
            ty: h - 1.0 - 2.0 * y,
            rw,
            rh,
            itx: -1.0 + rw + 2.0 * x * rw,
            ity: -1.0 + rh + 2.0 * y * rh,
        }
    }

    /// The NDC scale-and-shift applied after the original projection.
    pub fn crop_matrix(&self) -> Mat4 {
        let p = self.params();
        Mat4::from_rows([
            [p.w, 0.0, 0.0, 0.0],
            [0.0, p.h, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [p.tx, p.ty, 0.0, 1.0],
        ])
    }

    pub fn inv_crop_matrix(&self) -> Mat4 {
        let p = self.params();
        Mat4::from_rows([
            [p.rw, 0.0, 0.0, 0.0],
            [0.0, p.rh, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [p.itx, p.ity, 0.0, 1.0],
        ])
    }
}

/// Crops by recombining two columns of `P` and one row of `P⁻¹`.
pub fn crop(f: &AffineFrustum, c: &CropSpec) -> Result<AffineFrustum, TransformError> {
    c.check()?;
    let p = c.params();
    let m = f.proj();
    let [p0, p1, p2, p3] = [0, 1, 2, 3].map(|j| m.col_plane(j));
    let proj = Mat4::from_plane_cols([p0 * p.w + p3 * p.tx, p1 * p.h + p3 * p.ty, p2, p3]);

    let inv = f.inv_proj();
    let [q0, q1, q2, q3]: [HomPoint; 4] = [0, 1, 2, 3].map(|i| inv.row_point(i));
    let inv_proj = Mat4::from_point_rows([q0 * p.rw, q1 * p.rh, q2, q0 * p.itx + q1 * p.ity + q3]);
    Ok(AffineFrustum::from_pair(proj, inv_proj)?)
}

/// Crops with full matrix products `P·crop` and `crop⁻¹·P⁻¹`.
pub fn crop_dense(f: &AffineFrustum, c: &CropSpec) -> Result<AffineFrustum, TransformError> {
    c.check()?;
    let proj = f.proj().mul(&c.crop_matrix());
    let inv_proj = c.inv_crop_matrix().mul(f.inv_proj());
    Ok(AffineFrustum::from_pair(proj, inv_proj)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::key_points;
    use crate::projection::perspective_gl;

    fn gl() -> AffineFrustum {
        AffineFrustum::from_projection(perspective_gl(-1.0, 1.0, -1.0, 1.0, 1.0, 10.0)).unwrap()
    }

    #[test]
    fn full_block_is_identity() {
        let f = gl();
        let c = CropSpec::full(640.0, 480.0);
        assert_eq!(c.crop_matrix(), Mat4::IDENTITY);
        let out = crop(&f, &c).unwrap();
        assert_eq!(out.proj(), f.proj());
        assert_eq!(out.inv_proj(), f.inv_proj());
    }

    #[test]
    fn crop_matrices_are_inverse() {
        let c = CropSpec { x_offset: 30.0, y_offset: 12.0, block_width: 64.0, block_height: 48.0, width: 640.0, height: 480.0 };
        assert!(c.crop_matrix().mul(&c.inv_crop_matrix()).identity_residual() < 1e-14);
    }

    #[test]
    fn quadrant_corners() {
        let f = gl();
        let c = CropSpec { x_offset: 0.0, y_offset: 0.0, block_width: 50.0, block_height: 50.0, width: 100.0, height: 100.0 };
        let k = key_points(&crop(&f, &c).unwrap());
        let o = key_points(&f);
        let cart = |p: HomPoint| p.dehomogenize().unwrap();
        let mid = |a: HomPoint, b: HomPoint| (cart(a) + cart(b)) * 0.5;
        // NDC (-1,-1) quadrant: C3 stays, C1 moves to the center
        assert!((cart(k.corners[2]) - cart(o.corners[2])).max_abs() < 1e-8);
        assert!((cart(k.corners[0]) - mid(o.corners[0], o.corners[2])).max_abs() < 1e-8);
        assert!((cart(k.corners[1]) - mid(o.corners[1], o.corners[2])).max_abs() < 1e-8);
        assert!((cart(k.corners[3]) - mid(o.corners[3], o.corners[2])).max_abs() < 1e-8);
    }

    #[test]
    fn rejects_out_of_range() {
        let f = gl();
        let c = CropSpec { x_offset: 60.0, y_offset: 0.0, block_width: 50.0, block_height: 50.0, width: 100.0, height: 100.0 };
        assert!(matches!(crop(&f, &c), Err(TransformError::InvalidCrop(_))));
        let c = CropSpec { block_width: 0.0, ..CropSpec::full(10.0, 10.0) };
        assert!(crop(&f, &c).is_err());
    }
}
