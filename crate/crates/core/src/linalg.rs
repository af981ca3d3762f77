//! Small fixed-size linear algebra in the row-vector convention.
//!
//! Points and planes are 4-vectors. A point `p` is transformed by a matrix
//! `M` as the row product `p·M`, so the clip-space coordinate `j` of `p` is
//! `p · M.col(j)`. That is why projection matrices are read by columns
//! (each column is a plane) and inverse projection matrices by rows (each
//! row is a homogeneous point).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use thiserror::Error;

/// Relative determinant threshold below which a matrix is treated as singular.
pub const SINGULAR_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is singular (|det| = {det:e} at entry scale {scale:e})")]
    Singular { det: f64, scale: f64 },
    #[error("plane normal is zero")]
    ZeroNormal,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Homogeneous point with `w = 1`.
    pub fn to_point(self) -> HomPoint {
        HomPoint::new(self.x, self.y, self.z, 1.0)
    }

    /// Homogeneous point at infinity in this direction.
    pub fn to_direction(self) -> HomPoint {
        HomPoint::new(self.x, self.y, self.z, 0.0)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

macro_rules! four_vector {
    ($name:ident { $a:ident, $b:ident, $c:ident, $d:ident }) => {
        impl $name {
            pub const fn new($a: f64, $b: f64, $c: f64, $d: f64) -> Self {
                Self { $a, $b, $c, $d }
            }

            pub fn from_array(v: [f64; 4]) -> Self {
                Self::new(v[0], v[1], v[2], v[3])
            }

            pub fn to_array(self) -> [f64; 4] {
                [self.$a, self.$b, self.$c, self.$d]
            }

            /// Euclidean inner product of the raw 4-vectors.
            pub fn dot4(self, o: Self) -> f64 {
                self.$a * o.$a + self.$b * o.$b + self.$c * o.$c + self.$d * o.$d
            }

            /// Euclidean norm of all four components.
            pub fn norm4(self) -> f64 {
                self.dot4(self).sqrt()
            }

            pub fn max_abs(self) -> f64 {
                self.to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
            }

            pub fn is_finite(self) -> bool {
                self.to_array().iter().all(|v| v.is_finite())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, o: $name) -> $name {
                $name::new(self.$a + o.$a, self.$b + o.$b, self.$c + o.$c, self.$d + o.$d)
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, o: $name) -> $name {
                $name::new(self.$a - o.$a, self.$b - o.$b, self.$c - o.$c, self.$d - o.$d)
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name::new(-self.$a, -self.$b, -self.$c, -self.$d)
            }
        }

        impl Mul<f64> for $name {
            type Output = $name;
            fn mul(self, s: f64) -> $name {
                $name::new(self.$a * s, self.$b * s, self.$c * s, self.$d * s)
            }
        }

        impl Mul<$name> for f64 {
            type Output = $name;
            fn mul(self, v: $name) -> $name {
                v * self
            }
        }
    };
}

/// A point in homogeneous coordinates; `w = 0` is a point at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HomPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub w: f64,
}

four_vector!(HomPoint { x, y, z, w });

impl HomPoint {
    pub fn xyz(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    /// Cartesian point, or `None` when `w` is zero.
    pub fn dehomogenize(self) -> Option<Vec3> {
        (self.w != 0.0).then(|| self.xyz() * (1.0 / self.w))
    }

    /// True when `|w|` is negligible against the spatial components.
    pub fn is_at_infinity(self, rel_tol: f64) -> bool {
        self.w.abs() <= rel_tol * self.xyz().max_abs()
    }
}

/// Plane `a·x + b·y + c·z + d·w = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Plane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

four_vector!(Plane { a, b, c, d });

impl Plane {
    /// Plane with the given normal passing through `point`.
    pub fn from_normal_point(normal: Vec3, point: Vec3) -> Self {
        Plane::new(normal.x, normal.y, normal.z, -normal.dot(point))
    }

    /// Plane through three points, normal `(p1 - p0) × (p2 - p0)`.
    pub fn through_points(p0: Vec3, p1: Vec3, p2: Vec3) -> Self {
        Self::from_normal_point((p1 - p0).cross(p2 - p0), p0)
    }

    pub fn normal(self) -> Vec3 {
        Vec3::new(self.a, self.b, self.c)
    }

    /// Scales the plane so that its normal has unit length.
    pub fn normalized(self) -> Result<Plane, LinalgError> {
        let n = self.normal().norm();
        if n == 0.0 || !n.is_finite() {
            return Err(LinalgError::ZeroNormal);
        }
        Ok(self * (1.0 / n))
    }

    /// Raw homogeneous evaluation `a·x + b·y + c·z + d·w`.
    pub fn eval(self, p: HomPoint) -> f64 {
        self.a * p.x + self.b * p.y + self.c * p.z + self.d * p.w
    }

    /// Evaluation at a Cartesian point.
    pub fn eval_point(self, p: Vec3) -> f64 {
        self.normal().dot(p) + self.d
    }

    /// Euclidean distance of a Cartesian point, signed by the normal.
    pub fn metric_distance(self, p: Vec3) -> Result<f64, LinalgError> {
        Ok(self.normalized()?.eval_point(p))
    }
}

/// Signed distance of a homogeneous point to a plane (raw, unnormalized).
pub fn signed_distance(p: Plane, point: HomPoint) -> f64 {
    p.eval(point)
}

/// Row-vector transform `v·M`.
pub fn transform(v: HomPoint, m: &Mat4) -> HomPoint {
    m.transform(v)
}

/// 4×4 matrix, row-major.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Mat4 {
    m: [[f64; 4]; 4],
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat4 [")?;
        for r in &self.m {
            writeln!(f, "  {:>14.8e} {:>14.8e} {:>14.8e} {:>14.8e}", r[0], r[1], r[2], r[3])?;
        }
        write!(f, "]")
    }
}

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4::from_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    pub const fn from_rows(m: [[f64; 4]; 4]) -> Self {
        Self { m }
    }

    pub fn from_cols(c: [[f64; 4]; 4]) -> Self {
        Self::from_rows(c).transpose()
    }

    /// Builds a matrix whose columns are the given planes.
    pub fn from_plane_cols(cols: [Plane; 4]) -> Self {
        Self::from_cols(cols.map(Plane::to_array))
    }

    /// Builds a matrix whose rows are the given points.
    pub fn from_point_rows(rows: [HomPoint; 4]) -> Self {
        Self::from_rows(rows.map(HomPoint::to_array))
    }

    pub fn from_row_major(v: [f64; 16]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, x) in v.iter().enumerate() {
            m[i / 4][i % 4] = *x;
        }
        Self { m }
    }

    pub fn to_row_major(&self) -> [f64; 16] {
        let mut v = [0.0; 16];
        for i in 0..16 {
            v[i] = self.m[i / 4][i % 4];
        }
        v
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            m[i][i] = d[i];
        }
        Self { m }
    }

    pub fn rows(&self) -> [[f64; 4]; 4] {
        self.m
    }

    pub fn row(&self, i: usize) -> [f64; 4] {
        self.m[i]
    }

    pub fn col(&self, j: usize) -> [f64; 4] {
        [self.m[0][j], self.m[1][j], self.m[2][j], self.m[3][j]]
    }

    /// Column `j` read as a plane.
    pub fn col_plane(&self, j: usize) -> Plane {
        Plane::from_array(self.col(j))
    }

    /// Row `i` read as a homogeneous point.
    pub fn row_point(&self, i: usize) -> HomPoint {
        HomPoint::from_array(self.m[i])
    }

    pub fn with_col(mut self, j: usize, col: [f64; 4]) -> Self {
        for (i, v) in col.iter().enumerate() {
            self.m[i][j] = *v;
        }
        self
    }

    pub fn with_row(mut self, i: usize, row: [f64; 4]) -> Self {
        self.m[i] = row;
        self
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; 4]; 4];
        for (i, row) in self.m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t[j][i] = *v;
            }
        }
        Self { m: t }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { m: self.m.map(|r| r.map(|v| v * s)) }
    }

    pub fn sub(&self, o: &Mat4) -> Self {
        let mut r = self.m;
        for i in 0..4 {
            for j in 0..4 {
                r[i][j] -= o.m[i][j];
            }
        }
        Self { m: r }
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Induced ∞-norm (maximum absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        self.m
            .iter()
            .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|v| v.is_finite())
    }

    pub fn mul(&self, o: &Mat4) -> Mat4 {
        let mut r = [[0.0; 4]; 4];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = (0..4).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        Mat4 { m: r }
    }

    /// Row-vector product `v·M`.
    pub fn transform(&self, v: HomPoint) -> HomPoint {
        let a = v.to_array();
        HomPoint::from_array(std::array::from_fn(|j| (0..4).map(|i| a[i] * self.m[i][j]).sum()))
    }

    /// Column-vector product `M·v`.
    pub fn apply_column(&self, v: [f64; 4]) -> [f64; 4] {
        self.m.map(|row| (0..4).map(|j| row[j] * v[j]).sum())
    }

    /// Max-norm deviation of `self` from the identity.
    pub fn identity_residual(&self) -> f64 {
        self.sub(&Mat4::IDENTITY).max_abs()
    }

    pub fn determinant(&self) -> f64 {
        match lu_inverse(self) {
            Ok((_, det)) => det,
            Err(LinalgError::Singular { det, .. }) => det,
            Err(_) => 0.0,
        }
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Mat4, LinalgError> {
        lu_inverse(self).map(|(inv, _)| inv)
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.m[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.m[i][j]
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, o: Mat4) -> Mat4 {
        Mat4::mul(&self, &o)
    }
}

impl Mul<Mat4> for HomPoint {
    type Output = HomPoint;
    fn mul(self, m: Mat4) -> HomPoint {
        m.transform(self)
    }
}

pub fn mul_mat4(a: &Mat4, b: &Mat4) -> Mat4 {
    a.mul(b)
}

pub fn invert_mat4(m: &Mat4) -> Result<Mat4, LinalgError> {
    m.inverse()
}

fn lu_inverse(src: &Mat4) -> Result<(Mat4, f64), LinalgError> {
    let scale = src.max_abs();
    let mut a = src.m;
    let mut inv = Mat4::IDENTITY.m;
    let mut det = 1.0;
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap_or(col);
        if a[pivot][col] == 0.0 {
            return Err(LinalgError::Singular { det: 0.0, scale });
        }
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..4 {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for i in 0..4 {
            if i == col {
                continue;
            }
            let f = a[i][col];
            if f != 0.0 {
                for j in 0..4 {
                    a[i][j] -= f * a[col][j];
                    inv[i][j] -= f * inv[col][j];
                }
            }
        }
    }
    if !(det.abs() > SINGULAR_REL_TOL * scale.powi(4)) {
        return Err(LinalgError::Singular { det, scale });
    }
    Ok((Mat4 { m: inv }, det))
}

/// 3×3 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3 {
    m: [[f64; 3]; 3],
}

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3::from_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub const fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn from_cols(c: [Vec3; 3]) -> Self {
        Self::from_rows([
            [c[0].x, c[1].x, c[2].x],
            [c[0].y, c[1].y, c[2].y],
            [c[0].z, c[1].z, c[2].z],
        ])
    }

    pub fn diagonal(d: [f64; 3]) -> Self {
        Self::from_rows([[d[0], 0.0, 0.0], [0.0, d[1], 0.0], [0.0, 0.0, d[2]]])
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        let r = self.m.map(|row| row[0] * v.x + row[1] * v.y + row[2] * v.z);
        Vec3::from_array(r)
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Solves `A·x = b` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: Vec3) -> Result<Vec3, LinalgError> {
        let scale = self.max_abs();
        let det = self.determinant();
        if !(det.abs() > SINGULAR_REL_TOL * scale.powi(3)) {
            return Err(LinalgError::Singular { det, scale });
        }
        let mut a = self.m;
        let mut rhs = b.to_array();
        for col in 0..3 {
            let pivot = (col..3)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap_or(col);
            a.swap(pivot, col);
            rhs.swap(pivot, col);
            for i in col + 1..3 {
                let f = a[i][col] / a[col][col];
                for j in col..3 {
                    a[i][j] -= f * a[col][j];
                }
                rhs[i] -= f * rhs[col];
            }
        }
        let mut x = [0.0; 3];
        for i in (0..3).rev() {
            let s: f64 = (i + 1..3).map(|j| a[i][j] * x[j]).sum();
            x[i] = (rhs[i] - s) / a[i][i];
        }
        Ok(Vec3::from_array(x))
    }
}

pub fn solve3(a: &Mat3, b: Vec3) -> Result<Vec3, LinalgError> {
    a.solve(b)
}

/// Point where three planes meet, if their normals span space.
pub fn intersect_planes(p0: Plane, p1: Plane, p2: Plane) -> Result<Vec3, LinalgError> {
    let a = Mat3::from_rows([p0.normal().to_array(), p1.normal().to_array(), p2.normal().to_array()]);
    a.solve(Vec3::new(-p0.d, -p1.d, -p2.d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Mat4 {
        Mat4::from_rows([
            [2.0, 1.0, 0.5, 0.0],
            [0.3, 3.0, -1.0, 0.2],
            [1.0, -0.5, 4.0, 1.0],
            [0.0, 0.7, 0.1, 1.5],
        ])
    }

    #[test]
    fn identity_products() {
        assert_eq!(Mat4::IDENTITY * Mat4::IDENTITY, Mat4::IDENTITY);
        let a = Mat4::diagonal([2.0; 4]);
        let b = Mat4::diagonal([0.5; 4]);
        assert_eq!(a * b, Mat4::IDENTITY);
    }

    #[test]
    fn inverse_round_trip() {
        let m = sample();
        let inv = m.inverse().unwrap();
        assert!((m * inv).identity_residual() < 1e-12);
        assert!((inv * m).identity_residual() < 1e-12);
    }

    #[test]
    fn diagonal_inverse() {
        let inv = Mat4::diagonal([1.0, 2.0, 4.0, 1.0]).inverse().unwrap();
        assert_eq!(inv, Mat4::diagonal([1.0, 0.5, 0.25, 1.0]));
        assert_eq!(Mat4::IDENTITY.inverse().unwrap(), Mat4::IDENTITY);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = Mat4::from_rows([
            [1.0, 2.0, 3.0, 4.0],
            [2.0, 4.0, 6.0, 8.0],
            [0.0, 1.0, 0.0, 1.0],
            [1.0, 0.0, 1.0, 0.0],
        ]);
        assert!(matches!(m.inverse(), Err(LinalgError::Singular { .. })));
        // tiny but scaled-consistent matrices are not singular
        let tiny = Mat4::IDENTITY.scale(1e-30);
        assert!(tiny.inverse().is_ok());
    }

    #[test]
    fn row_vector_transform() {
        let p = HomPoint::new(1.0, 2.0, 3.0, 1.0);
        assert_eq!(transform(p, &Mat4::IDENTITY), p);
        let t = Mat4::IDENTITY.with_row(3, [4.0, 5.0, 6.0, 1.0]);
        assert_eq!(transform(HomPoint::new(0.0, 0.0, 0.0, 1.0), &t), HomPoint::new(4.0, 5.0, 6.0, 1.0));
        let flip = Mat4::diagonal([1.0, 1.0, -1.0, 1.0]);
        assert_eq!(transform(HomPoint::new(0.0, 0.0, 1.0, 0.0), &flip), HomPoint::new(0.0, 0.0, -1.0, 0.0));
    }

    #[test]
    fn columns_are_clip_coordinates() {
        let m = sample();
        let p = HomPoint::new(0.3, -1.2, 2.0, 1.0);
        let q = m.transform(p);
        for (j, v) in q.to_array().iter().enumerate() {
            assert!((m.col_plane(j).eval(p) - v).abs() < 1e-14);
        }
    }

    #[test]
    fn solve3_cases() {
        assert_eq!(Mat3::IDENTITY.solve(Vec3::new(1.0, 2.0, 3.0)).unwrap(), Vec3::new(1.0, 2.0, 3.0));
        let x = Mat3::diagonal([2.0; 3]).solve(Vec3::new(2.0, 4.0, 6.0)).unwrap();
        assert_eq!(x, Vec3::new(1.0, 2.0, 3.0));
        let sing = Mat3::from_rows([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 0.0, 1.0]]);
        assert!(sing.solve(Vec3::new(1.0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn solve3_spd_residual() {
        // A = Bᵀ·B + I is symmetric positive definite
        let b = [[1.0, 0.2, -0.4], [0.5, 2.0, 0.1], [-0.3, 0.7, 1.5]];
        let mut a = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                a[i][j] = (0..3).map(|k| b[k][i] * b[k][j]).sum::<f64>() + if i == j { 1.0 } else { 0.0 };
            }
        }
        let a = Mat3::from_rows(a);
        let rhs = Vec3::new(0.3, -2.0, 5.0);
        let x = solve3(&a, rhs).unwrap();
        assert!((a.mul_vec(x) - rhs).max_abs() < 1e-12);
    }

    #[test]
    fn signed_distance_cases() {
        assert_eq!(signed_distance(Plane::new(0.0, 0.0, 1.0, 0.0), HomPoint::new(0.0, 0.0, 5.0, 1.0)), 5.0);
        assert_eq!(signed_distance(Plane::new(0.0, 0.0, 1.0, -1.0), HomPoint::new(0.0, 0.0, 1.0, 1.0)), 0.0);
        assert_eq!(signed_distance(Plane::new(1.0, 0.0, 0.0, 2.0), HomPoint::new(3.0, 0.0, 0.0, 1.0)), 5.0);
    }

    #[test]
    fn plane_helpers() {
        let p = Plane::new(0.0, 0.0, 2.0, -4.0).normalized().unwrap();
        assert_eq!(p, Plane::new(0.0, 0.0, 1.0, -2.0));
        assert_eq!(Plane::new(0.0, 0.0, 0.0, 1.0).normalized(), Err(LinalgError::ZeroNormal));
        let x = intersect_planes(
            Plane::new(1.0, 0.0, 0.0, -1.0),
            Plane::new(0.0, 1.0, 0.0, -2.0),
            Plane::new(0.0, 0.0, 1.0, -3.0),
        )
        .unwrap();
        assert_eq!(x, Vec3::new(1.0, 2.0, 3.0));
        let tp = Plane::through_points(Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0));
        assert_eq!(tp.normal(), Vec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn dehomogenize() {
        assert_eq!(HomPoint::new(2.0, 4.0, 6.0, 2.0).dehomogenize(), Some(Vec3::new(1.0, 2.0, 3.0)));
        assert_eq!(HomPoint::new(1.0, 0.0, 0.0, 0.0).dehomogenize(), None);
    }
}
