//! Scene and result file formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::build::{DescentParams, OriginProblem};
use crate::extract::AffineFrustum;
use crate::linalg::{HomPoint, Mat4, Plane, Vec3};
use crate::transform::{CropSpec, LensSpec, ReflectiveRect};

use super::CliError;

pub const SCENE_VERSION: u32 = 1;

/// Input scene. Matrices are row-major; points have 3 or 4 components.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub version: u32,
    #[serde(default)]
    pub matrices: BTreeMap<String, [f64; 16]>,
    #[serde(default)]
    pub planes: BTreeMap<String, [f64; 4]>,
    #[serde(default)]
    pub points: BTreeMap<String, Vec<f64>>,
    #[serde(default)]
    pub specs: BTreeMap<String, SpecRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpecRecord {
    Crop {
        x_offset: f64,
        y_offset: f64,
        block_width: f64,
        block_height: f64,
        width: f64,
        height: f64,
    },
    Lens {
        center: [f64; 3],
        radius: f64,
        power: f64,
        plane: [f64; 4],
        /// Lattice placement; defaults to a `2R` square centred on the lens.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grid: Option<GridRecord>,
    },
    Rect {
        p1: [f64; 3],
        a1: [f64; 3],
        a2: [f64; 3],
        observer: [f64; 3],
        far_dist: f64,
    },
    Origin {
        targets: [[f64; 4]; 4],
        anchors: [[f64; 3]; 4],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        descent: Option<DescentRecord>,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridRecord {
    pub corner: [f64; 3],
    pub across: [f64; 3],
    pub down: [f64; 3],
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescentRecord {
    pub step0: f64,
    pub max_iter: usize,
    pub grad_tol: f64,
}

fn missing(kind: &str, name: &str) -> CliError {
    CliError::Parse(format!("no {kind} named {name:?} in scene"))
}

fn finite(name: &str, v: &[f64]) -> Result<(), CliError> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(CliError::Parse(format!("{name:?} has a non-finite entry")))
    }
}

impl SceneFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let scene: SceneFile = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("scene: {e}")))?;
        if scene.version != SCENE_VERSION {
            return Err(CliError::Parse(format!("unsupported scene version {}", scene.version)));
        }
        Ok(scene)
    }

    pub fn matrix(&self, name: &str) -> Result<Mat4, CliError> {
        let m = self.matrices.get(name).ok_or_else(|| missing("matrix", name))?;
        finite(name, m)?;
        Ok(Mat4::from_row_major(*m))
    }

    /// The frustum for matrix `name`, paired with `name.inv` when present.
    pub fn frustum(&self, name: &str) -> Result<AffineFrustum, CliError> {
        let proj = self.matrix(name)?;
        let inv_name = format!("{name}.inv");
        let f = if self.matrices.contains_key(&inv_name) {
            AffineFrustum::from_pair(proj, self.matrix(&inv_name)?)
        } else {
            AffineFrustum::from_projection(proj)
        };
        f.map_err(|e| CliError::Math(format!("{name}: {e}")))
    }

    pub fn plane(&self, name: &str) -> Result<Plane, CliError> {
        let p = self.planes.get(name).ok_or_else(|| missing("plane", name))?;
        finite(name, p)?;
        Ok(Plane::from_array(*p))
    }

    pub fn point(&self, name: &str) -> Result<HomPoint, CliError> {
        let p = self.points.get(name).ok_or_else(|| missing("point", name))?;
        finite(name, p)?;
        match p.as_slice() {
            [x, y, z] => Ok(HomPoint::new(*x, *y, *z, 1.0)),
            [x, y, z, w] => Ok(HomPoint::new(*x, *y, *z, *w)),
            _ => Err(CliError::Parse(format!("point {name:?} needs 3 or 4 components, got {}", p.len()))),
        }
    }

    /// A finite point, dehomogenized.
    pub fn point3(&self, name: &str) -> Result<Vec3, CliError> {
        self.point(name)?.dehomogenize().ok_or_else(|| CliError::Parse(format!("point {name:?} is at infinity")))
    }

    fn spec(&self, name: &str) -> Result<&SpecRecord, CliError> {
        self.specs.get(name).ok_or_else(|| missing("spec", name))
    }

    fn wrong_type(name: &str, want: &str) -> CliError {
        CliError::Parse(format!("spec {name:?} is not a {want} spec"))
    }

    pub fn crop_spec(&self, name: &str) -> Result<CropSpec, CliError> {
        match *self.spec(name)? {
            SpecRecord::Crop { x_offset, y_offset, block_width, block_height, width, height } => {
                Ok(CropSpec { x_offset, y_offset, block_width, block_height, width, height })
            }
            _ => Err(Self::wrong_type(name, "crop")),
        }
    }

    pub fn lens_spec(&self, name: &str) -> Result<(LensSpec, Option<GridRecord>), CliError> {
        match self.spec(name)? {
            SpecRecord::Lens { center, radius, power, plane, grid } => Ok((
                LensSpec { center: Vec3::from_array(*center), radius: *radius, power: *power, plane: Plane::from_array(*plane) },
                *grid,
            )),
            _ => Err(Self::wrong_type(name, "lens")),
        }
    }

    pub fn rect_spec(&self, name: &str) -> Result<ReflectiveRect, CliError> {
        match *self.spec(name)? {
            SpecRecord::Rect { p1, a1, a2, observer, far_dist } => Ok(ReflectiveRect {
                p1: Vec3::from_array(p1),
                a1: Vec3::from_array(a1),
                a2: Vec3::from_array(a2),
                observer: Vec3::from_array(observer),
                far_dist,
            }),
            _ => Err(Self::wrong_type(name, "rect")),
        }
    }

    pub fn origin_problem(&self, name: &str) -> Result<OriginProblem, CliError> {
        match self.spec(name)? {
            SpecRecord::Origin { targets, anchors, descent } => Ok(OriginProblem {
                targets: targets.map(Plane::from_array),
                anchors: anchors.map(Vec3::from_array),
                descent: descent
                    .map(|d| DescentParams { step0: d.step0, max_iter: d.max_iter, grad_tol: d.grad_tol })
                    .unwrap_or_default(),
            }),
            _ => Err(Self::wrong_type(name, "origin")),
        }
    }
}

/// One named value produced by an operation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Output {
    pub name: String,
    pub op: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub version: u32,
    pub command: Value,
    pub outputs: Vec<Output>,
    pub diagnostics: BTreeMap<String, Value>,
}

impl ResultFile {
    pub fn new(command: Value) -> Self {
        Self { version: SCENE_VERSION, command, outputs: Vec::new(), diagnostics: BTreeMap::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, op: &str, value: Value) {
        self.outputs.push(Output { name: name.into(), op: op.to_string(), value });
    }

    pub fn diagnose(&mut self, key: impl Into<String>, value: Value) {
        self.diagnostics.insert(key.into(), value);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result values are serializable");
        s.push('\n');
        s
    }
}
