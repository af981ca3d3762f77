//! Command-line front end.
//!
//! Every subcommand reads a JSON scene, runs one library operation and
//! writes a JSON result (or an OBJ/SVG file). Exit codes: 0 success,
//! 2 parse or usage error, 3 math error, 4 I/O error.

pub mod export;
pub mod scene;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::build::{approximate_origin, build_frustum, BuildOutcome, FarStrategy, SidePlanes};
use crate::extract::{affinity_residual, dividing_planes, extract_planes, key_points, AffineFrustum, PlaneCoefficients, PlaneId};
use crate::linalg::{HomPoint, Mat4, Plane, Vec3};
use crate::transform::{crop, lens_tile_frustums, reflect, reflect_and_clip_with, reflect_rect, FarAnchor, LensSpec, TileGrid};
use crate::validate::{from_unit_cube, validate, NonAffineFrustum, ValidationReport};

pub use scene::{ResultFile, SceneFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Math(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Math(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

fn math(e: impl std::fmt::Display) -> CliError {
    CliError::Math(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "frustum-kit", version, about = "Affine viewing frustum algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Scene file (JSON).
    #[arg(long)]
    pub scene: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FarChoice {
    Point,
    Maxvol,
    Kn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AnchorChoice {
    Nearest,
    Farthest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSize {
    pub rows: usize,
    pub cols: usize,
}

fn parse_grid(s: &str) -> Result<GridSize, String> {
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected ROWSxCOLS, got {s:?}"))?;
    let num = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
    Ok(GridSize { rows: num(r)?, cols: num(c)? })
}

#[derive(Debug, Args)]
pub struct LensArgs {
    /// Lens spec name.
    #[arg(long)]
    pub spec: String,
    /// Tile lattice size.
    #[arg(long, value_parser = parse_grid, default_value = "4x4")]
    pub grid: GridSize,
    /// Overrides the spec's power.
    #[arg(long)]
    pub power: Option<f64>,
    /// Overrides the spec's radius.
    #[arg(long)]
    pub radius: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Planes, dividing planes, key points and affinity residuals of a matrix.
    Extract {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        frustum: String,
    },
    /// Builds a projection from side, near and far planes.
    Build {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "left")]
        left: String,
        #[arg(long, default_value = "right")]
        right: String,
        #[arg(long, default_value = "top")]
        top: String,
        #[arg(long, default_value = "bottom")]
        bottom: String,
        #[arg(long, default_value = "near")]
        near: String,
        #[arg(long, value_enum, default_value = "maxvol")]
        far_strategy: FarChoice,
        /// Point the far plane passes through, for `--far-strategy point`.
        #[arg(long)]
        q_point: Option<String>,
        /// Near-plane scale, for `--far-strategy kn`.
        #[arg(long, allow_hyphen_values = true)]
        kn: Option<f64>,
    },
    /// Crops a frustum to a sub-rectangle of its near plane.
    Crop {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        frustum: String,
        #[arg(long)]
        spec: String,
    },
    /// Reflects a frustum across a plane and clips it there.
    ReflectPlane {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        frustum: String,
        #[arg(long)]
        plane: String,
        /// Reflect only.
        #[arg(long)]
        no_clip: bool,
        #[arg(long, value_enum, default_value = "nearest")]
        anchor: AnchorChoice,
    },
    /// Frustum of the reflection seen in a rectangular mirror.
    ReflectRect {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        spec: String,
    },
    /// Lens-warps a tile lattice and builds one frustum per tile.
    Lens {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        lens: LensArgs,
        /// Common origin of the tile frusta.
        #[arg(long)]
        origin: String,
        /// Far plane depth as a multiple of the origin-to-plane distance.
        #[arg(long, default_value_t = crate::transform::DEFAULT_FAR_FACTOR)]
        far_factor: f64,
    },
    /// Validity report for a frustum.
    Validate {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        frustum: String,
    },
    /// Maps points through the plane-distance clip mapping.
    NonaffineMap {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        frustum: String,
        #[arg(long = "point", required = true)]
        points: Vec<String>,
        /// Also report x, y remapped to [-1, 1].
        #[arg(long)]
        ndc: bool,
    },
    /// Fits a frustum origin to four target planes.
    Origin {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        max_iter: Option<usize>,
        #[arg(long)]
        grad_tol: Option<f64>,
        #[arg(long)]
        step0: Option<f64>,
    },
    /// Writes frusta as an OBJ wireframe.
    ExportObj {
        #[command(flatten)]
        io: Io,
        #[arg(long = "frustum", required = true)]
        frusta: Vec<String>,
    },
    /// Writes the original and warped lens grids as SVG.
    ExportSvg {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        lens: LensArgs,
    },
    /// Runs built-in consistency checks on a generated corpus.
    Check {
        #[arg(long, default_value_t = crate::corpus::DEFAULT_SEED)]
        seed: u64,
    },
}

fn mat_json(m: &Mat4) -> Value {
    json!(m.to_row_major())
}

fn point_json(p: HomPoint) -> Value {
    match p.dehomogenize() {
        Some(c) if !p.is_at_infinity(1e-12) => json!({ "homogeneous": p.to_array(), "cartesian": c.to_array() }),
        _ => json!({ "homogeneous": p.to_array() }),
    }
}

fn report_json(r: &ValidationReport) -> Value {
    json!({
        "valid": r.valid,
        "near_convex": r.near_convex,
        "separates": r.separates,
        "origin_at_infinity": r.origin_at_infinity,
        "details": r.details,
    })
}

fn frustum_json(f: &AffineFrustum) -> Value {
    json!({ "proj": mat_json(f.proj()), "inv_proj": mat_json(f.inv_proj()) })
}

/// Adds a frustum output together with its validation report and pair residual.
fn push_frustum(res: &mut ResultFile, name: &str, op: &str, f: &AffineFrustum) {
    res.push(name, op, frustum_json(f));
    res.diagnose(format!("{name}.validation"), report_json(&validate(f)));
    res.diagnose(format!("{name}.pair_residual"), json!(f.pair_residual()));
}

fn push_build(res: &mut ResultFile, name: &str, out: &BuildOutcome) {
    push_frustum(res, name, "build_frustum", &out.frustum);
    let c = out.coefficients;
    res.diagnose(format!("{name}.coefficients"), json!({ "kl": c.kl, "kr": c.kr, "kt": c.kt, "kb": c.kb, "kn": out.kn }));
    if let Some(s) = out.search {
        res.diagnose(format!("{name}.search"), json!({ "seed": s.seed, "iterations": s.iterations }));
    }
    if !out.warnings.is_empty() {
        res.diagnose(format!("{name}.warnings"), json!(out.warnings));
    }
}

fn read_scene(path: &Path) -> Result<SceneFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    SceneFile::parse(&text)
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn lens_setup(scene: &SceneFile, a: &LensArgs) -> Result<(LensSpec, TileGrid), CliError> {
    let (mut spec, grid) = scene.lens_spec(&a.spec)?;
    if let Some(p) = a.power {
        spec.power = p;
    }
    if let Some(r) = a.radius {
        spec.radius = r;
    }
    let (corner, across, down) = match grid {
        Some(g) => (Vec3::from_array(g.corner), Vec3::from_array(g.across), Vec3::from_array(g.down)),
        None => {
            let (u, v) = export::plane_basis(spec.plane).ok_or_else(|| CliError::Parse("lens plane has a zero normal".into()))?;
            let r = spec.radius;
            (spec.center - u * r - v * r, u * (2.0 * r), v * (2.0 * r))
        }
    };
    Ok((spec, TileGrid::uniform(corner, across, down, a.grid.rows, a.grid.cols)))
}

fn lens_echo(a: &LensArgs) -> Value {
    json!({ "spec": a.spec, "grid": [a.grid.rows, a.grid.cols], "power": a.power, "radius": a.radius })
}

fn points_json(pts: &[Vec3]) -> Value {
    json!(pts.iter().map(|p| p.to_array()).collect::<Vec<_>>())
}

/// Runs one command and returns the text to write.
pub fn execute(cmd: &Command) -> Result<(String, Option<PathBuf>), CliError> {
    let (io, text) = match cmd {
        Command::Extract { io, frustum } => {
            let scene = read_scene(&io.scene)?;
            let f = scene.frustum(frustum)?;
            let mut res = ResultFile::new(json!({ "name": "extract", "scene": io.scene, "frustum": frustum }));
            let planes = extract_planes(&f);
            for id in PlaneId::ALL {
                res.push(id.name(), "extract_planes", json!(planes.get(id).to_array()));
            }
            let d = dividing_planes(&f);
            for (n, p) in [("dx", d.dx), ("dy", d.dy), ("dz", d.dz)] {
                res.push(n, "dividing_planes", json!(p.to_array()));
            }
            let k = key_points(&f);
            for (i, c) in k.corners.iter().enumerate() {
                res.push(format!("C{}", i + 1), "key_points", point_json(*c));
            }
            for (n, p) in [("D", k.center), ("O", k.cam), ("O1", k.vanish_y), ("O2", k.vanish_x)] {
                res.push(n, "key_points", point_json(p));
            }
            let (r1, r2) = affinity_residual(&planes, &PlaneCoefficients::UNIT);
            res.diagnose("affinity_residual", json!([r1, r2]));
            res.diagnose(format!("{frustum}.validation"), report_json(&validate(&f)));
            res.diagnose(format!("{frustum}.pair_residual"), json!(f.pair_residual()));
            (io, res.to_json())
        }
        Command::Build { io, left, right, top, bottom, near, far_strategy, q_point, kn } => {
            let scene = read_scene(&io.scene)?;
            let sides = SidePlanes {
                left: scene.plane(left)?,
                right: scene.plane(right)?,
                top: scene.plane(top)?,
                bottom: scene.plane(bottom)?,
            };
            let near_plane = scene.plane(near)?;
            let far = match far_strategy {
                FarChoice::Point => {
                    let q = q_point.as_ref().ok_or_else(|| CliError::Parse("--far-strategy point needs --q-point".into()))?;
                    FarStrategy::ThroughPoint(scene.point(q)?)
                }
                FarChoice::Maxvol => FarStrategy::MaximizeVolume,
                FarChoice::Kn => FarStrategy::ExplicitKn(kn.ok_or_else(|| CliError::Parse("--far-strategy kn needs --kn".into()))?),
            };
            let out = build_frustum(&sides, near_plane, far).map_err(math)?;
            let mut res = ResultFile::new(json!({
                "name": "build", "scene": io.scene,
                "planes": [left, right, top, bottom, near],
                "far_strategy": format!("{far_strategy:?}").to_lowercase(), "q_point": q_point, "kn": kn,
            }));
            push_build(&mut res, "frustum", &out);
            (io, res.to_json())
        }
        Command::Crop { io, frustum, spec } => {
            let scene = read_scene(&io.scene)?;
            let f = scene.frustum(frustum)?;
            let out = crop(&f, &scene.crop_spec(spec)?).map_err(math)?;
            let mut res = ResultFile::new(json!({ "name": "crop", "scene": io.scene, "frustum": frustum, "spec": spec }));
            push_frustum(&mut res, &format!("{frustum}.crop"), "crop", &out);
            (io, res.to_json())
        }
        Command::ReflectPlane { io, frustum, plane, no_clip, anchor } => {
            let scene = read_scene(&io.scene)?;
            let f = scene.frustum(frustum)?;
            let c = scene.plane(plane)?;
            let mut res = ResultFile::new(json!({
                "name": "reflect-plane", "scene": io.scene, "frustum": frustum, "plane": plane,
                "clip": !no_clip, "anchor": format!("{anchor:?}").to_lowercase(),
            }));
            let name = format!("{frustum}.reflect");
            if *no_clip {
                push_frustum(&mut res, &name, "reflect", &reflect(&f, c).map_err(math)?);
            } else {
                let a = match anchor {
                    AnchorChoice::Nearest => FarAnchor::Nearest,
                    AnchorChoice::Farthest => FarAnchor::Farthest,
                };
                let out = reflect_and_clip_with(&f, c, a).map_err(math)?;
                push_frustum(&mut res, &name, "reflect_and_clip", &out.frustum);
                res.diagnose(format!("{name}.k"), json!(out.k));
                res.diagnose(format!("{name}.far_point"), point_json(out.far_point));
            }
            (io, res.to_json())
        }
        Command::ReflectRect { io, spec } => {
            let scene = read_scene(&io.scene)?;
            let r = scene.rect_spec(spec)?;
            let f = reflect_rect(&r).map_err(math)?;
            let mut res = ResultFile::new(json!({ "name": "reflect-rect", "scene": io.scene, "spec": spec }));
            push_frustum(&mut res, spec, "reflect_rect", &f);
            res.push(format!("{spec}.observer"), "reflect_rect", json!(r.reflected_observer().map_err(math)?.to_array()));
            let ndc: Vec<Value> = r.corners().iter().map(|&c| json!(f.project(c).map(Vec3::to_array))).collect();
            res.diagnose(format!("{spec}.corner_ndc"), json!(ndc));
            (io, res.to_json())
        }
        Command::Lens { io, lens, origin, far_factor } => {
            let scene = read_scene(&io.scene)?;
            let (spec, grid) = lens_setup(&scene, lens)?;
            let o = scene.point3(origin)?;
            let tiles = lens_tile_frustums(&grid, &spec, o, *far_factor).map_err(math)?;
            let mut echo = lens_echo(lens);
            echo["name"] = json!("lens");
            echo["scene"] = json!(io.scene);
            echo["origin"] = json!(origin);
            echo["far_factor"] = json!(far_factor);
            let mut res = ResultFile::new(echo);
            res.push("grid", "lens_distort", points_json(&grid.points));
            res.push("distorted", "lens_distort", points_json(&grid.distorted(&spec).map_err(math)?.points));
            let mut failures = 0;
            for t in &tiles {
                let name = format!("tile[{}][{}]", t.row, t.col);
                match &t.result {
                    Ok(out) => push_build(&mut res, &name, out),
                    Err(e) => {
                        failures += 1;
                        res.diagnose(format!("{name}.error"), json!(e.to_string()));
                    }
                }
            }
            res.diagnose("failed_tiles", json!(failures));
            (io, res.to_json())
        }
        Command::Validate { io, frustum } => {
            let scene = read_scene(&io.scene)?;
            let f = scene.frustum(frustum)?;
            let mut res = ResultFile::new(json!({ "name": "validate", "scene": io.scene, "frustum": frustum }));
            res.push(frustum.as_str(), "validate", report_json(&validate(&f)));
            (io, res.to_json())
        }
        Command::NonaffineMap { io, frustum, points, ndc } => {
            let scene = read_scene(&io.scene)?;
            let f = scene.frustum(frustum)?;
            let nf = NonAffineFrustum::from_affine(&f).map_err(math)?;
            let mut res =
                ResultFile::new(json!({ "name": "nonaffine-map", "scene": io.scene, "frustum": frustum, "points": points, "ndc": ndc }));
            for name in points {
                let m = nf.map(scene.point3(name)?).map_err(|e| CliError::Math(format!("{name}: {e}")))?;
                res.push(name.as_str(), "nonaffine_map", json!(m.to_array()));
                if *ndc {
                    res.push(format!("{name}.ndc"), "nonaffine_map", json!(from_unit_cube(m).to_array()));
                }
            }
            (io, res.to_json())
        }
        Command::Origin { io, spec, max_iter, grad_tol, step0 } => {
            let scene = read_scene(&io.scene)?;
            let mut p = scene.origin_problem(spec)?;
            if let Some(v) = max_iter {
                p.descent.max_iter = *v;
            }
            if let Some(v) = grad_tol {
                p.descent.grad_tol = *v;
            }
            if let Some(v) = step0 {
                p.descent.step0 = *v;
            }
            let est = approximate_origin(&p).map_err(math)?;
            let mut res = ResultFile::new(json!({
                "name": "origin", "scene": io.scene, "spec": spec,
                "max_iter": p.descent.max_iter, "grad_tol": p.descent.grad_tol, "step0": p.descent.step0,
            }));
            res.push(format!("{spec}.origin"), "approximate_origin", json!(est.origin.to_array()));
            res.diagnose("objective", json!(est.objective));
            res.diagnose("initial_objective", json!(est.initial_objective));
            res.diagnose("iterations", json!(est.iterations));
            res.diagnose("gradient_norm", json!(est.gradient_norm));
            res.diagnose("converged", json!(est.converged));
            (io, res.to_json())
        }
        Command::ExportObj { io, frusta } => {
            let scene = read_scene(&io.scene)?;
            let named = frusta.iter().map(|n| Ok((n.clone(), scene.frustum(n)?))).collect::<Result<Vec<_>, CliError>>()?;
            let (obj, skipped) = export::frusta_to_obj(&named);
            for name in skipped {
                eprintln!("frustum-kit: skipped {name}: corner at infinity");
            }
            (io, obj)
        }
        Command::ExportSvg { io, lens } => {
            let scene = read_scene(&io.scene)?;
            let (spec, grid) = lens_setup(&scene, lens)?;
            let warped = grid.distorted(&spec).map_err(math)?;
            (io, export::grids_to_svg(spec.plane, &grid, &warped))
        }
        Command::Check { seed } => return Ok((self_check(*seed)?, None)),
    };
    Ok((text, io.out.clone()))
}

/// Consistency checks on the generated corpus, one line per check.
pub fn self_check(seed: u64) -> Result<String, CliError> {
    use crate::transform::{crop_dense, CropSpec};
    let entries = crate::corpus::corpus(seed);
    let mut pair = 0.0_f64;
    let mut incidence = 0.0_f64;
    let mut round_trip = 0.0_f64;
    let mut sparse = 0.0_f64;
    let mut involution = 0.0_f64;
    let c = Plane::new(0.3, -0.4, 0.866, 1.5);
    let cs = CropSpec { x_offset: 10.0, y_offset: 30.0, block_width: 64.0, block_height: 48.0, width: 640.0, height: 480.0 };
    for e in &entries {
        let f = &e.frustum;
        pair = pair.max(f.pair_residual());
        let planes = extract_planes(f);
        let unit = planes.normalized().map_err(math)?;
        for (corner, ids) in key_points(f).corners.iter().zip(crate::extract::CORNER_PLANES) {
            let p = corner.dehomogenize().ok_or_else(|| CliError::Math(format!("{}: corner at infinity", e.name)))?;
            for id in ids {
                incidence = incidence.max(unit.get(id).eval_point(p).abs());
            }
        }
        let rebuilt = build_frustum(&SidePlanes::from(&planes), planes.near, FarStrategy::ThroughPoint(key_points(f).corners[4]))
            .map_err(|err| CliError::Math(format!("{}: {err}", e.name)))?;
        let (a, b) = (f.proj().to_row_major(), rebuilt.frustum.proj().to_row_major());
        let i = (0..16).max_by(|&i, &j| a[i].abs().total_cmp(&a[j].abs())).unwrap_or(0);
        let s = a[i] / b[i];
        round_trip = round_trip.max((0..16).map(|k| (a[k] - s * b[k]).abs()).fold(0.0, f64::max) / f.proj().max_abs());
        let (x, y) = (crop(f, &cs).map_err(math)?, crop_dense(f, &cs).map_err(math)?);
        sparse = sparse.max(x.proj().sub(y.proj()).max_abs());
        let back = reflect(&reflect(f, c).map_err(math)?, c).map_err(math)?;
        involution = involution.max(back.proj().sub(f.proj()).max_abs() / f.proj().max_abs());
    }
    let checks = [
        ("pair residual", pair, 1e-8),
        ("corner incidence", incidence, 1e-9),
        ("build round trip", round_trip, 1e-7),
        ("crop sparse vs dense", sparse, 1e-10),
        ("reflect twice", involution, 1e-12),
    ];
    let failed = checks.iter().any(|&(_, worst, tol)| !(worst < tol));
    let mut lines = vec![format!("corpus: {} frusta, seed {seed}", entries.len())];
    for (name, worst, tol) in checks {
        lines.push(format!("{} {name}: {worst:.2e} (tolerance {tol:.0e})", if worst < tol { "ok  " } else { "FAIL" }));
    }
    let mut text = lines.join("\n");
    text.push('\n');
    if failed {
        return Err(CliError::Math(text));
    }
    Ok(text)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let (text, out) = execute(&cli.command)?;
    write_out(out.as_deref(), &text)
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("frustum-kit: {e}");
            e.exit_code()
        }
    }
}
