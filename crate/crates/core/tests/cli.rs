use std::path::Path;
use std::process::Command;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_frustum-kit");

// glFrustum-style n=1, f=10, l=b=-1, r=t=1 in [0,1] depth
const SCENE: &str = r#"{
  "version": 1,
  "matrices": {
    "cam": [1,0,0,0, 0,1,0,0, 0,0,-1.1111111111111112,-1, 0,0,-1.1111111111111112,0],
    "id": [1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]
  },
  "planes": { "floor": [0,0,1,5], "left": [1,0,1,0], "right": [-1,0,1,0], "top": [0,-1,1,0], "bottom": [0,1,1,0], "near": [0,0,-1,-1] },
  "points": { "q": [10,10,-10], "a": [0,0,-5], "o": [0,0,0] },
  "specs": {
    "whole": { "type": "crop", "x_offset": 0, "y_offset": 0, "block_width": 640, "block_height": 480, "width": 640, "height": 480 },
    "flat": { "type": "lens", "center": [0,0,-1], "radius": 1, "power": 1, "plane": [0,0,1,1] }
  }
}"#;

fn run(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let scene = dir.join("scene.json");
    std::fs::write(&scene, SCENE).unwrap();
    let out = Command::new(BIN).args(args).arg("--scene").arg(&scene).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(dir: &Path, args: &[&str]) -> Value {
    let (code, out, err) = run(dir, args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn output<'a>(v: &'a Value, name: &str) -> &'a Value {
    &v["outputs"].as_array().unwrap().iter().find(|o| o["name"] == name).unwrap_or_else(|| panic!("no output {name}"))["value"]
}

fn matrix(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn extract_reports_camera_at_origin() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["extract", "--frustum", "cam"]);
    let o = matrix(&output(&v, "O")["cartesian"]);
    assert!(o.iter().all(|x| x.abs() < 1e-12), "{o:?}");
    assert_eq!(v["diagnostics"]["cam.validation"]["valid"], true);
}

#[test]
fn identity_key_points_are_matrix_rows() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["extract", "--frustum", "id"]);
    assert_eq!(matrix(&output(&v, "O")["homogeneous"]), vec![0.0, 0.0, 1.0, 0.0]);
    assert_eq!(matrix(&output(&v, "C1")["homogeneous"]), vec![1.0, 1.0, 0.0, 1.0]);
}

#[test]
fn missing_name_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = run(dir.path(), &["extract", "--frustum", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("nope"), "{err}");
}

#[test]
fn unreadable_scene_is_an_io_error() {
    let out = Command::new(BIN).args(["validate", "--frustum", "cam", "--scene", "/nonexistent/scene.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn full_block_crop_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["crop", "--frustum", "cam", "--spec", "whole"]);
    let proj = matrix(&output(&v, "cam.crop")["proj"]);
    let cam: Vec<f64> = serde_json::from_str::<Value>(SCENE).unwrap()["matrices"]["cam"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!(max_diff(&proj, &cam) < 1e-15);
    assert_eq!(v["diagnostics"]["cam.crop.validation"]["valid"], true);
}

#[test]
fn reflect_twice_without_clip_restores() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["reflect-plane", "--frustum", "cam", "--plane", "floor", "--no-clip"]);
    let once = output(&v, "cam.reflect");
    let scene: Value = serde_json::from_str(SCENE).unwrap();
    let mut second = scene.clone();
    second["matrices"] = serde_json::json!({ "r": once["proj"], "r.inv": once["inv_proj"] });
    let path = dir.path().join("second.json");
    std::fs::write(&path, serde_json::to_string(&second).unwrap()).unwrap();
    let out = Command::new(BIN)
        .args(["reflect-plane", "--frustum", "r", "--plane", "floor", "--no-clip", "--scene"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let back = matrix(&output(&v, "r.reflect")["proj"]);
    let cam = matrix(&scene["matrices"]["cam"]);
    assert!(max_diff(&back, &cam) < 1e-12);
}

#[test]
fn lens_with_unit_power_keeps_grid() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["lens", "--spec", "flat", "--origin", "o", "--grid", "3x3"]);
    let flat = |name: &str| -> Vec<f64> { output(&v, name).as_array().unwrap().iter().flat_map(matrix).collect() };
    let (a, b) = (flat("grid"), flat("distorted"));
    assert_eq!(a.len(), 16 * 3);
    assert!(max_diff(&a, &b) < 1e-12);
    assert_eq!(v["diagnostics"]["failed_tiles"], 0);
    assert!(v["diagnostics"]["tile[1][1].validation"]["valid"].as_bool().unwrap());
}

#[test]
fn build_from_named_planes() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["build", "--far-strategy", "point", "--q-point", "q"]);
    assert_eq!(v["diagnostics"]["frustum.validation"]["valid"], true);
    let (code, _, _) = run(dir.path(), &["build", "--far-strategy", "kn"]);
    assert_eq!(code, 2);
}

#[test]
fn nonaffine_map_of_axis_point() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["nonaffine-map", "--frustum", "cam", "--point", "a", "--ndc"]);
    let m = matrix(output(&v, "a.ndc"));
    assert!(m[0].abs() < 1e-12 && m[1].abs() < 1e-12 && m[2] > 0.0 && m[2] < 1.0, "{m:?}");
}

#[test]
fn result_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let (code, _, err) = run(dir.path(), &["reflect-plane", "--frustum", "cam", "--plane", "floor", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn obj_export_offsets_indices() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.obj");
    let (code, _, err) = run(dir.path(), &["export-obj", "--frustum", "cam", "--frustum", "cam", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let obj = std::fs::read_to_string(path).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 16);
    assert_eq!(obj.lines().filter(|l| l.starts_with("l ")).count(), 24);
    assert!(obj.lines().any(|l| l == "l 9 10"));
}

#[test]
fn svg_export_with_unit_power() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.svg");
    let (code, _, err) = run(dir.path(), &["export-svg", "--spec", "flat", "--grid", "2x2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert!(svg.contains("#1f77b4") && svg.contains("#d62728"));
}

#[test]
fn self_check_passes() {
    let out = Command::new(BIN).arg("check").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(!String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}
