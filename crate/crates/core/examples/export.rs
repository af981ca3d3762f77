//! Writing frusta as an OBJ wireframe and a lens grid as SVG.

use frustum_kit::cli::export::{frusta_to_obj, grids_to_svg};
use frustum_kit::projection::{orthographic, perspective, translation};
use frustum_kit::transform::{LensSpec, TileGrid};
use frustum_kit::{AffineFrustum, Plane, Vec3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shifted = translation(Vec3::new(-5.0, 0.0, 0.0)).mul(&orthographic(-1.0, 1.0, -1.0, 1.0, 1.0, 6.0));
    let frusta = vec![
        ("persp".to_string(), AffineFrustum::from_projection(perspective(-1.0, 1.0, -1.0, 1.0, 1.0, 5.0))?),
        ("ortho".to_string(), AffineFrustum::from_projection(shifted)?),
    ];
    let (obj, skipped) = frusta_to_obj(&frusta);
    assert!(skipped.is_empty());

    let spec = LensSpec { center: Vec3::ZERO, radius: 1.0, power: 2.0, plane: Plane::new(0.0, 0.0, 1.0, 0.0) };
    let grid = TileGrid::uniform(Vec3::new(-1.0, -1.0, 0.0), Vec3::new(2.0, 0.0, 0.0), Vec3::new(0.0, 2.0, 0.0), 8, 8);
    let svg = grids_to_svg(spec.plane, &grid, &grid.distorted(&spec)?);

    let dir = std::env::temp_dir();
    std::fs::write(dir.join("frusta.obj"), &obj)?;
    std::fs::write(dir.join("lens.svg"), &svg)?;
    println!("wrote {} OBJ lines and {} SVG bytes to {}", obj.lines().count(), svg.len(), dir.display());
    Ok(())
}
