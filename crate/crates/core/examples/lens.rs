//! Lens warp of a tile lattice and the per-tile frusta it induces.

use frustum_kit::transform::{lens_tile_frustums, quad_area, LensSpec, TileGrid, DEFAULT_FAR_FACTOR};
use frustum_kit::{Plane, Vec3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = LensSpec { center: Vec3::new(0.0, 0.0, -1.0), radius: 1.0, power: 2.0, plane: Plane::new(0.0, 0.0, 1.0, 1.0) };
    let grid = TileGrid::uniform(Vec3::new(-1.0, -1.0, -1.0), Vec3::new(2.0, 0.0, 0.0), Vec3::new(0.0, 2.0, 0.0), 4, 4);
    let warped = grid.distorted(&spec)?;

    for (r, c) in grid.tiles() {
        println!("tile ({r}, {c}): area {:.4} -> {:.4}", quad_area(&grid.tile(r, c)), quad_area(&warped.tile(r, c)));
    }
    let tiles = lens_tile_frustums(&grid, &spec, Vec3::ZERO, DEFAULT_FAR_FACTOR)?;
    let ok = tiles.iter().filter(|t| t.result.is_ok()).count();
    println!("{ok} of {} tile frusta built", tiles.len());
    Ok(())
}
