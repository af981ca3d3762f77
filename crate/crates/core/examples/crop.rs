//! Cropping a frustum to one tile of a tiled render.

use frustum_kit::projection::perspective;
use frustum_kit::transform::{crop, crop_dense, CropSpec};
use frustum_kit::{key_points, AffineFrustum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = AffineFrustum::from_projection(perspective(-1.0, 1.0, -0.75, 0.75, 1.0, 100.0))?;
    // 2x2 tiles of a 1920x1080 image; pixel offsets count from the lower-left
    for (tx, ty) in [(0.0, 0.0), (960.0, 0.0), (0.0, 540.0), (960.0, 540.0)] {
        let spec = CropSpec { x_offset: tx, y_offset: ty, block_width: 960.0, block_height: 540.0, width: 1920.0, height: 1080.0 };
        let tile = crop(&f, &spec)?;
        let dense = crop_dense(&f, &spec)?;
        let near = key_points(&tile).near_quad().map(|c| c.dehomogenize().map(|v| v.to_array()));
        println!(
            "tile ({tx}, {ty}): sparse vs dense {:.1e}, near quad {near:?}",
            tile.proj().sub(dense.proj()).max_abs()
        );
    }
    Ok(())
}
