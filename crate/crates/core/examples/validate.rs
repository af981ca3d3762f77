//! Validity checks and the plane-distance clip mapping.

use frustum_kit::projection::{orthographic, perspective};
use frustum_kit::validate::{from_unit_cube, NonAffineFrustum};
use frustum_kit::{validate, AffineFrustum, Vec3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let persp = AffineFrustum::from_projection(perspective(-1.0, 1.0, -1.0, 1.0, 1.0, 10.0))?;
    let ortho = AffineFrustum::from_projection(orthographic(-2.0, 2.0, -1.0, 1.0, 0.5, 5.0))?;
    // a w column that folds the near quad over itself
    let bent = AffineFrustum::from_projection(persp.proj().with_col(3, [0.0, 3.0, -1.0, 0.0]))?;
    for (name, f) in [("perspective", &persp), ("orthographic", &ortho), ("folded", &bent)] {
        let r = validate(f);
        println!("{name}: valid {} {:?}", r.valid, r.details);
    }

    let nf = NonAffineFrustum::from_affine(&persp)?;
    for p in [Vec3::new(0.0, 0.0, -1.0), Vec3::new(0.5, -0.5, -4.0), Vec3::new(10.0, 10.0, -10.0)] {
        let m = nf.map(p)?;
        println!("{:?} -> {:?} (ndc {:?})", p.to_array(), m.to_array(), from_unit_cube(m).to_array());
    }
    Ok(())
}
