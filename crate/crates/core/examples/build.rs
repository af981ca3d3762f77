//! Building a projection from planes, with three far-plane strategies.

use frustum_kit::build::near_corners;
use frustum_kit::projection::perspective;
use frustum_kit::validate::validate;
use frustum_kit::{build_frustum, extract_planes, key_points, AffineFrustum, FarStrategy, SidePlanes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let original = AffineFrustum::from_projection(perspective(-1.0, 0.5, -0.4, 0.8, 0.5, 30.0))?;
    let planes = extract_planes(&original);
    let sides = SidePlanes::from(&planes);
    println!("near corners: {:?}", near_corners(&sides, planes.near)?.map(|c| c.to_array()));

    let far_corner = key_points(&original).corners[4];
    for (label, far) in [
        ("through far corner", FarStrategy::ThroughPoint(far_corner)),
        ("maximize volume", FarStrategy::MaximizeVolume),
        ("explicit kn = 0.9", FarStrategy::ExplicitKn(0.9)),
    ] {
        let out = build_frustum(&sides, planes.near, far)?;
        let report = validate(&out.frustum);
        println!("{label}: kn = {:.6}, valid = {}, far = {:?}", out.kn, report.valid, extract_planes(&out.frustum).far.to_array());
    }
    Ok(())
}
