//! Deforming the normal cone of a line and a plane inside a larger bundle.

use vclass::chow::ChowClass;
use vclass::cone::{normal_cone_ideal, ConePresentation, SchemePresentation};
use vclass::deformation::{defvb_family, fiber_at, flat_limit};
use vclass::segre::segre_of_cone;
use vclass::{Context, PolyRing, RatNum};

fn main() -> vclass::Result<()> {
    let mut ctx = Context::new(3);
    let ring = PolyRing::with_names(&["x", "y", "z", "w"])?;
    let x = SchemePresentation::projective(&ring, &["x*z", "y*z"])?;
    let c = normal_cone_ideal(&x, &x.generators(), &["A".into(), "B".into()], &mut ctx)?;
    let fam = defvb_family(&c, &["A".into()], "t")?;
    println!("family: {}", fam.ideal());
    let limit = flat_limit(&fam, &ctx)?;
    println!("limit:  {}", limit);

    let fibers: Vec<String> = ["A", "B", "A'"].iter().map(|s| s.to_string()).collect();
    let mut segre_at = |ideal| -> vclass::Result<ChowClass> {
        segre_of_cone(&ConePresentation { base: x.clone(), fiber_vars: fibers.clone(), twist: 2, ideal }, &mut ctx)
    };
    println!("s(C_0) = {}", segre_at(limit)?);
    println!("s(C_1) = {}", segre_at(fiber_at(&fam, &RatNum::from_integer(1.into()))?)?);
    Ok(())
}
