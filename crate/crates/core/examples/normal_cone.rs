//! Normal cones, the exceptional divisor and its bidegrees.

use vclass::cone::{bidegrees, check_purity, exceptional_ideal, normal_cone_ideal, SchemePresentation};
use vclass::{Context, PolyRing};

fn main() -> vclass::Result<()> {
    let mut ctx = Context::new(7);
    let ring = PolyRing::with_names(&["x", "y", "z", "w"])?;
    let x = SchemePresentation::projective(&ring, &["x*z", "y*z"])?;
    let fibers = vec!["A".to_string(), "B".to_string()];
    let c = normal_cone_ideal(&x, &x.generators(), &fibers, &mut ctx)?;
    println!("C = V{}", c.ideal);
    println!("purity: {}", check_purity(&c, &ctx.budget)?.unwrap_or_else(|| "pure".into()));

    // The node of y^2 w = x^2 (x + w) inside its plane.
    let node = SchemePresentation::projective_in(&ring, &["x", "y", "z"], &["y^2*w - x^3 - x^2*w", "z"])?;
    let fibers = vec!["A0".into(), "A1".into(), "A2".into()];
    let w = exceptional_ideal(&node, &node.generators(), &fibers, &mut ctx)?;
    println!("P(C) = V{}", w.ideal);
    println!("bidegrees {:?}", bidegrees(&w, &mut ctx)?);
    Ok(())
}
