//! Segre classes in P^n by both routes.

use vclass::cone::SchemePresentation;
use vclass::segre::{projective_degrees, segre_ambient, segre_in};
use vclass::{Context, PolyRing};

fn main() -> vclass::Result<()> {
    let ring = PolyRing::with_names(&["x", "y", "z", "w"])?;
    let mut ctx = Context::new(1);
    for gens in [vec!["x*z - y^2", "y*w - z^2", "x*w - y*z"], vec!["x*z", "y*z"], vec!["x", "y"]] {
        let x = SchemePresentation::projective(&ring, &gens)?;
        println!("{}", x.ideal());
        println!("  projective degrees {:?}", projective_degrees(&x, &mut ctx)?);
        println!("  via projective degrees: {}", segre_ambient(&x, &mut ctx)?);
        println!("  via the blow-up:        {}", segre_in(&x, &mut ctx)?);
    }
    Ok(())
}
