//! Virtual classes, the excess formula and cone-component contributions.

use vclass::chow::{Bundle, ChowClass};
use vclass::cone::SchemePresentation;
use vclass::virtual_class::{component_contribution, excess_virtual_class, virtual_class, ComponentKind, ObstructionTwists};
use vclass::{Context, PolyRing};

fn main() -> vclass::Result<()> {
    let mut ctx = Context::new(0);
    let p2 = PolyRing::with_names(&["x", "y", "z"])?;
    let x = SchemePresentation::projective(&p2, &["x^2", "x*y"])?;
    let e = ObstructionTwists::new(vec![2, 2])?;
    println!("double point: {}", virtual_class(&x, &e, &mut ctx)?.class);

    let line = ComponentKind::Subbundle { bundle: Bundle::from_twists(&[2], 2), support: ChowClass::from_ints(2, &[0, 1, 0])? };
    let point = ComponentKind::PointFiber { multiplicity: 2 };
    println!("  line part {}, point part {}", component_contribution(&line, &e, 2)?, component_contribution(&point, &e, 2)?);

    // A line in P3 cut out by x, y and a quadric containing it.
    let n = Bundle::from_twists(&[1, 1], 3);
    let l = ChowClass::from_ints(3, &[0, 0, 1, 0])?;
    println!("excess: {}", excess_virtual_class(&n, &ObstructionTwists::new(vec![1, 1, 2])?, &l)?);
    Ok(())
}
