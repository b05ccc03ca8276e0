//! Quotients, saturation and elimination.

use vclass::ideal::{eliminate, ideal_quotient, saturate};
use vclass::{Budget, Ideal, PolyRing};

fn main() -> vclass::Result<()> {
    let b = Budget::default();
    let ring = PolyRing::with_names(&["x", "y", "z"])?;
    let i = Ideal::parse(&ring, &["x^2", "x*y"])?;
    let m = Ideal::parse(&ring, &["x", "y"])?;
    println!("{} : {} = {}", i, m, ideal_quotient(&i, &m, &b)?);
    println!("{} : {}^inf = {}", i, m, saturate(&i, &m, &b)?);

    // The kernel of k[x,y,z,A,B] -> k[x,y,z,t], A -> t x z, B -> t y z.
    let r = PolyRing::with_names(&["t", "x", "y", "z", "A", "B"])?;
    let graph = Ideal::parse(&r, &["A - t*x*z", "B - t*y*z"])?;
    println!("eliminate t: {}", eliminate(&graph, &["t"], &b)?);
    Ok(())
}
