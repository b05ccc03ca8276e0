//! Reduced Gröbner basis of the twisted cubic and an ideal-membership test.

use vclass::{Budget, Ideal, PolyRing, Polynomial};

fn main() -> vclass::Result<()> {
    let ring = PolyRing::with_names(&["x", "y", "z", "w"])?;
    let cubic = Ideal::parse(&ring, &["x*z - y^2", "y*w - z^2", "x*w - y*z"])?;
    let gb = cubic.groebner(&Budget::default())?;
    for g in gb.basis() {
        println!("{}", g);
    }
    let f = Polynomial::parse(&ring, "x*z^2 - y^2*z")?;
    println!("{} in ideal: {}", f, cubic.contains(&f, &Budget::default())?);
    Ok(())
}
