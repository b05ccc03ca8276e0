//! Dimension and degree from lead terms, projective and affine.

use vclass::ideal::{hilbert_dim_deg, HilbertMode};
use vclass::{Budget, Ideal, PolyRing};

fn main() -> vclass::Result<()> {
    let b = Budget::default();
    let ring = PolyRing::with_names(&["x", "y", "z", "w"])?;
    for (name, gens) in [
        ("twisted cubic", vec!["x*z - y^2", "y*w - z^2", "x*w - y*z"]),
        ("line and plane", vec!["x*z", "y*z"]),
        ("quadric cone", vec!["x*y - z^2"]),
    ] {
        let d = hilbert_dim_deg(&Ideal::parse(&ring, &gens)?, HilbertMode::Projective, &b)?;
        println!("{:>15}: dim {}, degree {}", name, d.dim, d.degree);
    }
    let plane = PolyRing::with_names(&["x", "y"])?;
    let fat = hilbert_dim_deg(&Ideal::parse(&plane, &["x^2", "x*y", "y^2"])?, HilbertMode::Affine, &b)?;
    println!("fat point in A2: dim {}, length {}", fat.dim, fat.degree);
    Ok(())
}
