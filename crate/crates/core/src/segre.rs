//! Segre classes pushed forward to the ambient projective space.
//!
//! Two independent routes:
//!
//! * [`segre_ambient`] for `X ⊂ P^n` uses the projective degrees `g_j` of the
//!   rational map given by degree-`d` generators:
//!   `s(X, P^n) = 1 - Σ g_j H^j (1 + dH)^-(j+1)`.
//! * [`segre_in`] for `X ⊂ Y` uses the bidegrees `n_{a,b}` of the exceptional
//!   divisor `W = P(C_{X/Y}) ⊂ P^m × P^r` of dimension `D`. The exceptional
//!   divisor is `dH - h`, so
//!   `deg s_p = ∫ H^p (h - dH)^(D-p) [W] = Σ_j C(D-p, j) (-d)^(D-p-j) n_{D-j, j}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chow::{ChernSeries, ChowClass};
use crate::cone::{
    bidegrees, cone_generators, default_fibers, exceptional_ideal, projectivize, rees_ideal, AmbientKind,
    ConePresentation, SchemePresentation,
};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::ideal::sliced_count;
use crate::rational::{rat, RatNum};

fn require_projective(x: &SchemePresentation) -> Result<()> {
    if x.kind() == AmbientKind::Projective {
        Ok(())
    } else {
        Err(Error::Invalid("Segre classes need a projective ambient".into()))
    }
}

/// `true` when `X` is empty.
fn is_empty(x: &SchemePresentation, ctx: &Context) -> Result<bool> {
    Ok(x.dim_x(&ctx.budget)? < 0)
}

/// Projective degrees `(g_0, ..., g_n)` of the map `P^n ⇢ P^r` given by the
/// (padded) generators of `X`, read off the bidegrees of its graph.
pub fn projective_degrees(x: &SchemePresentation, ctx: &mut Context) -> Result<Vec<u64>> {
    require_projective(x)?;
    if x.has_relations() {
        return Err(Error::Invalid("projective degrees need Y = P^n".into()));
    }
    let n = x.ambient_dim();
    let dx = x.dim_x(&ctx.budget)?;
    if dx < 0 {
        return Err(Error::NotProper("X is empty".into()));
    }
    if dx >= n as i64 {
        return Err(Error::NotProper("X is all of P^n".into()));
    }
    let (gens, _) = cone_generators(x)?;
    let r = gens.len() - 1;
    let fibers = default_fibers(x.ring(), gens.len());
    let graph = rees_ideal(x, &gens, &fibers, ctx)?;
    (0..=n).map(|i| if i > r { Ok(0) } else { sliced_count(&graph.ideal, [n - i, i], ctx) }).collect()
}

/// `i_* s(X, P^n)` from the projective degrees.
pub fn segre_ambient(x: &SchemePresentation, ctx: &mut Context) -> Result<ChowClass> {
    require_projective(x)?;
    let n = x.ambient_dim();
    if is_empty(x, ctx)? {
        return Ok(ChowClass::zero(n));
    }
    let (_, d) = cone_generators(x)?;
    let g = projective_degrees(x, ctx)?;
    Ok(segre_from_projective_degrees(&g, d, n))
}

/// `1 - Σ_j g_j H^j (1 + dH)^-(j+1)` truncated at `H^n`.
pub fn segre_from_projective_degrees(g: &[u64], d: u32, n: usize) -> ChowClass {
    let inv = ChernSeries::linear(n, rat(d as i64)).inverse();
    let mut coeffs = vec![RatNum::zero(); n + 1];
    coeffs[0] = RatNum::one();
    let mut power = inv.clone();
    for (j, &gj) in g.iter().enumerate().take(n + 1) {
        if gj != 0 {
            for k in j..=n {
                coeffs[k] -= rat(gj as i64) * power.coeff(k - j);
            }
        }
        power = power.mul(&inv).unwrap();
    }
    ChowClass::new(n, coeffs).unwrap()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Push-forward of `Σ_i (h - dH)^i ∩ [W]` to `P^m`, given the bidegrees of
/// a `D`-dimensional `W ⊂ P^m × P^r`.
pub fn segre_from_bidegrees(n: &[u64], d: u32, m: usize) -> Result<ChowClass> {
    let mut z = ChowClass::zero(m);
    if n.is_empty() {
        return Ok(z);
    }
    let dd = n.len() - 1;
    if dd > m {
        return Err(Error::DimensionMismatch(format!("{}-dimensional exceptional divisor over P^{}", dd, m)));
    }
    let mut coeffs = z.coeffs().to_vec();
    let md = -BigInt::from(d);
    for p in 0..=dd {
        let q = dd - p;
        let mut s = BigInt::zero();
        for j in 0..=q {
            s += binomial(q, j) * num_traits::pow(md.clone(), q - j) * BigInt::from(n[j]);
        }
        coeffs[m - p] = RatNum::from_integer(s);
    }
    z = ChowClass::new(m, coeffs)?;
    Ok(z)
}

/// `i_* s(X, Y)` via the bidegrees of the exceptional divisor of `Bl_X Y`.
pub fn segre_in(x: &SchemePresentation, ctx: &mut Context) -> Result<ChowClass> {
    require_projective(x)?;
    let m = x.ambient_dim();
    if is_empty(x, ctx)? {
        return Ok(ChowClass::zero(m));
    }
    let (gens, d) = cone_generators(x)?;
    let fibers = default_fibers(x.ring(), gens.len());
    let w = exceptional_ideal(x, &gens, &fibers, ctx)?;
    let n = bidegrees(&w, ctx)?;
    segre_from_bidegrees(&n, d, m)
}

/// Segre class of a cone inside `⊕ O(d)` over a projective base, assuming
/// no component lies in the zero section.
pub fn segre_of_cone(c: &ConePresentation, ctx: &mut Context) -> Result<ChowClass> {
    require_projective(&c.base)?;
    let w = projectivize(c, ctx)?;
    let n = bidegrees(&w, ctx)?;
    segre_from_bidegrees(&n, c.twist, c.base.ambient_dim())
}

/// `s(X, Y)` by whichever route applies: [`segre_ambient`] when `Y` is the
/// ambient space, [`segre_in`] otherwise.
pub fn segre(x: &SchemePresentation, ctx: &mut Context) -> Result<ChowClass> {
    if x.has_relations() {
        segre_in(x, ctx)
    } else {
        segre_ambient(x, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn p(n: usize) -> crate::poly::Ring {
        let names = ["x", "y", "z", "w", "v"];
        PolyRing::with_names(&names[..=n]).unwrap()
    }

    fn class(m: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_ints(m, c).unwrap()
    }

    #[test]
    fn projective_degrees_examples() {
        let mut ctx = Context::new(0);
        let x = SchemePresentation::projective(&p(2), &["x^2", "x*y"]).unwrap();
        assert_eq!(projective_degrees(&x, &mut ctx).unwrap(), vec![1, 1, 0]);
        let x = SchemePresentation::projective(&p(3), &["x*z", "y*z"]).unwrap();
        assert_eq!(projective_degrees(&x, &mut ctx).unwrap(), vec![1, 1, 0, 0]);
        let x = SchemePresentation::projective(&p(3), &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        assert_eq!(projective_degrees(&x, &mut ctx).unwrap(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn ambient_route() {
        let mut ctx = Context::new(0);
        let x = SchemePresentation::projective(&p(2), &["x^2", "x*y"]).unwrap();
        assert_eq!(segre_ambient(&x, &mut ctx).unwrap(), class(2, &[0, 1, 0]));
        let x = SchemePresentation::projective(&p(3), &["x*z", "y*z"]).unwrap();
        assert_eq!(segre_ambient(&x, &mut ctx).unwrap(), class(3, &[0, 1, 0, -4]));
        let x = SchemePresentation::projective(&p(3), &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        assert_eq!(segre_ambient(&x, &mut ctx).unwrap(), class(3, &[0, 0, 3, -10]));
    }

    #[test]
    fn relative_route() {
        let mut ctx = Context::new(0);
        let node = SchemePresentation::projective_in(&p(2), &["x", "y"], &["y^2*z - x^3 - x^2*z"]).unwrap();
        assert_eq!(segre_in(&node, &mut ctx).unwrap(), class(2, &[0, 0, 2]));
        let vertex = SchemePresentation::projective_in(&p(3), &["x", "y", "z"], &["x^2 + y^2 - z^2"]).unwrap();
        assert_eq!(segre_in(&vertex, &mut ctx).unwrap(), class(3, &[0, 0, 0, 2]));
        let lines = SchemePresentation::projective(&p(2), &["x*y", "x*(x - y)"]).unwrap();
        assert_eq!(segre_in(&lines, &mut ctx).unwrap(), class(2, &[0, 1, 0]));
    }

    #[test]
    fn routes_agree_on_ambient_schemes() {
        let mut ctx = Context::new(3);
        let x = SchemePresentation::projective(&p(3), &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        assert_eq!(segre_in(&x, &mut ctx).unwrap(), segre_ambient(&x, &mut ctx).unwrap());
    }

    #[test]
    fn empty_is_zero() {
        let mut ctx = Context::new(0);
        let x = SchemePresentation::projective(&p(2), &["x", "y", "z"]).unwrap();
        assert!(segre_ambient(&x, &mut ctx).unwrap().is_zero());
    }
}
