//! Lengths of zero-dimensional schemes via generic affine charts.

use num_traits::{One, Zero};

use super::hilbert::krull_dim_degree;
use super::modular::lead_monomials_mod_p;
use super::Ideal;
use crate::context::{Budget, Context};
use crate::error::{Error, Result};
use crate::poly::{Grading, MonomialOrder, PolyRing, Polynomial, Variable};
use crate::rational::RatNum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Multi-projective: one generic chart per grading factor.
    Projective,
    /// Plain affine scheme; no charts, no randomness.
    Affine,
}

/// Length of `k[x]/I` for a zero-dimensional affine ideal.
pub fn count_affine(ideal: &Ideal, budget: &Budget) -> Result<u64> {
    let ring = ideal.ring();
    let ring = if *ring.order() == MonomialOrder::GrevLex { ring.clone() } else { ring.with_order(MonomialOrder::GrevLex)? };
    let gb = ideal.to_ring(&ring)?.groebner(budget)?;
    let (krull, deg) = krull_dim_degree(&gb.lead_monomials(), ring.nvars());
    match krull {
        -1 => Ok(0),
        0 => Ok(deg),
        d => Err(Error::PositiveDimensional(d)),
    }
}

/// Random invertible integer matrix of size `n`.
fn random_invertible(n: usize, ctx: &mut Context) -> Vec<Vec<RatNum>> {
    loop {
        let m: Vec<Vec<RatNum>> = (0..n).map(|_| ctx.random_vec(n)).collect();
        if invert(m.clone()).is_some() {
            return m;
        }
    }
}

fn invert(mut a: Vec<Vec<RatNum>>) -> Option<Vec<Vec<RatNum>>> {
    let n = a.len();
    let mut inv: Vec<Vec<RatNum>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { RatNum::one() } else { RatNum::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// One draw: random coordinates `x = My` on each factor, restricted to the
/// chart `y_0 = 1` and the slice `y_1 = .. = y_c = 0`.
fn chart_count(ideal: &Ideal, slices: [usize; 2], ctx: &mut Context) -> Result<u64> {
    let ring = ideal.ring();
    let factors = [ring.factor_indices(Grading::Base), ring.factor_indices(Grading::Fiber)];
    let mut kept: Vec<Variable> = Vec::new();
    // (factor, local index) for every kept chart coordinate
    let mut plan: Vec<(usize, Vec<Vec<RatNum>>)> = Vec::new();
    for (f, idx) in factors.iter().enumerate() {
        if idx.is_empty() {
            if slices[f] > 0 {
                return Err(Error::Invalid("slice requested in an empty factor".into()));
            }
            continue;
        }
        if slices[f] >= idx.len() {
            return Ok(0);
        }
        let inv = random_invertible(idx.len(), ctx);
        for &j in &idx[1 + slices[f]..] {
            kept.push(ring.vars()[j].clone());
        }
        plan.push((f, inv));
    }
    for j in ring.factor_indices(Grading::Parameter) {
        kept.push(ring.vars()[j].clone());
    }
    let target = PolyRing::new(kept, MonomialOrder::GrevLex)?;
    let mut images = vec![Polynomial::zero(&target); ring.nvars()];
    for j in ring.factor_indices(Grading::Parameter) {
        images[j] = Polynomial::var_named(&target, ring.name(j))?;
    }
    for (f, inv) in &plan {
        let idx = &factors[*f];
        let c = slices[*f];
        // y_l as a polynomial in the chart ring
        let mut ys = vec![Polynomial::one(&target)];
        ys.extend((1..=c).map(|_| Polynomial::zero(&target)));
        for &j in &idx[1 + c..] {
            ys.push(Polynomial::var_named(&target, ring.name(j))?);
        }
        for (a, &j) in idx.iter().enumerate() {
            let mut x = Polynomial::zero(&target);
            for (l, y) in ys.iter().enumerate() {
                if !y.is_zero() && !inv[a][l].is_zero() {
                    x = x.add(&y.scale(&inv[a][l]))?;
                }
            }
            images[j] = x;
        }
    }
    let gens = ideal.nonzero_gens().iter().map(|g| g.map_with(&target, &images)).collect::<Result<Vec<_>>>()?;
    let leads = lead_monomials_mod_p(&gens, &ctx.budget)?;
    match krull_dim_degree(&leads, target.nvars()) {
        (-1, _) => Ok(0),
        (0, deg) => Ok(deg),
        (d, _) => Err(Error::PositiveDimensional(d)),
    }
}

fn agree(values: impl Iterator<Item = Result<u64>>, what: &str) -> Result<u64> {
    let mut first: Option<u64> = None;
    for v in values {
        let v = v?;
        match first {
            None => first = Some(v),
            Some(f) if f != v => return Err(Error::UnluckyDraw(format!("{}: {} vs {}", what, f, v))),
            _ => {}
        }
    }
    first.ok_or_else(|| Error::Invalid("no draws".into()))
}

/// Length of the scheme cut out by `ideal`. In projective mode every grading
/// factor gets a generic chart, so components inside irrelevant loci are
/// ignored; the count is repeated `ctx.redraws()` times and must agree.
pub fn zero_dim_count(ideal: &Ideal, mode: CountMode, ctx: &mut Context) -> Result<u64> {
    match mode {
        CountMode::Affine => count_affine(ideal, &ctx.budget),
        CountMode::Projective => sliced_count(ideal, [0, 0], ctx),
    }
}

/// Length after cutting with `slices[0]` generic factor-1 and `slices[1]`
/// generic factor-2 linear forms.
pub fn sliced_count(ideal: &Ideal, slices: [usize; 2], ctx: &mut Context) -> Result<u64> {
    let n = ctx.redraws();
    let what = format!("count with slices {:?}", slices);
    agree((0..n).map(|_| chart_count(ideal, slices, ctx)), &what)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_point() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(zero_dim_count(&i, CountMode::Projective, &mut Context::new(1)).unwrap(), 1);
    }

    #[test]
    fn fat_point_affine() {
        let r = PolyRing::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        assert_eq!(zero_dim_count(&i, CountMode::Affine, &mut Context::new(1)).unwrap(), 3);
    }

    #[test]
    fn embedded_irrelevant_component_is_ignored() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y^2*z", "y^3"]).unwrap();
        assert_eq!(zero_dim_count(&i, CountMode::Projective, &mut Context::new(3)).unwrap(), 2);
    }

    #[test]
    fn positive_dimensional_is_rejected() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(matches!(
            zero_dim_count(&i, CountMode::Projective, &mut Context::new(0)),
            Err(Error::PositiveDimensional(1))
        ));
    }

    #[test]
    fn slicing_a_conic() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x^2 + y^2 - z^2"]).unwrap();
        assert_eq!(sliced_count(&i, [1, 0], &mut Context::new(5)).unwrap(), 2);
    }
}
