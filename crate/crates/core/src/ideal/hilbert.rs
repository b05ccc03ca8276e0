//! Dimension and degree from the Hilbert series of a lead-term ideal.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Ideal;
use crate::context::Budget;
use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HilbertMode {
    /// Homogeneous ideal; report the dimension of the projective scheme.
    Projective,
    /// Report the Krull dimension of the affine scheme.
    Affine,
}

/// Dimension and degree of a scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimDeg {
    pub dim: i64,
    pub degree: u64,
}

/// Keep only minimal generators.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `k[x]/M`.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<BigInt> {
    numerator(minimalize(gens.to_vec()), nvars)
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<BigInt> {
    if gens.iter().any(|g| g.is_one()) {
        return vec![BigInt::zero()];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let mut f = vec![BigInt::zero(); g.degree() as usize + 1];
            f[0] = BigInt::one();
            f[g.degree() as usize] -= BigInt::one();
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most non-linear generators
    let mut counts = vec![0usize; nvars];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let x = (0..nvars).max_by_key(|&i| counts[i]).unwrap();
    let xm = Monomial::var(nvars, x, 1);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exps()[x] == 0).cloned().collect();
    plus.push(xm.clone());
    let colon: Vec<Monomial> =
        gens.iter().map(|g| if g.exps()[x] > 0 { g.div(&xm) } else { g.clone() }).collect();
    let mut n = numerator(minimalize(plus), nvars);
    let q = numerator(minimalize(colon), nvars);
    poly_add(&mut n, &q, 1);
    n
}

/// Krull dimension and degree of `k[x]/M` for a monomial ideal `M`.
/// The zero ring gives `(-1, 0)`.
pub fn krull_dim_degree(gens: &[Monomial], nvars: usize) -> (i64, u64) {
    let mut n = hilbert_numerator(gens, nvars);
    while n.len() > 1 && n.last().unwrap().is_zero() {
        n.pop();
    }
    if n.iter().all(|c| c.is_zero()) {
        return (-1, 0);
    }
    // divide by (1 - t) while N(1) = 0
    let mut k = 0usize;
    loop {
        let at_one: BigInt = n.iter().sum();
        if !at_one.is_zero() {
            let deg: u64 = at_one.try_into().unwrap_or(u64::MAX);
            return (nvars as i64 - k as i64, deg);
        }
        // synthetic division by (1 - t): q_i = sum_{j<=i} n_j
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut run = BigInt::zero();
        for c in &n[..n.len() - 1] {
            run += c;
            q.push(run.clone());
        }
        n = q;
        k += 1;
    }
}

/// Dimension and degree of `V(I)`, read off the grevlex lead-term ideal.
/// Empty schemes report dimension -1 and degree 0.
pub fn hilbert_dim_deg(ideal: &Ideal, mode: HilbertMode, budget: &Budget) -> Result<DimDeg> {
    let ring = ideal.ring();
    let ring = if *ring.order() == MonomialOrder::GrevLex { ring.clone() } else { ring.with_order(MonomialOrder::GrevLex)? };
    let gb = ideal.to_ring(&ring)?.groebner(budget)?;
    let (krull, degree) = krull_dim_degree(&gb.lead_monomials(), ring.nvars());
    Ok(match mode {
        HilbertMode::Affine => DimDeg { dim: krull, degree: if krull < 0 { 0 } else { degree } },
        HilbertMode::Projective if krull <= 0 => DimDeg { dim: -1, degree: 0 },
        HilbertMode::Projective => DimDeg { dim: krull - 1, degree },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn dd(ring: &[&str], gens: &[&str], mode: HilbertMode) -> DimDeg {
        let r = PolyRing::with_names(ring).unwrap();
        hilbert_dim_deg(&Ideal::parse(&r, gens).unwrap(), mode, &Budget::default()).unwrap()
    }

    #[test]
    fn twisted_cubic() {
        let d = dd(&["x", "y", "z", "w"], &["x*z - y^2", "y*w - z^2", "x*w - y*z"], HilbertMode::Projective);
        assert_eq!(d, DimDeg { dim: 1, degree: 3 });
    }

    #[test]
    fn hyperplane_and_embedded_point() {
        assert_eq!(dd(&["x", "y", "z"], &["x"], HilbertMode::Projective), DimDeg { dim: 1, degree: 1 });
        assert_eq!(dd(&["x", "y", "z"], &["x^2", "x*y"], HilbertMode::Projective), DimDeg { dim: 1, degree: 1 });
    }

    #[test]
    fn unit_and_irrelevant() {
        assert_eq!(dd(&["x", "y"], &["1"], HilbertMode::Projective), DimDeg { dim: -1, degree: 0 });
        assert_eq!(dd(&["x", "y"], &["x", "y"], HilbertMode::Projective), DimDeg { dim: -1, degree: 0 });
        assert_eq!(dd(&["x", "y"], &["x^2", "x*y", "y^2"], HilbertMode::Affine), DimDeg { dim: 0, degree: 3 });
    }

    #[test]
    fn numerator_of_complete_intersection() {
        let m = [Monomial::from_exps(&[2, 0]), Monomial::from_exps(&[0, 3])];
        let (k, d) = krull_dim_degree(&m, 2);
        assert_eq!((k, d), (0, 6));
    }
}
