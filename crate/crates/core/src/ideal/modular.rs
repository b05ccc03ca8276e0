//! Gröbner bases over `F_p`, `p = 2^31 - 1`, for lengths of generic charts.
//!
//! Only the leading monomials are used, and they agree with the rational
//! basis for all but finitely many primes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::context::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring};

const P: u64 = 2_147_483_647;

type Term = (Monomial, u64);

fn reduce_int(n: &BigInt) -> u64 {
    let m = n % BigInt::from(P);
    let m = if m < BigInt::zero() { m + BigInt::from(P) } else { m };
    m.to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// Coefficients mod `p`; fails when a denominator vanishes.
fn reduce_poly(p: &Polynomial) -> Result<Vec<Term>> {
    let mut out = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let d = reduce_int(c.denom());
        if d == 0 {
            return Err(Error::UnluckyDraw("denominator divisible by the working prime".into()));
        }
        let n = reduce_int(c.numer()) * inv(d) % P;
        if n != 0 {
            out.push((m.clone(), n));
        }
    }
    Ok(out)
}

fn monic(mut p: Vec<Term>) -> Vec<Term> {
    if let Some(&(_, c)) = p.first() {
        let i = inv(c);
        for t in &mut p {
            t.1 = t.1 * i % P;
        }
    }
    p
}

/// `a - s * b`, both sorted.
fn sub_scaled(ring: &Ring, a: &[Term], b: &[Term], s: u64) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let neg = |c: u64| (P - c * s % P) % P;
    while i < a.len() && j < b.len() {
        match ring.cmp_exps(a[i].0.exps(), b[j].0.exps()) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), neg(b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = (a[i].1 + neg(b[j].1)) % P;
                if c != 0 {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), neg(*c))));
    out
}

fn shifted(p: &[Term], shift: &Monomial) -> Vec<Term> {
    p.iter().map(|(m, c)| (m.mul(shift), *c)).collect()
}

/// Full reduction by monic `basis`.
fn reduce(ring: &Ring, mut p: Vec<Term>, basis: &[&Vec<Term>]) -> Vec<Term> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match basis.iter().find(|g| g[0].0.divides(m)) {
            Some(g) => {
                let tail = shifted(&g[1..], &m.div(&g[0].0));
                p = sub_scaled(ring, &p[start + 1..], &tail, *c);
                start = 0;
            }
            None => {
                rem.push((m.clone(), *c));
                start += 1;
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Leading monomials of a minimal Gröbner basis of the ideal generated by
/// `gens` reduced mod `p`, in the order of their ring.
pub fn lead_monomials_mod_p(gens: &[Polynomial], budget: &Budget) -> Result<Vec<Monomial>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let ring = first.ring().clone();
    let mut input: Vec<Vec<Term>> = Vec::new();
    for g in gens {
        let r = reduce_poly(g)?;
        if !r.is_empty() {
            input.push(monic(r));
        }
    }
    input.sort_by(|a, b| a[0].0.degree().cmp(&b[0].0.degree()).then_with(|| ring.cmp_exps(a[0].0.exps(), b[0].0.exps())));
    let mut polys: Vec<Vec<Term>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |h: Vec<Term>, polys: &mut Vec<Vec<Term>>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>| -> Result<()> {
        let lh = h[0].0.clone();
        if lh.degree() > budget.max_degree {
            return Err(Error::BudgetExceeded(format!("basis degree {} > {}", lh.degree(), budget.max_degree)));
        }
        if polys.len() >= budget.max_basis {
            return Err(Error::BudgetExceeded(format!("basis size > {}", budget.max_basis)));
        }
        let hi = polys.len();
        polys.push(h);
        let lead = |i: usize| &polys[i][0].0;
        let mut c: Vec<Pair> = active.iter().map(|&g| Pair { i: g, j: hi, lcm: lead(g).lcm(&lh) }).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = lead(p.i).coprime(&lh);
            if coprime || !c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm)) {
                d.push(p);
            }
        }
        pairs.retain(|p| !(lh.divides(&p.lcm) && lead(p.i).lcm(&lh) != p.lcm && lead(p.j).lcm(&lh) != p.lcm));
        pairs.extend(d.into_iter().filter(|p| !lead(p.i).coprime(&lh)));
        active.retain(|&g| !lh.divides(lead(g)));
        active.push(hi);
        Ok(())
    };

    for g in input {
        let refs: Vec<&Vec<Term>> = active.iter().map(|&i| &polys[i]).collect();
        let r = reduce(&ring, g, &refs);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![r[0].0.clone()]);
        }
        add(monic(r), &mut polys, &mut active, &mut pairs)?;
    }
    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k].lcm, &pairs[best].lcm);
            if a.degree().cmp(&b.degree()).then_with(|| ring.cmp_exps(a.exps(), b.exps())) == Ordering::Less {
                best = k;
            }
        }
        let p = pairs.swap_remove(best);
        let (f, g) = (&polys[p.i], &polys[p.j]);
        let s = sub_scaled(&ring, &shifted(&f[1..], &p.lcm.div(&f[0].0)), &shifted(&g[1..], &p.lcm.div(&g[0].0)), 1);
        let refs: Vec<&Vec<Term>> = active.iter().map(|&i| &polys[i]).collect();
        let r = reduce(&ring, s, &refs);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![r[0].0.clone()]);
        }
        add(monic(r), &mut polys, &mut active, &mut pairs)?;
    }
    Ok(active.iter().map(|&i| polys[i][0].0.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::poly::PolyRing;

    #[test]
    fn matches_rational_leads() {
        let r = PolyRing::with_names(&["x", "y", "z", "w"]).unwrap();
        let i = Ideal::parse(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z", "x^2 + 3/7*y*w"]).unwrap();
        let budget = Budget::default();
        let mut a = lead_monomials_mod_p(i.gens(), &budget).unwrap();
        let mut b = i.groebner(&budget).unwrap().lead_monomials();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_and_bad_denominator() {
        let r = PolyRing::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x", "x + 1"]).unwrap();
        assert_eq!(lead_monomials_mod_p(i.gens(), &Budget::default()).unwrap(), vec![Monomial::one(2)]);
        let x = Polynomial::var(&r, 0).scale(&crate::rational::ratio(1, P as i64));
        assert!(matches!(lead_monomials_mod_p(&[x], &Budget::default()), Err(Error::UnluckyDraw(_))));
    }
}
