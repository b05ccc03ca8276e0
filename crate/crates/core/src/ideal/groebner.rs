//! Buchberger's algorithm with Gebauer–Möller pair elimination.

use num_traits::One;

use super::Ideal;
use crate::context::Budget;
use crate::error::{Error, Result};
use crate::poly::{merge_terms, same_ring, Monomial, MonomialOrder, Polynomial, Ring, Term};
use crate::rational::RatNum;

/// Reduced Gröbner basis of an ideal with respect to its ring's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Basis elements, monic, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_ideal(self) -> Ideal {
        Ideal::new(&self.ring, self.basis).expect("basis lives in its ring")
    }

    pub fn to_ideal(&self) -> Ideal {
        self.clone().into_ideal()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lead_mono().unwrap().clone()).collect()
    }

    /// Remainder of multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch(format!("{} vs {}", p.ring(), self.ring)));
        }
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        Ok(Polynomial::from_sorted(&self.ring, reduce_full(&self.ring, p.terms().to_vec(), &refs)))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

/// Fully reduce `p` (sorted terms) by `basis` (monic polynomials).
pub(crate) fn reduce_full(ring: &Ring, p: Vec<Term>, basis: &[&Polynomial]) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = p;
    let mut start = 0;
    while start < p.len() {
        let m = &p[start].0;
        match basis.iter().find(|g| g.lead_mono().unwrap().divides(m)) {
            Some(g) => {
                let gl = g.lead_mono().unwrap();
                let shift = m.div(gl);
                let factor = -(&p[start].1 / g.lead_coeff().unwrap());
                let tail: Vec<Term> = g.terms()[1..].iter().map(|(a, b)| (a.mul(&shift), b.clone())).collect();
                p = merge_terms(ring, &p[start + 1..], &tail, &factor);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// Reduce only while the leading term is divisible.
fn reduce_top(ring: &Ring, p: Vec<Term>, basis: &[&Polynomial]) -> Vec<Term> {
    let mut p = p;
    while let Some((m, c)) = p.first() {
        match basis.iter().find(|g| g.lead_mono().unwrap().divides(m)) {
            Some(g) => {
                let shift = m.div(g.lead_mono().unwrap());
                let factor = -(c / g.lead_coeff().unwrap());
                let tail: Vec<Term> = g.terms()[1..].iter().map(|(a, b)| (a.mul(&shift), b.clone())).collect();
                p = merge_terms(ring, &p[1..], &tail, &factor);
            }
            None => break,
        }
    }
    p
}

fn s_polynomial(ring: &Ring, f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Vec<Term> {
    // f, g monic
    let sf = lcm.div(f.lead_mono().unwrap());
    let sg = lcm.div(g.lead_mono().unwrap());
    let a: Vec<Term> = f.terms()[1..].iter().map(|(m, c)| (m.mul(&sf), c.clone())).collect();
    let b: Vec<Term> = g.terms()[1..].iter().map(|(m, c)| (m.mul(&sg), c.clone())).collect();
    merge_terms(ring, &a, &b, &-RatNum::one())
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder<'a> {
    ring: Ring,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    budget: &'a Budget,
}

impl<'a> Builder<'a> {
    fn lead(&self, i: usize) -> &Monomial {
        self.polys[i].lead_mono().unwrap()
    }

    /// Gebauer–Möller update with new element `h`.
    fn update(&mut self, h: Polynomial) -> Result<()> {
        if let Some(d) = h.total_degree() {
            if d > self.budget.max_degree {
                return Err(Error::BudgetExceeded(format!("basis degree {} > {}", d, self.budget.max_degree)));
            }
        }
        if self.polys.len() >= self.budget.max_basis {
            return Err(Error::BudgetExceeded(format!("basis size > {}", self.budget.max_basis)));
        }
        let hi = self.polys.len();
        self.polys.push(h);
        let lh = self.lead(hi).clone();

        let mut c: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair { i: g, j: hi, lcm: self.lead(g).lcm(&lh) })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = self.lead(p.i).coprime(&lh);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !self.lead(p.i).coprime(&lh)).collect();

        let pairs = std::mem::take(&mut self.pairs);
        self.pairs = pairs
            .into_iter()
            .filter(|p| {
                !(lh.divides(&p.lcm)
                    && self.lead(p.i).lcm(&lh) != p.lcm
                    && self.lead(p.j).lcm(&lh) != p.lcm)
            })
            .collect();
        self.pairs.extend(e);

        let keep: Vec<usize> = self.active.iter().copied().filter(|&g| !lh.divides(self.lead(g))).collect();
        self.active = keep;
        self.active.push(hi);
        Ok(())
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = &self.ring;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k].lcm, &self.pairs[best].lcm);
            let ord = a.degree().cmp(&b.degree()).then_with(|| ring.cmp_exps(a.exps(), b.exps()));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of `ideal` in its ring's monomial order.
pub fn buchberger(ideal: &Ideal, budget: &Budget) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    let mut gens: Vec<Polynomial> = ideal.gens().iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    if gens.iter().any(|g| g.is_constant()) {
        return Ok(GroebnerBasis { basis: vec![Polynomial::one(&ring)], ring });
    }
    gens.sort_by(|a, b| {
        let (x, y) = (a.lead_mono().unwrap(), b.lead_mono().unwrap());
        x.degree().cmp(&y.degree()).then_with(|| ring.cmp_exps(x.exps(), y.exps()))
    });
    let mut b = Builder { ring: ring.clone(), polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), budget };
    for g in gens {
        let refs: Vec<&Polynomial> = b.active.iter().map(|&i| &b.polys[i]).collect();
        let r = reduce_full(&ring, g.terms().to_vec(), &refs);
        if r.is_empty() {
            continue;
        }
        let h = Polynomial::from_sorted(&ring, r).monic();
        if h.is_constant() {
            return Ok(GroebnerBasis { basis: vec![Polynomial::one(&ring)], ring });
        }
        b.update(h)?;
    }
    while let Some(p) = b.select() {
        let s = s_polynomial(&ring, &b.polys[p.i], &b.polys[p.j], &p.lcm);
        let refs: Vec<&Polynomial> = b.active.iter().map(|&i| &b.polys[i]).collect();
        let r = reduce_top(&ring, s, &refs);
        if r.is_empty() {
            continue;
        }
        let r = reduce_full(&ring, r, &refs);
        let h = Polynomial::from_sorted(&ring, r).monic();
        if h.is_constant() {
            return Ok(GroebnerBasis { basis: vec![Polynomial::one(&ring)], ring });
        }
        b.update(h)?;
    }
    let active: Vec<Polynomial> = b.active.iter().map(|&i| b.polys[i].clone()).collect();
    Ok(GroebnerBasis { basis: interreduce(&ring, active), ring })
}

/// Minimalize and tail-reduce a Gröbner basis.
fn interreduce(ring: &Ring, mut g: Vec<Polynomial>) -> Vec<Polynomial> {
    g.sort_by(|a, b| ring.cmp_exps(a.lead_mono().unwrap().exps(), b.lead_mono().unwrap().exps()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in g {
        let lp = p.lead_mono().unwrap();
        if !minimal.iter().any(|q| q.lead_mono().unwrap().divides(lp)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial> =
            minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p).collect();
        let p = &minimal[k];
        let mut terms = vec![p.terms()[0].clone()];
        terms.extend(reduce_full(ring, p.terms()[1..].to_vec(), &others));
        out.push(Polynomial::from_sorted(ring, terms).monic());
    }
    out
}

/// Every S-polynomial of basis pairs reduces to zero (Buchberger criterion).
pub fn satisfies_buchberger_criterion(basis: &[Polynomial]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let ring = basis[0].ring().clone();
    let monic: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    let refs: Vec<&Polynomial> = monic.iter().collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let l = monic[i].lead_mono().unwrap().lcm(monic[j].lead_mono().unwrap());
            let s = s_polynomial(&ring, &monic[i], &monic[j], &l);
            if !reduce_full(&ring, s, &refs).is_empty() {
                return false;
            }
        }
    }
    true
}
