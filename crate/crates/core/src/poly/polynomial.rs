use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::{same_ring, Grading, Ring};
use crate::error::{Error, Result};
use crate::rational::{format_rat, RatNum};

pub type Term = (Monomial, RatNum);

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in strictly decreasing monomial order with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// Merge two sorted term lists, `a + scale * b`.
pub(crate) fn merge_terms(ring: &Ring, a: &[Term], b: &[Term], scale: &RatNum) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp_exps(a[i].0.exps(), b[j].0.exps()) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), &b[j].1 * scale));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + &b[j].1 * scale;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), c * scale)));
    out
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: RatNum) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, RatNum::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), i, 1), RatNum::one())] }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: RatNum) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Build from arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: HashMap<Monomial, RatNum> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            *acc.entry(m).or_insert_with(RatNum::zero) += c;
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_exps(b.0.exps(), a.0.exps()));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusted constructor; `terms` must already be canonical.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    /// Parse in the given ring using the polynomial text syntax.
    pub fn parse(ring: &Ring, src: &str) -> Result<Self> {
        crate::script::parse_polynomial(ring, src)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.is_constant()
    }

    pub fn lead_mono(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&RatNum> {
        self.terms.first().map(|t| &t.1)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial::from_sorted(&self.ring, merge_terms(&self.ring, &self.terms, &other.terms, &RatNum::one())))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial::from_sorted(&self.ring, merge_terms(&self.ring, &self.terms, &other.terms, &-RatNum::one())))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, RatNum> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(RatNum::zero) += ca * cb;
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.cmp_exps(b.0.exps(), a.0.exps()));
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// One of `add`, `sub`, `mul`.
    pub fn arith(op: ArithOp, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        match op {
            ArithOp::Add => p.add(q),
            ArithOp::Sub => p.sub(q),
            ArithOp::Mul => p.mul(q),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-RatNum::one())
    }

    pub fn scale(&self, c: &RatNum) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial::from_sorted(&self.ring, self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    /// Multiply by `c * m`; order is preserved so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &RatNum) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial::from_sorted(&self.ring, self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Scale to a primitive integer polynomial with positive leading
    /// coefficient. Used for presentation.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let mut s = RatNum::new(lcm, g);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree of a single term in (factor 1, factor 2); parameters weigh 0.
    pub fn term_bidegree(&self, m: &Monomial) -> (u32, u32) {
        let mut d = (0, 0);
        for (i, &e) in m.exps().iter().enumerate() {
            match self.ring.grading(i) {
                Grading::Base => d.0 += e as u32,
                Grading::Fiber => d.1 += e as u32,
                Grading::Parameter => {}
            }
        }
        d
    }

    /// Common (factor-1, factor-2) degree of all terms.
    pub fn multi_degree(&self) -> Result<(u32, u32)> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        let d = self.term_bidegree(&first.0);
        for (m, _) in &self.terms[1..] {
            if self.term_bidegree(m) != d {
                return Err(Error::NotHomogeneous(self.to_string()));
            }
        }
        Ok(d)
    }

    /// Homogeneous for the standard grading (every variable weight 1).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[var] > 0)
    }

    /// Largest exponent of `var` across terms.
    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exps()[var]).max().unwrap_or(0)
    }

    /// Largest power of `var` dividing every term.
    pub fn var_content(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exps()[var]).min().unwrap_or(0)
    }

    /// Divide every term by `var^e` (caller guarantees divisibility).
    pub fn div_var_power(&self, var: usize, e: u16) -> Polynomial {
        if e == 0 {
            return self.clone();
        }
        let d = Monomial::var(self.ring.nvars(), var, e);
        Polynomial::from_sorted(&self.ring, self.terms.iter().map(|(m, c)| (m.div(&d), c.clone())).collect())
    }

    /// Ring homomorphism into `target` sending variable `i` to `images[i]`.
    pub fn map_with(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        debug_assert_eq!(images.len(), self.ring.nvars());
        let mut acc: HashMap<Monomial, RatNum> = HashMap::new();
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&images[i])?;
                    cache.push(next);
                }
                prod = prod.mul(&cache[e as usize])?;
            }
            for (mm, cc) in prod.terms {
                *acc.entry(mm).or_insert_with(RatNum::zero) += cc;
            }
        }
        Ok(Polynomial::from_terms(target, acc))
    }

    /// Apply `bindings` (variable name → image in `target`). Variables with
    /// no binding map to the same-named variable of `target` if it exists.
    pub fn substitute(&self, target: &Ring, bindings: &HashMap<String, Polynomial>) -> Result<Polynomial> {
        let mut images = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            if let Some(img) = bindings.get(&v.name) {
                if !same_ring(img.ring(), target) {
                    return Err(Error::RingMismatch(format!("image of `{}` is not in {}", v.name, target)));
                }
                images.push(img.clone());
            } else if let Some(j) = target.index_of(&v.name) {
                images.push(Polynomial::var(target, j));
            } else if !self.involves(i) {
                images.push(Polynomial::zero(target));
            } else {
                return Err(Error::UnboundVariable(v.name.clone()));
            }
        }
        self.map_with(target, &images)
    }

    /// Re-express in another ring whose variables include every variable
    /// used here (matched by name). Re-sorts for the target order.
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let mut idx = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            match target.index_of(&v.name) {
                Some(j) => idx.push(Some(j)),
                None if !self.involves(i) => idx.push(None),
                None => return Err(Error::UnboundVariable(v.name.clone())),
            }
        }
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = Monomial::one(n);
            for (i, &x) in m.exps().iter().enumerate() {
                if let Some(j) = idx[i] {
                    e.0[j] = x;
                }
            }
            (e, c.clone())
        });
        let mut terms: Vec<Term> = terms.collect();
        terms.sort_by(|a, b| target.cmp_exps(b.0.exps(), a.0.exps()));
        Ok(Polynomial::from_sorted(target, terms))
    }

    /// Set `var = value` and drop nothing from the ring.
    pub fn specialize(&self, var: usize, value: &RatNum) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exps()[var];
            if e > 0 && value.is_zero() {
                return None;
            }
            let mut mm = m.clone();
            mm.0[var] = 0;
            let cc = if e == 0 { c.clone() } else { c * num_traits::pow(value.clone(), e as usize) };
            Some((mm, cc))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::Invalid("division by zero polynomial".into()));
        }
        let (dm, dc) = (&d.terms[0].0, &d.terms[0].1);
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.first().cloned() {
            if !dm.divides(&m) {
                return Ok(None);
            }
            let qm = m.div(dm);
            let qc = &c / dc;
            let sub: Vec<Term> = d.terms.iter().map(|(a, b)| (a.mul(&qm), b * &qc)).collect();
            rem = merge_terms(&self.ring, &rem, &sub, &-RatNum::one());
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

fn write_mono(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.name(i))?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", format_rat(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", format_rat(&a))?;
                }
                write_mono(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}
