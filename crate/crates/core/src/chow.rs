//! Chow classes and Chern/Segre series on projective space, blow-ups of
//! linear centers, and residual contributions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rat, rat, RatNum};
use crate::script::eval::{trunc_inverse, trunc_mul};

/// Class pushed forward to `P^m`: `coeffs[k]` is the coefficient of `H^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    ambient_dim: usize,
    coeffs: Vec<RatNum>,
}

/// Total Chern or Segre class on `P^m`, truncated above `H^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernSeries {
    ambient_dim: usize,
    coeffs: Vec<RatNum>,
}

/// A vector bundle known through its rank and total Chern class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub rank: usize,
    pub chern: ChernSeries,
}

impl ChowClass {
    pub fn new(ambient_dim: usize, coeffs: Vec<RatNum>) -> Result<Self> {
        if coeffs.len() != ambient_dim + 1 {
            return Err(Error::DimensionMismatch(format!(
                "class on P^{} needs {} coefficients, got {}",
                ambient_dim,
                ambient_dim + 1,
                coeffs.len()
            )));
        }
        Ok(ChowClass { ambient_dim, coeffs })
    }

    pub fn from_ints(ambient_dim: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(ambient_dim, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(ambient_dim: usize) -> Self {
        ChowClass { ambient_dim, coeffs: vec![RatNum::zero(); ambient_dim + 1] }
    }

    /// `c·H^k`.
    pub fn hyperplane_power(ambient_dim: usize, k: usize, c: RatNum) -> Result<Self> {
        if k > ambient_dim {
            return Err(Error::OutOfRange(format!("H^{} on P^{}", k, ambient_dim)));
        }
        let mut z = Self::zero(ambient_dim);
        z.coeffs[k] = c;
        Ok(z)
    }

    pub fn fundamental(ambient_dim: usize) -> Self {
        Self::hyperplane_power(ambient_dim, 0, RatNum::one()).unwrap()
    }

    pub fn point(ambient_dim: usize, multiplicity: RatNum) -> Self {
        Self::hyperplane_power(ambient_dim, ambient_dim, multiplicity).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[RatNum] {
        &self.coeffs
    }

    /// Coefficient of `H^k`.
    pub fn codim(&self, k: usize) -> &RatNum {
        &self.coeffs[k]
    }

    /// Degree of the dimension-`p` part.
    pub fn degree_in_dim(&self, p: usize) -> Result<RatNum> {
        if p > self.ambient_dim {
            return Err(Error::OutOfRange(format!("dimension {} on P^{}", p, self.ambient_dim)));
        }
        Ok(self.coeffs[self.ambient_dim - p].clone())
    }

    /// Degree of the zero-dimensional part.
    pub fn degree(&self) -> RatNum {
        self.coeffs[self.ambient_dim].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest dimension with a nonzero coefficient.
    pub fn top_dimension(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|k| self.ambient_dim - k)
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        same_dim(self.ambient_dim, other.ambient_dim)?;
        Ok(ChowClass {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &RatNum) -> ChowClass {
        ChowClass { ambient_dim: self.ambient_dim, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Coefficients as exact strings, `a` or `a/b`.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }
}

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("P^{} vs P^{}", a, b)))
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[RatNum], sym: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let a = c.abs();
        match k {
            0 => write!(f, "{}", format_rat(&a))?,
            _ => {
                if !a.is_one() {
                    write!(f, "{}*", format_rat(&a))?;
                }
                write!(f, "{}", sym)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "H")
    }
}

impl fmt::Display for ChernSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "H")
    }
}

impl ChernSeries {
    /// Coefficients are truncated or zero-padded to length `m + 1`.
    pub fn new(ambient_dim: usize, mut coeffs: Vec<RatNum>) -> Result<Self> {
        coeffs.resize(ambient_dim + 1, RatNum::zero());
        if !coeffs[0].is_one() {
            return Err(Error::Invalid(format!("total class must start with 1, got {}", format_rat(&coeffs[0]))));
        }
        Ok(ChernSeries { ambient_dim, coeffs })
    }

    pub fn from_ints(ambient_dim: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(ambient_dim, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn one(ambient_dim: usize) -> Self {
        Self::new(ambient_dim, vec![RatNum::one()]).unwrap()
    }

    /// `1 + a·H`.
    pub fn linear(ambient_dim: usize, a: RatNum) -> Self {
        Self::new(ambient_dim, vec![RatNum::one(), a]).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[RatNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatNum {
        &self.coeffs[k]
    }

    pub fn mul(&self, other: &ChernSeries) -> Result<ChernSeries> {
        series_mul(self, other)
    }

    pub fn inverse(&self) -> ChernSeries {
        series_inverse(self)
    }

    pub fn pow(&self, e: i64) -> ChernSeries {
        series_pow(self, e)
    }
}

pub fn series_mul(a: &ChernSeries, b: &ChernSeries) -> Result<ChernSeries> {
    same_dim(a.ambient_dim, b.ambient_dim)?;
    Ok(ChernSeries { ambient_dim: a.ambient_dim, coeffs: trunc_mul(&a.coeffs, &b.coeffs) })
}

pub fn series_inverse(a: &ChernSeries) -> ChernSeries {
    ChernSeries { ambient_dim: a.ambient_dim, coeffs: trunc_inverse(&a.coeffs).expect("unit constant term") }
}

pub fn series_pow(a: &ChernSeries, e: i64) -> ChernSeries {
    let base = if e < 0 { series_inverse(a) } else { a.clone() };
    let mut acc = ChernSeries::one(a.ambient_dim);
    let mut sq = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc.coeffs = trunc_mul(&acc.coeffs, &sq.coeffs);
        }
        sq.coeffs = trunc_mul(&sq.coeffs, &sq.coeffs);
        k >>= 1;
    }
    acc
}

/// `c ∩ z`.
pub fn cap(c: &ChernSeries, z: &ChowClass) -> Result<ChowClass> {
    same_dim(c.ambient_dim, z.ambient_dim)?;
    Ok(ChowClass { ambient_dim: z.ambient_dim, coeffs: trunc_mul(&c.coeffs, &z.coeffs) })
}

/// The dimension-`p` component of `z`.
pub fn dim_part(z: &ChowClass, p: usize) -> Result<ChowClass> {
    if p > z.ambient_dim {
        return Err(Error::OutOfRange(format!("dimension {} on P^{}", p, z.ambient_dim)));
    }
    let k = z.ambient_dim - p;
    ChowClass::hyperplane_power(z.ambient_dim, k, z.coeffs[k].clone())
}

/// `∏ (1 + a_i H)`.
pub fn chern_of_twists(twists: &[i64], ambient_dim: usize) -> ChernSeries {
    twists.iter().fold(ChernSeries::one(ambient_dim), |acc, &a| {
        series_mul(&acc, &ChernSeries::linear(ambient_dim, rat(a))).unwrap()
    })
}

impl Bundle {
    pub fn new(rank: usize, chern: ChernSeries) -> Self {
        Bundle { rank, chern }
    }

    /// `⊕ O(a_i)`.
    pub fn from_twists(twists: &[i64], ambient_dim: usize) -> Self {
        Bundle { rank: twists.len(), chern: chern_of_twists(twists, ambient_dim) }
    }
}

/// Degree of `{∏ c(N_i) · c(T_P|Z)^{-1} · c(T_Z) ∩ [Z]}_0`.
pub fn residual_contribution(
    normal_classes: &[ChernSeries],
    c_tangent_ambient_restricted: &ChernSeries,
    c_tangent_z: &ChernSeries,
    fundamental: &ChowClass,
) -> Result<RatNum> {
    let m = fundamental.ambient_dim;
    let mut total = c_tangent_z.clone();
    for n in normal_classes {
        total = series_mul(&total, n)?;
    }
    total = series_mul(&total, &series_inverse(c_tangent_ambient_restricted))?;
    Ok(cap(&total, fundamental)?.coeffs[m].clone())
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Intersection numbers `∫ (f*H)^a E^b` (`a + b = m`) on the blow-up of
/// `P^m` along a linear `P^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupPairing {
    pub m: usize,
    pub k: usize,
    /// `table[b] = ∫ (f*H)^(m-b) E^b`.
    pub table: Vec<RatNum>,
}

pub fn blowup_pairing(m: usize, k: usize) -> Result<BlowupPairing> {
    if k >= m {
        return Err(Error::OutOfRange(format!("center P^{} must be a proper subspace of P^{}", k, m)));
    }
    let c = m - k;
    let mut table = vec![RatNum::one()];
    for b in 1..=m {
        // E restricted to E is O(-1) on P(N), N = O(1)^c on P^k, and
        // π_* ζ^(c-1+i) = s_i(N) = coefficient of h^i in (1+h)^(-c).
        if b < c {
            table.push(RatNum::zero());
            continue;
        }
        let i = (b - c) as u64;
        // coefficient of h^i in (1+h)^(-c) is (-1)^i C(c+i-1, i)
        let mut s = RatNum::from_integer(binomial(c as u64 + i - 1, i));
        if i % 2 == 1 {
            s = -s;
        }
        if (b - 1) % 2 == 1 {
            s = -s;
        }
        table.push(s);
    }
    Ok(BlowupPairing { m, k, table })
}

impl BlowupPairing {
    pub fn integral(&self, a: usize, b: usize) -> Result<RatNum> {
        if a + b != self.m {
            return Err(Error::DimensionMismatch(format!("degree {} on a {}-fold", a + b, self.m)));
        }
        Ok(self.table[b].clone())
    }

    /// `∫ (α f*H + β E)^m`.
    pub fn divisor_power(&self, alpha: &RatNum, beta: &RatNum) -> RatNum {
        let m = self.m;
        (0..=m)
            .map(|b| {
                RatNum::from_integer(binomial(m as u64, b as u64))
                    * num_traits::pow(alpha.clone(), m - b)
                    * num_traits::pow(beta.clone(), b)
                    * &self.table[b]
            })
            .fold(RatNum::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(m: usize, c: &[i64]) -> ChernSeries {
        ChernSeries::from_ints(m, c).unwrap()
    }

    #[test]
    fn products_and_inverses() {
        assert_eq!(series_mul(&s(2, &[1, 4]), &s(2, &[1, 1])).unwrap(), s(2, &[1, 5, 4]));
        let a = s(3, &[1, 2]);
        assert_eq!(series_mul(&a, &series_inverse(&a)).unwrap(), ChernSeries::one(3));
        assert_eq!(series_inverse(&s(2, &[1, 2])), s(2, &[1, -2, 4]));
        assert_eq!(series_inverse(&ChernSeries::one(4)), ChernSeries::one(4));
        let n = series_mul(&s(1, &[1, 5]), &s(1, &[1, 5])).unwrap();
        assert_eq!(series_inverse(&n), s(1, &[1, -10]));
    }

    #[test]
    fn conic_residual_series() {
        let l4 = s(2, &[1, 4]);
        let total = series_mul(
            &series_mul(&series_pow(&l4, 5), &series_pow(&s(2, &[1, 2]), -6)).unwrap(),
            &series_pow(&s(2, &[1, 1]), 3),
        )
        .unwrap();
        assert_eq!(total, s(2, &[1, 11, 31]));
        let r = residual_contribution(&vec![l4; 5], &series_pow(&s(2, &[1, 2]), 6), &series_pow(&s(2, &[1, 1]), 3), &ChowClass::fundamental(2))
            .unwrap();
        assert_eq!(r, rat(31));
        assert_eq!(rat(32) - r, rat(1));
    }

    #[test]
    fn residual_of_a_point() {
        let one = ChernSeries::one(0);
        assert_eq!(residual_contribution(&[], &one, &one, &ChowClass::fundamental(0)).unwrap(), rat(1));
        assert_eq!(residual_contribution(&[ChernSeries::one(0)], &one, &one, &ChowClass::point(0, rat(1))).unwrap(), rat(1));
    }

    #[test]
    fn caps() {
        let c = chern_of_twists(&[2, 2], 3);
        assert_eq!(c, s(3, &[1, 4, 4]));
        let plane = ChowClass::from_ints(3, &[0, 1, 0, 0]).unwrap();
        assert_eq!(dim_part(&cap(&c, &plane).unwrap(), 1).unwrap(), ChowClass::from_ints(3, &[0, 0, 4, 0]).unwrap());
        let z = ChowClass::from_ints(3, &[0, 0, 3, -10]).unwrap();
        assert_eq!(cap(&ChernSeries::one(3), &z).unwrap(), z);
        let cubic = cap(&chern_of_twists(&[2, 2, 2], 3), &z).unwrap();
        assert_eq!(dim_part(&cubic, 0).unwrap(), ChowClass::point(3, rat(8)));
        assert_eq!(chern_of_twists(&[2, 2, 2], 3), s(3, &[1, 6, 12, 8]));
        assert_eq!(chern_of_twists(&[], 3), ChernSeries::one(3));
        assert!(dim_part(&z, 4).is_err());
    }

    #[test]
    fn blowups() {
        let t = blowup_pairing(2, 0).unwrap();
        assert_eq!(t.integral(0, 2).unwrap(), rat(-1));
        assert_eq!(t.integral(2, 0).unwrap(), rat(1));
        assert_eq!(t.integral(1, 1).unwrap(), rat(0));
        assert_eq!(t.divisor_power(&rat(1), &rat(1)), rat(0));
        assert_eq!(blowup_pairing(1, 0).unwrap().integral(0, 1).unwrap(), rat(1));
        assert!(blowup_pairing(2, 2).is_err());
        // blow-up of a point in P^3: E^3 = 1
        assert_eq!(blowup_pairing(3, 0).unwrap().integral(0, 3).unwrap(), rat(1));
        // blow-up of a line in P^3: E^3 = -deg N = -2, H E^2 = -1
        let l = blowup_pairing(3, 1).unwrap();
        assert_eq!(l.integral(1, 2).unwrap(), rat(-1));
        assert_eq!(l.integral(0, 3).unwrap(), rat(-2));
    }

    #[test]
    fn display() {
        let z = ChowClass::from_ints(3, &[0, 0, 3, -10]).unwrap();
        assert_eq!(z.to_string(), "3*H^2 - 10*H^3");
        assert_eq!(ChowClass::zero(2).to_string(), "0");
        assert_eq!(ChowClass::from_ints(2, &[0, 1, 0]).unwrap().to_string(), "H");
    }
}
