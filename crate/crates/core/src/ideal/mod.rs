//! Ideals, Gröbner bases and the operations built on them.

mod count;
mod groebner;
mod hilbert;
mod modular;
mod ops;

pub use count::{count_affine, sliced_count, zero_dim_count, CountMode};
pub use groebner::{buchberger, satisfies_buchberger_criterion, GroebnerBasis};
pub use hilbert::{hilbert_dim_deg, hilbert_numerator, krull_dim_degree, DimDeg, HilbertMode};
pub use ops::{
    eliminate, ideal_quotient, intersect, quotient_by, saturate, saturate_by_element, saturate_by_var,
    saturate_generic,
};

use crate::context::Budget;
use crate::error::{Error, Result};
use crate::poly::{same_ring, Polynomial, Ring};

/// Ideal given by generators; the empty list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch(format!("generator {} not in {}", g, ring)));
            }
        }
        Ok(Ideal { ring: ring.clone(), gens })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)] }
    }

    /// Parse each generator in `ring`.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// Ideal generated by the given variables.
    pub fn of_vars(ring: &Ring, vars: &[usize]) -> Self {
        Ideal { ring: ring.clone(), gens: vars.iter().map(|&i| Polynomial::var(ring, i)).collect() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nonzero_gens(&self) -> Vec<Polynomial> {
        self.gens.iter().filter(|g| !g.is_zero()).cloned().collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn groebner(&self, budget: &Budget) -> Result<GroebnerBasis> {
        buchberger(self, budget)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal { ring: self.ring.clone(), gens })
    }

    pub fn with_gens(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn to_ring(&self, target: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal { ring: target.clone(), gens })
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>, target: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn contains(&self, p: &Polynomial, budget: &Budget) -> Result<bool> {
        self.groebner(budget)?.contains(p)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let gb = self.groebner(budget)?;
        for g in other.gens() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals via reduced Gröbner bases.
    pub fn same_as(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let other = other.to_ring(&self.ring)?;
        Ok(self.groebner(budget)?.basis() == other.groebner(budget)?.basis())
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner(budget)?.is_unit())
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}
