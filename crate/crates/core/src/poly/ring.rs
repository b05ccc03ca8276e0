use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which grading factor a variable contributes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grading {
    /// Factor 1: base coordinates.
    Base,
    /// Factor 2: fiber coordinates.
    Fiber,
    /// A family parameter, weight zero in both factors.
    Parameter,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub grading: Grading,
}

/// Monomial order descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Block order: grevlex on the flagged variables first, ties broken by
    /// grevlex on the rest. Eliminates the flagged variables.
    Elimination(Vec<bool>),
}

/// Polynomial ring over the rationals with named, graded variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<Variable>,
    order: MonomialOrder,
}

/// Shared handle to a ring; polynomials hold one.
pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new(vars: Vec<Variable>, order: MonomialOrder) -> Result<Ring> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::Invalid(format!("duplicate variable `{}`", v.name)));
            }
        }
        if let MonomialOrder::Elimination(mask) = &order {
            if mask.len() != vars.len() {
                return Err(Error::Invalid("elimination mask length".into()));
            }
        }
        Ok(Arc::new(PolyRing { vars, order }))
    }

    /// Single-factor ring with grevlex order.
    pub fn with_names<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        Self::new(
            names
                .iter()
                .map(|n| Variable { name: n.as_ref().to_string(), grading: Grading::Base })
                .collect(),
            MonomialOrder::GrevLex,
        )
    }

    /// Two-factor ring: `base` in factor 1, `fiber` in factor 2.
    pub fn bigraded<S: AsRef<str>, T: AsRef<str>>(base: &[S], fiber: &[T]) -> Result<Ring> {
        let mut vars: Vec<Variable> = base
            .iter()
            .map(|n| Variable { name: n.as_ref().to_string(), grading: Grading::Base })
            .collect();
        vars.extend(
            fiber
                .iter()
                .map(|n| Variable { name: n.as_ref().to_string(), grading: Grading::Fiber }),
        );
        Self::new(vars, MonomialOrder::GrevLex)
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn grading(&self, i: usize) -> Grading {
        self.vars[i].grading
    }

    /// Indices of the variables in the given factor.
    pub fn factor_indices(&self, g: Grading) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.vars[i].grading == g).collect()
    }

    pub fn has_fiber(&self) -> bool {
        self.vars.iter().any(|v| v.grading == Grading::Fiber)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::new(self.vars.clone(), order)
    }

    /// Same variables and order plus extra variables appended at the end.
    pub fn extended(&self, extra: &[Variable]) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(extra);
        let order = match &self.order {
            MonomialOrder::Elimination(mask) => {
                let mut m = mask.clone();
                m.extend(std::iter::repeat_n(false, extra.len()));
                MonomialOrder::Elimination(m)
            }
            o => o.clone(),
        };
        Self::new(vars, order)
    }

    /// Ring on the variables that satisfy `keep`, order preserved
    /// (elimination orders collapse to grevlex).
    pub fn restricted(&self, keep: impl Fn(usize) -> bool) -> Result<Ring> {
        let vars = (0..self.vars.len()).filter(|&i| keep(i)).map(|i| self.vars[i].clone()).collect();
        let order = match &self.order {
            MonomialOrder::Elimination(_) => MonomialOrder::GrevLex,
            o => o.clone(),
        };
        Self::new(vars, order)
    }

    /// Compare exponent vectors in this ring's order.
    #[inline]
    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        match &self.order {
            MonomialOrder::GrevLex => grevlex(a, b, None),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination(mask) => grevlex(a, b, Some((mask, true)))
                .then_with(|| grevlex(a, b, Some((mask, false)))),
        }
    }
}

#[inline]
fn grevlex(a: &[u16], b: &[u16], mask: Option<(&Vec<bool>, bool)>) -> Ordering {
    let sel = |i: usize| mask.is_none_or(|(m, want)| m[i] == want);
    let (mut da, mut db) = (0u32, 0u32);
    for i in 0..a.len() {
        if sel(i) {
            da += a[i] as u32;
            db += b[i] as u32;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if sel(i) && a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.names().join(","))
    }
}

/// Rings are compatible when they have the same variables and order.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
