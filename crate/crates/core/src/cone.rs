//! Rees-algebra, normal-cone and exceptional-divisor ideals.

use crate::context::{Budget, Context};
use crate::error::{Error, Result};
use crate::ideal::{eliminate, hilbert_dim_deg, saturate_generic, sliced_count, HilbertMode, Ideal};
use crate::poly::{Grading, MonomialOrder, Polynomial, Ring, Variable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientKind {
    Projective,
    Affine,
}

/// `X ⊂ Y ⊂ ambient`: `ideal` defines `X` modulo `relations`, which define `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemePresentation {
    kind: AmbientKind,
    ideal: Ideal,
    relations: Ideal,
}

impl SchemePresentation {
    pub fn new(kind: AmbientKind, ideal: Ideal, relations: Ideal) -> Result<Self> {
        let relations = relations.to_ring(ideal.ring())?;
        if kind == AmbientKind::Projective {
            for g in ideal.gens().iter().chain(relations.gens()) {
                if !g.is_homogeneous() {
                    return Err(Error::NotHomogeneous(g.to_string()));
                }
            }
        }
        Ok(SchemePresentation { kind, ideal, relations })
    }

    /// Subscheme of `P^n` with no ambient relations.
    pub fn projective(ring: &Ring, gens: &[&str]) -> Result<Self> {
        Self::new(AmbientKind::Projective, Ideal::parse(ring, gens)?, Ideal::zero(ring))
    }

    /// Subscheme of `V(relations) ⊂ P^n`.
    pub fn projective_in(ring: &Ring, gens: &[&str], relations: &[&str]) -> Result<Self> {
        Self::new(AmbientKind::Projective, Ideal::parse(ring, gens)?, Ideal::parse(ring, relations)?)
    }

    pub fn affine(ring: &Ring, gens: &[&str], relations: &[&str]) -> Result<Self> {
        Self::new(AmbientKind::Affine, Ideal::parse(ring, gens)?, Ideal::parse(ring, relations)?)
    }

    pub fn kind(&self) -> AmbientKind {
        self.kind
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.ideal.nonzero_gens()
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.nonzero_gens().is_empty()
    }

    /// `I_X + I_Y`.
    pub fn full_ideal(&self) -> Ideal {
        self.ideal.sum(&self.relations).unwrap()
    }

    /// Dimension of the ambient projective or affine space.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            AmbientKind::Projective => self.ring().nvars() - 1,
            AmbientKind::Affine => self.ring().nvars(),
        }
    }

    fn mode(&self) -> HilbertMode {
        match self.kind {
            AmbientKind::Projective => HilbertMode::Projective,
            AmbientKind::Affine => HilbertMode::Affine,
        }
    }

    pub fn dim_x(&self, budget: &Budget) -> Result<i64> {
        Ok(hilbert_dim_deg(&self.full_ideal(), self.mode(), budget)?.dim)
    }

    pub fn dim_y(&self, budget: &Budget) -> Result<i64> {
        Ok(hilbert_dim_deg(&self.relations, self.mode(), budget)?.dim)
    }

    /// Same scheme, relations folded into `ideal`, as a subscheme of `V(relations)`.
    pub fn with_relations(&self, relations: &Ideal) -> Result<Self> {
        Self::new(self.kind, self.ideal.clone(), self.relations.sum(&relations.to_ring(self.ring())?)?)
    }
}

/// A cone inside `⊕ O(twist)` over the base scheme, presented by a
/// bihomogeneous ideal in base and fiber variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConePresentation {
    pub base: SchemePresentation,
    pub fiber_vars: Vec<String>,
    pub twist: u32,
    pub ideal: Ideal,
}

impl ConePresentation {
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn base_indices(&self) -> Vec<usize> {
        let ring = self.ring();
        (0..ring.nvars()).filter(|&i| ring.grading(i) != Grading::Fiber).collect()
    }

    pub fn fiber_indices(&self) -> Vec<usize> {
        self.ring().factor_indices(Grading::Fiber)
    }

    /// Replace the ideal, keeping base, fibers and twist.
    pub fn with_ideal(&self, ideal: Ideal) -> ConePresentation {
        ConePresentation { ideal, ..self.clone() }
    }
}

/// Default fiber names `A0, A1, ...`, avoiding clashes with `ring`.
pub fn default_fibers(ring: &Ring, n: usize) -> Vec<String> {
    let mut base = "A".to_string();
    while (0..n).any(|i| ring.index_of(&format!("{}{}", base, i)).is_some()) {
        base.push('_');
    }
    (0..n).map(|i| format!("{}{}", base, i)).collect()
}

/// Bring generators to a common degree `d` by replacing each `f` of degree
/// `e < d` with all `f·x_j^(d-e)`; these generate the same ideal up to
/// saturation by the irrelevant ideal.
pub fn pad_generators(gens: &[Polynomial]) -> Result<(Vec<Polynomial>, u32)> {
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        degs.push(g.total_degree().ok_or(Error::ZeroPolynomial)?);
    }
    let d = degs.iter().copied().max().ok_or_else(|| Error::Invalid("no generators".into()))?;
    let mut out = Vec::new();
    for (g, &e) in gens.iter().zip(&degs) {
        if e == d {
            out.push(g.clone());
            continue;
        }
        let ring = g.ring();
        for j in ring.factor_indices(Grading::Base) {
            out.push(g.mul(&Polynomial::var(ring, j).pow(d - e))?);
        }
    }
    Ok((out, d))
}

/// Generators of `X` used for cone constructions: padded to equal degree
/// in projective mode.
pub fn cone_generators(x: &SchemePresentation) -> Result<(Vec<Polynomial>, u32)> {
    let gens = x.generators();
    if gens.is_empty() {
        return Err(Error::Invalid("X has no generators".into()));
    }
    match x.kind() {
        AmbientKind::Projective => pad_generators(&gens),
        AmbientKind::Affine => Ok((gens.clone(), gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0))),
    }
}

fn cone_ring(base: &Ring, fibers: &[String]) -> Result<Ring> {
    let extra: Vec<Variable> = fibers.iter().map(|n| Variable { name: n.clone(), grading: Grading::Fiber }).collect();
    let r = base.extended(&extra)?;
    match r.order() {
        MonomialOrder::Elimination(_) => r.with_order(MonomialOrder::GrevLex),
        _ => Ok(r),
    }
}

/// Graph of `[f_0 : ... : f_r]`: eliminate `t` from `(A_i - t f_i) + I_Y`
/// and saturate by the factor-1 irrelevant ideal.
pub fn rees_ideal(x: &SchemePresentation, generators: &[Polynomial], fibers: &[String], ctx: &mut Context) -> Result<ConePresentation> {
    if generators.len() != fibers.len() {
        return Err(Error::Invalid(format!("{} generators but {} fiber variables", generators.len(), fibers.len())));
    }
    let mut twist = 0;
    if x.kind() == AmbientKind::Projective {
        let degs: Vec<u32> = generators.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        if degs.iter().any(|&e| e != degs[0]) {
            return Err(Error::UnequalDegrees(degs));
        }
        twist = degs.first().copied().unwrap_or(0);
    }
    let full = x.full_ideal().groebner(&ctx.budget)?;
    for g in generators {
        if !full.contains(&g.to_ring(x.ring())?)? {
            return Err(Error::NotInIdeal(g.to_string()));
        }
    }
    let ring = cone_ring(x.ring(), fibers)?;
    let t = fresh(&ring, "_t");
    let ext = ring.extended(&[Variable { name: t.clone(), grading: Grading::Parameter }])?;
    let tv = Polynomial::var_named(&ext, &t)?;
    let mut gens = Vec::new();
    for (g, a) in generators.iter().zip(fibers) {
        gens.push(Polynomial::var_named(&ext, a)?.sub(&tv.mul(&g.to_ring(&ext)?)?)?);
    }
    for r in x.relations().nonzero_gens() {
        gens.push(r.to_ring(&ext)?);
    }
    let graph = eliminate(&Ideal::new(&ext, gens)?, &[&t], &ctx.budget)?.to_ring(&ring)?;
    let graph = if x.kind() == AmbientKind::Projective && x.has_relations() {
        saturate_generic(&graph, &base_indices(&ring), ctx)?
    } else {
        graph
    };
    Ok(ConePresentation { base: x.clone(), fiber_vars: fibers.to_vec(), twist, ideal: graph })
}

fn fresh(ring: &Ring, base: &str) -> String {
    let mut n = base.to_string();
    while ring.index_of(&n).is_some() {
        n.push('_');
    }
    n
}

fn base_indices(ring: &Ring) -> Vec<usize> {
    ring.factor_indices(Grading::Base)
}

/// `C_{X/Y}` inside `⊕ O(d)`: the Rees ideal plus `I_X`.
pub fn normal_cone_ideal(x: &SchemePresentation, generators: &[Polynomial], fibers: &[String], ctx: &mut Context) -> Result<ConePresentation> {
    let rees = rees_ideal(x, generators, fibers, ctx)?;
    let ring = rees.ring().clone();
    let ideal = rees.ideal.sum(&x.ideal().to_ring(&ring)?)?;
    let ideal = if x.kind() == AmbientKind::Projective { saturate_generic(&ideal, &base_indices(&ring), ctx)? } else { ideal };
    let ideal = ideal.groebner(&ctx.budget)?.into_ideal();
    Ok(rees.with_ideal(ideal))
}

/// `P(C_{X/Y}) ⊂ P^m × P^r`, the exceptional divisor of the blow-up.
pub fn exceptional_ideal(x: &SchemePresentation, generators: &[Polynomial], fibers: &[String], ctx: &mut Context) -> Result<ConePresentation> {
    if x.dim_x(&ctx.budget)? >= x.dim_y(&ctx.budget)? {
        return Err(Error::NotProper("X contains a component of Y".into()));
    }
    let cone = normal_cone_ideal(x, generators, fibers, ctx)?;
    projectivize(&cone, ctx)
}

/// Saturate a cone ideal by the fiber irrelevant ideal, leaving `P(C)`.
pub fn projectivize(cone: &ConePresentation, ctx: &mut Context) -> Result<ConePresentation> {
    let mut ideal = saturate_generic(&cone.ideal, &cone.fiber_indices(), ctx)?;
    if cone.base.kind() == AmbientKind::Projective {
        ideal = saturate_generic(&ideal, &base_indices(cone.ring()), ctx)?;
    }
    Ok(cone.with_ideal(ideal.groebner(&ctx.budget)?.into_ideal()))
}

/// Dimension of `V(W) ⊂ P^m × P^r`, or -1 when empty.
pub fn biprojective_dim(w: &ConePresentation, budget: &Budget) -> Result<i64> {
    let d = hilbert_dim_deg(&w.ideal, HilbertMode::Affine, budget)?.dim;
    Ok(if d < 2 { -1 } else { d - 2 })
}

/// `n_{D-j, j} = ∫ H^(D-j) h^j [W]` for `j = 0..=D`, by generic slicing.
pub fn bidegrees(w: &ConePresentation, ctx: &mut Context) -> Result<Vec<u64>> {
    if w.base.kind() != AmbientKind::Projective {
        return Err(Error::Invalid("bidegrees need a projective base".into()));
    }
    let d = biprojective_dim(w, &ctx.budget)?;
    if d < 0 {
        return Ok(Vec::new());
    }
    let d = d as usize;
    (0..=d).map(|j| sliced_count(&w.ideal, [d - j, j], ctx)).collect()
}

/// Dimension of the cone `C` itself (not its projectivization).
pub fn cone_dimension(c: &ConePresentation, budget: &Budget) -> Result<i64> {
    let krull = hilbert_dim_deg(&c.ideal, HilbertMode::Affine, budget)?.dim;
    Ok(match c.base.kind() {
        AmbientKind::Projective => krull - 1,
        AmbientKind::Affine => krull,
    })
}

/// `None` when `dim C = dim Y`, otherwise a warning.
pub fn check_purity(c: &ConePresentation, budget: &Budget) -> Result<Option<String>> {
    let dc = cone_dimension(c, budget)?;
    let dy = c.base.dim_y(budget)?;
    Ok(if dc == dy { None } else { Some(format!("cone has dimension {} but Y has dimension {}", dc, dy)) })
}
