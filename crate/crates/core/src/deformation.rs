//! One-parameter families: deformation to the normal cone, deformation of a
//! cone inside a split bundle, and flat limits.

use crate::cone::{ConePresentation, SchemePresentation};
use crate::context::{Budget, Context};
use crate::error::{Error, Result};
use crate::ideal::{saturate_by_var, Ideal};
use crate::poly::{Grading, Monomial, Polynomial, Ring, Variable};
use crate::rational::RatNum;

/// An ideal in a ring with a distinguished parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyIdeal {
    ideal: Ideal,
    param: usize,
}

impl FamilyIdeal {
    pub fn new(ideal: Ideal, param: &str) -> Result<Self> {
        let p = ideal.ring().var_index(param)?;
        if ideal.ring().grading(p) != Grading::Parameter {
            return Err(Error::Invalid(format!("`{}` is not a parameter variable", param)));
        }
        Ok(FamilyIdeal { ideal, param: p })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn param_name(&self) -> &str {
        self.ring().name(self.param)
    }

    /// The ring with `t` dropped.
    pub fn fiber_ring(&self) -> Result<Ring> {
        self.ring().restricted(|i| i != self.param)
    }
}

fn check_fresh(ring: &Ring, name: &str) -> Result<()> {
    if ring.index_of(name).is_some() {
        Err(Error::Invalid(format!("variable `{}` already exists", name)))
    } else {
        Ok(())
    }
}

/// The chart of `Bl_{X×0}(Y×A¹)` where the exceptional coordinate dual to
/// `t` is 1: `(relations of Y) + (f_i - t β_i)`, saturated by `t`.
pub fn deformation_chart(
    x: &SchemePresentation,
    generators: &[Polynomial],
    param: &str,
    fibers: &[String],
    budget: &Budget,
) -> Result<FamilyIdeal> {
    if fibers.len() != generators.len() {
        return Err(Error::Invalid(format!("{} fiber variables for {} generators", fibers.len(), generators.len())));
    }
    let base = x.ring();
    for g in generators {
        if !x.ideal().contains(g, budget)? {
            return Err(Error::NotInIdeal(g.to_string()));
        }
    }
    check_fresh(base, param)?;
    let mut extra = vec![Variable { name: param.to_string(), grading: Grading::Parameter }];
    for f in fibers {
        check_fresh(base, f)?;
        extra.push(Variable { name: f.clone(), grading: Grading::Fiber });
    }
    let ring = base.extended(&extra)?;
    let t = Polynomial::var_named(&ring, param)?;
    let mut gens = x.relations().nonzero_gens().iter().map(|r| r.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
    for (g, b) in generators.iter().zip(fibers) {
        let beta = Polynomial::var_named(&ring, b)?;
        gens.push(g.to_ring(&ring)?.sub(&t.mul(&beta)?)?);
    }
    let tv = ring.var_index(param)?;
    let sat = saturate_by_var(&Ideal::new(&ring, gens)?, tv, budget)?;
    FamilyIdeal::new(sat, param)
}

/// Substitute `v -> v - v'/t` for each `v` in `sub`, clear denominators
/// and strip the common power of `t` from each generator.
pub fn defvb_family(cone: &ConePresentation, sub: &[String], param: &str) -> Result<FamilyIdeal> {
    let base = cone.ring();
    let fibers = cone.fiber_indices();
    let mut sub_idx = Vec::with_capacity(sub.len());
    for v in sub {
        let i = base.var_index(v)?;
        if !fibers.contains(&i) {
            return Err(Error::Invalid(format!("`{}` is not a fiber variable", v)));
        }
        sub_idx.push(i);
    }
    check_fresh(base, param)?;
    let mut extra = Vec::new();
    for v in sub {
        let p = format!("{}'", v);
        check_fresh(base, &p)?;
        extra.push(Variable { name: p, grading: Grading::Fiber });
    }
    extra.push(Variable { name: param.to_string(), grading: Grading::Parameter });
    let ring = base.extended(&extra)?;
    let tv = ring.var_index(param)?;
    let t = Polynomial::var(&ring, tv);
    // t v - v'
    let shifted = sub
        .iter()
        .map(|v| Polynomial::var_named(&ring, v)?.mul(&t)?.sub(&Polynomial::var_named(&ring, &format!("{}'", v))?))
        .collect::<Result<Vec<_>>>()?;

    let mut gens = Vec::new();
    for g in cone.ideal.nonzero_gens() {
        let sub_deg = |m: &Monomial| sub_idx.iter().map(|&i| m.exps()[i] as u32).sum::<u32>();
        let top = g.terms().iter().map(|(m, _)| sub_deg(m)).max().unwrap_or(0);
        let mut acc = Polynomial::zero(&ring);
        for (m, c) in g.terms() {
            let k = sub_deg(m);
            let mut rest = m.clone();
            for &i in &sub_idx {
                rest.0[i] = 0;
            }
            let mut term = Polynomial::monomial(base, rest, c.clone()).to_ring(&ring)?.mul(&t.pow(top - k))?;
            for (j, &i) in sub_idx.iter().enumerate() {
                term = term.mul(&shifted[j].pow(m.exps()[i] as u32))?;
            }
            acc = acc.add(&term)?;
        }
        let e = acc.var_content(tv);
        gens.push(acc.div_var_power(tv, e));
    }
    FamilyIdeal::new(Ideal::new(&ring, gens)?, param)
}

/// The fiber at `t = t0`, as an ideal in the ring without `t`.
pub fn fiber_at(family: &FamilyIdeal, t0: &RatNum) -> Result<Ideal> {
    let target = family.fiber_ring()?;
    let gens = family
        .ideal()
        .nonzero_gens()
        .iter()
        .map(|g| g.specialize(family.param(), t0).to_ring(&target))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}

/// Fiber at `t = t0` of the `t`-flat closure `I : t^∞`. With `no_saturate`
/// set the closure is skipped.
pub fn flat_fiber(family: &FamilyIdeal, t0: &RatNum, ctx: &Context) -> Result<Ideal> {
    if ctx.options.no_saturate {
        return fiber_at(family, t0);
    }
    let closure = saturate_by_var(family.ideal(), family.param(), &ctx.budget)?;
    fiber_at(&FamilyIdeal { ideal: closure, param: family.param }, t0)
}

/// Special fiber of the `t`-flat closure.
pub fn flat_limit(family: &FamilyIdeal, ctx: &Context) -> Result<Ideal> {
    let limit = flat_fiber(family, &RatNum::from_integer(0.into()), ctx)?;
    if limit.is_unit(&ctx.budget)? {
        return Err(Error::DegenerateFamily(format!("family {} has empty special fiber", family.ideal())));
    }
    Ok(limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::ChowClass;
    use crate::ideal::eliminate;
    use crate::poly::PolyRing;
    use crate::rational::rat;
    use crate::segre::segre_of_cone;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn same(a: &Ideal, gens: &[&str]) -> bool {
        let b = Ideal::parse(a.ring(), gens).unwrap();
        a.same_as(&b, &Budget::default()).unwrap()
    }

    #[test]
    fn double_chart() {
        let b = Budget::default();
        let a3 = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let x = SchemePresentation::affine(&a3, &["x*y"], &[]).unwrap();
        let m = deformation_chart(&x, &x.generators(), "t", &names(&["a0"]), &b).unwrap();
        assert!(same(m.ideal(), &["x*y - t*a0"]));

        let rels: Vec<String> = m.ideal().gens().iter().map(|g| g.to_string()).collect();
        let rels: Vec<&str> = rels.iter().map(|s| s.as_str()).collect();
        let x2 = SchemePresentation::affine(m.ring(), &["x", "y", "a0"], &rels).unwrap();
        let m2 = deformation_chart(&x2, &x2.generators(), "s", &names(&["b0", "b1", "b2"]), &b).unwrap();
        let e = eliminate(m2.ideal(), &["x", "y", "a0"], &b).unwrap();
        assert!(same(&e, &["s*b0*b1 - t*b2"]));
        let lim = flat_limit(&FamilyIdeal::new(e, "t").unwrap(), &Context::new(0)).unwrap();
        assert!(same(&lim, &["s*b0*b1"]));
    }

    #[test]
    fn trivial_chart_and_moving_point() {
        let b = Budget::default();
        let a1 = PolyRing::with_names(&["x"]).unwrap();
        let x = SchemePresentation::affine(&a1, &["x"], &[]).unwrap();
        let m = deformation_chart(&x, &x.generators(), "t", &names(&["b"]), &b).unwrap();
        assert!(same(m.ideal(), &["x - t*b"]));
        assert!(same(&fiber_at(&m, &rat(0)).unwrap(), &["x"]));

        let r = a1.extended(&[Variable { name: "t".into(), grading: Grading::Parameter }]).unwrap();
        let f = FamilyIdeal::new(Ideal::parse(&r, &["x - t"]).unwrap(), "t").unwrap();
        assert!(same(&flat_limit(&f, &Context::new(0)).unwrap(), &["x"]));
        let f = FamilyIdeal::new(Ideal::parse(&r, &["t*x - t"]).unwrap(), "t").unwrap();
        assert!(same(&flat_limit(&f, &Context::new(0)).unwrap(), &["x - 1"]));
        let f = FamilyIdeal::new(Ideal::parse(&r, &["t"]).unwrap(), "t").unwrap();
        assert!(matches!(flat_limit(&f, &Context::new(0)), Err(Error::DegenerateFamily(_))));
    }

    #[test]
    fn defvb_substitution() {
        let r = PolyRing::bigraded(&["x", "y", "z"], &["A", "B"]).unwrap();
        let c = ConePresentation {
            base: SchemePresentation::projective(&r.restricted(|i| i < 3).unwrap(), &["z"]).unwrap(),
            fiber_vars: names(&["A", "B"]),
            twist: 1,
            ideal: Ideal::parse(&r, &["y*A - x*B"]).unwrap(),
        };
        let f = defvb_family(&c, &names(&["A"]), "t").unwrap();
        assert!(same(f.ideal(), &["t*y*A - t*x*B - y*A'"]));
        let f0 = defvb_family(&c, &[], "t").unwrap();
        assert!(same(&fiber_at(&f0, &rat(5)).unwrap(), &["y*A - x*B"]));
        let c2 = c.with_ideal(Ideal::parse(&r, &["x*A"]).unwrap());
        assert!(same(defvb_family(&c2, &names(&["A"]), "t").unwrap().ideal(), &["t*x*A - x*A'"]));
        assert!(defvb_family(&c, &names(&["x"]), "t").is_err());
    }

    #[test]
    fn limit_of_main_example_cone() {
        let mut ctx = Context::new(3);
        let p3 = PolyRing::with_names(&["x", "y", "z", "w"]).unwrap();
        let x = SchemePresentation::projective_in(&p3, &["z"], &["x*z", "y*z"]).unwrap();
        let r = PolyRing::bigraded(&["x", "y", "z", "w"], &["A", "B"]).unwrap();
        let cone = ConePresentation {
            base: x.clone(),
            fiber_vars: names(&["A", "B"]),
            twist: 1,
            ideal: Ideal::parse(&r, &["x*z", "y*z", "y*A - x*B"]).unwrap(),
        };
        let fam = defvb_family(&cone, &names(&["A"]), "t").unwrap();
        let lim = flat_limit(&fam, &ctx).unwrap();
        assert!(same(&lim, &["x*z", "y*z", "y*A'"]));

        let one = fiber_at(&fam, &rat(1)).unwrap();
        let seg = |ideal: Ideal, ctx: &mut Context| {
            let cp = ConePresentation { base: x.clone(), fiber_vars: names(&["A", "B", "A'"]), twist: 2, ideal };
            segre_of_cone(&cp, ctx).unwrap()
        };
        let s0 = seg(lim, &mut ctx);
        let s1 = seg(one, &mut ctx);
        assert_eq!(s0, s1);
        assert_eq!(s0, ChowClass::from_ints(3, &[0, 1, -2, 0]).unwrap());
    }
}
