use super::Ideal;
use crate::context::{Budget, Context};
use crate::error::{Error, Result};
use crate::poly::{same_ring, Grading, MonomialOrder, PolyRing, Polynomial, Ring, Variable};

fn fresh_name(ring: &Ring, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while ring.index_of(&name).is_some() {
        k += 1;
        name = format!("{}{}", base, k);
    }
    name
}

fn check(i: &Ideal, j: &Ideal) -> Result<()> {
    if same_ring(i.ring(), j.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{} vs {}", i.ring(), j.ring())))
    }
}

/// `I ∩ k[remaining variables]`, returned in the ring without `drop`.
pub fn eliminate(ideal: &Ideal, drop: &[&str], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut mask = vec![false; ring.nvars()];
    for name in drop {
        mask[ring.var_index(name)?] = true;
    }
    let elim_ring = ring.with_order(MonomialOrder::Elimination(mask.clone()))?;
    let gb = ideal.to_ring(&elim_ring)?.groebner(budget)?;
    let sub = ring.restricted(|i| !mask[i])?;
    let gens = gb
        .basis()
        .iter()
        .filter(|g| (0..mask.len()).all(|i| !mask[i] || !g.involves(i)))
        .map(|g| g.to_ring(&sub))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&sub, gens)
}

/// Adjoin a fresh auxiliary variable, build generators there, eliminate it.
fn with_aux(
    ring: &Ring,
    budget: &Budget,
    build: impl FnOnce(&Ring, &Polynomial) -> Result<Vec<Polynomial>>,
) -> Result<Ideal> {
    let u = fresh_name(ring, "_u");
    let ext = ring.extended(&[Variable { name: u.clone(), grading: Grading::Parameter }])?;
    let uvar = Polynomial::var_named(&ext, &u)?;
    let gens = build(&ext, &uvar)?;
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[&u], budget)?;
    elim.to_ring(ring)
}

/// `I ∩ J` via `u·I + (1-u)·J` and elimination of `u`.
pub fn intersect(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal> {
    check(i, j)?;
    let ring = i.ring();
    with_aux(ring, budget, |ext, u| {
        let one_minus = Polynomial::one(ext).sub(u)?;
        let mut gens = Vec::new();
        for f in i.nonzero_gens() {
            gens.push(f.to_ring(ext)?.mul(u)?);
        }
        for g in j.nonzero_gens() {
            gens.push(g.to_ring(ext)?.mul(&one_minus)?);
        }
        Ok(gens)
    })
}

/// Ring with variable `v` moved to the last position, grevlex.
fn var_last_ring(ring: &Ring, v: usize) -> Result<Ring> {
    let mut vars: Vec<Variable> = ring.vars().to_vec();
    let x = vars.remove(v);
    vars.push(x);
    PolyRing::new(vars, MonomialOrder::GrevLex)
}

/// `I : x^k` for a variable, homogeneous `I`, using a grevlex basis with `x`
/// last (`k = None` means saturation).
fn var_quotient_homogeneous(i: &Ideal, v: usize, k: Option<u16>, budget: &Budget) -> Result<Ideal> {
    let ring = i.ring();
    let last = var_last_ring(ring, v)?;
    let gb = i.to_ring(&last)?.groebner(budget)?;
    let lv = last.nvars() - 1;
    let gens = gb
        .basis()
        .iter()
        .map(|g| {
            let c = g.var_content(lv);
            let e = k.map_or(c, |k| c.min(k));
            g.div_var_power(lv, e).to_ring(ring)
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `I : (g)`.
pub fn quotient_by(i: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if !same_ring(i.ring(), g.ring()) {
        return Err(Error::RingMismatch(format!("{} vs {}", i.ring(), g.ring())));
    }
    let ring = i.ring();
    if g.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if g.is_constant() {
        return Ok(i.clone());
    }
    if let Some(v) = single_var(g) {
        if i.is_homogeneous() {
            return var_quotient_homogeneous(i, v, Some(1), budget);
        }
    }
    let meet = intersect(i, &Ideal::new(ring, vec![g.clone()])?, budget)?;
    let mut gens = Vec::with_capacity(meet.gens().len());
    for f in meet.gens() {
        match f.div_exact(g)? {
            Some(q) => gens.push(q),
            None => return Err(Error::Invalid(format!("intersection element {} not divisible by {}", f, g))),
        }
    }
    Ideal::new(ring, gens)
}

fn single_var(g: &Polynomial) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let (m, _) = &g.terms()[0];
    if m.degree() == 1 {
        m.pure_power()
    } else {
        None
    }
}

/// `I : J = ⋂ (I : g)` over the generators of `J`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal> {
    check(i, j)?;
    let gens = j.nonzero_gens();
    if gens.is_empty() {
        return Ok(Ideal::unit(i.ring()));
    }
    let mut acc: Option<Ideal> = None;
    for g in &gens {
        let q = quotient_by(i, g, budget)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q, budget)?,
        });
    }
    Ok(acc.unwrap())
}

/// `I : J^∞`, iterating `I_{k+1} = I_k : J` until the reduced Gröbner
/// bases of consecutive quotients agree.
pub fn saturate(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal> {
    check(i, j)?;
    let mut cur = i.groebner(budget)?;
    loop {
        let next = ideal_quotient(&cur.to_ideal(), j, budget)?.groebner(budget)?;
        if next.basis() == cur.basis() {
            return Ok(cur.into_ideal());
        }
        cur = next;
    }
}

/// `I : x^∞` for a single variable. Uses the grevlex trick when `I` is
/// homogeneous and falls back to [`saturate_by_element`] otherwise.
pub fn saturate_by_var(i: &Ideal, v: usize, budget: &Budget) -> Result<Ideal> {
    if i.is_homogeneous() {
        var_quotient_homogeneous(i, v, None, budget)
    } else {
        saturate_by_element(i, &Polynomial::var(i.ring(), v), budget)
    }
}

/// `I : g^∞ = (I + (1 - u·g)) ∩ k[x]`.
pub fn saturate_by_element(i: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if !same_ring(i.ring(), g.ring()) {
        return Err(Error::RingMismatch(format!("{} vs {}", i.ring(), g.ring())));
    }
    if g.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    with_aux(i.ring(), budget, |ext, u| {
        let mut gens = i.nonzero_gens().iter().map(|f| f.to_ring(ext)).collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::one(ext).sub(&u.mul(&g.to_ring(ext)?)?)?);
        Ok(gens)
    })
}

/// `I : (x_j : j ∈ vars)^∞` for homogeneous `I`, computed as `I : ℓ^∞` for
/// a random linear form `ℓ` in those variables. Independent draws must give
/// the same reduced basis.
pub fn saturate_generic(i: &Ideal, vars: &[usize], ctx: &mut Context) -> Result<Ideal> {
    let ring = i.ring();
    if vars.is_empty() {
        return Ok(i.clone());
    }
    if vars.len() == 1 {
        return saturate_by_var(i, vars[0], &ctx.budget);
    }
    if !i.is_homogeneous() {
        return saturate(i, &Ideal::of_vars(ring, vars), &ctx.budget);
    }
    let j0 = *vars.last().unwrap();
    let mut result: Option<(Ideal, Vec<Polynomial>)> = None;
    for _ in 0..ctx.redraws() {
        let c: Vec<i64> = vars.iter().map(|_| ctx.random_nonzero_coeff()).collect();
        let c0 = crate::rational::rat(*c.last().unwrap());
        let mut fwd: Vec<Polynomial> = (0..ring.nvars()).map(|k| Polynomial::var(ring, k)).collect();
        let mut back = fwd.clone();
        let mut rest = Polynomial::var(ring, j0);
        let mut ell = Polynomial::zero(ring);
        for (&j, &cj) in vars.iter().zip(&c) {
            let term = Polynomial::var(ring, j).scale(&crate::rational::rat(cj));
            ell = ell.add(&term)?;
            if j != j0 {
                rest = rest.sub(&term)?;
            }
        }
        fwd[j0] = rest.scale(&c0.recip());
        back[j0] = ell;
        let moved = i.map(|g| g.map_with(ring, &fwd), ring)?;
        let sat = saturate_by_var(&moved, j0, &ctx.budget)?;
        let sat = sat.map(|g| g.map_with(ring, &back), ring)?;
        let gb = sat.groebner(&ctx.budget)?;
        match &result {
            None => result = Some((gb.to_ideal(), gb.basis().to_vec())),
            Some((_, b)) if b.as_slice() != gb.basis() => {
                return Err(Error::UnluckyDraw("generic saturation depends on the linear form".into()))
            }
            _ => {}
        }
    }
    Ok(result.unwrap().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;

    fn b() -> Budget {
        Budget::default()
    }

    fn same(i: &Ideal, gens: &[&str]) -> bool {
        let j = Ideal::parse(i.ring(), gens).unwrap();
        i.same_as(&j, &b()).unwrap()
    }

    #[test]
    fn quotients() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        assert!(same(&ideal_quotient(&i, &x, &b()).unwrap(), &["x", "y"]));
        let one = Ideal::unit(&r);
        assert!(same(&ideal_quotient(&i, &one, &b()).unwrap(), &["x^2", "x*y"]));
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        assert!(same(&ideal_quotient(&xy, &x, &b()).unwrap(), &["y"]));
    }

    #[test]
    fn quotient_inhomogeneous_matches_general_route() {
        let r = PolyRing::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2 - x", "x*y + y"]).unwrap();
        let q = quotient_by(&i, &Polynomial::parse(&r, "x").unwrap(), &b()).unwrap();
        assert!(same(&q, &["x - 1", "y"]));
    }

    #[test]
    fn saturations() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(same(&saturate(&i, &m, &b()).unwrap(), &["x"]));

        let r2 = PolyRing::with_names(&["x", "y", "A", "B", "A'", "t"]).unwrap();
        let f = Ideal::parse(&r2, &["t*(y*A - x*B) - y*A'"]).unwrap();
        let t = Ideal::parse(&r2, &["t"]).unwrap();
        assert!(same(&saturate(&f, &t, &b()).unwrap(), &["t*(y*A - x*B) - y*A'"]));
        let tv = r2.var_index("t").unwrap();
        assert!(same(&saturate_by_var(&f, tv, &b()).unwrap(), &["t*(y*A - x*B) - y*A'"]));
    }

    #[test]
    fn saturation_kills_everything_in_v_x() {
        let r = PolyRing::with_names(&["x", "y"]).unwrap();
        let mut ctx = Context::new(11);
        for _ in 0..3 {
            let x = Polynomial::parse(&r, "x").unwrap();
            let y = Polynomial::parse(&r, "y").unwrap();
            let mut lin = || x.scale(&ctx.random_rat()).add(&y.scale(&ctx.random_rat())).unwrap();
            let (l1, l2) = (lin(), lin());
            let i = Ideal::new(&r, vec![x.mul(&l1).unwrap(), x.mul(&l2).unwrap()]).unwrap();
            let j = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
            assert!(saturate(&i, &j, &b()).unwrap().is_unit(&b()).unwrap());
        }
    }

    #[test]
    fn eliminations() {
        let r = PolyRing::with_names(&["t", "x", "y", "A", "B"]).unwrap();
        let i = Ideal::parse(&r, &["A - t*x^2", "B - t*x*y"]).unwrap();
        let e = eliminate(&i, &["t"], &b()).unwrap();
        assert_eq!(e.ring().names(), vec!["x", "y", "A", "B"]);
        assert!(same(&e, &["y*A - x*B"]));

        let r = PolyRing::with_names(&["t", "x", "y", "z", "A", "B"]).unwrap();
        let i = Ideal::parse(&r, &["A - t*x*z", "B - t*y*z"]).unwrap();
        assert!(same(&eliminate(&i, &["t"], &b()).unwrap(), &["y*A - x*B"]));

        let r = PolyRing::with_names(&["x", "t"]).unwrap();
        let i = Ideal::parse(&r, &["x - t"]).unwrap();
        assert!(eliminate(&i, &["t"], &b()).unwrap().groebner(&b()).unwrap().is_zero_ideal());
    }

    #[test]
    fn intersection_of_lines() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let j = Ideal::parse(&r, &["y"]).unwrap();
        assert!(same(&intersect(&i, &j, &b()).unwrap(), &["x*y"]));
    }

    #[test]
    fn generic_saturation_by_irrelevant_ideal() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y^2*z", "y^3"]).unwrap();
        let s = saturate_generic(&i, &[0, 1, 2], &mut Context::new(4)).unwrap();
        assert!(same(&s, &["x", "y^2"]));
        let m = Ideal::parse(&r, &["x", "y", "z"]).unwrap();
        assert!(same(&saturate(&i, &m, &b()).unwrap(), &["x", "y^2"]));
    }

    #[test]
    fn principal_saturation() {
        let r = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x*z", "y*z"]).unwrap();
        let g = Polynomial::parse(&r, "x + y").unwrap();
        assert!(same(&saturate_by_element(&i, &g, &b()).unwrap(), &["z"]));
    }
}
