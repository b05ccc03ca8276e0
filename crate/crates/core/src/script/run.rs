//! Evaluates a checked script. Every statement gets its own random stream,
//! so results do not depend on evaluation order or parallelism.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::ast::*;
use super::eval::{eval_poly, eval_series};
use crate::chow::{blowup_pairing, chern_of_twists, residual_contribution, Bundle, ChernSeries, ChowClass};
use crate::cone::{
    bidegrees, check_purity, cone_generators, default_fibers, exceptional_ideal, normal_cone_ideal, projectivize,
    ConePresentation, SchemePresentation,
};
use crate::context::{Budget, Context, Options};
use crate::deformation::{deformation_chart, defvb_family, flat_fiber, flat_limit, FamilyIdeal};
use crate::error::{Error, Result};
use crate::ideal::{eliminate, hilbert_dim_deg, DimDeg, HilbertMode, Ideal};
use crate::poly::{Grading, MonomialOrder, PolyRing, Ring, Variable};
use crate::rational::RatNum;
use crate::segre::{projective_degrees, segre, segre_of_cone};
use crate::virtual_class::{component_contribution, excess_virtual_class, virtual_class, ComponentKind, ObstructionTwists};

/// Settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub redraws: usize,
    pub budget: Budget,
    pub options: Options,
    pub order: MonomialOrder,
    /// Evaluate directives concurrently. Output order is unchanged.
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            redraws: 2,
            budget: Budget::default(),
            options: Options::default(),
            order: MonomialOrder::GrevLex,
            parallel: false,
        }
    }
}

/// What a directive computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Class(ChowClass),
    Series(ChernSeries),
    Number(RatNum),
    Ideal(Ideal),
    Counts(Vec<u64>),
    Values(Vec<RatNum>),
    DimDeg(DimDeg),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultRecord {
    /// Position among the script's `print` statements.
    pub index: usize,
    pub line: usize,
    pub directive: String,
    pub payload: Payload,
    pub warnings: Vec<String>,
    pub seed: u64,
    pub redraws: usize,
    pub elapsed: Duration,
}

/// An engine error, with the statement that raised it and the records
/// produced before it.
#[derive(Debug, Clone)]
pub struct RunError {
    pub line: usize,
    pub statement: String,
    pub error: Error,
    pub completed: Vec<ResultRecord>,
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error at line {} in `{}`: {}", self.line, self.statement, self.error)
    }
}

impl std::error::Error for RunError {}

#[derive(Debug)]
enum Value {
    Scheme(SchemePresentation),
    Twists(Vec<i64>),
    Cone(ConePresentation),
    Family { family: FamilyIdeal, cone: Option<ConePresentation> },
    Bundle(Bundle),
    Class(ChowClass),
}

type Env = HashMap<String, Arc<Value>>;

struct AmbientSpace {
    kind: AmbientKind,
    ring: Ring,
    dim: usize,
}

fn get<'a>(env: &'a Env, name: &str) -> Result<&'a Value> {
    env.get(name).map(|v| v.as_ref()).ok_or_else(|| Error::Invalid(format!("`{}` is not bound", name)))
}

fn scheme<'a>(env: &'a Env, name: &str) -> Result<&'a SchemePresentation> {
    match get(env, name)? {
        Value::Scheme(s) => Ok(s),
        _ => Err(Error::Invalid(format!("`{}` is not a scheme", name))),
    }
}

fn cone<'a>(env: &'a Env, name: &str) -> Result<&'a ConePresentation> {
    match get(env, name)? {
        Value::Cone(c) => Ok(c),
        _ => Err(Error::Invalid(format!("`{}` is not a cone", name))),
    }
}

fn family<'a>(env: &'a Env, name: &str) -> Result<(&'a FamilyIdeal, Option<&'a ConePresentation>)> {
    match get(env, name)? {
        Value::Family { family, cone } => Ok((family, cone.as_ref())),
        _ => Err(Error::Invalid(format!("`{}` is not a family", name))),
    }
}

fn bundle<'a>(env: &'a Env, name: &str) -> Result<&'a Bundle> {
    match get(env, name)? {
        Value::Bundle(b) => Ok(b),
        _ => Err(Error::Invalid(format!("`{}` is not a bundle", name))),
    }
}

fn class<'a>(env: &'a Env, name: &str) -> Result<&'a ChowClass> {
    match get(env, name)? {
        Value::Class(c) => Ok(c),
        _ => Err(Error::Invalid(format!("`{}` is not a class", name))),
    }
}

fn twists(env: &Env, t: &TwistsRef) -> Result<ObstructionTwists> {
    let v = match t {
        TwistsRef::Inline(v) => v.clone(),
        TwistsRef::Named(n) => match get(env, n)? {
            Value::Twists(v) => v.clone(),
            _ => return Err(Error::Invalid(format!("`{}` is not a list of twists", n))),
        },
    };
    ObstructionTwists::new(v)
}

fn polys(gens: &[Expr], ring: &Ring) -> Result<Ideal> {
    Ideal::new(ring, gens.iter().map(|g| eval_poly(g, ring)).collect::<Result<Vec<_>>>()?)
}

fn extend(ring: &Ring, param: Option<&str>, fibers: &[String]) -> Result<Ring> {
    let mut extra: Vec<Variable> = param.iter().map(|p| Variable { name: p.to_string(), grading: Grading::Parameter }).collect();
    extra.extend(fibers.iter().map(|f| Variable { name: f.clone(), grading: Grading::Fiber }));
    ring.extended(&extra)
}

fn series(e: &Expr, m: usize) -> Result<ChernSeries> {
    ChernSeries::new(m, eval_series(e, m)?)
}

fn canonical(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    Ok(ideal.groebner(budget)?.into_ideal())
}

fn bind(value: &Binding, env: &Env, amb: &AmbientSpace, ctx: &mut Context) -> Result<Value> {
    Ok(match value {
        Binding::Scheme { gens, inside } => match inside {
            None => Value::Scheme(SchemePresentation::new(amb.kind, polys(gens, &amb.ring)?, Ideal::zero(&amb.ring))?),
            Some(y) => match get(env, y)? {
                Value::Scheme(y) => {
                    Value::Scheme(SchemePresentation::new(y.kind(), polys(gens, y.ring())?, y.full_ideal())?)
                }
                Value::Family { family, .. } => {
                    let ring = family.ring();
                    Value::Scheme(SchemePresentation::new(AmbientKind::Affine, polys(gens, ring)?, family.ideal().clone())?)
                }
                _ => return Err(Error::Invalid(format!("`{}` is not a scheme or family", y))),
            },
        },
        Binding::Twists(v) => Value::Twists(v.clone()),
        Binding::Cone { scheme: x, fibers } => {
            let x = scheme(env, x)?;
            let (gens, _) = cone_generators(x)?;
            Value::Cone(normal_cone_ideal(x, &gens, fibers, ctx)?)
        }
        Binding::Chart { scheme: x, param, fibers } => {
            let x = scheme(env, x)?;
            Value::Family { family: deformation_chart(x, &x.generators(), param, fibers, &ctx.budget)?, cone: None }
        }
        Binding::Family { gens, param, fibers } => {
            let ring = extend(&amb.ring, Some(param), fibers)?;
            Value::Family { family: FamilyIdeal::new(polys(gens, &ring)?, param)?, cone: None }
        }
        Binding::Defvb { cone: c, sub, param } => {
            let c = cone(env, c)?;
            Value::Family { family: defvb_family(c, sub, param)?, cone: Some(c.clone()) }
        }
        Binding::Fiber { family: f, at } => {
            let (fam, c) = family(env, f)?;
            let c = c.ok_or_else(|| Error::Invalid(format!("`{}` does not deform a cone", f)))?;
            let ideal = flat_fiber(fam, at, ctx)?;
            let mut fiber_vars = c.fiber_vars.clone();
            let ring = ideal.ring().clone();
            fiber_vars.extend(
                (0..ring.nvars())
                    .filter(|&i| ring.grading(i) == Grading::Fiber && !c.fiber_vars.iter().any(|v| v == ring.name(i)))
                    .map(|i| ring.name(i).to_string()),
            );
            Value::Cone(ConePresentation { base: c.base.clone(), fiber_vars, twist: c.twist, ideal })
        }
        Binding::Bundle { rank, series: s } => Value::Bundle(Bundle::new(*rank, series(s, amb.dim)?)),
        Binding::Class(e) => Value::Class(ChowClass::new(amb.dim, eval_series(e, amb.dim)?)?),
    })
}

fn scheme_cone(x: &SchemePresentation, ctx: &mut Context) -> Result<ConePresentation> {
    let (gens, _) = cone_generators(x)?;
    let fibers = default_fibers(x.ring(), gens.len());
    normal_cone_ideal(x, &gens, &fibers, ctx)
}

fn target_ideal(env: &Env, name: &str) -> Result<Ideal> {
    Ok(match get(env, name)? {
        Value::Scheme(s) => s.full_ideal(),
        Value::Cone(c) => c.ideal.clone(),
        Value::Family { family, .. } => family.ideal().clone(),
        _ => return Err(Error::Invalid(format!("`{}` has no ideal", name))),
    })
}

fn direct(d: &Directive, env: &Env, dim: usize, ctx: &mut Context) -> Result<(Payload, Vec<String>)> {
    let budget = ctx.budget;
    let mut warnings = Vec::new();
    let payload = match d {
        Directive::Segre { target, inside } => match (get(env, target)?, inside) {
            (Value::Cone(c), _) => Payload::Class(segre_of_cone(c, ctx)?),
            (Value::Scheme(x), None) => Payload::Class(segre(x, ctx)?),
            (Value::Scheme(x), Some(y)) => {
                let x = x.with_relations(&scheme(env, y)?.full_ideal())?;
                Payload::Class(segre(&x, ctx)?)
            }
            _ => return Err(Error::Invalid(format!("`{}` is not a scheme or cone", target))),
        },
        Directive::Vclass { scheme: x, twists: t } => {
            let v = virtual_class(scheme(env, x)?, &twists(env, t)?, ctx)?;
            warnings = v.warnings;
            Payload::Class(v.class)
        }
        Directive::Excess { normal, twists: t, class: c } => {
            Payload::Class(excess_virtual_class(bundle(env, normal)?, &twists(env, t)?, class(env, c)?)?)
        }
        Directive::Contribution { twists: t, component } => {
            let kind = match component {
                Component::Point(m) => ComponentKind::PointFiber { multiplicity: *m },
                Component::Subbundle { bundle: b, support } => {
                    ComponentKind::Subbundle { bundle: bundle(env, b)?.clone(), support: class(env, support)?.clone() }
                }
            };
            Payload::Class(component_contribution(&kind, &twists(env, t)?, dim)?)
        }
        Directive::Degrees(x) => Payload::Counts(projective_degrees(scheme(env, x)?, ctx)?),
        Directive::Bidegrees(x) => {
            let w = match get(env, x)? {
                Value::Scheme(x) => {
                    let (gens, _) = cone_generators(x)?;
                    exceptional_ideal(x, &gens, &default_fibers(x.ring(), gens.len()), ctx)?
                }
                Value::Cone(c) => projectivize(c, ctx)?,
                _ => return Err(Error::Invalid(format!("`{}` is not a scheme or cone", x))),
            };
            Payload::Counts(bidegrees(&w, ctx)?)
        }
        Directive::Cone(x) => match get(env, x)? {
            Value::Scheme(x) => Payload::Ideal(scheme_cone(x, ctx)?.ideal),
            Value::Cone(c) => Payload::Ideal(canonical(&c.ideal, &budget)?),
            _ => return Err(Error::Invalid(format!("`{}` is not a scheme or cone", x))),
        },
        Directive::Dimdeg(x) => {
            let x = scheme(env, x)?;
            let mode = match x.kind() {
                AmbientKind::Projective => HilbertMode::Projective,
                AmbientKind::Affine => HilbertMode::Affine,
            };
            Payload::DimDeg(hilbert_dim_deg(&x.full_ideal(), mode, &budget)?)
        }
        Directive::Purity(x) => {
            let c = scheme_cone(scheme(env, x)?, ctx)?;
            match check_purity(&c, &budget)? {
                None => Payload::Text("pure".into()),
                Some(w) => {
                    warnings.push(w);
                    Payload::Text("impure".into())
                }
            }
        }
        Directive::Flatlimit(f) => Payload::Ideal(canonical(&flat_limit(family(env, f)?.0, ctx)?, &budget)?),
        Directive::Family(f) => Payload::Ideal(canonical(family(env, f)?.0.ideal(), &budget)?),
        Directive::Eliminate { target, vars } => {
            let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            Payload::Ideal(canonical(&eliminate(&target_ideal(env, target)?, &names, &budget)?, &budget)?)
        }
        Directive::Residual { dim, normals, ambient, tangent } => {
            let normals = normals.iter().map(|e| series(e, *dim)).collect::<Result<Vec<_>>>()?;
            Payload::Number(residual_contribution(
                &normals,
                &series(ambient, *dim)?,
                &series(tangent, *dim)?,
                &ChowClass::fundamental(*dim),
            )?)
        }
        Directive::Chern(t) => Payload::Series(chern_of_twists(twists(env, t)?.twists(), dim)),
        Directive::Blowup { m, k } => Payload::Values(blowup_pairing(*m, *k)?.table),
    };
    Ok((payload, warnings))
}

struct Job {
    stream: u64,
    line: usize,
    directive: Directive,
    env: Env,
}

struct Walk {
    jobs: Vec<Job>,
    bound: Vec<(String, Arc<Value>)>,
    dim: usize,
    failure: Option<(usize, String, Error)>,
}

fn base_context(config: &RunConfig) -> Context {
    Context::new(config.seed).with_redraws(config.redraws).with_budget(config.budget).with_options(config.options)
}

/// Evaluate every binding in order, stopping at the first failure, and
/// collect the directives with the environment each one sees.
fn walk(script: &Script, config: &RunConfig) -> Walk {
    let base = base_context(config);
    let mut env = Env::new();
    let mut bound = Vec::new();
    let mut amb: Option<AmbientSpace> = None;
    let mut jobs = Vec::new();
    let mut failure = None;

    for (i, st) in script.statements.iter().enumerate() {
        let line = st.span.line;
        match &st.node {
            Statement::Ambient(a) => {
                let vars = a.vars.iter().map(|v| Variable { name: v.clone(), grading: Grading::Base }).collect();
                match PolyRing::new(vars, config.order.clone()) {
                    Ok(ring) => amb = Some(AmbientSpace { kind: a.kind, ring, dim: a.dim }),
                    Err(e) => {
                        failure = Some((line, st.node.to_string(), e));
                        break;
                    }
                }
            }
            Statement::Let { name, value } => {
                let r = match &amb {
                    Some(amb) => bind(value, &env, amb, &mut base.fork(i as u64)),
                    None => Err(Error::Invalid("ambient not declared".into())),
                };
                match r {
                    Ok(v) => {
                        let v = Arc::new(v);
                        env.insert(name.clone(), v.clone());
                        bound.push((name.clone(), v));
                    }
                    Err(e) => {
                        failure = Some((line, st.node.to_string(), e));
                        break;
                    }
                }
            }
            Statement::Print(d) => jobs.push(Job { stream: i as u64, line, directive: d.clone(), env: env.clone() }),
        }
    }
    Walk { jobs, bound, dim: amb.as_ref().map_or(0, |a| a.dim), failure }
}

/// The schemes a script binds, in binding order.
pub fn scheme_bindings(script: &Script, config: &RunConfig) -> std::result::Result<Vec<(String, SchemePresentation)>, RunError> {
    let w = walk(script, config);
    if let Some((line, statement, error)) = w.failure {
        return Err(RunError { line, statement, error, completed: Vec::new() });
    }
    Ok(w.bound
        .into_iter()
        .filter_map(|(n, v)| match v.as_ref() {
            Value::Scheme(s) => Some((n, s.clone())),
            _ => None,
        })
        .collect())
}

/// Run a parsed script.
pub fn run(script: &Script, config: &RunConfig) -> std::result::Result<Vec<ResultRecord>, RunError> {
    let base = base_context(config);
    let Walk { jobs, dim, failure, .. } = walk(script, config);
    let exec = |(index, job): (usize, &Job)| {
        let mut ctx = base.fork(job.stream);
        let start = Instant::now();
        let out = direct(&job.directive, &job.env, dim, &mut ctx);
        let elapsed = start.elapsed();
        out.map(|(payload, warnings)| ResultRecord {
            index,
            line: job.line,
            directive: job.directive.to_string(),
            payload,
            warnings,
            seed: config.seed,
            redraws: config.redraws,
            elapsed,
        })
    };
    let results: Vec<Result<ResultRecord>> = if config.parallel {
        jobs.par_iter().enumerate().map(exec).collect()
    } else {
        let mut out = Vec::new();
        for item in jobs.iter().enumerate() {
            let r = exec(item);
            let stop = r.is_err();
            out.push(r);
            if stop {
                break;
            }
        }
        out
    };

    let mut completed = Vec::new();
    for (r, job) in results.into_iter().zip(&jobs) {
        match r {
            Ok(rec) => completed.push(rec),
            Err(error) => {
                return Err(RunError { line: job.line, statement: format!("print {}", job.directive), error, completed });
            }
        }
    }
    match failure {
        Some((line, statement, error)) => Err(RunError { line, statement, error, completed }),
        None => Ok(completed),
    }
}
