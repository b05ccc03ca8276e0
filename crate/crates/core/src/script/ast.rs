//! Script syntax tree. Equality ignores source positions.

use std::fmt;

use super::lexer::Span;
pub use crate::cone::AmbientKind;
use crate::rational::{format_rat, RatNum};

#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(RatNum),
    Var(String),
    /// Signed summands; `true` marks subtraction.
    Sum(Vec<(bool, Expr)>),
    Prod(Vec<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ambient {
    pub kind: AmbientKind,
    pub dim: usize,
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TwistsRef {
    Named(String),
    Inline(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Binding {
    Scheme { gens: Vec<Expr>, inside: Option<String> },
    Twists(Vec<i64>),
    Cone { scheme: String, fibers: Vec<String> },
    Chart { scheme: String, param: String, fibers: Vec<String> },
    Family { gens: Vec<Expr>, param: String, fibers: Vec<String> },
    Defvb { cone: String, sub: Vec<String>, param: String },
    Fiber { family: String, at: RatNum },
    Bundle { rank: usize, series: Expr },
    Class(Expr),
}

impl Binding {
    pub fn kind(&self) -> BindingKind {
        match self {
            Binding::Scheme { .. } => BindingKind::Scheme,
            Binding::Twists(_) => BindingKind::Twists,
            Binding::Cone { .. } | Binding::Fiber { .. } => BindingKind::Cone,
            Binding::Chart { .. } | Binding::Family { .. } | Binding::Defvb { .. } => BindingKind::Family,
            Binding::Bundle { .. } => BindingKind::Bundle,
            Binding::Class(_) => BindingKind::Class,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindingKind {
    Scheme,
    Twists,
    Cone,
    Family,
    Bundle,
    Class,
}

impl fmt::Display for BindingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BindingKind::Scheme => "scheme",
            BindingKind::Twists => "twists",
            BindingKind::Cone => "cone",
            BindingKind::Family => "family",
            BindingKind::Bundle => "bundle",
            BindingKind::Class => "class",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    Point(u64),
    Subbundle { bundle: String, support: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Directive {
    Segre { target: String, inside: Option<String> },
    Vclass { scheme: String, twists: TwistsRef },
    Excess { normal: String, twists: TwistsRef, class: String },
    Contribution { twists: TwistsRef, component: Component },
    Degrees(String),
    Bidegrees(String),
    Cone(String),
    Dimdeg(String),
    Purity(String),
    Flatlimit(String),
    Family(String),
    Eliminate { target: String, vars: Vec<String> },
    Residual { dim: usize, normals: Vec<Expr>, ambient: Expr, tangent: Expr },
    Chern(TwistsRef),
    Blowup { m: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Ambient(Ambient),
    Let { name: String, value: Binding },
    Print(Directive),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Script {
    pub statements: Vec<Spanned<Statement>>,
}

impl Script {
    pub fn ambient(&self) -> Option<&Ambient> {
        self.statements.iter().find_map(|s| match &s.node {
            Statement::Ambient(a) => Some(a),
            _ => None,
        })
    }

    pub fn directives(&self) -> impl Iterator<Item = &Spanned<Statement>> {
        self.statements.iter().filter(|s| matches!(s.node, Statement::Print(_)))
    }
}

// Printing. The output re-parses to an equal tree.

fn write_list<T>(f: &mut fmt::Formatter<'_>, items: &[T], mut each: impl FnMut(&mut fmt::Formatter<'_>, &T) -> fmt::Result) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        each(f, x)?;
    }
    Ok(())
}

fn names(f: &mut fmt::Formatter<'_>, v: &[String]) -> fmt::Result {
    write!(f, "[")?;
    write_list(f, v, |f, s| write!(f, "{}", s))?;
    write!(f, "]")
}

impl Expr {
    fn write_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(_) | Expr::Prod(_) => write!(f, "({})", self),
            _ => write!(f, "{}", self),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{}", format_rat(r)),
            Expr::Var(v) => write!(f, "{}", v),
            Expr::Sum(terms) => {
                for (i, (neg, t)) in terms.iter().enumerate() {
                    match (i, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    match t {
                        Expr::Sum(_) => write!(f, "({})", t)?,
                        _ => write!(f, "{}", t)?,
                    }
                }
                Ok(())
            }
            Expr::Prod(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    x.write_factor(f)?;
                }
                Ok(())
            }
            Expr::Pow(b, e) => {
                match **b {
                    Expr::Var(_) => write!(f, "{}", b)?,
                    Expr::Num(ref r) if r.is_integer() => write!(f, "{}", b)?,
                    _ => write!(f, "({})", b)?,
                }
                write!(f, "^{}", e)
            }
        }
    }
}

fn twists_ref(f: &mut fmt::Formatter<'_>, t: &TwistsRef) -> fmt::Result {
    match t {
        TwistsRef::Named(n) => write!(f, "{}", n),
        TwistsRef::Inline(v) => {
            write!(f, "twists(")?;
            write_list(f, v, |f, a| write!(f, "{}", a))?;
            write!(f, ")")
        }
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Scheme { gens, inside } => {
                write!(f, "scheme (")?;
                write_list(f, gens, |f, g| write!(f, "{}", g))?;
                write!(f, ")")?;
                if let Some(y) = inside {
                    write!(f, " in {}", y)?;
                }
                Ok(())
            }
            Binding::Twists(v) => twists_ref(f, &TwistsRef::Inline(v.clone())),
            Binding::Cone { scheme, fibers } => {
                write!(f, "cone({}) fibers ", scheme)?;
                names(f, fibers)
            }
            Binding::Chart { scheme, param, fibers } => {
                write!(f, "chart({}) param {} fibers ", scheme, param)?;
                names(f, fibers)
            }
            Binding::Family { gens, param, fibers } => {
                write!(f, "family (")?;
                write_list(f, gens, |f, g| write!(f, "{}", g))?;
                write!(f, ") param {}", param)?;
                if !fibers.is_empty() {
                    write!(f, " fibers ")?;
                    names(f, fibers)?;
                }
                Ok(())
            }
            Binding::Defvb { cone, sub, param } => {
                write!(f, "defvb({}) sub ", cone)?;
                names(f, sub)?;
                write!(f, " param {}", param)
            }
            Binding::Fiber { family, at } => {
                let s = format_rat(at);
                write!(f, "fiber({}, {})", family, s)
            }
            Binding::Bundle { rank, series } => write!(f, "bundle({}, {})", rank, series),
            Binding::Class(e) => write!(f, "class({})", e),
        }
    }
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Directive::Segre { target, inside } => match inside {
                Some(y) => write!(f, "segre({} in {})", target, y),
                None => write!(f, "segre({})", target),
            },
            Directive::Vclass { scheme, twists } => {
                write!(f, "vclass({}, ", scheme)?;
                twists_ref(f, twists)?;
                write!(f, ")")
            }
            Directive::Excess { normal, twists, class } => {
                write!(f, "excess({}, ", normal)?;
                twists_ref(f, twists)?;
                write!(f, ", {})", class)
            }
            Directive::Contribution { twists, component } => {
                write!(f, "contribution(")?;
                twists_ref(f, twists)?;
                match component {
                    Component::Point(m) => write!(f, ", point({}))", m),
                    Component::Subbundle { bundle, support } => write!(f, ", subbundle({}, {}))", bundle, support),
                }
            }
            Directive::Degrees(x) => write!(f, "degrees({})", x),
            Directive::Bidegrees(x) => write!(f, "bidegrees({})", x),
            Directive::Cone(x) => write!(f, "cone({})", x),
            Directive::Dimdeg(x) => write!(f, "dimdeg({})", x),
            Directive::Purity(x) => write!(f, "purity({})", x),
            Directive::Flatlimit(x) => write!(f, "flatlimit({})", x),
            Directive::Family(x) => write!(f, "family({})", x),
            Directive::Eliminate { target, vars } => {
                write!(f, "eliminate({}, ", target)?;
                names(f, vars)?;
                write!(f, ")")
            }
            Directive::Residual { dim, normals, ambient, tangent } => {
                write!(f, "residual(P{}, [", dim)?;
                write_list(f, normals, |f, e| write!(f, "{}", e))?;
                write!(f, "], {}, {})", ambient, tangent)
            }
            Directive::Chern(t) => {
                write!(f, "chern(")?;
                twists_ref(f, t)?;
                write!(f, ")")
            }
            Directive::Blowup { m, k } => write!(f, "blowup({}, {})", m, k),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Ambient(a) => {
                let p = match a.kind {
                    AmbientKind::Projective => 'P',
                    AmbientKind::Affine => 'A',
                };
                write!(f, "ambient {}{} ", p, a.dim)?;
                names(f, &a.vars)?;
                write!(f, ";")
            }
            Statement::Let { name, value } => write!(f, "let {} = {};", name, value),
            Statement::Print(d) => write!(f, "print {};", d),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.node)?;
        }
        Ok(())
    }
}
