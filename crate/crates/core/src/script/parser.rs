use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::ast::*;
use super::lexer::{tokenize, Span, Tok};
use crate::rational::RatNum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Binding,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: Span,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Binding => "binding error",
        };
        write!(f, "{} at {}: {}", k, self.span, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

pub(crate) struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

fn syntax(span: Span, message: impl Into<String>) -> ParseError {
    ParseError { kind: ParseErrorKind::Syntax, span, message: message.into() }
}

fn binding(span: Span, message: impl Into<String>) -> ParseError {
    ParseError { kind: ParseErrorKind::Binding, span, message: message.into() }
}

impl Parser {
    pub(crate) fn new(src: &str) -> PResult<Self> {
        let toks = tokenize(src).map_err(|e| ParseError { kind: ParseErrorKind::Lexical, span: e.span, message: e.message })?;
        Ok(Parser { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.span(), format!("expected {}, found {}", tok, self.peek())))
        }
    }

    fn expect_word(&mut self, word: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == word => {
                self.bump();
                Ok(())
            }
            t => Err(syntax(self.span(), format!("expected `{}`, found {}", word, t))),
        }
    }

    fn at_word(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == word)
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => Err(syntax(self.span(), format!("expected identifier, found {}", t))),
        }
    }

    fn int(&mut self) -> PResult<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            t => Err(syntax(self.span(), format!("expected integer, found {}", t))),
        }
    }

    fn small(&mut self) -> PResult<usize> {
        let sp = self.span();
        self.int()?.to_usize().ok_or_else(|| syntax(sp, "integer too large"))
    }

    fn signed_int(&mut self) -> PResult<i64> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let sp = self.span();
        let n = self.int()?.to_i64().ok_or_else(|| syntax(sp, "integer too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> PResult<RatNum> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let n = self.int()?;
        let r = if *self.peek() == Tok::Slash {
            self.bump();
            let sp = self.span();
            let d = self.int()?;
            if d.is_zero() {
                return Err(syntax(sp, "zero denominator"));
            }
            RatNum::new(n, d)
        } else {
            RatNum::from_integer(n)
        };
        Ok(if neg { -r } else { r })
    }

    fn name_list(&mut self) -> PResult<Vec<String>> {
        self.expect(Tok::LBracket)?;
        let mut v = Vec::new();
        if *self.peek() != Tok::RBracket {
            v.push(self.ident()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                v.push(self.ident()?);
            }
        }
        self.expect(Tok::RBracket)?;
        Ok(v)
    }

    // expr := [+|-] term (('+'|'-') term)*
    pub(crate) fn expr(&mut self) -> PResult<Expr> {
        let mut terms = Vec::new();
        let mut neg = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            terms.push((neg, self.term()?));
            neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        if terms.len() == 1 && !terms[0].0 {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(Expr::Sum(terms))
        }
    }

    // term := factor (['*'] factor)*
    fn term(&mut self) -> PResult<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Tok::Ident(_) | Tok::Int(_) | Tok::LParen => factors.push(self.factor()?),
                _ => break,
            }
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(Expr::Prod(factors))
        }
    }

    // factor := atom ['^' ['-'] INT]
    fn factor(&mut self) -> PResult<Expr> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let e = self.signed_int()?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Num(self.rational()?)),
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Var(s))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => Err(syntax(self.span(), format!("expected number, variable or `(`, found {}", t))),
        }
    }

    fn expr_list(&mut self) -> PResult<Vec<Expr>> {
        self.expect(Tok::LParen)?;
        let mut v = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            v.push(self.expr()?);
        }
        self.expect(Tok::RParen)?;
        Ok(v)
    }

    pub(crate) fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub(crate) fn expect_eof(&mut self) -> PResult<()> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(syntax(self.span(), format!("expected end of input, found {}", self.peek())))
        }
    }

    fn twists_body(&mut self) -> PResult<Vec<i64>> {
        self.expect(Tok::LParen)?;
        let mut v = Vec::new();
        if *self.peek() != Tok::RParen {
            v.push(self.signed_int()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                v.push(self.signed_int()?);
            }
        }
        self.expect(Tok::RParen)?;
        Ok(v)
    }

    fn twists_ref(&mut self) -> PResult<TwistsRef> {
        if self.at_word("twists") && self.toks.get(self.pos + 1).map(|t| &t.0) == Some(&Tok::LParen) {
            self.bump();
            Ok(TwistsRef::Inline(self.twists_body()?))
        } else {
            Ok(TwistsRef::Named(self.ident()?))
        }
    }

    fn paren_ident(&mut self) -> PResult<String> {
        self.expect(Tok::LParen)?;
        let s = self.ident()?;
        self.expect(Tok::RParen)?;
        Ok(s)
    }

    fn binding(&mut self) -> PResult<Binding> {
        let sp = self.span();
        let word = self.ident()?;
        Ok(match word.as_str() {
            "scheme" => {
                let gens = self.expr_list()?;
                let inside = if self.at_word("in") {
                    self.bump();
                    Some(self.ident()?)
                } else {
                    None
                };
                Binding::Scheme { gens, inside }
            }
            "twists" => Binding::Twists(self.twists_body()?),
            "cone" => {
                let scheme = self.paren_ident()?;
                self.expect_word("fibers")?;
                Binding::Cone { scheme, fibers: self.name_list()? }
            }
            "chart" => {
                let scheme = self.paren_ident()?;
                self.expect_word("param")?;
                let param = self.ident()?;
                self.expect_word("fibers")?;
                Binding::Chart { scheme, param, fibers: self.name_list()? }
            }
            "family" => {
                let gens = self.expr_list()?;
                self.expect_word("param")?;
                let param = self.ident()?;
                let fibers = if self.at_word("fibers") {
                    self.bump();
                    self.name_list()?
                } else {
                    Vec::new()
                };
                Binding::Family { gens, param, fibers }
            }
            "defvb" => {
                let cone = self.paren_ident()?;
                self.expect_word("sub")?;
                let sub = self.name_list()?;
                self.expect_word("param")?;
                Binding::Defvb { cone, sub, param: self.ident()? }
            }
            "fiber" => {
                self.expect(Tok::LParen)?;
                let family = self.ident()?;
                self.expect(Tok::Comma)?;
                let at = self.rational()?;
                self.expect(Tok::RParen)?;
                Binding::Fiber { family, at }
            }
            "bundle" => {
                self.expect(Tok::LParen)?;
                let rank = self.small()?;
                self.expect(Tok::Comma)?;
                let series = self.expr()?;
                self.expect(Tok::RParen)?;
                Binding::Bundle { rank, series }
            }
            "class" => {
                self.expect(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Binding::Class(e)
            }
            w => {
                return Err(syntax(
                    sp,
                    format!("expected one of scheme, twists, cone, chart, family, defvb, fiber, bundle, class; found `{}`", w),
                ))
            }
        })
    }

    fn directive(&mut self) -> PResult<Directive> {
        let sp = self.span();
        let word = self.ident()?;
        let d = match word.as_str() {
            "segre" => {
                self.expect(Tok::LParen)?;
                let target = self.ident()?;
                let inside = if self.at_word("in") {
                    self.bump();
                    Some(self.ident()?)
                } else {
                    None
                };
                self.expect(Tok::RParen)?;
                Directive::Segre { target, inside }
            }
            "vclass" => {
                self.expect(Tok::LParen)?;
                let scheme = self.ident()?;
                self.expect(Tok::Comma)?;
                let twists = self.twists_ref()?;
                self.expect(Tok::RParen)?;
                Directive::Vclass { scheme, twists }
            }
            "excess" => {
                self.expect(Tok::LParen)?;
                let normal = self.ident()?;
                self.expect(Tok::Comma)?;
                let twists = self.twists_ref()?;
                self.expect(Tok::Comma)?;
                let class = self.ident()?;
                self.expect(Tok::RParen)?;
                Directive::Excess { normal, twists, class }
            }
            "contribution" => {
                self.expect(Tok::LParen)?;
                let twists = self.twists_ref()?;
                self.expect(Tok::Comma)?;
                let csp = self.span();
                let component = match self.ident()?.as_str() {
                    "point" => {
                        self.expect(Tok::LParen)?;
                        let m = self.int()?.to_u64().ok_or_else(|| syntax(csp, "multiplicity out of range"))?;
                        self.expect(Tok::RParen)?;
                        Component::Point(m)
                    }
                    "subbundle" => {
                        self.expect(Tok::LParen)?;
                        let bundle = self.ident()?;
                        self.expect(Tok::Comma)?;
                        let support = self.ident()?;
                        self.expect(Tok::RParen)?;
                        Component::Subbundle { bundle, support }
                    }
                    w => return Err(syntax(csp, format!("expected `point` or `subbundle`, found `{}`", w))),
                };
                self.expect(Tok::RParen)?;
                Directive::Contribution { twists, component }
            }
            "degrees" => Directive::Degrees(self.paren_ident()?),
            "bidegrees" => Directive::Bidegrees(self.paren_ident()?),
            "cone" => Directive::Cone(self.paren_ident()?),
            "dimdeg" => Directive::Dimdeg(self.paren_ident()?),
            "purity" => Directive::Purity(self.paren_ident()?),
            "flatlimit" => Directive::Flatlimit(self.paren_ident()?),
            "family" => Directive::Family(self.paren_ident()?),
            "eliminate" => {
                self.expect(Tok::LParen)?;
                let target = self.ident()?;
                self.expect(Tok::Comma)?;
                let vars = self.name_list()?;
                self.expect(Tok::RParen)?;
                Directive::Eliminate { target, vars }
            }
            "residual" => {
                self.expect(Tok::LParen)?;
                let zsp = self.span();
                let z = self.ident()?;
                let dim = z
                    .strip_prefix('P')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| syntax(zsp, format!("expected `P<n>`, found `{}`", z)))?;
                self.expect(Tok::Comma)?;
                self.expect(Tok::LBracket)?;
                let mut normals = Vec::new();
                if *self.peek() != Tok::RBracket {
                    normals.push(self.expr()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        normals.push(self.expr()?);
                    }
                }
                self.expect(Tok::RBracket)?;
                self.expect(Tok::Comma)?;
                let ambient = self.expr()?;
                self.expect(Tok::Comma)?;
                let tangent = self.expr()?;
                self.expect(Tok::RParen)?;
                Directive::Residual { dim, normals, ambient, tangent }
            }
            "chern" => {
                self.expect(Tok::LParen)?;
                let t = self.twists_ref()?;
                self.expect(Tok::RParen)?;
                Directive::Chern(t)
            }
            "blowup" => {
                self.expect(Tok::LParen)?;
                let m = self.small()?;
                self.expect(Tok::Comma)?;
                let k = self.small()?;
                self.expect(Tok::RParen)?;
                Directive::Blowup { m, k }
            }
            w => {
                return Err(syntax(
                    sp,
                    format!(
                        "expected a directive (segre, vclass, excess, contribution, degrees, bidegrees, cone, dimdeg, purity, flatlimit, family, eliminate, residual, chern, blowup); found `{}`",
                        w
                    ),
                ))
            }
        };
        Ok(d)
    }

    fn statement(&mut self) -> PResult<Spanned<Statement>> {
        let span = self.span();
        let word = self.ident()?;
        let node = match word.as_str() {
            "ambient" => {
                let ksp = self.span();
                let k = self.ident()?;
                let (kind, rest) = match k.split_at(1) {
                    ("P", r) => (AmbientKind::Projective, r),
                    ("A", r) => (AmbientKind::Affine, r),
                    _ => return Err(syntax(ksp, format!("expected `P<n>` or `A<n>`, found `{}`", k))),
                };
                let dim = rest.parse::<usize>().map_err(|_| syntax(ksp, format!("expected `P<n>` or `A<n>`, found `{}`", k)))?;
                let vsp = self.span();
                let vars = self.name_list()?;
                let expected = match kind {
                    AmbientKind::Projective => dim + 1,
                    AmbientKind::Affine => dim,
                };
                if vars.len() != expected {
                    return Err(syntax(vsp, format!("{} needs {} variables, found {}", k, expected, vars.len())));
                }
                Statement::Ambient(Ambient { kind, dim, vars })
            }
            "let" => {
                let name = self.ident()?;
                self.expect(Tok::Eq)?;
                Statement::Let { name, value: self.binding()? }
            }
            "print" => Statement::Print(self.directive()?),
            w => return Err(syntax(span, format!("expected `ambient`, `let` or `print`, found `{}`", w))),
        };
        self.expect(Tok::Semi)?;
        Ok(Spanned { node, span })
    }
}

/// Parse a script and check its bindings.
pub fn parse(src: &str) -> PResult<Script> {
    let mut p = Parser::new(src)?;
    let mut statements = Vec::new();
    while !p.at_eof() {
        statements.push(p.statement()?);
    }
    let script = Script { statements };
    check(&script)?;
    Ok(script)
}

/// Parse a single expression.
pub fn parse_expr(src: &str) -> PResult<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

struct Entry {
    kind: BindingKind,
    vars: Vec<String>,
    /// Fiber variables of a cone, or of the cone a family deforms.
    fibers: Vec<String>,
    /// Families from `defvb` have cone fibers.
    cone_family: bool,
}

fn expr_vars(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone())
            }
        }
        Expr::Sum(ts) => ts.iter().for_each(|(_, t)| expr_vars(t, out)),
        Expr::Prod(fs) => fs.iter().for_each(|t| expr_vars(t, out)),
        Expr::Pow(b, _) => expr_vars(b, out),
    }
}

fn check_series(e: &Expr, span: Span) -> PResult<()> {
    let mut vs = Vec::new();
    expr_vars(e, &mut vs);
    if vs.len() > 1 {
        return Err(binding(span, format!("a series uses one class symbol, found {}", vs.join(", "))));
    }
    Ok(())
}

fn check_poly(e: &Expr, vars: &[String], span: Span) -> PResult<()> {
    let mut vs = Vec::new();
    expr_vars(e, &mut vs);
    for v in vs {
        if !vars.contains(&v) {
            return Err(binding(span, format!("unknown variable `{}`", v)));
        }
    }
    if has_negative_power(e) {
        return Err(binding(span, "negative exponent in a polynomial"));
    }
    Ok(())
}

fn has_negative_power(e: &Expr) -> bool {
    match e {
        Expr::Num(_) | Expr::Var(_) => false,
        Expr::Sum(ts) => ts.iter().any(|(_, t)| has_negative_power(t)),
        Expr::Prod(fs) => fs.iter().any(has_negative_power),
        Expr::Pow(b, k) => *k < 0 || has_negative_power(b),
    }
}

fn check(script: &Script) -> PResult<()> {
    let mut ambient: Option<&Ambient> = None;
    let mut env: HashMap<&str, Entry> = HashMap::new();
    for st in &script.statements {
        let span = st.span;
        let need_ambient = || -> PResult<&Ambient> { ambient.ok_or_else(|| binding(span, "ambient not declared")) };
        let lookup = |env: &HashMap<&str, Entry>, name: &str, want: &[BindingKind]| -> PResult<(BindingKind, Vec<String>)> {
            match env.get(name) {
                None => Err(binding(span, format!("`{}` is not bound", name))),
                Some(e) if want.contains(&e.kind) => Ok((e.kind, e.vars.clone())),
                Some(e) => Err(binding(
                    span,
                    format!(
                        "`{}` is a {}, expected {}",
                        name,
                        e.kind,
                        want.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" or ")
                    ),
                )),
            }
        };
        let twists_ok = |env: &HashMap<&str, Entry>, t: &TwistsRef| -> PResult<()> {
            if let TwistsRef::Named(n) = t {
                lookup(env, n, &[BindingKind::Twists])?;
            }
            Ok(())
        };
        let fresh = |vars: &[String], new: &[String]| -> PResult<()> {
            for (i, n) in new.iter().enumerate() {
                if vars.contains(n) || new[..i].contains(n) {
                    return Err(binding(span, format!("variable `{}` already exists", n)));
                }
            }
            Ok(())
        };
        match &st.node {
            Statement::Ambient(a) => {
                if ambient.is_some() {
                    return Err(binding(span, "ambient declared twice"));
                }
                fresh(&[], &a.vars)?;
                ambient = Some(a);
            }
            Statement::Let { name, value } => {
                let entry = match value {
                    Binding::Scheme { gens, inside } => {
                        let amb = need_ambient()?;
                        let vars = match inside {
                            Some(y) => lookup(&env, y, &[BindingKind::Scheme, BindingKind::Family])?.1,
                            None => amb.vars.clone(),
                        };
                        for g in gens {
                            check_poly(g, &vars, span)?;
                        }
                        Entry { kind: BindingKind::Scheme, vars, fibers: vec![], cone_family: false }
                    }
                    Binding::Twists(_) => Entry { kind: BindingKind::Twists, vars: vec![], fibers: vec![], cone_family: false },
                    Binding::Cone { scheme, fibers } => {
                        need_ambient()?;
                        let mut vars = lookup(&env, scheme, &[BindingKind::Scheme])?.1;
                        fresh(&vars, fibers)?;
                        vars.extend(fibers.iter().cloned());
                        Entry { kind: BindingKind::Cone, vars, fibers: fibers.clone(), cone_family: false }
                    }
                    Binding::Chart { scheme, param, fibers } => {
                        need_ambient()?;
                        let mut vars = lookup(&env, scheme, &[BindingKind::Scheme])?.1;
                        let mut new = vec![param.clone()];
                        new.extend(fibers.iter().cloned());
                        fresh(&vars, &new)?;
                        vars.extend(new);
                        Entry { kind: BindingKind::Family, vars, fibers: vec![], cone_family: false }
                    }
                    Binding::Family { gens, param, fibers } => {
                        let amb = need_ambient()?;
                        let mut vars = amb.vars.clone();
                        let mut new = vec![param.clone()];
                        new.extend(fibers.iter().cloned());
                        fresh(&vars, &new)?;
                        vars.extend(new);
                        for g in gens {
                            check_poly(g, &vars, span)?;
                        }
                        Entry { kind: BindingKind::Family, vars, fibers: vec![], cone_family: false }
                    }
                    Binding::Defvb { cone, sub, param } => {
                        need_ambient()?;
                        let (_, mut vars) = lookup(&env, cone, &[BindingKind::Cone])?;
                        let cfib = env[cone.as_str()].fibers.clone();
                        for s in sub {
                            if !cfib.contains(s) {
                                return Err(binding(span, format!("`{}` is not a fiber variable of `{}`", s, cone)));
                            }
                        }
                        let mut new = vec![param.clone()];
                        new.extend(sub.iter().map(|s| format!("{}'", s)));
                        fresh(&vars, &new)?;
                        vars.extend(new);
                        let mut fibers = cfib;
                        fibers.extend(sub.iter().map(|s| format!("{}'", s)));
                        Entry { kind: BindingKind::Family, vars, fibers, cone_family: true }
                    }
                    Binding::Fiber { family, .. } => {
                        lookup(&env, family, &[BindingKind::Family])?;
                        let e = &env[family.as_str()];
                        if !e.cone_family {
                            return Err(binding(span, format!("fiber() expects a defvb family, `{}` is not one", family)));
                        }
                        Entry { kind: BindingKind::Cone, vars: e.vars.clone(), fibers: e.fibers.clone(), cone_family: false }
                    }
                    Binding::Bundle { series, .. } => {
                        need_ambient()?;
                        check_series(series, span)?;
                        Entry { kind: BindingKind::Bundle, vars: vec![], fibers: vec![], cone_family: false }
                    }
                    Binding::Class(e) => {
                        need_ambient()?;
                        check_series(e, span)?;
                        Entry { kind: BindingKind::Class, vars: vec![], fibers: vec![], cone_family: false }
                    }
                };
                env.insert(name.as_str(), entry);
            }
            Statement::Print(d) => match d {
                Directive::Segre { target, inside } => {
                    lookup(&env, target, &[BindingKind::Scheme, BindingKind::Cone])?;
                    if let Some(y) = inside {
                        lookup(&env, y, &[BindingKind::Scheme])?;
                    }
                }
                Directive::Vclass { scheme, twists } => {
                    lookup(&env, scheme, &[BindingKind::Scheme])?;
                    twists_ok(&env, twists)?;
                }
                Directive::Excess { normal, twists, class } => {
                    lookup(&env, normal, &[BindingKind::Bundle])?;
                    twists_ok(&env, twists)?;
                    lookup(&env, class, &[BindingKind::Class])?;
                }
                Directive::Contribution { twists, component } => {
                    need_ambient()?;
                    twists_ok(&env, twists)?;
                    if let Component::Subbundle { bundle, support } = component {
                        lookup(&env, bundle, &[BindingKind::Bundle])?;
                        lookup(&env, support, &[BindingKind::Class])?;
                    }
                }
                Directive::Degrees(x) | Directive::Dimdeg(x) | Directive::Purity(x) => {
                    lookup(&env, x, &[BindingKind::Scheme])?;
                }
                Directive::Cone(x) | Directive::Bidegrees(x) => {
                    lookup(&env, x, &[BindingKind::Scheme, BindingKind::Cone])?;
                }
                Directive::Flatlimit(x) | Directive::Family(x) => {
                    lookup(&env, x, &[BindingKind::Family])?;
                }
                Directive::Eliminate { target, vars } => {
                    let (_, have) = lookup(&env, target, &[BindingKind::Family, BindingKind::Scheme, BindingKind::Cone])?;
                    for v in vars {
                        if !have.contains(v) {
                            return Err(binding(span, format!("unknown variable `{}`", v)));
                        }
                    }
                }
                Directive::Residual { normals, ambient: a, tangent, .. } => {
                    for e in normals.iter().chain([a, tangent]) {
                        check_series(e, span)?;
                    }
                }
                Directive::Chern(t) => {
                    need_ambient()?;
                    twists_ok(&env, t)?;
                }
                Directive::Blowup { .. } => {}
            },
        }
    }
    Ok(())
}
