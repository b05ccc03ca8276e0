//! The `.vc` script language: lexer, parser, printer and runner.

mod ast;
pub(crate) mod eval;
mod format;
mod lexer;
mod parser;
mod run;

pub use ast::*;
pub use eval::{eval_poly, eval_series};
pub use format::{human_payload, render_human, render_machine, Format};
pub use lexer::{tokenize, Span, Tok};
pub use parser::{parse, parse_expr, ParseError, ParseErrorKind};
pub use run::{run, scheme_bindings, Payload, ResultRecord, RunConfig, RunError};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// Parse a polynomial in `ring` from text such as `x^2*y - 3/2 z + 1`.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    let e = parse_expr(src).map_err(|e| Error::Invalid(e.to_string()))?;
    eval_poly(&e, ring)
}
