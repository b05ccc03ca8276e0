//! Exact multivariate polynomial arithmetic over the rationals.

mod monomial;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use polynomial::{ArithOp, Polynomial, Term};
pub(crate) use polynomial::merge_terms;
pub use ring::{same_ring, Grading, MonomialOrder, PolyRing, Ring, Variable};
