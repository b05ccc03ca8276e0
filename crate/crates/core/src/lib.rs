//! Exact normal cones, Segre classes and virtual fundamental classes of
//! explicitly presented subschemes of projective space.

pub mod chow;
pub mod cone;
pub mod context;
pub mod deformation;
pub mod error;
pub mod ideal;
pub mod poly;
pub mod rational;
pub mod script;
pub mod segre;
pub mod virtual_class;

pub use context::{Budget, Context, Options};
pub use error::{Error, Result};
pub use ideal::{GroebnerBasis, Ideal};
pub use poly::{Grading, Monomial, MonomialOrder, PolyRing, Polynomial, Ring};
pub use rational::RatNum;
