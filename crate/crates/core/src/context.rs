//! Computation context: seeded randomness, redraw count and resource budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::RatNum;

/// Resource limits for Gröbner basis computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of polynomials accumulated while running Buchberger.
    pub max_basis: usize,
    /// Maximum total degree of any polynomial added to a basis.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_basis: 20_000, max_degree: 64 }
    }
}

/// Switches that change the semantics of individual operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    /// Skip the t-saturation in flat limits (diagnostic only).
    pub no_saturate: bool,
    /// Accept obstruction twists that differ from the generator degrees.
    pub attest_containment: bool,
}

/// Bound on the absolute value of random integer coefficients.
pub const COEFF_BOUND: i64 = 1000;

/// Per-computation state. Not shared mutably; clone or [`Context::fork`] for
/// independent work.
#[derive(Debug, Clone)]
pub struct Context {
    seed: u64,
    redraws: usize,
    pub budget: Budget,
    pub options: Options,
    rng: ChaCha8Rng,
}

impl Default for Context {
    fn default() -> Self {
        Context::new(0)
    }
}

impl Context {
    pub fn new(seed: u64) -> Self {
        Context {
            seed,
            redraws: 2,
            budget: Budget::default(),
            options: Options::default(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn with_redraws(mut self, redraws: usize) -> Self {
        self.redraws = redraws.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_options(mut self, options: Options) -> Self {
        self.options = options;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn redraws(&self) -> usize {
        self.redraws
    }

    /// A fresh context with the same settings whose random stream is keyed by
    /// `stream`, so that results do not depend on evaluation order.
    pub fn fork(&self, stream: u64) -> Context {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        Context { rng, ..self.clone() }
    }

    /// Uniform integer in `[-COEFF_BOUND, COEFF_BOUND]`.
    pub fn random_coeff(&mut self) -> i64 {
        self.rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)
    }

    pub fn random_nonzero_coeff(&mut self) -> i64 {
        loop {
            let c = self.random_coeff();
            if c != 0 {
                return c;
            }
        }
    }

    pub fn random_rat(&mut self) -> RatNum {
        RatNum::from_integer(self.random_coeff().into())
    }

    pub fn random_vec(&mut self, n: usize) -> Vec<RatNum> {
        (0..n).map(|_| self.random_rat()).collect()
    }
}
