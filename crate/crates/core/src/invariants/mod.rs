//! Kauffman bracket, Jones, Yamada and Jaeger polynomials.

mod bracket;
mod hpoly;
mod jaeger;
mod yamada;

pub use bracket::{bracket_by_frontier, bracket_by_states, jones, kauffman_bracket, kauffman_bracket_skein};
pub use hpoly::{h_eval, h_eval_subsets, h_poly, y_value, YPoly};
pub use jaeger::{jaeger, jaeger_via_yamada};
pub use yamada::{yamada, yamada_of_code};

use thiserror::Error;

use crate::diagram::DiagramError;

/// Resource knobs for state sums. Results never depend on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSumConfig {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Memoize sub-diagrams in the skein-recursive bracket.
    pub memo: bool,
    pub max_bracket_crossings: usize,
    pub max_yamada_crossings: usize,
}

impl Default for StateSumConfig {
    fn default() -> Self {
        Self {
            workers: None,
            memo: true,
            max_bracket_crossings: 32,
            max_yamada_crossings: 12,
        }
    }
}

impl StateSumConfig {
    /// Set both crossing caps to `n`.
    pub fn with_max_crossings(mut self, n: usize) -> Self {
        self.max_bracket_crossings = n;
        self.max_yamada_crossings = n;
        self
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{what} of a {crossings}-crossing diagram exceeds the cap of {cap} crossings")]
    CapExceeded {
        what: &'static str,
        crossings: usize,
        cap: usize,
    },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
