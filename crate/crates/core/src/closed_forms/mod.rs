//! Published partition tables and index formulas for the five families,
//! stored as data and evaluated literally.
//!
//! Nothing here is corrected: the formulas are hypotheses that
//! [`crate::verify`] checks against generated graphs.

mod formulas;
mod poly;
mod tables;

use thiserror::Error;

use crate::generators::Family;

pub use formulas::{
    formula_value, index_formula, AlphaPower, Formula, IndexFormula, PowerTerm, PrimePower,
};
pub use poly::Poly;
pub use tables::{
    partition_table, size_polynomials, table_degree_spectrum, table_edge_spectrum, EdgePiece,
    PartitionTable,
};

/// Inclusive range of dimensions on which a row set or formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Domain {
    pub min: u32,
    pub max: Option<u32>,
}

impl Domain {
    pub const fn from(min: u32) -> Self {
        Self { min, max: None }
    }

    pub const fn exactly(n: u32) -> Self {
        Self {
            min: n,
            max: Some(n),
        }
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.min && self.max.is_none_or(|m| n <= m)
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.max {
            Some(m) if m == self.min => write!(f, "n = {m}"),
            Some(m) => write!(f, "{} <= n <= {m}", self.min),
            None => write!(f, "n >= {}", self.min),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{what} for {family} does not cover n = {n}")]
    OutOfRange {
        what: String,
        family: Family,
        n: u32,
    },
    #[error("{what} for {family} at n = {n} has a negative exponent on {prime}")]
    NegativeExponent {
        what: String,
        family: Family,
        n: u32,
        prime: u64,
    },
    #[error("{what} for {family} at n = {n} evaluates to a negative row count")]
    NegativeCount {
        what: String,
        family: Family,
        n: u32,
    },
}
