//! Deterministic constructions of the five network families.
//!
//! | family | construction                                                   |
//! |--------|----------------------------------------------------------------|
//! | `HX`   | triangular-lattice hexagon with `n` vertices per side          |
//! | `HC`   | unit-triangle adjacency graph of `HX_{n+1}`                    |
//! | `SL`   | `HC_n` with each vertex blown up into a silicon-oxygen `K4`    |
//! | `OX`   | `SL_n` with the silicon vertices removed                       |
//! | `CS`   | `n` tetrahedra (`K4`) in a row, consecutive ones sharing a corner |
//!
//! Vertex labels follow generation order, so the same spec always yields
//! the same edge list.

mod chain;
mod hexagonal;
mod honeycomb;
mod silicate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use chain::gen_chain_silicate;
pub use hexagonal::gen_hexagonal;
pub use honeycomb::gen_honeycomb;
pub use silicate::{gen_oxide, gen_silicate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "SL")]
    Silicate,
    #[serde(rename = "CS")]
    ChainSilicate,
    #[serde(rename = "HX")]
    Hexagonal,
    #[serde(rename = "OX")]
    Oxide,
    #[serde(rename = "HC")]
    Honeycomb,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Silicate,
        Family::ChainSilicate,
        Family::Hexagonal,
        Family::Oxide,
        Family::Honeycomb,
    ];

    /// Two-letter code used in file headers and on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Family::Silicate => "SL",
            Family::ChainSilicate => "CS",
            Family::Hexagonal => "HX",
            Family::Oxide => "OX",
            Family::Honeycomb => "HC",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Silicate => "silicate",
            Family::ChainSilicate => "chain silicate",
            Family::Hexagonal => "hexagonal",
            Family::Oxide => "oxide",
            Family::Honeycomb => "honeycomb",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown network family `{0}` (expected one of SL, CS, HX, OX, HC)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "SL" => Ok(Family::Silicate),
            "CS" => Ok(Family::ChainSilicate),
            "HX" => Ok(Family::Hexagonal),
            "OX" => Ok(Family::Oxide),
            "HC" => Ok(Family::Honeycomb),
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid dimension {n} for {family}: n must be at least 1")]
    InvalidDimension { family: Family, n: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NetworkSpec {
    pub family: Family,
    pub n: u32,
}

impl NetworkSpec {
    pub fn new(family: Family, n: u32) -> Self {
        Self { family, n }
    }

    fn validate(self) -> Result<Self, GenerateError> {
        if self.n == 0 {
            Err(GenerateError::InvalidDimension {
                family: self.family,
                n: self.n,
            })
        } else {
            Ok(self)
        }
    }
}

impl fmt::Display for NetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// Chemical role of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Silicon,
    Oxygen,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledNetwork {
    pub spec: NetworkSpec,
    pub graph: Graph,
    /// One role per vertex, indexed by vertex id.
    pub roles: Vec<Role>,
}

impl LabeledNetwork {
    fn plain(spec: NetworkSpec, graph: Graph) -> Self {
        let roles = vec![Role::Plain; graph.vertex_count()];
        Self { spec, graph, roles }
    }

    pub fn vertices_with_role(&self, role: Role) -> impl Iterator<Item = usize> + '_ {
        self.roles
            .iter()
            .enumerate()
            .filter(move |(_, &r)| r == role)
            .map(|(v, _)| v)
    }

    /// Drops every vertex tagged `role` and relabels the rest in order.
    pub fn without_role(&self, role: Role) -> (Graph, Vec<Role>) {
        let keep: Vec<bool> = self.roles.iter().map(|&r| r != role).collect();
        let roles = self.roles.iter().copied().filter(|&r| r != role).collect();
        (self.graph.induced_subgraph(&keep), roles)
    }
}

/// Dispatches to the family generator.
pub fn generate(spec: NetworkSpec) -> Result<LabeledNetwork, GenerateError> {
    match spec.family {
        Family::Silicate => gen_silicate(spec.n),
        Family::ChainSilicate => gen_chain_silicate(spec.n),
        Family::Hexagonal => gen_hexagonal(spec.n),
        Family::Oxide => gen_oxide(spec.n),
        Family::Honeycomb => gen_honeycomb(spec.n),
    }
}
