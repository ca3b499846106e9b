//! Generators for silicate-type lattice networks, exact degree-based
//! topological indices, and verification of published closed forms
//! against the generated graphs.
//!
//! ```
//! use topoindex_core::{compute, generate, Family, IndexKind, NetworkSpec, Params};
//!
//! let net = generate(NetworkSpec::new(Family::ChainSilicate, 1)).unwrap();
//! let pi1 = compute(&net.graph, IndexKind::MultFirst, Params { c: 1, alpha: 2.0 }).unwrap();
//! assert_eq!(pi1.to_string(), "3^4");
//! ```

pub mod closed_forms;
pub mod exec;
pub mod factored;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod verify;

pub use exec::Execution;
pub use factored::FactoredInteger;
pub use generators::{generate, Family, GenerateError, LabeledNetwork, NetworkSpec, Role};
pub use graph::{
    degree_pair_spectrum, degree_spectrum, DegreePairSpectrum, DegreeSpectrum, Graph, GraphError,
};
pub use indices::{compute, IndexKind, IndexValue, Params};
pub use verify::{verify_family, Status, SweepParams, VerificationReport};
