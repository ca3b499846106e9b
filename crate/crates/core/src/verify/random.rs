use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::identities::self_consistency_suite;
use crate::exec::Execution;
use crate::graph::Graph;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_2017;

/// Random connected simple graph with `2..=max_vertices` vertices: a random
/// recursive tree plus each remaining pair with probability `extra`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, max_vertices: usize, extra: f64) -> Graph {
    let n = rng.random_range(2..=max_vertices.max(2));
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    let tree: HashSet<(usize, usize)> = edges.iter().copied().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, edges).expect("generated edges are simple")
}

/// The `index`-th graph of the seeded sequence; each index has its own
/// stream so the sequence does not depend on evaluation order.
pub fn seeded_graph(seed: u64, index: u64, max_vertices: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let extra = rng.random_range(0.0..0.5);
    random_connected_graph(&mut rng, max_vertices, extra)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomGraphSummary {
    pub seed: u64,
    pub count: u64,
    pub max_vertices: usize,
    /// Indices of graphs with a nonzero identity residual.
    pub failures: Vec<u64>,
}

impl RandomGraphSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the identity suite on `count` seeded random connected graphs.
pub fn check_random_graphs(
    seed: u64,
    count: u64,
    max_vertices: usize,
    exec: Execution,
) -> RandomGraphSummary {
    let ids: Vec<u64> = (0..count).collect();
    let ok = exec.map(&ids, |&i| {
        let g = seeded_graph(seed, i, max_vertices);
        self_consistency_suite(&g)
            .map(|r| r.is_zero())
            .unwrap_or(false)
    });
    RandomGraphSummary {
        seed,
        count,
        max_vertices,
        failures: ids
            .into_iter()
            .zip(ok)
            .filter(|(_, ok)| !ok)
            .map(|(i, _)| i)
            .collect(),
    }
}
