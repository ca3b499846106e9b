//! Immutable simple undirected graphs and their degree partitions.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Vertex identifier. Ids are dense and 0-based.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0} (edge ({0}, {0}))")]
    SelfLoop(VertexId),
    #[error("edge ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    OutOfRange {
        u: VertexId,
        v: VertexId,
        vertex_count: usize,
    },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} is outside 0..{vertex_count}")]
    NoSuchVertex {
        vertex: VertexId,
        vertex_count: usize,
    },
}

/// A finite simple undirected graph in canonical form.
///
/// Every adjacency list is sorted and symmetric, so two graphs built from
/// the same edge set compare equal no matter how the edges were ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices from an edge list.
    ///
    /// Self-loops, out-of-range endpoints and repeated edges (in either
    /// orientation) are rejected with an error naming the offending edge.
    pub fn build<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::OutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Self {
            adjacency,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::NoSuchVertex {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[_]>::len)
    }

    /// Iterator over all degrees in vertex order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    /// The subgraph induced by the vertices with `keep[v] == true`,
    /// relabeled densely in increasing order of the original ids.
    ///
    /// # Panics
    ///
    /// Panics if `keep.len()` differs from the vertex count.
    pub fn induced_subgraph(&self, keep: &[bool]) -> Graph {
        assert_eq!(
            keep.len(),
            self.vertex_count(),
            "mask length must equal vertex count"
        );
        let mut relabel = vec![usize::MAX; keep.len()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (relabel[u], relabel[v]));
        Graph::build(next, edges).expect("induced subgraph of a simple graph is simple")
    }
}

/// Number of vertices of each degree (`n_i`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DegreeSpectrum {
    counts: BTreeMap<u32, u64>,
}

impl DegreeSpectrum {
    /// Builds a spectrum from `(degree, count)` rows, dropping zero counts
    /// and merging repeated degrees.
    pub fn from_rows<I: IntoIterator<Item = (u32, u64)>>(rows: I) -> Self {
        let mut counts = BTreeMap::new();
        for (d, c) in rows {
            if c > 0 {
                *counts.entry(d).or_insert(0) += c;
            }
        }
        Self { counts }
    }

    pub fn count(&self, degree: u32) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn vertex_total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ degree · count`, which is twice the edge count.
    pub fn degree_total(&self) -> u64 {
        self.iter().map(|(d, c)| u64::from(d) * c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for DegreeSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (d, c)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}: {c}")?;
        }
        f.write_str("}")
    }
}

/// Number of edges per unordered endpoint-degree pair (`m_{i,j}`, `i <= j`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DegreePairSpectrum {
    counts: BTreeMap<(u32, u32), u64>,
}

impl DegreePairSpectrum {
    /// Builds a spectrum from `((i, j), count)` rows. Pairs are normalized
    /// to `i <= j`; zero counts are dropped.
    pub fn from_rows<I: IntoIterator<Item = ((u32, u32), u64)>>(rows: I) -> Self {
        let mut counts = BTreeMap::new();
        for ((i, j), c) in rows {
            if c > 0 {
                *counts.entry((i.min(j), i.max(j))).or_insert(0) += c;
            }
        }
        Self { counts }
    }

    pub fn count(&self, i: u32, j: u32) -> u64 {
        self.counts.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.counts.iter().map(|(&p, &c)| (p, c))
    }

    pub fn edge_total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ_{j != i} m_{i,j} + 2 m_{i,i}`: the number of edge ends at
    /// vertices of degree `i`.
    pub fn incidences(&self, degree: u32) -> u64 {
        self.iter()
            .map(|((i, j), c)| match (i == degree, j == degree) {
                (true, true) => 2 * c,
                (true, false) | (false, true) => c,
                _ => 0,
            })
            .sum()
    }

    /// Degrees appearing as an endpoint of some edge.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.counts.keys().flat_map(|&(i, j)| [i, j]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for DegreePairSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, ((i, j), c)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{j}): {c}")?;
        }
        f.write_str("}")
    }
}

pub fn degree_spectrum(g: &Graph) -> DegreeSpectrum {
    DegreeSpectrum::from_rows(g.degrees().map(|d| (d as u32, 1)))
}

pub fn degree_pair_spectrum(g: &Graph) -> DegreePairSpectrum {
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for (u, v) in g.edges() {
        let du = g.adjacency[u].len() as u32;
        let dv = g.adjacency[v].len() as u32;
        *counts.entry((du.min(dv), du.max(dv))).or_insert(0) += 1;
    }
    DegreePairSpectrum { counts }
}
