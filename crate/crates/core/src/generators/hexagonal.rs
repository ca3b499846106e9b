use std::collections::HashMap;

use super::{Family, GenerateError, LabeledNetwork, NetworkSpec};
use crate::graph::Graph;

/// The six unit steps of the triangular lattice in axial `(q, r)` form.
pub(super) const DIRECTIONS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Lattice points `(q, r)` with `max(|q|, |r|, |q + r|) <= radius`,
/// enumerated row by row (`r` outer, `q` inner).
pub(super) struct HexPatch {
    pub points: Vec<(i32, i32)>,
    index: HashMap<(i32, i32), usize>,
}

impl HexPatch {
    pub fn new(radius: i32) -> Self {
        let mut points = Vec::new();
        for r in -radius..=radius {
            let lo = (-radius).max(-r - radius);
            let hi = radius.min(-r + radius);
            for q in lo..=hi {
                points.push((q, r));
            }
        }
        let index = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Self { points, index }
    }

    pub fn id(&self, p: (i32, i32)) -> Option<usize> {
        self.index.get(&p).copied()
    }

    /// Lattice edges between points of the patch, each reported once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, &(q, r)) in self.points.iter().enumerate() {
            for (dq, dr) in DIRECTIONS {
                if let Some(v) = self.id((q + dq, r + dr)) {
                    if u < v {
                        out.push((u, v));
                    }
                }
            }
        }
        out
    }
}

/// Hexagonal network `HX_n`: the triangular-lattice hexagon with `n`
/// vertices on each side.
pub fn gen_hexagonal(n: u32) -> Result<LabeledNetwork, GenerateError> {
    let spec = NetworkSpec::new(Family::Hexagonal, n).validate()?;
    let patch = HexPatch::new(n as i32 - 1);
    let graph =
        Graph::build(patch.points.len(), patch.edges()).expect("lattice patch is a simple graph");
    Ok(LabeledNetwork::plain(spec, graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degree_spectrum, DegreeSpectrum};

    #[test]
    fn small_dimensions() {
        let hx1 = gen_hexagonal(1).unwrap();
        assert_eq!((hx1.graph.vertex_count(), hx1.graph.edge_count()), (1, 0));

        let hx2 = gen_hexagonal(2).unwrap();
        assert_eq!((hx2.graph.vertex_count(), hx2.graph.edge_count()), (7, 12));
        assert_eq!(
            degree_spectrum(&hx2.graph),
            DegreeSpectrum::from_rows([(3, 6), (6, 1)])
        );

        let hx6 = gen_hexagonal(6).unwrap();
        assert_eq!(
            (hx6.graph.vertex_count(), hx6.graph.edge_count()),
            (91, 240)
        );
    }

    #[test]
    fn center_is_first_interior_row_major() {
        let patch = HexPatch::new(1);
        assert_eq!(
            patch.points,
            vec![(0, -1), (1, -1), (-1, 0), (0, 0), (1, 0), (-1, 1), (0, 1)]
        );
    }
}
