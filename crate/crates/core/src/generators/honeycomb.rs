use std::collections::BTreeMap;

use super::hexagonal::HexPatch;
use super::{Family, GenerateError, LabeledNetwork, NetworkSpec};
use crate::graph::Graph;

/// Unit triangles of a hexagonal patch as vertex-id triples.
///
/// Order: row-major (`r` outer, `q` inner) over the anchor `(q, r)`, the
/// upward triangle `{(q,r), (q+1,r), (q,r+1)}` before the downward triangle
/// `{(q+1,r), (q,r+1), (q+1,r+1)}`. A triangle belongs to the patch when
/// all three corners do; the anchor of a downward one may lie outside.
fn unit_triangles(patch: &HexPatch, radius: i32) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let anchors = (-radius - 1..=radius).flat_map(|r| (-radius - 1..=radius).map(move |q| (q, r)));
    for (q, r) in anchors {
        let up = [(q, r), (q + 1, r), (q, r + 1)];
        let down = [(q + 1, r), (q, r + 1), (q + 1, r + 1)];
        for corners in [up, down] {
            if let [Some(a), Some(b), Some(c)] = corners.map(|p| patch.id(p)) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Honeycomb network `HC_n`.
///
/// Built as the adjacency graph of the unit triangles of `HX_{n+1}`: one
/// vertex per triangle, one edge per pair of triangles sharing a lattice
/// edge. The hexagon of side `n` holds `6n^2` triangles and `9n^2 - 3n`
/// interior lattice edges.
pub fn gen_honeycomb(n: u32) -> Result<LabeledNetwork, GenerateError> {
    let spec = NetworkSpec::new(Family::Honeycomb, n).validate()?;
    let patch = HexPatch::new(n as i32);
    let triangles = unit_triangles(&patch, n as i32);

    let mut sides: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (t, tri) in triangles.iter().enumerate() {
        for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
            sides.entry((a.min(b), a.max(b))).or_default().push(t);
        }
    }
    let edges = sides.values().filter_map(|ts| match ts.as_slice() {
        [s, t] => Some((*s, *t)),
        _ => None,
    });
    let graph = Graph::build(triangles.len(), edges).expect("triangle adjacency is a simple graph");
    Ok(LabeledNetwork::plain(spec, graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degree_pair_spectrum, DegreePairSpectrum};

    #[test]
    fn dimension_one_is_a_hexagon() {
        let hc = gen_honeycomb(1).unwrap();
        assert_eq!(hc.graph.vertex_count(), 6);
        assert_eq!(hc.graph.edge_count(), 6);
        assert_eq!(
            degree_pair_spectrum(&hc.graph),
            DegreePairSpectrum::from_rows([((2, 2), 6)])
        );
    }

    #[test]
    fn counts() {
        for (n, v, e) in [(2, 24, 30), (4, 96, 132)] {
            let hc = gen_honeycomb(n).unwrap();
            assert_eq!((hc.graph.vertex_count(), hc.graph.edge_count()), (v, e));
        }
    }

    #[test]
    fn every_lattice_edge_has_at_most_two_triangles() {
        let patch = HexPatch::new(3);
        let tris = unit_triangles(&patch, 3);
        assert_eq!(tris.len(), 54);
        let mut uses: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for tri in &tris {
            for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                *uses.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        assert!(uses.values().all(|&k| k == 1 || k == 2));
        assert_eq!(uses.len(), patch.edges().len());
    }
}
