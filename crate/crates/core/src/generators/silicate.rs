use super::honeycomb::gen_honeycomb;
use super::{Family, GenerateError, LabeledNetwork, NetworkSpec, Role};
use crate::graph::Graph;

/// Silicate network `SL_n`.
///
/// Every vertex of `HC_n` becomes a silicon and every `HC_n` edge is
/// subdivided by a shared oxygen. Silicons of degree 2 in `HC_n` also get
/// one pendant oxygen, so each silicon has exactly three oxygens; the
/// silicon and its oxygens then form a `K4`.
///
/// Labels: silicons first (in `HC_n` order), then the shared oxygens in
/// `HC_n` edge order, then the pendant oxygens in silicon order.
pub fn gen_silicate(n: u32) -> Result<LabeledNetwork, GenerateError> {
    let spec = NetworkSpec::new(Family::Silicate, n).validate()?;
    let hc = gen_honeycomb(n)?.graph;
    let silicons = hc.vertex_count();

    let mut oxygens_of: Vec<Vec<usize>> = vec![Vec::with_capacity(3); silicons];
    let mut next = silicons;
    for (u, v) in hc.edges() {
        oxygens_of[u].push(next);
        oxygens_of[v].push(next);
        next += 1;
    }
    for corner in oxygens_of.iter_mut() {
        while corner.len() < 3 {
            corner.push(next);
            next += 1;
        }
    }

    let mut edges = Vec::with_capacity(6 * silicons);
    for (si, ox) in oxygens_of.iter().enumerate() {
        debug_assert_eq!(ox.len(), 3, "honeycomb degrees are 2 or 3");
        edges.extend(ox.iter().map(|&o| (si, o)));
        edges.extend([(ox[0], ox[1]), (ox[0], ox[2]), (ox[1], ox[2])]);
    }

    let graph = Graph::build(next, edges).expect("tetrahedra share corners only");
    let mut roles = vec![Role::Oxygen; next];
    roles[..silicons].fill(Role::Silicon);
    Ok(LabeledNetwork { spec, graph, roles })
}

/// Oxide network `OX_n`: `SL_n` with its silicon vertices deleted and the
/// oxygens relabeled in their original order.
pub fn gen_oxide(n: u32) -> Result<LabeledNetwork, GenerateError> {
    let spec = NetworkSpec::new(Family::Oxide, n).validate()?;
    let (graph, roles) = gen_silicate(n)?.without_role(Role::Silicon);
    Ok(LabeledNetwork { spec, graph, roles })
}
