use super::{Family, GenerateError, LabeledNetwork, NetworkSpec, Role};
use crate::graph::Graph;

/// Chain silicate network `CS_n`: tetrahedra `T_1 .. T_n` in a row.
///
/// `T_i` is a `K4` on a silicon `s_i` and three oxygens; its exit corner is
/// the entry corner of `T_{i+1}`, so consecutive tetrahedra share exactly
/// one oxygen and no oxygen lies in three tetrahedra.
///
/// Labels: the entry oxygen of `T_1` is 0, then each `T_i` appends
/// `s_i`, its free oxygen and its exit oxygen.
pub fn gen_chain_silicate(n: u32) -> Result<LabeledNetwork, GenerateError> {
    let spec = NetworkSpec::new(Family::ChainSilicate, n).validate()?;
    let n = n as usize;
    let mut roles = Vec::with_capacity(3 * n + 1);
    let mut edges = Vec::with_capacity(6 * n);
    roles.push(Role::Oxygen);
    let mut entry = 0;
    for _ in 0..n {
        let silicon = roles.len();
        let free = silicon + 1;
        let exit = silicon + 2;
        roles.extend([Role::Silicon, Role::Oxygen, Role::Oxygen]);
        let corners = [entry, silicon, free, exit];
        for (i, &a) in corners.iter().enumerate() {
            for &b in &corners[i + 1..] {
                edges.push((a, b));
            }
        }
        entry = exit;
    }
    let graph = Graph::build(roles.len(), edges).expect("consecutive tetrahedra share one corner");
    Ok(LabeledNetwork { spec, graph, roles })
}
