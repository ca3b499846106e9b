use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::graph::{DegreePairSpectrum, DegreeSpectrum, Graph};
use crate::indices::{self, IndexError, IndexValue};

/// Residuals of the handshake identities linking `n_i`, `m_{i,j}`, `|V|`
/// and `|E|`. All zero iff the four inputs are mutually consistent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandshakeResiduals {
    /// `Σ n_i - |V|`
    pub vertex_total: i64,
    /// `Σ m_{i,j} - |E|`
    pub edge_total: i64,
    /// `(degree, Σ_{j != i} m_{i,j} + 2 m_{i,i} - i n_i)` per degree.
    pub rows: Vec<(u32, i64)>,
    /// `Σ i n_i - 2|E|`
    pub handshake: i64,
}

impl HandshakeResiduals {
    pub fn is_zero(&self) -> bool {
        self.vertex_total == 0
            && self.edge_total == 0
            && self.handshake == 0
            && self.rows.iter().all(|&(_, r)| r == 0)
    }

    pub fn row(&self, degree: u32) -> i64 {
        self.rows
            .iter()
            .find(|(d, _)| *d == degree)
            .map_or(0, |&(_, r)| r)
    }
}

impl fmt::Display for HandshakeResiduals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {}, edges {}, handshake {}",
            self.vertex_total, self.edge_total, self.handshake
        )?;
        for (d, r) in &self.rows {
            write!(f, ", row {d}: {r}")?;
        }
        Ok(())
    }
}

fn diff(a: u64, b: u64) -> i64 {
    a as i64 - b as i64
}

pub fn check_handshake_identities(
    ds: &DegreeSpectrum,
    ps: &DegreePairSpectrum,
    vertex_count: u64,
    edge_count: u64,
) -> HandshakeResiduals {
    let mut degrees: Vec<u32> = ds.iter().map(|(d, _)| d).chain(ps.degrees()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let rows = degrees
        .into_iter()
        .filter(|&d| d > 0)
        .map(|d| (d, diff(ps.incidences(d), u64::from(d) * ds.count(d))))
        .collect();
    HandshakeResiduals {
        vertex_total: diff(ds.vertex_total(), vertex_count),
        edge_total: diff(ps.edge_total(), edge_count),
        rows,
        handshake: diff(ds.degree_total(), 2 * edge_count),
    }
}

/// Residuals of the identities every graph without isolated vertices
/// satisfies. Exponent maps are `left / right` per prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResiduals {
    /// `Π_2` edge form over vertex form.
    pub pi2_forms: BTreeMap<u64, BigInt>,
    /// `Π_{1,c}` over `NK^c`, for each checked `c`.
    pub pi1_vs_nk_power: Vec<(u64, BTreeMap<u64, BigInt>)>,
    /// `χ_0 - |E|`
    pub chi0_minus_edges: BigInt,
    /// `χ_1 - M1`
    pub chi1_minus_m1: BigInt,
}

impl IdentityResiduals {
    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.pi2_forms.is_empty()
            && self.pi1_vs_nk_power.iter().all(|(_, d)| d.is_empty())
            && self.chi0_minus_edges.is_zero()
            && self.chi1_minus_m1.is_zero()
    }
}

impl fmt::Display for IdentityResiduals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let map = |m: &BTreeMap<u64, BigInt>| {
            if m.is_empty() {
                "0".to_string()
            } else {
                m.iter()
                    .map(|(p, e)| format!("{p}:{e}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        write!(f, "pi2 forms {}", map(&self.pi2_forms))?;
        for (c, d) in &self.pi1_vs_nk_power {
            write!(f, ", pi1[c={c}]/nk^c {}", map(d))?;
        }
        write!(
            f,
            ", chi0-|E| {}, chi1-M1 {}",
            self.chi0_minus_edges, self.chi1_minus_m1
        )
    }
}

/// Exponents of `Π_{1,c}` checked against `NK^c`.
pub const IDENTITY_C_VALUES: [u64; 4] = [0, 1, 2, 3];

pub fn self_consistency_suite(g: &Graph) -> Result<IdentityResiduals, IndexError> {
    let edge_form = indices::mult_zagreb_2(g)?;
    let vertex_form = indices::mult_zagreb_2_vertex_form(g)?;
    let nk = indices::narumi_katayama(g)?;
    let pi1_vs_nk_power = IDENTITY_C_VALUES
        .iter()
        .map(|&c| Ok((c, indices::mult_zagreb_1(g, c)?.exponent_diff(&nk.pow(c)))))
        .collect::<Result<Vec<_>, IndexError>>()?;
    let chi = |alpha: f64| match indices::sum_connectivity(g, alpha) {
        IndexValue::Integer(v) => v,
        other => unreachable!("integral exponent gives an exact sum, got {other:?}"),
    };
    Ok(IdentityResiduals {
        pi2_forms: edge_form.exponent_diff(&vertex_form),
        pi1_vs_nk_power,
        chi0_minus_edges: chi(0.0) - BigInt::from(g.edge_count()),
        chi1_minus_m1: chi(1.0) - BigInt::from(indices::first_zagreb(g)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_honeycomb;

    fn k4() -> Graph {
        Graph::build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn consistent_k4() {
        let ds = DegreeSpectrum::from_rows([(3, 4)]);
        let ps = DegreePairSpectrum::from_rows([((3, 3), 6)]);
        assert!(check_handshake_identities(&ds, &ps, 4, 6).is_zero());
    }

    #[test]
    fn miscounted_edges() {
        let ds = DegreeSpectrum::from_rows([(3, 4)]);
        let ps = DegreePairSpectrum::from_rows([((3, 3), 5)]);
        let r = check_handshake_identities(&ds, &ps, 4, 6);
        assert_eq!(r.row(3), -2);
        assert_eq!(r.edge_total, -1);
        assert_eq!(r.vertex_total, 0);
        assert_eq!(r.handshake, 0);
        assert!(!r.is_zero());
    }

    #[test]
    fn identity_suite() {
        assert!(self_consistency_suite(&k4()).unwrap().is_zero());
        assert!(self_consistency_suite(&gen_honeycomb(3).unwrap().graph)
            .unwrap()
            .is_zero());
        let isolated = Graph::build(3, [(0, 1)]).unwrap();
        assert!(self_consistency_suite(&isolated).is_err());
    }
}
