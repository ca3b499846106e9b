use super::{ClosedFormError, Domain, Poly};
use crate::generators::Family;
use crate::graph::{DegreePairSpectrum, DegreeSpectrum};

/// Edge rows `((i, j), m_{i,j}(n))` valid on one domain.
pub type EdgePiece = (Domain, Vec<((u32, u32), Poly)>);

/// Vertex and edge partition tables of one family as polynomials in `n`.
///
/// Edge rows come in pieces because some families publish a separate row
/// for small `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    pub family: Family,
    pub vertex_domain: Domain,
    pub vertex_rows: Vec<(u32, Poly)>,
    pub edge_pieces: Vec<EdgePiece>,
}

impl PartitionTable {
    pub fn edge_rows(&self, n: u32) -> Option<&[((u32, u32), Poly)]> {
        self.edge_pieces
            .iter()
            .find(|(d, _)| d.contains(n))
            .map(|(_, rows)| rows.as_slice())
    }

    pub fn edge_domain_min(&self) -> u32 {
        self.edge_pieces
            .iter()
            .map(|(d, _)| d.min)
            .min()
            .unwrap_or(u32::MAX)
    }
}

/// `(|V|, |E|)` as polynomials in `n`.
pub fn size_polynomials(family: Family) -> (Poly, Poly) {
    match family {
        Family::Silicate => (Poly::new(&[0, 3, 15]), Poly::new(&[0, 0, 36])),
        Family::ChainSilicate => (Poly::new(&[1, 3]), Poly::new(&[0, 6])),
        Family::Hexagonal => (Poly::new(&[1, -3, 3]), Poly::new(&[6, -15, 9])),
        Family::Oxide => (Poly::new(&[0, 3, 9]), Poly::new(&[0, 0, 18])),
        Family::Honeycomb => (Poly::new(&[0, 0, 6]), Poly::new(&[0, -3, 9])),
    }
}

pub fn partition_table(family: Family) -> PartitionTable {
    let p = Poly::new;
    match family {
        Family::Silicate => PartitionTable {
            family,
            vertex_domain: Domain::from(1),
            vertex_rows: vec![(3, p(&[0, 6, 6])), (6, p(&[0, -3, 9]))],
            edge_pieces: vec![(
                Domain::from(1),
                vec![
                    ((3, 3), p(&[0, 6])),
                    ((3, 6), p(&[0, 6, 18])),
                    ((6, 6), p(&[0, -12, 18])),
                ],
            )],
        },
        Family::ChainSilicate => PartitionTable {
            family,
            vertex_domain: Domain::from(1),
            vertex_rows: vec![(3, p(&[2, 2])), (6, p(&[-1, 1]))],
            edge_pieces: vec![
                (
                    Domain::exactly(1),
                    vec![((3, 3), p(&[6])), ((3, 6), p(&[0])), ((6, 6), p(&[0]))],
                ),
                (
                    Domain::from(2),
                    vec![
                        ((3, 3), p(&[4, 1])),
                        ((3, 6), p(&[-2, 4])),
                        ((6, 6), p(&[-2, 1])),
                    ],
                ),
            ],
        },
        Family::Hexagonal => PartitionTable {
            family,
            vertex_domain: Domain::from(2),
            vertex_rows: vec![(3, p(&[6])), (4, p(&[-12, 6])), (6, p(&[7, -9, 3]))],
            // the published rows go negative at n = 2 and miss the (3,3) ring there
            edge_pieces: vec![(
                Domain::from(3),
                vec![
                    ((3, 4), p(&[12])),
                    ((3, 6), p(&[6])),
                    ((4, 4), p(&[-18, 6])),
                    ((4, 6), p(&[-24, 12])),
                    ((6, 6), p(&[30, -33, 9])),
                ],
            )],
        },
        Family::Oxide => PartitionTable {
            family,
            vertex_domain: Domain::from(1),
            vertex_rows: vec![(2, p(&[0, 6])), (4, p(&[0, -3, 9]))],
            edge_pieces: vec![(
                Domain::from(1),
                vec![((2, 4), p(&[0, 12])), ((4, 4), p(&[0, -12, 18]))],
            )],
        },
        Family::Honeycomb => PartitionTable {
            family,
            vertex_domain: Domain::from(1),
            vertex_rows: vec![(2, p(&[0, 6])), (3, p(&[0, -6, 6]))],
            edge_pieces: vec![(
                Domain::from(1),
                vec![
                    ((2, 2), p(&[6])),
                    ((2, 3), p(&[-12, 12])),
                    ((3, 3), p(&[6, -15, 9])),
                ],
            )],
        },
    }
}

fn row_count(value: i64, family: Family, n: u32, what: &str) -> Result<u64, ClosedFormError> {
    u64::try_from(value).map_err(|_| ClosedFormError::NegativeCount {
        what: what.into(),
        family,
        n,
    })
}

/// Vertex partition table evaluated at `n`; zero rows are dropped.
pub fn table_degree_spectrum(family: Family, n: u32) -> Result<DegreeSpectrum, ClosedFormError> {
    let table = partition_table(family);
    let what = "vertex partition table";
    if !table.vertex_domain.contains(n) {
        return Err(ClosedFormError::OutOfRange {
            what: what.into(),
            family,
            n,
        });
    }
    let rows = table
        .vertex_rows
        .iter()
        .map(|(d, poly)| Ok((*d, row_count(poly.eval(n.into()), family, n, what)?)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DegreeSpectrum::from_rows(rows))
}

/// Edge partition table evaluated at `n`; zero rows are dropped.
pub fn table_edge_spectrum(family: Family, n: u32) -> Result<DegreePairSpectrum, ClosedFormError> {
    let table = partition_table(family);
    let what = "edge partition table";
    let rows = table
        .edge_rows(n)
        .ok_or_else(|| ClosedFormError::OutOfRange {
            what: what.into(),
            family,
            n,
        })?;
    let rows = rows
        .iter()
        .map(|(pair, poly)| Ok((*pair, row_count(poly.eval(n.into()), family, n, what)?)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DegreePairSpectrum::from_rows(rows))
}
