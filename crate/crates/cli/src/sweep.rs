//! Index sweeps over families and dimensions, stored as CSV.

use std::io::{Read, Write};
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use topoindex_core::indices::{self, integral_exponent};
use topoindex_core::{
    degree_pair_spectrum, degree_spectrum, generate, Execution, Family, GenerateError, IndexKind,
    IndexValue, NetworkSpec, Params,
};

/// Column names, in order.
pub const COLUMNS: [&str; 6] = [
    "family",
    "n",
    "index",
    "param",
    "value_log10",
    "value_exact",
];

/// Longest decimal expansion written to `value_exact`.
pub const MAX_EXACT_DIGITS: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: Family,
    pub n: u32,
    pub index: String,
    /// `c` for `pi1`, `alpha` for `chi`, empty otherwise.
    pub param: String,
    pub value_log10: f64,
    pub value_exact: String,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("{family}_{n}: {source}")]
    Index {
        family: Family,
        n: u32,
        source: indices::IndexError,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("unknown column `{0}`")]
    UnknownColumn(String),
    #[error("missing column `{0}`")]
    MissingColumn(String),
    #[error("non-finite value_log10 for {family}_{n} {index}")]
    NonFinite {
        family: Family,
        n: u32,
        index: String,
    },
}

/// Exponents used by a sweep. `c` may be fractional; only integral
/// non-negative `c` gives an exact value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepExponents {
    pub c: f64,
    pub alpha: f64,
}

impl Default for SweepExponents {
    fn default() -> Self {
        Self { c: 2.0, alpha: 2.0 }
    }
}

fn param_column(kind: IndexKind, exps: SweepExponents) -> String {
    match kind {
        IndexKind::MultFirst => exps.c.to_string(),
        IndexKind::SumConnectivity => exps.alpha.to_string(),
        _ => String::new(),
    }
}

fn evaluate(
    spec: NetworkSpec,
    kinds: &[IndexKind],
    exps: SweepExponents,
) -> Result<Vec<SweepRow>, SweepError> {
    let net = generate(spec)?;
    let ds = degree_spectrum(&net.graph);
    let ps = degree_pair_spectrum(&net.graph);
    let index_err = |source| SweepError::Index {
        family: spec.family,
        n: spec.n,
        source,
    };
    kinds
        .iter()
        .map(|&kind| {
            let exact_c = integral_exponent(exps.c).map(u64::from);
            let (log10, exact) = match (kind, exact_c) {
                (IndexKind::MultFirst, None) => (
                    indices::mult_zagreb_1_log10(&net.graph, exps.c).map_err(index_err)?,
                    None,
                ),
                _ => {
                    let params = Params {
                        c: exact_c.unwrap_or(0),
                        alpha: exps.alpha,
                    };
                    let v: IndexValue =
                        indices::compute_from_spectra(&ds, &ps, kind, params).map_err(index_err)?;
                    (v.log10(), v.exact_decimal(MAX_EXACT_DIGITS))
                }
            };
            if !log10.is_finite() {
                return Err(SweepError::NonFinite {
                    family: spec.family,
                    n: spec.n,
                    index: kind.code().to_string(),
                });
            }
            Ok(SweepRow {
                family: spec.family,
                n: spec.n,
                index: kind.code().to_string(),
                param: param_column(kind, exps),
                value_log10: log10,
                value_exact: exact.unwrap_or_default(),
            })
        })
        .collect()
}

/// One row per `(family, n, index)`, sorted by family, index, then `n`
/// (families and indices in declaration order). Values come from the
/// generated graphs.
pub fn sweep_rows(
    families: &[Family],
    ns: RangeInclusive<u32>,
    kinds: &[IndexKind],
    exps: SweepExponents,
    exec: Execution,
) -> Result<Vec<SweepRow>, SweepError> {
    let mut families = families.to_vec();
    families.sort();
    families.dedup();
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();

    let specs: Vec<NetworkSpec> = families
        .iter()
        .flat_map(|&f| ns.clone().map(move |n| NetworkSpec::new(f, n)))
        .collect();
    let mut rows = Vec::with_capacity(specs.len() * kinds.len());
    for r in exec.map(&specs, |&spec| evaluate(spec, &kinds, exps)) {
        rows.extend(r?);
    }
    let rank = |code: &str| kinds.iter().position(|k| k.code() == code);
    rows.sort_by_key(|r| (r.family, rank(&r.index), r.n));
    Ok(rows)
}

pub fn write_csv<W: Write>(w: W, rows: &[SweepRow]) -> Result<(), SweepError> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    out.write_record(COLUMNS)?;
    for row in rows {
        out.serialize(row)?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<SweepRow>, SweepError> {
    let mut rdr = csv::Reader::from_reader(r);
    let headers = rdr.headers()?.clone();
    if let Some(unknown) = headers.iter().find(|h| !COLUMNS.contains(h)) {
        return Err(SweepError::UnknownColumn(unknown.to_string()));
    }
    if let Some(missing) = COLUMNS.iter().find(|c| !headers.iter().any(|h| h == **c)) {
        return Err(SweepError::MissingColumn(missing.to_string()));
    }
    let rows = rdr.deserialize().collect::<Result<Vec<SweepRow>, _>>()?;
    Ok(rows)
}
