//! Degree-based topological indices with exact arithmetic.
//!
//! Each index has a graph entry point and a spectrum entry point. The graph
//! form tallies the degree (pair) spectrum and delegates, so closed-form
//! partition tables can be pushed through the very same definitions.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::factored::{big_to_f64, FactoredInteger};
use crate::graph::{
    degree_pair_spectrum, degree_spectrum, DegreePairSpectrum, DegreeSpectrum, Graph,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("{index} is undefined on graphs with isolated vertices")]
    IsolatedVertex { index: &'static str },
}

/// Value of an index: a factored product, an exact integer sum, or a
/// floating value for non-integral exponents.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Factored(FactoredInteger),
    Integer(BigInt),
    Real(f64),
}

impl IndexValue {
    pub fn log10(&self) -> f64 {
        match self {
            IndexValue::Factored(v) => v.log10(),
            IndexValue::Integer(v) => bigint_log10(v),
            IndexValue::Real(v) => v.log10(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, IndexValue::Real(_))
    }

    /// Decimal expansion when exact and at most `max_digits` digits long
    /// (sign excluded).
    pub fn exact_decimal(&self, max_digits: usize) -> Option<String> {
        match self {
            IndexValue::Factored(v) => v.to_decimal_within(max_digits),
            IndexValue::Integer(v) => {
                let s = v.to_string();
                (s.trim_start_matches('-').len() <= max_digits).then_some(s)
            }
            IndexValue::Real(_) => None,
        }
    }

    pub fn as_factored(&self) -> Option<&FactoredInteger> {
        match self {
            IndexValue::Factored(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            IndexValue::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Factored(v) => 10f64.powf(v.log10()),
            IndexValue::Integer(v) => v.to_f64().unwrap_or(f64::INFINITY),
            IndexValue::Real(v) => *v,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Factored(v) => write!(f, "{v}"),
            IndexValue::Integer(v) => write!(f, "{v}"),
            IndexValue::Real(v) => write!(f, "{v:?}"),
        }
    }
}

/// `log10 |v|`; `-inf` for zero.
pub fn bigint_log10(v: &BigInt) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    biguint_log10(v.magnitude())
}

pub fn biguint_log10(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 1000 {
        return big_to_f64(v).log10();
    }
    // keep the top 64 bits and account for the rest with a power of two
    let shift = bits - 64;
    let top = (v >> shift).to_f64().expect("64-bit value fits f64");
    top.log10() + shift as f64 * 2f64.log10()
}

/// Returns `Some(k)` when `alpha` is a non-negative integer.
pub fn integral_exponent(alpha: f64) -> Option<u32> {
    (alpha >= 0.0 && alpha.fract() == 0.0 && alpha <= f64::from(u32::MAX)).then_some(alpha as u32)
}

/// The indices this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexKind {
    FirstZagreb,
    SecondZagreb,
    NarumiKatayama,
    /// `Π_{1,c}`
    MultFirst,
    /// `Π_2`
    MultSecond,
    /// `Π_1^*`
    MultFirstStar,
    /// `χ_α`
    SumConnectivity,
}

impl IndexKind {
    pub const ALL: [IndexKind; 7] = [
        IndexKind::FirstZagreb,
        IndexKind::SecondZagreb,
        IndexKind::NarumiKatayama,
        IndexKind::MultFirst,
        IndexKind::MultSecond,
        IndexKind::MultFirstStar,
        IndexKind::SumConnectivity,
    ];

    /// The four indices with published closed forms, in chart order.
    pub const MULTIPLICATIVE_AND_CHI: [IndexKind; 4] = [
        IndexKind::MultFirst,
        IndexKind::MultSecond,
        IndexKind::SumConnectivity,
        IndexKind::MultFirstStar,
    ];

    pub fn code(self) -> &'static str {
        match self {
            IndexKind::FirstZagreb => "m1",
            IndexKind::SecondZagreb => "m2",
            IndexKind::NarumiKatayama => "nk",
            IndexKind::MultFirst => "pi1",
            IndexKind::MultSecond => "pi2",
            IndexKind::MultFirstStar => "pi1star",
            IndexKind::SumConnectivity => "chi",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            IndexKind::FirstZagreb => "first Zagreb index M1",
            IndexKind::SecondZagreb => "second Zagreb index M2",
            IndexKind::NarumiKatayama => "Narumi-Katayama index NK",
            IndexKind::MultFirst => "first multiplicative Zagreb index Pi1,c",
            IndexKind::MultSecond => "second multiplicative Zagreb index Pi2",
            IndexKind::MultFirstStar => "multiplicative first Zagreb index Pi1*",
            IndexKind::SumConnectivity => "general sum-connectivity index chi_alpha",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown index `{0}` (expected one of m1, m2, nk, pi1, pi2, pi1star, chi)")]
pub struct UnknownIndex(pub String);

impl std::str::FromStr for IndexKind {
    type Err = UnknownIndex;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownIndex(s.to_string()))
    }
}

/// Exponents of the parametrized indices: `c` for `Π_{1,c}`, `alpha` for `χ_α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub c: u64,
    pub alpha: f64,
}

impl Default for Params {
    fn default() -> Self {
        Self { c: 2, alpha: 2.0 }
    }
}

/// Evaluates any index on a graph.
pub fn compute(g: &Graph, kind: IndexKind, params: Params) -> Result<IndexValue, IndexError> {
    let ds = degree_spectrum(g);
    let ps = degree_pair_spectrum(g);
    compute_from_spectra(&ds, &ps, kind, params)
}

/// Evaluates any index from a degree spectrum and a pair spectrum.
pub fn compute_from_spectra(
    ds: &DegreeSpectrum,
    ps: &DegreePairSpectrum,
    kind: IndexKind,
    params: Params,
) -> Result<IndexValue, IndexError> {
    Ok(match kind {
        IndexKind::FirstZagreb => IndexValue::Integer(spectra::first_zagreb(ds).into()),
        IndexKind::SecondZagreb => IndexValue::Integer(spectra::second_zagreb(ps).into()),
        IndexKind::NarumiKatayama => IndexValue::Factored(spectra::narumi_katayama(ds)?),
        IndexKind::MultFirst => IndexValue::Factored(spectra::mult_zagreb_1(ds, params.c)?),
        IndexKind::MultSecond => IndexValue::Factored(spectra::mult_zagreb_2(ds, ps)?),
        IndexKind::MultFirstStar => IndexValue::Factored(spectra::mult_zagreb_1_star(ps)),
        IndexKind::SumConnectivity => spectra::sum_connectivity(ps, params.alpha),
    })
}

/// Spectrum-level definitions.
pub mod spectra {
    use super::*;

    fn no_isolated(ds: &DegreeSpectrum, index: &'static str) -> Result<(), IndexError> {
        if ds.count(0) > 0 {
            Err(IndexError::IsolatedVertex { index })
        } else {
            Ok(())
        }
    }

    fn factor(v: u64) -> FactoredInteger {
        FactoredInteger::from_u64(v).expect("positive base")
    }

    pub fn first_zagreb(ds: &DegreeSpectrum) -> BigUint {
        ds.iter()
            .map(|(d, c)| BigUint::from(u64::from(d) * u64::from(d)) * c)
            .sum()
    }

    pub fn second_zagreb(ps: &DegreePairSpectrum) -> BigUint {
        ps.iter()
            .map(|((i, j), c)| BigUint::from(u64::from(i) * u64::from(j)) * c)
            .sum()
    }

    pub fn narumi_katayama(ds: &DegreeSpectrum) -> Result<FactoredInteger, IndexError> {
        no_isolated(ds, "NK")?;
        Ok(ds.iter().fold(FactoredInteger::one(), |acc, (d, c)| {
            acc * factor(d.into()).pow(c)
        }))
    }

    pub fn mult_zagreb_1(ds: &DegreeSpectrum, c: u64) -> Result<FactoredInteger, IndexError> {
        no_isolated(ds, "Pi1")?;
        Ok(ds.iter().fold(FactoredInteger::one(), |acc, (d, count)| {
            acc * factor(d.into()).pow(BigUint::from(count) * c)
        }))
    }

    /// Edge form: `Π_{uv} d(u) d(v)`.
    pub fn mult_zagreb_2(
        ds: &DegreeSpectrum,
        ps: &DegreePairSpectrum,
    ) -> Result<FactoredInteger, IndexError> {
        no_isolated(ds, "Pi2")?;
        Ok(ps.iter().fold(FactoredInteger::one(), |acc, ((i, j), c)| {
            acc * factor(u64::from(i) * u64::from(j)).pow(c)
        }))
    }

    /// Vertex form: `Π_v d(v)^{d(v)}`.
    pub fn mult_zagreb_2_vertex_form(ds: &DegreeSpectrum) -> Result<FactoredInteger, IndexError> {
        no_isolated(ds, "Pi2")?;
        Ok(ds.iter().fold(FactoredInteger::one(), |acc, (d, c)| {
            acc * factor(d.into()).pow(BigUint::from(c) * d)
        }))
    }

    pub fn mult_zagreb_1_star(ps: &DegreePairSpectrum) -> FactoredInteger {
        ps.iter().fold(FactoredInteger::one(), |acc, ((i, j), c)| {
            acc * factor(u64::from(i) + u64::from(j)).pow(c)
        })
    }

    /// `Σ m_{i,j} (i + j)^k`, exact.
    pub fn sum_connectivity_exact(ps: &DegreePairSpectrum, k: u32) -> BigUint {
        ps.iter()
            .map(|((i, j), c)| BigUint::from(u64::from(i) + u64::from(j)).pow(k) * c)
            .sum()
    }

    /// `Σ m_{i,j} (i + j)^alpha`, one floating power per distinct pair.
    pub fn sum_connectivity_real(ps: &DegreePairSpectrum, alpha: f64) -> f64 {
        ps.iter()
            .map(|((i, j), c)| c as f64 * f64::from(i + j).powf(alpha))
            .sum()
    }

    pub fn sum_connectivity(ps: &DegreePairSpectrum, alpha: f64) -> IndexValue {
        match integral_exponent(alpha) {
            Some(k) => IndexValue::Integer(BigInt::from(sum_connectivity_exact(ps, k))),
            None => IndexValue::Real(sum_connectivity_real(ps, alpha)),
        }
    }
}

/// `M1 = Σ_v d(v)^2`.
pub fn first_zagreb(g: &Graph) -> BigUint {
    spectra::first_zagreb(&degree_spectrum(g))
}

/// `M2 = Σ_{uv} d(u) d(v)`.
pub fn second_zagreb(g: &Graph) -> BigUint {
    spectra::second_zagreb(&degree_pair_spectrum(g))
}

/// `NK = Π_v d(v)`.
pub fn narumi_katayama(g: &Graph) -> Result<FactoredInteger, IndexError> {
    spectra::narumi_katayama(&degree_spectrum(g))
}

/// First multiplicative Zagreb index `Π_{1,c} = Π_v d(v)^c`.
pub fn mult_zagreb_1(g: &Graph, c: u64) -> Result<FactoredInteger, IndexError> {
    spectra::mult_zagreb_1(&degree_spectrum(g), c)
}

/// `log10 Π_{1,c}` for a real exponent `c`.
pub fn mult_zagreb_1_log10(g: &Graph, c: f64) -> Result<f64, IndexError> {
    Ok(c * narumi_katayama(g)?.log10())
}

/// Second multiplicative Zagreb index `Π_2 = Π_{uv} d(u) d(v)`.
pub fn mult_zagreb_2(g: &Graph) -> Result<FactoredInteger, IndexError> {
    spectra::mult_zagreb_2(&degree_spectrum(g), &degree_pair_spectrum(g))
}

/// `Π_2` through its vertex form `Π_v d(v)^{d(v)}`.
pub fn mult_zagreb_2_vertex_form(g: &Graph) -> Result<FactoredInteger, IndexError> {
    spectra::mult_zagreb_2_vertex_form(&degree_spectrum(g))
}

/// `Π_1^* = Π_{uv} (d(u) + d(v))`. The empty product is one.
pub fn mult_zagreb_1_star(g: &Graph) -> FactoredInteger {
    spectra::mult_zagreb_1_star(&degree_pair_spectrum(g))
}

/// General sum-connectivity index `χ_α = Σ_{uv} (d(u) + d(v))^α`.
///
/// Exact for non-negative integer `alpha`, floating otherwise.
pub fn sum_connectivity(g: &Graph, alpha: f64) -> IndexValue {
    spectra::sum_connectivity(&degree_pair_spectrum(g), alpha)
}
