use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use topoindex_core::verify::{AllowPattern, DEFAULT_SEED};
use topoindex_core::{Family, IndexKind};

#[derive(Debug, Parser)]
#[command(
    name = "topoindex",
    version,
    about = "Silicate-type lattice networks and their degree-based indices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of one network.
    Gen(GenArgs),
    /// Print one index of one network.
    Compute(ComputeArgs),
    /// Check partition tables and closed forms against generated graphs.
    Verify(VerifyArgs),
    /// Tabulate indices over a range of dimensions as CSV.
    Sweep(SweepArgs),
    /// Draw a sweep CSV as an SVG line chart.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: u32,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: u32,
    /// m1, m2, nk, pi1, pi2, pi1star or chi.
    #[arg(long)]
    pub index: IndexKind,
    /// Exponent of pi1; non-integral values give log10 only.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub c: f64,
    /// Exponent of chi.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma separated family codes, `all`, or empty for none.
    #[arg(long, default_value = "all")]
    pub family: FamilyList,
    #[arg(long, default_value = "1..25")]
    pub n_range: NRange,
    /// Comma separated exponents of pi1.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub c: Vec<u64>,
    /// Comma separated exponents of chi.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "2",
        allow_negative_numbers = true
    )]
    pub alpha: Vec<f64>,
    /// Mismatches to tolerate, e.g. `pi2,pi1star,chi` or `HX/chi[alpha=2]`.
    /// Every entry must be used.
    #[arg(long, value_delimiter = ',', value_parser = AllowPattern::parse)]
    pub expect_mismatch: Vec<AllowPattern>,
    /// Report file (JSON); stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Number of seeded random graphs for the identity check.
    #[arg(long, default_value_t = 100)]
    pub random_graphs: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub max_vertices: usize,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "all")]
    pub family: FamilyList,
    #[arg(long, default_value = "2..12")]
    pub n_range: NRange,
    /// Comma separated index codes.
    #[arg(long, default_value = "pi1,pi2,pi1star,chi")]
    pub index: IndexList,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Sweep CSV to draw.
    #[arg(long)]
    pub csv: PathBuf,
    /// Output SVG; stdout when omitted.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

/// Inclusive dimension range written `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl NRange {
    pub fn range(self) -> RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad bound `{t}` in `{s}`"))
        };
        let (start, end) = (parse(a)?, parse(b)?);
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Self { start, end })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyList(pub Vec<Family>);

impl FromStr for FamilyList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self(Family::ALL.to_vec()));
        }
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|e: topoindex_core::generators::UnknownFamily| e.to_string())
            })
            .collect::<Result<_, _>>()
            .map(Self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexList(pub Vec<IndexKind>);

impl FromStr for IndexList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|e: topoindex_core::indices::UnknownIndex| e.to_string())
            })
            .collect::<Result<_, _>>()
            .map(Self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..12".parse::<NRange>().unwrap().range(), 2..=12);
        assert_eq!("3..=3".parse::<NRange>().unwrap().range(), 3..=3);
        assert!("5..2".parse::<NRange>().is_err());
        assert!("5".parse::<NRange>().is_err());
        assert!("a..2".parse::<NRange>().is_err());
    }

    #[test]
    fn lists() {
        assert_eq!("all".parse::<FamilyList>().unwrap().0, Family::ALL);
        assert_eq!("".parse::<FamilyList>().unwrap().0, vec![]);
        assert_eq!(
            "hx, SL".parse::<FamilyList>().unwrap().0,
            vec![Family::Hexagonal, Family::Silicate]
        );
        assert!("SL,XX".parse::<FamilyList>().is_err());
        assert_eq!(
            "pi2,chi".parse::<IndexList>().unwrap().0,
            vec![IndexKind::MultSecond, IndexKind::SumConnectivity]
        );
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
