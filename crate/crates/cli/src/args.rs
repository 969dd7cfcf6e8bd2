use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pillowcase_core::algebra::FieldElem;
use pillowcase_core::obstruction::SubstitutionConvention;
use pillowcase_core::{ModuleVector, SlopeParam, TorusKnotParams};

#[derive(Parser, Debug)]
#[command(
    name = "pillowcase",
    version,
    about = "Slice-disk obstructions for generalized square knots"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for parallel sweeps (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallelism: Option<u16>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Sign sequence, slope word and relator of a slope.
    SlopeWord(SlopeWordArgs),
    /// Project the relator to Z_p * Z_q and decide triviality.
    Obstruct(ObstructArgs),
    /// Compare the kernels P_k1 and P_k2.
    Kernels(KernelsArgs),
    /// Blanchfield pairing of two square-knot module elements.
    Blanchfield(BlanchfieldArgs),
    /// Alexander module presentation of a satellite.
    Satellite(SatelliteArgs),
    /// Run the acceptance suite.
    VerifyAll(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct SlopeWordArgs {
    /// Slope c/d with c even.
    #[arg(long, allow_hyphen_values = true)]
    pub slope: SlopeParam,
    /// Also run the grid-walk oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct ObstructArgs {
    /// Torus knot parameters `p,q`.
    #[arg(long, value_parser = parse_pq)]
    pub pq: TorusKnotParams,
    #[arg(long, allow_hyphen_values = true)]
    pub slope: SlopeParam,
    /// A second slope; adds the kernel comparison certificate.
    #[arg(long, allow_hyphen_values = true)]
    pub against: Option<SlopeParam>,
    #[arg(long, value_enum, default_value_t = ConventionArg::Relator)]
    pub convention: ConventionArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// u -> x^b, v -> y^a
    Relator,
    /// u -> x^-b, v -> y^-a
    Presentation,
}

impl From<ConventionArg> for SubstitutionConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Relator => SubstitutionConvention::Relator,
            ConventionArg::Presentation => SubstitutionConvention::Presentation,
        }
    }
}

#[derive(Args, Debug)]
pub struct KernelsArgs {
    #[arg(long)]
    pub k1: u64,
    #[arg(long)]
    pub k2: u64,
}

#[derive(Args, Debug)]
pub struct BlanchfieldArgs {
    /// First element as `first,second`, e.g. `0,4t+5`.
    #[arg(long, value_parser = parse_module_vector, allow_hyphen_values = true)]
    pub x: ModuleVector,
    #[arg(long, value_parser = parse_module_vector, allow_hyphen_values = true)]
    pub y: ModuleVector,
}

#[derive(Args, Debug)]
pub struct SatelliteArgs {
    #[arg(long, value_enum)]
    pub pattern: NamedKnot,
    #[arg(long, value_enum)]
    pub companion: NamedKnot,
    /// Winding number of the pattern (nonzero).
    #[arg(long, allow_hyphen_values = true)]
    pub winding: i64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum NamedKnot {
    Unknot,
    Trefoil,
    MirrorTrefoil,
    SquareKnot,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest |c| in the obstruction sweep.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(2..))]
    pub sweep_cmax: i64,
    /// Largest p among the (p,q) pairs of the sweep.
    #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(i64).range(3..))]
    pub sweep_pmax: i64,
    /// Kernel grid bound.
    #[arg(long, default_value_t = 100)]
    pub kmax: u64,
}

pub fn parse_pq(s: &str) -> Result<TorusKnotParams, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected p,q (got `{s}`)"))?;
    let p: i64 = p.trim().parse().map_err(|_| format!("bad p in `{s}`"))?;
    let q: i64 = q.trim().parse().map_err(|_| format!("bad q in `{s}`"))?;
    TorusKnotParams::new(p, q).map_err(|e| e.to_string())
}

pub fn parse_module_vector(s: &str) -> Result<ModuleVector, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two coordinates `first,second` (got `{s}`)"))?;
    let a: FieldElem = a.parse().map_err(|e| format!("{e}"))?;
    let b: FieldElem = b.parse().map_err(|e| format!("{e}"))?;
    Ok(ModuleVector::new(a, b))
}
