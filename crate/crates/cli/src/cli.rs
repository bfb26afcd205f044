use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypinertia_core::assembler::{Grading, Mode};

use crate::render::Format;
use crate::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "hypinertia",
    version,
    about = "Inertia stacks and orbifold cohomology of hyperelliptic moduli"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for sweeps (output does not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List twisted sectors of [M_0,n/S_n] or H_g.
    Sectors(SectorsArgs),
    /// Orbifold Poincaré (or stringy Chow) polynomial with per-sector rows.
    Poincare(PoincareArgs),
    /// Printed exponents against recomputed ages, plus total dimensions.
    Reconcile(ReconcileArgs),
    /// Check every law for g in a range; exit 1 on the first counterexample.
    Verify(VerifyArgs),
    /// Sectors, polynomials and reports for a range of g, as JSON.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stack {
    M0n,
    Hyp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Fp,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Fp => Mode::FirstPrinciples,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GradingArg {
    Real,
    Complex,
}

impl From<GradingArg> for Grading {
    fn from(g: GradingArg) -> Self {
        match g {
            GradingArg::Real => Grading::Real,
            GradingArg::Complex => Grading::Complex,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write to PATH instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// `--g G` alone, `--g-max M` alone (from 2), or both for `G..=M`.
#[derive(Debug, Args)]
pub struct GenusArgs {
    /// Genus (first genus of a range when --g-max is given).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub g: Option<u64>,
    /// Last genus of the range.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub g_max: Option<u64>,
}

impl GenusArgs {
    pub fn range(&self) -> Result<(RangeInclusive<u64>, bool), Failure> {
        index_range(self.g, self.g_max, 2, "g")
    }
}

fn index_range(
    start: Option<u64>,
    end: Option<u64>,
    floor: u64,
    name: &str,
) -> Result<(RangeInclusive<u64>, bool), Failure> {
    match (start, end) {
        (Some(s), None) => Ok((s..=s, false)),
        (None, Some(e)) => Ok((floor..=e, true)),
        (Some(s), Some(e)) if s <= e => Ok((s..=e, true)),
        (Some(s), Some(e)) => Err(Failure::Usage(format!(
            "empty range: --{name} {s} exceeds --{name}-max {e}"
        ))),
        (None, None) => Err(Failure::Usage(format!(
            "one of --{name} or --{name}-max is required"
        ))),
    }
}

#[derive(Debug, Args)]
pub struct SectorsArgs {
    #[arg(long, value_enum, default_value = "hyp")]
    pub stack: Stack,
    #[command(flatten)]
    pub genus: GenusArgs,
    /// Number of marked points, for --stack m0n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub n: Option<u64>,
    /// Last n of the range.
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub n_max: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl SectorsArgs {
    pub fn n_range(&self) -> Result<(RangeInclusive<u64>, bool), Failure> {
        index_range(self.n, self.n_max, 3, "n")
    }
}

#[derive(Debug, Args)]
pub struct PoincareArgs {
    #[command(flatten)]
    pub genus: GenusArgs,
    #[arg(long, value_enum, default_value = "paper")]
    pub mode: ModeArg,
    /// Degree shift per unit of age; first-principles mode only.
    #[arg(long, value_enum, default_value = "real")]
    pub grading: GradingArg,
    /// Replace every coarse Poincaré polynomial by 1.
    #[arg(long)]
    pub stringy: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReconcileArgs {
    #[command(flatten)]
    pub genus: GenusArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub g_max: u64,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    pub g_min: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Adds 1/N to the age of the first sector with N > 2 in every genus.
    #[arg(long, hide = true)]
    pub inject_age_fault: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub genus: GenusArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}
