use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "esq",
    version,
    about = "Squashed-entanglement bounds on two-way assisted quantum and private capacities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every applicable bound for one channel.
    Bound {
        #[command(subcommand)]
        channel: BoundChannel,
    },
    /// Evaluate curves over a one-parameter channel family.
    Sweep(SweepArgs),
    /// Datasets behind the standard comparison plots.
    Figure(FigureArgs),
    /// Run the oracle cross-checks and invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum BoundChannel {
    /// Phase-insensitive Gaussian channel.
    Gaussian {
        #[command(flatten)]
        channel: GaussianArgs,
        /// Mean photon number of the input; omit for no constraint.
        #[arg(long, allow_negative_numbers = true)]
        photons: Option<f64>,
        #[command(flatten)]
        output: BoundOutput,
    },
    /// d-dimensional erasure channel.
    Erasure {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[command(flatten)]
        output: BoundOutput,
    },
    /// Qubit amplitude damping channel.
    AmplitudeDamping {
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        #[command(flatten)]
        output: BoundOutput,
    },
    /// Qubit Pauli channel.
    Pauli {
        #[arg(long, allow_negative_numbers = true)]
        p0: f64,
        #[arg(long, allow_negative_numbers = true)]
        p1: f64,
        #[arg(long, allow_negative_numbers = true)]
        p2: f64,
        #[arg(long, allow_negative_numbers = true)]
        p3: f64,
        #[command(flatten)]
        output: BoundOutput,
    },
    /// Qubit depolarizing channel (1 - p)ρ + p·I/2.
    Depolarizing {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[command(flatten)]
        output: BoundOutput,
    },
}

/// One of: `--tau --nu`, `--tau --chi`, `--T --G`, `--eta [--nb]`,
/// `--nbar`, `--gain`.
#[derive(Debug, Clone, Default, Args)]
pub struct GaussianArgs {
    /// Loss/gain parameter τ.
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<f64>,
    /// Noise parameter ν.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    /// Dilation beamsplitter transmissivity.
    #[arg(long = "T", allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// Dilation two-mode squeezer gain.
    #[arg(long = "G", allow_negative_numbers = true)]
    pub g: Option<f64>,
    /// Thermal/pure-loss transmissivity η.
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    /// Thermal environment photon number (with --eta).
    #[arg(long, allow_negative_numbers = true)]
    pub nb: Option<f64>,
    /// Additive-noise variance n̄.
    #[arg(long, allow_negative_numbers = true)]
    pub nbar: Option<f64>,
    /// Quantum-limited amplifier gain.
    #[arg(long, allow_negative_numbers = true)]
    pub gain: Option<f64>,
    /// Excess noise χ (with --tau).
    #[arg(long, allow_negative_numbers = true)]
    pub chi: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct BoundOutput {
    #[arg(long, value_enum, default_value_t = BoundFormat::Table)]
    pub format: BoundFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    PureLoss,
    Thermal,
    Additive,
    Amplifier,
    AmplitudeDamping,
    Depolarizing,
    Erasure,
}

#[derive(Debug, Clone, Args)]
pub struct DataOutput {
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    pub format: DataFormat,
    /// Write the dataset here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write a simple line plot.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// First grid point; the default depends on the family.
    #[arg(long, allow_negative_numbers = true)]
    pub start: Option<f64>,
    /// Last grid point; the default depends on the family.
    #[arg(long, allow_negative_numbers = true)]
    pub stop: Option<f64>,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    /// Logarithmic grid spacing.
    #[arg(long)]
    pub log: bool,
    /// Thermal environment photon number (thermal family).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub nb: f64,
    /// Erasure dimension (erasure family).
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    /// Mean photon number of the input; omit for no constraint.
    #[arg(long, allow_negative_numbers = true)]
    pub photons: Option<f64>,
    /// Comma-separated curve names; default all.
    #[arg(long, value_delimiter = ',')]
    pub curves: Vec<String>,
    #[command(flatten)]
    pub output: DataOutput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    #[value(name = "fig1-ad")]
    Fig1Ad,
    #[value(name = "fig2-depol")]
    Fig2Depol,
    #[value(name = "fig3-additive")]
    Fig3Additive,
    #[value(name = "fig4-thermal")]
    Fig4Thermal,
    #[value(name = "fig5-pureloss-finite")]
    Fig5PurelossFinite,
    #[value(name = "fig6-thermal-finite")]
    Fig6ThermalFinite,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub id: FigureId,
    /// Points per curve.
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[command(flatten)]
    pub output: DataOutput,
}

pub const DEFAULT_SEED: u64 = 20_161_011;

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Seed of the randomized grids.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Perturb one closed-form eigenvalue by 1e-3 (negative control).
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}
