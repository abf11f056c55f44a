//! Command-line front end for `esq-core`.
//!
//! Exit codes: 0 on success, 1 for usage and parameter errors, 2 for
//! numeric failures and failed verification.

pub mod args;
pub mod bound;
pub mod dataset;
pub mod format;
pub mod output;
pub mod svg;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use esq_core::{Error, PhaseInsensitiveChannel};

use args::{Cli, Command, GaussianArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0} verification suite(s) failed")]
    Verify(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Core(e) if is_input_error(e) => 1,
            CliError::Core(_) | CliError::Verify(_) => 2,
        }
    }
}

/// True for errors caused by the caller's parameters, as opposed to
/// failures of the numerics.
pub fn is_input_error(e: &Error) -> bool {
    !(e.is_numeric()
        || matches!(
            e,
            Error::Unphysical(_) | Error::NotSymplectic(_) | Error::NotSymmetric(_)
        ))
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                1
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Bound { channel } => bound::cmd_bound(channel, stdout),
        Command::Sweep(args) => output::cmd_sweep(args, stdout),
        Command::Figure(args) => output::cmd_figure(args, stdout),
        Command::Verify(args) => verify::cmd_verify(&args, stdout, stderr),
    }
}

/// Builds the channel from exactly one of the accepted flag groups.
pub fn resolve_gaussian(a: &GaussianArgs) -> Result<PhaseInsensitiveChannel, CliError> {
    let given = [
        ("--tau", a.tau.is_some()),
        ("--nu", a.nu.is_some()),
        ("--T", a.t.is_some()),
        ("--G", a.g.is_some()),
        ("--eta", a.eta.is_some()),
        ("--nb", a.nb.is_some()),
        ("--nbar", a.nbar.is_some()),
        ("--gain", a.gain.is_some()),
        ("--chi", a.chi.is_some()),
    ];
    let set: Vec<&str> = given.iter().filter(|(_, on)| *on).map(|(n, _)| *n).collect();
    let ch = match (a.tau, a.nu, a.t, a.g, a.eta, a.nb, a.nbar, a.gain, a.chi) {
        (Some(tau), Some(nu), None, None, None, None, None, None, None) => {
            PhaseInsensitiveChannel::from_tau_nu(tau, nu)
        }
        (Some(tau), None, None, None, None, None, None, None, Some(chi)) => PhaseInsensitiveChannel::from_chi(tau, chi),
        (None, None, Some(t), Some(g), None, None, None, None, None) => {
            PhaseInsensitiveChannel::from_transmissivity_gain(t, g)
        }
        (None, None, None, None, Some(eta), None, None, None, None) => PhaseInsensitiveChannel::pure_loss(eta),
        (None, None, None, None, Some(eta), Some(nb), None, None, None) => PhaseInsensitiveChannel::thermal(eta, nb),
        (None, None, None, None, None, None, Some(nbar), None, None) => PhaseInsensitiveChannel::additive(nbar),
        (None, None, None, None, None, None, None, Some(gain), None) => PhaseInsensitiveChannel::amplifier(gain),
        _ => {
            let got = if set.is_empty() {
                "none".to_string()
            } else {
                set.join(" ")
            };
            return Err(CliError::Usage(format!(
                "give one of: --tau --nu | --tau --chi | --T --G | --eta [--nb] | --nbar | --gain (got {got})"
            )));
        }
    };
    Ok(ch?)
}
