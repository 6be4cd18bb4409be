use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use curvosc::classical::ClassicalState;
use curvosc::spectrum::QuantumNumbers;
use curvosc_cli::{
    cmd_census, cmd_classical, cmd_figures, cmd_spectrum, cmd_verify, cmd_wavefn, stamp_defaults,
    CliError, CliResult, OutputFormat, Report, SweepConfig,
};

/// Harmonic oscillator on spaces of constant curvature.
#[derive(Parser)]
#[command(name = "curvosc", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energies, degeneracies and gaps of the levels 0..=n-max.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
    /// Bound-state census (finite on the hyperbolic space).
    Census {
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        /// Levels listed when the census is infinite.
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
    /// Normalized radial wavefunction table.
    Wavefn {
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        #[arg(long, default_value_t = 0)]
        nr: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        /// Magnetic number; the radial table does not depend on it.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value_t = 401)]
        samples: usize,
    },
    /// Compare closed forms with the finite-difference and quadrature oracles.
    Verify {
        /// Curvature values (repeat or comma-separate).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        kappa: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        l: u32,
        /// Largest principal number for normalization checks.
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        /// Oracle grid size N.
        #[arg(long, default_value_t = 4000)]
        grid: usize,
        /// Relative tolerance for eigenvalues.
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        /// Relative tolerance for normalization integrals.
        #[arg(long, default_value_t = 1e-8)]
        quad_tol: f64,
    },
    /// Integrate a classical trajectory and report the drift of the constants
    /// of motion.
    Classical {
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        pr: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        ptheta: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        pphi: f64,
        #[arg(long, default_value_t = 100.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
    },
    /// Data behind figure 1 (potential), 2 and 3 (radial functions) or 4
    /// (energies against n).
    Figures { which: u32 },
}

fn run(cli: Cli) -> CliResult<i32> {
    let (report, code): (Report, i32) = match cli.command {
        Command::Spectrum { kappa, n_max } => (cmd_spectrum(kappa, n_max)?, 0),
        Command::Census { kappa, n_max } => (cmd_census(kappa, n_max)?, 0),
        Command::Wavefn {
            kappa,
            nr,
            l,
            m,
            samples,
        } => {
            QuantumNumbers::new(nr, l, m)
                .map_err(|_| CliError::Usage(format!("need |m| <= l, got m = {m}, l = {l}")))?;
            let mut rep = cmd_wavefn(kappa, nr, l, samples)?;
            rep.param("m", m);
            (rep, 0)
        }
        Command::Verify {
            kappa,
            l,
            n_max,
            grid,
            tol,
            quad_tol,
        } => {
            let defaults = SweepConfig::default();
            let cfg = SweepConfig {
                kappa_list: if kappa.is_empty() {
                    defaults.kappa_list.clone()
                } else {
                    kappa
                },
                l_max: l,
                n_max,
                grid_size: grid,
                eig_tol: tol,
                quad_tol,
                ..defaults
            };
            let out = cmd_verify(&cfg)?;
            (out.report, out.exit_code)
        }
        Command::Classical {
            kappa,
            r,
            theta,
            phi,
            pr,
            ptheta,
            pphi,
            t_end,
            dt,
        } => {
            let init = ClassicalState {
                r,
                theta,
                phi,
                p_r: pr,
                p_theta: ptheta,
                p_phi: pphi,
            };
            (cmd_classical(kappa, init, t_end, dt)?.report, 0)
        }
        Command::Figures { which } => (cmd_figures(which)?, 0),
    };
    let mut report = report;
    stamp_defaults(&mut report);
    let text = report.render(cli.format)?;
    match cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match &e {
                CliError::Io(_) | CliError::Json(_) => 1,
                _ => e.exit_code(),
            };
            ExitCode::from(code as u8)
        }
    }
}
