//! Report generators behind the `curvosc` command-line tool. Each `cmd_*`
//! function returns a [`Report`] (plus an exit status where relevant); the
//! binary only parses flags and writes the result.

pub mod output;
pub mod verify;

use curvosc::classical::{self, ClassicalState};
use curvosc::kappa;
use curvosc::spectrum::{self, BoundStateCensus, QuantumNumbers};
use curvosc::wavefunctions::{self, RadialEigenstate};
use curvosc::{Curvature, SignClass};
use thiserror::Error;

pub use output::{Cell, OutputFormat, Report};
pub use verify::{cmd_verify, SweepConfig, VerifyOutcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] curvosc::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for bad flags, 3 for numerical non-convergence, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use curvosc::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(E::NonConvergence(_)) => 3,
            CliError::Core(
                E::InvalidArgument(_)
                | E::InvalidQuantumNumbers { .. }
                | E::InvalidScales
                | E::Domain { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn curvature(k: f64) -> CliResult<Curvature> {
    Curvature::new(k).map_err(|_| CliError::Usage(format!("invalid curvature {k}")))
}

/// Add the sweep defaults (oracle grid and tolerances) to a report header
/// unless the report already states them.
pub fn stamp_defaults(rep: &mut Report) {
    if rep.parameters.iter().any(|(k, _)| k == "grid") {
        return;
    }
    let d = SweepConfig::default();
    rep.param("grid", d.grid_size)
        .param("eigenvalue_tolerance", d.eig_tol)
        .param("quadrature_tolerance", d.quad_tol);
}

fn fmt_kappa(k: f64) -> String {
    format!("{k}")
}

/// Energy, degeneracy and gap of the levels `0..=n_max`.
pub fn cmd_spectrum(k: f64, n_max: u32) -> CliResult<Report> {
    let curv = curvature(k)?;
    let mut rep = Report::new(
        "oscillator energy levels",
        &["n", "energy", "degeneracy", "gap", "status"],
    );
    rep.param("kappa", fmt_kappa(k)).param("n_max", n_max);
    if let Some(cut) = spectrum::hyperbolic_cutoff(curv) {
        rep.note(format!("bound levels satisfy n < 1/|kappa| - 1 = {cut}"));
    }
    for n in 0..=n_max {
        let status = if spectrum::is_admissible(curv, n) {
            "bound"
        } else if spectrum::bound_state_census(curv)
            .finite()
            .and_then(|c| c.marginal_n)
            == Some(n)
        {
            "marginal"
        } else {
            "inadmissible"
        };
        let gap = if n < n_max {
            spectrum::energy_gap(curv, n).ok()
        } else {
            None
        };
        rep.push(vec![
            n.into(),
            spectrum::level_energy(curv, n).into(),
            spectrum::degeneracy(n).into(),
            gap.into(),
            status.into(),
        ]);
    }
    Ok(rep)
}

trait CensusExt {
    fn finite(&self) -> Option<&spectrum::FiniteCensus>;
}

impl CensusExt for BoundStateCensus {
    fn finite(&self) -> Option<&spectrum::FiniteCensus> {
        match self {
            BoundStateCensus::Finite(c) => Some(c),
            BoundStateCensus::Unbounded(_) => None,
        }
    }
}

/// Bound-state census. On the sphere and in flat space every level is bound
/// and the first `n_max + 1` are listed.
pub fn cmd_census(k: f64, n_max: u32) -> CliResult<Report> {
    let curv = curvature(k)?;
    let mut rep = Report::new("bound-state census", &["n", "energy", "degeneracy"]);
    rep.param("kappa", fmt_kappa(k));
    match spectrum::bound_state_census(curv) {
        BoundStateCensus::Unbounded(levels) => {
            rep.param("n_max", n_max);
            rep.note("infinitely many bound levels; the first n_max + 1 are listed");
            for l in levels.take(n_max as usize + 1) {
                rep.push(vec![l.n.into(), l.energy.into(), l.degeneracy.into()]);
            }
        }
        BoundStateCensus::Finite(c) => {
            rep.param("continuum_threshold", c.continuum_threshold);
            rep.param("bound_levels", c.levels.len());
            rep.param(
                "n_max",
                c.n_max.map_or("none".to_owned(), |n| n.to_string()),
            );
            rep.param("total_states", c.total_states);
            if c.levels.is_empty() {
                rep.note("no bound states: the cutoff 1/|kappa| - 1 is not positive");
            }
            if let Some(m) = c.marginal_n {
                rep.note(format!(
                    "level n = {m} has energy {} equal to the continuum threshold; its \
                     normalization integral diverges, so it is not counted. Counting it \
                     (inclusive reading n <= 1/|kappa| - 1) would give {} bound levels \
                     instead of {}",
                    spectrum::level_energy(curv, m),
                    c.levels.len() + 1,
                    c.levels.len()
                ));
            }
            for l in &c.levels {
                rep.push(vec![l.n.into(), l.energy.into(), l.degeneracy.into()]);
            }
        }
    }
    Ok(rep)
}

/// Radial table `(r, R, measure R^2, envelope)` of one normalized state.
pub fn cmd_wavefn(k: f64, n_r: u32, l: u32, samples: usize) -> CliResult<Report> {
    if samples < 2 {
        return Err(CliError::Usage("need at least two samples".into()));
    }
    let curv = curvature(k)?;
    let state = RadialEigenstate::new(curv, QuantumNumbers::radial(n_r, l))?;
    let r_end = match curv.sign_class() {
        SignClass::Spherical => curv.radial_boundary(),
        _ => {
            let outer = state.nodes().last().copied().unwrap_or(0.0);
            (2.0 * outer).max((2.0 * state.energy).sqrt() + 6.0)
        }
    };
    let mut rep = Report::new("radial wavefunction", &["r", "R", "weight_R2", "envelope"]);
    rep.param("kappa", fmt_kappa(k))
        .param("n_r", n_r)
        .param("l", l)
        .param("samples", samples)
        .param("energy", state.energy)
        .param("norm_constant", state.norm_constant)
        .param("r_end", r_end);
    for i in 0..samples {
        let r = r_end * i as f64 / (samples - 1) as f64;
        let r = if i + 1 == samples { r_end } else { r };
        let rad = state.radial_function(r)?;
        let weight = if curv.contains(r) {
            kappa::measure_weight(curv, r)? * rad * rad
        } else {
            0.0
        };
        rep.push(vec![
            r.into(),
            rad.into(),
            weight.into(),
            wavefunctions::envelope(curv, r).into(),
        ]);
    }
    Ok(rep)
}

const FIGURE_SAMPLES: usize = 1201;

/// Unnormalized radial curve `P(k r^2) (1 - k r^2)^{1/(2k)}` for `n_r = 2`,
/// `l = 0`, as plotted in the figures.
fn figure_curve(rep: &mut Report, k: f64, r_max: f64) -> CliResult<()> {
    let curv = curvature(k)?;
    let qn = QuantumNumbers::radial(2, 0);
    let coeffs = wavefunctions::radial_polynomial(curv, qn)?;
    let var = wavefunctions::PolyVariable::of(curv).scale(curv);
    let end = r_max.min(curv.radial_boundary());
    for i in 0..FIGURE_SAMPLES {
        let r = end * i as f64 / (FIGURE_SAMPLES - 1) as f64;
        let poly = curvosc::special::horner(&coeffs, var * r * r);
        let value = poly * wavefunctions::envelope(curv, r);
        rep.push(vec![fmt_kappa(k).into(), r.into(), value.into()]);
    }
    Ok(())
}

/// Data behind the four figures: 1 the potential, 2 and 3 the `n_r = 2`
/// radial functions for positive and negative curvature, 4 the energies
/// against `n`.
pub fn cmd_figures(which: u32) -> CliResult<Report> {
    match which {
        1 => {
            let mut rep = Report::new("potential U(r)", &["kappa", "r", "U"]);
            let ks = [0.5, 0.25, 0.0, -0.25, -0.5];
            rep.param("kappa_values", format!("{ks:?}"));
            rep.note("rows beyond the spherical wall r = 1/sqrt(kappa) are omitted");
            for &k in &ks {
                let curv = curvature(k)?;
                for i in 0..FIGURE_SAMPLES {
                    let r = 4.0 * i as f64 / (FIGURE_SAMPLES - 1) as f64;
                    if let Ok(u) = kappa::potential(curv, r) {
                        rep.push(vec![fmt_kappa(k).into(), r.into(), u.into()]);
                    }
                }
            }
            Ok(rep)
        }
        2 | 3 => {
            let ks: [f64; 3] = if which == 2 {
                [0.0, 0.1, 0.2]
            } else {
                [0.0, -0.1, -0.2]
            };
            let r_max = if which == 2 { 5.0 } else { 8.0 };
            let mut rep = Report::new(
                format!("radial functions n_r = 2, l = 0 (figure {which})"),
                &["kappa", "rho", "value"],
            );
            rep.param("kappa_values", format!("{ks:?}"))
                .param("rho_max", r_max)
                .param("samples_per_curve", FIGURE_SAMPLES);
            rep.note("unnormalized: polynomial times envelope, 1F1(-2; 3/2; rho^2) exp(-rho^2/2) at kappa = 0");
            for &k in &ks {
                figure_curve(&mut rep, k, r_max)?;
            }
            Ok(rep)
        }
        4 => {
            let ks = [0.5, 0.25, 0.0, -0.25, -0.5];
            let mut rep = Report::new("energy against n", &["kappa", "n", "energy", "bound"]);
            rep.param("kappa_values", format!("{ks:?}"))
                .param("n_max", 8);
            for &k in &ks {
                let curv = curvature(k)?;
                let bound = (0..=8)
                    .filter(|&n| spectrum::is_admissible(curv, n))
                    .count();
                if curv.sign_class() == SignClass::Hyperbolic {
                    rep.note(format!(
                        "kappa = {k}: {bound} bound levels (strict n < 1/|kappa| - 1; the \
                         marginal level at the continuum threshold is not bound)"
                    ));
                }
                for n in 0..=8 {
                    rep.push(vec![
                        fmt_kappa(k).into(),
                        n.into(),
                        spectrum::level_energy(curv, n).into(),
                        spectrum::is_admissible(curv, n).into(),
                    ]);
                }
            }
            Ok(rep)
        }
        _ => Err(CliError::Usage(format!(
            "no figure {which}; choose 1, 2, 3 or 4"
        ))),
    }
}

/// Trajectory table of a classical run with the full integration result.
pub struct ClassicalOutcome {
    pub report: Report,
    pub trajectory: classical::Trajectory,
}

pub fn cmd_classical(
    k: f64,
    initial: ClassicalState,
    t_end: f64,
    dt: f64,
) -> CliResult<ClassicalOutcome> {
    let curv = curvature(k)?;
    let traj = classical::integrate_trajectory(curv, &initial, t_end, dt)?;
    let mut rep = Report::new(
        "classical trajectory",
        &[
            "t", "r", "theta", "phi", "p_r", "p_theta", "p_phi", "H", "J1", "J2", "J3",
        ],
    );
    rep.param("kappa", fmt_kappa(k))
        .param("r", initial.r)
        .param("theta", initial.theta)
        .param("phi", initial.phi)
        .param("p_r", initial.p_r)
        .param("p_theta", initial.p_theta)
        .param("p_phi", initial.p_phi)
        .param("t_end", t_end)
        .param("dt", dt)
        .param("integrator", "RK4, Cartesian chart");
    let d = traj.drift;
    rep.note(format!("drift H = {:.3e}", d.h));
    for i in 0..3 {
        rep.note(format!("drift J{} = {:.3e}", i + 1, d.j[i]));
    }
    for i in 0..3 {
        for j in i..3 {
            rep.note(format!("drift F{}{} = {:.3e}", i + 1, j + 1, d.f[i][j]));
        }
    }
    if !traj.bound {
        let radii: Vec<f64> = traj.samples.iter().map(|s| s.state.radius()).collect();
        let monotone = radii.windows(2).all(|w| w[1] >= w[0]);
        rep.note(format!(
            "unbound: H = {} is not below the potential asymptote {}{}",
            traj.initial.h,
            kappa::potential_asymptote(curv),
            if monotone {
                "; r grows monotonically"
            } else {
                ""
            }
        ));
    }
    for s in &traj.samples {
        let sph = s.state.to_spherical();
        rep.push(vec![
            s.t.into(),
            sph.r.into(),
            sph.theta.into(),
            sph.phi.into(),
            sph.p_r.into(),
            sph.p_theta.into(),
            sph.p_phi.into(),
            s.conserved.h.into(),
            s.conserved.j[0].into(),
            s.conserved.j[1].into(),
            s.conserved.j[2].into(),
        ]);
    }
    Ok(ClassicalOutcome {
        report: rep,
        trajectory: traj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_spectrum_rows() {
        let rep = cmd_spectrum(0.0, 2).unwrap();
        assert_eq!(rep.floats("energy"), vec![Some(1.5), Some(2.5), Some(3.5)]);
        assert_eq!(
            rep.floats("degeneracy"),
            vec![Some(1.0), Some(3.0), Some(6.0)]
        );
        assert_eq!(rep.floats("gap"), vec![Some(1.0), Some(1.0), None]);
    }

    #[test]
    fn spherical_spectrum_rows() {
        let rep = cmd_spectrum(0.25, 2).unwrap();
        assert_eq!(
            rep.floats("energy"),
            vec![Some(1.5), Some(2.875), Some(4.5)]
        );
    }

    #[test]
    fn hyperbolic_spectrum_status() {
        let rep = cmd_spectrum(-0.5, 3).unwrap();
        let i = rep.column("status").unwrap();
        let status: Vec<&str> = rep.rows.iter().map(|r| r[i].as_str().unwrap()).collect();
        assert_eq!(
            status,
            ["bound", "marginal", "inadmissible", "inadmissible"]
        );
    }

    #[test]
    fn census_documents_marginal_level() {
        let rep = cmd_census(-0.25, 6).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep
            .notes
            .iter()
            .any(|n| n.contains("would give 4 bound levels instead of 3")));
        let rep = cmd_census(-2.0, 6).unwrap();
        assert!(rep.rows.is_empty());
    }

    #[test]
    fn figure_ids() {
        assert!(matches!(cmd_figures(5), Err(CliError::Usage(_))));
        let rep = cmd_figures(4).unwrap();
        assert_eq!(rep.rows.len(), 45);
    }

    #[test]
    fn wavefn_spherical_endpoint() {
        let rep = cmd_wavefn(0.5, 1, 0, 11).unwrap();
        let r = rep.floats("R");
        assert!(r.last().unwrap().unwrap().abs() < 1e-14);
        assert!(matches!(cmd_wavefn(-0.5, 1, 0, 11), Err(CliError::Core(_))));
    }

    #[test]
    fn flat_circular_orbit() {
        let init = ClassicalState {
            r: 1.0,
            theta: std::f64::consts::FRAC_PI_2,
            phi: 0.0,
            p_r: 0.0,
            p_theta: 0.0,
            p_phi: 1.0,
        };
        let out = cmd_classical(0.0, init, 20.0, 1e-3).unwrap();
        for r in out.report.floats("r") {
            assert!((r.unwrap() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn defaults_in_every_header() {
        let mut rep = cmd_spectrum(0.5, 2).unwrap();
        stamp_defaults(&mut rep);
        stamp_defaults(&mut rep);
        let grid: Vec<_> = rep.parameters.iter().filter(|(k, _)| k == "grid").collect();
        assert_eq!(grid, [&("grid".to_owned(), "4000".to_owned())]);
        assert!(rep.to_csv().contains("# quadrature_tolerance = 0.00000001"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Core(curvosc::Error::NonConvergence("x".into())).exit_code(),
            3
        );
        assert_eq!(
            CliError::Core(curvosc::Error::WallCollision { t: 0.0, r: 1.0 }).exit_code(),
            1
        );
    }
}
