//! Closed forms against the independent oracles, swept over curvatures and
//! angular momenta.

use rayon::prelude::*;

use curvosc::oracle::{self, Domain};
use curvosc::spectrum::{self, QuantumNumbers};
use curvosc::wavefunctions;
use curvosc::{Curvature, SignClass};

use crate::output::{Cell, Report};
use crate::{curvature, CliError, CliResult};

/// Range of observed grid-refinement ratios accepted as second order.
pub const ORDER_RANGE: (f64, f64) = (3.5, 4.5);

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub kappa_list: Vec<f64>,
    pub l_max: u32,
    /// Largest principal number `n` whose normalization is checked.
    pub n_max: u32,
    /// Oracle levels per `(kappa, l)`, limited by the census.
    pub levels: usize,
    pub grid_size: usize,
    pub eig_tol: f64,
    pub quad_tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            kappa_list: vec![0.1, 0.25, 0.5, 1.0, -0.1, -0.25],
            l_max: 2,
            n_max: 6,
            levels: 5,
            grid_size: 4000,
            eig_tol: 1e-4,
            quad_tol: 1e-8,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> CliResult<()> {
        if self.kappa_list.is_empty() {
            return Err(CliError::Usage("empty curvature list".into()));
        }
        if !(self.eig_tol > 0.0 && self.quad_tol > 0.0) {
            return Err(CliError::Usage("tolerances must be positive".into()));
        }
        if self.levels == 0 || self.levels > 10 {
            return Err(CliError::Usage(
                "between 1 and 10 levels per (kappa, l)".into(),
            ));
        }
        if self.grid_size < 100 {
            return Err(CliError::Usage("grid size must be at least 100".into()));
        }
        for &k in &self.kappa_list {
            curvature(k)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Pass,
    Fail,
    NonConverged,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NonConverged => "nonconverged",
        }
    }
}

struct Check {
    kind: &'static str,
    kappa: f64,
    l: u32,
    n_r: u32,
    closed: f64,
    numeric: f64,
    extra: Option<f64>,
    tol: f64,
    status: Status,
}

impl Check {
    fn rel_error(&self) -> f64 {
        (self.numeric - self.closed).abs() / self.closed.abs()
    }
}

struct TaskResult {
    checks: Vec<Check>,
    notes: Vec<String>,
    warnings: Vec<String>,
}

fn energy_checks(cfg: &SweepConfig, curv: Curvature, l: u32, out: &mut TaskResult) {
    let k = curv.value();
    let count = (0..cfg.levels as u32)
        .take_while(|&n_r| spectrum::is_admissible(curv, 2 * n_r + l))
        .count();
    if count == 0 {
        out.notes.push(format!(
            "kappa = {k}, l = {l}: no bound states, nothing to compare"
        ));
        return;
    }
    let prob = oracle::build_sl_problem(curv, l);
    let sol = match oracle::solve_eigenvalues(&prob, cfg.grid_size, count) {
        Ok(s) => s,
        Err(e) => {
            let status = match e {
                curvosc::Error::NonConvergence(_) => Status::NonConverged,
                _ => Status::Fail,
            };
            out.notes
                .push(format!("kappa = {k}, l = {l}: oracle failed: {e}"));
            for n_r in 0..count as u32 {
                let closed =
                    spectrum::energy(curv, QuantumNumbers::radial(n_r, l)).unwrap_or(f64::NAN);
                out.checks.push(Check {
                    kind: "energy",
                    kappa: k,
                    l,
                    n_r,
                    closed,
                    numeric: f64::NAN,
                    extra: None,
                    tol: cfg.eig_tol,
                    status,
                });
            }
            return;
        }
    };
    let truncated_ok = sol.truncation.is_none_or(|t| t.validated);
    if let Some(t) = sol.truncation {
        out.notes.push(format!(
            "kappa = {k}, l = {l}: truncated at rho = {:.6e} (s = {:.6e}); doubling changes eigenvalues by {:.3e}",
            t.rho_end, t.s_end, t.doubling_change
        ));
    }
    for (j, &numeric) in sol.energies.iter().enumerate() {
        let n_r = j as u32;
        let closed = spectrum::energy(curv, QuantumNumbers::radial(n_r, l))
            .expect("census-limited levels are bound");
        let ratio = sol.observed_ratio[j];
        if let Some(r) = ratio.filter(|r| !(ORDER_RANGE.0..=ORDER_RANGE.1).contains(r)) {
            out.warnings.push(format!(
                "kappa = {k}, l = {l}, n_r = {n_r}: observed refinement ratio {r:.3} outside [{}, {}]",
                ORDER_RANGE.0, ORDER_RANGE.1
            ));
        }
        let mut c = Check {
            kind: "energy",
            kappa: k,
            l,
            n_r,
            closed,
            numeric,
            extra: ratio,
            tol: cfg.eig_tol,
            status: Status::Pass,
        };
        c.status = if !truncated_ok {
            Status::NonConverged
        } else if c.rel_error() <= cfg.eig_tol {
            Status::Pass
        } else {
            Status::Fail
        };
        out.checks.push(c);
    }
}

fn norm_checks(cfg: &SweepConfig, curv: Curvature, l: u32, out: &mut TaskResult) {
    let k = curv.value();
    let mut n_r = 0;
    while 2 * n_r + l <= cfg.n_max {
        let qn = QuantumNumbers::radial(n_r, l);
        if !spectrum::is_admissible(curv, qn.principal()) {
            break;
        }
        let closed = match wavefunctions::normalization_integral(curv, qn) {
            Ok(v) => v,
            Err(e) => {
                out.notes
                    .push(format!("kappa = {k}, l = {l}, n_r = {n_r}: {e}"));
                n_r += 1;
                continue;
            }
        };
        let domain = match curv.sign_class() {
            SignClass::Spherical => Domain::Finite {
                a: 0.0,
                b: curv.radial_boundary(),
            },
            _ => Domain::SemiInfinite { a: 0.0, scale: 1.0 },
        };
        let integrand =
            |r: f64| wavefunctions::normalization_integrand(curv, qn, r).unwrap_or(f64::NAN);
        let q = oracle::quadrature(integrand, domain, 1e-13);
        let mut c = Check {
            kind: "norm",
            kappa: k,
            l,
            n_r,
            closed,
            numeric: q.value,
            extra: Some(q.relative_error()),
            tol: cfg.quad_tol,
            status: Status::Pass,
        };
        c.status = if !q.converged && q.relative_error() > cfg.quad_tol {
            Status::NonConverged
        } else if c.rel_error() <= cfg.quad_tol {
            Status::Pass
        } else {
            Status::Fail
        };
        out.checks.push(c);
        n_r += 1;
    }
}

pub struct VerifyOutcome {
    pub report: Report,
    pub exit_code: i32,
    pub failures: usize,
    pub nonconverged: usize,
    pub warnings: usize,
}

/// Run every check of the sweep. `(kappa, l)` pairs run concurrently; rows
/// come out in configuration order.
pub fn cmd_verify(cfg: &SweepConfig) -> CliResult<VerifyOutcome> {
    cfg.validate()?;
    let tasks: Vec<(f64, u32)> = cfg
        .kappa_list
        .iter()
        .flat_map(|&k| (0..=cfg.l_max).map(move |l| (k, l)))
        .collect();
    let results: Vec<TaskResult> = tasks
        .par_iter()
        .map(|&(k, l)| {
            let curv = Curvature::new(k).expect("validated");
            let mut out = TaskResult {
                checks: Vec::new(),
                notes: Vec::new(),
                warnings: Vec::new(),
            };
            energy_checks(cfg, curv, l, &mut out);
            norm_checks(cfg, curv, l, &mut out);
            out
        })
        .collect();

    let mut rep = Report::new(
        "closed forms against numerical oracles",
        &[
            "check",
            "kappa",
            "l",
            "n_r",
            "closed_form",
            "numerical",
            "rel_error",
            "tolerance",
            "diagnostic",
            "status",
        ],
    );
    rep.param("kappa_list", format!("{:?}", cfg.kappa_list))
        .param("l_max", cfg.l_max)
        .param("levels", cfg.levels)
        .param("n_max", cfg.n_max)
        .param("grid", cfg.grid_size)
        .param("eigenvalue_tolerance", cfg.eig_tol)
        .param("quadrature_tolerance", cfg.quad_tol);
    rep.note("diagnostic: refinement ratio (N/4 to N/2 over N/2 to N) for energies, quadrature error estimate for norms");

    let (mut failures, mut nonconverged, mut warnings) = (0, 0, 0);
    for r in results {
        for n in r.notes {
            rep.note(n);
        }
        for w in r.warnings {
            warnings += 1;
            rep.note(format!("warning: {w}"));
        }
        for c in r.checks {
            match c.status {
                Status::Pass => {}
                Status::Fail => failures += 1,
                Status::NonConverged => nonconverged += 1,
            }
            rep.push(vec![
                c.kind.into(),
                c.kappa.into(),
                c.l.into(),
                c.n_r.into(),
                c.closed.into(),
                c.numeric.into(),
                c.rel_error().into(),
                c.tol.into(),
                c.extra.map_or(Cell::Empty, Cell::Float),
                c.status.label().into(),
            ]);
        }
    }
    let exit_code = if nonconverged > 0 {
        3
    } else if failures > 0 {
        1
    } else {
        0
    };
    rep.param("checks", rep.rows.len())
        .param("failures", failures)
        .param("nonconverged", nonconverged)
        .param("warnings", warnings);
    Ok(VerifyOutcome {
        report: rep,
        exit_code,
        failures,
        nonconverged,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_census_is_a_vacuous_pass() {
        let cfg = SweepConfig {
            kappa_list: vec![-2.0],
            ..SweepConfig::default()
        };
        let out = cmd_verify(&cfg).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.report.rows.is_empty());
        assert!(out
            .report
            .notes
            .iter()
            .any(|n| n.contains("no bound states")));
    }

    #[test]
    fn coarse_grid_warns_about_order() {
        let cfg = SweepConfig {
            kappa_list: vec![-0.1],
            l_max: 0,
            grid_size: 100,
            ..SweepConfig::default()
        };
        let out = cmd_verify(&cfg).unwrap();
        assert!(out.warnings > 0);
    }

    #[test]
    fn invalid_config() {
        let cfg = SweepConfig {
            kappa_list: vec![],
            ..SweepConfig::default()
        };
        assert!(matches!(cmd_verify(&cfg), Err(CliError::Usage(_))));
    }
}
