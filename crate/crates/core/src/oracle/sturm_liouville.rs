//! Finite-difference eigensolver for the radial problem in self-adjoint form
//! `(p g')' + lambda q g = 0`, with
//! `p = r^{2l+2} (1 - k r^2)^{1/k + 1/2}` and
//! `q = r^{2l+2} (1 - k r^2)^{1/k - 1/2}`.
//!
//! The problem is discretized in the geodesic distance `s` (`r = Sin_k(s)`),
//! where it reads `(w g_s)_s + lambda w g = 0` with
//! `w = r^{2l+2} (1 - k r^2)^{1/k}`. Nodes sit at `(i - 1/2) h`, fluxes at
//! `i h`, so the flux through the origin vanishes and on the sphere the flux
//! through the equator vanishes as well. Hyperbolic and flat problems are
//! truncated at a radius chosen and then checked a posteriori.
//!
//! Eigenvalues of the pencil `K - sigma M` are found by bisection on the
//! Sturm count (number of negative LDL^T pivots).

use crate::error::{Error, Result};
use crate::kappa::{self, Curvature, SignClass, SERIES_THRESHOLD};

const MAX_COUNT: usize = 10;
const MIN_GRID: usize = 100;
/// Nodes used while searching for a truncation radius.
const SEARCH_GRID: usize = 1000;
/// Absolute eigenvalue change tolerated when the domain is doubled.
pub const TRUNCATION_TOL: f64 = 1e-8;
const SEARCH_TOL: f64 = 1e-10;
const SEARCH_GROWTH: f64 = 1.25;
const MAX_GEODESIC_END: f64 = 400.0;
/// Below this many units of `ln w` the mass matrix would underflow.
const LOG_WEIGHT_FLOOR: f64 = -650.0;

/// Radial Sturm–Liouville problem for one `(k, l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SLProblem {
    pub curv: Curvature,
    pub l: u32,
}

pub fn build_sl_problem(curv: Curvature, l: u32) -> SLProblem {
    SLProblem { curv, l }
}

/// `ln Cos_k(s)`, accurate near the origin and near the equator.
fn log_kappa_cos(k: f64, s: f64) -> f64 {
    let x = k * s * s;
    if x.abs() < SERIES_THRESHOLD {
        -0.5 * x - x * x / 12.0
    } else if k > 0.0 {
        (k.sqrt() * s).cos().ln()
    } else {
        let y = (-k).sqrt() * s;
        y + (-2.0 * y).exp().ln_1p() - std::f64::consts::LN_2
    }
}

/// `ln Sin_k(s)`.
fn log_kappa_sin(k: f64, s: f64) -> f64 {
    let x = k * s * s;
    if k < 0.0 && x.abs() >= SERIES_THRESHOLD {
        let a = (-k).sqrt();
        let y = a * s;
        y + (-(-2.0 * y).exp()).ln_1p() - std::f64::consts::LN_2 - a.ln()
    } else {
        kappa::kappa_sin(k, s).ln()
    }
}

impl SLProblem {
    fn k(&self) -> f64 {
        self.curv.value()
    }

    fn exponent(&self) -> f64 {
        2.0 * f64::from(self.l) + 2.0
    }

    /// `ln (1 - k r^2)^{1/k}`, `-r^2` in flat space.
    fn log_curved_factor(&self, rho: f64) -> f64 {
        let x = self.k() * rho * rho;
        if x.abs() < SERIES_THRESHOLD {
            -rho * rho * (1.0 + 0.5 * x)
        } else {
            (-x).ln_1p() / self.k()
        }
    }

    /// `p(rho)`.
    pub fn p(&self, rho: f64) -> f64 {
        let m = (-self.k() * rho * rho).ln_1p();
        (self.exponent() * rho.ln() + self.log_curved_factor(rho) + 0.5 * m).exp()
    }

    /// `q(rho)`.
    pub fn q(&self, rho: f64) -> f64 {
        let m = (-self.k() * rho * rho).ln_1p();
        (self.exponent() * rho.ln() + self.log_curved_factor(rho) - 0.5 * m).exp()
    }

    /// `ln w` at geodesic distance `s`.
    pub fn log_geodesic_weight(&self, s: f64) -> f64 {
        let k = self.k();
        if s <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let curved = if k == 0.0 {
            -s * s
        } else if (k * s * s).abs() < SERIES_THRESHOLD {
            // (2/k) ln Cos_k(s) = -s^2 - k s^4 / 6 + ...
            -s * s * (1.0 + k * s * s / 6.0)
        } else {
            2.0 / k * log_kappa_cos(k, s)
        };
        self.exponent() * log_kappa_sin(k, s) + curved
    }

    /// Chart radius of the geodesic distance `s`.
    pub fn radius(&self, s: f64) -> f64 {
        kappa::kappa_sin(self.k(), s)
    }

    /// `1/sqrt(k)` on the sphere, `+inf` otherwise.
    pub fn rho_end(&self) -> f64 {
        self.curv.radial_boundary()
    }

    /// Shift between `lambda` and `2E - 3`: `(2 + 2k + k l) l`.
    fn centrifugal_shift(&self) -> f64 {
        let l = f64::from(self.l);
        (2.0 + 2.0 * self.k() + self.k() * l) * l
    }

    pub fn lambda_to_energy(&self, lambda: f64) -> f64 {
        0.5 * (lambda + self.centrifugal_shift() + 3.0)
    }

    pub fn energy_to_lambda(&self, energy: f64) -> f64 {
        2.0 * energy - 3.0 - self.centrifugal_shift()
    }

    /// Bottom of the continuous spectrum in `lambda` units (hyperbolic only).
    ///
    /// For large `s`, `w ~ exp(-2 beta s)` with
    /// `beta = 1/sqrt|k| - (l + 1) sqrt|k|`; substituting `g = exp(beta s) v`
    /// leaves `v'' + (lambda - beta^2) v = 0`.
    pub fn continuum_edge(&self) -> Option<f64> {
        match self.curv.sign_class() {
            SignClass::Hyperbolic => {
                let a = self.k().abs().sqrt();
                let beta = 1.0 / a - (f64::from(self.l) + 1.0) * a;
                Some(if beta > 0.0 { beta * beta } else { 0.0 })
            }
            _ => None,
        }
    }

    /// Whether any discrete eigenvalue can lie below the continuum.
    fn has_confining_weight(&self) -> bool {
        let a = self.k().abs().sqrt();
        self.curv.sign_class() != SignClass::Hyperbolic
            || 1.0 / a - (f64::from(self.l) + 1.0) * a > 0.0
    }
}

/// Assembled pencil on `n` nodes over `[0, s_end]`.
#[derive(Debug, Clone)]
pub struct SLDiscretization {
    pub s_end: f64,
    pub h: f64,
    /// Diagonal of the stiffness matrix.
    pub stiffness_diag: Vec<f64>,
    /// Off-diagonal of the stiffness matrix (`n - 1` entries).
    pub stiffness_off: Vec<f64>,
    /// Diagonal mass matrix.
    pub mass: Vec<f64>,
}

impl SLDiscretization {
    pub fn assemble(prob: &SLProblem, s_end: f64, n: usize) -> Result<Self> {
        let h = s_end / n as f64;
        let closed = prob.curv.sign_class() == SignClass::Spherical;
        let log_nodes: Vec<f64> = (1..=n)
            .map(|i| prob.log_geodesic_weight((i as f64 - 0.5) * h))
            .collect();
        let log_flux: Vec<f64> = (0..=n)
            .map(|i| {
                if i == 0 || (closed && i == n) {
                    f64::NEG_INFINITY
                } else {
                    prob.log_geodesic_weight(i as f64 * h)
                }
            })
            .collect();
        let top = log_nodes.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if log_nodes
            .iter()
            .any(|&v| v.is_nan() || v - top <= LOG_WEIGHT_FLOOR)
        {
            return Err(Error::NonConvergence(format!(
                "weight spans more than {} e-folds on [0, {s_end}]",
                -LOG_WEIGHT_FLOOR
            )));
        }
        let mass: Vec<f64> = log_nodes.iter().map(|v| (v - top).exp()).collect();
        let flux: Vec<f64> = log_flux.iter().map(|v| (v - top).exp()).collect();
        let h2 = h * h;
        let stiffness_diag = (0..n).map(|i| (flux[i] + flux[i + 1]) / h2).collect();
        let stiffness_off = (1..n).map(|i| -flux[i] / h2).collect();
        Ok(Self {
            s_end,
            h,
            stiffness_diag,
            stiffness_off,
            mass,
        })
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mass.is_empty()
    }

    /// Geodesic positions of the nodes.
    pub fn nodes(&self) -> Vec<f64> {
        (1..=self.len())
            .map(|i| (i as f64 - 0.5) * self.h)
            .collect()
    }

    /// Number of eigenvalues of the pencil below `sigma`.
    pub fn sturm_count(&self, sigma: f64) -> usize {
        let mut count = 0;
        let mut d = 1.0;
        for i in 0..self.len() {
            let a = self.stiffness_diag[i] - sigma * self.mass[i];
            d = if i == 0 {
                a
            } else {
                let b = self.stiffness_off[i - 1];
                // b (b / d) rather than b^2 / d: the weights can be small
                // enough for b^2 to underflow.
                a - b * (b / d)
            };
            if d == 0.0 {
                d = -f64::MIN_POSITIVE;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `j`-th eigenvalue (from zero) by bisection.
    pub fn eigenvalue(&self, j: usize) -> Result<f64> {
        if j >= self.len() {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue {j} requested from a {}-node grid",
                self.len()
            )));
        }
        let mut lo = -1.0;
        while self.sturm_count(lo) > j {
            lo *= 2.0;
        }
        let mut hi = 1.0;
        let mut guard = 0;
        while self.sturm_count(hi) <= j {
            hi *= 2.0;
            guard += 1;
            if guard > 2000 {
                return Err(Error::NonConvergence(
                    "no upper bracket for eigenvalue".into(),
                ));
            }
        }
        for _ in 0..300 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    pub fn eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        (0..count).map(|j| self.eigenvalue(j)).collect()
    }

    /// Eigenvector for the eigenvalue `lambda` by inverse iteration,
    /// normalized so that `g^T M g = 1`.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let sigma = lambda - 1e-10 * lambda.abs().max(1.0);
        // LDL^T of K - sigma M.
        let mut d = vec![0.0; n];
        let mut lower = vec![0.0; n.saturating_sub(1)];
        for i in 0..n {
            let a = self.stiffness_diag[i] - sigma * self.mass[i];
            d[i] = if i == 0 {
                a
            } else {
                a - lower[i - 1] * self.stiffness_off[i - 1]
            };
            if d[i] == 0.0 {
                d[i] = f64::MIN_POSITIVE;
            }
            if i + 1 < n {
                lower[i] = self.stiffness_off[i] / d[i];
            }
        }
        let mut g = vec![1.0; n];
        for _ in 0..4 {
            let mut y: Vec<f64> = g.iter().zip(&self.mass).map(|(gi, mi)| gi * mi).collect();
            for i in 1..n {
                y[i] -= lower[i - 1] * y[i - 1];
            }
            for i in 0..n {
                y[i] /= d[i];
            }
            for i in (0..n.saturating_sub(1)).rev() {
                y[i] -= lower[i] * y[i + 1];
            }
            let norm = self.mass_inner(&y, &y).sqrt();
            g = y.iter().map(|v| v / norm).collect();
        }
        // Fix the sign so that g is positive at the origin.
        if g[0] < 0.0 {
            g.iter_mut().for_each(|v| *v = -*v);
        }
        g
    }

    /// `a^T M b`.
    pub fn mass_inner(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .zip(&self.mass)
            .map(|((x, y), m)| x * y * m)
            .sum()
    }

    /// `K - sigma M` applied to `g`.
    pub fn apply(&self, g: &[f64], sigma: f64) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut v = (self.stiffness_diag[i] - sigma * self.mass[i]) * g[i];
                if i > 0 {
                    v += self.stiffness_off[i - 1] * g[i - 1];
                }
                if i + 1 < n {
                    v += self.stiffness_off[i] * g[i + 1];
                }
                v
            })
            .collect()
    }
}

/// How the truncation radius of a hyperbolic or flat problem was chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    /// Geodesic truncation distance.
    pub s_end: f64,
    /// Chart radius of `s_end`.
    pub rho_end: f64,
    /// Largest eigenvalue change when the domain is doubled at fixed `h`.
    pub doubling_change: f64,
    /// `doubling_change < TRUNCATION_TOL`.
    pub validated: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenSolution {
    pub grid_size: usize,
    pub lambdas: Vec<f64>,
    pub energies: Vec<f64>,
    /// Eigenvalues on `grid_size / 2` nodes.
    pub lambdas_half: Vec<f64>,
    /// Eigenvalues on `grid_size / 4` nodes.
    pub lambdas_quarter: Vec<f64>,
    /// `(4 lambda_N - lambda_{N/2}) / 3`.
    pub richardson: Vec<f64>,
    pub richardson_energies: Vec<f64>,
    /// `(lambda_{N/4} - lambda_{N/2}) / (lambda_{N/2} - lambda_N)`, close to 4
    /// for a second-order scheme. `None` when the differences are at the
    /// rounding level.
    pub observed_ratio: Vec<Option<f64>>,
    pub s_end: f64,
    pub truncation: Option<Truncation>,
    /// Continuum edge in `lambda` units (hyperbolic only).
    pub continuum_edge: Option<f64>,
    /// Eigenvalues found below the continuum edge (hyperbolic only).
    pub discrete_available: Option<usize>,
}

fn discrete_count(disc: &SLDiscretization, edge: Option<f64>, cap: usize) -> usize {
    match edge {
        Some(e) => disc.sturm_count(e - 1e-9 * e.abs().max(1.0)).min(cap),
        None => cap,
    }
}

/// Smallest truncation distance, on a geometric sequence, at which doubling
/// the domain at fixed `h` leaves the lowest `count` eigenvalues unchanged.
fn search_truncation(prob: &SLProblem, count: usize) -> Result<(f64, usize)> {
    let edge = prob.continuum_edge();
    let mut s = match prob.curv.sign_class() {
        SignClass::Hyperbolic => 4.0 * prob.curv.value().abs().sqrt().recip().max(1.0),
        _ => 6.0,
    };
    while s <= MAX_GEODESIC_END {
        let short = SLDiscretization::assemble(prob, s, SEARCH_GRID);
        let long = SLDiscretization::assemble(prob, 2.0 * s, 2 * SEARCH_GRID);
        let (short, long) = match (short, long) {
            (Ok(a), Ok(b)) => (a, b),
            _ => break,
        };
        let available = discrete_count(&long, edge, MAX_COUNT.max(count));
        let wanted = count.min(available);
        let mut stable = discrete_count(&short, edge, MAX_COUNT.max(count)) == available;
        for j in 0..wanted {
            let a = short.eigenvalue(j)?;
            let b = long.eigenvalue(j)?;
            if (a - b).abs() > SEARCH_TOL * b.abs().max(1.0) {
                stable = false;
                break;
            }
        }
        if stable {
            return Ok((s, available));
        }
        s *= SEARCH_GROWTH;
    }
    Err(Error::NonConvergence(format!(
        "no truncation radius up to s = {MAX_GEODESIC_END} stabilizes the lowest {count} eigenvalues"
    )))
}

/// Lowest `count` eigenvalues on `grid_size` nodes, with the `N/2` and `N/4`
/// grids on the same domain for Richardson extrapolation.
pub fn solve_eigenvalues(
    prob: &SLProblem,
    grid_size: usize,
    count: usize,
) -> Result<EigenSolution> {
    if grid_size < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "grid size {grid_size} is below the minimum of {MIN_GRID}"
        )));
    }
    if count == 0 || count > MAX_COUNT {
        return Err(Error::InvalidArgument(format!(
            "between 1 and {MAX_COUNT} eigenvalues can be requested, got {count}"
        )));
    }
    let edge = prob.continuum_edge();
    if !prob.has_confining_weight() {
        return Err(Error::ExceedsDiscreteSpectrum {
            requested: count,
            available: 0,
        });
    }
    let (s_end, available) = match prob.curv.sign_class() {
        SignClass::Spherical => (prob.curv.geodesic_boundary(), None),
        SignClass::Flat => (search_truncation(prob, count)?.0, None),
        SignClass::Hyperbolic => {
            let (s, a) = search_truncation(prob, count)?;
            (s, Some(a))
        }
    };
    if let Some(a) = available {
        if count > a {
            return Err(Error::ExceedsDiscreteSpectrum {
                requested: count,
                available: a,
            });
        }
    }

    let fine = SLDiscretization::assemble(prob, s_end, grid_size)?;
    let half = SLDiscretization::assemble(prob, s_end, grid_size / 2)?;
    let quarter = SLDiscretization::assemble(prob, s_end, grid_size / 4)?;
    let lambdas = fine.eigenvalues(count)?;
    let lambdas_half = half.eigenvalues(count)?;
    let lambdas_quarter = quarter.eigenvalues(count)?;

    for w in lambdas.windows(2) {
        if w[1] - w[0] <= 1e-10 {
            return Err(Error::NonConvergence(format!(
                "eigenvalues {} and {} are not separated",
                w[0], w[1]
            )));
        }
    }

    let truncation = if prob.curv.sign_class() == SignClass::Spherical {
        None
    } else {
        let doubled = SLDiscretization::assemble(prob, 2.0 * s_end, 2 * grid_size)?;
        let change = (0..count)
            .map(|j| doubled.eigenvalue(j).map(|v| (v - lambdas[j]).abs()))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        Some(Truncation {
            s_end,
            rho_end: prob.radius(s_end),
            doubling_change: change,
            validated: change < TRUNCATION_TOL,
        })
    };

    let richardson: Vec<f64> = lambdas
        .iter()
        .zip(&lambdas_half)
        .map(|(f, c)| (4.0 * f - c) / 3.0)
        .collect();
    let observed_ratio = (0..count)
        .map(|j| {
            let d1 = lambdas_quarter[j] - lambdas_half[j];
            let d2 = lambdas_half[j] - lambdas[j];
            let floor = 1e-9 * lambdas[j].abs().max(1.0);
            (d2.abs() > floor).then(|| d1 / d2)
        })
        .collect();
    Ok(EigenSolution {
        grid_size,
        energies: lambdas.iter().map(|&v| prob.lambda_to_energy(v)).collect(),
        richardson_energies: richardson
            .iter()
            .map(|&v| prob.lambda_to_energy(v))
            .collect(),
        lambdas,
        lambdas_half,
        lambdas_quarter,
        richardson,
        observed_ratio,
        s_end,
        truncation,
        continuum_edge: edge,
        discrete_available: available,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prob(k: f64, l: u32) -> SLProblem {
        build_sl_problem(Curvature::new(k).unwrap(), l)
    }

    #[test]
    fn coefficient_examples() {
        let p = prob(1.0, 0);
        for &r in &[0.1, 0.5, 0.9] {
            let f: f64 = 1.0 - r * r;
            assert!((p.p(r) / (r * r * f.powf(1.5)) - 1.0).abs() < 1e-13);
            assert!((p.q(r) / (r * r * f.sqrt()) - 1.0).abs() < 1e-13);
        }
        let flat = prob(0.0, 0);
        assert!((flat.q(1.3) / (1.69 * (-1.69f64).exp()) - 1.0).abs() < 1e-14);
        let hyp = prob(-0.5, 1);
        assert!((hyp.q(2.0) / (16.0 * 3f64.powf(-2.5)) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn geodesic_weight_matches_chart_weight() {
        for &(k, l) in &[(0.7, 0), (-0.3, 2), (0.0, 1), (1e-10, 1)] {
            let pr = prob(k, l);
            for &s in &[0.2, 0.8, 1.5] {
                let r = pr.radius(s);
                // w = q dr/ds = q sqrt(1 - k r^2)
                let expect = pr.q(r) * (1.0 - k * r * r).sqrt();
                let got = pr.log_geodesic_weight(s).exp();
                assert!((got / expect - 1.0).abs() < 1e-12, "{k} {l} {s}");
            }
        }
    }

    #[test]
    fn stiffness_is_symmetric_and_semidefinite() {
        let d = SLDiscretization::assemble(
            &prob(0.5, 1),
            Curvature::new(0.5).unwrap().geodesic_boundary(),
            200,
        )
        .unwrap();
        // Row sums of K are non-negative and the off-diagonal is stored once,
        // so K is symmetric by construction; check diagonal dominance.
        for i in 0..d.len() {
            let mut off = 0.0;
            if i > 0 {
                off += d.stiffness_off[i - 1].abs();
            }
            if i + 1 < d.len() {
                off += d.stiffness_off[i].abs();
            }
            assert!(d.stiffness_diag[i] >= off * (1.0 - 1e-15));
            assert!(d.mass[i] > 0.0);
        }
        assert_eq!(d.sturm_count(-1e-12), 0);
    }

    #[test]
    fn lambda_energy_round_trip() {
        let pr = prob(0.3, 2);
        assert!((pr.lambda_to_energy(pr.energy_to_lambda(4.2)) - 4.2).abs() < 1e-14);
        assert_eq!(prob(0.25, 0).lambda_to_energy(0.0), 1.5);
    }

    #[test]
    fn ground_state_has_zero_eigenvalue() {
        let sol = solve_eigenvalues(&prob(0.25, 0), 4000, 2).unwrap();
        assert!(sol.lambdas[0].abs() < 1e-9);
        assert!((sol.energies[0] - 1.5).abs() < 1e-9);
        assert!((sol.energies[1] / 4.5 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn hyperbolic_discrete_count() {
        let sol = solve_eigenvalues(&prob(-0.25, 0), 1000, 2).unwrap();
        assert_eq!(sol.discrete_available, Some(2));
        assert!(sol.truncation.unwrap().validated);
        assert!(matches!(
            solve_eigenvalues(&prob(-0.25, 0), 1000, 3),
            Err(Error::ExceedsDiscreteSpectrum {
                requested: 3,
                available: 2
            })
        ));
    }

    #[test]
    fn continuum_edge_matches_threshold() {
        for &k in &[-0.1, -0.25, -0.5] {
            for l in 0..3 {
                let pr = prob(k, l);
                if let Some(e) = pr.continuum_edge().filter(|&e| e > 0.0) {
                    let threshold = kappa::continuum_threshold(pr.curv).unwrap();
                    assert!((pr.lambda_to_energy(e) - threshold).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn no_discrete_spectrum_for_strong_curvature() {
        assert!(matches!(
            solve_eigenvalues(&prob(-2.0, 0), 200, 1),
            Err(Error::ExceedsDiscreteSpectrum { available: 0, .. })
        ));
    }

    #[test]
    fn eigenvectors_are_mass_orthogonal() {
        let pr = prob(0.5, 1);
        let d = SLDiscretization::assemble(&pr, pr.curv.geodesic_boundary(), 2000).unwrap();
        let lambdas = d.eigenvalues(5).unwrap();
        let vecs: Vec<Vec<f64>> = lambdas.iter().map(|&l| d.eigenvector(l)).collect();
        for i in 0..5 {
            assert!((d.mass_inner(&vecs[i], &vecs[i]) - 1.0).abs() < 1e-12);
            for j in 0..i {
                assert!(d.mass_inner(&vecs[i], &vecs[j]).abs() < 1e-10, "{i} {j}");
            }
        }
    }

    #[test]
    fn argument_checks() {
        assert!(solve_eigenvalues(&prob(1.0, 0), 50, 1).is_err());
        assert!(solve_eigenvalues(&prob(1.0, 0), 200, 11).is_err());
        assert!(solve_eigenvalues(&prob(1.0, 0), 200, 0).is_err());
    }
}
