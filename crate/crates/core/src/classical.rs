//! Classical oscillator `H = 1/2 [(1 - k r^2) p_r^2 + (p_theta^2 + p_phi^2 / sin^2 theta) / r^2]
//! + 1/2 r^2 / (1 - k r^2)` (unit mass and coupling) and its constants of
//! motion: the angular momentum `J`, the Noether momenta `P` and the tensor
//! `F_ij = P_i P_j + X_i X_j` with `X = x / sqrt(1 - k r^2)`.
//!
//! Trajectories are integrated in the Cartesian chart `x = r n`, where the
//! Hamiltonian reads `1/2 (|p|^2 - k (x.p)^2) + U(r)` and has no coordinate
//! singularities.

use crate::error::{Error, Result};
use crate::kappa::{Curvature, SignClass};

/// Integration is aborted this close to the spherical wall `r = 1/sqrt(k)`.
pub const WALL_MARGIN: f64 = 1e-6;
/// Below this value of `sin theta` the spherical chart is replaced by a
/// rotated one.
pub const CHART_SWITCH: f64 = 1e-6;
const MAX_SAMPLES: usize = 10_000;

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn outer_sum(p: Vec3, x: Vec3) -> Mat3 {
    let mut f = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            f[i][j] = p[i] * p[j] + x[i] * x[j];
        }
    }
    f
}

/// Spherical coordinates and their conjugate momenta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalState {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub p_r: f64,
    pub p_theta: f64,
    pub p_phi: f64,
}

/// Cartesian chart position and conjugate momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianState {
    pub x: Vec3,
    pub p: Vec3,
}

/// Spherical frame `(n, e_theta, e_phi)`.
fn frame(theta: f64, phi: f64) -> (Vec3, Vec3, Vec3) {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    (
        [st * cp, st * sp, ct],
        [ct * cp, ct * sp, -st],
        [-sp, cp, 0.0],
    )
}

impl ClassicalState {
    pub fn to_cartesian(&self) -> CartesianState {
        let (n, et, ep) = frame(self.theta, self.phi);
        let a = self.p_theta / self.r;
        // On the axis only p_phi = 0 is finite.
        let b = if self.p_phi == 0.0 {
            0.0
        } else {
            self.p_phi / (self.r * self.theta.sin())
        };
        let mut p = [0.0; 3];
        for i in 0..3 {
            p[i] = n[i] * self.p_r + et[i] * a + ep[i] * b;
        }
        CartesianState {
            x: scale(n, self.r),
            p,
        }
    }

    /// Velocities `(v_r, v_theta, v_phi)` from the momenta through the
    /// kinetic metric.
    pub fn velocities(&self, curv: Curvature) -> (f64, f64, f64) {
        let r2 = self.r * self.r;
        let st = self.theta.sin();
        (
            curv.metric_factor(self.r) * self.p_r,
            self.p_theta / r2,
            self.p_phi / (r2 * st * st),
        )
    }
}

impl CartesianState {
    pub fn radius(&self) -> f64 {
        norm(self.x)
    }

    pub fn to_spherical(&self) -> ClassicalState {
        let r = self.radius();
        let theta = (self.x[2] / r).clamp(-1.0, 1.0).acos();
        let phi = self.x[1].atan2(self.x[0]);
        let (n, et, ep) = frame(theta, phi);
        ClassicalState {
            r,
            theta,
            phi,
            p_r: dot(n, self.p),
            p_theta: r * dot(et, self.p),
            p_phi: r * theta.sin() * dot(ep, self.p),
        }
    }

    fn rotated(&self, m: &Mat3) -> CartesianState {
        CartesianState {
            x: mat_vec(m, self.x),
            p: mat_vec(m, self.p),
        }
    }
}

fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [dot(m[0], v), dot(m[1], v), dot(m[2], v)]
}

fn transpose(m: &Mat3) -> Mat3 {
    let mut t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = m[j][i];
        }
    }
    t
}

/// `R^T F R`.
fn conjugate(rt: &Mat3, f: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0.0;
            for a in 0..3 {
                for b in 0..3 {
                    s += rt[i][a] * f[a][b] * rt[j][b];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

/// Rotation taking the z axis to the x axis.
const TILT: Mat3 = [[0.0, 0.0, -1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConservedSet {
    pub h: f64,
    pub j: Vec3,
    pub p: Vec3,
    pub x: Vec3,
    pub f: Mat3,
}

impl ConservedSet {
    /// `2H - sum F_ii - k |J|^2`.
    pub fn trace_residual(&self, curv: Curvature) -> f64 {
        let trace = self.f[0][0] + self.f[1][1] + self.f[2][2];
        2.0 * self.h - trace - curv.value() * dot(self.j, self.j)
    }

    /// `2H - |P|^2 - k |J|^2 - 2U`.
    pub fn casimir_residual(&self, curv: Curvature) -> f64 {
        // 2U = r^2 / (1 - k r^2) = |X|^2
        2.0 * self.h
            - dot(self.p, self.p)
            - curv.value() * dot(self.j, self.j)
            - dot(self.x, self.x)
    }

    fn rotate_back(&self, m: &Mat3) -> ConservedSet {
        let rt = transpose(m);
        ConservedSet {
            h: self.h,
            j: mat_vec(&rt, self.j),
            p: mat_vec(&rt, self.p),
            x: mat_vec(&rt, self.x),
            f: conjugate(&rt, &self.f),
        }
    }
}

fn check_state(curv: Curvature, r: f64) -> Result<()> {
    if r.is_nan() || r <= 0.0 || !r.is_finite() {
        return Err(Error::Domain {
            r,
            boundary: curv.radial_boundary(),
        });
    }
    curv.check_radius(r)
}

/// `H` from the spherical-chart expression.
pub fn hamiltonian(curv: Curvature, s: &ClassicalState) -> Result<f64> {
    check_state(curv, s.r)?;
    let st = s.theta.sin();
    let f = curv.metric_factor(s.r);
    let r2 = s.r * s.r;
    Ok(
        0.5 * (f * s.p_r * s.p_r + (s.p_theta * s.p_theta + s.p_phi * s.p_phi / (st * st)) / r2)
            + 0.5 * r2 / f,
    )
}

/// Constants of motion from their spherical-coordinate expressions, with the
/// velocities obtained from the momenta. Near the polar axis the state is
/// first rotated to a chart where `sin theta` is not small.
pub fn evaluate_conserved(curv: Curvature, s: &ClassicalState) -> Result<ConservedSet> {
    check_state(curv, s.r)?;
    if s.theta.sin().abs() < CHART_SWITCH {
        let tilted = s.to_cartesian().rotated(&TILT).to_spherical();
        return Ok(spherical_expressions(curv, &tilted)?.rotate_back(&TILT));
    }
    spherical_expressions(curv, s)
}

fn spherical_expressions(curv: Curvature, s: &ClassicalState) -> Result<ConservedSet> {
    let h = hamiltonian(curv, s)?;
    let (v_r, v_t, v_p) = s.velocities(curv);
    let (st, ct) = s.theta.sin_cos();
    let (sp, cp) = s.phi.sin_cos();
    let r = s.r;
    let r2 = r * r;
    let sf = curv.metric_factor(r).sqrt();
    let radial = v_r / sf;
    let ang = r * sf;
    let p = [
        st * cp * radial + ang * (ct * cp * v_t - st * sp * v_p),
        st * sp * radial + ang * (ct * sp * v_t + st * cp * v_p),
        ct * radial - ang * st * v_t,
    ];
    let j = [
        -r2 * (sp * v_t + st * ct * cp * v_p),
        r2 * (cp * v_t - st * ct * sp * v_p),
        r2 * st * st * v_p,
    ];
    let x = [r * st * cp / sf, r * st * sp / sf, r * ct / sf];
    Ok(ConservedSet {
        h,
        j,
        p,
        x,
        f: outer_sum(p, x),
    })
}

/// Constants of motion in the Cartesian chart: `P = sqrt(1 - k r^2) p`,
/// `J = x × p`, `X = x / sqrt(1 - k r^2)`.
pub fn conserved_cartesian(curv: Curvature, c: &CartesianState) -> Result<ConservedSet> {
    let r = c.radius();
    check_state(curv, r)?;
    let f = curv.metric_factor(r);
    let sf = f.sqrt();
    let xp = dot(c.x, c.p);
    let h = 0.5 * (dot(c.p, c.p) - curv.value() * xp * xp) + 0.5 * r * r / f;
    let p = scale(c.p, sf);
    let x = scale(c.x, 1.0 / sf);
    Ok(ConservedSet {
        h,
        j: cross(c.x, c.p),
        p,
        x,
        f: outer_sum(p, x),
    })
}

/// Hamilton's equations in the Cartesian chart:
/// `x' = p - k (x.p) x`, `p' = k (x.p) p - x / (1 - k r^2)^2`.
fn rhs(k: f64, c: &CartesianState) -> CartesianState {
    let xp = dot(c.x, c.p);
    let f = 1.0 - k * dot(c.x, c.x);
    let g = 1.0 / (f * f);
    let mut dx = [0.0; 3];
    let mut dp = [0.0; 3];
    for i in 0..3 {
        dx[i] = c.p[i] - k * xp * c.x[i];
        dp[i] = k * xp * c.p[i] - c.x[i] * g;
    }
    CartesianState { x: dx, p: dp }
}

fn axpy(c: &CartesianState, d: &CartesianState, a: f64) -> CartesianState {
    let mut out = *c;
    for i in 0..3 {
        out.x[i] += a * d.x[i];
        out.p[i] += a * d.p[i];
    }
    out
}

/// One classical Runge–Kutta step.
pub fn rk4_step(curv: Curvature, c: &CartesianState, dt: f64) -> CartesianState {
    let k = curv.value();
    let k1 = rhs(k, c);
    let k2 = rhs(k, &axpy(c, &k1, 0.5 * dt));
    let k3 = rhs(k, &axpy(c, &k2, 0.5 * dt));
    let k4 = rhs(k, &axpy(c, &k3, dt));
    let mut out = *c;
    for i in 0..3 {
        out.x[i] += dt / 6.0 * (k1.x[i] + 2.0 * k2.x[i] + 2.0 * k3.x[i] + k4.x[i]);
        out.p[i] += dt / 6.0 * (k1.p[i] + 2.0 * k2.p[i] + 2.0 * k3.p[i] + k4.p[i]);
    }
    out
}

/// Largest deviation of each constant from its initial value, relative to
/// `|H0|`, `|J0|` (or `|x0| |p0|` when `J0` vanishes) and `|F0|`
/// (Frobenius) respectively.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DriftReport {
    pub h: f64,
    pub j: Vec3,
    pub f: Mat3,
}

impl DriftReport {
    pub fn max_j(&self) -> f64 {
        self.j.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_f(&self) -> f64 {
        self.f.iter().flatten().copied().fold(0.0, f64::max)
    }

    /// Worst relative drift over `H`, `J_i` and `F_ij`.
    pub fn max(&self) -> f64 {
        self.h.max(self.max_j()).max(self.max_f())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub state: CartesianState,
    pub conserved: ConservedSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub drift: DriftReport,
    pub initial: ConservedSet,
    /// `false` on the hyperbolic space when `H` reaches the asymptote of the
    /// potential, so that the orbit escapes to infinity.
    pub bound: bool,
    pub steps: usize,
}

/// Integrate from `initial` to `t_end` with fixed step `dt`, tracking the
/// drift of the constants of motion at every step.
pub fn integrate_trajectory(
    curv: Curvature,
    initial: &ClassicalState,
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    if !(dt > 0.0 && dt.is_finite()) || !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "need dt > 0 and t_end >= 0, got dt = {dt}, t_end = {t_end}"
        )));
    }
    check_state(curv, initial.r)?;
    integrate_cartesian(curv, &initial.to_cartesian(), t_end, dt)
}

/// As [`integrate_trajectory`], starting from a Cartesian state.
pub fn integrate_cartesian(
    curv: Curvature,
    initial: &CartesianState,
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    let c0 = conserved_cartesian(curv, initial)?;
    let steps = (t_end / dt).round() as usize;
    let stride = steps.div_ceil(MAX_SAMPLES).max(1);
    let j_scale = match norm(c0.j) {
        s if s > 1e-12 * norm(initial.x) * norm(initial.p) && s > 0.0 => s,
        _ => (norm(initial.x) * norm(initial.p)).max(f64::MIN_POSITIVE),
    };
    let h_scale = c0.h.abs().max(f64::MIN_POSITIVE);
    let f_scale = c0.f.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let wall = curv.radial_boundary();

    let mut drift = DriftReport::default();
    let mut state = *initial;
    let mut samples = vec![Sample {
        t: 0.0,
        state,
        conserved: c0,
    }];
    for step in 1..=steps {
        state = rk4_step(curv, &state, dt);
        let t = step as f64 * dt;
        let r = state.radius();
        if curv.sign_class() == SignClass::Spherical && (r.is_nan() || wall - r <= WALL_MARGIN) {
            return Err(Error::WallCollision { t, r });
        }
        let c = conserved_cartesian(curv, &state)?;
        drift.h = drift.h.max((c.h - c0.h).abs() / h_scale);
        for i in 0..3 {
            drift.j[i] = drift.j[i].max((c.j[i] - c0.j[i]).abs() / j_scale);
            for j in 0..3 {
                drift.f[i][j] = drift.f[i][j].max((c.f[i][j] - c0.f[i][j]).abs() / f_scale);
            }
        }
        if step % stride == 0 || step == steps {
            samples.push(Sample {
                t,
                state,
                conserved: c,
            });
        }
    }
    let bound = match curv.sign_class() {
        SignClass::Hyperbolic => c0.h < crate::kappa::potential_asymptote(curv),
        _ => true,
    };
    Ok(Trajectory {
        samples,
        drift,
        initial: c0,
        bound,
        steps,
    })
}
