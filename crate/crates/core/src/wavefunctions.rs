//! Closed-form bound-state wavefunctions
//! `Psi = K r^l (1 - k r^2)^{1/(2k)} P_{n_r,l}(k r^2) Y_lm(theta, phi)`.
//!
//! `P_{n_r,l}` is the terminating `2F1(-n_r, n_r + l + 1 + 1/k; l + 3/2; t)`
//! with `t = k r^2`. In flat space it is `1F1(-n_r; l + 3/2; r^2)` and the
//! envelope is `exp(-r^2/2)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kappa::{Curvature, SignClass, SERIES_THRESHOLD};
use crate::special::{self, HypergeometricParams};
use crate::spectrum::{self, QuantumNumbers};

/// Variable in which the radial polynomial is expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyVariable {
    /// `t = k r^2`.
    KappaRSquared,
    /// `r^2` (flat space).
    RSquared,
}

impl PolyVariable {
    pub fn of(curv: Curvature) -> Self {
        if curv.is_flat() {
            PolyVariable::RSquared
        } else {
            PolyVariable::KappaRSquared
        }
    }

    /// Scale `c` such that the variable is `c r^2`.
    pub fn scale(self, curv: Curvature) -> f64 {
        match self {
            PolyVariable::KappaRSquared => curv.value(),
            PolyVariable::RSquared => 1.0,
        }
    }
}

/// Gauss parameters `(-n_r, n_r + l + 1 + 1/k; l + 3/2)`.
pub fn polynomial_parameters(curv: Curvature, qn: QuantumNumbers) -> Result<HypergeometricParams> {
    let k = curv.value();
    if k == 0.0 {
        return Err(Error::InvalidArgument(
            "flat space uses the confluent polynomial".into(),
        ));
    }
    let n_r = f64::from(qn.n_r);
    let l = f64::from(qn.l);
    HypergeometricParams::new(-n_r, n_r + l + 1.0 + 1.0 / k, l + 1.5)
}

/// Ascending coefficients of `P_{n_r,l}` in `t = k r^2`, or in `r^2` when
/// the space is flat.
pub fn radial_polynomial(curv: Curvature, qn: QuantumNumbers) -> Result<Vec<f64>> {
    if curv.is_flat() {
        special::confluent_1f1_coefficients(-f64::from(qn.n_r), f64::from(qn.l) + 1.5)
    } else {
        special::gauss_2f1_coefficients(polynomial_parameters(curv, qn)?)
    }
}

/// `ln (1 - k r^2)^{1/(2k)}`, `-r^2/2` in the flat limit.
pub fn log_envelope(curv: Curvature, r: f64) -> f64 {
    let k = curv.value();
    let x = k * r * r;
    if x >= 1.0 {
        f64::NEG_INFINITY
    } else if x.abs() < SERIES_THRESHOLD {
        // ln(1 - x)/(2k) = -(r^2/2)(1 + x/2 + x^2/3 + ...)
        -0.5 * r * r * (1.0 + x / 2.0 + x * x / 3.0)
    } else {
        (-x).ln_1p() / (2.0 * k)
    }
}

/// `(1 - k r^2)^{1/(2k)}`; zero on the spherical boundary.
pub fn envelope(curv: Curvature, r: f64) -> f64 {
    log_envelope(curv, r).exp()
}

/// Roots `(l, -l - 1)` of the indicial equation at the origin. Only the
/// first gives a solution regular at `r = 0`.
pub fn indicial_exponents(l: u32) -> (i64, i64) {
    let l = i64::from(l);
    (l, -l - 1)
}

/// Weight `q = r^{2l+2} (1 - k r^2)^{1/k - 1/2}` of the orthogonality
/// relation between radial polynomials of equal `l`.
pub fn orthogonality_weight(curv: Curvature, l: u32, r: f64) -> f64 {
    let lf = f64::from(l);
    let k = curv.value();
    let x = k * r * r;
    let radial = if x.abs() < SERIES_THRESHOLD {
        2.0 * log_envelope(curv, r) - 0.5 * (-x).ln_1p()
    } else {
        (1.0 / k - 0.5) * (-x).ln_1p()
    };
    ((2.0 * lf + 2.0) * r.ln() + radial).exp()
}

/// Integrating factor `p = r^{2l+2} (1 - k r^2)^{1/k + 1/2}` that puts the
/// polynomial equation in self-adjoint form `(p g')' + lambda q g = 0`.
pub fn integrating_factor(curv: Curvature, l: u32, r: f64) -> f64 {
    orthogonality_weight(curv, l, r) * curv.metric_factor(r)
}

/// `∫ r^{2l} (1 - k r^2)^{1/k} P^2 r^2 / sqrt(1 - k r^2) dr` in closed form.
pub fn normalization_integral(curv: Curvature, qn: QuantumNumbers) -> Result<f64> {
    let n = qn.principal();
    if !spectrum::is_admissible(curv, n) {
        return Err(Error::DivergentNorm {
            n,
            cutoff: spectrum::hyperbolic_cutoff(curv).unwrap_or(f64::INFINITY),
        });
    }
    let k = curv.value();
    let nr = qn.n_r;
    let n_rf = f64::from(nr);
    let l = f64::from(qn.l);
    let c = l + 1.5;
    let fact = special::factorial(nr);
    let poch_c = special::pochhammer(c, nr);
    let gamma_c = special::gamma_fn(c)?;
    let value = match curv.sign_class() {
        SignClass::Flat => 0.5 * fact * gamma_c / poch_c,
        SignClass::Spherical => {
            let k_plus =
                k.powf(-(0.5 + l)) * fact / (2.0 * (1.0 + k * (1.0 + l + 2.0 * n_rf)) * poch_c);
            let ratio = special::gamma_ratio(n_rf + 0.5 + 1.0 / k, n_rf + l + 1.0 + 1.0 / k)?;
            k_plus * gamma_c * ratio
        }
        SignClass::Hyperbolic => {
            let ka = k.abs();
            let inv = 1.0 / ka;
            let k_minus =
                ka.powf(-(1.5 + l)) * fact * special::pochhammer(inv - 2.0 * n_rf - l, nr)
                    / (2.0 * poch_c);
            let ratio = special::gamma_ratio(inv - (2.0 * n_rf + 1.0 + l), inv + 0.5 - n_rf)
                .map_err(|_| Error::DivergentNorm {
                    n,
                    cutoff: inv - 1.0,
                })?;
            k_minus * gamma_c * ratio
        }
    };
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::DivergentNorm {
            n,
            cutoff: spectrum::hyperbolic_cutoff(curv).unwrap_or(f64::INFINITY),
        });
    }
    Ok(value)
}

/// `K = 1/sqrt(normalization_integral)`.
pub fn normalization_constant(curv: Curvature, qn: QuantumNumbers) -> Result<f64> {
    Ok(normalization_integral(curv, qn)?.sqrt().recip())
}

/// Integrand of [`normalization_integral`] at `r`, for use with an
/// independent quadrature.
pub fn normalization_integrand(curv: Curvature, qn: QuantumNumbers, r: f64) -> Result<f64> {
    let coeffs = radial_polynomial(curv, qn)?;
    let p = special::horner(&coeffs, PolyVariable::of(curv).scale(curv) * r * r);
    Ok(p * p * orthogonality_weight(curv, qn.l, r))
}

/// Normalized bound state.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialEigenstate {
    pub qn: QuantumNumbers,
    pub curv: Curvature,
    /// Ascending coefficients of `P_{n_r,l}`, see [`PolyVariable`].
    pub poly_coeffs: Vec<f64>,
    pub norm_constant: f64,
    pub energy: f64,
}

/// Derivatives `(R, R', R'')` at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialJet {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

/// Pointwise residual of the radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub value: f64,
    /// Sum of the magnitudes of the individual terms.
    pub scale: f64,
}

impl Residual {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            0.0
        } else {
            self.value.abs() / self.scale
        }
    }
}

impl RadialEigenstate {
    pub fn new(curv: Curvature, qn: QuantumNumbers) -> Result<Self> {
        let energy = spectrum::energy(curv, qn)?;
        Ok(Self {
            qn,
            curv,
            poly_coeffs: radial_polynomial(curv, qn)?,
            norm_constant: normalization_constant(curv, qn)?,
            energy,
        })
    }

    pub fn variable(&self) -> PolyVariable {
        PolyVariable::of(self.curv)
    }

    /// `P_{n_r,l}` evaluated at radius `r`.
    pub fn polynomial(&self, r: f64) -> f64 {
        special::horner(&self.poly_coeffs, self.variable().scale(self.curv) * r * r)
    }

    /// Unnormalized `r^l (1 - k r^2)^{1/(2k)} P(r)`.
    pub fn shape(&self, r: f64) -> Result<f64> {
        self.check(r)?;
        Ok(r.powi(self.qn.l as i32) * envelope(self.curv, r) * self.polynomial(r))
    }

    /// `R(r) = K r^l (1 - k r^2)^{1/(2k)} P(r)`.
    pub fn radial_function(&self, r: f64) -> Result<f64> {
        Ok(self.norm_constant * self.shape(r)?)
    }

    fn check(&self, r: f64) -> Result<()> {
        let boundary = self.curv.radial_boundary();
        if r >= 0.0 && (r <= boundary) {
            Ok(())
        } else {
            Err(Error::Domain { r, boundary })
        }
    }

    /// `R`, `R'` and `R''` from the closed form, for `0 < r < r_k`.
    pub fn jet(&self, r: f64) -> Result<RadialJet> {
        self.curv.check_radius(r)?;
        if r == 0.0 {
            return Err(Error::Domain {
                r,
                boundary: self.curv.radial_boundary(),
            });
        }
        let k = self.curv.value();
        let l = f64::from(self.qn.l);
        let li = self.qn.l as i32;

        let a0 = r.powi(li);
        let a1 = l * r.powi(li - 1);
        let a2 = l * (l - 1.0) * r.powi(li - 2);

        let f = self.curv.metric_factor(r);
        let e0 = envelope(self.curv, r);
        let d1 = -r / f;
        let e1 = d1 * e0;
        let e2 = (d1 * d1 - (1.0 + k * r * r) / (f * f)) * e0;

        let scale = self.variable().scale(self.curv);
        let t = scale * r * r;
        let dp: Vec<f64> = self
            .poly_coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i as f64)
            .collect();
        let ddp: Vec<f64> = dp
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i as f64)
            .collect();
        let dt = 2.0 * scale * r;
        let p0 = special::horner(&self.poly_coeffs, t);
        let p1 = special::horner(&dp, t) * dt;
        let p2 = special::horner(&ddp, t) * dt * dt + special::horner(&dp, t) * 2.0 * scale;

        let kn = self.norm_constant;
        Ok(RadialJet {
            value: kn * a0 * e0 * p0,
            first: kn * (a1 * e0 * p0 + a0 * e1 * p0 + a0 * e0 * p1),
            second: kn
                * (a2 * e0 * p0
                    + a0 * e2 * p0
                    + a0 * e0 * p2
                    + 2.0 * (a1 * e1 * p0 + a1 * e0 * p1 + a0 * e1 * p1)),
        })
    }

    /// Residual of
    /// `r^2 (1 - k r^2) R'' + r (2 - 3 k r^2) R' - (1 - k) r^4 R / (1 - k r^2)
    ///  + (2E r^2 - l(l+1)) R = 0`.
    pub fn radial_equation_residual(&self, r: f64) -> Result<Residual> {
        let jet = self.jet(r)?;
        let k = self.curv.value();
        let l = f64::from(self.qn.l);
        let f = self.curv.metric_factor(r);
        let r2 = r * r;
        let terms = [
            r2 * f * jet.second,
            r * (2.0 - 3.0 * k * r2) * jet.first,
            -(1.0 - k) * r2 * r2 / f * jet.value,
            (2.0 * self.energy * r2 - l * (l + 1.0)) * jet.value,
        ];
        Ok(Residual {
            value: terms.iter().sum(),
            scale: terms.iter().map(|t| t.abs()).sum(),
        })
    }

    /// Zeros of `R` in the open radial domain, located by sign changes of
    /// the polynomial and refined by bisection.
    pub fn nodes(&self) -> Vec<f64> {
        let n = self.poly_coeffs.len().saturating_sub(1);
        if n == 0 {
            return Vec::new();
        }
        let scale = self.variable().scale(self.curv);
        // Fujiwara bound on the roots of the polynomial in its own variable.
        let lead = self.poly_coeffs[n];
        let bound = 2.0
            * (1..=n)
                .map(|k| {
                    let c = (self.poly_coeffs[n - k] / lead).abs();
                    let c = if k == n { 0.5 * c } else { c };
                    c.powf(1.0 / k as f64)
                })
                .fold(0.0, f64::max);
        let r_end = match self.curv.sign_class() {
            SignClass::Spherical => self.curv.radial_boundary(),
            _ => (bound / scale.abs()).sqrt() * 1.01,
        };
        let samples = 4000 * n;
        let p = |r: f64| self.polynomial(r);
        let mut roots = Vec::with_capacity(n);
        let mut r_prev = 0.0;
        let mut p_prev = p(0.0);
        for i in 1..=samples {
            // Uniform in r^2, where the roots are spread most evenly.
            let r_cur = r_end * (i as f64 / samples as f64).sqrt();
            let p_cur = p(r_cur);
            if p_cur == 0.0 && i < samples {
                roots.push(r_cur);
            } else if p_prev != 0.0 && p_prev.signum() != p_cur.signum() {
                roots.push(bisect(&p, r_prev, r_cur));
            }
            r_prev = r_cur;
            p_prev = p_cur;
        }
        let boundary = self.curv.radial_boundary();
        roots.retain(|&r| r > 0.0 && r < boundary);
        roots
    }

    pub fn node_count(&self) -> usize {
        self.nodes().len()
    }
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `Psi_{n_r,l,m}(r, theta, phi) = R(r) Y_lm(theta, phi)`.
pub fn full_wavefunction(
    state: &RadialEigenstate,
    r: f64,
    theta: f64,
    phi: f64,
) -> Result<Complex64> {
    let radial = state.radial_function(r)?;
    Ok(special::spherical_harmonic(state.qn.l, state.qn.m, theta, phi)? * radial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn curv(k: f64) -> Curvature {
        Curvature::new(k).unwrap()
    }

    fn state(k: f64, n_r: u32, l: u32) -> RadialEigenstate {
        RadialEigenstate::new(curv(k), QuantumNumbers::radial(n_r, l)).unwrap()
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            radial_polynomial(curv(0.3), QuantumNumbers::radial(0, 2)).unwrap(),
            vec![1.0]
        );
        let p = radial_polynomial(curv(1.0), QuantumNumbers::radial(1, 0)).unwrap();
        assert_eq!(p.len(), 2);
        assert!((p[0] - 1.0).abs() < 1e-15 && (p[1] + 2.0).abs() < 1e-14);
    }

    #[test]
    fn polynomial_matches_series() {
        for &k in &[1.0, 0.5, -0.1, -0.05] {
            for n_r in 0..4 {
                for l in 0..3 {
                    let qn = QuantumNumbers::radial(n_r, l);
                    let c = curv(k);
                    let coeffs = radial_polynomial(c, qn).unwrap();
                    let params = polynomial_parameters(c, qn).unwrap();
                    for &t in &[-0.7, -0.1, 0.2, 0.9] {
                        let a = special::horner(&coeffs, t);
                        let b = special::gauss_2f1_polynomial(params, t).unwrap();
                        assert!(
                            (a - b).abs() <= 1e-13 * b.abs().max(1.0),
                            "{k} {n_r} {l} {t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn polynomial_flat_limit() {
        for n_r in 1..4 {
            for l in 0..3 {
                let qn = QuantumNumbers::radial(n_r, l);
                let flat = radial_polynomial(Curvature::FLAT, qn).unwrap();
                let mut prev = f64::INFINITY;
                for &k in &[1e-2, 1e-3, 1e-4, 1e-5] {
                    // coefficient of r^{2j} is c_j k^j
                    let ck = radial_polynomial(curv(k), qn).unwrap();
                    let err = ck
                        .iter()
                        .zip(&flat)
                        .enumerate()
                        .map(|(j, (a, b))| (a * k.powi(j as i32) - b).abs())
                        .fold(0.0, f64::max);
                    assert!(err < prev);
                    prev = err;
                }
                assert!(prev < 1e-3);
            }
        }
    }

    #[test]
    fn ground_state_flat() {
        let s = state(0.0, 0, 0);
        assert_eq!(s.radial_function(0.0).unwrap(), s.norm_constant);
        assert!(
            (s.radial_function(1.3).unwrap() - s.norm_constant * (-0.845f64).exp()).abs() < 1e-14
        );
    }

    #[test]
    fn vanishes_on_the_equator() {
        for n_r in 0..3 {
            for l in 0..3 {
                let s = state(0.5, n_r, l);
                assert!(
                    s.radial_function(curv(0.5).radial_boundary())
                        .unwrap()
                        .abs()
                        < 1e-14
                );
            }
        }
        assert!(state(0.5, 0, 0).radial_function(1.5).is_err());
    }

    #[test]
    fn node_of_first_excited_state() {
        let s = state(1.0, 1, 0);
        let nodes = s.nodes();
        assert_eq!(nodes.len(), 1);
        assert!((nodes[0] - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn node_count_equals_n_r() {
        for &k in &[1.0, 0.25, 0.0, -0.02, -0.05] {
            for n_r in 0..=6 {
                for l in 0..3 {
                    if !spectrum::is_admissible(curv(k), 2 * n_r + l) {
                        continue;
                    }
                    assert_eq!(state(k, n_r, l).node_count(), n_r as usize, "{k} {n_r} {l}");
                }
            }
        }
    }

    #[test]
    fn normalization_examples() {
        let c1 = curv(1.0);
        let q0 = QuantumNumbers::radial(0, 0);
        assert!((normalization_integral(c1, q0).unwrap() - PI / 16.0).abs() < 1e-14);
        assert!((normalization_constant(c1, q0).unwrap() - 2.256_758_334_191_025).abs() < 1e-12);
        let ch = curv(-0.25);
        assert!((normalization_integral(ch, q0).unwrap() - 0.609_523_809_523_809_5).abs() < 1e-12);
        assert!((normalization_constant(ch, q0).unwrap() - (105.0f64 / 64.0).sqrt()).abs() < 1e-12);
        assert!(matches!(
            normalization_integral(curv(-0.5), QuantumNumbers::radial(1, 0)),
            Err(Error::DivergentNorm { n: 2, .. })
        ));
        // flat ground state: ∫ r^2 exp(-r^2) = sqrt(pi)/4
        assert!(
            (normalization_integral(Curvature::FLAT, q0).unwrap() - PI.sqrt() / 4.0).abs() < 1e-15
        );
    }

    #[test]
    fn marginal_state_diverges() {
        // 1/|k| - 1 = 3: n = 3 sits on the threshold
        assert!(matches!(
            normalization_integral(curv(-0.25), QuantumNumbers::radial(1, 1)),
            Err(Error::DivergentNorm { n: 3, .. })
        ));
        assert!(RadialEigenstate::new(curv(-0.25), QuantumNumbers::radial(0, 3)).is_err());
    }

    #[test]
    fn normalization_continuous_in_kappa() {
        for n_r in 0..3 {
            for l in 0..3 {
                let qn = QuantumNumbers::radial(n_r, l);
                let flat = normalization_integral(Curvature::FLAT, qn).unwrap();
                for &k in &[1e-6, -1e-6] {
                    let v = normalization_integral(curv(k), qn).unwrap();
                    assert!((v / flat - 1.0).abs() < 1e-4, "{k} {n_r} {l}");
                }
            }
        }
    }

    #[test]
    fn envelope_limits() {
        assert_eq!(envelope(curv(1.0), 1.0), 0.0);
        for &r in &[0.1f64, 1.0, 3.0] {
            let flat = (-0.5 * r * r).exp();
            assert!((envelope(Curvature::FLAT, r) - flat).abs() < 1e-16);
            assert!((envelope(curv(1e-12), r) / flat - 1.0).abs() < 1e-10);
            assert!((envelope(curv(-1e-12), r) / flat - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn residual_vanishes() {
        for &k in &[1.0, 0.3, 0.0, -0.05, -0.2] {
            for n_r in 0..3 {
                for l in 0..3 {
                    let c = curv(k);
                    if !spectrum::is_admissible(c, 2 * n_r + l) {
                        continue;
                    }
                    let s = state(k, n_r, l);
                    let r_end = if k > 0.0 {
                        c.radial_boundary() * 0.99
                    } else {
                        4.0
                    };
                    for i in 1..50 {
                        let r = r_end * f64::from(i) / 50.0;
                        let res = s.radial_equation_residual(r).unwrap();
                        assert!(res.relative() < 1e-10, "{k} {n_r} {l} {r}: {res:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_energy_leaves_a_residual() {
        let mut s = state(0.3, 1, 1);
        s.energy += 1e-3;
        let worst = (1..20)
            .map(|i| {
                s.radial_equation_residual(0.08 * f64::from(i))
                    .unwrap()
                    .relative()
            })
            .fold(0.0, f64::max);
        assert!(worst > 1e-6);
    }

    #[test]
    fn indicial_roots() {
        assert_eq!(indicial_exponents(0), (0, -1));
        assert_eq!(indicial_exponents(3), (3, -4));
    }

    #[test]
    fn weights_consistent() {
        let c = curv(0.4);
        let r = 0.9;
        let q = orthogonality_weight(c, 1, r);
        let p = integrating_factor(c, 1, r);
        assert!((p / q - c.metric_factor(r)).abs() < 1e-15);
        let direct = r.powi(4) * c.metric_factor(r).powf(1.0 / 0.4 - 0.5);
        assert!((q / direct - 1.0).abs() < 1e-13);
    }

    #[test]
    fn euclidean_ground_state_wavefunction() {
        let s = state(0.0, 0, 0);
        let psi = full_wavefunction(&s, 0.7, 1.1, 2.0).unwrap();
        let expected = s.norm_constant * (-0.245f64).exp() / (4.0 * PI).sqrt();
        assert!((psi.re - expected).abs() < 1e-14 && psi.im.abs() < 1e-16);
    }

    #[test]
    fn wavefunction_zero_on_boundary() {
        let s = RadialEigenstate::new(curv(0.5), QuantumNumbers::new(1, 1, 1).unwrap()).unwrap();
        let psi = full_wavefunction(&s, curv(0.5).radial_boundary(), 0.4, 0.3).unwrap();
        assert!(psi.norm() < 1e-14);
    }
}
