//! Special functions: Gamma, Pochhammer, terminating hypergeometric series
//! and spherical harmonics.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SQRT_2PI: f64 = 2.506_628_274_631_000_2;

/// Largest argument for which `Gamma(x)` is finite in `f64`.
const GAMMA_OVERFLOW: f64 = 171.624_376_956_302_7;

/// Stirling correction `ln Gamma(x) - [(x - 1/2) ln x - x + ln sqrt(2 pi)]`,
/// accurate to ~1e-17 for `x >= 10`.
fn stirling_correction(x: f64) -> f64 {
    // B_{2k} / (2k (2k - 1)) for k = 1..7
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut acc = 0.0;
    for c in C.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc * inv
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Natural logarithm of `|Gamma(x)|`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "Gamma",
            x,
        });
    }
    if x < 0.5 {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        let s = (PI * x).sin().abs();
        return Ok(PI.ln() - s.ln() - ln_gamma(1.0 - x)?);
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += y.ln();
        y += 1.0;
    }
    Ok((y - 0.5) * y.ln() - y + LN_SQRT_2PI + stirling_correction(y) - shift)
}

/// The Gamma function.
///
/// Arguments at or beyond the overflow point return `+inf`.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "Gamma",
            x,
        });
    }
    if x < 0.5 {
        return Ok(PI / ((PI * x).sin() * gamma_fn(1.0 - x)?));
    }
    if x >= GAMMA_OVERFLOW {
        return Ok(f64::INFINITY);
    }
    let mut y = x;
    let mut denom = 1.0;
    while y < 10.0 {
        denom *= y;
        y += 1.0;
    }
    // x^(x - 1/2) is split in two halves to stay finite up to the overflow
    // point.
    let half = y.powf(0.5 * y - 0.25);
    let g = SQRT_2PI * half * (half * (-y).exp()) * stirling_correction(y).exp();
    Ok(g / denom)
}

/// `Gamma(a) / Gamma(b)` for positive `a` and `b`, evaluated through
/// logarithms so that large, nearly equal arguments do not overflow.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if a <= 0.0 || b <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "gamma_ratio needs positive arguments, got ({a}, {b})"
        )));
    }
    if a < 150.0 && b < 150.0 {
        return Ok(gamma_fn(a)? / gamma_fn(b)?);
    }
    Ok((ln_gamma(a)? - ln_gamma(b)?).exp())
}

/// Rising factorial `(a)_n = a (a + 1) ... (a + n - 1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + f64::from(k)))
}

pub fn factorial(n: u32) -> f64 {
    pochhammer(1.0, n)
}

/// If `a` is (numerically) `0, -1, -2, ...`, return the degree `-a`.
fn terminating_degree(a: f64) -> Option<u32> {
    let rounded = a.round();
    if rounded <= 0.0 && (a - rounded).abs() <= 1e-9 * a.abs().max(1.0) {
        Some((-rounded) as u32)
    } else {
        None
    }
}

/// Parameters `(a, b; c)` of a Gauss hypergeometric series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypergeometricParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if is_nonpositive_integer(c) || !c.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "lower parameter c = {c} must not be zero or a negative integer"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// Degree of the polynomial when `a` is a non-positive integer.
    pub fn degree(&self) -> Option<u32> {
        terminating_degree(self.a)
    }
}

/// Coefficients `(a)_k (b)_k / ((c)_k k!)` of a terminating series whose
/// upper parameter is `-n`.
fn terminating_coefficients(n: u32, b: Option<f64>, c: f64) -> Vec<f64> {
    let a = -f64::from(n);
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut term = 1.0;
    coeffs.push(term);
    for k in 0..n {
        let kf = f64::from(k);
        let bk = b.map_or(1.0, |b| b + kf);
        term *= (a + kf) * bk / ((c + kf) * (kf + 1.0));
        coeffs.push(term);
    }
    coeffs
}

/// Nested (Horner-type) evaluation of a terminating series:
/// `1 + r_0 t (1 + r_1 t (1 + ...))`, `r_k` the ratio of consecutive terms.
fn terminating_sum(n: u32, b: Option<f64>, c: f64, t: f64) -> f64 {
    let a = -f64::from(n);
    let mut acc = 1.0;
    for k in (0..n).rev() {
        let kf = f64::from(k);
        let bk = b.map_or(1.0, |b| b + kf);
        let ratio = (a + kf) * bk / ((c + kf) * (kf + 1.0));
        acc = 1.0 + ratio * t * acc;
    }
    acc
}

/// `2F1(-n, b; c; t)` for a non-positive integer upper parameter `a = -n`.
///
/// The series stops after `n + 1` terms, so any real `t` is allowed.
pub fn gauss_2f1_polynomial(params: HypergeometricParams, t: f64) -> Result<f64> {
    let n = params
        .degree()
        .ok_or(Error::NonTerminating { a: params.a })?;
    Ok(terminating_sum(n, Some(params.b), params.c, t))
}

/// Power-series coefficients (in `t`) of the terminating `2F1(-n, b; c; t)`.
pub fn gauss_2f1_coefficients(params: HypergeometricParams) -> Result<Vec<f64>> {
    let n = params
        .degree()
        .ok_or(Error::NonTerminating { a: params.a })?;
    Ok(terminating_coefficients(n, Some(params.b), params.c))
}

fn check_lower(c: f64) -> Result<()> {
    if is_nonpositive_integer(c) || !c.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "lower parameter c = {c} must not be zero or a negative integer"
        )));
    }
    Ok(())
}

/// Kummer's `1F1(-n; c; x)` for a non-positive integer `a = -n`.
pub fn confluent_1f1_polynomial(a: f64, c: f64, x: f64) -> Result<f64> {
    check_lower(c)?;
    let n = terminating_degree(a).ok_or(Error::NonTerminating { a })?;
    Ok(terminating_sum(n, None, c, x))
}

/// Power-series coefficients (in `x`) of the terminating `1F1(-n; c; x)`.
pub fn confluent_1f1_coefficients(a: f64, c: f64) -> Result<Vec<f64>> {
    check_lower(c)?;
    let n = terminating_degree(a).ok_or(Error::NonTerminating { a })?;
    Ok(terminating_coefficients(n, None, c))
}

/// Evaluate a polynomial given by ascending coefficients.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Orthonormal associated Legendre function
/// `sqrt((2l + 1)/(4 pi) (l - m)!/(l + m)!) P_l^m(x)` for `0 <= m <= l`,
/// including the Condon–Shortley phase `(-1)^m`.
pub fn normalized_legendre(l: u32, m: u32, x: f64) -> f64 {
    debug_assert!(m <= l);
    let sin_theta = (1.0 - x * x).max(0.0).sqrt();
    // P_m^m
    let mut pmm = 1.0 / (4.0 * PI).sqrt();
    for k in 1..=m {
        let kf = f64::from(k);
        pmm *= -((2.0 * kf + 1.0) / (2.0 * kf)).sqrt() * sin_theta;
    }
    if l == m {
        return pmm;
    }
    let mf = f64::from(m);
    let mut p_prev = pmm;
    let mut p_curr = x * (2.0 * mf + 3.0).sqrt() * pmm;
    for ll in (m + 2)..=l {
        let lf = f64::from(ll);
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let lm1 = lf - 1.0;
        let a_prev = ((4.0 * lm1 * lm1 - 1.0) / (lm1 * lm1 - mf * mf)).sqrt();
        let next = a * (x * p_curr - p_prev / a_prev);
        p_prev = p_curr;
        p_curr = next;
    }
    p_curr
}

/// Spherical harmonic `Y_lm(theta, phi)`, orthonormal on the unit sphere,
/// Condon–Shortley phase.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if m.unsigned_abs() > l {
        return Err(Error::InvalidArgument(format!(
            "spherical harmonic needs |m| <= l, got l = {l}, m = {m}"
        )));
    }
    let am = m.unsigned_abs();
    let p = normalized_legendre(l, am, theta.cos());
    let y = Complex64::from_polar(p, f64::from(am as i32) * phi);
    if m < 0 {
        let sign = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(y.conj() * sign)
    } else {
        Ok(y)
    }
}
