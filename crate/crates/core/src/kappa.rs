//! Curvature-dependent geometry of the oscillator.
//!
//! The configuration space is written in the chart `(r, theta, phi)` with
//! `r = Sin_k(rho)`, `rho` the geodesic distance from the centre. In that
//! chart the metric is `dr^2 / (1 - k r^2) + r^2 dOmega^2`, the invariant
//! volume is `r^2 sin(theta) / sqrt(1 - k r^2) dr dtheta dphi` and the
//! oscillator potential is `1/2 r^2 / (1 - k r^2)`.
//!
//! On the sphere (`k > 0`) the chart covers one hemisphere and the potential
//! wall sits at `r = 1/sqrt(k)`. On the hyperbolic space (`k < 0`) the chart
//! covers everything and the potential stays bounded.
//!
//! Units: lengths in `sqrt(hbar / (m alpha))`, energies in `hbar alpha`,
//! curvature in `m alpha / hbar` (see [`PhysicalScales`]). The quantum
//! problem is solved after the shift `alpha^2 -> alpha^2 - (k hbar / m) alpha`
//! of the potential parameter, so the energies, polynomials and
//! normalizations in this crate refer to the shifted parameter. The classical
//! Hamiltonian uses the unshifted `alpha = 1`.

use crate::error::{Error, Result};

/// Below this value of `|k| x^2` the curvature-dependent trigonometric
/// functions switch to their Taylor series in `k`.
pub const SERIES_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Spherical,
    Flat,
    Hyperbolic,
}

/// Dimensionless curvature `k = (hbar / (m alpha)) * kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature {
    kappa: f64,
}

impl Curvature {
    pub const FLAT: Curvature = Curvature { kappa: 0.0 };

    pub fn new(kappa: f64) -> Result<Self> {
        if !kappa.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "curvature must be finite, got {kappa}"
            )));
        }
        // Normalise -0.0 so that the sign class is unambiguous.
        let kappa = if kappa == 0.0 { 0.0 } else { kappa };
        Ok(Self { kappa })
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.kappa
    }

    pub fn sign_class(self) -> SignClass {
        if self.kappa > 0.0 {
            SignClass::Spherical
        } else if self.kappa < 0.0 {
            SignClass::Hyperbolic
        } else {
            SignClass::Flat
        }
    }

    pub fn is_flat(self) -> bool {
        self.kappa == 0.0
    }

    /// Radial boundary `r_k = 1/sqrt(k)` on the sphere, `+inf` otherwise.
    pub fn radial_boundary(self) -> f64 {
        if self.kappa > 0.0 {
            1.0 / self.kappa.sqrt()
        } else {
            f64::INFINITY
        }
    }

    /// Geodesic distance of the radial boundary (the equator on the sphere).
    pub fn geodesic_boundary(self) -> f64 {
        if self.kappa > 0.0 {
            std::f64::consts::FRAC_PI_2 / self.kappa.sqrt()
        } else {
            f64::INFINITY
        }
    }

    /// Whether `r` lies in the half-open radial domain `[0, r_k)`.
    pub fn contains(self, r: f64) -> bool {
        r >= 0.0 && r < self.radial_boundary()
    }

    pub fn check_radius(self, r: f64) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::Domain {
                r,
                boundary: self.radial_boundary(),
            })
        }
    }

    /// `1 - k r^2`, the inverse of the radial metric factor.
    #[inline]
    pub fn metric_factor(self, r: f64) -> f64 {
        1.0 - self.kappa * r * r
    }
}

impl TryFrom<f64> for Curvature {
    type Error = Error;

    fn try_from(kappa: f64) -> Result<Self> {
        Curvature::new(kappa)
    }
}

/// `Cos_k(x)`: `cos(sqrt(k) x)`, `1` or `cosh(sqrt(-k) x)`.
pub fn kappa_cos(kappa: f64, x: f64) -> f64 {
    let kx2 = kappa * x * x;
    if kx2.abs() < SERIES_THRESHOLD {
        1.0 - 0.5 * kx2 + kx2 * kx2 / 24.0
    } else if kappa > 0.0 {
        (kappa.sqrt() * x).cos()
    } else {
        ((-kappa).sqrt() * x).cosh()
    }
}

/// `Sin_k(x)`: `sin(sqrt(k) x)/sqrt(k)`, `x` or `sinh(sqrt(-k) x)/sqrt(-k)`.
pub fn kappa_sin(kappa: f64, x: f64) -> f64 {
    let kx2 = kappa * x * x;
    if kx2.abs() < SERIES_THRESHOLD {
        x * (1.0 - kx2 / 6.0 + kx2 * kx2 / 120.0)
    } else if kappa > 0.0 {
        let s = kappa.sqrt();
        (s * x).sin() / s
    } else {
        let s = (-kappa).sqrt();
        (s * x).sinh() / s
    }
}

/// `Tan_k(x) = Sin_k(x) / Cos_k(x)`; errors at the zeros of `Cos_k`.
pub fn kappa_tan(kappa: f64, x: f64) -> Result<f64> {
    let c = kappa_cos(kappa, x);
    if c.abs() <= 4.0 * f64::EPSILON {
        return Err(Error::Pole {
            function: "Tan_k",
            x,
        });
    }
    Ok(kappa_sin(kappa, x) / c)
}

/// Inverse of `Sin_k`: the geodesic distance of the chart radius `r`.
///
/// On the sphere this is only defined for `r <= 1/sqrt(k)` and returns the
/// branch on the upper hemisphere.
pub fn geodesic_distance(kappa: f64, r: f64) -> f64 {
    let kr2 = kappa * r * r;
    if kr2.abs() < SERIES_THRESHOLD {
        r * (1.0 + kr2 / 6.0 + 3.0 * kr2 * kr2 / 40.0)
    } else if kappa > 0.0 {
        let s = kappa.sqrt();
        (s * r).min(1.0).asin() / s
    } else {
        let s = (-kappa).sqrt();
        (s * r).asinh() / s
    }
}

/// Oscillator potential `U(r) = 1/2 r^2 / (1 - k r^2)` (with `alpha = 1`).
pub fn potential(curv: Curvature, r: f64) -> Result<f64> {
    curv.check_radius(r)?;
    Ok(0.5 * r * r / curv.metric_factor(r))
}

/// Large-`r` limit of the potential: `1/(2|k|)` on the hyperbolic space.
pub fn potential_asymptote(curv: Curvature) -> f64 {
    match curv.sign_class() {
        SignClass::Hyperbolic => 0.5 / curv.value().abs(),
        _ => f64::INFINITY,
    }
}

/// Radial factor `r^2 / sqrt(1 - k r^2)` of the invariant measure.
pub fn measure_weight(curv: Curvature, r: f64) -> Result<f64> {
    curv.check_radius(r)?;
    if curv.is_flat() {
        return Ok(r * r);
    }
    Ok(r * r / curv.metric_factor(r).sqrt())
}

/// Bottom of the continuous spectrum on the hyperbolic space, in units of
/// `hbar alpha`.
///
/// With the coupling `alpha^2 - k alpha` used throughout, the potential tends
/// to `(1 + |k|) / (2|k|)` and the free Laplacian on a space of curvature
/// `k < 0` has its spectrum starting at `|k| / 2`.
pub fn continuum_threshold(curv: Curvature) -> Option<f64> {
    match curv.sign_class() {
        SignClass::Hyperbolic => {
            let a = curv.value().abs();
            Some(0.5 / a + 0.5 + 0.5 * a)
        }
        _ => None,
    }
}

/// Mass, frequency-like coupling and Planck constant fixing the units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalScales {
    mass: f64,
    alpha: f64,
    hbar: f64,
}

/// A radius, curvature and energy in physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalPoint {
    pub r: f64,
    pub kappa: f64,
    pub energy: f64,
}

/// The same triple in the dimensionless system `(rho, k, E)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessPoint {
    pub rho: f64,
    pub kappa: f64,
    pub energy: f64,
}

impl PhysicalScales {
    pub fn new(mass: f64, alpha: f64, hbar: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(mass) && ok(alpha) && ok(hbar) {
            Ok(Self { mass, alpha, hbar })
        } else {
            Err(Error::InvalidScales)
        }
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `sqrt(hbar / (m alpha))`.
    pub fn length_unit(&self) -> f64 {
        (self.hbar / (self.mass * self.alpha)).sqrt()
    }

    /// `m alpha / hbar`.
    pub fn curvature_unit(&self) -> f64 {
        self.mass * self.alpha / self.hbar
    }

    /// `hbar alpha`.
    pub fn energy_unit(&self) -> f64 {
        self.hbar * self.alpha
    }

    pub fn to_dimensionless(&self, p: PhysicalPoint) -> DimensionlessPoint {
        DimensionlessPoint {
            rho: p.r / self.length_unit(),
            kappa: p.kappa / self.curvature_unit(),
            energy: p.energy / self.energy_unit(),
        }
    }

    pub fn from_dimensionless(&self, d: DimensionlessPoint) -> PhysicalPoint {
        PhysicalPoint {
            r: d.rho * self.length_unit(),
            kappa: d.kappa * self.curvature_unit(),
            energy: d.energy * self.energy_unit(),
        }
    }
}
