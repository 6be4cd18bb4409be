//! Exact bound-state spectrum.
//!
//! The levels are `E_n = (n + 3/2) + k n (n + 2) / 2` with principal number
//! `n = 2 n_r + l`, each `(n + 1)(n + 2)/2`-fold degenerate. On the hyperbolic
//! space only the levels with `n < 1/|k| - 1` are bound.

use crate::error::{Error, Result};
use crate::kappa::{self, Curvature, SignClass};
use crate::special::HypergeometricParams;

/// Relative slack used when deciding whether `1/|k| - 1` is an integer.
const CUTOFF_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n_r: u32,
    pub l: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub fn new(n_r: u32, l: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > l {
            return Err(Error::InvalidQuantumNumbers { n_r, l, m });
        }
        Ok(Self { n_r, l, m })
    }

    /// Radial state with `m = 0`.
    pub fn radial(n_r: u32, l: u32) -> Self {
        Self { n_r, l, m: 0 }
    }

    /// Principal quantum number `n = 2 n_r + l`.
    pub fn principal(&self) -> u32 {
        2 * self.n_r + self.l
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub energy: f64,
    pub degeneracy: u64,
}

/// Hyperbolic cutoff `1/|k| - 1`; `None` when every level is bound.
pub fn hyperbolic_cutoff(curv: Curvature) -> Option<f64> {
    match curv.sign_class() {
        SignClass::Hyperbolic => Some(1.0 / curv.value().abs() - 1.0),
        _ => None,
    }
}

/// Integer value of the cutoff when `1/|k| - 1` is (numerically) an integer.
fn integral_cutoff(cutoff: f64) -> Option<u32> {
    let rounded = cutoff.round();
    let exact = (cutoff - rounded).abs() <= CUTOFF_SLACK * cutoff.abs().max(1.0);
    (exact && rounded >= 0.0).then_some(rounded as u32)
}

/// Whether the level `n` is a normalizable bound state: always on the sphere
/// and in flat space, `n < 1/|k| - 1` (strictly) on the hyperbolic space.
pub fn is_admissible(curv: Curvature, n: u32) -> bool {
    match hyperbolic_cutoff(curv) {
        None => true,
        Some(cutoff) => match integral_cutoff(cutoff) {
            Some(marginal) => n < marginal,
            None => f64::from(n) < cutoff,
        },
    }
}

fn check_admissible(curv: Curvature, n: u32) -> Result<()> {
    if is_admissible(curv, n) {
        Ok(())
    } else {
        Err(Error::NoBoundState {
            n,
            cutoff: hyperbolic_cutoff(curv).unwrap_or(f64::INFINITY),
        })
    }
}

/// `E_n` from the closed form, without checking whether the level is bound.
pub fn level_energy(curv: Curvature, n: u32) -> f64 {
    let nf = f64::from(n);
    (nf + 1.5) + 0.5 * curv.value() * nf * (nf + 2.0)
}

/// Energy of the level `n`, which must be bound.
pub fn energy_of_level(curv: Curvature, n: u32) -> Result<f64> {
    check_admissible(curv, n)?;
    Ok(level_energy(curv, n))
}

/// `E_{n_r, l} = (2 n_r + l + 3/2) + k (2 n_r + l)(2 n_r + l + 2) / 2`.
pub fn energy(curv: Curvature, qn: QuantumNumbers) -> Result<f64> {
    energy_of_level(curv, qn.principal())
}

/// `E_{n+1} - E_n = 1 + k (n + 3/2)`.
pub fn energy_gap(curv: Curvature, n: u32) -> Result<f64> {
    check_admissible(curv, n + 1)?;
    Ok(1.0 + curv.value() * (f64::from(n) + 1.5))
}

/// `(n + 1)(n + 2) / 2`.
pub fn degeneracy(n: u32) -> u64 {
    let n = u64::from(n);
    (n + 1) * (n + 2) / 2
}

/// All `(n_r, l, m)` with `2 n_r + l = n`.
pub fn states_of_level(n: u32) -> impl Iterator<Item = QuantumNumbers> {
    (0..=n / 2).flat_map(move |n_r| {
        let l = n - 2 * n_r;
        (-(l as i32)..=l as i32).map(move |m| QuantumNumbers { n_r, l, m })
    })
}

fn level(curv: Curvature, n: u32) -> EnergyLevel {
    EnergyLevel {
        n,
        energy: level_energy(curv, n),
        degeneracy: degeneracy(n),
    }
}

/// Unbounded sequence of levels on the sphere or in flat space.
#[derive(Debug, Clone)]
pub struct LevelIter {
    curv: Curvature,
    next: u32,
}

impl Iterator for LevelIter {
    type Item = EnergyLevel;

    fn next(&mut self) -> Option<EnergyLevel> {
        let l = level(self.curv, self.next);
        self.next += 1;
        Some(l)
    }
}

/// Bound levels on the hyperbolic space.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteCensus {
    /// Largest bound `n`, `None` when there are no bound states.
    pub n_max: Option<u32>,
    pub levels: Vec<EnergyLevel>,
    pub total_states: u64,
    /// `n = 1/|k| - 1` when that is an integer. Such a level sits exactly at
    /// the continuum threshold, its normalization integral diverges and it is
    /// not counted as bound.
    pub marginal_n: Option<u32>,
    /// Energies above this value belong to scattering states.
    pub continuum_threshold: f64,
}

#[derive(Debug, Clone)]
pub enum BoundStateCensus {
    /// Sphere or flat space: infinitely many bound levels.
    Unbounded(LevelIter),
    Finite(FiniteCensus),
}

impl BoundStateCensus {
    pub fn is_finite(&self) -> bool {
        matches!(self, BoundStateCensus::Finite(_))
    }
}

pub fn bound_state_census(curv: Curvature) -> BoundStateCensus {
    let Some(cutoff) = hyperbolic_cutoff(curv) else {
        return BoundStateCensus::Unbounded(LevelIter { curv, next: 0 });
    };
    let marginal_n = integral_cutoff(cutoff);
    let n_max = if cutoff <= 0.0 {
        None
    } else {
        match marginal_n {
            Some(m) => m.checked_sub(1),
            None => Some(cutoff.ceil() as u32 - 1),
        }
    };
    let levels: Vec<EnergyLevel> = match n_max {
        Some(top) => (0..=top).map(|n| level(curv, n)).collect(),
        None => Vec::new(),
    };
    let total_states = levels.iter().map(|l| l.degeneracy).sum();
    BoundStateCensus::Finite(FiniteCensus {
        n_max,
        levels,
        total_states,
        marginal_n,
        continuum_threshold: kappa::continuum_threshold(curv)
            .expect("hyperbolic curvature has a continuum threshold"),
    })
}

/// Gauss hypergeometric parameters `(a_k, b_k; l + 3/2)` of the radial
/// equation at energy `E`, upper-sign branch:
/// `a_k = (A - sqrt(B)) / (2k)`, `b_k = (A + sqrt(B)) / (2k)` with
/// `A = 1 + k (l + 1)` and `B = 1 + (2E - 1) k + k^2`.
pub fn hypergeometric_parameters(
    curv: Curvature,
    l: u32,
    energy: f64,
) -> Result<HypergeometricParams> {
    let k = curv.value();
    if k == 0.0 {
        return Err(Error::InvalidArgument(
            "flat space has a confluent, not a Gauss, hypergeometric equation".into(),
        ));
    }
    let lf = f64::from(l);
    let big_a = 1.0 + k * (lf + 1.0);
    let big_b = 1.0 + (2.0 * energy - 1.0) * k + k * k;
    if big_b < 0.0 {
        return Err(Error::ComplexParameters { b: big_b });
    }
    let root = big_b.sqrt();
    // A^2 - B = k [2l + 3 - 2E + k l (l + 2)], so a_k is computed without
    // dividing a cancelling difference by k.
    let a = if big_a + root != 0.0 {
        (2.0 * lf + 3.0 - 2.0 * energy + k * lf * (lf + 2.0)) / (2.0 * (big_a + root))
    } else {
        (big_a - root) / (2.0 * k)
    };
    let b = (big_a + root) / (2.0 * k);
    HypergeometricParams::new(a, b, lf + 1.5)
}
