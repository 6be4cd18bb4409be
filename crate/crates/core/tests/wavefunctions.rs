use std::f64::consts::PI;

use curvosc::classical::{self, ClassicalState};
use curvosc::oracle::{quadrature, Domain};
use curvosc::spectrum::QuantumNumbers;
use curvosc::wavefunctions::{full_wavefunction, RadialEigenstate};
use curvosc::{kappa, Curvature};

fn curv(k: f64) -> Curvature {
    Curvature::new(k).unwrap()
}

/// `∫∫∫ |Psi|^2 dmu` with `phi` done analytically, since `|Y_lm|^2` does not
/// depend on it.
fn total_probability(k: f64, n_r: u32, l: u32, m: i32) -> f64 {
    let c = curv(k);
    let qn = QuantumNumbers::new(n_r, l, m).unwrap();
    let state = RadialEigenstate::new(c, qn).unwrap();
    let radial = |r: f64| {
        if !c.contains(r) {
            return 0.0;
        }
        let theta_integral = quadrature(
            |theta: f64| {
                let psi = full_wavefunction(&state, r, theta, 0.3).unwrap();
                psi.norm_sqr() * theta.sin()
            },
            Domain::Finite { a: 0.0, b: PI },
            1e-12,
        );
        2.0 * PI * theta_integral.value * kappa::measure_weight(c, r).unwrap()
    };
    let domain = if k > 0.0 {
        Domain::Finite {
            a: 0.0,
            b: c.radial_boundary(),
        }
    } else {
        Domain::SemiInfinite { a: 0.0, scale: 1.0 }
    };
    let q = quadrature(radial, domain, 1e-11);
    assert!(q.converged);
    q.value
}

#[test]
fn full_wavefunction_is_normalized() {
    for &(k, n_r, l, m) in &[
        (0.5, 1, 1, 0),
        (0.5, 1, 1, 1),
        (-0.1, 1, 2, -2),
        (0.0, 2, 1, 1),
    ] {
        let p = total_probability(k, n_r, l, m);
        assert!(
            (p - 1.0).abs() < 1e-8,
            "kappa = {k}, ({n_r}, {l}, {m}): {p}"
        );
    }
}

#[test]
fn hyperbolic_states_decay() {
    // Including the top bound level at kappa = -0.1 (n = 8 < 9), whose tail
    // is the slowest.
    for &(k, n_r, l) in &[(-0.25, 0, 0), (-0.25, 1, 0), (-0.1, 4, 0), (-0.1, 3, 2)] {
        let s = RadialEigenstate::new(curv(k), QuantumNumbers::radial(n_r, l)).unwrap();
        let tail: Vec<f64> = [1e2, 1e3, 1e4, 1e5, 1e6]
            .iter()
            .map(|&r| s.radial_function(r).unwrap().abs())
            .collect();
        assert!(tail.windows(2).all(|w| w[1] < w[0]), "{tail:?}");
        assert!(tail[4] < 1e-6 * tail[0], "kappa = {k}: {tail:?}");
    }
}

#[test]
fn spherical_states_vanish_at_the_equator() {
    for &k in &[0.25, 1.0] {
        let c = curv(k);
        let edge = c.radial_boundary() * (1.0 - 1e-12);
        for l in 0..3 {
            let s = RadialEigenstate::new(c, QuantumNumbers::radial(1, l)).unwrap();
            let peak = (1..100)
                .map(|i| s.radial_function(edge * i as f64 / 100.0).unwrap().abs())
                .fold(0.0, f64::max);
            assert!(s.radial_function(edge).unwrap().abs() < 1e-4 * peak);
        }
    }
}

#[test]
fn spherical_and_cartesian_constants_agree() {
    let c = curv(0.3);
    let s = ClassicalState {
        r: 1.1,
        theta: 0.9,
        phi: -0.4,
        p_r: 0.35,
        p_theta: -0.2,
        p_phi: 0.6,
    };
    let a = classical::evaluate_conserved(c, &s).unwrap();
    let b = classical::conserved_cartesian(c, &s.to_cartesian()).unwrap();
    assert!((a.h - b.h).abs() < 1e-13);
    for i in 0..3 {
        assert!((a.j[i] - b.j[i]).abs() < 1e-13);
        assert!((a.p[i] - b.p[i]).abs() < 1e-13);
        assert!((a.x[i] - b.x[i]).abs() < 1e-13);
        for j in 0..3 {
            assert!((a.f[i][j] - b.f[i][j]).abs() < 1e-13);
        }
    }
}
