use curvosc::oracle::{build_sl_problem, solve_eigenvalues, SLDiscretization};
use curvosc::spectrum::{self, QuantumNumbers};
use curvosc::{Curvature, Error};

fn curv(k: f64) -> Curvature {
    Curvature::new(k).unwrap()
}

#[test]
fn eigenvectors_are_mass_orthonormal() {
    let prob = build_sl_problem(curv(0.25), 1);
    let disc = SLDiscretization::assemble(&prob, prob.curv.geodesic_boundary(), 800).unwrap();
    let lambdas = disc.eigenvalues(3).unwrap();
    let vecs: Vec<Vec<f64>> = lambdas.iter().map(|&l| disc.eigenvector(l)).collect();
    for i in 0..3 {
        for j in 0..3 {
            let ip = disc.mass_inner(&vecs[i], &vecs[j]);
            let expected = if i == j { 1.0 } else { 0.0 };
            assert!((ip - expected).abs() < 1e-10, "({i}, {j}): {ip}");
        }
        // g is M-normalized, so g^T K g is the Rayleigh quotient.
        let kg = disc.apply(&vecs[i], 0.0);
        let rayleigh: f64 = vecs[i].iter().zip(&kg).map(|(a, b)| a * b).sum();
        assert!(
            (rayleigh - lambdas[i]).abs() < 1e-9 * lambdas[i].abs().max(1.0),
            "{rayleigh} vs {}",
            lambdas[i]
        );
    }
}

#[test]
fn error_falls_as_h_squared() {
    let c = curv(-0.1);
    let prob = build_sl_problem(c, 0);
    let closed = spectrum::energy(c, QuantumNumbers::radial(1, 0)).unwrap();
    let lam = prob.energy_to_lambda(closed);
    let errs: Vec<f64> = [500, 1000, 2000]
        .iter()
        .map(|&n| (solve_eigenvalues(&prob, n, 2).unwrap().lambdas[1] - lam).abs())
        .collect();
    for w in errs.windows(2) {
        let ratio = w[0] / w[1];
        assert!(
            (3.8..4.2).contains(&ratio),
            "ratio {ratio}, errors {errs:?}"
        );
    }
}

#[test]
fn richardson_sharpens_excited_levels() {
    for &k in &[0.5, -0.1] {
        let c = curv(k);
        let sol = solve_eigenvalues(&build_sl_problem(c, 2), 1000, 3).unwrap();
        for n_r in 1..3 {
            let closed = spectrum::energy(c, QuantumNumbers::radial(n_r as u32, 2)).unwrap();
            let raw = (sol.energies[n_r] - closed).abs();
            let extrapolated = (sol.richardson_energies[n_r] - closed).abs();
            assert!(extrapolated < 0.1 * raw, "kappa = {k}, n_r = {n_r}");
        }
    }
}

#[test]
fn hyperbolic_oracle_sees_only_the_bound_levels() {
    // n < 3 at kappa = -0.25: n_r = 0 and 1 for l = 0.
    let prob = build_sl_problem(curv(-0.25), 0);
    let sol = solve_eigenvalues(&prob, 2000, 2).unwrap();
    assert_eq!(sol.discrete_available, Some(2));
    let edge = sol.continuum_edge.unwrap();
    assert!(sol.lambdas.iter().all(|&l| l < edge));
    assert!(matches!(
        solve_eigenvalues(&prob, 2000, 3),
        Err(Error::ExceedsDiscreteSpectrum {
            requested: 3,
            available: 2
        })
    ));
}

#[test]
fn no_bound_states_below_kappa_minus_one() {
    let prob = build_sl_problem(curv(-2.0), 0);
    assert!(matches!(
        solve_eigenvalues(&prob, 1000, 1),
        Err(Error::ExceedsDiscreteSpectrum { available: 0, .. })
    ));
}

#[test]
fn flat_oracle_matches_integer_ladder() {
    let c = Curvature::FLAT;
    let sol = solve_eigenvalues(&build_sl_problem(c, 1), 4000, 4).unwrap();
    let t = sol.truncation.expect("flat problems are truncated");
    assert!(t.validated);
    for (n_r, &e) in sol.energies.iter().enumerate() {
        let exact = 2.0 * n_r as f64 + 1.0 + 1.5;
        assert!((e - exact).abs() < 1e-4 * exact, "n_r = {n_r}: {e}");
    }
}

#[test]
fn invalid_requests() {
    let prob = build_sl_problem(curv(0.5), 0);
    assert!(matches!(
        solve_eigenvalues(&prob, 50, 1),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        solve_eigenvalues(&prob, 1000, 0),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        solve_eigenvalues(&prob, 1000, 11),
        Err(Error::InvalidArgument(_))
    ));
}
