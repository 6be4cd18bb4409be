//! Adaptive Gauss–Legendre quadrature.
//!
//! Each panel is integrated with an `ORDER`-point rule and compared against
//! the sum over its two halves; the panel with the largest discrepancy is
//! split until the total falls below `tol * ∫|f|`.

use std::collections::BinaryHeap;
use std::sync::OnceLock;

const ORDER: usize = 15;
const MAX_PANELS: usize = 20_000;

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite {
        a: f64,
        b: f64,
    },
    /// `[a, inf)`, mapped to `[0, 1)` by `x = a + scale * u / (1 - u)`.
    SemiInfinite {
        a: f64,
        scale: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error: f64,
    /// `∫|f|`, the reference for the relative tolerance.
    pub magnitude: f64,
    pub converged: bool,
    pub panels: usize,
}

impl QuadratureResult {
    pub fn relative_error(&self) -> f64 {
        if self.magnitude == 0.0 {
            self.error
        } else {
            self.error / self.magnitude
        }
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        dp = if d != 0.0 { d } else { dp };
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (z * p1 - p0) / (z * z - 1.0))
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

/// `(∫f, ∫|f|)` over one panel.
fn panel_sum(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (x, w) = rule();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut s = 0.0;
    let mut sa = 0.0;
    for (xi, wi) in x.iter().zip(w) {
        let v = f(mid + half * xi);
        s += wi * v;
        sa += wi * v.abs();
    }
    (s * half, sa * half)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    magnitude: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error).is_eq()
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn make_panel(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Panel {
    let (whole, _) = panel_sum(f, a, b);
    let mid = 0.5 * (a + b);
    let (left, left_abs) = panel_sum(f, a, mid);
    let (right, right_abs) = panel_sum(f, mid, b);
    Panel {
        a,
        b,
        value: left + right,
        magnitude: left_abs + right_abs,
        error: (left + right - whole).abs(),
    }
}

fn integrate_unit(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> QuadratureResult {
    let mut heap = BinaryHeap::new();
    let first = make_panel(f, a, b);
    let (mut value, mut magnitude, mut error) = (first.value, first.magnitude, first.error);
    heap.push(first);
    let mut converged = false;
    while heap.len() < MAX_PANELS {
        if !(value.is_finite() && error.is_finite()) {
            break;
        }
        if error <= tol * magnitude || error == 0.0 {
            converged = true;
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel can no longer be split in floating point.
            heap.push(worst);
            break;
        }
        let left = make_panel(f, worst.a, mid);
        let right = make_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        magnitude += left.magnitude + right.magnitude - worst.magnitude;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // Re-sum occasionally so the running totals do not accumulate
        // cancellation error.
        if heap.len() % 256 == 0 {
            value = heap.iter().map(|p| p.value).sum();
            magnitude = heap.iter().map(|p| p.magnitude).sum();
            error = heap.iter().map(|p| p.error).sum();
        }
    }
    let panels = heap.len();
    value = heap.iter().map(|p| p.value).sum();
    magnitude = heap.iter().map(|p| p.magnitude).sum();
    error = heap.iter().map(|p| p.error).sum();
    if !converged {
        converged = error.is_finite() && error <= tol * magnitude;
    }
    QuadratureResult {
        value,
        error,
        magnitude,
        converged,
        panels,
    }
}

/// Integrate `f` over `domain` to relative tolerance `tol` (measured against
/// `∫|f|`). The result carries `converged = false` rather than an error when
/// the tolerance is not reached.
pub fn quadrature(f: impl Fn(f64) -> f64, domain: Domain, tol: f64) -> QuadratureResult {
    let tol = tol.max(1e-15);
    match domain {
        Domain::Finite { a, b } => {
            if a == b {
                return QuadratureResult {
                    value: 0.0,
                    error: 0.0,
                    magnitude: 0.0,
                    converged: true,
                    panels: 0,
                };
            }
            let r = integrate_unit(&f, a.min(b), a.max(b), tol);
            if a > b {
                QuadratureResult {
                    value: -r.value,
                    ..r
                }
            } else {
                r
            }
        }
        Domain::SemiInfinite { a, scale } => {
            let g = |u: f64| {
                let d = 1.0 - u;
                if d <= 0.0 {
                    return 0.0;
                }
                let v = f(a + scale * u / d);
                if v == 0.0 {
                    0.0
                } else {
                    v * scale / (d * d)
                }
            };
            integrate_unit(&g, 0.0, 1.0, tol)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(ORDER);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        for k in 0..(2 * ORDER) {
            let approx: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * xi.powi(k as i32))
                .sum();
            let exact = if k % 2 == 1 {
                0.0
            } else {
                2.0 / (k as f64 + 1.0)
            };
            assert!((approx - exact).abs() < 1e-14, "degree {k}");
        }
    }

    #[test]
    fn simple_polynomial() {
        let r = quadrature(|x| x * x, Domain::Finite { a: 0.0, b: 1.0 }, 1e-12);
        assert!(r.converged);
        assert!((r.value - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn square_root_endpoint() {
        let r = quadrature(
            |x| x * x * (1.0 - x * x).max(0.0).sqrt(),
            Domain::Finite { a: 0.0, b: 1.0 },
            1e-12,
        );
        assert!(r.converged);
        assert!((r.value - PI / 16.0).abs() < 1e-10);
    }

    #[test]
    fn algebraic_tail() {
        let r = quadrature(
            |x| x * x * (1.0 + 0.25 * x * x).powf(-4.5),
            Domain::SemiInfinite { a: 0.0, scale: 1.0 },
            1e-12,
        );
        assert!(r.converged);
        assert!((r.value - 64.0 / 105.0).abs() < 1e-8);
    }

    #[test]
    fn gaussian_tail() {
        let r = quadrature(
            |x| (-x * x).exp(),
            Domain::SemiInfinite { a: 0.0, scale: 2.0 },
            1e-12,
        );
        assert!((r.value - PI.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn reversed_interval() {
        let r = quadrature(|x| x.cos(), Domain::Finite { a: 1.0, b: 0.0 }, 1e-12);
        assert!((r.value + 1f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn divergent_integral_is_flagged() {
        let r = quadrature(|x| 1.0 / x, Domain::Finite { a: 0.0, b: 1.0 }, 1e-12);
        assert!(!r.converged);
    }
}
