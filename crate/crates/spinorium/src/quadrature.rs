//! Quadrature on the unit sphere: Gauss–Legendre in cos θ crossed with a
//! uniform (periodic trapezoid) rule in φ.
//!
//! The grid is sized so that every oracle integral in this crate — products
//! of two spherical harmonics times at most one direction cosine — is exact
//! up to rounding: with band limit L the θ rule uses 2L + 2 nodes (exact for
//! polynomial degree ≤ 4L + 3) and the φ rule uses 4L + 5 nodes (exact for
//! Fourier modes |k| ≤ 4L + 4).

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on [-1, 1].
///
/// Newton iteration on P_n with the Chebyshev-like initial guess; converges
/// in a handful of steps for any practical n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p_curr = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let k = k as f64;
        let p_next = ((2.0 * k + 1.0) * x * p_curr - k * p_prev) / (k + 1.0);
        p_prev = p_curr;
        p_curr = p_next;
    }
    let dp = n as f64 * (x * p_curr - p_prev) / (x * x - 1.0);
    (p_curr, dp)
}

/// A product quadrature grid over the sphere, exact for integrands of
/// band limit `l_max` (two harmonics and one cosine factor).
#[derive(Debug, Clone)]
pub struct SphereGrid {
    /// cos θ nodes.
    pub xi: Vec<f64>,
    /// Gauss–Legendre weights for the θ integral.
    pub w_xi: Vec<f64>,
    /// φ nodes, uniform on [0, 2π).
    pub phi: Vec<f64>,
    /// Weight of each φ node: 2π / N_φ.
    pub w_phi: f64,
}

impl SphereGrid {
    pub fn for_band_limit(l_max: u32) -> Self {
        let n_theta = 2 * l_max as usize + 2;
        let n_phi = 4 * l_max as usize + 5;
        let (xi, w_xi) = gauss_legendre(n_theta);
        let phi = (0..n_phi)
            .map(|j| 2.0 * PI * j as f64 / n_phi as f64)
            .collect();
        SphereGrid {
            xi,
            w_xi,
            phi,
            w_phi: 2.0 * PI / n_phi as f64,
        }
    }

    /// Integrate a complex-valued function of (θ, φ) over the sphere.
    pub fn integrate<F>(&self, mut f: F) -> num_complex::Complex64
    where
        F: FnMut(f64, f64) -> num_complex::Complex64,
    {
        let mut total = num_complex::Complex64::new(0.0, 0.0);
        for (&xi, &w) in self.xi.iter().zip(&self.w_xi) {
            let theta = xi.clamp(-1.0, 1.0).acos();
            let mut ring = num_complex::Complex64::new(0.0, 0.0);
            for &phi in &self.phi {
                ring += f(theta, phi);
            }
            total += w * self.w_phi * ring;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn nodes_integrate_monomials_exactly() {
        for n in 1..=40 {
            let (x, w) = gauss_legendre(n);
            assert_eq!(x.len(), n);
            assert!(w.iter().all(|&wi| wi > 0.0));
            // exact through degree 2n - 1
            for deg in 0..=(2 * n - 1) {
                let quad: f64 = x
                    .iter()
                    .zip(&w)
                    .map(|(&xi, &wi)| wi * xi.powi(deg as i32))
                    .sum();
                let exact = if deg % 2 == 1 {
                    0.0
                } else {
                    2.0 / (deg as f64 + 1.0)
                };
                assert!(
                    (quad - exact).abs() < 1e-13,
                    "n={n} deg={deg}: {quad} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn nodes_are_sorted_and_symmetric() {
        let (x, _) = gauss_legendre(9);
        for pair in x.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        for i in 0..x.len() {
            assert!((x[i] + x[x.len() - 1 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn sphere_area() {
        let grid = SphereGrid::for_band_limit(4);
        let area = grid.integrate(|_, _| Complex64::new(1.0, 0.0));
        assert!((area.re - 4.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!(area.im.abs() < 1e-14);
    }

    #[test]
    fn azimuthal_modes_cancel() {
        let grid = SphereGrid::for_band_limit(3);
        for k in 1..=10i32 {
            let v = grid.integrate(|_, phi| Complex64::from_polar(1.0, k as f64 * phi));
            assert!(v.norm() < 1e-12, "mode {k} left {v}");
        }
    }
}
