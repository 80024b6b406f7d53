//! Associated Legendre functions P_l^(m)(ξ) with the Condon–Shortley phase,
//! and their derivatives with respect to the polar angle.
//!
//! The defining normalization is
//!
//! ```text
//! P_l^(m)(ξ) = (-1)^m / (2^l l!) (1 - ξ²)^(m/2) d^(l+m)/dξ^(l+m) (ξ² - 1)^l
//! ```
//!
//! which is numerically unusable beyond small l, so evaluation proceeds by the
//! standard upward recurrence in l at fixed m,
//!
//! ```text
//! P_m^(m)(ξ)     = (-1)^m (2m-1)!! (1 - ξ²)^(m/2)
//! P_(m+1)^(m)(ξ) = ξ (2m+1) P_m^(m)(ξ)
//! (l-m) P_l^(m)  = ξ (2l-1) P_(l-1)^(m) - (l+m-1) P_(l-2)^(m)
//! ```
//!
//! Negative orders follow the reflection P_l^(-m) = (-1)^m (l-m)!/(l+m)! P_l^(m).
//! Ranges where the definition forces zero (|m| > l) return zero rather than
//! erroring, because coefficient maps legitimately aim at such indices.

use crate::error::{Error, Result};

/// P_l^(m)(ξ) for ξ ∈ [-1, 1]. Indices with |m| > l return 0.
pub fn assoc_legendre(l: u32, m: i32, xi: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&xi) {
        return Err(Error::XiOutOfDomain { xi });
    }
    Ok(assoc_legendre_unchecked(l, m, xi))
}

/// Recurrence core; assumes |ξ| ≤ 1.
fn assoc_legendre_unchecked(l: u32, m: i32, xi: f64) -> f64 {
    let l_i = l as i64;
    let m_i = m as i64;
    if m_i.abs() > l_i {
        return 0.0;
    }
    if m < 0 {
        // P_l^(-m) = (-1)^m (l-m)!/(l+m)! P_l^(m) with m = |m| here.
        let ma = (-m_i) as u32;
        let mut ratio = 1.0;
        for k in (l_i - ma as i64 + 1)..=(l_i + ma as i64) {
            ratio /= k as f64;
        }
        let sign = if ma.is_multiple_of(2) { 1.0 } else { -1.0 };
        return sign * ratio * assoc_legendre_unchecked(l, ma as i32, xi);
    }

    let m = m as u32;
    // Seed: P_m^m = (-1)^m (2m-1)!! (1-ξ²)^(m/2), built as a product so the
    // (1-ξ²)^(1/2) factors never involve a division.
    let sin_theta = ((1.0 - xi) * (1.0 + xi)).max(0.0).sqrt();
    let mut p_mm = 1.0;
    for k in 1..=m {
        p_mm *= -((2 * k - 1) as f64) * sin_theta;
    }
    if l == m {
        return p_mm;
    }
    let mut p_prev = p_mm; // P_{k-1}^m
    let mut p_curr = xi * (2 * m + 1) as f64 * p_mm; // P_{m+1}^m
    for k in (m + 2)..=l {
        let k = k as f64;
        let mf = m as f64;
        let p_next = (xi * (2.0 * k - 1.0) * p_curr - (k + mf - 1.0) * p_prev) / (k - mf);
        p_prev = p_curr;
        p_curr = p_next;
    }
    p_curr
}

/// d/dθ [P_l^(m)(cos θ)], evaluated through the order recurrence
///
/// ```text
/// d/dθ P_l^(m)(cos θ) = 1/2 [ P_l^(m+1) - (l+m)(l-m+1) P_l^(m-1) ]
/// ```
///
/// which stays finite at the poles (no division by sin θ).
pub fn assoc_legendre_theta_derivative(l: u32, m: i32, theta: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::ThetaOutOfRange { theta });
    }
    let xi = theta.cos();
    let l_i = l as i64;
    let m_i = m as i64;
    if m_i.abs() > l_i {
        return Ok(0.0);
    }
    let upper = assoc_legendre_unchecked(l, m + 1, xi);
    let lower = assoc_legendre_unchecked(l, m - 1, xi);
    Ok(0.5 * (upper - ((l_i + m_i) * (l_i - m_i + 1)) as f64 * lower))
}
