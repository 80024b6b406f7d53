//! Scalar spherical harmonics Y_lm and the primitive actions on the Y basis:
//! L_z, the ladder operators L_±, and multiplication by direction cosines.
//!
//! The normalization is the usual Condon–Shortley one,
//!
//! ```text
//! Y_lm(n) = sqrt( (2l+1)/(4π) (l-m)!/(l+m)! ) P_l^(m)(cos θ) e^(imφ)
//! ```
//!
//! so Y_00 = 1/sqrt(4π) and Y_11 = -sqrt(3/8π) sin θ e^(iφ).
//!
//! The coefficient families returned by [`ladder_action`] and
//! [`direction_cosine_action`] are not taken on faith: the test suite checks
//! every one of them against quadrature of ⟨Y_target | op Y_source⟩ before
//! anything downstream relies on them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legendre::assoc_legendre;

/// The (l, m) label of a scalar spherical harmonic, with |m| ≤ l enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HarmonicIndex {
    l: u32,
    m: i32,
}

impl HarmonicIndex {
    pub fn new(l: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > l {
            return Err(Error::InvalidHarmonicIndex { l, m });
        }
        Ok(HarmonicIndex { l, m })
    }

    /// A shifted index, or `None` if it falls outside |m| ≤ l (including
    /// l-shifts below zero).
    pub fn shifted(l: i64, m: i64) -> Option<Self> {
        if l < 0 || m.abs() > l {
            None
        } else {
            Some(HarmonicIndex {
                l: l as u32,
                m: m as i32,
            })
        }
    }

    pub fn l(self) -> u32 {
        self.l
    }

    pub fn m(self) -> i32 {
        self.m
    }
}

/// A point on the unit sphere, θ ∈ [0, π], φ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    /// φ is reduced modulo 2π; θ outside [0, π] is an error.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::ThetaOutOfRange { theta });
        }
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut phi = phi.rem_euclid(two_pi);
        if phi >= two_pi {
            phi = 0.0;
        }
        Ok(Direction { theta, phi })
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    pub fn phi(self) -> f64 {
        self.phi
    }

    /// Cartesian components (sin θ cos φ, sin θ sin φ, cos θ).
    pub fn unit_vector(self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }
}

/// Normalized θ-part of Y_lm: the real factor multiplying e^(imφ).
///
/// Works for either sign of m through Y_(l,-m) = (-1)^m (Y_lm)* specialised
/// to the θ factor.
pub fn ylm_theta(l: u32, m: i32, xi: f64) -> Result<f64> {
    let ma = m.unsigned_abs();
    if ma > l {
        return Err(Error::InvalidHarmonicIndex { l, m });
    }
    let p = assoc_legendre(l, ma as i32, xi)?;
    let mut ratio = 1.0;
    for k in (l - ma + 1)..=(l + ma) {
        ratio /= k as f64;
    }
    let norm = ((2 * l + 1) as f64 / (4.0 * std::f64::consts::PI) * ratio).sqrt();
    let sign = if m < 0 && ma % 2 == 1 { -1.0 } else { 1.0 };
    Ok(sign * norm * p)
}

/// d/dθ of [`ylm_theta`] at θ, finite at the poles.
pub fn ylm_theta_derivative(l: u32, m: i32, theta: f64) -> Result<f64> {
    let ma = m.unsigned_abs();
    if ma > l {
        return Err(Error::InvalidHarmonicIndex { l, m });
    }
    let dp = crate::legendre::assoc_legendre_theta_derivative(l, ma as i32, theta)?;
    let mut ratio = 1.0;
    for k in (l - ma + 1)..=(l + ma) {
        ratio /= k as f64;
    }
    let norm = ((2 * l + 1) as f64 / (4.0 * std::f64::consts::PI) * ratio).sqrt();
    let sign = if m < 0 && ma % 2 == 1 { -1.0 } else { 1.0 };
    Ok(sign * norm * dp)
}

/// Y_lm at a direction.
pub fn eval_ylm(idx: HarmonicIndex, dir: Direction) -> Complex64 {
    let theta_part =
        ylm_theta(idx.l, idx.m, dir.theta.cos()).expect("HarmonicIndex is valid by construction");
    Complex64::from_polar(1.0, idx.m as f64 * dir.phi) * theta_part
}

/// One term of a coefficient map on the Y basis. `target` is `None` exactly
/// when the shifted index is invalid, and the coefficient is then exactly 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientTerm {
    pub coefficient: f64,
    pub target: Option<HarmonicIndex>,
}

impl CoefficientTerm {
    fn new(coefficient: f64, target: Option<HarmonicIndex>) -> Self {
        debug_assert!(target.is_some() || coefficient == 0.0);
        CoefficientTerm {
            coefficient,
            target,
        }
    }
}

/// L_z Y_lm = m Y_lm.
pub fn lz_action(idx: HarmonicIndex) -> (f64, HarmonicIndex) {
    (idx.m as f64, idx)
}

/// Raising (+) or lowering (−) ladder sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LadderSign {
    Plus,
    Minus,
}

/// L_± Y_lm = sqrt(l(l+1) - m(m±1)) Y_(l,m±1), zero at the top/bottom rung.
pub fn ladder_action(sign: LadderSign, idx: HarmonicIndex) -> CoefficientTerm {
    let (l, m) = (idx.l as i64, idx.m as i64);
    let step = match sign {
        LadderSign::Plus => 1,
        LadderSign::Minus => -1,
    };
    let radicand = l * (l + 1) - m * (m + step);
    let target = HarmonicIndex::shifted(l, m + step);
    match target {
        Some(t) => CoefficientTerm::new((radicand as f64).sqrt(), Some(t)),
        None => {
            debug_assert_eq!(radicand, 0);
            CoefficientTerm::new(0.0, None)
        }
    }
}

/// Expansion of n_q Y_lm over Y_(l±1, m+q), where n_q = e_q · n are the
/// cyclic components of the unit vector:
///
/// ```text
/// n_0 = cos θ,   n_(±1) = ∓ sin θ e^(±iφ) / sqrt(2)
/// ```
///
/// Returns the (l+1) term first, then the (l−1) term. Coefficients are built
/// from integer radicands, so a term aimed at an invalid index is exactly 0.
pub fn direction_cosine_action(q: i32, idx: HarmonicIndex) -> [CoefficientTerm; 2] {
    assert!(
        (-1..=1).contains(&q),
        "cyclic component q must be -1, 0, or +1"
    );
    let (l, m) = (idx.l as i64, idx.m as i64);
    let q = q as i64;
    let denom_up = ((2 * l + 1) * (2 * l + 3)) as f64;
    let denom_down = if l > 0 {
        ((2 * l - 1) * (2 * l + 1)) as f64
    } else {
        1.0 // unused: every l-1 radicand vanishes at l = 0
    };
    let (c_up, c_down) = match q {
        0 => (
            (((l - m + 1) * (l + m + 1)) as f64 / denom_up).sqrt(),
            (((l - m) * (l + m)) as f64 / denom_down).sqrt(),
        ),
        1 => (
            (((l + m + 1) * (l + m + 2)) as f64 / (2.0 * denom_up)).sqrt(),
            -(((l - m) * (l - m - 1)) as f64 / (2.0 * denom_down)).sqrt(),
        ),
        -1 => (
            (((l - m + 1) * (l - m + 2)) as f64 / (2.0 * denom_up)).sqrt(),
            -(((l + m) * (l + m - 1)) as f64 / (2.0 * denom_down)).sqrt(),
        ),
        _ => unreachable!(),
    };
    let up = HarmonicIndex::shifted(l + 1, m + q);
    let down = HarmonicIndex::shifted(l - 1, m + q);
    [
        CoefficientTerm::new(if up.is_some() { c_up } else { 0.0 }, up),
        CoefficientTerm::new(if down.is_some() { c_down } else { 0.0 }, down),
    ]
}
