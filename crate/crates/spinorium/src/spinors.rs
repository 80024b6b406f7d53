//! Spherical spinors Ω_κμ and exact conversion between the Ω basis and the
//! product basis (spin ⊗ Y_lm).
//!
//! A spherical spinor couples two neighbouring harmonics to spin 1/2:
//!
//! ```text
//! Ω_κμ(n) = ( sgn(-κ) sqrt((κ + 1/2 - μ)/(2κ + 1)) Y_(l, μ-1/2)(n) )
//!           (          sqrt((κ + 1/2 + μ)/(2κ + 1)) Y_(l, μ+1/2)(n) )
//! ```
//!
//! with l determined by κ. The two radicals are Clebsch–Gordan factors; the
//! 2×2 coupling matrix for a fixed Y pair is orthogonal, which is what makes
//! the product-basis projection below an exact inverse.
//!
//! Phases are pinned: Condon–Shortley harmonics and σ_y with +i in the lower
//! left. There is deliberately no knob for other conventions — the signs in
//! the relation catalog depend on this choice.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::harmonics::{eval_ylm, Direction, HarmonicIndex};
use crate::indices::{HalfInt, SpinorIndex};

/// Spin-1/2 component label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn flipped(self) -> Spin {
        match self {
            Spin::Up => Spin::Down,
            Spin::Down => Spin::Up,
        }
    }
}

/// The two components of a spherical spinor at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorValue {
    pub up: Complex64,
    pub down: Complex64,
}

/// The radical factors of the spinor definition, with sgn(−κ) folded into
/// the upper one. Satisfies c_up² + c_down² = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingCoeffs {
    pub c_up: f64,
    pub c_down: f64,
}

/// Exact rational-under-the-radical evaluation of sqrt(p / q) with the sign
/// convention above; p = 0 returns exactly 0.
fn radical(p: i64, q: i64) -> f64 {
    if p == 0 {
        return 0.0;
    }
    (p as f64 / q as f64).sqrt()
}

/// The coupling coefficients of Ω_κμ and their target harmonic orders
/// (l, μ−1/2) and (l, μ+1/2).
pub fn coupling_coeffs(idx: SpinorIndex) -> CouplingCoeffs {
    let k2 = 2 * idx.kappa() as i64;
    let m2 = idx.mu().twice() as i64;
    let den = 2 * (k2 + 1);
    let sgn = if idx.kappa() > 0 { -1.0 } else { 1.0 };
    CouplingCoeffs {
        c_up: sgn * radical(k2 + 1 - m2, den),
        c_down: radical(k2 + 1 + m2, den),
    }
}

/// The harmonic index paired with a spin component of Ω_κμ, or `None` when
/// that component is absent (its coupling coefficient is then exactly 0).
pub fn component_harmonic(idx: SpinorIndex, spin: Spin) -> Option<HarmonicIndex> {
    let l = idx.l() as i64;
    let m2 = idx.mu().twice() as i64;
    let m = match spin {
        Spin::Up => (m2 - 1) / 2,
        Spin::Down => (m2 + 1) / 2,
    };
    HarmonicIndex::shifted(l, m)
}

/// Ω_κμ at a direction.
pub fn eval_spinor(idx: SpinorIndex, dir: Direction) -> SpinorValue {
    let coeffs = coupling_coeffs(idx);
    let eval = |spin: Spin, c: f64| -> Complex64 {
        match component_harmonic(idx, spin) {
            Some(h) if c != 0.0 => c * eval_ylm(h, dir),
            _ => Complex64::new(0.0, 0.0),
        }
    };
    SpinorValue {
        up: eval(Spin::Up, coeffs.c_up),
        down: eval(Spin::Down, coeffs.c_down),
    }
}

/// Expansion of Ω_κμ over the product basis: at most two (spin, Y, coefficient)
/// terms; components whose Y index is invalid are omitted.
pub fn spinor_to_product_basis(idx: SpinorIndex) -> Vec<(Spin, HarmonicIndex, f64)> {
    let coeffs = coupling_coeffs(idx);
    let mut terms = Vec::with_capacity(2);
    for (spin, c) in [(Spin::Up, coeffs.c_up), (Spin::Down, coeffs.c_down)] {
        match component_harmonic(idx, spin) {
            Some(h) => terms.push((spin, h, c)),
            None => debug_assert_eq!(c, 0.0, "absent Y component must carry coefficient 0"),
        }
    }
    terms
}

/// Inverse projection: the ≤ 2 spinors containing a given product-basis state,
/// with coefficients such that the round trip through
/// [`spinor_to_product_basis`] is the identity.
///
/// The candidates are κ = l and κ = −l−1 (the two spinors built on degree l),
/// with μ fixed by the spin component.
pub fn product_basis_to_spinors(spin: Spin, idx: HarmonicIndex) -> Vec<(SpinorIndex, f64)> {
    let l = idx.l() as i32;
    let m2 = 2 * idx.m();
    let mu = match spin {
        Spin::Up => HalfInt::from_twice(m2 + 1),
        Spin::Down => HalfInt::from_twice(m2 - 1),
    };
    let mut out = Vec::with_capacity(2);
    for kappa in [l, -l - 1] {
        let Ok(spinor) = SpinorIndex::new(kappa, mu) else {
            continue;
        };
        let coeffs = coupling_coeffs(spinor);
        let c = match spin {
            Spin::Up => coeffs.c_up,
            Spin::Down => coeffs.c_down,
        };
        out.push((spinor, c));
    }
    out
}

/// Convenience constructor used by the CLI and examples.
pub fn spinor_index(kappa: i32, mu: HalfInt) -> Result<SpinorIndex> {
    SpinorIndex::new(kappa, mu)
}
