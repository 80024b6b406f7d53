//! Error type shared across the crate.

use crate::indices::HalfInt;

/// Errors produced by index construction, evaluation, and operator application.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The relativistic angular quantum number kappa must be a nonzero integer.
    #[error("kappa must be nonzero")]
    ZeroKappa,

    /// The projection mu lies outside the valid range for the given kappa.
    #[error("mu = {mu} out of range for kappa = {kappa} (|mu| must be <= |kappa| - 1/2)")]
    MuOutOfRange { kappa: i32, mu: HalfInt },

    /// (j, l) is not a valid spin-1/2 coupling: l must differ from j by exactly 1/2.
    #[error("(j = {j}, l = {l}) is not a spin-1/2 coupling (|l - j| must be 1/2)")]
    InvalidCoupling { j: HalfInt, l: u32 },

    /// A harmonic index with |m| > l.
    #[error("harmonic index (l = {l}, m = {m}) violates |m| <= l")]
    InvalidHarmonicIndex { l: u32, m: i32 },

    /// Legendre argument outside [-1, 1].
    #[error("Legendre argument xi = {xi} outside [-1, 1]")]
    XiOutOfDomain { xi: f64 },

    /// Polar angle outside [0, pi].
    #[error("theta = {theta} outside [0, pi]")]
    ThetaOutOfRange { theta: f64 },

    /// A radial derivative was requested beyond the stored jet depth.
    #[error(
        "radial jet exhausted: an operator needs derivative order {needed} but only {depth} remain"
    )]
    JetDepth { needed: u8, depth: u8 },

    /// Fields evaluated at different radii were combined.
    #[error("fields evaluated at different radii cannot be combined (r = {left} vs r = {right})")]
    RadiusMismatch { left: f64, right: f64 },

    /// Radius must be strictly positive.
    #[error("radius must be positive, got r = {r}")]
    NonPositiveRadius { r: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
