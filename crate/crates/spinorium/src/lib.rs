//! Spin-1/2 spherical spinors, the vector-operator algebra that acts on them,
//! and a machine-verified catalog of the recurrence and differential
//! relations they satisfy.
//!
//! The crate has two halves that deliberately know nothing about each other's
//! numbers:
//!
//! * an **operator engine** ([`spectral`]) that represents two-component
//!   fields as finite sums over the product basis (spin ⊗ Y_lm) and applies
//!   the primitive operators n·, e_q·, σ, L, J, and ∇ exactly in that
//!   representation, with dot/cross composition preserving operator order;
//! * a **relation catalog** ([`relations`]) of 91 identities of the form
//!   `A·B Ω_κμ = Σ coefficient × radial-operator × Ω_κ'μ'`, transcribed once
//!   as structured closed-form data.
//!
//! The [`verify`] module plays them against each other: the left side of each
//! identity is evaluated by the engine, the right side by the catalog, and
//! the residual must vanish to tolerance for every valid (κ, μ), every ±
//! variant, and (for the gradient relations) every radial profile. The engine
//! itself is gated by quadrature and finite-difference oracles before the
//! sweep means anything, so a transcription error in either half fails
//! loudly instead of silently cancelling.
//!
//! See the `examples/` directory for runnable entry points, and the
//! `spinorium` binary for the command-line surface (`eval`, `verify`,
//! `catalog`, `ortho`).

pub mod error;
pub mod harmonics;
pub mod indices;
pub mod legendre;
pub mod quadrature;
pub mod relations;
pub mod spectral;
pub mod spinors;
pub mod verify;

pub mod cli;
pub mod report;

pub use error::{Error, Result};
pub use harmonics::{Direction, HarmonicIndex};
pub use indices::{HalfInt, SpinorIndex};
pub use spectral::{OperatorExpr, RadialJet, SpectralField, VectorExpr, VectorOp};
pub use spinors::{Spin, SpinorValue};
