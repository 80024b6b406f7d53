//! The spectral operator engine: fields as finite sums over the product
//! basis (spin ⊗ Y_lm) with radial jets, and exact application of every
//! primitive vector operator in that representation.
//!
//! A field is F(r)·(two-component angular function), held as amplitudes on
//! canonical (spin, l, m) keys. Each key carries a [`Jet`]: the value of its
//! radial profile and as many radial derivatives as are still known. Angular
//! operators (σ, n·, L, J, e_q·) never touch the jets; the gradient consumes
//! one derivative order per application through
//!
//! ```text
//! ∇ = n ∂/∂r − (i/r) n × L
//! ```
//!
//! which reuses two already-verified primitives and never divides by sin θ.
//!
//! Operator expressions evaluate right-to-left — the operator written next to
//! the field acts first — and cross products expand through the Levi-Civita
//! symbol over Cartesian components. Cyclic quantities appear only at the
//! projection boundary (e_q · …); everything internal is Cartesian, where the
//! Levi-Civita expansion is unambiguous.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::harmonics::{
    direction_cosine_action, ladder_action, lz_action, HarmonicIndex, LadderSign,
};
use crate::indices::SpinorIndex;
use crate::spinors::{spinor_to_product_basis, Spin};

/// Shorthand used throughout the engine.
pub type C64 = Complex64;

const I: C64 = C64::new(0.0, 1.0);

/// Amplitudes smaller than this in every jet slot are dropped during
/// canonicalization. This is a true-zero filter, not a numerical tolerance:
/// pruning real rounding residue would hide small-coefficient bugs.
pub const PRUNE_THRESHOLD: f64 = 1e-300;

/// A radial profile evaluated at one radius: F(r), F′(r), F″(r).
///
/// Two derivative orders are enough for every operator expression in the
/// relation catalog (the Laplacian-type forms are the deepest); a composition
/// that needs more raises [`Error::JetDepth`] instead of returning garbage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialJet {
    pub r: f64,
    pub f: f64,
    pub f1: f64,
    pub f2: f64,
}

impl RadialJet {
    pub fn new(r: f64, f: f64, f1: f64, f2: f64) -> Result<Self> {
        if r.is_nan() || r <= 0.0 {
            return Err(Error::NonPositiveRadius { r });
        }
        Ok(RadialJet { r, f, f1, f2 })
    }

    /// The constant profile F ≡ 1 at radius r.
    pub fn unit(r: f64) -> Self {
        RadialJet {
            r,
            f: 1.0,
            f1: 0.0,
            f2: 0.0,
        }
    }
}

/// Complex radial data attached to one spectral key: the folded amplitude
/// times profile, with `depth` valid derivative slots (0, 1, or 2).
/// Slots beyond `depth` hold NaN and are never read.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: C64,
    pub d1: C64,
    pub d2: C64,
    pub depth: u8,
}

impl Jet {
    fn from_radial(amplitude: C64, jet: RadialJet) -> Self {
        Jet {
            value: amplitude * jet.f,
            d1: amplitude * jet.f1,
            d2: amplitude * jet.f2,
            depth: 2,
        }
    }

    fn value_only(value: C64) -> Self {
        Jet {
            value,
            d1: C64::new(f64::NAN, f64::NAN),
            d2: C64::new(f64::NAN, f64::NAN),
            depth: 0,
        }
    }

    fn scaled(self, c: C64) -> Self {
        Jet {
            value: c * self.value,
            d1: c * self.d1,
            d2: c * self.d2,
            depth: self.depth,
        }
    }

    fn add(self, other: Jet) -> Self {
        let depth = self.depth.min(other.depth);
        let nan = C64::new(f64::NAN, f64::NAN);
        Jet {
            value: self.value + other.value,
            d1: if depth >= 1 { self.d1 + other.d1 } else { nan },
            d2: if depth >= 2 { self.d2 + other.d2 } else { nan },
            depth,
        }
    }

    /// d/dr: shifts the slots down and loses one derivative order.
    fn derivative(self) -> Result<Self> {
        if self.depth == 0 {
            return Err(Error::JetDepth {
                needed: 1,
                depth: 0,
            });
        }
        let nan = C64::new(f64::NAN, f64::NAN);
        Ok(Jet {
            value: self.d1,
            d1: if self.depth >= 2 { self.d2 } else { nan },
            d2: nan,
            depth: self.depth - 1,
        })
    }

    /// Multiplication by 1/r; the quotient rule keeps every known order known.
    fn div_r(self, r: f64) -> Self {
        let nan = C64::new(f64::NAN, f64::NAN);
        Jet {
            value: self.value / r,
            d1: if self.depth >= 1 {
                self.d1 / r - self.value / (r * r)
            } else {
                nan
            },
            d2: if self.depth >= 2 {
                self.d2 / r - 2.0 * self.d1 / (r * r) + 2.0 * self.value / (r * r * r)
            } else {
                nan
            },
            depth: self.depth,
        }
    }

    fn magnitude(self) -> f64 {
        let mut mag = self.value.norm();
        if self.depth >= 1 {
            mag = mag.max(self.d1.norm());
        }
        if self.depth >= 2 {
            mag = mag.max(self.d2.norm());
        }
        mag
    }
}

/// Canonical key of a spectral term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralKey {
    pub spin: Spin,
    pub harmonic: HarmonicIndex,
}

/// One term of a spectral field, as exposed to callers: the folded complex
/// amplitude (profile value included) on a product-basis state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTerm {
    pub spin: Spin,
    pub harmonic: HarmonicIndex,
    pub amplitude: C64,
}

/// A two-component field as a finite spectral sum, canonicalized: unique
/// (spin, l, m) keys, jets merged, true zeros pruned.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    r: f64,
    terms: BTreeMap<SpectralKey, Jet>,
}

impl SpectralField {
    /// The zero field at radius r.
    pub fn zero(r: f64) -> Self {
        SpectralField {
            r,
            terms: BTreeMap::new(),
        }
    }

    /// F(r) Ω_κμ expanded into ≤ 2 spectral terms.
    pub fn from_spinor(idx: SpinorIndex, jet: RadialJet) -> Self {
        let mut field = SpectralField::zero(jet.r);
        for (spin, harmonic, c) in spinor_to_product_basis(idx) {
            field.add_term(spin, harmonic, C64::new(c, 0.0), jet);
        }
        field
    }

    /// Add amplitude × jet on a product-basis state.
    pub fn add_term(
        &mut self,
        spin: Spin,
        harmonic: HarmonicIndex,
        amplitude: C64,
        jet: RadialJet,
    ) {
        debug_assert_eq!(jet.r, self.r, "all terms of a field share one radius");
        self.insert(
            SpectralKey { spin, harmonic },
            Jet::from_radial(amplitude, jet),
        );
    }

    /// Add a value-only amplitude (no derivative data) on a state.
    pub fn add_value(&mut self, spin: Spin, harmonic: HarmonicIndex, value: C64) {
        self.insert(SpectralKey { spin, harmonic }, Jet::value_only(value));
    }

    fn insert(&mut self, key: SpectralKey, jet: Jet) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                if jet.magnitude() >= PRUNE_THRESHOLD {
                    e.insert(jet);
                }
            }
            Entry::Occupied(mut e) => {
                let merged = e.get().add(jet);
                if merged.magnitude() >= PRUNE_THRESHOLD {
                    *e.get_mut() = merged;
                } else {
                    e.remove();
                }
            }
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Folded amplitude on a key (zero if absent).
    pub fn amplitude(&self, spin: Spin, harmonic: HarmonicIndex) -> C64 {
        self.terms
            .get(&SpectralKey { spin, harmonic })
            .map_or(C64::new(0.0, 0.0), |j| j.value)
    }

    /// All terms in canonical (spin, l, m) order.
    pub fn terms(&self) -> impl Iterator<Item = SpectralTerm> + '_ {
        self.terms.iter().map(|(k, j)| SpectralTerm {
            spin: k.spin,
            harmonic: k.harmonic,
            amplitude: j.value,
        })
    }

    /// Sum of two fields (must share the radius).
    pub fn sum(&self, other: &SpectralField) -> Result<SpectralField> {
        if self.terms.is_empty() {
            return Ok(other.clone());
        }
        if other.terms.is_empty() {
            return Ok(self.clone());
        }
        if self.r != other.r {
            return Err(Error::RadiusMismatch {
                left: self.r,
                right: other.r,
            });
        }
        let mut out = self.clone();
        for (&key, &jet) in &other.terms {
            out.insert(key, jet);
        }
        Ok(out)
    }

    /// The field scaled by a complex constant.
    pub fn scaled(&self, c: C64) -> SpectralField {
        let mut out = SpectralField::zero(self.r);
        for (&key, &jet) in &self.terms {
            out.insert(key, jet.scaled(c));
        }
        out
    }

    /// Max amplitude difference over the union of keys — the residual metric
    /// for relation verification. Comparing in the coefficient basis is
    /// strictly stronger than any pointwise comparison and pinpoints which
    /// term of an expansion is wrong.
    pub fn max_difference(&self, other: &SpectralField) -> f64 {
        let mut worst = 0.0f64;
        for (key, jet) in &self.terms {
            worst = worst.max((jet.value - other.amplitude(key.spin, key.harmonic)).norm());
        }
        for (key, jet) in &other.terms {
            if !self.terms.contains_key(key) {
                worst = worst.max(jet.value.norm());
            }
        }
        worst
    }

    /// Largest folded amplitude magnitude.
    pub fn max_amplitude(&self) -> f64 {
        self.terms
            .values()
            .map(|j| j.value.norm())
            .fold(0.0, f64::max)
    }

    /// Evaluate the spectral sum at a direction, yielding the two spin
    /// components.
    pub fn eval(&self, dir: crate::harmonics::Direction) -> crate::spinors::SpinorValue {
        let mut up = C64::new(0.0, 0.0);
        let mut down = C64::new(0.0, 0.0);
        for (key, jet) in &self.terms {
            let y = crate::harmonics::eval_ylm(key.harmonic, dir);
            match key.spin {
                Spin::Up => up += jet.value * y,
                Spin::Down => down += jet.value * y,
            }
        }
        crate::spinors::SpinorValue { up, down }
    }
}

/// Cartesian axis label for operator components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

pub const AXES: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

impl Axis {
    fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// ε_abc over axis triples.
fn levi_civita(a: Axis, b: Axis, c: Axis) -> f64 {
    match (a.index(), b.index(), c.index()) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// σ_axis applied in the spin component; harmonic indices untouched.
pub fn apply_sigma(axis: Axis, field: &SpectralField) -> SpectralField {
    let mut out = SpectralField::zero(field.r);
    for (key, jet) in &field.terms {
        let (spin, factor) = match (axis, key.spin) {
            (Axis::X, s) => (s.flipped(), C64::new(1.0, 0.0)),
            (Axis::Y, Spin::Up) => (Spin::Down, I),
            (Axis::Y, Spin::Down) => (Spin::Up, -I),
            (Axis::Z, Spin::Up) => (Spin::Up, C64::new(1.0, 0.0)),
            (Axis::Z, Spin::Down) => (Spin::Down, C64::new(-1.0, 0.0)),
        };
        out.insert(
            SpectralKey {
                spin,
                harmonic: key.harmonic,
            },
            jet.scaled(factor),
        );
    }
    out
}

/// L_axis through L_z and the ladder pair; radial jets pass through untouched.
pub fn apply_orbital(axis: Axis, field: &SpectralField) -> SpectralField {
    let mut out = SpectralField::zero(field.r);
    for (key, jet) in &field.terms {
        match axis {
            Axis::Z => {
                let (m, target) = lz_action(key.harmonic);
                if m != 0.0 {
                    out.insert(
                        SpectralKey {
                            spin: key.spin,
                            harmonic: target,
                        },
                        jet.scaled(C64::new(m, 0.0)),
                    );
                }
            }
            Axis::X | Axis::Y => {
                for sign in [LadderSign::Plus, LadderSign::Minus] {
                    let term = ladder_action(sign, key.harmonic);
                    let Some(target) = term.target else { continue };
                    // L_x = (L₊ + L₋)/2, L_y = (L₊ − L₋)/(2i)
                    let factor = match (axis, sign) {
                        (Axis::X, _) => C64::new(0.5, 0.0),
                        (Axis::Y, LadderSign::Plus) => C64::new(0.0, -0.5),
                        (Axis::Y, LadderSign::Minus) => C64::new(0.0, 0.5),
                        (Axis::Z, _) => unreachable!(),
                    };
                    out.insert(
                        SpectralKey {
                            spin: key.spin,
                            harmonic: target,
                        },
                        jet.scaled(factor * term.coefficient),
                    );
                }
            }
        }
    }
    out
}

/// n_q· multiplication in the cyclic basis (q = −1, 0, +1).
fn apply_n_cyclic_into(q: i32, factor: C64, field: &SpectralField, out: &mut SpectralField) {
    for (key, jet) in &field.terms {
        for term in direction_cosine_action(q, key.harmonic) {
            let Some(target) = term.target else { continue };
            if term.coefficient == 0.0 {
                continue;
            }
            out.insert(
                SpectralKey {
                    spin: key.spin,
                    harmonic: target,
                },
                jet.scaled(factor * term.coefficient),
            );
        }
    }
}

/// Multiplication by the Cartesian direction cosine n_axis, recombined from
/// the cyclic actions:
///
/// ```text
/// n_x = (n_(-1) - n_(+1)) / sqrt(2),   n_y = i (n_(+1) + n_(-1)) / sqrt(2),   n_z = n_0
/// ```
pub fn apply_direction(axis: Axis, field: &SpectralField) -> SpectralField {
    let mut out = SpectralField::zero(field.r);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    match axis {
        Axis::Z => apply_n_cyclic_into(0, C64::new(1.0, 0.0), field, &mut out),
        Axis::X => {
            apply_n_cyclic_into(-1, C64::new(inv_sqrt2, 0.0), field, &mut out);
            apply_n_cyclic_into(1, C64::new(-inv_sqrt2, 0.0), field, &mut out);
        }
        Axis::Y => {
            apply_n_cyclic_into(1, C64::new(0.0, inv_sqrt2), field, &mut out);
            apply_n_cyclic_into(-1, C64::new(0.0, inv_sqrt2), field, &mut out);
        }
    }
    out
}

/// J_axis = L_axis + σ_axis / 2.
pub fn apply_total(axis: Axis, field: &SpectralField) -> SpectralField {
    let orbital = apply_orbital(axis, field);
    let spin_half = apply_sigma(axis, field).scaled(C64::new(0.5, 0.0));
    orbital
        .sum(&spin_half)
        .expect("components share the field radius")
}

/// d/dr applied to every jet; fails if any jet is exhausted.
fn apply_radial_derivative(field: &SpectralField) -> Result<SpectralField> {
    let mut out = SpectralField::zero(field.r);
    for (&key, &jet) in &field.terms {
        out.insert(key, jet.derivative()?);
    }
    Ok(out)
}

/// ∇_axis = n_axis ∂/∂r − (i/r) (n × L)_axis, consuming one derivative order.
pub fn apply_nabla(axis: Axis, field: &SpectralField) -> Result<SpectralField> {
    let r = field.r;
    let radial_part = apply_direction(axis, &apply_radial_derivative(field)?);
    // (n × L)_axis = Σ ε_abc n_b L_c, L acting first
    let mut angular = SpectralField::zero(r);
    for b in AXES {
        for c_axis in AXES {
            let eps = levi_civita(axis, b, c_axis);
            if eps == 0.0 {
                continue;
            }
            let piece =
                apply_direction(b, &apply_orbital(c_axis, field)).scaled(C64::new(eps, 0.0));
            angular = angular.sum(&piece)?;
        }
    }
    let mut angular_scaled = SpectralField::zero(r);
    for (&key, &jet) in &angular.terms {
        angular_scaled.insert(key, jet.div_r(r).scaled(-I));
    }
    radial_part.sum(&angular_scaled)
}

/// The primitive vector objects an operator expression is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorOp {
    /// Multiplication by the radial unit vector n.
    Direction,
    /// The constant cyclic versor e_0 = e_z.
    E0,
    /// The constant cyclic versor e_(+1) = -(e_x + i e_y)/sqrt(2).
    EPlus,
    /// The constant cyclic versor e_(-1) = (e_x - i e_y)/sqrt(2).
    EMinus,
    /// The Pauli vector σ.
    Sigma,
    /// The orbital angular momentum L = -i r × ∇.
    Orbital,
    /// The total angular momentum J = L + σ/2.
    Total,
    /// The gradient ∇.
    Nabla,
}

impl VectorOp {
    /// Cartesian components of the constant versors; `None` for true operators.
    fn constant_components(self) -> Option<[C64; 3]> {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        match self {
            VectorOp::E0 => Some([C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]),
            VectorOp::EPlus => Some([
                C64::new(-inv_sqrt2, 0.0),
                C64::new(0.0, -inv_sqrt2),
                C64::new(0.0, 0.0),
            ]),
            VectorOp::EMinus => Some([
                C64::new(inv_sqrt2, 0.0),
                C64::new(0.0, -inv_sqrt2),
                C64::new(0.0, 0.0),
            ]),
            _ => None,
        }
    }

    fn token(self) -> &'static str {
        match self {
            VectorOp::Direction => "n",
            VectorOp::E0 => "e0",
            VectorOp::EPlus => "e+1",
            VectorOp::EMinus => "e-1",
            VectorOp::Sigma => "sigma",
            VectorOp::Orbital => "L",
            VectorOp::Total => "J",
            VectorOp::Nabla => "nabla",
        }
    }
}

/// A vector-valued operator expression: an atom or a cross product. In
/// `cross(A, B)` the operator B acts first.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorExpr {
    Atom(VectorOp),
    Cross(Box<VectorExpr>, Box<VectorExpr>),
}

impl VectorExpr {
    pub fn atom(op: VectorOp) -> Self {
        VectorExpr::Atom(op)
    }

    pub fn cross(a: VectorExpr, b: VectorExpr) -> Self {
        VectorExpr::Cross(Box::new(a), Box::new(b))
    }

    /// Apply one Cartesian component of this vector expression.
    pub fn apply_component(&self, axis: Axis, field: &SpectralField) -> Result<SpectralField> {
        match self {
            VectorExpr::Atom(op) => {
                if let Some(components) = op.constant_components() {
                    return Ok(field.scaled(components[axis.index()]));
                }
                Ok(match op {
                    VectorOp::Direction => apply_direction(axis, field),
                    VectorOp::Sigma => apply_sigma(axis, field),
                    VectorOp::Orbital => apply_orbital(axis, field),
                    VectorOp::Total => apply_total(axis, field),
                    VectorOp::Nabla => apply_nabla(axis, field)?,
                    _ => unreachable!("constants handled above"),
                })
            }
            VectorExpr::Cross(a, b) => {
                let mut out = SpectralField::zero(field.r);
                for b_axis in AXES {
                    for c_axis in AXES {
                        let eps = levi_civita(axis, b_axis, c_axis);
                        if eps == 0.0 {
                            continue;
                        }
                        let inner = b.apply_component(c_axis, field)?;
                        let piece = a.apply_component(b_axis, &inner)?;
                        out = out.sum(&piece.scaled(C64::new(eps, 0.0)))?;
                    }
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for VectorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorExpr::Atom(op) => write!(f, "{}", op.token()),
            VectorExpr::Cross(a, b) => write!(f, "(cross {a} {b})"),
        }
    }
}

/// A scalar-valued operator expression over the vector atoms.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorExpr {
    /// The identity.
    Identity,
    /// A · B, with B acting first.
    Dot(VectorExpr, VectorExpr),
}

impl OperatorExpr {
    pub fn dot(a: VectorExpr, b: VectorExpr) -> Self {
        OperatorExpr::Dot(a, b)
    }

    /// Evaluate the expression on a field. The operator closest to the field
    /// (the rightmost factor) acts first.
    pub fn apply(&self, field: &SpectralField) -> Result<SpectralField> {
        match self {
            OperatorExpr::Identity => Ok(field.clone()),
            OperatorExpr::Dot(a, b) => {
                let mut out = SpectralField::zero(field.r());
                for axis in AXES {
                    let inner = b.apply_component(axis, field)?;
                    out = out.sum(&a.apply_component(axis, &inner)?)?;
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Identity => write!(f, "identity"),
            OperatorExpr::Dot(a, b) => write!(f, "(dot {a} {b})"),
        }
    }
}

/// A vector-valued result, one spectral field per Cartesian component.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub x: SpectralField,
    pub y: SpectralField,
    pub z: SpectralField,
}

impl VectorField {
    /// Apply every component of a vector expression.
    pub fn from_expr(expr: &VectorExpr, field: &SpectralField) -> Result<Self> {
        Ok(VectorField {
            x: expr.apply_component(Axis::X, field)?,
            y: expr.apply_component(Axis::Y, field)?,
            z: expr.apply_component(Axis::Z, field)?,
        })
    }

    pub fn component(&self, axis: Axis) -> &SpectralField {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }

    /// Max componentwise difference from another vector field.
    pub fn max_difference(&self, other: &VectorField) -> f64 {
        AXES.iter()
            .map(|&a| self.component(a).max_difference(other.component(a)))
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::HalfInt;

    fn half(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn harmonic(l: u32, m: i32) -> HarmonicIndex {
        HarmonicIndex::new(l, m).unwrap()
    }

    fn unit_term(spin: Spin, l: u32, m: i32) -> SpectralField {
        let mut f = SpectralField::zero(1.0);
        f.add_term(
            spin,
            harmonic(l, m),
            C64::new(1.0, 0.0),
            RadialJet::unit(1.0),
        );
        f
    }

    fn spinor_field(kappa: i32, mu_twice: i32) -> SpectralField {
        let idx = SpinorIndex::new(kappa, half(mu_twice)).unwrap();
        SpectralField::from_spinor(idx, RadialJet::unit(1.0))
    }

    #[test]
    fn from_spinor_expansions() {
        let f = spinor_field(-1, 1);
        assert_eq!(f.len(), 1);
        assert_eq!(f.amplitude(Spin::Up, harmonic(0, 0)), C64::new(1.0, 0.0));

        let f = spinor_field(1, 1);
        let up = f.amplitude(Spin::Up, harmonic(1, 0)).re;
        let down = f.amplitude(Spin::Down, harmonic(1, 1)).re;
        assert!((up + (1f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((down - (2f64 / 3.0).sqrt()).abs() < 1e-15);

        // zero radial factor expands to the empty field
        let idx = SpinorIndex::new(2, half(3)).unwrap();
        let zero_jet = RadialJet::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert!(SpectralField::from_spinor(idx, zero_jet).is_empty());
    }

    #[test]
    fn sigma_actions() {
        let up00 = unit_term(Spin::Up, 0, 0);
        let z = apply_sigma(Axis::Z, &up00);
        assert_eq!(z.amplitude(Spin::Up, harmonic(0, 0)), C64::new(1.0, 0.0));
        let x = apply_sigma(Axis::X, &up00);
        assert_eq!(x.amplitude(Spin::Down, harmonic(0, 0)), C64::new(1.0, 0.0));
        let y = apply_sigma(Axis::Y, &up00);
        assert_eq!(y.amplitude(Spin::Down, harmonic(0, 0)), C64::new(0.0, 1.0));
        // σ² = 3 on any term
        let mut twice = SpectralField::zero(1.0);
        for axis in AXES {
            twice = twice
                .sum(&apply_sigma(axis, &apply_sigma(axis, &up00)))
                .unwrap();
        }
        assert!(twice.max_difference(&up00.scaled(C64::new(3.0, 0.0))) < 1e-15);
    }

    #[test]
    fn orbital_actions() {
        let f = unit_term(Spin::Up, 1, 1);
        let z = apply_orbital(Axis::Z, &f);
        assert_eq!(z.amplitude(Spin::Up, harmonic(1, 1)), C64::new(1.0, 0.0));

        // l = 0 is annihilated by every component
        let s = unit_term(Spin::Up, 0, 0);
        for axis in AXES {
            assert!(apply_orbital(axis, &s).is_empty());
        }

        // L² eigenvalue l(l+1) on a single harmonic
        let f = unit_term(Spin::Down, 2, -1);
        let mut l_sq = SpectralField::zero(1.0);
        for axis in AXES {
            l_sq = l_sq
                .sum(&apply_orbital(axis, &apply_orbital(axis, &f)))
                .unwrap();
        }
        assert!(l_sq.max_difference(&f.scaled(C64::new(6.0, 0.0))) < 1e-14);
    }

    #[test]
    fn direction_actions() {
        let s = unit_term(Spin::Up, 0, 0);
        let inv_sqrt3 = 1.0 / 3f64.sqrt();
        let inv_sqrt6 = 1.0 / 6f64.sqrt();

        let z = apply_direction(Axis::Z, &s);
        assert_eq!(z.len(), 1);
        assert!((z.amplitude(Spin::Up, harmonic(1, 0)).re - inv_sqrt3).abs() < 1e-15);

        let x = apply_direction(Axis::X, &s);
        assert!((x.amplitude(Spin::Up, harmonic(1, 1)).re + inv_sqrt6).abs() < 1e-15);
        assert!((x.amplitude(Spin::Up, harmonic(1, -1)).re - inv_sqrt6).abs() < 1e-15);

        // n·n = 1 applied twice and summed over axes
        let f = spinor_field(2, -1);
        let mut n_sq = SpectralField::zero(1.0);
        for axis in AXES {
            n_sq = n_sq
                .sum(&apply_direction(axis, &apply_direction(axis, &f)))
                .unwrap();
        }
        assert!(n_sq.max_difference(&f) < 1e-12);
    }

    #[test]
    fn cyclic_completeness() {
        // Σ_q (−1)^q n_q n_(−q) = 1 on an arbitrary field
        let f = spinor_field(-3, 3);
        let mut total = SpectralField::zero(1.0);
        for (q, sign) in [(-1i32, -1.0), (0, 1.0), (1, -1.0)] {
            let mut inner = SpectralField::zero(1.0);
            apply_n_cyclic_into(-q, C64::new(1.0, 0.0), &f, &mut inner);
            let mut outer = SpectralField::zero(1.0);
            apply_n_cyclic_into(q, C64::new(sign, 0.0), &inner, &mut outer);
            total = total.sum(&outer).unwrap();
        }
        assert!(total.max_difference(&f) < 1e-12);
    }

    #[test]
    fn total_momentum_eigenrelations() {
        // J_z on a spinor image is μ times it
        for (kappa, mu_twice) in [(1, 1), (-2, -3), (3, 1)] {
            let f = spinor_field(kappa, mu_twice);
            let jz = apply_total(Axis::Z, &f);
            let expected = f.scaled(C64::new(mu_twice as f64 / 2.0, 0.0));
            assert!(jz.max_difference(&expected) < 1e-14, "kappa={kappa}");

            // J² eigenvalue κ² − 1/4
            let mut j_sq = SpectralField::zero(1.0);
            for axis in AXES {
                j_sq = j_sq
                    .sum(&apply_total(axis, &apply_total(axis, &f)))
                    .unwrap();
            }
            let eig = (kappa * kappa) as f64 - 0.25;
            assert!(
                j_sq.max_difference(&f.scaled(C64::new(eig, 0.0))) < 1e-13,
                "kappa={kappa}"
            );
        }
        // J on the empty field stays empty
        assert!(apply_total(Axis::X, &SpectralField::zero(1.0)).is_empty());
    }

    #[test]
    fn nabla_of_linear_radial_profile() {
        // F = r: ∇_z(F Y_00 χ) = n_z Y_00 χ, value 1/sqrt(3) on (up, (1,0))
        let mut f = SpectralField::zero(2.0);
        f.add_term(
            Spin::Up,
            harmonic(0, 0),
            C64::new(1.0, 0.0),
            RadialJet::new(2.0, 2.0, 1.0, 0.0).unwrap(),
        );
        let grad_z = apply_nabla(Axis::Z, &f).unwrap();
        assert_eq!(grad_z.len(), 1);
        let amp = grad_z.amplitude(Spin::Up, harmonic(1, 0));
        assert!((amp.re - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!(amp.im.abs() < 1e-18);
    }

    #[test]
    fn radial_directional_derivative() {
        // n·∇ F Ω = dF/dr Ω for any spinor image: F = r² e^(−r) at r = 1.5
        let r = 1.5f64;
        let e = (-r).exp();
        let jet = RadialJet::new(
            r,
            r * r * e,
            (2.0 * r - r * r) * e,
            (2.0 - 4.0 * r + r * r) * e,
        )
        .unwrap();
        let idx = SpinorIndex::new(-2, half(1)).unwrap();
        let f = SpectralField::from_spinor(idx, jet);
        let expr = OperatorExpr::dot(
            VectorExpr::atom(VectorOp::Direction),
            VectorExpr::atom(VectorOp::Nabla),
        );
        let out = expr.apply(&f).unwrap();
        let expected =
            SpectralField::from_spinor(idx, RadialJet::unit(r)).scaled(C64::new(jet.f1, 0.0));
        assert!(out.max_difference(&expected) < 1e-14);
    }

    #[test]
    fn laplacian_closed_form() {
        // ∇² F Ω = (1/r)(∂²/∂r² − κ(κ+1)/r²)(r F) Ω with F = 1/(1+r²)
        let r = 0.8f64;
        let d = 1.0 + r * r;
        let jet = RadialJet::new(
            r,
            1.0 / d,
            -2.0 * r / (d * d),
            (6.0 * r * r - 2.0) / (d * d * d),
        )
        .unwrap();
        for kappa in [1i32, -1, 2, -3] {
            let idx = SpinorIndex::new(kappa, half(1)).unwrap();
            let f = SpectralField::from_spinor(idx, jet);
            let expr = OperatorExpr::dot(
                VectorExpr::atom(VectorOp::Nabla),
                VectorExpr::atom(VectorOp::Nabla),
            );
            let out = expr.apply(&f).unwrap();
            let k = kappa as f64;
            let value = jet.f2 + 2.0 * jet.f1 / r - k * (k + 1.0) * jet.f / (r * r);
            let expected =
                SpectralField::from_spinor(idx, RadialJet::unit(r)).scaled(C64::new(value, 0.0));
            assert!(
                out.max_difference(&expected) < 1e-13,
                "kappa={kappa}: {:e}",
                out.max_difference(&expected)
            );
        }
    }

    #[test]
    fn jet_depth_exhaustion_is_an_error() {
        // three nested gradients need a third derivative that jets never
        // carry; the profile must have nonvanishing derivatives or the
        // exhausted branches prune away before they are ever differentiated
        let idx = SpinorIndex::new(1, half(1)).unwrap();
        let jet = RadialJet::new(1.0, 1.0, 0.5, 0.25).unwrap();
        let f = SpectralField::from_spinor(idx, jet);
        let once = apply_nabla(Axis::Z, &f).unwrap();
        let twice = apply_nabla(Axis::Z, &once).unwrap();
        match apply_nabla(Axis::Z, &twice) {
            Err(Error::JetDepth { .. }) => {}
            other => panic!("expected jet depth error, got {other:?}"),
        }
    }

    #[test]
    fn ordering_of_cross_factors_matters() {
        // n·(σ×L) and (σ×L)·n differ on spinor fields: eigenvalues i(κ+1)
        // and i(κ−1) on Ω_(−κ,μ)
        let kappa = 2;
        let f = spinor_field(kappa, 1);
        let image = spinor_field(-kappa, 1);
        let sigma_cross_l = VectorExpr::cross(
            VectorExpr::atom(VectorOp::Sigma),
            VectorExpr::atom(VectorOp::Orbital),
        );
        let n_first =
            OperatorExpr::dot(VectorExpr::atom(VectorOp::Direction), sigma_cross_l.clone())
                .apply(&f)
                .unwrap();
        let n_last = OperatorExpr::dot(sigma_cross_l, VectorExpr::atom(VectorOp::Direction))
            .apply(&f)
            .unwrap();
        let k = kappa as f64;
        assert!(n_first.max_difference(&image.scaled(C64::new(0.0, k + 1.0))) < 1e-13);
        assert!(n_last.max_difference(&image.scaled(C64::new(0.0, k - 1.0))) < 1e-13);
    }

    #[test]
    fn canonicalization_merges_and_prunes() {
        let mut f = SpectralField::zero(1.0);
        f.add_term(
            Spin::Up,
            harmonic(1, 0),
            C64::new(0.5, 0.0),
            RadialJet::unit(1.0),
        );
        f.add_term(
            Spin::Up,
            harmonic(1, 0),
            C64::new(0.25, 0.0),
            RadialJet::unit(1.0),
        );
        assert_eq!(f.len(), 1);
        assert_eq!(f.amplitude(Spin::Up, harmonic(1, 0)), C64::new(0.75, 0.0));

        // exact cancellation removes the key entirely
        f.add_term(
            Spin::Up,
            harmonic(1, 0),
            C64::new(-0.75, 0.0),
            RadialJet::unit(1.0),
        );
        assert!(f.is_empty());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_field() -> impl Strategy<Value = SpectralField> {
            let term = (
                any::<bool>(),
                0u32..4,
                -3i32..=3,
                -1.0f64..1.0,
                -1.0f64..1.0,
            );
            proptest::collection::vec(term, 1..6).prop_map(|terms| {
                let mut f = SpectralField::zero(1.0);
                for (up, l, m, re, im) in terms {
                    let m = m.clamp(-(l as i32), l as i32);
                    let spin = if up { Spin::Up } else { Spin::Down };
                    f.add_term(spin, harmonic(l, m), C64::new(re, im), RadialJet::unit(1.0));
                }
                f
            })
        }

        proptest! {
            #[test]
            fn field_minus_itself_cancels(f in arb_field()) {
                let diff = f.sum(&f.scaled(C64::new(-1.0, 0.0))).unwrap();
                prop_assert!(diff.max_amplitude() < 1e-15);
                prop_assert_eq!(f.max_difference(&f), 0.0);
            }

            #[test]
            fn operators_are_linear(f in arb_field(), g in arb_field()) {
                // op(f + g) = op(f) + op(g) for a representative operator mix
                let sum = f.sum(&g).unwrap();
                for axis in AXES {
                    for op in [apply_sigma, apply_direction, apply_orbital] {
                        let left = op(axis, &sum);
                        let right = op(axis, &f).sum(&op(axis, &g)).unwrap();
                        prop_assert!(left.max_difference(&right) < 1e-12);
                    }
                }
            }

            #[test]
            fn direction_cosines_square_to_one(f in arb_field()) {
                let mut n_sq = SpectralField::zero(f.r());
                for axis in AXES {
                    n_sq = n_sq.sum(&apply_direction(axis, &apply_direction(axis, &f))).unwrap();
                }
                prop_assert!(n_sq.max_difference(&f) < 1e-12);
            }
        }
    }
}
