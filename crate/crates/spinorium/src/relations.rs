//! The machine-readable catalog of spinor recurrence and differential
//! relations.
//!
//! Every entry pairs a left-hand operator expression (evaluated by the
//! spectral engine) with a right-hand expansion
//!
//! ```text
//! Σ_terms  coefficient(κ, μ) × radial-operator[F](r) × Ω_(κ', μ')
//! ```
//!
//! Coefficients are stored as structured closed forms — sign, prefactors,
//! an integer radicand in (2κ, 2μ), and a divisor like |2κ±1| or 4κ²−1 —
//! never as opaque floats. That keeps two properties exact:
//!
//! * a term whose target (κ', μ') is invalid evaluates to exactly zero
//!   (its radicand is the integer 0), which is testable as an identity;
//! * transcriptions remain reviewable term by term against the printed
//!   table.
//!
//! The catalog is data under test; the engine is its oracle. Entries whose
//! table row carries a ± sign become two variants under one id, and the
//! verification sweep reports the variants separately.

mod catalog;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::indices::{HalfInt, SpinorIndex};
use crate::spectral::{OperatorExpr, RadialJet, SpectralField, C64};

/// A linear form in the doubled variables: raw(2κ, 2μ) = c0 + ck·2κ + cm·2μ.
/// Its value as a factor is raw/2, so e.g. (κ+1) is `{c0: 2, ck: 1, cm: 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinForm {
    pub c0: i64,
    pub ck: i64,
    pub cm: i64,
}

impl LinForm {
    fn raw(self, k2: i64, m2: i64) -> i64 {
        self.c0 + self.ck * k2 + self.cm * m2
    }
}

/// The integer divisor families appearing in the table. Absolute values are
/// kept literal; they matter for κ of either sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Divisor {
    One,
    AbsTwoKappaPlus1,
    AbsTwoKappaMinus1,
    TwoKappaPlus1,
    TwoKappaMinus1,
    FourKappaSqMinus1,
}

impl Divisor {
    fn value(self, k2: i64) -> i64 {
        match self {
            Divisor::One => 1,
            Divisor::AbsTwoKappaPlus1 => (k2 + 1).abs(),
            Divisor::AbsTwoKappaMinus1 => (k2 - 1).abs(),
            Divisor::TwoKappaPlus1 => k2 + 1,
            Divisor::TwoKappaMinus1 => k2 - 1,
            Divisor::FourKappaSqMinus1 => k2 * k2 - 1,
        }
    }
}

/// A closed-form coefficient:
///
/// ```text
/// sign × i^(0|1) × sgn(κ)^(0|1) × (√2)^sqrt2_pow × Π(prefactors) × √(radicand) / divisor
/// ```
///
/// evaluated in double precision from exact integer pieces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffForm {
    pub sign: i8,
    pub imaginary: bool,
    pub sgn_kappa: bool,
    pub sqrt2_pow: i8,
    pub prefactors: Vec<LinForm>,
    /// √ of the product of the two linear-form values, when present.
    pub radicand: Option<(LinForm, LinForm)>,
    pub divisor: Divisor,
}

impl CoeffForm {
    /// The radicand as an exact integer (4 × the radical's square), or `None`
    /// when the form carries no radical. Forced vanishing is this integer
    /// being zero.
    pub fn radicand_raw(&self, kappa: i32, mu: HalfInt) -> Option<i64> {
        let (k2, m2) = (2 * kappa as i64, mu.twice() as i64);
        self.radicand.map(|(a, b)| a.raw(k2, m2) * b.raw(k2, m2))
    }

    /// Evaluate at (κ, μ).
    pub fn eval(&self, kappa: i32, mu: HalfInt) -> C64 {
        let (k2, m2) = (2 * kappa as i64, mu.twice() as i64);
        let mut value = self.sign as f64;
        if self.sgn_kappa {
            value *= kappa.signum() as f64;
        }
        value *= std::f64::consts::SQRT_2.powi(self.sqrt2_pow as i32);
        for pre in &self.prefactors {
            value *= pre.raw(k2, m2) as f64 / 2.0;
        }
        if let Some((a, b)) = self.radicand {
            let raw = a.raw(k2, m2) * b.raw(k2, m2);
            debug_assert!(
                raw >= 0,
                "negative radicand {raw} at kappa={kappa}, mu={mu}: transcription bug"
            );
            if raw == 0 {
                return C64::new(0.0, 0.0);
            }
            value *= (raw as f64).sqrt() / 2.0;
        }
        value /= self.divisor.value(k2) as f64;
        if self.imaginary {
            C64::new(0.0, value)
        } else {
            C64::new(value, 0.0)
        }
    }
}

/// How a term's target κ' is derived from the source κ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KappaMap {
    /// κ' = −κ (degree preserved, coupling flipped).
    Negated,
    /// κ' = κ.
    Same,
    /// κ' = κ + 1.
    Plus1,
    /// κ' = κ − 1.
    Minus1,
    /// κ' = −κ − 1 (same degree pair, partner coupling).
    NegatedMinus1,
}

impl KappaMap {
    pub fn apply(self, kappa: i32) -> i32 {
        match self {
            KappaMap::Negated => -kappa,
            KappaMap::Same => kappa,
            KappaMap::Plus1 => kappa + 1,
            KappaMap::Minus1 => kappa - 1,
            KappaMap::NegatedMinus1 => -kappa - 1,
        }
    }
}

/// The radial sub-operators of the differential relations, evaluated on a
/// [`RadialJet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadialOp {
    /// Plain multiplication by F(r).
    Multiply,
    /// dr_scale·F′ + (c(κ)/r)·F with c(κ) = (c0 + c1·κ + c2·κ²)/den.
    FirstOrder {
        dr_scale: i8,
        c0: i64,
        c1: i64,
        c2: i64,
        den: i64,
    },
    /// scale × (1/r)(∂²/∂r² − κ(κ+1)/r²)(r F) = scale × (F″ + 2F′/r − κ(κ+1)F/r²).
    SphericalSecond { scale: i8 },
}

impl RadialOp {
    /// Apply to a jet, producing the scalar radial value of the term.
    pub fn eval(self, jet: &RadialJet, kappa: i32) -> f64 {
        let k = kappa as f64;
        match self {
            RadialOp::Multiply => jet.f,
            RadialOp::FirstOrder {
                dr_scale,
                c0,
                c1,
                c2,
                den,
            } => {
                let c = (c0 as f64 + c1 as f64 * k + c2 as f64 * k * k) / den as f64;
                dr_scale as f64 * jet.f1 + c / jet.r * jet.f
            }
            RadialOp::SphericalSecond { scale } => {
                scale as f64
                    * (jet.f2 + 2.0 * jet.f1 / jet.r - k * (k + 1.0) * jet.f / (jet.r * jet.r))
            }
        }
    }

    /// Highest derivative order the operator reads.
    pub fn order(self) -> u8 {
        match self {
            RadialOp::Multiply => 0,
            RadialOp::FirstOrder { .. } => 1,
            RadialOp::SphericalSecond { .. } => 2,
        }
    }
}

/// One term of a right-hand expansion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub kappa_map: KappaMap,
    /// Shift of μ in whole units (−1, 0, or +1).
    pub mu_shift: i8,
    pub coefficient: CoeffForm,
    pub radial: RadialOp,
}

impl ExpansionTerm {
    /// The raw target label (possibly invalid; validity decides whether the
    /// term may carry a nonzero coefficient).
    pub fn target(&self, kappa: i32, mu: HalfInt) -> (i32, HalfInt) {
        (
            self.kappa_map.apply(kappa),
            mu + HalfInt::from_int(self.mu_shift as i32),
        )
    }
}

/// Which section of the table an entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// Multiplicative operators only (n, σ, e_q and their crosses).
    Algebraic,
    /// Angular differential operators (L, J) on Ω alone.
    FirstKind,
    /// ∇ acting on F(r)Ω for arbitrary differentiable F.
    SecondKind,
}

/// ± tag for paired table rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantTag {
    None,
    Plus,
    Minus,
}

impl std::fmt::Display for VariantTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VariantTag::None => write!(f, "none"),
            VariantTag::Plus => write!(f, "+"),
            VariantTag::Minus => write!(f, "-"),
        }
    }
}

/// One sign variant of a relation: a concrete LHS operator expression and
/// its expansion terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationVariant {
    pub tag: VariantTag,
    pub lhs: OperatorExpr,
    pub terms: Vec<ExpansionTerm>,
}

/// A full catalog entry: one table row (possibly two ± variants).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub id: &'static str,
    pub kind: RelationKind,
    pub variants: Vec<RelationVariant>,
}

/// The full catalog: 7 algebraic entries, 47 of the first kind, 37 of the
/// second kind, with ids matching the table numbering.
pub fn catalog() -> Vec<RelationEntry> {
    catalog::build()
}

/// Look up an entry by id.
pub fn find_entry<'a>(entries: &'a [RelationEntry], id: &str) -> Option<&'a RelationEntry> {
    entries.iter().find(|e| e.id == id)
}

/// The coefficient of one term at (κ, μ).
pub fn rhs_coefficient(
    variant: &RelationVariant,
    term_index: usize,
    kappa: i32,
    mu: HalfInt,
) -> Complex64 {
    variant.terms[term_index].coefficient.eval(kappa, mu)
}

/// Evaluate the right-hand side of a relation variant on F(r)Ω_κμ as a
/// spectral field.
///
/// Terms aimed at invalid targets must evaluate to exactly zero; a nonzero
/// coefficient there is a transcription bug and panics rather than being
/// silently dropped (dropping would cancel the error against the engine).
pub fn eval_rhs(
    variant: &RelationVariant,
    kappa: i32,
    mu: HalfInt,
    jet: &RadialJet,
) -> SpectralField {
    let mut out = SpectralField::zero(jet.r);
    for term in &variant.terms {
        let coeff = term.coefficient.eval(kappa, mu);
        let (k_target, mu_target) = term.target(kappa, mu);
        let Ok(target) = SpinorIndex::new(k_target, mu_target) else {
            assert!(
                coeff.norm() == 0.0,
                "nonzero coefficient {coeff} on invalid target (kappa'={k_target}, mu'={mu_target}) \
                 from source (kappa={kappa}, mu={mu})"
            );
            continue;
        };
        if coeff.norm() == 0.0 {
            continue;
        }
        let radial_value = term.radial.eval(jet, kappa);
        let scale = coeff * radial_value;
        let image = SpectralField::from_spinor(target, RadialJet::unit(jet.r)).scaled(scale);
        out = out.sum(&image).expect("same radius by construction");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::mu_range;

    fn half(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn catalog_has_91_entries_with_expected_kinds() {
        let entries = catalog();
        assert_eq!(entries.len(), 91);
        let count = |kind: RelationKind| entries.iter().filter(|e| e.kind == kind).count();
        assert_eq!(count(RelationKind::Algebraic), 7);
        assert_eq!(count(RelationKind::FirstKind), 47);
        assert_eq!(count(RelationKind::SecondKind), 37);

        let mut ids: Vec<&str> = entries.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 91, "duplicate ids in the catalog");

        for (section, count) in [("3.1.", 7), ("3.2.", 47), ("3.3.", 37)] {
            for n in 1..=count {
                let id = format!("{section}{n}");
                assert!(
                    entries.iter().any(|e| e.id == id),
                    "missing catalog id {id}"
                );
            }
        }
    }

    #[test]
    fn variant_structure() {
        let entries = catalog();
        for entry in &entries {
            match entry.variants.len() {
                1 => assert_eq!(entry.variants[0].tag, VariantTag::None, "{}", entry.id),
                2 => {
                    assert_eq!(entry.variants[0].tag, VariantTag::Plus, "{}", entry.id);
                    assert_eq!(entry.variants[1].tag, VariantTag::Minus, "{}", entry.id);
                }
                n => panic!("{} has {n} variants", entry.id),
            }
            // only gradient relations carry non-multiplicative radial parts
            for variant in &entry.variants {
                let has_radial = variant.terms.iter().any(|t| t.radial != RadialOp::Multiply);
                match entry.kind {
                    RelationKind::SecondKind => {
                        assert!(has_radial, "{} should reference radial jets", entry.id)
                    }
                    _ => assert!(!has_radial, "{} must be multiply-only", entry.id),
                }
            }
        }
    }

    #[test]
    fn coefficient_fixed_values() {
        let entries = catalog();
        let e311 = find_entry(&entries, "3.1.1").unwrap();
        let v = &e311.variants[0];
        // term order: Ω_(-κ), Ω_(κ+1), Ω_(κ-1)
        let c0 = rhs_coefficient(v, 0, 1, half(1));
        assert!((c0.re + 1.0 / 3.0).abs() < 1e-15 && c0.im == 0.0);
        let c1 = rhs_coefficient(v, 1, 1, half(1));
        assert!((c1.re - 2f64.sqrt() / 3.0).abs() < 1e-15);
        let c2 = rhs_coefficient(v, 2, 1, half(1));
        assert_eq!(c2, Complex64::new(0.0, 0.0)); // target κ'=0: forced zero
    }

    #[test]
    fn eigenvalue_coefficients_are_consistent() {
        // L·J = (J² + L² − 3/4)/2 as exact operator algebra, checked on the
        // catalog's own closed forms for |κ| ≤ 20.
        let entries = catalog();
        let coeff_of = |id: &str, kappa: i32, mu: HalfInt| -> f64 {
            let e = find_entry(&entries, id).unwrap();
            rhs_coefficient(&e.variants[0], 0, kappa, mu).re
        };
        for kappa in (-20i32..=20).filter(|&k| k != 0) {
            let mu = half(1);
            let l_sq = coeff_of("3.2.8", kappa, mu);
            let j_sq = coeff_of("3.2.9", kappa, mu);
            let l_dot_j = coeff_of("3.2.10", kappa, mu);
            assert!(
                (l_dot_j - (j_sq + l_sq - 0.75) / 2.0).abs() < 1e-13,
                "kappa={kappa}"
            );
            // and the eigenvalues themselves
            let k = kappa as f64;
            assert_eq!(l_sq, k * (k + 1.0));
            assert_eq!(j_sq, k * k - 0.25);
            assert_eq!(l_dot_j, (k - 0.5) * (k + 1.0));
        }
    }

    #[test]
    fn forced_vanishing_everywhere() {
        // every term of every entry, every |κ| ≤ 8: invalid target ⇒ exactly 0
        let entries = catalog();
        for entry in &entries {
            for variant in &entry.variants {
                for (i, term) in variant.terms.iter().enumerate() {
                    for kappa in (-8..=8).filter(|&k| k != 0) {
                        for mu in mu_range(kappa).unwrap() {
                            let (kt, mt) = term.target(kappa, mu);
                            if SpinorIndex::is_valid(kt, mt) {
                                continue;
                            }
                            let c = term.coefficient.eval(kappa, mu);
                            assert!(
                                c.norm() == 0.0,
                                "{} variant {} term {i} at (κ={kappa}, μ={mu}): \
                                 invalid target (κ'={kt}, μ'={mt}) with coefficient {c}",
                                entry.id,
                                variant.tag
                            );
                            // and the vanishing is through an exactly-zero radicand
                            if let Some(raw) = term.coefficient.radicand_raw(kappa, mu) {
                                assert_eq!(raw, 0, "{} term {i}", entry.id);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_operator_pairing() {
        // e0·n is symmetric, so the κ→κ+1 coefficient at (κ, μ) equals the
        // κ→κ−1 coefficient at (κ+1, μ).
        let entries = catalog();
        let v = &find_entry(&entries, "3.1.1").unwrap().variants[0];
        for kappa in (-8..=8i32).filter(|&k| k != 0 && k != -1) {
            for mu in mu_range(kappa).unwrap() {
                if !SpinorIndex::is_valid(kappa + 1, mu) {
                    continue;
                }
                let up = rhs_coefficient(v, 1, kappa, mu).re;
                let down = rhs_coefficient(v, 2, kappa + 1, mu).re;
                assert!(
                    (up - down).abs() < 1e-13,
                    "kappa={kappa} mu={mu}: {up} vs {down}"
                );
            }
        }
    }

    #[test]
    fn eval_rhs_fixed_cases() {
        let entries = catalog();
        let jet = RadialJet::unit(1.0);

        // n·σ Ω_κμ = −Ω_(−κ,μ)
        let v = &find_entry(&entries, "3.1.3").unwrap().variants[0];
        let rhs = eval_rhs(v, 2, half(1), &jet);
        let expected = SpectralField::from_spinor(SpinorIndex::new(-2, half(1)).unwrap(), jet)
            .scaled(C64::new(-1.0, 0.0));
        assert!(rhs.max_difference(&expected) < 1e-15);

        // σ·L eigenvalue −(κ+1) is 0 at κ = −1
        let v = &find_entry(&entries, "3.2.3").unwrap().variants[0];
        let rhs = eval_rhs(v, -1, half(1), &jet);
        assert!(rhs.is_empty());

        // gradient relation with F = r at r = 2: (∂_r + (κ+1)/r)F = 1 at κ = −1
        let v = &find_entry(&entries, "3.3.5").unwrap().variants[0];
        let jet_f_eq_r = RadialJet::new(2.0, 2.0, 1.0, 0.0).unwrap();
        let rhs = eval_rhs(v, -1, half(1), &jet_f_eq_r);
        let expected =
            SpectralField::from_spinor(SpinorIndex::new(1, half(1)).unwrap(), RadialJet::unit(2.0))
                .scaled(C64::new(-1.0, 0.0));
        assert!(rhs.max_difference(&expected) < 1e-15);
    }
}
