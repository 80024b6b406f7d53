//! The verification harness: plays the relation catalog against the spectral
//! engine and runs the independent oracles that gate the engine itself.
//!
//! The sweep evaluates, for every catalog entry, every sign variant, every
//! valid (κ, μ) with |κ| ≤ kappa_max, and (for gradient relations) every
//! radial profile × radius:
//!
//! * LHS: the operator expression applied by the engine to F(r)Ω_κμ;
//! * RHS: the catalog expansion Σ coefficient × radial(F) × Ω_κ'μ';
//! * residual: max |amplitude difference| over the canonical (spin, l, m)
//!   keys — strictly stronger than a pointwise comparison, and it localizes
//!   the broken term when something fails.
//!
//! Angular relations are checked with a unit radial factor (they never read
//! the jet); gradient relations must hold for every profile, which is itself
//! the test that the radial sub-operators were transcribed correctly.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::harmonics::{ylm_theta, Direction, HarmonicIndex};
use crate::indices::{kappa_to_l, mu_range, HalfInt, SpinorIndex};
use crate::quadrature::gauss_legendre;
use crate::relations::{eval_rhs, RelationEntry, RelationKind, RelationVariant, VariantTag};
use crate::spectral::{
    apply_direction, apply_nabla, apply_orbital, apply_sigma, Axis, OperatorExpr, RadialJet,
    SpectralField, VectorExpr, VectorField, VectorOp, AXES, C64,
};
use crate::spinors::{eval_spinor, Spin, SpinorValue};

/// Fixed default seed; `SPINORIUM_SEED` overrides it. Reproducibility over
/// prettiness: every "random" direction and field in the harness flows from
/// this.
pub fn default_seed() -> u64 {
    std::env::var("SPINORIUM_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x53504e52)
}

pub fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(default_seed())
}

/// Uniform direction on the sphere: cos θ uniform in [−1, 1], φ uniform.
pub fn random_direction(rng: &mut impl Rng) -> Direction {
    let xi: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    Direction::new(xi.acos(), phi).expect("acos lands in [0, pi]")
}

// ------------------------------------------------------------------ profiles

/// Named radial profiles for the gradient relations. `PowerL` uses the
/// orbital degree of the source spinor, making r^l Y_lm harmonic — a useful
/// special case where the Laplacian relation must produce an exact zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadialProfile {
    /// F(r) = r² e^(−r)
    RSquaredExp,
    /// F(r) = 1 / (1 + r²)
    Lorentzian,
    /// F(r) = r^l with l taken from the source index
    PowerL,
}

impl RadialProfile {
    pub fn all() -> [RadialProfile; 3] {
        [
            RadialProfile::RSquaredExp,
            RadialProfile::Lorentzian,
            RadialProfile::PowerL,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            RadialProfile::RSquaredExp => "r2exp",
            RadialProfile::Lorentzian => "lorentz",
            RadialProfile::PowerL => "power_l",
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        Self::all().into_iter().find(|p| p.name() == name)
    }

    pub fn value(self, r: f64, l: u32) -> f64 {
        match self {
            RadialProfile::RSquaredExp => r * r * (-r).exp(),
            RadialProfile::Lorentzian => 1.0 / (1.0 + r * r),
            RadialProfile::PowerL => r.powi(l as i32),
        }
    }

    /// Exact first and second derivatives alongside the value.
    pub fn jet(self, r: f64, l: u32) -> RadialJet {
        let (f, f1, f2) = match self {
            RadialProfile::RSquaredExp => {
                let e = (-r).exp();
                (
                    r * r * e,
                    (2.0 * r - r * r) * e,
                    (2.0 - 4.0 * r + r * r) * e,
                )
            }
            RadialProfile::Lorentzian => {
                let d = 1.0 + r * r;
                (
                    1.0 / d,
                    -2.0 * r / (d * d),
                    (6.0 * r * r - 2.0) / (d * d * d),
                )
            }
            RadialProfile::PowerL => {
                let lf = l as f64;
                let f1 = if l >= 1 {
                    lf * r.powi(l as i32 - 1)
                } else {
                    0.0
                };
                let f2 = if l >= 2 {
                    lf * (lf - 1.0) * r.powi(l as i32 - 2)
                } else {
                    0.0
                };
                (r.powi(l as i32), f1, f2)
            }
        };
        RadialJet::new(r, f, f1, f2).expect("sweep radii are positive")
    }
}

// ------------------------------------------------------------------- sweep

/// Sweep configuration; the defaults are the acceptance settings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub kappa_max: u32,
    pub radii: Vec<f64>,
    pub profiles: Vec<RadialProfile>,
    pub tolerance: f64,
    /// Restrict to these ids (all 91 when `None`).
    pub relations: Option<Vec<String>>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            kappa_max: 6,
            radii: vec![0.5, 1.0, 2.0],
            profiles: RadialProfile::all().to_vec(),
            tolerance: 1e-10,
            relations: None,
        }
    }
}

/// Whether a case could be evaluated at all. Jet exhaustion is reported as
/// `Inapplicable`, never as a silent pass (none is expected at jet depth 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseStatus {
    Verified,
    Inapplicable,
}

/// Outcome of one (relation, variant, κ, μ, profile, r) case.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationResult {
    pub relation_id: String,
    pub variant: VariantTag,
    pub kappa: i32,
    pub mu: HalfInt,
    pub profile: &'static str,
    pub r: f64,
    pub residual: f64,
    pub pass: bool,
    pub status: CaseStatus,
}

/// Verify one case: engine LHS against catalog RHS.
pub fn verify_relation(
    entry_id: &str,
    variant: &RelationVariant,
    kappa: i32,
    mu: HalfInt,
    jet: &RadialJet,
    profile: &'static str,
    tolerance: f64,
) -> VerificationResult {
    let source = SpinorIndex::new(kappa, mu).expect("sweep enumerates valid indices");
    let field = SpectralField::from_spinor(source, *jet);
    let (residual, status) = match variant.lhs.apply(&field) {
        Ok(lhs) => {
            let rhs = eval_rhs(variant, kappa, mu, jet);
            (lhs.max_difference(&rhs), CaseStatus::Verified)
        }
        Err(Error::JetDepth { .. }) => (f64::NAN, CaseStatus::Inapplicable),
        Err(e) => panic!("unexpected engine error on {entry_id}: {e}"),
    };
    VerificationResult {
        relation_id: entry_id.to_string(),
        variant: variant.tag,
        kappa,
        mu,
        profile,
        r: jet.r,
        residual,
        pass: status == CaseStatus::Verified && residual <= tolerance,
        status,
    }
}

struct Case<'a> {
    entry: &'a RelationEntry,
    variant: &'a RelationVariant,
    kappa: i32,
    mu: HalfInt,
    jet: RadialJet,
    profile: &'static str,
}

fn cases_for_entry<'a>(entry: &'a RelationEntry, config: &SweepConfig) -> Vec<Case<'a>> {
    let mut cases = Vec::new();
    for variant in &entry.variants {
        for kappa_abs in 1..=config.kappa_max as i32 {
            for kappa in [kappa_abs, -kappa_abs] {
                for mu in mu_range(kappa).expect("kappa is nonzero") {
                    match entry.kind {
                        RelationKind::Algebraic | RelationKind::FirstKind => {
                            cases.push(Case {
                                entry,
                                variant,
                                kappa,
                                mu,
                                jet: RadialJet::unit(1.0),
                                profile: "unit",
                            });
                        }
                        RelationKind::SecondKind => {
                            let l = kappa_to_l(kappa).expect("kappa is nonzero");
                            for &profile in &config.profiles {
                                for &r in &config.radii {
                                    cases.push(Case {
                                        entry,
                                        variant,
                                        kappa,
                                        mu,
                                        jet: profile.jet(r, l),
                                        profile: profile.name(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    cases
}

/// Run the sweep for a single entry.
pub fn verify_entry(entry: &RelationEntry, config: &SweepConfig) -> Vec<VerificationResult> {
    cases_for_entry(entry, config)
        .par_iter()
        .map(|case| {
            verify_relation(
                case.entry.id,
                case.variant,
                case.kappa,
                case.mu,
                &case.jet,
                case.profile,
                config.tolerance,
            )
        })
        .collect()
}

/// Run the full sweep over the catalog (or the configured subset). Cases are
/// independent and evaluated in parallel; the result order is deterministic
/// regardless of scheduling.
pub fn verify_all(entries: &[RelationEntry], config: &SweepConfig) -> Vec<VerificationResult> {
    let selected: Vec<&RelationEntry> = entries
        .iter()
        .filter(|e| match &config.relations {
            Some(ids) => ids.iter().any(|id| id == e.id),
            None => true,
        })
        .collect();
    let cases: Vec<Case> = selected
        .iter()
        .flat_map(|e| cases_for_entry(e, config))
        .collect();
    cases
        .par_iter()
        .map(|case| {
            verify_relation(
                case.entry.id,
                case.variant,
                case.kappa,
                case.mu,
                &case.jet,
                case.profile,
                config.tolerance,
            )
        })
        .collect()
}

// ------------------------------------------------------------ orthonormality

/// Max deviation of the spinor Gram matrix from the identity over all pairs
/// with |κ|, |κ'| ≤ kappa_max, via the band-exact product quadrature.
///
/// The integrand of ⟨Ω'|Ω⟩ separates into a θ factor and a pure Fourier mode
/// in φ, so the two grid sums are evaluated as an exact product — the same
/// numbers the naive double sum would give, at a fraction of the cost.
pub fn orthonormality_check(kappa_max: u32) -> f64 {
    let l_max = kappa_max; // κ = +kappa_max has the largest degree
    let n_theta = 2 * l_max as usize + 2;
    let n_phi = 4 * l_max as usize + 5;
    let (xi, w_xi) = gauss_legendre(n_theta);
    let w_phi = std::f64::consts::TAU / n_phi as f64;

    // normalized θ-functions, indexed by (l, m)
    let theta_index = |l: u32, m: i32| -> usize { (l * l) as usize + (l as i32 + m) as usize };
    let mut theta_fns = vec![Vec::new(); ((l_max + 1) * (l_max + 1)) as usize];
    for l in 0..=l_max {
        for m in -(l as i32)..=(l as i32) {
            theta_fns[theta_index(l, m)] = xi
                .iter()
                .map(|&x| ylm_theta(l, m, x).expect("index is valid"))
                .collect();
        }
    }

    // φ factor per mode difference: w_phi Σ_j e^(i Δm φ_j)
    let max_dm = 2 * l_max as i32;
    let phi_factor: Vec<C64> = (0..=max_dm)
        .map(|dm| {
            let mut s = C64::new(0.0, 0.0);
            for j in 0..n_phi {
                let phi = std::f64::consts::TAU * j as f64 / n_phi as f64;
                s += C64::from_polar(1.0, dm as f64 * phi);
            }
            s * w_phi
        })
        .collect();
    let phi_of = |dm: i32| -> C64 {
        let f = phi_factor[dm.unsigned_abs() as usize];
        if dm < 0 {
            f.conj()
        } else {
            f
        }
    };

    // flatten every spinor into its ≤ 2 (m, θ-fn, coefficient) components
    struct Component {
        spin: Spin,
        m: i32,
        theta_fn: usize,
        coeff: f64,
    }
    let mut spinors: Vec<Vec<Component>> = Vec::new();
    for kappa_abs in 1..=kappa_max as i32 {
        for kappa in [kappa_abs, -kappa_abs] {
            for mu in mu_range(kappa).expect("nonzero") {
                let idx = SpinorIndex::new(kappa, mu).expect("valid");
                let comps = crate::spinors::spinor_to_product_basis(idx)
                    .into_iter()
                    .map(|(spin, h, c)| Component {
                        spin,
                        m: h.m(),
                        theta_fn: theta_index(h.l(), h.m()),
                        coeff: c,
                    })
                    .collect();
                spinors.push(comps);
            }
        }
    }

    let n = spinors.len();
    (0..n)
        .into_par_iter()
        .map(|a| {
            let mut worst = 0.0f64;
            for b in a..n {
                let mut gram = C64::new(0.0, 0.0);
                for ca in &spinors[a] {
                    for cb in &spinors[b] {
                        if ca.spin != cb.spin {
                            continue;
                        }
                        let fa = &theta_fns[ca.theta_fn];
                        let fb = &theta_fns[cb.theta_fn];
                        let theta_sum: f64 = fa
                            .iter()
                            .zip(fb.iter())
                            .zip(w_xi.iter())
                            .map(|((&x, &y), &w)| w * x * y)
                            .sum();
                        gram += ca.coeff * cb.coeff * theta_sum * phi_of(cb.m - ca.m);
                    }
                }
                let expected = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((gram - C64::new(expected, 0.0)).norm());
            }
            worst
        })
        .reduce(|| 0.0, f64::max)
}

// --------------------------------------------------------- pointwise oracle

/// Analytic pointwise application of one primitive operator to a spectral
/// field at a direction. Independent of the engine's coefficient route:
/// L goes through θ, φ derivatives of Y, not the ladder formulas.
pub mod pointwise {
    use super::*;
    use crate::harmonics::{eval_ylm, ylm_theta_derivative};
    use crate::spectral::SpectralTerm;

    /// (L_± Y_lm)(θ, φ) via L_± = e^(±iφ)(±∂_θ + i cot θ ∂_φ).
    fn ladder_value(sign: f64, h: HarmonicIndex, dir: Direction) -> C64 {
        let theta = dir.theta();
        let m = h.m() as f64;
        let y = ylm_theta(h.l(), h.m(), theta.cos()).expect("valid");
        let dy = ylm_theta_derivative(h.l(), h.m(), theta).expect("valid");
        let radial = sign * dy - m * (theta.cos() / theta.sin()) * y;
        C64::from_polar(1.0, (m + sign) * dir.phi()) * radial
    }

    fn l_axis_value(axis: Axis, h: HarmonicIndex, dir: Direction) -> C64 {
        match axis {
            Axis::Z => h.m() as f64 * eval_ylm(h, dir),
            Axis::X => 0.5 * (ladder_value(1.0, h, dir) + ladder_value(-1.0, h, dir)),
            Axis::Y => {
                C64::new(0.0, -0.5) * (ladder_value(1.0, h, dir) - ladder_value(-1.0, h, dir))
            }
        }
    }

    fn accumulate(value: C64, spin: Spin, out: &mut SpinorValue) {
        match spin {
            Spin::Up => out.up += value,
            Spin::Down => out.down += value,
        }
    }

    /// σ_axis ψ(dir), from the evaluated components.
    pub fn sigma_at(axis: Axis, psi: SpinorValue) -> SpinorValue {
        let i = C64::new(0.0, 1.0);
        match axis {
            Axis::X => SpinorValue {
                up: psi.down,
                down: psi.up,
            },
            Axis::Y => SpinorValue {
                up: -i * psi.down,
                down: i * psi.up,
            },
            Axis::Z => SpinorValue {
                up: psi.up,
                down: -psi.down,
            },
        }
    }

    /// n_axis ψ(dir): multiplication by the direction cosine.
    pub fn direction_at(axis: Axis, psi: SpinorValue, dir: Direction) -> SpinorValue {
        let n = dir.unit_vector()[match axis {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }];
        SpinorValue {
            up: n * psi.up,
            down: n * psi.down,
        }
    }

    /// (L_axis ψ)(dir) by analytic differentiation of each term's harmonic.
    pub fn orbital_at(axis: Axis, terms: &[SpectralTerm], dir: Direction) -> SpinorValue {
        let mut out = SpinorValue {
            up: C64::new(0.0, 0.0),
            down: C64::new(0.0, 0.0),
        };
        for t in terms {
            accumulate(
                t.amplitude * l_axis_value(axis, t.harmonic, dir),
                t.spin,
                &mut out,
            );
        }
        out
    }
}

/// Max pointwise residual of engine primitives (σ, n, L per axis) against
/// the analytic route, over `n_points` random directions applied to `field`.
pub fn primitive_pointwise_residual(
    field: &SpectralField,
    n_points: usize,
    rng: &mut impl Rng,
) -> f64 {
    let terms: Vec<_> = field.terms().collect();
    let mut worst = 0.0f64;
    for _ in 0..n_points {
        // interior directions: the analytic L route divides by sin θ
        let dir = loop {
            let d = random_direction(rng);
            if d.theta().sin() > 0.05 {
                break d;
            }
        };
        let psi = field.eval(dir);
        for axis in AXES {
            let pairs = [
                (
                    apply_sigma(axis, field).eval(dir),
                    pointwise::sigma_at(axis, psi),
                ),
                (
                    apply_direction(axis, field).eval(dir),
                    pointwise::direction_at(axis, psi, dir),
                ),
                (
                    apply_orbital(axis, field).eval(dir),
                    pointwise::orbital_at(axis, &terms, dir),
                ),
            ];
            for (engine, analytic) in pairs {
                worst = worst
                    .max((engine.up - analytic.up).norm())
                    .max((engine.down - analytic.down).norm());
            }
        }
    }
    worst
}

/// Pointwise crosscheck of one relation case: both sides evaluated as actual
/// two-component values at random directions (plus the θ=0 pole). This
/// guards against a bug that cancels identically in the spectral
/// representation, because the RHS here goes through `eval_spinor` directly
/// rather than through the product-basis expansion.
pub fn pointwise_crosscheck(
    entry_id: &str,
    variant: &RelationVariant,
    kappa: i32,
    mu: HalfInt,
    jet: &RadialJet,
    n_points: usize,
    rng: &mut impl Rng,
) -> f64 {
    let source = SpinorIndex::new(kappa, mu).expect("valid index");
    let field = SpectralField::from_spinor(source, *jet);
    let lhs = variant
        .lhs
        .apply(&field)
        .unwrap_or_else(|e| panic!("engine error on {entry_id}: {e}"));

    let mut dirs = vec![Direction::new(0.0, 0.0).expect("pole is valid")];
    dirs.extend((0..n_points).map(|_| random_direction(rng)));

    let mut worst = 0.0f64;
    for dir in dirs {
        let lhs_value = lhs.eval(dir);
        let mut rhs_value = SpinorValue {
            up: C64::new(0.0, 0.0),
            down: C64::new(0.0, 0.0),
        };
        for term in &variant.terms {
            let coeff = term.coefficient.eval(kappa, mu);
            if coeff.norm() == 0.0 {
                continue;
            }
            let (kt, mt) = term.target(kappa, mu);
            let target = SpinorIndex::new(kt, mt).expect("nonzero coefficient implies validity");
            let radial = term.radial.eval(jet, kappa);
            let omega = eval_spinor(target, dir);
            rhs_value.up += coeff * radial * omega.up;
            rhs_value.down += coeff * radial * omega.down;
        }
        worst = worst
            .max((lhs_value.up - rhs_value.up).norm())
            .max((lhs_value.down - rhs_value.down).norm());
    }
    worst
}

// ------------------------------------------------------- operator identities

/// A random canonical field: a handful of product-basis terms with complex
/// amplitudes and independent depth-2 jets.
pub fn random_field(l_max: u32, r: f64, rng: &mut impl Rng) -> SpectralField {
    let mut field = SpectralField::zero(r);
    let n_terms = rng.gen_range(2..=5);
    for _ in 0..n_terms {
        let l = rng.gen_range(0..=l_max);
        let m = rng.gen_range(-(l as i32)..=(l as i32));
        let spin = if rng.gen() { Spin::Up } else { Spin::Down };
        let amplitude = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let jet = RadialJet::new(
            r,
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
        .expect("r > 0");
        field.add_term(
            spin,
            HarmonicIndex::new(l, m).expect("|m| <= l"),
            amplitude,
            jet,
        );
    }
    field
}

/// Residuals of the pure operator identities on one field:
///
/// ```text
/// L×L = iL,  σ×σ = 2iσ,  J×J = iJ          (componentwise)
/// n·L = L·n = 0,  ∇·L = L·∇ = 0
/// n·(L×n) = (n×L)·n = 2i
/// ```
///
/// These are properties of the operators alone, so they hold on arbitrary
/// fields, not just spinor images.
pub fn operator_identity_residual(field: &SpectralField) -> f64 {
    let atom = VectorExpr::atom;
    let cross = VectorExpr::cross;
    let dot = OperatorExpr::dot;
    let i = C64::new(0.0, 1.0);
    let mut worst = 0.0f64;

    // cross-product self-identities, componentwise
    for (op, scale) in [
        (VectorOp::Orbital, i),
        (VectorOp::Sigma, 2.0 * i),
        (VectorOp::Total, i),
    ] {
        let lhs = VectorField::from_expr(&cross(atom(op), atom(op)), field)
            .expect("no gradient involved");
        for axis in AXES {
            let rhs = atom(op)
                .apply_component(axis, field)
                .expect("no gradient involved")
                .scaled(scale);
            worst = worst.max(lhs.component(axis).max_difference(&rhs));
        }
    }

    // vanishing scalar contractions
    let zero = SpectralField::zero(field.r());
    for expr in [
        dot(atom(VectorOp::Direction), atom(VectorOp::Orbital)),
        dot(atom(VectorOp::Orbital), atom(VectorOp::Direction)),
        dot(atom(VectorOp::Nabla), atom(VectorOp::Orbital)),
        dot(atom(VectorOp::Orbital), atom(VectorOp::Nabla)),
    ] {
        let out = expr.apply(field).expect("depth-2 jets suffice");
        worst = worst.max(out.max_difference(&zero));
    }

    // scalar triple products n·(L×n) and (n×L)·n equal 2i
    let expected = field.scaled(2.0 * i);
    for expr in [
        dot(
            atom(VectorOp::Direction),
            cross(atom(VectorOp::Orbital), atom(VectorOp::Direction)),
        ),
        dot(
            cross(atom(VectorOp::Direction), atom(VectorOp::Orbital)),
            atom(VectorOp::Direction),
        ),
    ] {
        let out = expr.apply(field).expect("no gradient involved");
        worst = worst.max(out.max_difference(&expected));
    }

    worst
}

/// Max relative deviation of the engine gradient from central finite
/// differences of the pointwise field, over `n_points` random evaluation
/// points (random spinor, profile, radius, direction).
pub fn gradient_fd_residual(n_points: usize, rng: &mut impl Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..n_points {
        let kappa_abs = rng.gen_range(1..=4);
        let kappa = if rng.gen() { kappa_abs } else { -kappa_abs };
        let mus = mu_range(kappa).expect("nonzero");
        let mu = mus[rng.gen_range(0..mus.len())];
        let idx = SpinorIndex::new(kappa, mu).expect("valid");
        let l = idx.l();
        let profile = RadialProfile::all()[rng.gen_range(0..3)];
        let r = rng.gen_range(0.6..2.5);
        // interior directions: the θ, φ reconstruction at the poles is noisy
        let dir = loop {
            let d = random_direction(rng);
            if d.theta().sin() > 0.1 {
                break d;
            }
        };

        let field = SpectralField::from_spinor(idx, profile.jet(r, l));
        let [nx, ny, nz] = dir.unit_vector();
        let point = [r * nx, r * ny, r * nz];
        let h = 1e-5 * r;

        let psi_at = |p: [f64; 3]| -> SpinorValue {
            let rr = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            let d = Direction::new((p[2] / rr).clamp(-1.0, 1.0).acos(), p[1].atan2(p[0]))
                .expect("acos lands in range");
            let omega = eval_spinor(idx, d);
            let f = profile.value(rr, l);
            SpinorValue {
                up: f * omega.up,
                down: f * omega.down,
            }
        };

        for (axis_i, axis) in AXES.into_iter().enumerate() {
            let engine = apply_nabla(axis, &field)
                .expect("fresh depth-2 jets")
                .eval(dir);
            let mut fwd = point;
            fwd[axis_i] += h;
            let mut bwd = point;
            bwd[axis_i] -= h;
            let (plus, minus) = (psi_at(fwd), psi_at(bwd));
            let fd_up = (plus.up - minus.up) / (2.0 * h);
            let fd_down = (plus.down - minus.down) / (2.0 * h);
            let scale = engine.up.norm().max(engine.down.norm()).max(1.0);
            worst = worst
                .max((engine.up - fd_up).norm() / scale)
                .max((engine.down - fd_down).norm() / scale);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{catalog, find_entry};

    fn half(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn sweep_small_subset_passes() {
        let entries = catalog();
        let config = SweepConfig {
            kappa_max: 2,
            ..SweepConfig::default()
        };
        for id in ["3.1.3", "3.2.5", "3.2.8", "3.3.1", "3.3.5", "3.3.8"] {
            let entry = find_entry(&entries, id).unwrap();
            let results = verify_entry(entry, &config);
            assert!(!results.is_empty());
            for r in &results {
                assert_eq!(r.status, CaseStatus::Verified, "{id} {r:?}");
                assert!(
                    r.pass,
                    "{id}: residual {} at kappa={} mu={}",
                    r.residual, r.kappa, r.mu
                );
            }
        }
    }

    #[test]
    fn smallest_sweep_still_exercises_every_relation() {
        // κ ∈ {±1} reaches all 91 ids, and the result order is deterministic
        let entries = catalog();
        let config = SweepConfig {
            kappa_max: 1,
            ..SweepConfig::default()
        };
        let results = verify_all(&entries, &config);
        let mut ids: Vec<&str> = results.iter().map(|r| r.relation_id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 91);
        assert!(results.iter().all(|r| r.pass));

        let again = verify_all(&entries, &config);
        assert_eq!(results.len(), again.len());
        for (a, b) in results.iter().zip(&again) {
            assert_eq!(
                (a.relation_id.as_str(), a.variant, a.kappa, a.mu, a.profile),
                (b.relation_id.as_str(), b.variant, b.kappa, b.mu, b.profile),
                "parallel execution must not reorder results"
            );
        }
    }

    #[test]
    fn impossible_tolerance_reports_failures() {
        // the rounding floor is real: demanding exactness must fail somewhere
        let entries = catalog();
        let config = SweepConfig {
            kappa_max: 1,
            tolerance: 0.0,
            ..SweepConfig::default()
        };
        let results = verify_all(&entries, &config);
        assert!(results.iter().any(|r| !r.pass));
    }

    #[test]
    fn first_kind_results_are_jet_independent() {
        let entries = catalog();
        let entry = find_entry(&entries, "3.2.1").unwrap();
        let jets = [
            RadialJet::new(1.3, 0.7, 0.3, -0.1).unwrap(),
            RadialJet::new(1.3, 0.7, 9.0, 5.0).unwrap(),
        ];
        for variant in &entry.variants {
            for kappa in [1, -1, 2, -2, 3, -3] {
                for mu in mu_range(kappa).unwrap() {
                    let residuals: Vec<f64> = jets
                        .iter()
                        .map(|jet| {
                            verify_relation(entry.id, variant, kappa, mu, jet, "x", 1e-10).residual
                        })
                        .collect();
                    assert_eq!(
                        residuals[0].to_bits(),
                        residuals[1].to_bits(),
                        "angular relation read radial derivatives at kappa={kappa} mu={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn eigenrelation_fixed_cases() {
        let entries = catalog();
        let jet = RadialJet::unit(1.0);

        let e = find_entry(&entries, "3.1.3").unwrap();
        let r = verify_relation(e.id, &e.variants[0], 1, half(1), &jet, "unit", 1e-12);
        assert!(r.pass, "residual {}", r.residual);

        let e = find_entry(&entries, "3.2.5").unwrap();
        let r = verify_relation(e.id, &e.variants[0], 2, half(-3), &jet, "unit", 1e-12);
        assert!(r.pass, "residual {}", r.residual);

        let e = find_entry(&entries, "3.3.8").unwrap();
        let jet = RadialProfile::RSquaredExp.jet(1.0, kappa_to_l(-2).unwrap());
        let r = verify_relation(e.id, &e.variants[0], -2, half(1), &jet, "r2exp", 1e-10);
        assert!(r.pass, "residual {}", r.residual);
    }

    #[test]
    fn orthonormality_small() {
        // single normalized spinor
        let dev = orthonormality_check(1);
        assert!(dev < 1e-13, "deviation {dev:e}");
        let dev = orthonormality_check(6);
        assert!(dev < 1e-12, "deviation {dev:e}");
    }

    #[test]
    fn identities_on_random_fields() {
        let mut rng = seeded_rng();
        for _ in 0..20 {
            let field = random_field(4, rng.gen_range(0.5..2.0), &mut rng);
            let residual = operator_identity_residual(&field);
            assert!(residual < 1e-11, "identity residual {residual:e}");
        }
    }

    #[test]
    fn primitives_match_analytic_pointwise() {
        let mut rng = seeded_rng();
        for _ in 0..5 {
            let field = random_field(5, 1.0, &mut rng);
            let residual = primitive_pointwise_residual(&field, 20, &mut rng);
            assert!(residual < 1e-9, "pointwise residual {residual:e}");
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut rng = seeded_rng();
        let residual = gradient_fd_residual(50, &mut rng);
        assert!(residual < 1e-6, "gradient residual {residual:e}");
    }

    #[test]
    fn pointwise_crosscheck_spans_all_kinds() {
        let entries = catalog();
        let mut rng = seeded_rng();
        let unit = RadialJet::unit(1.0);
        let gradient_jet = RadialProfile::RSquaredExp.jet(1.3, kappa_to_l(2).unwrap());
        let cases = [
            ("3.1.1", 1, half(1), unit),
            ("3.1.4", -1, half(1), unit),
            ("3.2.1", 2, half(-1), unit),
            ("3.3.5", 2, half(3), gradient_jet),
        ];
        for (id, kappa, mu, jet) in cases {
            let entry = find_entry(&entries, id).unwrap();
            for variant in &entry.variants {
                let worst = pointwise_crosscheck(entry.id, variant, kappa, mu, &jet, 100, &mut rng);
                assert!(worst < 1e-10, "{id}: pointwise residual {worst:e}");
            }
        }
    }

    #[test]
    fn profile_jets_match_finite_differences() {
        let h = 1e-6;
        for profile in RadialProfile::all() {
            for l in [0u32, 1, 3] {
                for r in [0.5, 1.0, 2.0] {
                    let jet = profile.jet(r, l);
                    let fd1 = (profile.value(r + h, l) - profile.value(r - h, l)) / (2.0 * h);
                    let fd2 = (profile.value(r + h, l) - 2.0 * profile.value(r, l)
                        + profile.value(r - h, l))
                        / (h * h);
                    assert!((jet.f1 - fd1).abs() < 1e-8 * fd1.abs().max(1.0));
                    assert!((jet.f2 - fd2).abs() < 1e-3 * fd2.abs().max(1.0));
                }
            }
        }
    }
}
