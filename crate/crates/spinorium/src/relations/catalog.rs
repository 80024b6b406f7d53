//! The 91-entry relation catalog, hand-transcribed once.
//!
//! Helpers keep each entry visually close to the printed table row it came
//! from: `pre(..)` are polynomial prefactors, `rad(..)` the radical, and
//! `over(..)` the integer divisor. Sign-paired rows are built by one closure
//! over the variant sign s = ±1.
//!
//! Nothing here is trusted: the verification sweep plays every term against
//! the independently tested spectral engine.

use crate::spectral::{OperatorExpr, VectorExpr, VectorOp};

use super::{
    CoeffForm, Divisor, ExpansionTerm, KappaMap, LinForm, RadialOp, RelationEntry, RelationKind,
    RelationVariant, VariantTag,
};

// ---------------------------------------------------------------- operators

fn n() -> VectorExpr {
    VectorExpr::atom(VectorOp::Direction)
}
fn e0() -> VectorExpr {
    VectorExpr::atom(VectorOp::E0)
}
fn e_pm(s: i64) -> VectorExpr {
    VectorExpr::atom(if s > 0 {
        VectorOp::EPlus
    } else {
        VectorOp::EMinus
    })
}
fn sig() -> VectorExpr {
    VectorExpr::atom(VectorOp::Sigma)
}
fn l_op() -> VectorExpr {
    VectorExpr::atom(VectorOp::Orbital)
}
fn j_op() -> VectorExpr {
    VectorExpr::atom(VectorOp::Total)
}
fn nab() -> VectorExpr {
    VectorExpr::atom(VectorOp::Nabla)
}
fn x(a: VectorExpr, b: VectorExpr) -> VectorExpr {
    VectorExpr::cross(a, b)
}
fn dot(a: VectorExpr, b: VectorExpr) -> OperatorExpr {
    OperatorExpr::dot(a, b)
}

// ------------------------------------------------------------- linear forms

const fn lf(c0: i64, ck: i64, cm: i64) -> LinForm {
    LinForm { c0, ck, cm }
}
/// κ + n
const fn k_plus(n: i64) -> LinForm {
    lf(2 * n, 1, 0)
}
/// κ + n/2
const fn k_half(n: i64) -> LinForm {
    lf(n, 1, 0)
}
/// 2κ + n
const fn two_k_plus(n: i64) -> LinForm {
    lf(2 * n, 2, 0)
}
/// 2μ
const fn two_mu() -> LinForm {
    lf(0, 0, 2)
}
/// μ
const fn mu() -> LinForm {
    lf(0, 0, 1)
}
/// the integer constant v
const fn cint(v: i64) -> LinForm {
    lf(2 * v, 0, 0)
}
/// the constant 1/2
const fn half() -> LinForm {
    lf(1, 0, 0)
}

// ---------------------------------------------------------------- radicands

/// (κ + 1/2)² − μ²
const fn rad1() -> (LinForm, LinForm) {
    (lf(1, 1, -1), lf(1, 1, 1))
}
/// (κ − 1/2)² − μ²
const fn rad2() -> (LinForm, LinForm) {
    (lf(-1, 1, -1), lf(-1, 1, 1))
}
/// κ² − (μ ± 1/2)²
const fn rad3(s: i64) -> (LinForm, LinForm) {
    (lf(-s, 1, -1), lf(s, 1, 1))
}
/// (κ ± μ + 1/2)(κ ± μ + 3/2)
const fn rad4(s: i64) -> (LinForm, LinForm) {
    (lf(1, 1, s), lf(3, 1, s))
}
/// (κ ∓ μ − 1/2)(κ ∓ μ − 3/2)
const fn rad5(s: i64) -> (LinForm, LinForm) {
    (lf(-1, 1, -s), lf(-3, 1, -s))
}

// --------------------------------------------------------------- divisors

use Divisor::{
    AbsTwoKappaMinus1 as D2M1A, AbsTwoKappaPlus1 as D2P1A, FourKappaSqMinus1 as D4K,
    TwoKappaMinus1 as D2M1, TwoKappaPlus1 as D2P1,
};

// ------------------------------------------------------ coefficient builder

#[derive(Clone)]
struct C(CoeffForm);

/// Start a coefficient form equal to +1.
fn c() -> C {
    C(CoeffForm {
        sign: 1,
        imaginary: false,
        sgn_kappa: false,
        sqrt2_pow: 0,
        prefactors: Vec::new(),
        radicand: None,
        divisor: Divisor::One,
    })
}

impl C {
    fn neg(mut self) -> Self {
        self.0.sign = -self.0.sign;
        self
    }
    /// Multiply the sign by the variant sign s (for leading ± factors).
    fn sig(mut self, s: i64) -> Self {
        if s < 0 {
            self.0.sign = -self.0.sign;
        }
        self
    }
    fn i(mut self) -> Self {
        self.0.imaginary = true;
        self
    }
    fn sgn_k(mut self) -> Self {
        self.0.sgn_kappa = true;
        self
    }
    fn sqrt2(mut self, pow: i8) -> Self {
        self.0.sqrt2_pow += pow;
        self
    }
    fn pre(mut self, f: LinForm) -> Self {
        self.0.prefactors.push(f);
        self
    }
    fn rad(mut self, r: (LinForm, LinForm)) -> Self {
        self.0.radicand = Some(r);
        self
    }
    fn over(mut self, d: Divisor) -> Self {
        self.0.divisor = d;
        self
    }
}

// ------------------------------------------------------------ radial pieces

/// dF/dr
const fn d_r() -> RadialOp {
    RadialOp::FirstOrder {
        dr_scale: 1,
        c0: 0,
        c1: 0,
        c2: 0,
        den: 1,
    }
}
/// (∂/∂r + (κ+1)/r)
const fn p_op() -> RadialOp {
    RadialOp::FirstOrder {
        dr_scale: 1,
        c0: 1,
        c1: 1,
        c2: 0,
        den: 1,
    }
}
/// (∂/∂r − κ/r)
const fn m_op() -> RadialOp {
    RadialOp::FirstOrder {
        dr_scale: 1,
        c0: 0,
        c1: -1,
        c2: 0,
        den: 1,
    }
}
/// (a·∂/∂r + (c0 + c1 κ + c2 κ²)/(den·r))
const fn dr2(c0: i64, c1: i64, c2: i64, den: i64) -> RadialOp {
    RadialOp::FirstOrder {
        dr_scale: 2,
        c0,
        c1,
        c2,
        den,
    }
}

// ----------------------------------------------------------------- terms

fn term(kappa_map: KappaMap, mu_shift: i64, coeff: C, radial: RadialOp) -> ExpansionTerm {
    ExpansionTerm {
        kappa_map,
        mu_shift: mu_shift as i8,
        coefficient: coeff.0,
        radial,
    }
}

/// Algebraic/angular term: plain multiplication by F.
fn aterm(kappa_map: KappaMap, mu_shift: i64, coeff: C) -> ExpansionTerm {
    term(kappa_map, mu_shift, coeff, RadialOp::Multiply)
}

use KappaMap::{Minus1, Negated as Neg, NegatedMinus1 as NegM1, Plus1, Same};

fn single(
    id: &'static str,
    kind: RelationKind,
    lhs: OperatorExpr,
    terms: Vec<ExpansionTerm>,
) -> RelationEntry {
    RelationEntry {
        id,
        kind,
        variants: vec![RelationVariant {
            tag: VariantTag::None,
            lhs,
            terms,
        }],
    }
}

/// A ±-paired table row: the closure receives s = +1 then s = −1.
fn pm(
    id: &'static str,
    kind: RelationKind,
    build: impl Fn(i64) -> (OperatorExpr, Vec<ExpansionTerm>),
) -> RelationEntry {
    let variants = [(1, VariantTag::Plus), (-1, VariantTag::Minus)]
        .into_iter()
        .map(|(s, tag)| {
            let (lhs, terms) = build(s);
            RelationVariant { tag, lhs, terms }
        })
        .collect();
    RelationEntry { id, kind, variants }
}

// ------------------------------------------------------------- the catalog

pub(super) fn build() -> Vec<RelationEntry> {
    let mut entries = Vec::with_capacity(91);
    entries.extend(algebraic());
    entries.extend(first_kind());
    entries.extend(second_kind());
    entries
}

fn algebraic() -> Vec<RelationEntry> {
    use RelationKind::Algebraic as A;
    vec![
        single(
            "3.1.1",
            A,
            dot(e0(), n()),
            vec![
                aterm(Neg, 0, c().neg().pre(two_mu()).over(D4K)),
                aterm(Plus1, 0, c().rad(rad1()).over(D2P1A)),
                aterm(Minus1, 0, c().rad(rad2()).over(D2M1A)),
            ],
        ),
        pm("3.1.2", A, |s| {
            (
                dot(e_pm(s), n()),
                vec![
                    aterm(Neg, s, c().sig(s).sqrt2(1).rad(rad3(s)).over(D4K)),
                    aterm(Plus1, s, c().sqrt2(-1).rad(rad4(s)).over(D2P1)),
                    aterm(Minus1, s, c().neg().sqrt2(-1).rad(rad5(s)).over(D2M1)),
                ],
            )
        }),
        single("3.1.3", A, dot(n(), sig()), vec![aterm(Neg, 0, c().neg())]),
        single(
            "3.1.4",
            A,
            dot(e0(), sig()),
            vec![
                aterm(Same, 0, c().neg().pre(two_mu()).over(D2P1)),
                aterm(NegM1, 0, c().neg().pre(cint(2)).rad(rad1()).over(D2P1A)),
            ],
        ),
        pm("3.1.5", A, |s| {
            (
                dot(e_pm(s), sig()),
                vec![
                    aterm(Same, s, c().sig(s).sqrt2(1).rad(rad3(s)).over(D2P1)),
                    aterm(NegM1, s, c().neg().sqrt2(1).rad(rad4(s)).over(D2P1)),
                ],
            )
        }),
        single(
            "3.1.6",
            A,
            dot(e0(), x(n(), sig())),
            vec![
                aterm(Neg, 0, c().i().pre(two_mu()).pre(two_k_plus(0)).over(D4K)),
                aterm(Plus1, 0, c().i().rad(rad1()).over(D2P1A)),
                aterm(Minus1, 0, c().neg().i().rad(rad2()).over(D2M1A)),
            ],
        ),
        pm("3.1.7", A, |s| {
            (
                dot(e_pm(s), x(n(), sig())),
                vec![
                    aterm(
                        Neg,
                        s,
                        c().sig(-s)
                            .i()
                            .pre(cint(2))
                            .pre(k_plus(0))
                            .sqrt2(1)
                            .rad(rad3(s))
                            .over(D4K),
                    ),
                    aterm(Plus1, s, c().i().sqrt2(-1).rad(rad4(s)).over(D2P1)),
                    aterm(Minus1, s, c().i().sqrt2(-1).rad(rad5(s)).over(D2M1)),
                ],
            )
        }),
    ]
}

fn first_kind() -> Vec<RelationEntry> {
    use RelationKind::FirstKind as F;
    vec![
        single(
            "3.2.1",
            F,
            dot(e0(), l_op()),
            vec![
                aterm(Same, 0, c().pre(two_mu()).pre(k_plus(1)).over(D2P1)),
                aterm(NegM1, 0, c().rad(rad1()).over(D2P1A)),
            ],
        ),
        pm("3.2.2", F, |s| {
            (
                dot(e_pm(s), l_op()),
                vec![
                    aterm(
                        Same,
                        s,
                        c().sig(-s).sqrt2(1).pre(k_plus(1)).rad(rad3(s)).over(D2P1),
                    ),
                    aterm(NegM1, s, c().sqrt2(-1).rad(rad4(s)).over(D2P1)),
                ],
            )
        }),
        single(
            "3.2.3",
            F,
            dot(sig(), l_op()),
            vec![aterm(Same, 0, c().neg().pre(k_plus(1)))],
        ),
        single(
            "3.2.4",
            F,
            dot(n(), j_op()),
            vec![aterm(Neg, 0, c().neg().pre(half()))],
        ),
        single(
            "3.2.5",
            F,
            dot(e0(), j_op()),
            vec![aterm(Same, 0, c().pre(mu()))],
        ),
        pm("3.2.6", F, |s| {
            (
                dot(e_pm(s), j_op()),
                vec![aterm(Same, s, c().sig(-s).sqrt2(-1).rad(rad3(s)))],
            )
        }),
        single(
            "3.2.7",
            F,
            dot(sig(), j_op()),
            vec![aterm(Same, 0, c().neg().pre(k_half(-1)))],
        ),
        single(
            "3.2.8",
            F,
            dot(l_op(), l_op()),
            vec![aterm(Same, 0, c().pre(k_plus(0)).pre(k_plus(1)))],
        ),
        single(
            "3.2.9",
            F,
            dot(j_op(), j_op()),
            vec![aterm(Same, 0, c().pre(k_half(-1)).pre(k_half(1)))],
        ),
        single(
            "3.2.10",
            F,
            dot(l_op(), j_op()),
            vec![aterm(Same, 0, c().pre(k_half(-1)).pre(k_plus(1)))],
        ),
        single(
            "3.2.11",
            F,
            dot(e0(), x(n(), l_op())),
            vec![
                aterm(Neg, 0, c().neg().i().pre(two_mu()).pre(k_plus(1)).over(D4K)),
                aterm(
                    Plus1,
                    0,
                    c().neg().i().pre(k_plus(0)).rad(rad1()).over(D2P1A),
                ),
                aterm(Minus1, 0, c().i().pre(k_plus(1)).rad(rad2()).over(D2M1A)),
            ],
        ),
        pm("3.2.12", F, |s| {
            (
                dot(e_pm(s), x(n(), l_op())),
                vec![
                    aterm(
                        Neg,
                        s,
                        c().sig(s)
                            .i()
                            .sqrt2(1)
                            .pre(k_plus(1))
                            .rad(rad3(s))
                            .over(D4K),
                    ),
                    aterm(
                        Plus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_plus(0))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                    ),
                    aterm(
                        Minus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_plus(1))
                            .sqrt2(-1)
                            .rad(rad5(s))
                            .over(D2M1),
                    ),
                ],
            )
        }),
        single(
            "3.2.13",
            F,
            dot(e0(), x(l_op(), n())),
            vec![
                aterm(Neg, 0, c().i().pre(two_mu()).pre(k_plus(-1)).over(D4K)),
                aterm(Plus1, 0, c().i().pre(k_plus(2)).rad(rad1()).over(D2P1A)),
                aterm(
                    Minus1,
                    0,
                    c().neg().i().pre(k_plus(-1)).rad(rad2()).over(D2M1A),
                ),
            ],
        ),
        pm("3.2.14", F, |s| {
            (
                dot(e_pm(s), x(l_op(), n())),
                vec![
                    aterm(
                        Neg,
                        s,
                        c().sig(-s)
                            .i()
                            .sqrt2(1)
                            .pre(k_plus(-1))
                            .rad(rad3(s))
                            .over(D4K),
                    ),
                    aterm(
                        Plus1,
                        s,
                        c().i().pre(k_plus(2)).sqrt2(-1).rad(rad4(s)).over(D2P1),
                    ),
                    aterm(
                        Minus1,
                        s,
                        c().i().pre(k_plus(-1)).sqrt2(-1).rad(rad5(s)).over(D2M1),
                    ),
                ],
            )
        }),
        single(
            "3.2.15",
            F,
            dot(n(), x(sig(), l_op())),
            vec![aterm(Neg, 0, c().i().pre(k_plus(1)))],
        ),
        single(
            "3.2.16",
            F,
            dot(e0(), x(sig(), l_op())),
            vec![aterm(NegM1, 0, c().i().sgn_k().rad(rad1()))],
        ),
        pm("3.2.17", F, |s| {
            (
                dot(e_pm(s), x(sig(), l_op())),
                vec![aterm(NegM1, s, c().i().sqrt2(-1).rad(rad4(s)))],
            )
        }),
        single(
            "3.2.18",
            F,
            dot(x(sig(), l_op()), n()),
            vec![aterm(Neg, 0, c().i().pre(k_plus(-1)))],
        ),
        single(
            "3.2.19",
            F,
            dot(e0(), x(n(), j_op())),
            vec![
                aterm(Neg, 0, c().neg().i().pre(two_mu()).over(D4K)),
                aterm(
                    Plus1,
                    0,
                    c().neg().i().pre(k_half(-1)).rad(rad1()).over(D2P1A),
                ),
                aterm(Minus1, 0, c().i().pre(k_half(1)).rad(rad2()).over(D2M1A)),
            ],
        ),
        pm("3.2.20", F, |s| {
            (
                dot(e_pm(s), x(n(), j_op())),
                vec![
                    aterm(Neg, s, c().sig(s).i().sqrt2(1).rad(rad3(s)).over(D4K)),
                    aterm(
                        Plus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_half(-1))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                    ),
                    aterm(
                        Minus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_half(1))
                            .sqrt2(-1)
                            .rad(rad5(s))
                            .over(D2M1),
                    ),
                ],
            )
        }),
        single(
            "3.2.21",
            F,
            dot(e0(), x(j_op(), n())),
            vec![
                aterm(Neg, 0, c().neg().i().pre(two_mu()).over(D4K)),
                aterm(Plus1, 0, c().i().pre(k_half(3)).rad(rad1()).over(D2P1A)),
                aterm(
                    Minus1,
                    0,
                    c().neg().i().pre(k_half(-3)).rad(rad2()).over(D2M1A),
                ),
            ],
        ),
        pm("3.2.22", F, |s| {
            (
                dot(e_pm(s), x(j_op(), n())),
                vec![
                    aterm(Neg, s, c().sig(s).i().sqrt2(1).rad(rad3(s)).over(D4K)),
                    aterm(
                        Plus1,
                        s,
                        c().i().pre(k_half(3)).sqrt2(-1).rad(rad4(s)).over(D2P1),
                    ),
                    aterm(
                        Minus1,
                        s,
                        c().i().pre(k_half(-3)).sqrt2(-1).rad(rad5(s)).over(D2M1),
                    ),
                ],
            )
        }),
        single(
            "3.2.23",
            F,
            dot(n(), x(sig(), j_op())),
            vec![aterm(Neg, 0, c().i().pre(k_plus(0)))],
        ),
        single(
            "3.2.24",
            F,
            dot(e0(), x(sig(), j_op())),
            vec![
                aterm(Same, 0, c().neg().i().pre(two_mu()).over(D2P1)),
                aterm(
                    NegM1,
                    0,
                    c().i().pre(two_k_plus(-1)).rad(rad1()).over(D2P1A),
                ),
            ],
        ),
        pm("3.2.25", F, |s| {
            (
                dot(e_pm(s), x(sig(), j_op())),
                vec![
                    aterm(Same, s, c().sig(s).i().sqrt2(1).rad(rad3(s)).over(D2P1)),
                    aterm(
                        NegM1,
                        s,
                        c().i()
                            .pre(two_k_plus(-1))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                    ),
                ],
            )
        }),
        single(
            "3.2.26",
            F,
            dot(x(sig(), j_op()), n()),
            vec![aterm(Neg, 0, c().i().pre(k_plus(-2)))],
        ),
        single(
            "3.2.27",
            F,
            dot(n(), x(j_op(), sig())),
            vec![aterm(Neg, 0, c().neg().i().pre(k_plus(2)))],
        ),
        single(
            "3.2.28",
            F,
            dot(e0(), x(j_op(), sig())),
            vec![
                aterm(Same, 0, c().neg().i().pre(two_mu()).over(D2P1)),
                aterm(
                    NegM1,
                    0,
                    c().neg().i().pre(two_k_plus(3)).rad(rad1()).over(D2P1A),
                ),
            ],
        ),
        pm("3.2.29", F, |s| {
            (
                dot(e_pm(s), x(j_op(), sig())),
                vec![
                    aterm(Same, s, c().sig(s).i().sqrt2(1).rad(rad3(s)).over(D2P1)),
                    aterm(
                        NegM1,
                        s,
                        c().neg()
                            .i()
                            .pre(two_k_plus(3))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                    ),
                ],
            )
        }),
        single(
            "3.2.30",
            F,
            dot(x(j_op(), sig()), n()),
            vec![aterm(Neg, 0, c().neg().i().pre(k_plus(0)))],
        ),
        single(
            "3.2.31",
            F,
            dot(n(), x(l_op(), j_op())),
            vec![aterm(Neg, 0, c().neg().i().pre(half()).pre(k_plus(1)))],
        ),
        single(
            "3.2.32",
            F,
            dot(e0(), x(l_op(), j_op())),
            vec![
                aterm(Same, 0, c().i().pre(two_mu()).pre(k_plus(1)).over(D2P1)),
                aterm(
                    NegM1,
                    0,
                    c().neg().i().pre(k_half(-1)).rad(rad1()).over(D2P1A),
                ),
            ],
        ),
        pm("3.2.33", F, |s| {
            (
                dot(e_pm(s), x(l_op(), j_op())),
                vec![
                    aterm(
                        Same,
                        s,
                        c().sig(-s)
                            .i()
                            .sqrt2(1)
                            .pre(k_plus(1))
                            .rad(rad3(s))
                            .over(D2P1),
                    ),
                    aterm(
                        NegM1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_half(-1))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                    ),
                ],
            )
        }),
        single(
            "3.2.34",
            F,
            dot(x(l_op(), j_op()), n()),
            vec![aterm(Neg, 0, c().neg().i().pre(half()).pre(k_plus(-1)))],
        ),
        single(
            "3.2.35",
            F,
            dot(x(l_op(), j_op()), sig()),
            vec![aterm(Same, 0, c().neg().i().pre(cint(2)).pre(k_plus(1)))],
        ),
        single(
            "3.2.36",
            F,
            dot(n(), x(j_op(), l_op())),
            vec![aterm(Neg, 0, c().i().pre(half()).pre(k_plus(1)))],
        ),
        single(
            "3.2.37",
            F,
            dot(e0(), x(j_op(), l_op())),
            vec![
                aterm(Same, 0, c().i().pre(two_mu()).pre(k_plus(1)).over(D2P1)),
                aterm(NegM1, 0, c().i().pre(k_half(3)).rad(rad1()).over(D2P1A)),
            ],
        ),
        pm("3.2.38", F, |s| {
            (
                dot(e_pm(s), x(j_op(), l_op())),
                vec![
                    aterm(
                        Same,
                        s,
                        c().sig(-s)
                            .i()
                            .sqrt2(1)
                            .pre(k_plus(1))
                            .rad(rad3(s))
                            .over(D2P1),
                    ),
                    aterm(
                        NegM1,
                        s,
                        c().i().pre(k_half(3)).sqrt2(-1).rad(rad4(s)).over(D2P1),
                    ),
                ],
            )
        }),
        single(
            "3.2.39",
            F,
            dot(sig(), x(j_op(), l_op())),
            vec![aterm(Same, 0, c().neg().i().pre(cint(2)).pre(k_plus(1)))],
        ),
        single(
            "3.2.40",
            F,
            dot(x(j_op(), l_op()), n()),
            vec![aterm(Neg, 0, c().i().pre(half()).pre(k_plus(-1)))],
        ),
        single(
            "3.2.41",
            F,
            dot(l_op(), x(n(), j_op())),
            vec![aterm(Neg, 0, c().i().pre(half()).pre(k_plus(-1)))],
        ),
        single(
            "3.2.42",
            F,
            dot(j_op(), x(n(), l_op())),
            vec![aterm(Neg, 0, c().neg().i().pre(half()).pre(k_plus(1)))],
        ),
        single(
            "3.2.43",
            F,
            dot(sig(), x(j_op(), sig())),
            vec![aterm(Same, 0, c().i().pre(two_k_plus(5)))],
        ),
        single(
            "3.2.44",
            F,
            dot(j_op(), x(n(), j_op())),
            vec![aterm(Neg, 0, c().neg().i().pre(half()))],
        ),
        single(
            "3.2.45",
            F,
            dot(j_op(), x(sig(), j_op())),
            vec![aterm(Same, 0, c().neg().i().pre(k_half(-1)))],
        ),
        single(
            "3.2.46",
            F,
            dot(j_op(), x(l_op(), j_op())),
            vec![aterm(Same, 0, c().i().pre(k_half(-1)).pre(k_plus(1)))],
        ),
        single(
            "3.2.47",
            F,
            dot(x(l_op(), j_op()), l_op()),
            vec![aterm(Same, 0, c().i().pre(k_half(1)).pre(k_plus(1)))],
        ),
    ]
}

fn second_kind() -> Vec<RelationEntry> {
    use RelationKind::SecondKind as S;
    vec![
        single("3.3.1", S, dot(n(), nab()), vec![term(Same, 0, c(), d_r())]),
        single(
            "3.3.2",
            S,
            dot(nab(), n()),
            vec![term(
                Same,
                0,
                c(),
                RadialOp::FirstOrder {
                    dr_scale: 1,
                    c0: 2,
                    c1: 0,
                    c2: 0,
                    den: 1,
                },
            )],
        ),
        single(
            "3.3.3",
            S,
            dot(e0(), nab()),
            vec![
                term(Neg, 0, c().neg().pre(two_mu()).over(D4K), p_op()),
                term(Plus1, 0, c().rad(rad1()).over(D2P1A), m_op()),
                term(Minus1, 0, c().rad(rad2()).over(D2M1A), p_op()),
            ],
        ),
        pm("3.3.4", S, |s| {
            (
                dot(e_pm(s), nab()),
                vec![
                    term(Neg, s, c().sig(s).sqrt2(1).rad(rad3(s)).over(D4K), p_op()),
                    term(Plus1, s, c().sqrt2(-1).rad(rad4(s)).over(D2P1), m_op()),
                    term(
                        Minus1,
                        s,
                        c().neg().sqrt2(-1).rad(rad5(s)).over(D2M1),
                        p_op(),
                    ),
                ],
            )
        }),
        single(
            "3.3.5",
            S,
            dot(sig(), nab()),
            vec![term(Neg, 0, c().neg(), p_op())],
        ),
        single(
            "3.3.6",
            S,
            dot(j_op(), nab()),
            vec![term(Neg, 0, c().neg().pre(half()), p_op())],
        ),
        single(
            "3.3.7",
            S,
            dot(nab(), j_op()),
            vec![term(Neg, 0, c().neg().pre(half()), p_op())],
        ),
        single(
            "3.3.8",
            S,
            dot(nab(), nab()),
            vec![term(Same, 0, c(), RadialOp::SphericalSecond { scale: 1 })],
        ),
        single(
            "3.3.9",
            S,
            dot(e0(), x(sig(), nab())),
            vec![
                term(
                    Neg,
                    0,
                    c().neg().i().pre(two_mu()).pre(two_k_plus(0)).over(D4K),
                    p_op(),
                ),
                term(Plus1, 0, c().neg().i().rad(rad1()).over(D2P1A), m_op()),
                term(Minus1, 0, c().i().rad(rad2()).over(D2M1A), p_op()),
            ],
        ),
        pm("3.3.10", S, |s| {
            (
                dot(e_pm(s), x(sig(), nab())),
                vec![
                    term(
                        Neg,
                        s,
                        c().sig(s)
                            .i()
                            .pre(cint(2))
                            .pre(k_plus(0))
                            .sqrt2(1)
                            .rad(rad3(s))
                            .over(D4K),
                        p_op(),
                    ),
                    term(
                        Plus1,
                        s,
                        c().neg().i().sqrt2(-1).rad(rad4(s)).over(D2P1),
                        m_op(),
                    ),
                    term(
                        Minus1,
                        s,
                        c().neg().i().sqrt2(-1).rad(rad5(s)).over(D2M1),
                        p_op(),
                    ),
                ],
            )
        }),
        single(
            "3.3.11",
            S,
            dot(j_op(), x(sig(), nab())),
            vec![term(Neg, 0, c().neg().i().pre(k_plus(0)), p_op())],
        ),
        single(
            "3.3.12",
            S,
            dot(n(), x(l_op(), nab())),
            vec![term(Same, 0, c().i(), dr2(0, -1, -1, 1))],
        ),
        single(
            "3.3.13",
            S,
            dot(e0(), x(l_op(), nab())),
            vec![
                term(
                    Neg,
                    0,
                    c().i().pre(two_mu()).pre(k_plus(-1)).over(D4K),
                    p_op(),
                ),
                term(
                    Plus1,
                    0,
                    c().i().pre(k_plus(2)).rad(rad1()).over(D2P1A),
                    m_op(),
                ),
                term(
                    Minus1,
                    0,
                    c().neg().i().pre(k_plus(-1)).rad(rad2()).over(D2M1A),
                    p_op(),
                ),
            ],
        ),
        pm("3.3.14", S, |s| {
            (
                dot(e_pm(s), x(l_op(), nab())),
                vec![
                    term(
                        Neg,
                        s,
                        c().sig(-s)
                            .i()
                            .sqrt2(1)
                            .pre(k_plus(-1))
                            .rad(rad3(s))
                            .over(D4K),
                        p_op(),
                    ),
                    term(
                        Plus1,
                        s,
                        c().i().pre(k_plus(2)).sqrt2(-1).rad(rad4(s)).over(D2P1),
                        m_op(),
                    ),
                    term(
                        Minus1,
                        s,
                        c().i().pre(k_plus(-1)).sqrt2(-1).rad(rad5(s)).over(D2M1),
                        p_op(),
                    ),
                ],
            )
        }),
        single(
            "3.3.15",
            S,
            dot(sig(), x(l_op(), nab())),
            vec![term(Neg, 0, c().i().pre(k_plus(-1)), p_op())],
        ),
        single(
            "3.3.16",
            S,
            dot(j_op(), x(l_op(), nab())),
            vec![term(Neg, 0, c().i().pre(half()).pre(k_plus(-1)), p_op())],
        ),
        single(
            "3.3.17",
            S,
            dot(e0(), x(nab(), l_op())),
            vec![
                term(
                    Neg,
                    0,
                    c().neg().i().pre(two_mu()).pre(k_plus(1)).over(D4K),
                    p_op(),
                ),
                term(
                    Plus1,
                    0,
                    c().neg().i().pre(k_plus(0)).rad(rad1()).over(D2P1A),
                    m_op(),
                ),
                term(
                    Minus1,
                    0,
                    c().i().pre(k_plus(1)).rad(rad2()).over(D2M1A),
                    p_op(),
                ),
            ],
        ),
        pm("3.3.18", S, |s| {
            (
                dot(e_pm(s), x(nab(), l_op())),
                vec![
                    term(
                        Neg,
                        s,
                        c().sig(s)
                            .i()
                            .sqrt2(1)
                            .pre(k_plus(1))
                            .rad(rad3(s))
                            .over(D4K),
                        p_op(),
                    ),
                    term(
                        Plus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_plus(0))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                        m_op(),
                    ),
                    term(
                        Minus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_plus(1))
                            .sqrt2(-1)
                            .rad(rad5(s))
                            .over(D2M1),
                        p_op(),
                    ),
                ],
            )
        }),
        single(
            "3.3.19",
            S,
            dot(sig(), x(nab(), l_op())),
            vec![term(Neg, 0, c().neg().i().pre(k_plus(1)), p_op())],
        ),
        single(
            "3.3.20",
            S,
            dot(j_op(), x(nab(), l_op())),
            vec![term(
                Neg,
                0,
                c().neg().i().pre(half()).pre(k_plus(1)),
                p_op(),
            )],
        ),
        single(
            "3.3.21",
            S,
            dot(x(nab(), l_op()), n()),
            vec![term(Same, 0, c().i(), dr2(4, 1, 1, 1))],
        ),
        single(
            "3.3.22",
            S,
            dot(x(nab(), l_op()), j_op()),
            vec![term(
                Neg,
                0,
                c().neg().i().pre(half()).pre(k_plus(1)),
                p_op(),
            )],
        ),
        single(
            "3.3.23",
            S,
            dot(n(), x(j_op(), nab())),
            vec![term(Same, 0, c().i(), dr2(1, -1, -2, 2))],
        ),
        single(
            "3.3.24",
            S,
            dot(e0(), x(j_op(), nab())),
            vec![
                term(Neg, 0, c().neg().i().pre(two_mu()).over(D4K), p_op()),
                term(
                    Plus1,
                    0,
                    c().i().pre(k_half(3)).rad(rad1()).over(D2P1A),
                    m_op(),
                ),
                term(
                    Minus1,
                    0,
                    c().neg().i().pre(k_half(-3)).rad(rad2()).over(D2M1A),
                    p_op(),
                ),
            ],
        ),
        pm("3.3.25", S, |s| {
            (
                dot(e_pm(s), x(j_op(), nab())),
                vec![
                    term(
                        Neg,
                        s,
                        c().sig(s).i().sqrt2(1).rad(rad3(s)).over(D4K),
                        p_op(),
                    ),
                    term(
                        Plus1,
                        s,
                        c().i().pre(k_half(3)).sqrt2(-1).rad(rad4(s)).over(D2P1),
                        m_op(),
                    ),
                    term(
                        Minus1,
                        s,
                        c().i().pre(k_half(-3)).sqrt2(-1).rad(rad5(s)).over(D2M1),
                        p_op(),
                    ),
                ],
            )
        }),
        single(
            "3.3.26",
            S,
            dot(sig(), x(j_op(), nab())),
            vec![term(Neg, 0, c().i().pre(k_plus(-2)), p_op())],
        ),
        single(
            "3.3.27",
            S,
            dot(l_op(), x(j_op(), nab())),
            vec![term(
                Neg,
                0,
                c().neg().i().pre(half()).pre(k_plus(-1)),
                p_op(),
            )],
        ),
        single(
            "3.3.28",
            S,
            dot(e0(), x(nab(), j_op())),
            vec![
                term(Neg, 0, c().neg().i().pre(two_mu()).over(D4K), p_op()),
                term(
                    Plus1,
                    0,
                    c().neg().i().pre(k_half(-1)).rad(rad1()).over(D2P1A),
                    m_op(),
                ),
                term(
                    Minus1,
                    0,
                    c().i().pre(k_half(1)).rad(rad2()).over(D2M1A),
                    p_op(),
                ),
            ],
        ),
        pm("3.3.29", S, |s| {
            (
                dot(e_pm(s), x(nab(), j_op())),
                vec![
                    term(
                        Neg,
                        s,
                        c().sig(s).i().sqrt2(1).rad(rad3(s)).over(D4K),
                        p_op(),
                    ),
                    term(
                        Plus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_half(-1))
                            .sqrt2(-1)
                            .rad(rad4(s))
                            .over(D2P1),
                        m_op(),
                    ),
                    term(
                        Minus1,
                        s,
                        c().neg()
                            .i()
                            .pre(k_half(1))
                            .sqrt2(-1)
                            .rad(rad5(s))
                            .over(D2M1),
                        p_op(),
                    ),
                ],
            )
        }),
        single(
            "3.3.30",
            S,
            dot(sig(), x(nab(), j_op())),
            vec![term(Neg, 0, c().neg().i().pre(k_plus(0)), p_op())],
        ),
        single(
            "3.3.31",
            S,
            dot(l_op(), x(nab(), j_op())),
            vec![term(Neg, 0, c().i().pre(half()).pre(k_plus(-1)), p_op())],
        ),
        single(
            "3.3.32",
            S,
            dot(j_op(), x(nab(), j_op())),
            vec![term(Neg, 0, c().neg().i().pre(half()), p_op())],
        ),
        single(
            "3.3.33",
            S,
            dot(x(nab(), j_op()), n()),
            vec![term(Same, 0, c().i(), dr2(7, 1, 2, 2))],
        ),
        single(
            "3.3.34",
            S,
            dot(x(nab(), j_op()), sig()),
            vec![term(Neg, 0, c().neg().i().pre(k_plus(2)), p_op())],
        ),
        single(
            "3.3.35",
            S,
            dot(x(nab(), j_op()), l_op()),
            vec![term(Neg, 0, c().i().pre(half()).pre(k_plus(1)), p_op())],
        ),
        single(
            "3.3.36",
            S,
            dot(nab(), x(l_op(), nab())),
            vec![term(
                Same,
                0,
                c().i(),
                RadialOp::SphericalSecond { scale: 2 },
            )],
        ),
        single(
            "3.3.37",
            S,
            dot(nab(), x(j_op(), nab())),
            vec![term(
                Same,
                0,
                c().i(),
                RadialOp::SphericalSecond { scale: 2 },
            )],
        ),
    ]
}
