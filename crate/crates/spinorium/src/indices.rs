//! Exact half-integer index algebra for spinor labels.
//!
//! Spherical spinors are labeled by a nonzero integer κ and a half-odd-integer
//! projection μ. Both determine the orbital degree l and total angular
//! momentum j through
//!
//! ```text
//! l = κ        for κ > 0          j = |κ| - 1/2
//! l = -κ - 1   for κ < 0          κ = (l - j)(2j + 1)
//! ```
//!
//! All index arithmetic here is exact integer arithmetic on doubled values;
//! no floating point is involved, so μ ± 1 shifts can never drift.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A half-integer stored as its doubled value, so 3/2 is `HalfInt(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    /// Construct from a doubled value: `from_twice(3)` is 3/2.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    /// Construct from a plain integer.
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    /// The doubled value (exact).
    pub const fn twice(self) -> i32 {
        self.0
    }

    /// True if the value is a whole integer.
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// True if the value is an odd multiple of 1/2.
    pub const fn is_half_odd(self) -> bool {
        self.0 % 2 != 0
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// Value as f64 (for display and final numeric evaluation only).
    pub fn to_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// Parse "p/2" fractions or decimals ending in `.5` or `.0` exactly,
    /// without going through floating point.
    pub fn parse_exact(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(format!("fraction denominator must be 2, got `{s}`"));
            }
            let p: i32 = num
                .trim()
                .parse()
                .map_err(|_| format!("invalid fraction numerator `{num}`"))?;
            return Ok(HalfInt(p));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let sign = if int_part.trim_start().starts_with('-') {
                -1
            } else {
                1
            };
            let whole: i32 = if int_part == "-" || int_part.is_empty() {
                0
            } else {
                int_part
                    .parse()
                    .map_err(|_| format!("invalid number `{s}`"))?
            };
            return match frac_part {
                "5" => Ok(HalfInt(2 * whole + sign)),
                "0" | "" => Ok(HalfInt(2 * whole)),
                _ => Err(format!(
                    "`{s}` is not exactly representable; use ….0, ….5 or p/2"
                )),
            };
        }
        let whole: i32 = s.parse().map_err(|_| format!("invalid number `{s}`"))?;
        Ok(HalfInt(2 * whole))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// The (κ, μ) label of a spherical spinor.
///
/// Valid labels have κ ≠ 0 and |μ| ≤ |κ| - 1/2 with μ half-odd. Coefficient
/// maps in the relation catalog may *aim* at out-of-range labels; those terms
/// must carry coefficient exactly zero and are never materialized as a
/// `SpinorIndex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinorIndex {
    kappa: i32,
    mu: HalfInt,
}

impl SpinorIndex {
    pub fn new(kappa: i32, mu: HalfInt) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroKappa);
        }
        if !mu.is_half_odd() || mu.abs().twice() > 2 * kappa.abs() - 1 {
            return Err(Error::MuOutOfRange { kappa, mu });
        }
        Ok(SpinorIndex { kappa, mu })
    }

    /// True if (κ, μ) is a valid spinor label, without constructing it.
    pub fn is_valid(kappa: i32, mu: HalfInt) -> bool {
        kappa != 0 && mu.is_half_odd() && mu.abs().twice() < 2 * kappa.abs()
    }

    pub fn kappa(self) -> i32 {
        self.kappa
    }

    pub fn mu(self) -> HalfInt {
        self.mu
    }

    /// Orbital degree l of the spinor.
    pub fn l(self) -> u32 {
        kappa_to_l(self.kappa).expect("kappa is nonzero by construction")
    }

    /// Total angular momentum j = |κ| - 1/2.
    pub fn j(self) -> HalfInt {
        kappa_to_j(self.kappa).expect("kappa is nonzero by construction")
    }
}

impl fmt::Display for SpinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Omega({}, {})", self.kappa, self.mu)
    }
}

/// Orbital degree for a given κ: l = κ for κ > 0, l = -κ - 1 for κ < 0.
pub fn kappa_to_l(kappa: i32) -> Result<u32> {
    match kappa.signum() {
        1 => Ok(kappa as u32),
        -1 => Ok((-kappa - 1) as u32),
        _ => Err(Error::ZeroKappa),
    }
}

/// Total angular momentum for a given κ: j = |κ| - 1/2.
pub fn kappa_to_j(kappa: i32) -> Result<HalfInt> {
    if kappa == 0 {
        return Err(Error::ZeroKappa);
    }
    Ok(HalfInt::from_twice(2 * kappa.abs() - 1))
}

/// Inverse labeling: κ = (l - j)(2j + 1), valid only when |l - j| = 1/2.
pub fn jl_to_kappa(j: HalfInt, l: u32) -> Result<i32> {
    let l_twice = 2 * l as i32;
    let diff = l_twice - j.twice(); // 2(l - j), must be ±1
    if j.twice() < 1 || diff.abs() != 1 {
        return Err(Error::InvalidCoupling { j, l });
    }
    let two_j_plus_1 = j.twice() + 1;
    Ok(diff * two_j_plus_1 / 2) // (l-j)(2j+1) = diff/2 * (2j+1); 2j+1 is even here
}

/// All valid projections for a given κ, ascending:
/// {-|κ| + 1/2, -|κ| + 3/2, …, |κ| - 1/2}. The list has 2|κ| entries.
pub fn mu_range(kappa: i32) -> Result<Vec<HalfInt>> {
    if kappa == 0 {
        return Err(Error::ZeroKappa);
    }
    let top = 2 * kappa.abs() - 1;
    Ok((-top..=top).step_by(2).map(HalfInt::from_twice).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn l_for_small_kappa() {
        assert_eq!(kappa_to_l(1).unwrap(), 1);
        assert_eq!(kappa_to_l(-1).unwrap(), 0);
        assert_eq!(kappa_to_l(-3).unwrap(), 2);
        assert_eq!(kappa_to_l(0), Err(Error::ZeroKappa));
    }

    #[test]
    fn j_for_small_kappa() {
        assert_eq!(kappa_to_j(1).unwrap(), HalfInt::HALF);
        assert_eq!(kappa_to_j(-2).unwrap(), HalfInt::from_twice(3));
        assert_eq!(kappa_to_j(4).unwrap(), HalfInt::from_twice(7));
        assert_eq!(kappa_to_j(0), Err(Error::ZeroKappa));
    }

    #[test]
    fn kappa_from_jl() {
        assert_eq!(jl_to_kappa(HalfInt::HALF, 1).unwrap(), 1);
        assert_eq!(jl_to_kappa(HalfInt::HALF, 0).unwrap(), -1);
        assert_eq!(jl_to_kappa(HalfInt::from_twice(3), 1).unwrap(), -2);
        assert!(jl_to_kappa(HalfInt::from_twice(3), 3).is_err());
        assert!(jl_to_kappa(HalfInt::ONE, 1).is_err());
    }

    #[test]
    fn mu_range_matches_degeneracy() {
        assert_eq!(
            mu_range(1).unwrap(),
            vec![HalfInt::from_twice(-1), HalfInt::from_twice(1)]
        );
        assert_eq!(mu_range(-1).unwrap(), mu_range(1).unwrap());
        assert_eq!(
            mu_range(2).unwrap(),
            vec![
                HalfInt::from_twice(-3),
                HalfInt::from_twice(-1),
                HalfInt::from_twice(1),
                HalfInt::from_twice(3)
            ]
        );
        assert_eq!(mu_range(0), Err(Error::ZeroKappa));
    }

    #[test]
    fn round_trip_exhaustive_to_50() {
        for kappa in (-50..=50).filter(|&k| k != 0) {
            let l = kappa_to_l(kappa).unwrap();
            let j = kappa_to_j(kappa).unwrap();
            assert_eq!(jl_to_kappa(j, l).unwrap(), kappa, "kappa = {kappa}");
            // 2|κ| projections, i.e. 2j + 1 of them
            assert_eq!(mu_range(kappa).unwrap().len() as i32, 2 * kappa.abs());
            assert_eq!(2 * kappa.abs(), j.twice() + 1);
            // l(l+1) = κ(κ+1) in both sign branches
            let l = l as i64;
            let k = kappa as i64;
            assert_eq!(l * (l + 1), k * (k + 1), "kappa = {kappa}");
        }
    }

    #[test]
    fn spinor_index_validation() {
        assert!(SpinorIndex::new(1, HalfInt::HALF).is_ok());
        assert!(SpinorIndex::new(1, HalfInt::from_twice(3)).is_err());
        assert!(SpinorIndex::new(0, HalfInt::HALF).is_err());
        assert!(SpinorIndex::new(2, HalfInt::ONE).is_err()); // integer mu
        let idx = SpinorIndex::new(-2, HalfInt::from_twice(-3)).unwrap();
        assert_eq!(idx.l(), 1);
        assert_eq!(idx.j(), HalfInt::from_twice(3));
    }

    #[test]
    fn parse_exact_forms() {
        assert_eq!(HalfInt::parse_exact("0.5").unwrap(), HalfInt::HALF);
        assert_eq!(HalfInt::parse_exact("-0.5").unwrap(), -HalfInt::HALF);
        assert_eq!(
            HalfInt::parse_exact("-1.5").unwrap(),
            HalfInt::from_twice(-3)
        );
        assert_eq!(HalfInt::parse_exact("3/2").unwrap(), HalfInt::from_twice(3));
        assert_eq!(
            HalfInt::parse_exact("-3/2").unwrap(),
            HalfInt::from_twice(-3)
        );
        assert_eq!(HalfInt::parse_exact("2").unwrap(), HalfInt::from_int(2));
        assert_eq!(HalfInt::parse_exact("2.0").unwrap(), HalfInt::from_int(2));
        assert!(HalfInt::parse_exact("0.25").is_err());
        assert!(HalfInt::parse_exact("1/3").is_err());
    }

    proptest! {
        #[test]
        fn halfint_arithmetic_is_exact(a in -10_000i32..10_000, b in -10_000i32..10_000) {
            let x = HalfInt::from_twice(a);
            let y = HalfInt::from_twice(b);
            prop_assert_eq!((x + y).twice(), a + b);
            prop_assert_eq!((x - y).twice(), a - b);
            prop_assert_eq!((-x).twice(), -a);
            prop_assert_eq!(x + HalfInt::ONE - HalfInt::ONE, x);
            prop_assert_eq!(x + HalfInt::HALF + HalfInt::HALF, x + HalfInt::ONE);
        }

        #[test]
        fn halfint_display_parse_round_trip(a in -10_000i32..10_000) {
            let x = HalfInt::from_twice(a);
            let s = x.to_string();
            prop_assert_eq!(HalfInt::parse_exact(&s).unwrap(), x);
        }
    }
}
