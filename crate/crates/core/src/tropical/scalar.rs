use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// An element of the max-plus semifield: either the additive zero `𝟘`
/// (conventionally `-∞`) or a finite real.
///
/// `+` is the semiring addition `⊕` (maximum) and `*` is the semiring
/// multiplication `⊗` (conventional addition). `𝟘` is an explicit variant so
/// that the absorbing law `𝟘 ⊗ x = 𝟘` holds exactly.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Tropical {
    #[default]
    Zero,
    Finite(f64),
}

impl Tropical {
    /// The additive identity `𝟘`.
    pub const ZERO: Tropical = Tropical::Zero;
    /// The multiplicative identity `𝟙`, conventionally `0`.
    pub const ONE: Tropical = Tropical::Finite(0.0);

    /// Wraps a finite real.
    ///
    /// # Panics
    /// Panics if `value` is NaN or infinite.
    pub fn finite(value: f64) -> Self {
        assert!(
            value.is_finite(),
            "tropical value must be finite, got {value}"
        );
        Tropical::Finite(value)
    }

    /// Reads a conventional number: `-∞` maps to `𝟘`, finite values map to
    /// themselves, anything else is rejected.
    pub fn from_conventional(value: f64) -> Result<Self> {
        if value == f64::NEG_INFINITY {
            Ok(Tropical::Zero)
        } else if value.is_finite() {
            Ok(Tropical::Finite(value))
        } else {
            Err(Error::Domain(format!(
                "{value} is not an element of R_max,+"
            )))
        }
    }

    /// The conventional reading, with `𝟘` as `-∞`.
    pub fn to_f64(self) -> f64 {
        match self {
            Tropical::Zero => f64::NEG_INFINITY,
            Tropical::Finite(v) => v,
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Tropical::Zero => None,
            Tropical::Finite(v) => Some(v),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Tropical::Zero)
    }

    pub fn is_finite(self) -> bool {
        !self.is_zero()
    }

    /// `x ⊕ y`.
    pub fn oplus(self, other: Self) -> Self {
        match (self, other) {
            (Tropical::Zero, y) => y,
            (x, Tropical::Zero) => x,
            (Tropical::Finite(x), Tropical::Finite(y)) => Tropical::Finite(x.max(y)),
        }
    }

    /// `x ⊗ y`.
    pub fn otimes(self, other: Self) -> Self {
        match (self, other) {
            (Tropical::Finite(x), Tropical::Finite(y)) => Tropical::Finite(x + y),
            _ => Tropical::Zero,
        }
    }

    /// `x⁻¹`, conventionally `-x`.
    pub fn inv(self) -> Result<Self> {
        match self {
            Tropical::Zero => Err(Error::Domain("the zero element has no inverse".into())),
            Tropical::Finite(v) => Ok(Tropical::Finite(-v)),
        }
    }

    /// `x^α` for a real exponent, conventionally `α·x`.
    ///
    /// `𝟘^α = 𝟘` for `α > 0`; non-positive powers of `𝟘` are undefined.
    pub fn powf(self, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::Domain(format!("exponent {alpha} is not finite")));
        }
        match self {
            Tropical::Zero if alpha > 0.0 => Ok(Tropical::Zero),
            Tropical::Zero => Err(Error::Domain(format!(
                "the zero element cannot be raised to the non-positive power {alpha}"
            ))),
            Tropical::Finite(v) => Ok(Tropical::Finite(alpha * v)),
        }
    }

    /// `x^p` for an integer exponent.
    pub fn powi(self, p: i32) -> Result<Self> {
        match self {
            Tropical::Zero if p > 0 => Ok(Tropical::Zero),
            Tropical::Zero => Err(Error::Domain(format!(
                "the zero element cannot be raised to the non-positive power {p}"
            ))),
            Tropical::Finite(v) => Ok(Tropical::Finite(f64::from(p) * v)),
        }
    }

    /// `x^{1/k}`, computed as `x / k` to avoid the rounding of `1/k`.
    pub fn root(self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("zeroth root is undefined".into()));
        }
        Ok(match self {
            Tropical::Zero => Tropical::Zero,
            Tropical::Finite(v) => Tropical::Finite(v / f64::from(k)),
        })
    }

    /// Equality up to an absolute tolerance on finite values; `𝟘` only equals `𝟘`.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        match (self, other) {
            (Tropical::Zero, Tropical::Zero) => true,
            (Tropical::Finite(x), Tropical::Finite(y)) => (x - y).abs() <= tol,
            _ => false,
        }
    }
}

impl From<f64> for Tropical {
    fn from(value: f64) -> Self {
        Tropical::finite(value)
    }
}

impl Add for Tropical {
    type Output = Tropical;

    fn add(self, rhs: Self) -> Self::Output {
        self.oplus(rhs)
    }
}

impl Mul for Tropical {
    type Output = Tropical;

    fn mul(self, rhs: Self) -> Self::Output {
        self.otimes(rhs)
    }
}

impl std::iter::Sum for Tropical {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Tropical::Zero, Tropical::oplus)
    }
}

impl std::iter::Product for Tropical {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Tropical::ONE, Tropical::otimes)
    }
}

/// The order induced by `⊕`: `𝟘` is the bottom, finite values compare as reals.
impl PartialOrd for Tropical {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Tropical::Zero, Tropical::Zero) => Some(Ordering::Equal),
            (Tropical::Zero, Tropical::Finite(_)) => Some(Ordering::Less),
            (Tropical::Finite(_), Tropical::Zero) => Some(Ordering::Greater),
            (Tropical::Finite(x), Tropical::Finite(y)) => x.partial_cmp(y),
        }
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Zero => f.write_str("𝟘"),
            Tropical::Finite(v) => write!(f, "{v}"),
        }
    }
}
