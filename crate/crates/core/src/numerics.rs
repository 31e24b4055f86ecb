//! High-precision scalars, precision contexts and banded sign classification.

use std::cmp::Ordering;

use rug::float::Round;
use rug::ops::AssignRound;
use rug::ops::Pow;
use rug::{Assign, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// All real quantities are MPFR floats. Finiteness is enforced at the
/// boundaries that produce them (`finite`, `pow_scalar`, the means).
pub type Scalar = Float;

pub const DEFAULT_PRECISION: u32 = 128;
pub const MAX_PRECISION: u32 = 1024;

/// Bits of headroom between the working precision and the equality band.
const BAND_HEADROOM: i32 = 28;

/// Default floor of the comparison scale. It only guards `0/0`; a unit floor
/// would turn the band absolute for sides far below 1.
pub const DEFAULT_ABS_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrecisionContext {
    pub precision_bits: u32,
    pub rel_tolerance: f64,
    pub abs_floor: f64,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::with_bits(DEFAULT_PRECISION).expect("default precision is valid")
    }
}

impl PrecisionContext {
    /// Context at `bits` with the band set to `2^(28 - bits)`.
    pub fn with_bits(bits: u32) -> Result<Self> {
        let tol = 2f64.powi(BAND_HEADROOM - bits as i32);
        Self::new(bits, tol, DEFAULT_ABS_FLOOR)
    }

    pub fn new(precision_bits: u32, rel_tolerance: f64, abs_floor: f64) -> Result<Self> {
        if !(64..=MAX_PRECISION).contains(&precision_bits) {
            return Err(Error::BadContext(format!(
                "precision_bits must lie in [64, {MAX_PRECISION}], got {precision_bits}"
            )));
        }
        let min_tol = 2f64.powi(8 - precision_bits as i32);
        if !(rel_tolerance.is_finite() && rel_tolerance >= min_tol) {
            return Err(Error::BadContext(format!(
                "rel_tolerance {rel_tolerance:e} is below 2^(8-{precision_bits})"
            )));
        }
        if !(abs_floor.is_finite() && abs_floor > 0.0) {
            return Err(Error::BadContext("abs_floor must be positive".into()));
        }
        Ok(Self {
            precision_bits,
            rel_tolerance,
            abs_floor,
        })
    }

    pub fn prec(&self) -> u32 {
        self.precision_bits
    }

    /// The same context at `factor` times the precision, band rescaled.
    pub fn scaled(&self, factor: u32) -> Self {
        let bits = (self.precision_bits * factor).min(MAX_PRECISION);
        Self::with_bits(bits).expect("scaled precision is valid")
    }

    /// Round any rug-assignable value into a scalar at this precision.
    pub fn val<T>(&self, v: T) -> Scalar
    where
        Float: Assign<T>,
    {
        Float::with_val(self.precision_bits, v)
    }

    pub fn from_f64(&self, v: f64) -> Scalar {
        Float::with_val(self.precision_bits, v)
    }

    pub fn zero(&self) -> Scalar {
        Float::new(self.precision_bits)
    }

    pub fn one(&self) -> Scalar {
        self.from_f64(1.0)
    }

    /// Parse a decimal literal, rounding to nearest.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let parsed = Float::parse(s.trim())
            .map_err(|e| Error::Arity(format!("cannot parse `{s}` as a number: {e}")))?;
        finite(Float::with_val(self.precision_bits, parsed))
    }

    /// Re-round a scalar produced elsewhere to this precision.
    pub fn round(&self, v: &Scalar) -> Scalar {
        let mut out = Float::new(self.precision_bits);
        out.assign_round(v, Round::Nearest);
        out
    }

    pub fn tolerance(&self) -> Scalar {
        self.from_f64(self.rel_tolerance)
    }
}

pub fn finite(v: Scalar) -> Result<Scalar> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow)
    }
}

/// `base^exponent` for `base > 0`.
///
/// MPFR's `pow` is correctly rounded, which is tighter than evaluating
/// `exp(exponent * ln(base))` at the same precision.
pub fn pow_scalar(base: &Scalar, exponent: &Scalar, ctx: &PrecisionContext) -> Result<Scalar> {
    if !exponent.is_finite() {
        return Err(Error::Overflow);
    }
    if base.is_nan() || *base <= 0 {
        return Err(Error::NonPositiveBase);
    }
    finite(ctx.val(base.pow(exponent)))
}

pub fn ln_scalar(x: &Scalar, ctx: &PrecisionContext) -> Result<Scalar> {
    if x.is_nan() || *x <= 0 {
        return Err(Error::NonPositiveBase);
    }
    finite(ctx.val(x.ln_ref()))
}

pub fn exp_scalar(x: &Scalar, ctx: &PrecisionContext) -> Result<Scalar> {
    finite(ctx.val(x.exp_ref()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignClass {
    Positive,
    Zero,
    Negative,
}

/// Zero iff `|value| <= rel_tolerance * scale`, otherwise the sign of `value`.
pub fn classify_sign(value: &Scalar, scale: &Scalar, ctx: &PrecisionContext) -> SignClass {
    let band = Float::with_val(ctx.prec(), scale * ctx.rel_tolerance);
    if Float::with_val(ctx.prec(), value.abs_ref()) <= band {
        SignClass::Zero
    } else if value.is_sign_positive() {
        SignClass::Positive
    } else {
        SignClass::Negative
    }
}

/// `max(|lhs|, |rhs|, abs_floor)`.
pub fn comparison_scale(lhs: &Scalar, rhs: &Scalar, ctx: &PrecisionContext) -> Scalar {
    let mut scale = ctx.from_f64(ctx.abs_floor);
    for v in [lhs, rhs] {
        let a = ctx.val(v.abs_ref());
        if a > scale {
            scale = a;
        }
    }
    scale
}

/// Two scalars agree within the band of the context.
pub fn approx_eq(a: &Scalar, b: &Scalar, ctx: &PrecisionContext) -> bool {
    let diff = ctx.val(a - b);
    classify_sign(&diff, &comparison_scale(a, b, ctx), ctx) == SignClass::Zero
}

/// Relative closeness `|a - b| <= tol * max(|a|, |b|, tol)`.
pub fn rel_close(a: &Scalar, b: &Scalar, tol: f64, prec: u32) -> bool {
    let diff = Float::with_val(prec, a - b).abs();
    let mut scale = Float::with_val(prec, a.abs_ref());
    let bb = Float::with_val(prec, b.abs_ref());
    if bb > scale {
        scale = bb;
    }
    if scale < tol {
        scale = Float::with_val(prec, tol);
    }
    diff <= scale * tol
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExtendedReal {
    Finite(Scalar),
    PosInfinity,
    NegInfinity,
}

impl ExtendedReal {
    pub fn finite(v: Scalar) -> Result<Self> {
        finite(v).map(ExtendedReal::Finite)
    }

    pub fn from_f64(v: f64, ctx: &PrecisionContext) -> Self {
        if v == f64::INFINITY {
            ExtendedReal::PosInfinity
        } else if v == f64::NEG_INFINITY {
            ExtendedReal::NegInfinity
        } else {
            ExtendedReal::Finite(ctx.from_f64(v))
        }
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use ExtendedReal::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.partial_cmp(b),
            (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Some(Ordering::Equal),
            (NegInfinity, _) | (_, PosInfinity) => Some(Ordering::Less),
            (PosInfinity, _) | (_, NegInfinity) => Some(Ordering::Greater),
        }
    }
}

/// Decimal rendering used in reports: enough digits to round-trip.
pub fn render(v: &Scalar) -> String {
    let digits = (v.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
    v.to_string_radix(10, Some(digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_rejects_tolerance_below_arithmetic() {
        assert!(PrecisionContext::new(128, 1e-60, 1.0).is_err());
        assert!(PrecisionContext::new(32, 1e-3, 1.0).is_err());
        assert!(PrecisionContext::new(128, 1e-30, 1.0).is_ok());
    }

    #[test]
    fn non_positive_base() {
        let ctx = PrecisionContext::default();
        let e = ctx.from_f64(0.5);
        assert_eq!(
            pow_scalar(&ctx.zero(), &e, &ctx),
            Err(Error::NonPositiveBase)
        );
        assert_eq!(
            pow_scalar(&ctx.from_f64(-2.0), &e, &ctx),
            Err(Error::NonPositiveBase)
        );
    }

    #[test]
    fn band_is_relative_to_scale() {
        let ctx = PrecisionContext::new(128, 1e-30, 1.0).unwrap();
        let v = ctx.from_f64(1e-25);
        assert_eq!(classify_sign(&v, &ctx.one(), &ctx), SignClass::Positive);
        assert_eq!(classify_sign(&v, &ctx.from_f64(1e6), &ctx), SignClass::Zero);
        assert_eq!(
            classify_sign(&ctx.val(-&v), &ctx.one(), &ctx),
            SignClass::Negative
        );
    }

    #[test]
    fn extended_order() {
        let ctx = PrecisionContext::default();
        assert!(ExtendedReal::NegInfinity < ExtendedReal::from_f64(-1e300, &ctx));
        assert!(ExtendedReal::from_f64(3.0, &ctx) < ExtendedReal::PosInfinity);
    }
}
