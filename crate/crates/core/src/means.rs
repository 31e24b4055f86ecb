//! Weighted means over positive tuples, the Rado gap and the Popoviciu ratio.

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{finite, pow_scalar, ExtendedReal, PrecisionContext, Scalar};

/// Positive values paired with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTuple {
    values: Vec<Scalar>,
    weights: Vec<Scalar>,
}

impl WeightedTuple {
    pub fn new(values: Vec<Scalar>, weights: Vec<Scalar>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidTuple("empty tuple".into()));
        }
        if values.len() != weights.len() {
            return Err(Error::InvalidTuple(format!(
                "{} values but {} weights",
                values.len(),
                weights.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !(v.is_finite() && *v > 0)) {
            return Err(Error::InvalidTuple(format!("value {i} is not positive")));
        }
        if let Some(i) = weights.iter().position(|w| !(w.is_finite() && *w > 0)) {
            return Err(Error::InvalidTuple(format!("weight {i} is not positive")));
        }
        Ok(Self { values, weights })
    }

    pub fn equal_weights(values: Vec<Scalar>, ctx: &PrecisionContext) -> Result<Self> {
        let weights = vec![ctx.one(); values.len()];
        Self::new(values, weights)
    }

    pub fn from_f64(values: &[f64], weights: &[f64], ctx: &PrecisionContext) -> Result<Self> {
        Self::new(
            values.iter().map(|&v| ctx.from_f64(v)).collect(),
            weights.iter().map(|&w| ctx.from_f64(w)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    /// The first `k` entries.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.len() {
            return Err(Error::BadIndex {
                m: k,
                n: self.len(),
            });
        }
        Ok(Self {
            values: self.values[..k].to_vec(),
            weights: self.weights[..k].to_vec(),
        })
    }

    pub fn total_weight(&self, ctx: &PrecisionContext) -> Scalar {
        total(&self.weights, ctx)
    }

    pub fn min(&self) -> &Scalar {
        self.values
            .iter()
            .min_by(|a, b| a.partial_cmp(b).unwrap())
            .unwrap()
    }

    pub fn max(&self) -> &Scalar {
        self.values
            .iter()
            .max_by(|a, b| a.partial_cmp(b).unwrap())
            .unwrap()
    }
}

pub(crate) fn total(xs: &[Scalar], ctx: &PrecisionContext) -> Scalar {
    ctx.val(Float::sum(xs.iter()))
}

/// Guard bits for intermediate sums.
pub(crate) fn guarded(ctx: &PrecisionContext, extra: u32) -> PrecisionContext {
    let mut g = *ctx;
    g.precision_bits = ctx.precision_bits + extra;
    g
}

pub(crate) fn arithmetic_of(
    values: &[Scalar],
    weights: &[Scalar],
    ctx: &PrecisionContext,
) -> Scalar {
    let g = guarded(ctx, 32);
    let num = g.val(Float::dot(values.iter().zip(weights)));
    ctx.val(num / total(weights, &g))
}

pub(crate) fn geometric_of(
    values: &[Scalar],
    weights: &[Scalar],
    ctx: &PrecisionContext,
) -> Result<Scalar> {
    let g = guarded(ctx, 32);
    let mut acc = g.zero();
    for (v, w) in values.iter().zip(weights) {
        acc += g.val(v.ln_ref()) * w;
    }
    acc /= total(weights, &g);
    finite(ctx.val(acc.exp_ref()))
}

pub(crate) fn power_of(
    r: &Scalar,
    values: &[Scalar],
    weights: &[Scalar],
    ctx: &PrecisionContext,
) -> Result<Scalar> {
    if r.is_zero() {
        return geometric_of(values, weights, ctx);
    }
    // Small |r| cancels roughly log2(1/|r|) bits in (mean of a^r)^(1/r).
    let lost = (-r.get_exp().unwrap_or(0)).max(0) as u32;
    let g = guarded(ctx, 32 + lost);
    let rr = g.round(r);
    let mut acc = g.zero();
    for (v, w) in values.iter().zip(weights) {
        acc += pow_scalar(v, &rr, &g)? * w;
    }
    acc /= total(weights, &g);
    let inv = g.val(rr.recip_ref());
    Ok(ctx.round(&pow_scalar(&acc, &inv, &g)?))
}

pub fn arithmetic_mean(t: &WeightedTuple, ctx: &PrecisionContext) -> Scalar {
    arithmetic_of(&t.values, &t.weights, ctx)
}

pub fn geometric_mean(t: &WeightedTuple, ctx: &PrecisionContext) -> Result<Scalar> {
    geometric_of(&t.values, &t.weights, ctx)
}

pub fn harmonic_mean(t: &WeightedTuple, ctx: &PrecisionContext) -> Result<Scalar> {
    power_mean(&ExtendedReal::Finite(ctx.from_f64(-1.0)), t, ctx)
}

pub fn quadratic_mean(t: &WeightedTuple, ctx: &PrecisionContext) -> Result<Scalar> {
    power_mean(&ExtendedReal::Finite(ctx.from_f64(2.0)), t, ctx)
}

/// `M^[r]`, with `r = 0` the geometric mean and `r = ±∞` the max/min.
pub fn power_mean(r: &ExtendedReal, t: &WeightedTuple, ctx: &PrecisionContext) -> Result<Scalar> {
    match r {
        ExtendedReal::PosInfinity => Ok(ctx.round(t.max())),
        ExtendedReal::NegInfinity => Ok(ctx.round(t.min())),
        ExtendedReal::Finite(r) => power_of(r, &t.values, &t.weights, ctx),
    }
}

/// `W_k (A_k - G_k)` over the first `k` entries.
pub fn rado_gap(t: &WeightedTuple, k: usize, ctx: &PrecisionContext) -> Result<Scalar> {
    let p = t.prefix(k)?;
    let g = guarded(ctx, 32);
    let a = arithmetic_mean(&p, &g);
    let gm = geometric_mean(&p, &g)?;
    Ok(ctx.val((a - gm) * p.total_weight(&g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PopoviciuConvention {
    /// `(A_k / G_k)^(W_k)`
    #[default]
    ExponentWk,
    /// `(A_k / G_k)^(1 / W_k)`
    ExponentInvWk,
}

pub fn popoviciu_ratio(
    t: &WeightedTuple,
    k: usize,
    convention: PopoviciuConvention,
    ctx: &PrecisionContext,
) -> Result<Scalar> {
    let p = t.prefix(k)?;
    let g = guarded(ctx, 32);
    let ratio = g.val(arithmetic_mean(&p, &g) / geometric_mean(&p, &g)?);
    let w = p.total_weight(&g);
    let e = match convention {
        PopoviciuConvention::ExponentWk => w,
        PopoviciuConvention::ExponentInvWk => g.val(w.recip_ref()),
    };
    Ok(ctx.round(&pow_scalar(&ratio, &e, &g)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_validation() {
        let ctx = PrecisionContext::default();
        assert!(WeightedTuple::from_f64(&[1.0, 2.0], &[1.0], &ctx).is_err());
        assert!(WeightedTuple::from_f64(&[1.0, 0.0], &[1.0, 1.0], &ctx).is_err());
        assert!(WeightedTuple::from_f64(&[1.0, 2.0], &[1.0, -1.0], &ctx).is_err());
        assert!(WeightedTuple::from_f64(&[], &[], &ctx).is_err());
    }

    #[test]
    fn prefix_bounds() {
        let ctx = PrecisionContext::default();
        let t = WeightedTuple::from_f64(&[1.0, 2.0, 3.0], &[1.0, 1.0, 1.0], &ctx).unwrap();
        assert!(t.prefix(0).is_err());
        assert!(t.prefix(4).is_err());
        assert_eq!(t.prefix(2).unwrap().len(), 2);
    }
}
