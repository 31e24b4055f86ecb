//! Limit, monotonicity and chain suites over the means.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{derive_seed, stream_id};
use crate::error::{Error, Result};
use crate::means::{
    geometric_mean, popoviciu_ratio, power_mean, rado_gap, PopoviciuConvention, WeightedTuple,
};
use crate::numerics::{
    classify_sign, comparison_scale, exp_scalar, pow_scalar, render, ExtendedReal,
    PrecisionContext, Scalar, SignClass,
};

/// Exponents at which power means are compared with their limits.
pub const LIMIT_GRID: [f64; 8] = [-1e4, -1e2, -1.0, -1e-6, 1e-6, 1.0, 1e2, 1e4];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitReport {
    pub values: Vec<String>,
    pub weights: Vec<String>,
    /// `(r, M^[r])` over [`LIMIT_GRID`].
    pub grid: Vec<(f64, String)>,
    /// `|M^[10^4] - max| / max`.
    pub max_error: f64,
    /// `|M^[-10^4] - min| / min`.
    pub min_error: f64,
    /// Largest of `|M^[±10^-6] - G| / G`.
    pub geometric_error: f64,
    /// Rigorous bound `1 - (w_max/W)^(1/r)` on `max_error`.
    pub max_bound: f64,
    /// Rigorous bound `(W/w_min)^(1/r) - 1` on `min_error`.
    pub min_bound: f64,
    pub monotone: bool,
    /// All three errors within the requested tolerance.
    pub within_tolerance: bool,
    /// Errors within `max(tolerance, bound)` and the grid monotone.
    pub passed: bool,
}

fn rel_err(v: &Scalar, target: &Scalar, ctx: &PrecisionContext) -> f64 {
    ctx.val(ctx.val(v - target) / target).abs().to_f64()
}

fn weight_share(t: &WeightedTuple, pick: &Scalar, ctx: &PrecisionContext) -> Scalar {
    // Total weight on the entries equal to `pick` over the total weight.
    let mut w = ctx.zero();
    for (v, wi) in t.values().iter().zip(t.weights()) {
        if v == pick {
            w += wi;
        }
    }
    ctx.val(w / t.total_weight(ctx))
}

/// Power means on [`LIMIT_GRID`] against the max, min and geometric limits.
pub fn check_power_mean_limits(
    t: &WeightedTuple,
    tolerance: f64,
    ctx: &PrecisionContext,
) -> Result<LimitReport> {
    let mut grid = Vec::with_capacity(LIMIT_GRID.len());
    for &r in &LIMIT_GRID {
        grid.push(power_mean(&ExtendedReal::from_f64(r, ctx), t, ctx)?);
    }
    let (hi, lo) = (ctx.round(t.max()), ctx.round(t.min()));
    let gm = geometric_mean(t, ctx)?;
    let r_big = LIMIT_GRID[LIMIT_GRID.len() - 1];
    let max_error = rel_err(&grid[grid.len() - 1], &hi, ctx);
    let min_error = rel_err(&grid[0], &lo, ctx);
    let geometric_error = rel_err(&grid[3], &gm, ctx).max(rel_err(&grid[4], &gm, ctx));

    let inv_r = ctx.from_f64(1.0 / r_big);
    let max_bound = 1.0 - pow_scalar(&weight_share(t, t.max(), ctx), &inv_r, ctx)?.to_f64();
    let min_bound = pow_scalar(&weight_share(t, t.min(), ctx).recip(), &inv_r, ctx)?.to_f64() - 1.0;

    let monotone = grid.windows(2).all(|w| {
        let d = ctx.val(&w[1] - &w[0]);
        classify_sign(&d, &comparison_scale(&w[0], &w[1], ctx), ctx) != SignClass::Negative
    });
    // Bounds are exact up to rounding of the bound itself.
    let slack = 1.0 + 1e-9;
    let within_tolerance =
        max_error <= tolerance && min_error <= tolerance && geometric_error <= tolerance;
    let passed = monotone
        && max_error <= tolerance.max(max_bound * slack)
        && min_error <= tolerance.max(min_bound * slack)
        && geometric_error <= tolerance;
    Ok(LimitReport {
        values: t.values().iter().map(render).collect(),
        weights: t.weights().iter().map(render).collect(),
        grid: LIMIT_GRID
            .iter()
            .zip(&grid)
            .map(|(r, v)| (*r, render(v)))
            .collect(),
        max_error,
        min_error,
        geometric_error,
        max_bound,
        min_bound,
        monotone,
        within_tolerance,
        passed,
    })
}

/// Random tuple of length 2..=10 with value ratio at most 100.
pub(crate) fn limit_tuple(rng: &mut ChaCha8Rng, ctx: &PrecisionContext) -> Result<WeightedTuple> {
    let n = rng.gen_range(2..=10);
    let values: Vec<f64> = (0..n)
        .map(|_| 10f64.powf(rng.gen_range(-1.0..=1.0)))
        .collect();
    let weights: Vec<f64> = (0..n)
        .map(|_| 10f64.powf(rng.gen_range(-1.0..=1.0)))
        .collect();
    WeightedTuple::from_f64(&values, &weights, ctx)
}

pub(crate) fn sampled_limits(
    count: usize,
    tolerance: f64,
    seed: u64,
    ctx: &PrecisionContext,
) -> Result<Vec<LimitReport>> {
    let stream = stream_id("limits");
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, stream, i));
            check_power_mean_limits(&limit_tuple(&mut rng, ctx)?, tolerance, ctx)
        })
        .collect()
}

/// `F: (1 + a/x)^x` and `G: (1 + a/x)^(x + a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FunctionFamily {
    F,
    G,
}

impl FunctionFamily {
    fn eval(self, a: &Scalar, x: &Scalar, ctx: &PrecisionContext) -> Result<Scalar> {
        let base = ctx.val(1 + ctx.val(a / x));
        let e = match self {
            FunctionFamily::F => x.clone(),
            FunctionFamily::G => ctx.val(x + a),
        };
        pow_scalar(&base, &e, ctx)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub family: FunctionFamily,
    pub a: f64,
    pub points: usize,
    /// Strictly monotone (increasing for F, decreasing for G; constant for `a = 0`).
    pub left_monotone: bool,
    pub right_monotone: bool,
    /// F: every left value above every right value. G: below.
    pub cross_ordering: bool,
    /// `|h(x) - e^a|` shrinks toward both tails.
    pub tail_decreasing: bool,
    /// `(x, |h(x) - e^a|)` at the largest grid point.
    pub tail: (f64, f64),
    pub passed: bool,
}

fn strict_step(prev: &Scalar, next: &Scalar, ctx: &PrecisionContext) -> SignClass {
    classify_sign(
        &ctx.val(next - prev),
        &comparison_scale(prev, next, ctx),
        ctx,
    )
}

fn monotone(vals: &[Scalar], want: SignClass, ctx: &PrecisionContext) -> bool {
    vals.windows(2)
        .all(|w| strict_step(&w[0], &w[1], ctx) == want)
}

/// Check `family` on a grid in `S = (-∞, min(0, -a)) ∪ (max(0, -a), ∞)`,
/// sorted ascending within each interval.
pub fn check_function_monotonicity(
    family: FunctionFamily,
    a: &Scalar,
    grid: &[Scalar],
    ctx: &PrecisionContext,
) -> Result<MonotonicityReport> {
    let zero = ctx.zero();
    let minus_a = ctx.val(-a);
    let (left_end, right_end) = if minus_a < 0 {
        (&minus_a, &zero)
    } else {
        (&zero, &minus_a)
    };
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for x in grid {
        if x < left_end {
            left.push(x.clone());
        } else if x > right_end {
            right.push(x.clone());
        } else {
            return Err(Error::GridOutsideDomain(format!(
                "{} is not in S",
                x.to_f64()
            )));
        }
    }
    for side in [&left, &right] {
        if side.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::GridOutsideDomain(
                "grid must be ascending within each interval".into(),
            ));
        }
    }
    let eval = |xs: &[Scalar]| {
        xs.iter()
            .map(|x| family.eval(a, x, ctx))
            .collect::<Result<Vec<_>>>()
    };
    let (lv, rv) = (eval(&left)?, eval(&right)?);

    let want = match (a.is_zero(), family) {
        (true, _) => SignClass::Zero,
        (false, FunctionFamily::F) => SignClass::Positive,
        (false, FunctionFamily::G) => SignClass::Negative,
    };
    let left_monotone = monotone(&lv, want, ctx);
    let right_monotone = monotone(&rv, want, ctx);

    let cross_ordering = match (lv.is_empty() || rv.is_empty(), a.is_zero()) {
        (true, _) => true,
        (false, true) => strict_step(&lv[0], &rv[0], ctx) == SignClass::Zero,
        (false, false) => {
            let (lmin, lmax) = (
                lv.iter().min_by(|x, y| x.total_cmp(y)).unwrap(),
                lv.iter().max_by(|x, y| x.total_cmp(y)).unwrap(),
            );
            let (rmin, rmax) = (
                rv.iter().min_by(|x, y| x.total_cmp(y)).unwrap(),
                rv.iter().max_by(|x, y| x.total_cmp(y)).unwrap(),
            );
            match family {
                FunctionFamily::F => strict_step(rmax, lmin, ctx) == SignClass::Positive,
                FunctionFamily::G => strict_step(lmax, rmin, ctx) == SignClass::Positive,
            }
        }
    };

    let ea = exp_scalar(a, ctx)?;
    let err = |v: &Scalar| ctx.val(v - &ea).abs();
    let le: Vec<Scalar> = lv.iter().rev().map(err).collect();
    let re: Vec<Scalar> = rv.iter().map(err).collect();
    let shrinking = |e: &[Scalar]| {
        if a.is_zero() {
            e.iter()
                .all(|v| classify_sign(v, &ea, ctx) == SignClass::Zero)
        } else {
            e.windows(2).all(|w| w[1] < w[0])
        }
    };
    let tail_decreasing = shrinking(&le) && shrinking(&re);
    let tail = match (right.last(), re.last()) {
        (Some(x), Some(e)) => (x.to_f64(), e.to_f64()),
        _ => (f64::NAN, f64::NAN),
    };
    let passed = left_monotone && right_monotone && cross_ordering && tail_decreasing;
    Ok(MonotonicityReport {
        family,
        a: a.to_f64(),
        points: grid.len(),
        left_monotone,
        right_monotone,
        cross_ordering,
        tail_decreasing,
        tail,
        passed,
    })
}

/// Geometric grid in both intervals of `S`, ascending. The right interval
/// ends exactly at `10^6 max(1, |a|)`.
pub fn monotonicity_grid(a: f64, ctx: &PrecisionContext) -> Vec<Scalar> {
    let s = a.abs().max(1.0);
    let (lo, hi) = ((-a).max(0.0), (-a).min(0.0));
    let steps: Vec<f64> = (0..=21).map(|j| s / 4.0 * 2f64.powi(j)).collect();
    let mut left: Vec<f64> = steps.iter().map(|d| hi - d).collect();
    left.reverse();
    let mut right: Vec<f64> = steps.iter().map(|d| lo + d).collect();
    right.push(1e6 * s);
    left.into_iter()
        .chain(right)
        .map(|x| ctx.from_f64(x))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// Values of the first failing tuple.
    pub first_failure: Option<Vec<String>>,
    pub passed: bool,
}

/// Random non-constant tuple of length 2..=10 with log-uniform values.
pub(crate) fn chain_tuple(rng: &mut ChaCha8Rng, ctx: &PrecisionContext) -> Result<WeightedTuple> {
    let n = rng.gen_range(2..=10);
    loop {
        let values: Vec<f64> = (0..n)
            .map(|_| 10f64.powf(rng.gen_range(-3.0..=3.0)))
            .collect();
        let weights: Vec<f64> = (0..n)
            .map(|_| 10f64.powf(rng.gen_range(-1.0..=1.0)))
            .collect();
        if values[0] != values[1] {
            return WeightedTuple::from_f64(&values, &weights, ctx);
        }
    }
}

fn chain(
    name: &str,
    trials: usize,
    seed: u64,
    ctx: &PrecisionContext,
    ok: impl Fn(&WeightedTuple) -> Result<bool> + Sync,
) -> ChainReport {
    let stream = stream_id(name);
    let bad: Vec<Option<Vec<String>>> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, stream, i));
            let t = chain_tuple(&mut rng, ctx).ok()?;
            match ok(&t) {
                Ok(true) => None,
                _ => Some(t.values().iter().map(render).collect()),
            }
        })
        .collect();
    let failures = bad.iter().filter(|b| b.is_some()).count();
    ChainReport {
        name: name.to_string(),
        trials,
        failures,
        first_failure: bad.into_iter().flatten().next(),
        passed: failures == 0,
    }
}

/// `rado_gap(t, k)` strictly increasing for `k >= 2`, each step confirmed
/// at four times the precision.
pub fn rado_increasing(t: &WeightedTuple, ctx: &PrecisionContext) -> Result<bool> {
    let hi = ctx.scaled(4);
    let th = WeightedTuple::new(
        t.values().iter().map(|v| hi.round(v)).collect(),
        t.weights().iter().map(|v| hi.round(v)).collect(),
    )?;
    for c in [ctx, &hi] {
        let src = if c.prec() == ctx.prec() { t } else { &th };
        let gaps = (2..=src.len())
            .map(|k| rado_gap(src, k, c))
            .collect::<Result<Vec<_>>>()?;
        if gaps[0] <= 0 || !monotone(&gaps, SignClass::Positive, c) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn rado_chain(trials: usize, seed: u64, ctx: &PrecisionContext) -> ChainReport {
    chain("RADO", trials, seed, ctx, |t| rado_increasing(t, ctx))
}

/// Popoviciu ratio chain nondecreasing in `k` under `convention`.
pub fn popoviciu_nondecreasing(
    t: &WeightedTuple,
    convention: PopoviciuConvention,
    ctx: &PrecisionContext,
) -> Result<bool> {
    let r = (1..=t.len())
        .map(|k| popoviciu_ratio(t, k, convention, ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok(r.windows(2)
        .all(|w| strict_step(&w[0], &w[1], ctx) != SignClass::Negative))
}

pub fn popoviciu_chain(trials: usize, seed: u64, ctx: &PrecisionContext) -> ChainReport {
    chain("POPOVICIU", trials, seed, ctx, |t| {
        popoviciu_nondecreasing(t, PopoviciuConvention::ExponentWk, ctx)
    })
}
