//! Bernoulli-type entries: `(1+x)^α` against `1+αx` on the various
//! domains, its changes of variable, the integer forms, Rüthing, Jacobsthal,
//! Bush and Pečarić.

use super::{
    all_pos, constant, int, is_zero_or_one, pos, real, sum, Direction, Entry, Form, Layout,
    ParamSlot, Point, Region, Sampler,
};
use crate::error::Result;
use crate::numerics::{approx_eq, pow_scalar, PrecisionContext, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum AlphaSet {
    /// `0 <= α <= 1`
    Unit,
    /// `α > 1`
    AboveOne,
    /// `α < 0`
    BelowZero,
    /// `α < 0 or α > 1`
    Outside,
    /// `α <= 0 or α >= 1`
    OutsideClosed,
}

impl AlphaSet {
    pub(crate) fn contains(self, a: &Scalar) -> bool {
        match self {
            AlphaSet::Unit => *a >= 0 && *a <= 1,
            AlphaSet::AboveOne => *a > 1,
            AlphaSet::BelowZero => *a < 0,
            AlphaSet::Outside => *a < 0 || *a > 1,
            AlphaSet::OutsideClosed => *a <= 0 || *a >= 1,
        }
    }

    fn has_endpoints(self) -> bool {
        matches!(self, AlphaSet::Unit | AlphaSet::OutsideClosed)
    }

    /// A value away from 0 and 1.
    fn draw(self, s: &mut Sampler) -> f64 {
        match self {
            AlphaSet::Unit => s.uniform(1e-3, 1.0 - 1e-3),
            AlphaSet::AboveOne => 1.0 + s.log_uniform(-2.0, 1.0),
            AlphaSet::BelowZero => -s.log_uniform(-2.0, 1.0),
            AlphaSet::Outside | AlphaSet::OutsideClosed => {
                if s.coin(0.5) {
                    AlphaSet::AboveOne.draw(s)
                } else {
                    AlphaSet::BelowZero.draw(s)
                }
            }
        }
    }
}

fn alpha(s: &mut Sampler, set: AlphaSet) -> Scalar {
    let a = s.param_or(0, |s| set.draw(s));
    s.s(a)
}

/// How the variable enters the base: `1+x`, `1-x` or `x`.
#[derive(Clone, Copy)]
enum Base {
    Plus,
    Minus,
    Raw,
}

/// Admissible bases `b`, i.e. the x-domain seen through `Base`.
#[derive(Clone, Copy)]
enum BaseRange {
    Positive,
    AtLeastOne,
    AtMostOne,
}

/// `base(x)^α` against `1 + α (base(x) - 1)`.
struct Binomial {
    base: Base,
    range: BaseRange,
    primary: AlphaSet,
    complement: Option<AlphaSet>,
}

impl Binomial {
    fn set(&self, region: Region) -> AlphaSet {
        match region {
            Region::Primary => self.primary,
            Region::Complement => self.complement.unwrap_or(self.primary),
        }
    }

    fn base_of(&self, x: &Scalar, ctx: &PrecisionContext) -> Scalar {
        match self.base {
            Base::Plus => ctx.val(1 + x),
            Base::Minus => ctx.val(1 - x),
            Base::Raw => x.clone(),
        }
    }

    fn var_of(&self, b: &Scalar, ctx: &PrecisionContext) -> Scalar {
        match self.base {
            Base::Plus => ctx.val(b - 1u32),
            Base::Minus => ctx.val(1 - b),
            Base::Raw => b.clone(),
        }
    }

    fn draw_base(&self, s: &mut Sampler) -> f64 {
        match self.range {
            BaseRange::Positive => s.log_uniform(-3.0, 3.0),
            BaseRange::AtLeastOne => s.log_uniform(0.0, 3.0),
            BaseRange::AtMostOne => s.log_uniform(-3.0, 0.0),
        }
    }

    fn point(&self, s: &mut Sampler, b: f64, a: Scalar) -> Point {
        let ctx = *s.ctx();
        let x = self.var_of(&ctx.from_f64(b), &ctx);
        Point::new(vec![x], vec![a], vec![])
    }
}

impl Form for Binomial {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let a = pt.param(0);
        let b = self.base_of(pt.var(0), ctx);
        let lhs = pow_scalar(&b, a, ctx)?;
        let rhs = ctx.val(1 + ctx.val(a * ctx.val(&b - 1u32)));
        Ok((lhs, rhs))
    }
    fn valid(&self, pt: &Point, region: Region, ctx: &PrecisionContext) -> bool {
        let b = self.base_of(pt.var(0), ctx);
        let in_range = match self.range {
            BaseRange::Positive => b > 0,
            BaseRange::AtLeastOne => b >= 1,
            BaseRange::AtMostOne => b > 0 && b <= 1,
        };
        in_range && self.set(region).contains(pt.param(0))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        let b = self.base_of(pt.var(0), ctx);
        approx_eq(&b, &ctx.one(), ctx) || is_zero_or_one(pt.param(0))
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let a = alpha(s, self.set(region));
        let b = self.draw_base(s);
        self.point(s, b, a)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        let set = self.set(region);
        if set.has_endpoints() && s.bound(0).is_none() && s.coin(0.4) {
            let a = if s.coin(0.5) { 0.0 } else { 1.0 };
            let b = self.draw_base(s);
            let a = s.s(a);
            return self.point(s, b, a);
        }
        let a = alpha(s, set);
        self.point(s, 1.0, a)
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let a = alpha(s, self.set(region));
        let up = match self.range {
            BaseRange::Positive => s.coin(0.5),
            BaseRange::AtLeastOne => true,
            BaseRange::AtMostOne => false,
        };
        let b = if up { 1.0 + rel } else { 1.0 - rel };
        self.point(s, b, a)
    }
}

fn int_point(s: &mut Sampler, x: Scalar, n: f64) -> Point {
    let n = s.s(n);
    Point::new(vec![x], vec![n], vec![])
}

/// `(1+x)^n >= 1 + n x` for integer `n >= 2`.
struct OriginalBernoulli;

impl OriginalBernoulli {
    fn n(s: &mut Sampler) -> f64 {
        s.int_param(0, 2, 12)
    }
}

impl Form for OriginalBernoulli {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, n) = (pt.var(0), pt.param(0));
        Ok((
            pow_scalar(&ctx.val(1 + x), n, ctx)?,
            ctx.val(1 + ctx.val(n * x)),
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        *pt.var(0) >= 0 && *pt.param(0) >= 2
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(&ctx.val(1 + pt.var(0)), &ctx.one(), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = Self::n(s);
        let x = s.pos_s();
        int_point(s, x, n)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let n = Self::n(s);
        let x = s.s(0.0);
        int_point(s, x, n)
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let n = Self::n(s);
        let x = s.s(rel);
        int_point(s, x, n)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match bound[0] {
            Some(n) if n < 2.0 => Err(format!("n must be an integer >= 2, got {n}")),
            _ => Ok(()),
        }
    }
}

fn barrow_term(y: &Scalar, k: &Scalar, ctx: &PrecisionContext) -> Result<Scalar> {
    Ok(ctx.val(ctx.val(pow_scalar(y, k, ctx)? - 1u32) / k))
}

fn y_near_one(s: &mut Sampler, rel: f64) -> Scalar {
    let one = s.s(1.0);
    s.bump(&one, rel)
}

/// `(y^{n+1} - 1)/(n+1) >= (y^n - 1)/n`, `y > 0`, integer `n >= 1`.
struct BarrowLemma;

impl BarrowLemma {
    fn n(s: &mut Sampler) -> f64 {
        s.int_param(0, 1, 10)
    }
}

impl Form for BarrowLemma {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (y, n) = (pt.var(0), pt.param(0));
        Ok((
            barrow_term(y, &ctx.val(n + 1u32), ctx)?,
            barrow_term(y, n, ctx)?,
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && *pt.param(0) >= 1
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), &ctx.one(), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = Self::n(s);
        let y = s.pos_s();
        int_point(s, y, n)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let n = Self::n(s);
        let y = s.s(1.0);
        int_point(s, y, n)
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let n = Self::n(s);
        let y = y_near_one(s, rel);
        int_point(s, y, n)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match bound[0] {
            Some(n) if n < 1.0 => Err(format!("n must be an integer >= 1, got {n}")),
            _ => Ok(()),
        }
    }
}

/// `(y^p - 1)/p >= (y^q - 1)/q` for integers `p > q >= 2`.
struct BarrowCorollary;

impl BarrowCorollary {
    fn pq(s: &mut Sampler) -> Vec<Scalar> {
        let q = s.int_param(1, 2, 8);
        let p = s.param_or(0, |s| q + s.index(6) as f64 + 1.0);
        vec![s.s(p), s.s(q)]
    }

    fn point(s: &mut Sampler, y: Scalar) -> Point {
        let params = Self::pq(s);
        Point::new(vec![y], params, vec![])
    }
}

impl Form for BarrowCorollary {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let y = pt.var(0);
        Ok((
            barrow_term(y, pt.param(0), ctx)?,
            barrow_term(y, pt.param(1), ctx)?,
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && pt.param(0) > pt.param(1) && *pt.param(1) >= 2
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), &ctx.one(), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let y = s.pos_s();
        Self::point(s, y)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let y = s.s(1.0);
        Self::point(s, y)
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let y = y_near_one(s, rel);
        Self::point(s, y)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        if let Some(q) = bound[1] {
            if q < 2.0 {
                return Err(format!("q must be an integer >= 2, got {q}"));
            }
        }
        match (bound[0], bound[1]) {
            (Some(p), Some(q)) if p <= q => Err(format!("p > q required, got p={p}, q={q}")),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy)]
enum TwoPointKind {
    /// `α a^{α-1}(a-b) <= a^α - b^α`
    Lower,
    /// `a^α - b^α <= α b^{α-1}(a-b)`
    Upper,
    /// `(α-1) a^α + b^α >= α a^{α-1} b`
    Jacobsthal,
}

struct TwoPoint {
    kind: TwoPointKind,
    primary: AlphaSet,
    complement: AlphaSet,
}

impl TwoPoint {
    fn set(&self, region: Region) -> AlphaSet {
        match region {
            Region::Primary => self.primary,
            Region::Complement => self.complement,
        }
    }

    fn point(a: Scalar, b: Scalar, alpha: Scalar) -> Point {
        Point::new(vec![a, b], vec![alpha], vec![])
    }
}

impl Form for TwoPoint {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (a, b, al) = (pt.var(0), pt.var(1), pt.param(0));
        let am1 = ctx.val(al - 1u32);
        let diff = ctx.val(a - b);
        Ok(match self.kind {
            TwoPointKind::Lower => {
                let lhs = ctx.val(al * pow_scalar(a, &am1, ctx)?) * &diff;
                (
                    ctx.val(lhs),
                    ctx.val(pow_scalar(a, al, ctx)? - pow_scalar(b, al, ctx)?),
                )
            }
            TwoPointKind::Upper => {
                let rhs = ctx.val(al * pow_scalar(b, &am1, ctx)?) * &diff;
                (
                    ctx.val(pow_scalar(a, al, ctx)? - pow_scalar(b, al, ctx)?),
                    ctx.val(rhs),
                )
            }
            TwoPointKind::Jacobsthal => {
                let lhs = ctx.val(&am1 * pow_scalar(a, al, ctx)?) + pow_scalar(b, al, ctx)?;
                let rhs = ctx.val(al * pow_scalar(a, &am1, ctx)?) * b;
                (ctx.val(lhs), ctx.val(rhs))
            }
        })
    }
    fn valid(&self, pt: &Point, region: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && pos(pt.var(1)) && self.set(region).contains(pt.param(0))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), pt.var(1), ctx) || is_zero_or_one(pt.param(0))
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let al = alpha(s, self.set(region));
        let (a, b) = (s.pos_s(), s.pos_s());
        Self::point(a, b, al)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        let set = self.set(region);
        if s.bound(0).is_none() && s.coin(0.4) {
            let v = if s.coin(0.5) { 0.0 } else { 1.0 };
            let al = s.s(v);
            let (a, b) = (s.pos_s(), s.pos_s());
            return Self::point(a, b, al);
        }
        let al = alpha(s, set);
        let a = s.pos_s();
        Self::point(a.clone(), a, al)
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let al = alpha(s, self.set(region));
        let a = s.pos_s();
        let b = s.bump(&a, rel);
        Self::point(a, b, al)
    }
}

/// `(1+x/p)^p <= (1+x/q)^q` for `p <= q` of one sign, reversed when
/// `p < 0 < q`; both bases positive.
struct Bush;

fn bush_base(x: &Scalar, r: &Scalar, ctx: &PrecisionContext) -> Scalar {
    ctx.val(1 + ctx.val(x / r))
}

impl Bush {
    fn pq(s: &mut Sampler, region: Region) -> (f64, f64) {
        let mag = |s: &mut Sampler| s.log_uniform(-1.0, 1.0);
        match region {
            Region::Primary => {
                let sign = match s.bound(0).or(s.bound(1)) {
                    Some(v) => v.signum(),
                    None if s.coin(0.5) => 1.0,
                    None => -1.0,
                };
                match (s.bound(0), s.bound(1)) {
                    (Some(p), Some(q)) => (p, q),
                    (Some(p), None) => {
                        let f = 1.0 + mag(s);
                        (p, if p > 0.0 { p * f } else { p / f })
                    }
                    (None, Some(q)) => {
                        let f = 1.0 + mag(s);
                        (if q > 0.0 { q / f } else { q * f }, q)
                    }
                    (None, None) => {
                        let (u, v) = (sign * mag(s), sign * mag(s));
                        (u.min(v), u.max(v))
                    }
                }
            }
            Region::Complement => {
                let p = s.param_or(0, |s| -mag(s));
                let q = s.param_or(1, mag);
                (p, q)
            }
        }
    }

    /// `x` with both bases positive, given the base `b` of the tighter constraint.
    fn x_for(p: f64, q: f64, b: f64, s: &mut Sampler) -> Scalar {
        let ctx = *s.ctx();
        let r = if p > 0.0 && q > 0.0 {
            p.min(q)
        } else if p < 0.0 && q < 0.0 {
            p.max(q)
        } else {
            // Mixed signs: x lies in (-max, -min) of the pair; pick the side.
            if s.coin(0.5) {
                p.max(q)
            } else {
                p.min(q)
            }
        };
        ctx.val(ctx.from_f64(r) * ctx.from_f64(b - 1.0))
    }

    fn point(s: &mut Sampler, x: Scalar, p: f64, q: f64) -> Point {
        Point::new(vec![x], vec![s.s(p), s.s(q)], vec![])
    }
}

impl Form for Bush {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, p, q) = (pt.var(0), pt.param(0), pt.param(1));
        Ok((
            pow_scalar(&bush_base(x, p, ctx), p, ctx)?,
            pow_scalar(&bush_base(x, q, ctx), q, ctx)?,
        ))
    }
    fn valid(&self, pt: &Point, region: Region, ctx: &PrecisionContext) -> bool {
        let (x, p, q) = (pt.var(0), pt.param(0), pt.param(1));
        if p.is_zero() || q.is_zero() {
            return false;
        }
        if !(bush_base(x, p, ctx) > 0 && bush_base(x, q, ctx) > 0) {
            return false;
        }
        match region {
            Region::Primary => p <= q && p.is_sign_positive() == q.is_sign_positive(),
            Region::Complement => *p < 0 && *q > 0,
        }
    }
    fn equal(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pt.var(0).is_zero() || pt.param(0) == pt.param(1)
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let (p, q) = Self::pq(s, region);
        let x = if p * q < 0.0 {
            // Both bases positive means x in (-max(p, q), -min(p, q)).
            let (lo, hi) = (-p.max(q), -p.min(q));
            let u = s.uniform(1e-3, 1.0 - 1e-3);
            s.s(lo + (hi - lo) * u)
        } else {
            let b = s.log_uniform(-3.0, 3.0);
            Self::x_for(p, q, b, s)
        };
        Self::point(s, x, p, q)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        let (p, q) = Self::pq(s, region);
        if region == Region::Primary && s.bound(0).is_none() && s.bound(1).is_none() && s.coin(0.4)
        {
            let b = s.log_uniform(-3.0, 3.0);
            let x = Self::x_for(q, q, b, s);
            return Self::point(s, x, q, q);
        }
        let x = s.s(0.0);
        Self::point(s, x, p, q)
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let (p, q) = Self::pq(s, region);
        let b = if s.coin(0.5) { 1.0 + rel } else { 1.0 - rel };
        let x = Self::x_for(p, q, b, s);
        Self::point(s, x, p, q)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        if bound.iter().flatten().any(|v| *v == 0.0) {
            return Err("p and q must be non-zero".into());
        }
        Ok(())
    }
}

/// `Π (1+a_i)^{w_i} <= 1 + Σ w_i a_i` for `a_i > -1`, `w_i > 0`, `W <= 1`.
struct Pecaric;

impl Pecaric {
    /// Positive weights with total `W`, exactly 1 with some probability.
    fn weights(s: &mut Sampler, n: usize, unit: bool) -> Vec<Scalar> {
        let raw = s.pos_tuple(n);
        let ctx = *s.ctx();
        let total = if unit || s.coin(0.3) {
            1.0
        } else {
            s.uniform(1e-2, 1.0)
        };
        let w = sum(&raw, &ctx);
        raw.iter()
            .map(|r| ctx.val(ctx.val(r / &w) * total))
            .collect()
    }

    fn shifted(s: &mut Sampler, b: Vec<Scalar>) -> Vec<Scalar> {
        let ctx = *s.ctx();
        b.iter().map(|v| ctx.val(v - 1u32)).collect()
    }
}

impl Form for Pecaric {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let g = ctx.prec() + 32;
        let (a, w) = (pt.tuple(0), pt.tuple(1));
        let mut log = rug::Float::new(g);
        let mut lin = rug::Float::new(g);
        for (ai, wi) in a.iter().zip(w) {
            let b = rug::Float::with_val(g, 1 + ai);
            if b <= 0 {
                return Err(crate::error::Error::NonPositiveBase);
            }
            log += b.ln() * wi;
            lin += rug::Float::with_val(g, ai * wi);
        }
        Ok((
            crate::numerics::finite(ctx.val(log.exp()))?,
            ctx.val(1 + lin),
        ))
    }
    fn valid(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        let total = sum(pt.tuple(1), ctx);
        pt.tuple(0).iter().all(|a| a.is_finite() && *a > -1)
            && all_pos(pt.tuple(1))
            && (total <= 1 || approx_eq(&total, &ctx.one(), ctx))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        let a = pt.tuple(0);
        let zero = ctx.zero();
        let unit = approx_eq(&sum(pt.tuple(1), ctx), &ctx.one(), ctx);
        (unit && constant(a, ctx)) || a.iter().all(|x| approx_eq(x, &zero, ctx))
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(1, 10);
        let b = s.pos_tuple(n);
        let a = Self::shifted(s, b);
        let w = Self::weights(s, n, false);
        Point::new(vec![], vec![], vec![a, w])
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(1, 10);
        if s.coin(0.3) {
            let a = vec![s.s(0.0); n];
            let w = Self::weights(s, n, false);
            return Point::new(vec![], vec![], vec![a, w]);
        }
        let c = s.pos_s();
        let a = Self::shifted(s, vec![c; n]);
        let w = Self::weights(s, n, true);
        Point::new(vec![], vec![], vec![a, w])
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let n = s.len(2, 10);
        let c = s.pos_s();
        let mut b = vec![c; n];
        let i = s.index(n);
        b[i] = s.bump(&b[i], rel);
        let a = Self::shifted(s, b);
        let w = Self::weights(s, n, true);
        Point::new(vec![], vec![], vec![a, w])
    }
}

const N_SLOT: &[ParamSlot] = &[int("n")];
const PQ_INT: &[ParamSlot] = &[int("p"), int("q")];
const PQ_REAL: &[ParamSlot] = &[real("p"), real("q")];

pub(super) fn register(v: &mut Vec<Entry>) {
    use AlphaSet::*;
    use Direction::*;

    const X_ALPHA: Layout = Layout {
        vars: &["x"],
        params: &[real("alpha")],
        tuples: &[],
    };
    const AB_ALPHA: Layout = Layout {
        vars: &["a", "b"],
        params: &[real("alpha")],
        tuples: &[],
    };

    let e =
        |name, reference, layout, direction, formula, validity, equality, form: Box<dyn Form>| {
            Entry {
                name,
                reference,
                layout,
                direction,
                has_complement: false,
                formula,
                validity,
                equality,
                complement_validity: "",
                note: "",
                fixed: &[],
                form,
            }
        };
    let binomial = |base, range, primary, complement| {
        Box::new(Binomial {
            base,
            range,
            primary,
            complement,
        }) as Box<dyn Form>
    };
    let with_complement = |entry: Entry, cv: &'static str| Entry {
        has_complement: true,
        complement_validity: cv,
        ..entry
    };

    v.push(with_complement(
        e(
            "BERNOULLI_B1",
            "§4.1 (B1) Eq (1)",
            X_ALPHA,
            LeqHolds,
            "(1+x)^alpha <= 1 + alpha x",
            "x >= 0, 0 <= alpha <= 1",
            "x = 0 or alpha in {0, 1}",
            binomial(Base::Plus, BaseRange::AtLeastOne, Unit, Some(Outside)),
        ),
        "x >= 0, alpha < 0 or alpha > 1",
    ));
    v.push(Entry {
        note: "x range is -1 < x <= 0, the image of x >= 0 under -x/(1+x)",
        ..with_complement(
            e(
                "BERNOULLI_B2",
                "§4.1 (B2) Eq (1)",
                X_ALPHA,
                LeqHolds,
                "(1+x)^alpha <= 1 + alpha x",
                "-1 < x <= 0, 0 <= alpha <= 1",
                "x = 0 or alpha in {0, 1}",
                binomial(Base::Plus, BaseRange::AtMostOne, Unit, Some(Outside)),
            ),
            "-1 < x <= 0, alpha < 0 or alpha > 1",
        )
    });
    v.push(e(
        "BERNOULLI_B3",
        "§4.1 (B3) Eq (1)",
        X_ALPHA,
        LeqHolds,
        "(1+x)^alpha <= 1 + alpha x",
        "x > -1, 0 <= alpha <= 1",
        "x = 0 or alpha in {0, 1}",
        binomial(Base::Plus, BaseRange::Positive, Unit, None),
    ));
    v.push(Entry {
        note: "x range widened from x > 0 to x > -1 so that E = {x = 0} lies in V",
        ..e(
            "BERNOULLI_B4",
            "§4.1 (B4) Eq (~1)",
            X_ALPHA,
            GeqHolds,
            "(1+x)^alpha >= 1 + alpha x",
            "x > -1, alpha > 1",
            "x = 0",
            binomial(Base::Plus, BaseRange::Positive, AboveOne, None),
        )
    });
    v.push(Entry {
        note: "x range widened from x > 0 to x > -1 so that E = {x = 0} lies in V",
        ..e(
            "BERNOULLI_B5",
            "§4.1 (B5) Eq (~1)",
            X_ALPHA,
            GeqHolds,
            "(1+x)^alpha >= 1 + alpha x",
            "x > -1, alpha < 0",
            "x = 0",
            binomial(Base::Plus, BaseRange::Positive, BelowZero, None),
        )
    });
    v.push(with_complement(
        e(
            "BERNOULLI_FULL",
            "§4.1 (B) Eq (1),(~1)",
            X_ALPHA,
            LeqHolds,
            "(1+x)^alpha <= 1 + alpha x",
            "x > -1, 0 <= alpha <= 1",
            "x = 0 or alpha in {0, 1}",
            binomial(Base::Plus, BaseRange::Positive, Unit, Some(Outside)),
        ),
        "x > -1, alpha < 0 or alpha > 1",
    ));
    v.push(with_complement(
        e(
            "NEG_REFLECT",
            "Ex 4.2.1.1 Eq (5)",
            X_ALPHA,
            LeqHolds,
            "(1-x)^alpha <= 1 - alpha x",
            "x < 1, 0 <= alpha <= 1",
            "x = 0 or alpha in {0, 1}",
            binomial(Base::Minus, BaseRange::Positive, Unit, Some(OutsideClosed)),
        ),
        "x < 1, alpha <= 0 or alpha >= 1",
    ));
    v.push(with_complement(
        e(
            "POWER_SECANT",
            "Ex 4.2.1.2 Eq (6)",
            X_ALPHA,
            LeqHolds,
            "x^alpha <= (1 - alpha) + alpha x",
            "x > 0, 0 <= alpha <= 1",
            "x = 1 or alpha in {0, 1}",
            binomial(Base::Raw, BaseRange::Positive, Unit, Some(OutsideClosed)),
        ),
        "x > 0, alpha <= 0 or alpha >= 1",
    ));
    v.push(Entry {
        note: "V is closed at x = 0 and E is {x = 0}; at x = 1 the inequality is strict",
        ..e(
            "ORIGINAL_BERNOULLI",
            "§4.1.5",
            Layout {
                vars: &["x"],
                params: N_SLOT,
                tuples: &[],
            },
            GeqHolds,
            "(1+x)^n >= 1 + n x",
            "x >= 0, n integer >= 2",
            "x = 0",
            Box::new(OriginalBernoulli),
        )
    });
    v.push(e(
        "BARROW_LEMMA",
        "Eq 4(3)",
        Layout {
            vars: &["y"],
            params: N_SLOT,
            tuples: &[],
        },
        GeqHolds,
        "(y^(n+1) - 1)/(n+1) >= (y^n - 1)/n",
        "y > 0, n integer >= 1",
        "y = 1",
        Box::new(BarrowLemma),
    ));
    v.push(e(
        "BARROW_COROLLARY",
        "Eq 4(3) corollary",
        Layout {
            vars: &["y"],
            params: PQ_INT,
            tuples: &[],
        },
        GeqHolds,
        "(y^p - 1)/p >= (y^q - 1)/q",
        "y > 0, p > q >= 2 integers",
        "y = 1",
        Box::new(BarrowCorollary),
    ));
    v.push(with_complement(
        e(
            "RUTHING",
            "§4.2.2.3 Eq (7)",
            AB_ALPHA,
            LeqHolds,
            "alpha a^(alpha-1) (a - b) <= a^alpha - b^alpha",
            "a, b > 0, 0 <= alpha <= 1",
            "a = b or alpha in {0, 1}",
            Box::new(TwoPoint {
                kind: TwoPointKind::Lower,
                primary: Unit,
                complement: OutsideClosed,
            }),
        ),
        "a, b > 0, alpha <= 0 or alpha >= 1",
    ));
    v.push(with_complement(
        e(
            "RUTHING_UPPER",
            "§4.2.2.3 Eq (7)",
            AB_ALPHA,
            LeqHolds,
            "a^alpha - b^alpha <= alpha b^(alpha-1) (a - b)",
            "a, b > 0, 0 <= alpha <= 1",
            "a = b or alpha in {0, 1}",
            Box::new(TwoPoint {
                kind: TwoPointKind::Upper,
                primary: Unit,
                complement: OutsideClosed,
            }),
        ),
        "a, b > 0, alpha <= 0 or alpha >= 1",
    ));
    v.push(Entry {
        note: "rearranged left part of RUTHING; the printed form `alpha a^alpha + b^alpha` is not sharp",
        ..with_complement(
            e(
                "JACOBSTHAL",
                "§4.2.2.3",
                AB_ALPHA,
                GeqHolds,
                "(alpha - 1) a^alpha + b^alpha >= alpha a^(alpha-1) b",
                "a, b > 0, alpha <= 0 or alpha >= 1",
                "a = b or alpha in {0, 1}",
                Box::new(TwoPoint {
                    kind: TwoPointKind::Jacobsthal,
                    primary: OutsideClosed,
                    complement: Unit,
                }),
            ),
            "a, b > 0, 0 <= alpha <= 1",
        )
    });
    v.push(Entry {
        note: "sign rule: (8) when p, q share a sign, (~8) when p < 0 < q",
        ..with_complement(
            e(
                "BUSH",
                "§4.2.2.6 Eq (8)",
                Layout {
                    vars: &["x"],
                    params: PQ_REAL,
                    tuples: &[],
                },
                LeqHolds,
                "(1 + x/p)^p <= (1 + x/q)^q",
                "p <= q of the same sign, 1 + x/p > 0, 1 + x/q > 0",
                "x = 0 or p = q",
                Box::new(Bush),
            ),
            "p < 0 < q, 1 + x/p > 0, 1 + x/q > 0",
        )
    });
    v.push(Entry {
        note: "a = 0 with any W is kept in E; it lies in V since a_i > -1",
        ..e(
            "PECARIC",
            "§4.2.3 Eq (10)",
            Layout {
                vars: &[],
                params: &[],
                tuples: &["a", "w"],
            },
            LeqHolds,
            "prod (1 + a_i)^(w_i) <= 1 + sum w_i a_i",
            "a_i > -1, w in P^n, W_n <= 1",
            "W_n = 1 and a constant, or a = 0",
            Box::new(Pecaric),
        )
    });
}
