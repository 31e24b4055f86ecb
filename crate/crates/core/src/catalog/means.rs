//! Arithmetic–geometric family, Young, Rado, Popoviciu, power means and
//! the midpoint forms of log concavity and exp convexity.

use rug::Float;

use super::{
    all_pos, constant, is_zero_or_one, pos, real, sum, Direction, Entry, Form, Layout, ParamKind,
    ParamSlot, Point, Region, Sampler,
};
use crate::error::Result;
use crate::means::{arithmetic_of, geometric_of, power_of};
use crate::numerics::{approx_eq, exp_scalar, ln_scalar, pow_scalar, PrecisionContext, Scalar};

const XY: &[&str] = &["x", "y"];
const A: &[&str] = &["a"];
const AW: &[&str] = &["a", "w"];

fn ones(n: usize, ctx: &PrecisionContext) -> Vec<Scalar> {
    vec![ctx.one(); n]
}

fn pair(s: &mut Sampler) -> Point {
    Point::new(vec![s.pos_s(), s.pos_s()], vec![], vec![])
}

fn equal_pair(s: &mut Sampler, params: Vec<Scalar>) -> Point {
    let c = s.pos_s();
    Point::new(vec![c.clone(), c], params, vec![])
}

fn split_pair(s: &mut Sampler, params: Vec<Scalar>, rel: f64) -> Point {
    let c = s.pos_s();
    let d = s.bump(&c, rel);
    Point::new(vec![c, d], params, vec![])
}

/// A constant tuple of length `n` with one entry bumped.
fn bumped_constant(s: &mut Sampler, n: usize, rel: f64) -> Vec<Scalar> {
    let c = s.pos_s();
    let mut a = vec![c; n];
    let i = s.index(n);
    a[i] = s.bump(&a[i], rel);
    a
}

struct Ga2e;

impl Form for Ga2e {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, y) = (pt.var(0), pt.var(1));
        Ok((ctx.val(x * y).sqrt(), ctx.val(x + y) / 2u32))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && pos(pt.var(1))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), pt.var(1), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        pair(s)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        equal_pair(s, vec![])
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        split_pair(s, vec![], rel)
    }
}

/// `G_n(a) <= A_n(a)`, equal weights (`weighted = false`) or general weights.
struct GaN {
    weighted: bool,
}

impl GaN {
    fn weights<'a>(&self, pt: &'a Point, ctx: &PrecisionContext) -> std::borrow::Cow<'a, [Scalar]> {
        if self.weighted {
            std::borrow::Cow::Borrowed(pt.tuple(1))
        } else {
            std::borrow::Cow::Owned(ones(pt.len(), ctx))
        }
    }

    fn tuples(&self, a: Vec<Scalar>, s: &mut Sampler) -> Vec<Vec<Scalar>> {
        if self.weighted {
            let w = s.pos_tuple(a.len());
            vec![a, w]
        } else {
            vec![a]
        }
    }
}

impl Form for GaN {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let w = self.weights(pt, ctx);
        Ok((
            geometric_of(pt.tuple(0), &w, ctx)?,
            arithmetic_of(pt.tuple(0), &w, ctx),
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pt.tuples.iter().all(|t| all_pos(t))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        constant(pt.tuple(0), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let a = s.pos_tuple(n);
        let t = self.tuples(a, s);
        Point::new(vec![], vec![], t)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let c = s.pos_s();
        let t = self.tuples(vec![c; n], s);
        Point::new(vec![], vec![], t)
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let n = s.len(2, 10);
        let a = bumped_constant(s, n, rel);
        let t = self.tuples(a, s);
        Point::new(vec![], vec![], t)
    }
}

fn product(xs: &[Scalar], ctx: &PrecisionContext) -> Scalar {
    let mut p = Float::with_val(ctx.prec() + 32, 1);
    for x in xs {
        p *= x;
    }
    ctx.round(&p)
}

/// `n <= Σ a_i` when `Π a_i = 1`.
struct Prod1Sum;

impl Form for Prod1Sum {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        Ok((ctx.from_f64(pt.len() as f64), sum(pt.tuple(0), ctx)))
    }
    fn valid(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        all_pos(pt.tuple(0)) && approx_eq(&product(pt.tuple(0), ctx), &ctx.one(), ctx)
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        constant(pt.tuple(0), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let raw = s.pos_tuple(n);
        let ctx = *s.ctx();
        let g = geometric_of(&raw, &ones(n, &ctx), &ctx).expect("positive tuple");
        let a = raw.iter().map(|x| ctx.val(x / &g)).collect();
        Point::new(vec![], vec![], vec![a])
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        Point::new(vec![], vec![], vec![ones(n, s.ctx())])
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let n = s.len(2, 10);
        let ctx = *s.ctx();
        let mut a = ones(n, &ctx);
        a[0] = ctx.from_f64(1.0 + rel);
        a[1] = ctx.val(a[0].recip_ref());
        Point::new(vec![], vec![], vec![a])
    }
    fn min_len(&self) -> usize {
        2
    }
}

/// `Π a_i <= (1/n)^n` when `Σ a_i = 1`.
struct Sum1Prod;

impl Form for Sum1Prod {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let n = pt.len() as u32;
        let rhs = ctx.val(rug::ops::Pow::pow(ctx.from_f64(n as f64).recip(), n));
        Ok((product(pt.tuple(0), ctx), rhs))
    }
    fn valid(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        all_pos(pt.tuple(0)) && approx_eq(&sum(pt.tuple(0), ctx), &ctx.one(), ctx)
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        constant(pt.tuple(0), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let raw = s.pos_tuple(n);
        let ctx = *s.ctx();
        let total = sum(&raw, &ctx);
        let a = raw.iter().map(|x| ctx.val(x / &total)).collect();
        Point::new(vec![], vec![], vec![a])
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let c = s.ctx().from_f64(n as f64).recip();
        Point::new(vec![], vec![], vec![vec![c; n]])
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let n = s.len(2, 10);
        let ctx = *s.ctx();
        let c = ctx.from_f64(n as f64).recip();
        let mut a = vec![c.clone(); n];
        a[0] = ctx.val(&c * (1.0 + rel));
        a[1] = ctx.val(ctx.val(&c * 2u32) - &a[0]);
        Point::new(vec![], vec![], vec![a])
    }
    fn min_len(&self) -> usize {
        2
    }
}

/// `x^(1-α) y^α <= (1-α)x + αy`. The two-weight form has `0 < α < 1` and no
/// complement; the complete form closes `[0, 1]` and reverses outside it.
struct Ga2Alpha {
    complete: bool,
}

impl Ga2Alpha {
    fn alpha_ok(&self, a: &Scalar, region: Region) -> bool {
        match (region, self.complete) {
            (Region::Primary, false) => *a > 0 && *a < 1,
            (Region::Primary, true) => super::in_unit(a),
            (Region::Complement, _) => *a < 0 || *a > 1,
        }
    }

    fn alpha(&self, s: &mut Sampler, region: Region) -> Scalar {
        let a = match region {
            Region::Primary => s.param(0, 0.0, 1.0),
            Region::Complement => s.param_or(0, |s| {
                if s.coin(0.5) {
                    -s.uniform(1e-3, 5.0)
                } else {
                    1.0 + s.uniform(1e-3, 5.0)
                }
            }),
        };
        s.s(a)
    }
}

impl Form for Ga2Alpha {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, y, a) = (pt.var(0), pt.var(1), pt.param(0));
        let b = ctx.val(1 - a);
        let lhs = ctx.val(pow_scalar(x, &b, ctx)? * pow_scalar(y, a, ctx)?);
        let rhs = ctx.val(&b * x + a * y);
        Ok((lhs, rhs))
    }
    fn valid(&self, pt: &Point, region: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && pos(pt.var(1)) && self.alpha_ok(pt.param(0), region)
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), pt.var(1), ctx) || (self.complete && is_zero_or_one(pt.param(0)))
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let a = self.alpha(s, region);
        let mut p = pair(s);
        p.params = vec![a];
        p
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        if self.complete && region == Region::Primary && s.bound(0).is_none() && s.coin(0.3) {
            let a = if s.coin(0.5) { 0.0 } else { 1.0 };
            let mut p = pair(s);
            p.params = vec![s.s(a)];
            return p;
        }
        let a = self.alpha(s, region);
        equal_pair(s, vec![a])
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let a = self.alpha(s, region);
        split_pair(s, vec![a], rel)
    }
}

/// `xy <= x^p/p + y^q/q` with `q = p/(p-1)`.
struct Young;

fn conjugate(p: &Scalar, ctx: &PrecisionContext) -> Scalar {
    ctx.val(p / ctx.val(p - 1u32))
}

impl Young {
    fn p(s: &mut Sampler) -> Scalar {
        let p = s.param_or(0, |s| 1.0 + s.log_uniform(-1.5, 1.0));
        s.s(p)
    }
}

impl Form for Young {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, y, p) = (pt.var(0), pt.var(1), pt.param(0));
        let q = conjugate(p, ctx);
        let rhs = ctx.val(pow_scalar(x, p, ctx)? / p + pow_scalar(y, &q, ctx)? / &q);
        Ok((ctx.val(x * y), rhs))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && pos(pt.var(1)) && *pt.param(0) > 1
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        let (x, y, p) = (pt.var(0), pt.var(1), pt.param(0));
        let q = conjugate(p, ctx);
        match (pow_scalar(x, p, ctx), pow_scalar(y, &q, ctx)) {
            (Ok(a), Ok(b)) => approx_eq(&a, &b, ctx),
            _ => false,
        }
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let p = Self::p(s);
        let mut pt = pair(s);
        pt.params = vec![p];
        pt
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let p = Self::p(s);
        let x = s.pos_s();
        let ctx = *s.ctx();
        let y = pow_scalar(&x, &ctx.val(&p - 1u32), &ctx).expect("positive base");
        Point::new(vec![x, y], vec![p], vec![])
    }
    fn near_equality(&self, s: &mut Sampler, r: Region, rel: f64) -> Point {
        let mut pt = self.equality_point(s, r);
        pt.vars[1] = s.bump(&pt.vars[1], rel);
        pt
    }
}

fn weighted_sample(s: &mut Sampler, a: Vec<Scalar>) -> Point {
    let w = s.pos_tuple(a.len());
    Point::new(vec![], vec![], vec![a, w])
}

fn prefix_means(pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
    let n = pt.len();
    let (a, w) = (&pt.tuple(0)[..n - 1], &pt.tuple(1)[..n - 1]);
    Ok((arithmetic_of(a, w, ctx), geometric_of(a, w, ctx)?))
}

/// `W_n(A_n - G_n) >= W_{n-1}(A_{n-1} - G_{n-1})`.
struct Rado;

impl Form for Rado {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let t = crate::means::WeightedTuple::new(pt.tuple(0).to_vec(), pt.tuple(1).to_vec())?;
        let n = t.len();
        Ok((
            crate::means::rado_gap(&t, n, ctx)?,
            crate::means::rado_gap(&t, n - 1, ctx)?,
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pt.tuples.iter().all(|t| all_pos(t))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        match prefix_means(pt, ctx) {
            Ok((_, g)) => approx_eq(&pt.tuple(0)[pt.len() - 1], &g, ctx),
            Err(_) => false,
        }
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let a = s.pos_tuple(n);
        weighted_sample(s, a)
    }
    fn equality_point(&self, s: &mut Sampler, r: Region) -> Point {
        let mut pt = self.sample(s, r);
        let ctx = *s.ctx();
        let (_, g) = prefix_means(&pt, &ctx).expect("positive tuple");
        let n = pt.len();
        pt.tuples[0][n - 1] = g;
        pt
    }
    fn near_equality(&self, s: &mut Sampler, r: Region, rel: f64) -> Point {
        let mut pt = self.equality_point(s, r);
        let n = pt.len();
        pt.tuples[0][n - 1] = s.bump(&pt.tuples[0][n - 1], rel);
        pt
    }
    fn min_len(&self) -> usize {
        2
    }
}

/// `(A_n/G_n)^e(n) >= (A_{n-1}/G_{n-1})^e(n-1)` with `e = W` (`conv = 0`) or
/// `e = 1/W` (`conv = 1`).
struct Popoviciu;

const CONVENTION: ParamSlot = ParamSlot {
    name: "conv",
    kind: ParamKind::Integer,
    default: Some(0.0),
};

impl Form for Popoviciu {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        use crate::means::{popoviciu_ratio, PopoviciuConvention, WeightedTuple};
        let t = WeightedTuple::new(pt.tuple(0).to_vec(), pt.tuple(1).to_vec())?;
        let conv = if pt.param(0).is_zero() {
            PopoviciuConvention::ExponentWk
        } else {
            PopoviciuConvention::ExponentInvWk
        };
        let n = t.len();
        Ok((
            popoviciu_ratio(&t, n, conv, ctx)?,
            popoviciu_ratio(&t, n - 1, conv, ctx)?,
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pt.tuples.iter().all(|t| all_pos(t)) && (pt.param(0).is_zero() || *pt.param(0) == 1)
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        match prefix_means(pt, ctx) {
            Ok((a, _)) => approx_eq(&pt.tuple(0)[pt.len() - 1], &a, ctx),
            Err(_) => false,
        }
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let n = s.len(2, 10);
        let a = s.pos_tuple(n);
        let mut pt = weighted_sample(s, a);
        pt.params = vec![s.s(s.bound(0).unwrap_or(0.0))];
        pt
    }
    fn equality_point(&self, s: &mut Sampler, r: Region) -> Point {
        let mut pt = self.sample(s, r);
        let ctx = *s.ctx();
        let (a, _) = prefix_means(&pt, &ctx).expect("positive tuple");
        let n = pt.len();
        pt.tuples[0][n - 1] = a;
        pt
    }
    fn near_equality(&self, s: &mut Sampler, r: Region, rel: f64) -> Point {
        let mut pt = self.equality_point(s, r);
        let n = pt.len();
        pt.tuples[0][n - 1] = s.bump(&pt.tuples[0][n - 1], rel);
        pt
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match bound[0] {
            Some(v) if v != 0.0 && v != 1.0 => {
                Err("conv must be 0 (exponent W_k) or 1 (exponent 1/W_k)".into())
            }
            _ => Ok(()),
        }
    }
    fn min_len(&self) -> usize {
        2
    }
}

/// `M^[r](a; w) <= M^[s](a; w)` for `r < s`.
struct PowerMean;

impl PowerMean {
    fn rs(s: &mut Sampler) -> (Scalar, Scalar) {
        let (r, t) = match (s.bound(0), s.bound(1)) {
            (Some(r), Some(t)) => (r, t),
            (Some(r), None) => (r, r + s.uniform(1e-2, 10.0)),
            (None, Some(t)) => (t - s.uniform(1e-2, 10.0), t),
            (None, None) => {
                let (u, v) = (s.uniform(-10.0, 10.0), s.uniform(-10.0, 10.0));
                (u.min(v), u.max(v))
            }
        };
        (s.s(r), s.s(t))
    }
}

impl Form for PowerMean {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (a, w) = (pt.tuple(0), pt.tuple(1));
        Ok((
            power_of(pt.param(0), a, w, ctx)?,
            power_of(pt.param(1), a, w, ctx)?,
        ))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pt.tuples.iter().all(|t| all_pos(t)) && pt.param(0) < pt.param(1)
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        constant(pt.tuple(0), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let (r, t) = Self::rs(s);
        let n = s.len(2, 10);
        let a = s.pos_tuple(n);
        let mut pt = weighted_sample(s, a);
        pt.params = vec![r, t];
        pt
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let (r, t) = Self::rs(s);
        let n = s.len(2, 10);
        let c = s.pos_s();
        let mut pt = weighted_sample(s, vec![c; n]);
        pt.params = vec![r, t];
        pt
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let (r, t) = Self::rs(s);
        let n = s.len(2, 10);
        let a = bumped_constant(s, n, rel);
        let mut pt = weighted_sample(s, a);
        pt.params = vec![r, t];
        pt
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match (bound[0], bound[1]) {
            (Some(r), Some(s)) if r >= s => Err(format!("r < s required, got r={r}, s={s}")),
            _ => Ok(()),
        }
    }
}

/// `log((x+y)/2) >= (log x + log y)/2`.
struct LogMidpoint;

impl Form for LogMidpoint {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, y) = (pt.var(0), pt.var(1));
        let lhs = ln_scalar(&(ctx.val(x + y) / 2u32), ctx)?;
        let rhs = ctx.val(ln_scalar(x, ctx)? + ln_scalar(y, ctx)?) / 2u32;
        Ok((lhs, rhs))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pos(pt.var(0)) && pos(pt.var(1))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), pt.var(1), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        pair(s)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        equal_pair(s, vec![])
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        split_pair(s, vec![], rel)
    }
}

/// `exp((x+y)/2) <= (e^x + e^y)/2` on the whole line.
struct ExpMidpoint;

impl Form for ExpMidpoint {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (x, y) = (pt.var(0), pt.var(1));
        let lhs = exp_scalar(&(ctx.val(x + y) / 2u32), ctx)?;
        let rhs = ctx.val(exp_scalar(x, ctx)? + exp_scalar(y, ctx)?) / 2u32;
        Ok((lhs, rhs))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        pt.var(0).is_finite() && pt.var(1).is_finite()
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        approx_eq(pt.var(0), pt.var(1), ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        Point::new(
            vec![s.uniform_s(-20.0, 20.0), s.uniform_s(-20.0, 20.0)],
            vec![],
            vec![],
        )
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let c = s.uniform_s(-20.0, 20.0);
        Point::new(vec![c.clone(), c], vec![], vec![])
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let c = s.uniform(-20.0, 20.0);
        let d = c + if s.coin(0.5) { rel } else { -rel } * c.abs().max(1.0);
        Point::new(vec![s.s(c), s.s(d)], vec![], vec![])
    }
}

const ALPHA: &[ParamSlot] = &[real("alpha")];
const P_SLOT: &[ParamSlot] = &[real("p")];
const RS: &[ParamSlot] = &[real("r"), real("s")];

pub(super) fn register(v: &mut Vec<Entry>) {
    use Direction::*;
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
    v.push(e(
        "GA2E",
        "Eq 3(1)",
        Layout {
            vars: XY,
            params: &[],
            tuples: &[],
        },
        LeqHolds,
        "sqrt(x y) <= (x + y)/2",
        "x, y > 0",
        "x = y",
        Box::new(Ga2e),
    ));
    v.push(e(
        "GANE",
        "Eq 3(2)",
        Layout {
            vars: &[],
            params: &[],
            tuples: A,
        },
        LeqHolds,
        "G_n(a) <= A_n(a), equal weights",
        "a in P^n",
        "a constant",
        Box::new(GaN { weighted: false }),
    ));
    v.push(e(
        "PROD1_SUM",
        "I_n, Thm 3.1.2",
        Layout {
            vars: &[],
            params: &[],
            tuples: A,
        },
        LeqHolds,
        "n <= sum a_i",
        "a in P^n, prod a_i = 1 (within the band)",
        "a_i = 1 for all i",
        Box::new(Prod1Sum),
    ));
    v.push(e(
        "SUM1_PROD",
        "J_n, Thm 3.1.2",
        Layout {
            vars: &[],
            params: &[],
            tuples: A,
        },
        LeqHolds,
        "prod a_i <= (1/n)^n",
        "a in P^n, sum a_i = 1 (within the band)",
        "a_i = 1/n for all i",
        Box::new(Sum1Prod),
    ));
    v.push(e(
        "GA2W",
        "Eq 3(3)/(4)",
        Layout {
            vars: XY,
            params: ALPHA,
            tuples: &[],
        },
        LeqHolds,
        "x^(1-alpha) y^alpha <= (1-alpha) x + alpha y",
        "x, y > 0, 0 < alpha < 1",
        "x = y",
        Box::new(Ga2Alpha { complete: false }),
    ));
    v.push(Entry {
        has_complement: true,
        complement_validity: "x, y > 0, alpha < 0 or alpha > 1",
        ..e(
            "GA2_COMPLETE",
            "§4.2.2.2",
            Layout {
                vars: XY,
                params: ALPHA,
                tuples: &[],
            },
            LeqHolds,
            "G_2(x, y; 1-alpha, alpha) <= A_2(x, y; 1-alpha, alpha)",
            "x, y > 0, 0 <= alpha <= 1",
            "x = y or alpha in {0, 1}",
            Box::new(Ga2Alpha { complete: true }),
        )
    });
    v.push(e(
        "YOUNG",
        "Eq 3(5)",
        Layout {
            vars: XY,
            params: P_SLOT,
            tuples: &[],
        },
        LeqHolds,
        "x y <= x^p/p + y^q/q, q = p/(p-1)",
        "x, y > 0, p > 1",
        "x^p = y^q",
        Box::new(Young),
    ));
    v.push(e(
        "GAN",
        "Eq 3(6)",
        Layout {
            vars: &[],
            params: &[],
            tuples: AW,
        },
        LeqHolds,
        "G_n(a; w) <= A_n(a; w)",
        "a, w in P^n",
        "a constant",
        Box::new(GaN { weighted: true }),
    ));
    v.push(e(
        "RADO",
        "Eq 3(7)",
        Layout {
            vars: &[],
            params: &[],
            tuples: AW,
        },
        GeqHolds,
        "W_n (A_n - G_n) >= W_{n-1} (A_{n-1} - G_{n-1})",
        "a, w in P^n, n >= 2",
        "a_n = G_{n-1}",
        Box::new(Rado),
    ));
    v.push(Entry {
        note: "conv=0 uses exponent W_k; conv=1 uses the printed exponent 1/W_k, which admits counterexamples",
        ..e(
            "POPOVICIU",
            "Eq 3(8)",
            Layout { vars: &[], params: &[CONVENTION], tuples: AW },
            GeqHolds,
            "(A_n/G_n)^(W_n) >= (A_{n-1}/G_{n-1})^(W_{n-1})",
            "a, w in P^n, n >= 2",
            "a_n = A_{n-1}",
            Box::new(Popoviciu),
        )
    });
    v.push(e(
        "POWERMEAN",
        "§5 (R;S)_n",
        Layout {
            vars: &[],
            params: RS,
            tuples: AW,
        },
        LeqHolds,
        "M^[r](a; w) <= M^[s](a; w)",
        "a, w in P^n, r < s",
        "a constant",
        Box::new(PowerMean),
    ));
    v.push(e(
        "LOG_MIDPOINT_CONCAVE",
        "Thm 3.1.3",
        Layout {
            vars: XY,
            params: &[],
            tuples: &[],
        },
        GeqHolds,
        "log((x + y)/2) >= (log x + log y)/2",
        "x, y > 0",
        "x = y",
        Box::new(LogMidpoint),
    ));
    v.push(e(
        "EXP_MIDPOINT_CONVEX",
        "Thm 3.1.3",
        Layout {
            vars: XY,
            params: &[],
            tuples: &[],
        },
        LeqHolds,
        "exp((x + y)/2) <= (exp x + exp y)/2",
        "x, y real",
        "x = y",
        Box::new(ExpMidpoint),
    ));
}
