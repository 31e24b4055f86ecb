//! Hölder, Minkowski, their extended and weighted forms, Radon and Liapunov.

use std::borrow::Cow;

use super::{
    all_pos, constant, proportional, real, Direction, Entry, Form, Layout, ParamSlot, Point,
    Region, Sampler,
};
use crate::error::Result;
use crate::means::guarded;
use crate::numerics::{finite, pow_scalar, PrecisionContext, Scalar};

/// Exponent sets used by this family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExpSet {
    /// `p > 1`
    Above1,
    /// `p >= 1`
    AtLeast1,
    /// `p < 1, p != 0`
    Below1,
    /// `p <= 1, p != 0`
    AtMost1,
    /// `p not in {0, 1}`
    NotZeroOne,
    /// `0 < s < 1`
    OpenUnit,
    /// `s < 0 or s > 1`
    OutsideUnit,
}

impl ExpSet {
    fn contains(self, p: &Scalar) -> bool {
        let nz = !p.is_zero();
        match self {
            ExpSet::Above1 => *p > 1,
            ExpSet::AtLeast1 => *p >= 1,
            ExpSet::Below1 => *p < 1 && nz,
            ExpSet::AtMost1 => *p <= 1 && nz,
            ExpSet::NotZeroOne => nz && *p != 1,
            ExpSet::OpenUnit => *p > 0 && *p < 1,
            ExpSet::OutsideUnit => *p < 0 || *p > 1,
        }
    }

    /// A value away from 0 and 1.
    fn draw(self, s: &mut Sampler) -> f64 {
        let above = |s: &mut Sampler| 1.0 + s.log_uniform(-1.5, 1.0);
        let negative = |s: &mut Sampler| -s.log_uniform(-1.5, 1.0);
        let unit = |s: &mut Sampler| s.uniform(0.05, 0.95);
        match self {
            ExpSet::Above1 | ExpSet::AtLeast1 => above(s),
            ExpSet::Below1 | ExpSet::AtMost1 => {
                if s.coin(0.5) {
                    unit(s)
                } else {
                    negative(s)
                }
            }
            ExpSet::NotZeroOne => match s.index(3) {
                0 => above(s),
                1 => unit(s),
                _ => negative(s),
            },
            ExpSet::OpenUnit => unit(s),
            ExpSet::OutsideUnit => {
                if s.coin(0.5) {
                    above(s)
                } else {
                    negative(s)
                }
            }
        }
    }
}

fn exponent(s: &mut Sampler, set: ExpSet) -> Scalar {
    let p = s.param_or(0, |s| set.draw(s));
    s.s(p)
}

fn ones(n: usize, ctx: &PrecisionContext) -> Vec<Scalar> {
    vec![ctx.one(); n]
}

/// `Σ w_i f(i)` at the guarded precision.
fn wsum(
    w: &[Scalar],
    g: &PrecisionContext,
    mut f: impl FnMut(usize) -> Result<Scalar>,
) -> Result<Scalar> {
    let mut acc = g.zero();
    for (i, wi) in w.iter().enumerate() {
        acc += f(i)? * wi;
    }
    finite(acc)
}

fn conj(p: &Scalar, g: &PrecisionContext) -> Scalar {
    g.val(p / g.val(p - 1u32))
}

/// Tuples `a`, `b` and, when weighted, `w`.
struct Pair {
    weighted: bool,
}

impl Pair {
    fn weights<'a>(&self, pt: &'a Point, ctx: &PrecisionContext) -> Cow<'a, [Scalar]> {
        if self.weighted {
            Cow::Borrowed(pt.tuple(2))
        } else {
            Cow::Owned(ones(pt.len(), ctx))
        }
    }

    fn build(&self, s: &mut Sampler, p: Scalar, a: Vec<Scalar>, b: Vec<Scalar>) -> Point {
        let mut t = vec![a, b];
        if self.weighted {
            let n = t[0].len();
            t.push(s.pos_tuple(n));
        }
        Point::new(vec![], vec![p], t)
    }

    fn generic(&self, s: &mut Sampler, p: Scalar) -> Point {
        let n = s.len(1, 10);
        let (a, b) = (s.pos_tuple(n), s.pos_tuple(n));
        self.build(s, p, a, b)
    }

    /// `b = c f(a)` entrywise. With `spread = Some(e)` the scales are fixed at 1
    /// and the `a_i^e` stay within a factor 10^3 of each other, so that no term
    /// is negligible and both sides stay well above the absolute floor.
    fn along(
        &self,
        s: &mut Sampler,
        p: Scalar,
        spread: Option<f64>,
        f: impl Fn(&Scalar) -> Scalar,
    ) -> Point {
        let n = s.len(1, 10);
        let a = match spread {
            None => s.pos_tuple(n),
            Some(e) => (0..n)
                .map(|_| {
                    let u = s.log_uniform(-1.5, 1.5);
                    s.s(u.powf(1.0 / e.abs()))
                })
                .collect(),
        };
        let c = if spread.is_some() {
            s.s(1.0)
        } else {
            s.pos_s()
        };
        let ctx = *s.ctx();
        let b = a.iter().map(|x| ctx.val(f(x) * &c)).collect();
        self.build(s, p, a, b)
    }

    fn bump_b(s: &mut Sampler, mut pt: Point, rel: f64) -> Point {
        let n = pt.len();
        let i = s.index(n);
        pt.tuples[1][i] = s.bump(&pt.tuples[1][i], rel);
        pt
    }
}

fn valid_pair(pt: &Point) -> bool {
    pt.tuples.iter().all(|t| all_pos(t))
}

/// Hölder in form (1), plain or weighted, reversed for `p < 1`.
struct Holder {
    pair: Pair,
    primary: ExpSet,
    complement: ExpSet,
}

fn holder_equal(pt: &Point, ctx: &PrecisionContext) -> bool {
    let pm1 = ctx.val(pt.param(0) - 1u32);
    let f: Result<Vec<Scalar>> = pt
        .tuple(0)
        .iter()
        .map(|a| pow_scalar(a, &pm1, ctx))
        .collect();
    f.map(|f| proportional(&f, pt.tuple(1), ctx))
        .unwrap_or(false)
}

/// `b = c a^{p-1}`.
fn holder_point(pair: &Pair, s: &mut Sampler, p: Scalar, narrow: bool) -> Point {
    let ctx = *s.ctx();
    let pm1 = ctx.val(&p - 1u32);
    let spread = narrow.then(|| p.to_f64());
    pair.along(s, p, spread, |a| {
        pow_scalar(a, &pm1, &ctx).expect("positive base")
    })
}

fn holder_sums(
    pt: &Point,
    w: &[Scalar],
    g: &PrecisionContext,
) -> Result<(Scalar, Scalar, Scalar, Scalar, Scalar)> {
    let (a, b) = (pt.tuple(0), pt.tuple(1));
    let p = g.round(pt.param(0));
    let q = conj(&p, g);
    let ab = wsum(w, g, |i| Ok(g.val(&a[i] * &b[i])))?;
    let sa = wsum(w, g, |i| pow_scalar(&a[i], &p, g))?;
    let sb = wsum(w, g, |i| pow_scalar(&b[i], &q, g))?;
    Ok((p, q, ab, sa, sb))
}

impl Holder {
    fn set(&self, region: Region) -> ExpSet {
        match region {
            Region::Primary => self.primary,
            Region::Complement => self.complement,
        }
    }
}

impl Form for Holder {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let g = guarded(ctx, 32);
        let w = self.pair.weights(pt, &g);
        let (p, q, ab, sa, sb) = holder_sums(pt, &w, &g)?;
        let rhs = g.val(
            pow_scalar(&sa, &g.val(p.recip_ref()), &g)?
                * pow_scalar(&sb, &g.val(q.recip_ref()), &g)?,
        );
        Ok((ctx.round(&ab), ctx.round(&rhs)))
    }
    fn valid(&self, pt: &Point, region: Region, _: &PrecisionContext) -> bool {
        valid_pair(pt) && self.set(region).contains(pt.param(0))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        holder_equal(pt, ctx)
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let p = exponent(s, self.set(region));
        self.pair.generic(s, p)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        let p = exponent(s, self.set(region));
        holder_point(&self.pair, s, p, false)
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let p = exponent(s, self.set(region));
        let pt = holder_point(&self.pair, s, p, true);
        Pair::bump_b(s, pt, rel)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match bound[0] {
            Some(p) if p == 0.0 || p == 1.0 => Err(format!("p must not be 0 or 1, got {p}")),
            _ => Ok(()),
        }
    }
}

/// Hölder in form (3): `(Σ w a b)^{p p'} <= (Σ w a^p)^{p'} (Σ w b^{p'})^p`.
struct HolderExt {
    pair: Pair,
}

impl Form for HolderExt {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let g = guarded(ctx, 32);
        let w = self.pair.weights(pt, &g);
        let (p, q, ab, sa, sb) = holder_sums(pt, &w, &g)?;
        let lhs = pow_scalar(&ab, &g.val(&p * &q), &g)?;
        let rhs = g.val(pow_scalar(&sa, &q, &g)? * pow_scalar(&sb, &p, &g)?);
        Ok((ctx.round(&lhs), ctx.round(&finite(rhs)?)))
    }
    fn valid(&self, pt: &Point, _: Region, _: &PrecisionContext) -> bool {
        valid_pair(pt) && ExpSet::NotZeroOne.contains(pt.param(0))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        holder_equal(pt, ctx)
    }
    fn sample(&self, s: &mut Sampler, _: Region) -> Point {
        let p = exponent(s, ExpSet::NotZeroOne);
        self.pair.generic(s, p)
    }
    fn equality_point(&self, s: &mut Sampler, _: Region) -> Point {
        let p = exponent(s, ExpSet::NotZeroOne);
        holder_point(&self.pair, s, p, false)
    }
    fn near_equality(&self, s: &mut Sampler, _: Region, rel: f64) -> Point {
        let p = exponent(s, ExpSet::NotZeroOne);
        let pt = holder_point(&self.pair, s, p, true);
        Pair::bump_b(s, pt, rel)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match bound[0] {
            Some(p) if p == 0.0 || p == 1.0 => Err(format!("p must not be 0 or 1, got {p}")),
            _ => Ok(()),
        }
    }
}

/// Minkowski, plain or weighted, reversed for `p <= 1` when a complement is registered.
struct Minkowski {
    pair: Pair,
    complement: ExpSet,
}

impl Minkowski {
    fn set(&self, region: Region) -> ExpSet {
        match region {
            Region::Primary => ExpSet::AtLeast1,
            Region::Complement => self.complement,
        }
    }
}

impl Form for Minkowski {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let g = guarded(ctx, 32);
        let w = self.pair.weights(pt, &g);
        let (a, b) = (pt.tuple(0), pt.tuple(1));
        let p = g.round(pt.param(0));
        let inv = g.val(p.recip_ref());
        let sab = wsum(&w, &g, |i| pow_scalar(&g.val(&a[i] + &b[i]), &p, &g))?;
        let sa = wsum(&w, &g, |i| pow_scalar(&a[i], &p, &g))?;
        let sb = wsum(&w, &g, |i| pow_scalar(&b[i], &p, &g))?;
        let lhs = pow_scalar(&sab, &inv, &g)?;
        let rhs = g.val(pow_scalar(&sa, &inv, &g)? + pow_scalar(&sb, &inv, &g)?);
        Ok((ctx.round(&lhs), ctx.round(&rhs)))
    }
    fn valid(&self, pt: &Point, region: Region, _: &PrecisionContext) -> bool {
        valid_pair(pt) && self.set(region).contains(pt.param(0))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        *pt.param(0) == 1 || proportional(pt.tuple(0), pt.tuple(1), ctx)
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let p = exponent(s, self.set(region));
        self.pair.generic(s, p)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        if s.bound(0).is_none() && s.coin(0.3) {
            let p = s.s(1.0);
            return self.pair.generic(s, p);
        }
        let p = exponent(s, self.set(region));
        self.pair.along(s, p, None, |a| a.clone())
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let p = exponent(s, self.set(region));
        let e = p.to_f64().abs().max(1.0);
        let mut pt = self.pair.along(s, p, Some(e), |a| a.clone());
        // Both sides are homogeneous of degree 1; scale so that they sit near 2.
        let ctx = *s.ctx();
        let (lhs, _) = self.evaluate(&pt, &ctx).expect("finite sample");
        let k = ctx.val(lhs / 2u32);
        for t in pt.tuples.iter_mut().take(2) {
            for x in t.iter_mut() {
                *x = ctx.val(&*x / &k);
            }
        }
        Pair::bump_b(s, pt, rel)
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        match bound[0] {
            Some(0.0) => Err("p must be non-zero".into()),
            _ => Ok(()),
        }
    }
}

/// `Σ a^s b^{1-s} <= (Σ a)^s (Σ b)^{1-s}`, reversed outside `[0, 1]`.
struct Radon;

impl Radon {
    fn set(region: Region) -> ExpSet {
        match region {
            Region::Primary => ExpSet::OpenUnit,
            Region::Complement => ExpSet::OutsideUnit,
        }
    }
}

const PAIR: Pair = Pair { weighted: false };

impl Form for Radon {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let g = guarded(ctx, 32);
        let (a, b) = (pt.tuple(0), pt.tuple(1));
        let s = g.round(pt.param(0));
        let r = g.val(1 - &s);
        let w = ones(a.len(), &g);
        let lhs = wsum(&w, &g, |i| {
            Ok(g.val(pow_scalar(&a[i], &s, &g)? * pow_scalar(&b[i], &r, &g)?))
        })?;
        let sa = crate::means::total(a, &g);
        let sb = crate::means::total(b, &g);
        let rhs = g.val(pow_scalar(&sa, &s, &g)? * pow_scalar(&sb, &r, &g)?);
        Ok((ctx.round(&lhs), ctx.round(&rhs)))
    }
    fn valid(&self, pt: &Point, region: Region, _: &PrecisionContext) -> bool {
        valid_pair(pt) && Self::set(region).contains(pt.param(0))
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        proportional(pt.tuple(0), pt.tuple(1), ctx)
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let p = exponent(s, Self::set(region));
        PAIR.generic(s, p)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        let p = exponent(s, Self::set(region));
        PAIR.along(s, p, None, |a| a.clone())
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        let p = exponent(s, Self::set(region));
        let e = p.to_f64().abs().max((1.0 - p.to_f64()).abs());
        let pt = PAIR.along(s, p, Some(e), |a| a.clone());
        Pair::bump_b(s, pt, rel)
    }
}

/// `(Σ w x^s)^{r-t} <= (Σ w x^t)^{r-s} (Σ w x^r)^{s-t}` on the orderings
/// `t<s<r`, `r<t<s`, `s<r<t`; reversed on the other three.
struct Liapunov;

/// Orderings as index permutations: `(r, s, t) = (v[i], v[j], v[k])` for sorted `v`.
const PRIMARY_ORDERS: [[usize; 3]; 3] = [[2, 1, 0], [0, 2, 1], [1, 0, 2]];
const COMPLEMENT_ORDERS: [[usize; 3]; 3] = [[1, 2, 0], [2, 0, 1], [0, 1, 2]];

pub(crate) fn liapunov_region(r: &Scalar, s: &Scalar, t: &Scalar) -> Option<Region> {
    if r == s || s == t || r == t {
        return None;
    }
    let primary = (t < s && s < r) || (r < t && t < s) || (s < r && r < t);
    Some(if primary {
        Region::Primary
    } else {
        Region::Complement
    })
}

impl Liapunov {
    fn rst(s: &mut Sampler, region: Region) -> Vec<Scalar> {
        let free = (0..3).all(|i| s.bound(i).is_none());
        let v: [f64; 3] = if free {
            loop {
                let mut v = [
                    s.uniform(-4.0, 4.0),
                    s.uniform(-4.0, 4.0),
                    s.uniform(-4.0, 4.0),
                ];
                v.sort_by(|a, b| a.partial_cmp(b).unwrap());
                if v[1] - v[0] >= 0.25 && v[2] - v[1] >= 0.25 {
                    let orders = match region {
                        Region::Primary => PRIMARY_ORDERS,
                        Region::Complement => COMPLEMENT_ORDERS,
                    };
                    let o = orders[s.index(3)];
                    break [v[o[0]], v[o[1]], v[o[2]]];
                }
            }
        } else {
            [
                s.param(0, -4.0, 4.0),
                s.param(1, -4.0, 4.0),
                s.param(2, -4.0, 4.0),
            ]
        };
        v.iter().map(|x| s.s(*x)).collect()
    }

    fn point(s: &mut Sampler, region: Region, x: Vec<Scalar>) -> Point {
        let params = Self::rst(s, region);
        let w = s.pos_tuple(x.len());
        Point::new(vec![], params, vec![x, w])
    }
}

pub(crate) fn liapunov_sides(
    x: &[Scalar],
    w: &[Scalar],
    r: &Scalar,
    s: &Scalar,
    t: &Scalar,
    ctx: &PrecisionContext,
) -> Result<(Scalar, Scalar)> {
    let g = guarded(ctx, 32);
    let m = |u: &Scalar| wsum(w, &g, |i| pow_scalar(&x[i], u, &g));
    let (ms, mt, mr) = (m(s)?, m(t)?, m(r)?);
    let lhs = pow_scalar(&ms, &g.val(r - t), &g)?;
    let rhs = g.val(pow_scalar(&mt, &g.val(r - s), &g)? * pow_scalar(&mr, &g.val(s - t), &g)?);
    Ok((ctx.round(&lhs), ctx.round(&finite(rhs)?)))
}

impl Form for Liapunov {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        liapunov_sides(
            pt.tuple(0),
            pt.tuple(1),
            pt.param(0),
            pt.param(1),
            pt.param(2),
            ctx,
        )
    }
    fn valid(&self, pt: &Point, region: Region, _: &PrecisionContext) -> bool {
        valid_pair(pt) && liapunov_region(pt.param(0), pt.param(1), pt.param(2)) == Some(region)
    }
    fn equal(&self, pt: &Point, _: Region, ctx: &PrecisionContext) -> bool {
        constant(pt.tuple(0), ctx)
    }
    fn sample(&self, s: &mut Sampler, region: Region) -> Point {
        let n = s.len(1, 10);
        let x = s.pos_tuple(n);
        Self::point(s, region, x)
    }
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point {
        let n = s.len(1, 10);
        let c = s.pos_s();
        Self::point(s, region, vec![c; n])
    }
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point {
        // Unit base and comparable weights: the margin is second order in `rel`
        // and would vanish behind a light bumped entry.
        let n = s.len(2, 10);
        let mut x = vec![s.s(1.0); n];
        let i = s.index(n);
        x[i] = s.bump(&x[i], rel);
        let params = Self::rst(s, region);
        let w = (0..n)
            .map(|_| {
                let v = s.log_uniform(-0.5, 0.5);
                s.s(v)
            })
            .collect();
        Point::new(vec![], params, vec![x, w])
    }
    fn check_params(&self, bound: &[Option<f64>]) -> std::result::Result<(), String> {
        let b: Vec<f64> = bound.iter().flatten().copied().collect();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if b[i] == b[j] {
                    return Err("r, s, t must be pairwise distinct".into());
                }
            }
        }
        Ok(())
    }
}

const S_SLOT: &[ParamSlot] = &[real("s")];
const RST: &[ParamSlot] = &[real("r"), real("s"), real("t")];

pub(super) fn register(v: &mut Vec<Entry>) {
    use Direction::*;
    use ExpSet::*;

    const AB: &[&str] = &["a", "b"];
    const ABW: &[&str] = &["a", "b", "w"];
    const P: &[ParamSlot] = &[real("p")];
    let ab = Layout {
        vars: &[],
        params: P,
        tuples: AB,
    };
    let abw = Layout {
        vars: &[],
        params: P,
        tuples: ABW,
    };
    let plain = || Pair { weighted: false };
    let weighted = || Pair { weighted: true };

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
    let with_complement = |entry: Entry, cv: &'static str| Entry {
        has_complement: true,
        complement_validity: cv,
        ..entry
    };

    v.push(with_complement(
        e(
            "HOLDER",
            "Eq 6(1)",
            ab,
            LeqHolds,
            "sum a_i b_i <= (sum a_i^p)^(1/p) (sum b_i^(p/(p-1)))^(1-1/p)",
            "a, b in P^n, p > 1",
            "b proportional to a^(p-1)",
            Box::new(Holder {
                pair: plain(),
                primary: Above1,
                complement: Below1,
            }),
        ),
        "a, b in P^n, p < 1, p != 0",
    ));
    v.push(with_complement(
        e(
            "HOLDER_W",
            "Eq 6(1w)",
            abw,
            LeqHolds,
            "sum w_i a_i b_i <= (sum w_i a_i^p)^(1/p) (sum w_i b_i^(p/(p-1)))^(1-1/p)",
            "a, b, w in P^n, p > 1",
            "b proportional to a^(p-1)",
            Box::new(Holder {
                pair: weighted(),
                primary: Above1,
                complement: Below1,
            }),
        ),
        "a, b, w in P^n, p < 1, p != 0",
    ));
    v.push(e(
        "HOLDER_EXT",
        "Eq 6(3)",
        ab,
        LeqHolds,
        "(sum a_i b_i)^(p p') <= (sum a_i^p)^(p') (sum b_i^(p'))^p",
        "a, b in P^n, p not in {0, 1}",
        "b proportional to a^(p-1)",
        Box::new(HolderExt { pair: plain() }),
    ));
    v.push(e(
        "HOLDER_EXT_W",
        "Eq 6(3w)",
        abw,
        LeqHolds,
        "(sum w_i a_i b_i)^(p p') <= (sum w_i a_i^p)^(p') (sum w_i b_i^(p'))^p",
        "a, b, w in P^n, p not in {0, 1}",
        "b proportional to a^(p-1)",
        Box::new(HolderExt { pair: weighted() }),
    ));
    v.push(Entry {
        fixed: &[("p", 2.0)],
        ..e(
            "CAUCHY",
            "Eq 6(1), p = 2",
            ab,
            LeqHolds,
            "sum a_i b_i <= (sum a_i^2)^(1/2) (sum b_i^2)^(1/2)",
            "a, b in P^n",
            "a proportional to b",
            Box::new(Holder {
                pair: plain(),
                primary: Above1,
                complement: Below1,
            }),
        )
    });
    v.push(e(
        "MINKOWSKI",
        "Eq 6(2)",
        ab,
        LeqHolds,
        "(sum (a_i + b_i)^p)^(1/p) <= (sum a_i^p)^(1/p) + (sum b_i^p)^(1/p)",
        "a, b in P^n, p >= 1",
        "p = 1 or a proportional to b",
        Box::new(Minkowski {
            pair: plain(),
            complement: AtMost1,
        }),
    ));
    v.push(with_complement(
        e(
            "MINKOWSKI_EXT",
            "Eq 6(2),(~2)",
            ab,
            LeqHolds,
            "(sum (a_i + b_i)^p)^(1/p) <= (sum a_i^p)^(1/p) + (sum b_i^p)^(1/p)",
            "a, b in P^n, p >= 1",
            "p = 1 or a proportional to b",
            Box::new(Minkowski {
                pair: plain(),
                complement: AtMost1,
            }),
        ),
        "a, b in P^n, p <= 1, p != 0",
    ));
    v.push(with_complement(
        e(
            "MINKOWSKI_W",
            "Eq 6(2w)",
            abw,
            LeqHolds,
            "(sum w_i (a_i + b_i)^p)^(1/p) <= (sum w_i a_i^p)^(1/p) + (sum w_i b_i^p)^(1/p)",
            "a, b, w in P^n, p >= 1",
            "p = 1 or a proportional to b",
            Box::new(Minkowski {
                pair: weighted(),
                complement: AtMost1,
            }),
        ),
        "a, b, w in P^n, p <= 1, p != 0",
    ));
    v.push(Entry {
        fixed: &[("p", 2.0)],
        ..e(
            "TRIANGLE",
            "Eq 6(2), p = 2",
            ab,
            LeqHolds,
            "(sum (a_i + b_i)^2)^(1/2) <= (sum a_i^2)^(1/2) + (sum b_i^2)^(1/2)",
            "a, b in P^n",
            "a proportional to b",
            Box::new(Minkowski {
                pair: plain(),
                complement: AtMost1,
            }),
        )
    });
    v.push(with_complement(
        e(
            "RADON",
            "Eq 6(4)",
            Layout {
                vars: &[],
                params: S_SLOT,
                tuples: AB,
            },
            LeqHolds,
            "sum a_i^s b_i^(1-s) <= (sum a_i)^s (sum b_i)^(1-s)",
            "a, b in P^n, 0 < s < 1",
            "a proportional to b",
            Box::new(Radon),
        ),
        "a, b in P^n, s < 0 or s > 1",
    ));
    v.push(with_complement(
        e(
            "LIAPUNOV",
            "Eq 6(5)",
            Layout {
                vars: &[],
                params: RST,
                tuples: &["x", "w"],
            },
            LeqHolds,
            "(sum w_i x_i^s)^(r-t) <= (sum w_i x_i^t)^(r-s) (sum w_i x_i^r)^(s-t)",
            "x, w in P^n, t < s < r or r < t < s or s < r < t",
            "x constant",
            Box::new(Liapunov),
        ),
        "x, w in P^n, t < r < s or s < t < r or r < s < t",
    ));
}
