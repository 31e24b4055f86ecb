//! Changes of variables between catalog entries.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{complete, single, Family, Image, RoundTrip, Shape, Side, Witness};
use crate::catalog::{Params, Point};
use crate::error::Result;
use crate::means::{geometric_of, guarded, total};
use crate::numerics::{pow_scalar, rel_close, PrecisionContext, Scalar};
use crate::transforms::liapunov_to_holder;

fn xa(x: Scalar, alpha: Scalar) -> Point {
    Point::new(vec![x], vec![alpha], vec![])
}

/// `-y / (1 + y)`, an involution of `(-1, ∞)`.
fn phi(y: &Scalar, g: &PrecisionContext) -> Scalar {
    g.val(g.val(-y) / g.val(1 + y))
}

fn one_minus(a: &Scalar, g: &PrecisionContext) -> Scalar {
    g.val(1 - a)
}

fn strictly_unit(a: &Scalar) -> bool {
    *a > 0 && *a < 1
}

/// `(y, β) ↦ (φ(y), 1 - β)`. The identity
/// `(1+y)(1 + αx - (1+x)^α) = 1 + (1-α)y - (1+y)^(1-α)` for `x = φ(y)` makes
/// the map exact, with margin factor `1 + y`.
struct Reflect {
    source: &'static str,
    target: &'static str,
    complete: bool,
}

impl Reflect {
    fn side(&self, name: &str) -> Result<Side> {
        if self.complete {
            complete(name, Params::new())
        } else {
            single(name, Params::new())
        }
    }

    fn map(pt: &Point, ctx: &PrecisionContext) -> Point {
        let g = guarded(ctx, 32);
        xa(
            ctx.round(&phi(pt.var(0), &g)),
            ctx.round(&one_minus(pt.param(0), &g)),
        )
    }
}

impl Witness for Reflect {
    fn source(&self, _: &[f64]) -> Result<Side> {
        self.side(self.source)
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        self.side(self.target)
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        Ok(Image::Point(Self::map(pt, ctx)))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        Some(Ok(Self::map(pt, ctx)))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        src: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.val(1 + src.var(0)))
    }
}

/// `(y, β) ↦ (βy, 1/β)`: B1 at `(αx, 1/α)` is `(1+αx)^(1/α) <= 1 + x`.
struct Recip;

impl Recip {
    fn map(pt: &Point, ctx: &PrecisionContext) -> Point {
        let g = guarded(ctx, 32);
        let (x, a) = (pt.var(0), pt.param(0));
        xa(ctx.val(g.val(x * a)), ctx.val(g.val(a.recip_ref())))
    }
}

impl Witness for Recip {
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("BERNOULLI_B1", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single("BERNOULLI_B4", Params::new())
    }
    fn source_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        strictly_unit(pt.param(0))
    }
    fn target_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        *pt.var(0) >= 0
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        Ok(Image::Point(Self::map(pt, ctx)))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        Some(Ok(Self::map(pt, ctx)))
    }
}

/// `x ↦ x + 1` from Bernoulli to `x^α <= (1-α) + αx`.
struct Shift;

impl Witness for Shift {
    fn source(&self, _: &[f64]) -> Result<Side> {
        complete("BERNOULLI_FULL", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        complete("POWER_SECANT", Params::new())
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        Ok(Image::Point(xa(
            ctx.val(pt.var(0) + 1u32),
            pt.param(0).clone(),
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        Some(Ok(xa(ctx.val(pt.var(0) - 1u32), pt.param(0).clone())))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.one())
    }
}

/// `x ↦ (1, x)` into the weighted two-term AM-GM, inverted by `(u, v) ↦ v/u`.
struct Ratio;

impl Witness for Ratio {
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("POWER_SECANT", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single("GA2W", Params::new())
    }
    fn source_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        strictly_unit(pt.param(0))
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        Ok(Image::Point(Point::new(
            vec![ctx.one(), pt.var(0).clone()],
            vec![pt.param(0).clone()],
            vec![],
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        Some(Ok(xa(ctx.val(pt.var(1) / pt.var(0)), pt.param(0).clone())))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        tgt: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.val(tgt.var(0).recip_ref()))
    }
}

/// `1 - α = 1/p`, `x = X^p`, `y = Y^q`.
///
/// Raising to `p` multiplies rounding error by about `p |ln x|`, so the
/// witness is kept to conjugate pairs with `p, q <= 2^6`, where round trips
/// stay inside their band.
struct Young;

const YOUNG_MAX_EXPONENT: f64 = 64.0;

fn young_exponents_ok(alpha: &Scalar) -> bool {
    let a = alpha.to_f64();
    a * YOUNG_MAX_EXPONENT >= 1.0 && (1.0 - a) * YOUNG_MAX_EXPONENT >= 1.0
}

impl Witness for Young {
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("GA2W", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single("YOUNG", Params::new())
    }
    fn source_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        young_exponents_ok(pt.param(0))
    }
    fn target_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        let p = pt.param(0).to_f64();
        p > 1.0 && young_exponents_ok(&pt.param(0).clone().recip())
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let g = guarded(ctx, 32);
        let a = pt.param(0);
        let inv_p = one_minus(a, &g);
        let x = pow_scalar(pt.var(0), &inv_p, &g)?;
        let y = pow_scalar(pt.var(1), a, &g)?;
        let p = g.val(inv_p.recip_ref());
        Ok(Image::Point(Point::new(
            vec![ctx.round(&x), ctx.round(&y)],
            vec![ctx.round(&p)],
            vec![],
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let g = guarded(ctx, 32);
        let p = pt.param(0);
        let q = g.val(p / g.val(p - 1u32));
        let run = || -> Result<Point> {
            let x = pow_scalar(pt.var(0), p, &g)?;
            let y = pow_scalar(pt.var(1), &q, &g)?;
            let a = g.val(1 - g.val(p.recip_ref()));
            Ok(Point::new(
                vec![ctx.round(&x), ctx.round(&y)],
                vec![ctx.round(&a)],
                vec![],
            ))
        };
        Some(run())
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.one())
    }
}

/// Equal-weight AM-GM from its normalized forms: divide by the geometric
/// mean (product 1) or by the sum (sum 1). The inverse is the inclusion.
struct Normalize {
    by_sum: bool,
}

impl Witness for Normalize {
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("GANE", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single(
            if self.by_sum {
                "SUM1_PROD"
            } else {
                "PROD1_SUM"
            },
            Params::new(),
        )
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let g = guarded(ctx, 32);
        let a = pt.tuple(0);
        let d = if self.by_sum {
            total(a, &g)
        } else {
            let ones = vec![g.one(); a.len()];
            geometric_of(a, &ones, &g)?
        };
        let b = a.iter().map(|v| ctx.val(v / &d)).collect();
        Ok(Image::Point(Point::new(vec![], vec![], vec![b])))
    }
    fn backward(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> Option<Result<Point>> {
        Some(Ok(pt.clone()))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        src: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        if self.by_sum {
            return None;
        }
        // A - G = (G/n) (Σ a/G - n)
        let a = src.tuple(0);
        let ones = vec![ctx.one(); a.len()];
        let gm = geometric_of(a, &ones, ctx).ok()?;
        Some(ctx.val(gm / a.len() as u32))
    }
}

/// `(x, y) ↦ (x, …, x, y, …, y)` with `2^(k-1)` copies each.
struct DoubleSpecialize;

impl Witness for DoubleSpecialize {
    fn param_names(&self) -> &'static [&'static str] {
        &["k"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![2.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        vec![rng.gen_range(1..=4) as f64]
    }
    fn check_params(&self, p: &[f64]) -> std::result::Result<(), String> {
        super::derive::check_k(p[0])
    }
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("GA2E", Params::new())
    }
    fn target(&self, p: &[f64]) -> Result<Side> {
        single("GANE", Params::from([("n", 2f64.powi(p[0] as i32))]))
    }
    fn forward(&self, p: &[f64], pt: &Point, _: &PrecisionContext) -> Result<Image> {
        let half = 1usize << (p[0] as usize - 1);
        let mut a = vec![pt.var(0).clone(); half];
        a.extend(std::iter::repeat_n(pt.var(1).clone(), half));
        Ok(Image::Point(Point::new(vec![], vec![], vec![a])))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.one())
    }
}

/// `(x, α) ↦ (a = x·1, w = (α/n)·1)`: the multi-term form on a constant tuple.
struct PecaricSpecialize;

impl Witness for PecaricSpecialize {
    fn param_names(&self) -> &'static [&'static str] {
        &["n"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![3.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        vec![rng.gen_range(2..=8) as f64]
    }
    fn check_params(&self, p: &[f64]) -> std::result::Result<(), String> {
        super::derive::check_len(p[0], 2)
    }
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("BERNOULLI_B3", Params::new())
    }
    fn target(&self, p: &[f64]) -> Result<Side> {
        single("PECARIC", Params::from([("n", p[0])]))
    }
    fn source_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        *pt.param(0) > 0
    }
    fn forward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let n = p[0] as usize;
        let w = ctx.val(pt.param(0) / n as u32);
        Ok(Image::Point(Point::new(
            vec![],
            vec![],
            vec![vec![pt.var(0).clone(); n], vec![w; n]],
        )))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.one())
    }
}

/// Rado's step rewritten as two-term weighted AM-GM at
/// `(G_{n-1}, a_n; α = w_n / W_n)`; the margins differ by the factor `W_n`.
struct RadoRewrite;

impl Witness for RadoRewrite {
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("RADO", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single("GA2W", Params::new())
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let g = guarded(ctx, 32);
        let (a, w) = (pt.tuple(0), pt.tuple(1));
        let n = a.len();
        let gm = geometric_of(&a[..n - 1], &w[..n - 1], &g)?;
        let alpha = g.val(&w[n - 1] / total(w, &g));
        Ok(Image::Point(Point::new(
            vec![ctx.round(&gm), a[n - 1].clone()],
            vec![ctx.round(&alpha)],
            vec![],
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let alpha = pt.param(0);
        let a = vec![pt.var(0).clone(), pt.var(1).clone()];
        let w = vec![ctx.val(1 - alpha), alpha.clone()];
        Some(Ok(Point::new(vec![], vec![], vec![a, w])))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        src: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(total(src.tuple(1), ctx))
    }
}

/// Bernoulli at `(x/p, p/q)` raised to the power `q` is Bush's inequality.
/// The forward map picks `q = 1` for `α <= 1` and `q = -1` for `α > 1`.
struct Bush;

impl Witness for Bush {
    fn source(&self, _: &[f64]) -> Result<Side> {
        complete("BERNOULLI_FULL", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        complete("BUSH", Params::new())
    }
    fn source_domain(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> bool {
        let (x, a) = (pt.var(0), pt.param(0));
        !a.is_zero() && ctx.val(1 + ctx.val(x * a)) > 0
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let (x, a) = (pt.var(0), pt.param(0));
        let (p, q) = if *a > 1 {
            (ctx.val(-a), ctx.from_f64(-1.0))
        } else {
            (a.clone(), ctx.one())
        };
        let xx = ctx.val(x * &p);
        Ok(Image::Point(Point::new(vec![xx], vec![p, q], vec![])))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let (x, p, q) = (pt.var(0), pt.param(0), pt.param(1));
        Some(Ok(xa(ctx.val(x / p), ctx.val(p / q))))
    }
}

/// `(x, α) ↦ (a, b) = (1, 1 + x)`; inverse `x = b/a - 1`. Dividing the
/// two-point form by `a^α` recovers Bernoulli, so the factor is `a^(-α)`.
struct Ruthing;

impl Witness for Ruthing {
    fn source(&self, _: &[f64]) -> Result<Side> {
        complete("BERNOULLI_FULL", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        complete("RUTHING", Params::new())
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        Ok(Image::Point(Point::new(
            vec![ctx.one(), ctx.val(1 + pt.var(0))],
            vec![pt.param(0).clone()],
            vec![],
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let g = guarded(ctx, 32);
        Some(Ok(xa(
            ctx.val(g.val(pt.var(1) / pt.var(0)) - 1u32),
            pt.param(0).clone(),
        )))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        tgt: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        pow_scalar(tgt.var(0), &ctx.val(-tgt.param(0)), ctx).ok()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Absorb {
    Holder,
    Minkowski,
    HolderExt,
}

/// Weighted forms as unweighted ones at `w^(1/p) a` and `w^(1/p') b`
/// (`w^(1/p) b` for Minkowski). Constant unit weights invert it.
struct WeightAbsorb(Absorb);

impl Witness for WeightAbsorb {
    fn source(&self, _: &[f64]) -> Result<Side> {
        match self.0 {
            Absorb::Holder => complete("HOLDER_W", Params::new()),
            Absorb::Minkowski => complete("MINKOWSKI_W", Params::new()),
            Absorb::HolderExt => single("HOLDER_EXT_W", Params::new()),
        }
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        match self.0 {
            Absorb::Holder => complete("HOLDER", Params::new()),
            Absorb::Minkowski => complete("MINKOWSKI_EXT", Params::new()),
            Absorb::HolderExt => single("HOLDER_EXT", Params::new()),
        }
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let g = guarded(ctx, 32);
        let p = pt.param(0);
        let ea = g.val(p.recip_ref());
        let eb = if self.0 == Absorb::Minkowski {
            ea.clone()
        } else {
            g.val(1 - &ea)
        };
        let (a, b, w) = (pt.tuple(0), pt.tuple(1), pt.tuple(2));
        let mut na = Vec::with_capacity(a.len());
        let mut nb = Vec::with_capacity(a.len());
        for i in 0..a.len() {
            na.push(ctx.val(pow_scalar(&w[i], &ea, &g)? * &a[i]));
            nb.push(ctx.val(pow_scalar(&w[i], &eb, &g)? * &b[i]));
        }
        Ok(Image::Point(Point::new(
            vec![],
            vec![p.clone()],
            vec![na, nb],
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let mut q = pt.clone();
        q.tuples.push(vec![ctx.one(); pt.len()]);
        Some(Ok(q))
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.one())
    }
}

/// Hölder at `(A, B, p)` is Radon at `(A^p, B^(p'), 1/p)`.
struct RadonMap;

impl Witness for RadonMap {
    fn source(&self, _: &[f64]) -> Result<Side> {
        complete("HOLDER", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        complete("RADON", Params::new())
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let g = guarded(ctx, 32);
        let p = pt.param(0);
        let q = g.val(p / g.val(p - 1u32));
        let a = pt
            .tuple(0)
            .iter()
            .map(|v| pow_scalar(v, p, &g).map(|x| ctx.round(&x)))
            .collect::<Result<_>>()?;
        let b = pt
            .tuple(1)
            .iter()
            .map(|v| pow_scalar(v, &q, &g).map(|x| ctx.round(&x)))
            .collect::<Result<_>>()?;
        Ok(Image::Point(Point::new(
            vec![],
            vec![ctx.val(g.val(p.recip_ref()))],
            vec![a, b],
        )))
    }
    fn backward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let g = guarded(ctx, 32);
        let s = pt.param(0);
        let r = g.val(1 - s);
        let run = || -> Result<Point> {
            let a = pt
                .tuple(0)
                .iter()
                .map(|v| pow_scalar(v, s, &g).map(|x| ctx.round(&x)))
                .collect::<Result<_>>()?;
            let b = pt
                .tuple(1)
                .iter()
                .map(|v| pow_scalar(v, &r, &g).map(|x| ctx.round(&x)))
                .collect::<Result<_>>()?;
            Ok(Point::new(
                vec![],
                vec![ctx.val(g.val(s.recip_ref()))],
                vec![a, b],
            ))
        };
        Some(run())
    }
    fn margin_factor(
        &self,
        _: &[f64],
        _: &Point,
        _: &Point,
        ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        Some(ctx.one())
    }
}

/// `M^[r](a) = (M^[1](a^r))^(1/r)`: a same-sign pair `(r, s)` becomes
/// `(1, s/r)` at `a^r` for `r > 0`, and `(1, r/s)` at `a^s` for `s < 0`.
/// Parameters `(r, s)`; `s` is only used for forward draws.
struct PowerIdent;

impl PowerIdent {
    fn map_tuple(
        a: &[Scalar],
        e: &Scalar,
        g: &PrecisionContext,
        ctx: &PrecisionContext,
    ) -> Result<Vec<Scalar>> {
        a.iter()
            .map(|v| pow_scalar(v, e, g).map(|x| ctx.round(&x)))
            .collect()
    }
}

impl Witness for PowerIdent {
    fn param_names(&self) -> &'static [&'static str] {
        &["r", "s"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![2.0, 3.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        if rng.gen_bool(0.5) {
            let r = rng.gen_range(0.25..4.0);
            vec![r, r + rng.gen_range(0.05..6.0)]
        } else {
            let r = rng.gen_range(-4.0..-0.25);
            vec![r, r * rng.gen_range(0.05..0.95)]
        }
    }
    fn check_params(&self, p: &[f64]) -> std::result::Result<(), String> {
        let (r, s) = (p[0], p[1]);
        if r == 0.0 || s == 0.0 || r >= s || (r < 0.0) != (s < 0.0) {
            return Err("need r < s, both non-zero and of the same sign".into());
        }
        Ok(())
    }
    fn source(&self, p: &[f64]) -> Result<Side> {
        single("POWERMEAN", Params::from([("r", p[0])]))
    }
    fn source_draws(&self, p: &[f64]) -> Result<Side> {
        single("POWERMEAN", Params::from([("r", p[0]), ("s", p[1])]))
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single("POWERMEAN", Params::from([("r", 1.0)]))
    }
    fn source_domain(&self, p: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        (p[0] < 0.0) == (*pt.param(1) < 0)
    }
    fn forward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let g = guarded(ctx, 32);
        let r = ctx.from_f64(p[0]);
        let s = pt.param(1);
        let (e, t) = if p[0] > 0.0 {
            (r.clone(), g.val(s / &r))
        } else {
            (s.clone(), g.val(&r / s))
        };
        let b = Self::map_tuple(pt.tuple(0), &e, &g, ctx)?;
        Ok(Image::Point(Point::new(
            vec![],
            vec![ctx.one(), ctx.round(&t)],
            vec![b, pt.tuple(1).to_vec()],
        )))
    }
    fn backward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Option<Result<Point>> {
        let g = guarded(ctx, 32);
        let r = ctx.from_f64(p[0]);
        let t = pt.param(1);
        let s = if p[0] > 0.0 {
            g.val(t * &r)
        } else {
            g.val(&r / t)
        };
        let e = g.val(if p[0] > 0.0 {
            r.recip_ref()
        } else {
            s.recip_ref()
        });
        Some(Self::map_tuple(pt.tuple(0), &e, &g, ctx).map(|a| {
            Point::new(
                vec![],
                vec![r.clone(), ctx.round(&s)],
                vec![a, pt.tuple(1).to_vec()],
            )
        }))
    }
}

/// Liapunov's inequality as extended weighted Hölder at
/// `p = (r-t)/(r-s)`, `a = x^(t/p)`, `b = x^(r/p')`. Parameters `(r, s, t)`.
struct LiapunovMap;

impl Witness for LiapunovMap {
    fn param_names(&self) -> &'static [&'static str] {
        &["r", "s", "t"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![2.0, 1.0, 0.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        loop {
            let v = [
                rng.gen_range(-4.0..4.0),
                rng.gen_range(-4.0..4.0),
                rng.gen_range(-4.0..4.0),
            ];
            let mut sorted = v;
            sorted.sort_by(f64::total_cmp);
            if sorted[1] - sorted[0] >= 0.25 && sorted[2] - sorted[1] >= 0.25 {
                return v.to_vec();
            }
        }
    }
    fn check_params(&self, p: &[f64]) -> std::result::Result<(), String> {
        if p[0] == p[1] || p[0] == p[2] || p[1] == p[2] {
            return Err("r, s, t must be pairwise distinct".into());
        }
        Ok(())
    }
    fn source(&self, p: &[f64]) -> Result<Side> {
        complete(
            "LIAPUNOV",
            Params::from([("r", p[0]), ("s", p[1]), ("t", p[2])]),
        )
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        single("HOLDER_EXT_W", Params::new())
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let (x, w) = (pt.tuple(0), pt.tuple(1));
        let (p, a, b) = liapunov_to_holder(pt.param(0), pt.param(1), pt.param(2), x, w, ctx)?;
        Ok(Image::Point(Point::new(
            vec![],
            vec![p],
            vec![a, b, w.to_vec()],
        )))
    }
    fn identities(
        &self,
        _: &[f64],
        from: &Point,
        image: &Image,
        ctx: &PrecisionContext,
    ) -> std::result::Result<(), String> {
        let img = image.point().ok_or("expected a point")?;
        let (x, s, t) = (from.tuple(0), from.param(1), from.param(2));
        let (a, b, p) = (img.tuple(0), img.tuple(1), img.param(0));
        let tol = ctx.rel_tolerance;
        for i in 0..x.len() {
            let xs = pow_scalar(&x[i], s, ctx).map_err(|e| e.to_string())?;
            if !rel_close(&ctx.val(&a[i] * &b[i]), &xs, tol, ctx.prec()) {
                return Err(format!("a_{i} b_{i} != x_{i}^s"));
            }
            let ap = pow_scalar(&a[i], p, ctx).map_err(|e| e.to_string())?;
            let xt = pow_scalar(&x[i], t, ctx).map_err(|e| e.to_string())?;
            if !rel_close(&ap, &xt, tol, ctx.prec()) {
                return Err(format!("a_{i}^p != x_{i}^t"));
            }
        }
        if img
            .tuple(2)
            .iter()
            .zip(from.tuple(1))
            .any(|(u, v)| !rel_close(u, v, tol, ctx.prec()))
        {
            return Err("weights changed".into());
        }
        Ok(())
    }
}

pub(super) fn register(v: &mut Vec<Family>) {
    let map = |round_trip| Shape::Map {
        two_way: true,
        round_trip,
    };
    let one_way = Shape::Map {
        two_way: false,
        round_trip: RoundTrip::None,
    };
    let mut f = |name, reference, source, target, shape, imp: Box<dyn Witness>| {
        v.push(Family {
            name,
            reference,
            source,
            target,
            shape,
            imp,
        })
    };
    f(
        "W_REFLECT",
        "Thm 4.1.1, phi(x) = -x/(1+x)",
        "BERNOULLI_B1",
        "BERNOULLI_B2",
        map(RoundTrip::Both),
        Box::new(Reflect {
            source: "BERNOULLI_B1",
            target: "BERNOULLI_B2",
            complete: true,
        }),
    );
    f(
        "W_RECIP",
        "§4.1.2, alpha -> 1/alpha",
        "BERNOULLI_B1",
        "BERNOULLI_B4",
        map(RoundTrip::Both),
        Box::new(Recip),
    );
    f(
        "W_REFLECT_NEG",
        "§4.1.3, phi(x) = -x/(1+x)",
        "BERNOULLI_B4",
        "BERNOULLI_B5",
        map(RoundTrip::Both),
        Box::new(Reflect {
            source: "BERNOULLI_B4",
            target: "BERNOULLI_B5",
            complete: false,
        }),
    );
    f(
        "W_SHIFT",
        "Ex 4.2.1.2, phi(x) = x - 1",
        "BERNOULLI_FULL",
        "POWER_SECANT",
        map(RoundTrip::Both),
        Box::new(Shift),
    );
    f(
        "W_RATIO",
        "Ex 4.2.2.1, phi(u, v) = v/u",
        "POWER_SECANT",
        "GA2W",
        map(RoundTrip::SourceSide),
        Box::new(Ratio),
    );
    f(
        "W_YOUNG",
        "Lemma 3.2.1, 1 - alpha = 1/p",
        "GA2W",
        "YOUNG",
        map(RoundTrip::Both),
        Box::new(Young),
    );
    f(
        "W_NORMALIZE",
        "Thm 3.1.2, a_i / P^(1/n)",
        "GANE",
        "PROD1_SUM",
        map(RoundTrip::TargetSide),
        Box::new(Normalize { by_sum: false }),
    );
    f(
        "W_NORMALIZE_SUM",
        "Thm 3.1.2, a_i / S",
        "GANE",
        "SUM1_PROD",
        map(RoundTrip::TargetSide),
        Box::new(Normalize { by_sum: true }),
    );
    f(
        "W_DOUBLE_SPECIALIZE",
        "Thm 3.1.1, specialization",
        "GA2E",
        "GANE",
        one_way,
        Box::new(DoubleSpecialize),
    );
    f(
        "W_PECARIC_SPECIALIZE",
        "§4.2.3, constant tuple",
        "BERNOULLI_B3",
        "PECARIC",
        one_way,
        Box::new(PecaricSpecialize),
    );
    f(
        "W_RADO_REWRITE",
        "Thm 3.2.4.1, (w_n/W_n) a_n + (W_{n-1}/W_n) G_{n-1} >= G_n",
        "RADO",
        "GA2W",
        map(RoundTrip::TargetSide),
        Box::new(RadoRewrite),
    );
    f(
        "W_BUSH",
        "Ex 4.2.2.6, psi(p, q) = p/q",
        "BERNOULLI_FULL",
        "BUSH",
        map(RoundTrip::SourceSide),
        Box::new(Bush),
    );
    f(
        "W_RUTHING",
        "§4.2.2.3, phi(a, b) = a/b - 1",
        "BERNOULLI_FULL",
        "RUTHING",
        map(RoundTrip::SourceSide),
        Box::new(Ruthing),
    );
    f(
        "W_WEIGHT_ABSORB",
        "§6.6.1, w^(1/p) a",
        "HOLDER_W",
        "HOLDER",
        map(RoundTrip::TargetSide),
        Box::new(WeightAbsorb(Absorb::Holder)),
    );
    f(
        "W_WEIGHT_ABSORB_MINK",
        "§6.6.1, w^(1/p) a",
        "MINKOWSKI_W",
        "MINKOWSKI_EXT",
        map(RoundTrip::TargetSide),
        Box::new(WeightAbsorb(Absorb::Minkowski)),
    );
    f(
        "W_WEIGHT_ABSORB_EXT",
        "§6.6.1, w^(1/p) a",
        "HOLDER_EXT_W",
        "HOLDER_EXT",
        map(RoundTrip::TargetSide),
        Box::new(WeightAbsorb(Absorb::HolderExt)),
    );
    f(
        "W_RADON_MAP",
        "§6.6.2, change of variable",
        "HOLDER",
        "RADON",
        map(RoundTrip::Both),
        Box::new(RadonMap),
    );
    f(
        "W_POWER_IDENT",
        "Thm 5.1, M^[s] = (A(b; w))^(1/s)",
        "POWERMEAN",
        "POWERMEAN",
        map(RoundTrip::Both),
        Box::new(PowerIdent),
    );
    f(
        "W_LIAPUNOV_MAP",
        "§6.6.3.1, p = (r-t)/(r-s), a = x^(t/p), b = x^(r/p')",
        "LIAPUNOV",
        "HOLDER_EXT_W",
        one_way,
        Box::new(LiapunovMap),
    );
}
