//! Derivations: a target instance together with the source instances and
//! identities it follows from.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{backward_reduce, complete, single, Family, Image, Premise, Shape, Side, Witness};
use crate::catalog::{lookup, InequalityDescriptor, Params, Point};
use crate::error::Result;
use crate::means::{arithmetic_of, geometric_of, guarded, total, WeightedTuple};
use crate::numerics::{approx_eq, pow_scalar, PrecisionContext, Scalar};

type Check = std::result::Result<(), String>;

pub(super) fn check_k(k: f64) -> Check {
    if k.fract() != 0.0 || !(1.0..=6.0).contains(&k) {
        return Err("k must be an integer in 1..=6".into());
    }
    Ok(())
}

pub(super) fn check_len(n: f64, min: usize) -> Check {
    if n.fract() != 0.0 || n < min as f64 || n > 64.0 {
        return Err(format!("n must be an integer in {min}..=64"));
    }
    Ok(())
}

fn sides(
    d: &InequalityDescriptor,
    pt: &Point,
    ctx: &PrecisionContext,
) -> std::result::Result<(Scalar, Scalar), String> {
    d.evaluate(pt, ctx).map_err(|e| e.to_string())
}

fn expect_close(a: &Scalar, b: &Scalar, ctx: &PrecisionContext, what: &str) -> Check {
    if approx_eq(a, b, ctx) {
        Ok(())
    } else {
        Err(format!("{what}: {} vs {}", a.to_f64(), b.to_f64()))
    }
}

fn premises(image: &Image) -> std::result::Result<&[Premise], String> {
    match image {
        Image::Premises(ps) => Ok(ps),
        Image::Point(_) => Err("expected premises".into()),
    }
}

fn ones(n: usize, ctx: &PrecisionContext) -> Vec<Scalar> {
    vec![ctx.one(); n]
}

/// Cauchy's doubling: AM-GM for `2^k` terms from the two-term case applied
/// at every node of a binary tree of block means.
struct Double;

impl Witness for Double {
    fn param_names(&self) -> &'static [&'static str] {
        &["k"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![2.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        vec![rng.gen_range(1..=4) as f64]
    }
    fn check_params(&self, p: &[f64]) -> Check {
        check_k(p[0])
    }
    fn source(&self, _: &[f64]) -> Result<Side> {
        single("GA2E", Params::new())
    }
    fn target(&self, p: &[f64]) -> Result<Side> {
        single("GANE", Params::from([("n", 2f64.powi(p[0] as i32))]))
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let d = lookup("GA2E", &Params::new())?;
        let mut level = pt.tuple(0).to_vec();
        let mut out = Vec::new();
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len() / 2);
            for pair in level.chunks(2) {
                out.push(Premise {
                    descriptor: d.clone(),
                    point: Point::new(pair.to_vec(), vec![], vec![]),
                });
                next.push(ctx.val(ctx.val(&pair[0] + &pair[1]) / 2u32));
            }
            level = next;
        }
        Ok(Image::Premises(out))
    }
    fn identities(&self, _: &[f64], from: &Point, image: &Image, ctx: &PrecisionContext) -> Check {
        let ps = premises(image)?;
        let a = from.tuple(0);
        if ps.len() + 1 != a.len() {
            return Err(format!("{} premises for {} terms", ps.len(), a.len()));
        }
        // Walk the tree level by level: (means, geometric means) of each block.
        let mut level: Vec<(Scalar, Scalar)> = a.iter().map(|v| (v.clone(), v.clone())).collect();
        let mut k = 0;
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len() / 2);
            for pair in level.chunks(2) {
                let pr = &ps[k];
                k += 1;
                expect_close(pr.point.var(0), &pair[0].0, ctx, "left premise input")?;
                expect_close(pr.point.var(1), &pair[1].0, ctx, "right premise input")?;
                let (_, rhs) = sides(&pr.descriptor, &pr.point, ctx)?;
                let gm = ctx.val(ctx.val(&pair[0].1 * &pair[1].1).sqrt());
                next.push((rhs, gm));
            }
            level = next;
        }
        let w = ones(a.len(), ctx);
        expect_close(&level[0].0, &arithmetic_of(a, &w, ctx), ctx, "root mean")?;
        expect_close(
            &level[0].1,
            &geometric_of(a, &w, ctx).map_err(|e| e.to_string())?,
            ctx,
            "root geometric mean",
        )
    }
}

/// Backward induction: AM-GM for `m` weighted terms from the `n`-term case at
/// `(a_1, …, a_m, A_m, …, A_m)` with unit padding weights.
struct Backward;

impl Witness for Backward {
    fn param_names(&self) -> &'static [&'static str] {
        &["n", "m"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![4.0, 2.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let n = rng.gen_range(3..=8);
        vec![n as f64, rng.gen_range(2..n) as f64]
    }
    fn check_params(&self, p: &[f64]) -> Check {
        check_len(p[0], 3)?;
        check_len(p[1], 2)?;
        if p[1] >= p[0] {
            return Err("need m < n".into());
        }
        Ok(())
    }
    fn source(&self, p: &[f64]) -> Result<Side> {
        single("GAN", Params::from([("n", p[0])]))
    }
    fn target(&self, p: &[f64]) -> Result<Side> {
        single("GAN", Params::from([("n", p[1])]))
    }
    fn forward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let (n, m) = (p[0] as usize, p[1] as usize);
        let mut a = pt.tuple(0).to_vec();
        let mut w = pt.tuple(1).to_vec();
        a.resize(n, ctx.one());
        w.resize(n, ctx.one());
        let b = backward_reduce(&WeightedTuple::new(a, w)?, m, ctx)?;
        Ok(Image::Premises(vec![Premise {
            descriptor: lookup("GAN", &Params::from([("n", p[0])]))?,
            point: Point::new(
                vec![],
                vec![],
                vec![b.values().to_vec(), b.weights().to_vec()],
            ),
        }]))
    }
    fn identities(&self, _: &[f64], from: &Point, image: &Image, ctx: &PrecisionContext) -> Check {
        let ps = premises(image)?;
        let pr = ps.first().ok_or("no premise")?;
        let (a, w) = (from.tuple(0), from.tuple(1));
        let m = a.len();
        let b = pr.point.tuple(0);
        for i in 0..m {
            expect_close(&b[i], &a[i], ctx, "prefix of the premise")?;
        }
        let am = arithmetic_of(a, w, ctx);
        let gm = geometric_of(a, w, ctx).map_err(|e| e.to_string())?;
        let (lhs, rhs) = sides(&pr.descriptor, &pr.point, ctx)?;
        expect_close(&rhs, &am, ctx, "premise mean equals A_m")?;
        let theta = ctx.val(total(w, ctx) / total(pr.point.tuple(1), ctx));
        let mix = pow_scalar(&gm, &theta, ctx)
            .and_then(|g| pow_scalar(&am, &ctx.val(1 - &theta), ctx).map(|a| ctx.val(g * a)));
        expect_close(
            &lhs,
            &mix.map_err(|e| e.to_string())?,
            ctx,
            "premise geometric mean",
        )
    }
}

/// Induction step of the multi-term Bernoulli form: split off the last term.
struct PecaricStep;

impl Witness for PecaricStep {
    fn param_names(&self) -> &'static [&'static str] {
        &["n"]
    }
    fn default_params(&self) -> Vec<f64> {
        vec![3.0]
    }
    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        vec![rng.gen_range(3..=8) as f64]
    }
    fn check_params(&self, p: &[f64]) -> Check {
        check_len(p[0], 3)
    }
    fn source(&self, p: &[f64]) -> Result<Side> {
        single("PECARIC", Params::from([("n", p[0] - 1.0)]))
    }
    fn target(&self, p: &[f64]) -> Result<Side> {
        single("PECARIC", Params::from([("n", p[0])]))
    }
    fn forward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let n = p[0] as usize;
        let (a, w) = (pt.tuple(0), pt.tuple(1));
        let g = guarded(ctx, 32);
        let head = total(&w[..n - 1], &g);
        let wn: Vec<Scalar> = w[..n - 1].iter().map(|v| ctx.val(v / &head)).collect();
        let x = arithmetic_of(&a[..n - 1], &w[..n - 1], &g);
        Ok(Image::Premises(vec![
            Premise {
                descriptor: lookup("PECARIC", &Params::from([("n", p[0] - 1.0)]))?,
                point: Point::new(vec![], vec![], vec![a[..n - 1].to_vec(), wn]),
            },
            Premise {
                descriptor: lookup("PECARIC", &Params::from([("n", 2.0)]))?,
                point: Point::new(
                    vec![],
                    vec![],
                    vec![
                        vec![ctx.round(&x), a[n - 1].clone()],
                        vec![ctx.round(&head), w[n - 1].clone()],
                    ],
                ),
            },
        ]))
    }
    fn identities(&self, _: &[f64], from: &Point, image: &Image, ctx: &PrecisionContext) -> Check {
        let ps = premises(image)?;
        let [p1, p2] = ps else {
            return Err("expected two premises".into());
        };
        let (a, w) = (from.tuple(0), from.tuple(1));
        let n = a.len();
        for (x, y) in p1.point.tuple(0).iter().zip(&a[..n - 1]) {
            expect_close(x, y, ctx, "first premise terms")?;
        }
        let d = lookup("PECARIC", &Params::from([("n", n as f64)])).map_err(|e| e.to_string())?;
        let (tl, tr) = sides(&d, from, ctx)?;
        let (l1, r1) = sides(&p1.descriptor, &p1.point, ctx)?;
        let (l2, r2) = sides(&p2.descriptor, &p2.point, ctx)?;
        expect_close(&r2, &tr, ctx, "second premise right side")?;
        let head = total(&w[..n - 1], ctx);
        let last =
            pow_scalar(&ctx.val(1 + &a[n - 1]), &w[n - 1], ctx).map_err(|e| e.to_string())?;
        let lift = |v: &Scalar| {
            pow_scalar(v, &head, ctx)
                .map(|x| ctx.val(x * &last))
                .map_err(|e| e.to_string())
        };
        expect_close(&lift(&l1)?, &tl, ctx, "target left side")?;
        expect_close(&lift(&r1)?, &l2, ctx, "second premise left side")
    }
}

/// Minkowski from two instances of Hölder with second factor `(a + b)^(p-1)`.
struct HolderMink;

impl Witness for HolderMink {
    fn source(&self, _: &[f64]) -> Result<Side> {
        complete("HOLDER", Params::new())
    }
    fn target(&self, _: &[f64]) -> Result<Side> {
        complete("MINKOWSKI_EXT", Params::new())
    }
    fn target_domain(&self, _: &[f64], pt: &Point, _: &PrecisionContext) -> bool {
        *pt.param(0) != 1
    }
    fn forward(&self, _: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let p = pt.param(0);
        let g = guarded(ctx, 32);
        let e = g.val(p - 1u32);
        let (a, b) = (pt.tuple(0), pt.tuple(1));
        let c = a
            .iter()
            .zip(b)
            .map(|(x, y)| pow_scalar(&g.val(x + y), &e, &g).map(|v| ctx.round(&v)))
            .collect::<Result<Vec<_>>>()?;
        let side = complete("HOLDER", Params::new())?;
        let mk = |x: &[Scalar]| -> Result<Premise> {
            let point = Point::new(vec![], vec![p.clone()], vec![x.to_vec(), c.clone()]);
            let descriptor = side
                .iter()
                .find(|d| d.in_validity(&point, ctx))
                .cloned()
                .ok_or(crate::Error::OutsideValidity)?;
            Ok(Premise { descriptor, point })
        };
        Ok(Image::Premises(vec![mk(a)?, mk(b)?]))
    }
    fn identities(&self, _: &[f64], from: &Point, image: &Image, ctx: &PrecisionContext) -> Check {
        let ps = premises(image)?;
        let [h1, h2] = ps else {
            return Err("expected two premises".into());
        };
        let p = from.param(0);
        let (a, b) = (from.tuple(0), from.tuple(1));
        for i in 0..a.len() {
            expect_close(&h1.point.tuple(0)[i], &a[i], ctx, "first premise terms")?;
            expect_close(&h2.point.tuple(0)[i], &b[i], ctx, "second premise terms")?;
        }
        let mut s = ctx.zero();
        for (x, y) in a.iter().zip(b) {
            s += pow_scalar(&ctx.val(x + y), p, ctx).map_err(|e| e.to_string())?;
        }
        let d = lookup("MINKOWSKI_EXT", &Params::new()).map_err(|e| e.to_string())?;
        let (tl, tr) = sides(&d, from, ctx)?;
        let (l1, r1) = sides(&h1.descriptor, &h1.point, ctx)?;
        let (l2, r2) = sides(&h2.descriptor, &h2.point, ctx)?;
        let inv_p = ctx.val(p.recip_ref());
        let pw = |e: &Scalar| pow_scalar(&s, e, ctx).map_err(|e| e.to_string());
        expect_close(&ctx.val(&l1 + &l2), &s, ctx, "sum of premise left sides")?;
        expect_close(&tl, &pw(&inv_p)?, ctx, "target left side")?;
        let tail = pw(&ctx.val(1 - &inv_p))?;
        expect_close(
            &ctx.val(&tr * &tail),
            &ctx.val(&r1 + &r2),
            ctx,
            "sum of premise right sides",
        )
    }
}

pub(super) fn register(v: &mut Vec<Family>) {
    let mut f = |name, reference, source, target, imp: Box<dyn Witness>| {
        v.push(Family {
            name,
            reference,
            source,
            target,
            shape: Shape::Derivation,
            imp,
        })
    };
    f(
        "W_DOUBLE",
        "Thm 3.1.1, forward induction n -> 2n",
        "GA2E",
        "GANE",
        Box::new(Double),
    );
    f(
        "W_BACKWARD",
        "Thm 3.1.1 / 3.2.3, backward step",
        "GAN",
        "GAN",
        Box::new(Backward),
    );
    f(
        "W_PECARIC_STEP",
        "§4.2.3, induction on n",
        "PECARIC",
        "PECARIC",
        Box::new(PecaricStep),
    );
    f(
        "W_HOLDER_MINK",
        "Thm 6.3 proof, c_i = (a_i + b_i)^(p-1)",
        "HOLDER",
        "MINKOWSKI_EXT",
        Box::new(HolderMink),
    );
}
