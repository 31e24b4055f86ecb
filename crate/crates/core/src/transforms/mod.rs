//! Equivalence witnesses: executable versions of the arguments that turn one
//! catalog inequality into another.
//!
//! A witness is either a *point map* (a change of variables, possibly
//! invertible) or a *derivation* (an instance of the target is obtained from
//! one or more instances of the source plus algebraic identities). Both are
//! checked by seeded sampling in [`verify_witness`].

mod derive;
mod maps;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    classify, complementary, derive_seed, lookup, stream_id, InequalityDescriptor, Params, Point,
    PointClassification, PointRepr, Verdict,
};
use crate::error::{Error, Result};
use crate::means::{arithmetic_of, guarded, WeightedTuple};
use crate::numerics::{
    classify_sign, comparison_scale, pow_scalar, rel_close, render, PrecisionContext, Scalar,
    SignClass,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapDirection {
    Forward,
    Backward,
}

/// Which composition of a two-way map is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RoundTrip {
    /// `backward(forward(x)) = x` and `forward(backward(y)) = y`.
    Both,
    /// Only `backward(forward(x)) = x` on the source side.
    SourceSide,
    /// Only `forward(backward(y)) = y` on the target side.
    TargetSide,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    Map {
        two_way: bool,
        round_trip: RoundTrip,
    },
    /// Forward takes a target instance and returns the source instances it
    /// follows from.
    Derivation,
}

/// One instance of a catalog inequality used as a premise.
#[derive(Debug, Clone)]
pub struct Premise {
    pub descriptor: InequalityDescriptor,
    pub point: Point,
}

#[derive(Debug, Clone)]
pub enum Image {
    Point(Point),
    Premises(Vec<Premise>),
}

impl Image {
    pub fn point(&self) -> Option<&Point> {
        match self {
            Image::Point(p) => Some(p),
            Image::Premises(_) => None,
        }
    }

    fn reprs(&self) -> Vec<PointRepr> {
        match self {
            Image::Point(p) => vec![p.to_repr()],
            Image::Premises(ps) => ps.iter().map(|p| p.point.to_repr()).collect(),
        }
    }

    fn corrupt(&mut self, delta: f64) {
        let bump = |p: &mut Point| {
            for v in p.vars.iter_mut().chain(p.tuples.iter_mut().flatten()) {
                *v += delta;
            }
        };
        match self {
            Image::Point(p) => bump(p),
            Image::Premises(ps) => ps.iter_mut().for_each(|p| bump(&mut p.point)),
        }
    }
}

/// A list of descriptors treated as one inequality: a point is classified by
/// the first descriptor whose validity set contains it. Used for complete
/// inequalities `(I, ~I)`.
pub(crate) type Side = Vec<InequalityDescriptor>;

pub(crate) fn single(name: &str, params: Params) -> Result<Side> {
    Ok(vec![lookup(name, &params)?])
}

pub(crate) fn complete(name: &str, params: Params) -> Result<Side> {
    let d = lookup(name, &params)?;
    let c = complementary(&d)?;
    Ok(vec![d, c])
}

fn containing<'a>(
    side: &'a Side,
    pt: &Point,
    ctx: &PrecisionContext,
) -> Option<&'a InequalityDescriptor> {
    side.iter().find(|d| d.in_validity(pt, ctx))
}

/// Behaviour of one witness. `p` holds the witness parameters (for example
/// the tuple length of a doubling step).
pub(crate) trait Witness: Send + Sync {
    fn param_names(&self) -> &'static [&'static str] {
        &[]
    }
    fn default_params(&self) -> Vec<f64> {
        Vec::new()
    }
    fn draw_params(&self, _rng: &mut ChaCha8Rng) -> Vec<f64> {
        self.default_params()
    }
    fn check_params(&self, _p: &[f64]) -> std::result::Result<(), String> {
        Ok(())
    }
    fn source(&self, p: &[f64]) -> Result<Side>;
    fn target(&self, p: &[f64]) -> Result<Side>;
    /// Descriptors sampled in the forward direction; may bind more than `source`.
    fn source_draws(&self, p: &[f64]) -> Result<Side> {
        self.source(p)
    }
    fn target_draws(&self, p: &[f64]) -> Result<Side> {
        self.target(p)
    }
    /// Part of the source validity set on which the map is defined.
    fn source_domain(&self, _p: &[f64], _pt: &Point, _ctx: &PrecisionContext) -> bool {
        true
    }
    fn target_domain(&self, _p: &[f64], _pt: &Point, _ctx: &PrecisionContext) -> bool {
        true
    }
    fn forward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image>;
    fn backward(&self, _p: &[f64], _pt: &Point, _ctx: &PrecisionContext) -> Option<Result<Point>> {
        None
    }
    /// `f` with `margin(src) = f * margin(tgt)`, when the map rescales the margin.
    fn margin_factor(
        &self,
        _p: &[f64],
        _src: &Point,
        _tgt: &Point,
        _ctx: &PrecisionContext,
    ) -> Option<Scalar> {
        None
    }
    /// Identities linking a source point and its image (maps), or a target
    /// point and its premises (derivations).
    fn identities(
        &self,
        _p: &[f64],
        _from: &Point,
        _image: &Image,
        _ctx: &PrecisionContext,
    ) -> std::result::Result<(), String> {
        Ok(())
    }
}

pub(crate) struct Family {
    pub name: &'static str,
    pub reference: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub shape: Shape,
    pub imp: Box<dyn Witness>,
}

fn registry() -> &'static [Family] {
    static REGISTRY: OnceLock<Vec<Family>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut v = Vec::new();
        maps::register(&mut v);
        derive::register(&mut v);
        v
    })
}

/// A registered witness, optionally pinned to parameters and optionally
/// corrupted (every forward image shifted by `delta`) for mutation testing.
#[derive(Clone)]
pub struct EquivalenceWitness {
    family: &'static Family,
    params: Option<Vec<f64>>,
    corruption: Option<f64>,
}

impl std::fmt::Debug for EquivalenceWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EquivalenceWitness")
            .field("name", &self.family.name)
            .field("params", &self.params)
            .field("corruption", &self.corruption)
            .finish()
    }
}

impl EquivalenceWitness {
    pub fn name(&self) -> &'static str {
        self.family.name
    }

    pub fn reference(&self) -> &'static str {
        self.family.reference
    }

    pub fn source_name(&self) -> &'static str {
        self.family.source
    }

    pub fn target_name(&self) -> &'static str {
        self.family.target
    }

    pub fn shape(&self) -> Shape {
        self.family.shape
    }

    pub fn two_way(&self) -> bool {
        matches!(self.family.shape, Shape::Map { two_way: true, .. })
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        self.family.imp.param_names()
    }

    /// Pinned parameters, or the defaults used by [`apply_witness`].
    pub fn params(&self) -> Vec<f64> {
        self.params
            .clone()
            .unwrap_or_else(|| self.family.imp.default_params())
    }

    pub fn with_params(&self, p: &[f64]) -> Result<Self> {
        if p.len() != self.param_names().len() {
            return Err(Error::BadParams {
                name: self.name().into(),
                reason: format!(
                    "expected {} parameters, got {}",
                    self.param_names().len(),
                    p.len()
                ),
            });
        }
        self.family
            .imp
            .check_params(p)
            .map_err(|reason| Error::BadParams {
                name: self.name().into(),
                reason,
            })?;
        Ok(Self {
            params: Some(p.to_vec()),
            ..self.clone()
        })
    }

    pub fn corrupted(&self, delta: f64) -> Self {
        Self {
            corruption: Some(delta),
            ..self.clone()
        }
    }

    pub fn is_corrupted(&self) -> bool {
        self.corruption.is_some()
    }

    fn label(&self) -> String {
        match self.corruption {
            Some(d) => format!("{}+{d}", self.name()),
            None => self.name().to_string(),
        }
    }

    fn forward(&self, p: &[f64], pt: &Point, ctx: &PrecisionContext) -> Result<Image> {
        let mut img = self.family.imp.forward(p, pt, ctx)?;
        if let Some(d) = self.corruption {
            img.corrupt(d);
        }
        Ok(img)
    }
}

pub fn lookup_witness(name: &str) -> Result<EquivalenceWitness> {
    registry()
        .iter()
        .find(|f| f.name.eq_ignore_ascii_case(name))
        .map(|family| EquivalenceWitness {
            family,
            params: None,
            corruption: None,
        })
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn list_witnesses() -> Vec<EquivalenceWitness> {
    registry()
        .iter()
        .map(|family| EquivalenceWitness {
            family,
            params: None,
            corruption: None,
        })
        .collect()
}

/// Map `pt` through `w`. Forward takes a source point for maps and a target
/// point for derivations.
pub fn apply_witness(
    w: &EquivalenceWitness,
    pt: &Point,
    dir: MapDirection,
    ctx: &PrecisionContext,
) -> Result<Image> {
    let imp = &w.family.imp;
    let p = w.params();
    let derivation = w.family.shape == Shape::Derivation;
    match dir {
        MapDirection::Forward => {
            let (side, domain_ok) = if derivation {
                (imp.target(&p)?, imp.target_domain(&p, pt, ctx))
            } else {
                (imp.source(&p)?, imp.source_domain(&p, pt, ctx))
            };
            if containing(&side, pt, ctx).is_none() || !domain_ok {
                return Err(Error::OutsideValidity);
            }
            w.forward(&p, pt, ctx)
        }
        MapDirection::Backward => {
            if !w.two_way() {
                return Err(Error::UnsupportedDirection(w.name().into()));
            }
            if containing(&imp.target(&p)?, pt, ctx).is_none() || !imp.target_domain(&p, pt, ctx) {
                return Err(Error::OutsideValidity);
            }
            let back = imp
                .backward(&p, pt, ctx)
                .ok_or_else(|| Error::UnsupportedDirection(w.name().into()))?;
            back.map(Image::Point)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessFailure {
    pub direction: MapDirection,
    pub index: u64,
    pub seed: u64,
    pub params: Vec<f64>,
    pub source_pt: PointRepr,
    pub mapped_pt: Vec<PointRepr>,
    pub expected: String,
    pub got: String,
    pub source_margin: Option<String>,
    pub mapped_margin: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub witness: String,
    pub samples: usize,
    pub seed: u64,
    pub directions: Vec<MapDirection>,
    /// Draws for which the sampler found no point in the witness domain.
    pub skipped: usize,
    pub failures: Vec<WitnessFailure>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Fraction of draws taken from the equality set.
const EQUALITY_FRACTION: f64 = 0.2;
const MAX_TRIES: usize = 256;
/// Round trips must agree to `2^(12 - bits)` relative.
const ROUND_TRIP_HEADROOM: i32 = 12;

enum Outcome {
    Pass,
    Skipped,
    Fail(Box<WitnessFailure>),
}

/// Sample `sample_count` points per supported direction and check every
/// structural promise of the witness. Failures are data.
pub fn verify_witness(
    w: &EquivalenceWitness,
    sample_count: usize,
    seed: u64,
    ctx: &PrecisionContext,
) -> WitnessReport {
    let mut directions = vec![MapDirection::Forward];
    if w.two_way() {
        directions.push(MapDirection::Backward);
    }
    let stream = stream_id(w.name());
    let mut skipped = 0;
    let mut failures = Vec::new();
    for &dir in &directions {
        let salt = match dir {
            MapDirection::Forward => 0,
            MapDirection::Backward => 1,
        };
        let outcomes: Vec<Outcome> = (0..sample_count as u64)
            .into_par_iter()
            .map(|i| {
                let s = derive_seed(seed, stream ^ salt, i);
                check_one(w, dir, i, s, ctx)
            })
            .collect();
        for o in outcomes {
            match o {
                Outcome::Pass => {}
                Outcome::Skipped => skipped += 1,
                Outcome::Fail(f) => failures.push(*f),
            }
        }
    }
    WitnessReport {
        witness: w.label(),
        samples: sample_count,
        seed,
        directions,
        skipped,
        failures,
    }
}

/// Context for one sample: parameters, provenance and the drawn point.
struct Case<'a> {
    w: &'a EquivalenceWitness,
    dir: MapDirection,
    index: u64,
    seed: u64,
    p: Vec<f64>,
    pt: Point,
}

impl Case<'_> {
    fn fail(
        &self,
        img: Option<&Image>,
        expected: impl Into<String>,
        got: impl Into<String>,
    ) -> Outcome {
        self.fail_with(img, expected, got, None, None)
    }

    fn fail_with(
        &self,
        img: Option<&Image>,
        expected: impl Into<String>,
        got: impl Into<String>,
        source_margin: Option<&Scalar>,
        mapped_margin: Option<&Scalar>,
    ) -> Outcome {
        Outcome::Fail(Box::new(WitnessFailure {
            direction: self.dir,
            index: self.index,
            seed: self.seed,
            params: self.p.clone(),
            source_pt: self.pt.to_repr(),
            mapped_pt: img.map(Image::reprs).unwrap_or_default(),
            expected: expected.into(),
            got: got.into(),
            source_margin: source_margin.map(render),
            mapped_margin: mapped_margin.map(render),
        }))
    }
}

fn draw_from(
    side: &Side,
    domain: impl Fn(&Point) -> bool,
    rng: &mut ChaCha8Rng,
    ctx: &PrecisionContext,
) -> Option<Point> {
    for _ in 0..MAX_TRIES {
        let d = &side[rng.gen_range(0..side.len())];
        let mut s = d.sampler(rng.gen(), ctx);
        let pt = if rng.gen_bool(EQUALITY_FRACTION) {
            d.draw_equality(&mut s)
        } else {
            d.draw(&mut s)
        };
        if d.in_validity(&pt, ctx) && domain(&pt) {
            return Some(pt);
        }
    }
    None
}

fn check_one(
    w: &EquivalenceWitness,
    dir: MapDirection,
    index: u64,
    seed: u64,
    ctx: &PrecisionContext,
) -> Outcome {
    let imp = &w.family.imp;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = w
        .params
        .clone()
        .unwrap_or_else(|| imp.draw_params(&mut rng));
    let derivation = w.family.shape == Shape::Derivation;
    let draws = match (dir, derivation) {
        (MapDirection::Forward, false) => imp.source_draws(&p),
        _ => imp.target_draws(&p),
    };
    let on_target = derivation || dir == MapDirection::Backward;
    let drawn = draws.ok().and_then(|side| {
        draw_from(
            &side,
            |pt| {
                if on_target {
                    imp.target_domain(&p, pt, ctx)
                } else {
                    imp.source_domain(&p, pt, ctx)
                }
            },
            &mut rng,
            ctx,
        )
    });
    let Some(pt) = drawn else {
        return Outcome::Skipped;
    };
    let case = Case {
        w,
        dir,
        index,
        seed,
        p,
        pt,
    };
    if derivation {
        check_derivation(&case, ctx)
    } else {
        check_map(&case, ctx)
    }
}

fn classify_in(
    side: &Side,
    pt: &Point,
    ctx: &PrecisionContext,
) -> Option<Result<PointClassification>> {
    containing(side, pt, ctx).map(|d| classify(d, pt, ctx))
}

fn holds(v: Verdict) -> bool {
    matches!(v, Verdict::StrictlyHolds | Verdict::Equality)
}

fn check_map(case: &Case, ctx: &PrecisionContext) -> Outcome {
    let imp = &case.w.family.imp;
    let p = &case.p;
    let (Ok(source), Ok(target)) = (imp.source(p), imp.target(p)) else {
        return case.fail(None, "resolvable sides", "lookup error");
    };
    let Shape::Map { round_trip, .. } = case.w.family.shape else {
        unreachable!()
    };
    let forward = case.dir == MapDirection::Forward;
    let (from_side, to_side) = if forward {
        (&source, &target)
    } else {
        (&target, &source)
    };

    let image = if forward {
        case.w.forward(p, &case.pt, ctx)
    } else {
        match imp.backward(p, &case.pt, ctx) {
            Some(r) => r.map(Image::Point),
            None => return case.fail(None, "backward map", "one-way witness"),
        }
    };
    let image = match image {
        Ok(i) => i,
        Err(e) => return case.fail(None, "mapped point", e.to_string()),
    };
    let Some(mapped) = image.point() else {
        return case.fail(Some(&image), "a single mapped point", "premises");
    };

    let from = match classify_in(from_side, &case.pt, ctx) {
        Some(Ok(c)) => c,
        _ => return case.fail(Some(&image), "drawn point in V", "evaluation error"),
    };
    let to = match classify_in(to_side, mapped, ctx) {
        None => {
            return case.fail(
                Some(&image),
                "image in V of the other side",
                "OutsideValidity",
            )
        }
        Some(Err(e)) => return case.fail(Some(&image), "finite image", e.to_string()),
        Some(Ok(c)) => c,
    };
    if !holds(from.verdict) || from.verdict != to.verdict {
        return case.fail_with(
            Some(&image),
            from.verdict.to_string(),
            to.verdict.to_string(),
            Some(&from.margin),
            Some(&to.margin),
        );
    }

    let (src_pt, tgt_pt, src_c, tgt_c) = if forward {
        (&case.pt, mapped, &from, &to)
    } else {
        (mapped, &case.pt, &to, &from)
    };
    if let Some(f) = imp.margin_factor(p, src_pt, tgt_pt, ctx) {
        let expected = ctx.val(&f * &tgt_c.margin);
        let scale = comparison_scale(&src_c.lhs, &src_c.rhs, ctx);
        let scaled = ctx.val(comparison_scale(&tgt_c.lhs, &tgt_c.rhs, ctx) * ctx.val(f.abs_ref()));
        let scale = if scaled > scale { scaled } else { scale };
        let diff = ctx.val(&src_c.margin - &expected);
        if classify_sign(&diff, &scale, ctx) != SignClass::Zero {
            return case.fail_with(
                Some(&image),
                format!("source margin = {} x mapped margin", render(&f)),
                "margins disagree",
                Some(&src_c.margin),
                Some(&tgt_c.margin),
            );
        }
    }

    if forward {
        if let Err(msg) = imp.identities(p, &case.pt, &image, ctx) {
            return case.fail(Some(&image), "identities of the map", msg);
        }
    }

    let wants_round_trip = match (round_trip, forward) {
        (RoundTrip::Both, _) => true,
        (RoundTrip::SourceSide, f) => f,
        (RoundTrip::TargetSide, f) => !f,
        (RoundTrip::None, _) => false,
    };
    if wants_round_trip {
        let back = if forward {
            imp.backward(p, mapped, ctx).map(|r| r.map(Image::Point))
        } else {
            Some(case.w.forward(p, mapped, ctx))
        };
        match back {
            Some(Ok(Image::Point(b))) => {
                if !points_close(&b, &case.pt, ctx) {
                    return case.fail(
                        Some(&image),
                        "round trip returns the drawn point",
                        format!("{:?}", b.to_repr()),
                    );
                }
            }
            Some(Ok(_)) => return case.fail(Some(&image), "round trip point", "premises"),
            Some(Err(e)) => return case.fail(Some(&image), "round trip", e.to_string()),
            None => return case.fail(Some(&image), "round trip", "no inverse map"),
        }
    }
    Outcome::Pass
}

fn check_derivation(case: &Case, ctx: &PrecisionContext) -> Outcome {
    let imp = &case.w.family.imp;
    let p = &case.p;
    let Ok(target) = imp.target(p) else {
        return case.fail(None, "resolvable sides", "lookup error");
    };
    let image = match case.w.forward(p, &case.pt, ctx) {
        Ok(i) => i,
        Err(e) => return case.fail(None, "premises", e.to_string()),
    };
    let Image::Premises(premises) = &image else {
        return case.fail(Some(&image), "premises", "a single point");
    };
    let goal = match classify_in(&target, &case.pt, ctx) {
        Some(Ok(c)) => c,
        _ => return case.fail(Some(&image), "drawn point in V", "evaluation error"),
    };
    let mut all_equal = true;
    for (k, pr) in premises.iter().enumerate() {
        let c = match classify(&pr.descriptor, &pr.point, ctx) {
            Ok(c) => c,
            Err(e) => {
                return case.fail(
                    Some(&image),
                    format!("premise {k} evaluates"),
                    e.to_string(),
                )
            }
        };
        if !holds(c.verdict) {
            return case.fail_with(
                Some(&image),
                format!("premise {k} ({}) holds", pr.descriptor.label()),
                c.verdict.to_string(),
                Some(&goal.margin),
                Some(&c.margin),
            );
        }
        all_equal &= c.verdict == Verdict::Equality;
    }
    let expected = if all_equal {
        Verdict::Equality
    } else {
        Verdict::StrictlyHolds
    };
    if goal.verdict != expected {
        return case.fail_with(
            Some(&image),
            expected.to_string(),
            goal.verdict.to_string(),
            Some(&goal.margin),
            None,
        );
    }
    if let Err(msg) = imp.identities(p, &case.pt, &image, ctx) {
        return case.fail(Some(&image), "identities of the derivation", msg);
    }
    Outcome::Pass
}

fn points_close(a: &Point, b: &Point, ctx: &PrecisionContext) -> bool {
    let tol = 2f64.powi(ROUND_TRIP_HEADROOM - ctx.prec() as i32);
    let close = |x: &[Scalar], y: &[Scalar]| {
        x.len() == y.len()
            && x.iter()
                .zip(y)
                .all(|(u, v)| rel_close(u, v, tol, ctx.prec()))
    };
    close(&a.vars, &b.vars)
        && close(&a.params, &b.params)
        && a.tuples.len() == b.tuples.len()
        && a.tuples.iter().zip(&b.tuples).all(|(x, y)| close(x, y))
}

/// `b_i = a_i` for `i <= m` and `b_i = A_m(a; w)` beyond, weights unchanged.
pub fn backward_reduce(
    t: &WeightedTuple,
    m: usize,
    ctx: &PrecisionContext,
) -> Result<WeightedTuple> {
    let n = t.len();
    if m < 2 || m >= n {
        return Err(Error::BadIndex { m, n });
    }
    let am = arithmetic_of(&t.values()[..m], &t.weights()[..m], ctx);
    let values = t
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| if i < m { v.clone() } else { am.clone() })
        .collect();
    WeightedTuple::new(values, t.weights().to_vec())
}

/// Conjugate index `p / (p - 1)`.
pub fn conjugate(p: &Scalar, ctx: &PrecisionContext) -> Result<Scalar> {
    if p.is_zero() || *p == 1 {
        return Err(Error::BadParams {
            name: "conjugate".into(),
            reason: "p must not be 0 or 1".into(),
        });
    }
    let g = guarded(ctx, 32);
    Ok(ctx.val(g.val(p / g.val(p - 1u32))))
}

/// Hölder data for Liapunov's exponents: `p = (r-t)/(r-s)`, `a = x^(t/p)`,
/// `b = x^(r/p')`, so that `a_i b_i = x_i^s`.
pub fn liapunov_to_holder(
    r: &Scalar,
    s: &Scalar,
    t: &Scalar,
    x: &[Scalar],
    w: &[Scalar],
    ctx: &PrecisionContext,
) -> Result<(Scalar, Vec<Scalar>, Vec<Scalar>)> {
    if r == s || r == t || s == t {
        return Err(Error::DegenerateExponents);
    }
    if x.len() != w.len() || x.is_empty() {
        return Err(Error::InvalidTuple(
            "x and w must be non-empty and of equal length".into(),
        ));
    }
    if x.iter().chain(w).any(|v| !v.is_finite() || *v <= 0) {
        return Err(Error::InvalidTuple("x and w must be positive".into()));
    }
    let g = guarded(ctx, 32);
    let rt = g.val(r - t);
    let p = g.val(&rt / g.val(r - s));
    let q = g.val(&rt / g.val(s - t));
    let check = g.val(g.val(&p - 1u32) * g.val(&q - 1u32));
    if !rel_close(&check, &g.one(), ctx.rel_tolerance, g.prec()) {
        return Err(Error::DegenerateExponents);
    }
    let ea = g.val(t / &p);
    let eb = g.val(r / &q);
    let mut a = Vec::with_capacity(x.len());
    let mut b = Vec::with_capacity(x.len());
    for xi in x {
        let ai = pow_scalar(xi, &ea, &g)?;
        let bi = pow_scalar(xi, &eb, &g)?;
        let xs = pow_scalar(xi, s, &g)?;
        assert!(
            rel_close(&g.val(&ai * &bi), &xs, ctx.rel_tolerance, g.prec()),
            "a b = x^s fails"
        );
        a.push(ctx.round(&ai));
        b.push(ctx.round(&bi));
    }
    Ok((ctx.round(&p), a, b))
}

#[cfg(test)]
mod tests;
