//! Registry of inequalities as descriptors `{V, E, F, direction}`.
//!
//! A descriptor fixes an entry, zero or more parameter bindings and a region:
//! the primary validity set `V` or the complementary set `~V` on which the
//! reversed inequality holds.

mod bernoulli;
mod holder;
mod means;
mod sampling;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    classify_sign, comparison_scale, render, PrecisionContext, Scalar, SignClass,
};

pub use sampling::{derive_seed, stream_id, Sampler};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    LeqHolds,
    GeqHolds,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::LeqHolds => Direction::GeqHolds,
            Direction::GeqHolds => Direction::LeqHolds,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Direction::LeqHolds => "<=",
            Direction::GeqHolds => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    Primary,
    Complement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    StrictlyHolds,
    Equality,
    Violated,
    OutsideValidity,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointClassification {
    pub verdict: Verdict,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub margin: Scalar,
}

/// Scalar variables, parameter values in slot order, and tuples of equal length.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Point {
    pub vars: Vec<Scalar>,
    pub params: Vec<Scalar>,
    pub tuples: Vec<Vec<Scalar>>,
}

impl Point {
    pub fn new(vars: Vec<Scalar>, params: Vec<Scalar>, tuples: Vec<Vec<Scalar>>) -> Self {
        Self {
            vars,
            params,
            tuples,
        }
    }

    pub fn var(&self, i: usize) -> &Scalar {
        &self.vars[i]
    }

    pub fn param(&self, i: usize) -> &Scalar {
        &self.params[i]
    }

    pub fn tuple(&self, i: usize) -> &[Scalar] {
        &self.tuples[i]
    }

    pub fn len(&self) -> usize {
        self.tuples.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every coordinate re-rounded to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Point {
        let r = |v: &Scalar| Float::with_val(prec, v);
        Point {
            vars: self.vars.iter().map(r).collect(),
            params: self.params.iter().map(r).collect(),
            tuples: self
                .tuples
                .iter()
                .map(|t| t.iter().map(r).collect())
                .collect(),
        }
    }

    pub fn to_repr(&self) -> PointRepr {
        let r = |v: &Scalar| render(v);
        PointRepr {
            vars: self.vars.iter().map(r).collect(),
            params: self.params.iter().map(r).collect(),
            tuples: self
                .tuples
                .iter()
                .map(|t| t.iter().map(r).collect())
                .collect(),
        }
    }
}

/// Decimal-string form of a point for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRepr {
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub tuples: Vec<Vec<String>>,
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ParamKind {
    Real,
    Integer,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ParamSlot {
    pub name: &'static str,
    pub kind: ParamKind,
    /// Used when the caller leaves the slot unbound; such slots are never sampled.
    pub default: Option<f64>,
}

pub(crate) const fn real(name: &'static str) -> ParamSlot {
    ParamSlot {
        name,
        kind: ParamKind::Real,
        default: None,
    }
}

pub(crate) const fn int(name: &'static str) -> ParamSlot {
    ParamSlot {
        name,
        kind: ParamKind::Integer,
        default: None,
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Layout {
    pub vars: &'static [&'static str],
    pub params: &'static [ParamSlot],
    pub tuples: &'static [&'static str],
}

/// Behaviour of one registry entry. Region-dependent methods receive the
/// region being checked; entries without a complement only see `Primary`.
pub(crate) trait Form: Send + Sync {
    fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)>;
    fn valid(&self, pt: &Point, region: Region, ctx: &PrecisionContext) -> bool;
    fn equal(&self, pt: &Point, region: Region, ctx: &PrecisionContext) -> bool;
    fn sample(&self, s: &mut Sampler, region: Region) -> Point;
    fn equality_point(&self, s: &mut Sampler, region: Region) -> Point;
    /// A point of `V \ E` at relative distance about `rel` from an equality point.
    fn near_equality(&self, s: &mut Sampler, region: Region, rel: f64) -> Point;
    fn check_params(&self, _bound: &[Option<f64>]) -> std::result::Result<(), String> {
        Ok(())
    }
    fn min_len(&self) -> usize {
        1
    }
}

pub(crate) struct Entry {
    pub name: &'static str,
    pub reference: &'static str,
    pub layout: Layout,
    pub direction: Direction,
    pub has_complement: bool,
    pub formula: &'static str,
    pub validity: &'static str,
    pub equality: &'static str,
    pub complement_validity: &'static str,
    pub note: &'static str,
    pub fixed: &'static [(&'static str, f64)],
    pub form: Box<dyn Form>,
}

fn registry() -> &'static [Entry] {
    static REGISTRY: OnceLock<Vec<Entry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut v = Vec::new();
        means::register(&mut v);
        bernoulli::register(&mut v);
        holder::register(&mut v);
        v
    })
}

pub(crate) fn entry(name: &str) -> Result<&'static Entry> {
    registry()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Named parameter bindings, e.g. `{"n": 3, "p": 2}`. For entries with
/// tuples, `n` is the tuple length.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Params(pub BTreeMap<String, f64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.0.insert(key.to_string(), value);
        self
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        self.0.get(key).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<const N: usize> From<[(&str, f64); N]> for Params {
    fn from(items: [(&str, f64); N]) -> Self {
        Params(items.iter().map(|(k, v)| (k.to_string(), *v)).collect())
    }
}

/// Deliberate corruptions used to check that the checker notices broken formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Mutation {
    /// Exchange the two sides of the formula.
    SwapSides,
    /// Add `delta * max(|lhs|, |rhs|, 1)` to the side that should be smaller.
    Bias(f64),
}

#[derive(Clone)]
pub struct InequalityDescriptor {
    entry: &'static Entry,
    bound: Vec<Option<f64>>,
    n: Option<usize>,
    region: Region,
    flipped: bool,
    mutation: Option<Mutation>,
}

impl fmt::Debug for InequalityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InequalityDescriptor")
            .field("name", &self.entry.name)
            .field("params", &self.params())
            .field("region", &self.region)
            .field("flipped", &self.flipped)
            .field("mutation", &self.mutation)
            .finish()
    }
}

impl InequalityDescriptor {
    pub fn name(&self) -> &'static str {
        self.entry.name
    }

    pub fn reference(&self) -> &'static str {
        self.entry.reference
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn has_complement(&self) -> bool {
        self.entry.has_complement
    }

    pub fn tuple_len(&self) -> Option<usize> {
        self.n
    }

    pub fn direction(&self) -> Direction {
        let mut d = self.entry.direction;
        if self.region == Region::Complement {
            d = d.reversed();
        }
        if self.flipped {
            d = d.reversed();
        }
        d
    }

    /// Display label: `~NAME` for the complementary form, `!` suffix when flipped.
    pub fn label(&self) -> String {
        let mut s = String::new();
        if self.region == Region::Complement {
            s.push('~');
        }
        s.push_str(self.entry.name);
        if self.flipped {
            s.push('!');
        }
        s
    }

    /// The bound parameters, with `n` for tuple entries.
    pub fn params(&self) -> Params {
        let mut p = Params::new();
        if let Some(n) = self.n {
            p.0.insert("n".into(), n as f64);
        }
        for (slot, b) in self.entry.layout.params.iter().zip(&self.bound) {
            if let Some(v) = b {
                p.0.insert(slot.name.into(), *v);
            }
        }
        p
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.entry.layout.params.iter().map(|s| s.name).collect()
    }

    pub fn var_names(&self) -> &'static [&'static str] {
        self.entry.layout.vars
    }

    pub fn tuple_names(&self) -> &'static [&'static str] {
        self.entry.layout.tuples
    }

    /// Same validity set and formula, opposite claimed direction. Used to
    /// check that a falsification search can break a reversed inequality.
    pub fn flipped(&self) -> Self {
        let mut d = self.clone();
        d.flipped = !d.flipped;
        d
    }

    pub fn mutated(&self, m: Mutation) -> Self {
        let mut d = self.clone();
        d.mutation = Some(m);
        d
    }

    pub fn with_len(&self, n: usize) -> Result<Self> {
        let mut p = self.params();
        p.0.insert("n".into(), n as f64);
        let d = lookup(self.entry.name, &p)?;
        Ok(Self {
            region: self.region,
            flipped: self.flipped,
            mutation: self.mutation,
            ..d
        })
    }

    pub fn explain(&self) -> String {
        let e = self.entry;
        let mut s = format!(
            "{} [{}]\n  formula:  {}\n  holds:    {} on V\n  V:        {}\n  E:        {}\n",
            e.name,
            e.reference,
            e.formula,
            e.direction.symbol(),
            e.validity,
            e.equality
        );
        let word = |d: Direction| match d {
            Direction::LeqHolds => "at most",
            Direction::GeqHolds => "at least",
        };
        s += &format!(
            "  In words: whenever {}, the left side is {} the right side, with equality exactly when {}.\n",
            e.validity,
            word(e.direction),
            e.equality
        );
        if e.has_complement {
            s += &format!(
                "  Complement: whenever {}, the left side is {} the right side.\n",
                e.complement_validity,
                word(e.direction.reversed())
            );
            s += &format!(
                "  ~V:       {} (reversed: {} holds)\n",
                e.complement_validity,
                e.direction.reversed().symbol()
            );
        } else {
            s += "  ~V:       none registered\n";
        }
        if !e.note.is_empty() {
            s += &format!("  note:     {}\n", e.note);
        }
        s
    }

    /// Structural check: counts, tuple lengths, bindings and integrality.
    pub fn check_arity(&self, pt: &Point) -> Result<()> {
        let l = &self.entry.layout;
        if pt.vars.len() != l.vars.len()
            || pt.params.len() != l.params.len()
            || pt.tuples.len() != l.tuples.len()
        {
            return Err(Error::Arity(format!(
                "{} expects {} vars, {} params, {} tuples; got {}, {}, {}",
                self.entry.name,
                l.vars.len(),
                l.params.len(),
                l.tuples.len(),
                pt.vars.len(),
                pt.params.len(),
                pt.tuples.len()
            )));
        }
        if let Some(first) = pt.tuples.first() {
            if pt.tuples.iter().any(|t| t.len() != first.len()) {
                return Err(Error::Arity("tuples differ in length".into()));
            }
            if first.is_empty() {
                return Err(Error::Arity("empty tuple".into()));
            }
            if let Some(n) = self.n {
                if first.len() != n {
                    return Err(Error::Arity(format!(
                        "expected length {n}, got {}",
                        first.len()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Membership in the validity set of this descriptor's region.
    pub fn in_validity(&self, pt: &Point, ctx: &PrecisionContext) -> bool {
        if self.check_arity(pt).is_err() {
            return false;
        }
        if !pt
            .vars
            .iter()
            .chain(&pt.params)
            .chain(pt.tuples.iter().flatten())
            .all(|v| v.is_finite())
        {
            return false;
        }
        if !pt.tuples.is_empty() && pt.len() < self.entry.form.min_len() {
            return false;
        }
        for ((slot, b), v) in self
            .entry
            .layout
            .params
            .iter()
            .zip(&self.bound)
            .zip(&pt.params)
        {
            if let Some(b) = b {
                if *v != *b {
                    return false;
                }
            }
            if slot.kind == ParamKind::Integer && !v.is_integer() {
                return false;
            }
        }
        self.entry.form.valid(pt, self.region, ctx)
    }

    pub fn in_equality(&self, pt: &Point, ctx: &PrecisionContext) -> bool {
        self.in_validity(pt, ctx) && self.entry.form.equal(pt, self.region, ctx)
    }

    /// `(lhs, rhs)` with any mutation applied.
    pub fn evaluate(&self, pt: &Point, ctx: &PrecisionContext) -> Result<(Scalar, Scalar)> {
        let (lhs, rhs) = self.entry.form.evaluate(pt, ctx)?;
        Ok(match self.mutation {
            None => (lhs, rhs),
            Some(Mutation::SwapSides) => (rhs, lhs),
            Some(Mutation::Bias(delta)) => {
                let bump = ctx.val(comparison_scale(&lhs, &rhs, ctx) * delta);
                match self.direction() {
                    Direction::LeqHolds => (ctx.val(&lhs + &bump), rhs),
                    Direction::GeqHolds => (lhs, ctx.val(&rhs + &bump)),
                }
            }
        })
    }

    pub fn sampler<'a>(&'a self, seed: u64, ctx: &PrecisionContext) -> Sampler<'a> {
        Sampler::new(seed, ctx, &self.bound, self.n)
    }

    /// Raw draw from the entry's sampler, before validity filtering.
    pub(crate) fn draw(&self, s: &mut Sampler) -> Point {
        self.entry.form.sample(s, self.region)
    }

    pub(crate) fn draw_equality(&self, s: &mut Sampler) -> Point {
        self.entry.form.equality_point(s, self.region)
    }

    pub(crate) fn draw_near_equality(&self, s: &mut Sampler, rel: f64) -> Point {
        self.entry.form.near_equality(s, self.region, rel)
    }

    /// An equality point of this region, retried until it is valid.
    pub fn equality_point(&self, seed: u64, ctx: &PrecisionContext) -> Result<Point> {
        let mut s = self.sampler(seed, ctx);
        for _ in 0..64 {
            let p = self.draw_equality(&mut s);
            if self.in_equality(&p, ctx) {
                return Ok(p);
            }
        }
        Err(Error::SamplerExhausted(self.label()))
    }

    /// A point of `V \ E` close to an equality point.
    pub fn near_equality_point(
        &self,
        seed: u64,
        rel: f64,
        ctx: &PrecisionContext,
    ) -> Result<Point> {
        let mut s = self.sampler(seed, ctx);
        for _ in 0..64 {
            let p = self.draw_near_equality(&mut s, rel);
            if self.in_validity(&p, ctx) && !self.entry.form.equal(&p, self.region, ctx) {
                return Ok(p);
            }
        }
        Err(Error::SamplerExhausted(self.label()))
    }
}

/// Resolve `name` with `params`. Unbound parameters stay free and are drawn
/// by the sampler; `n` fixes the tuple length for tuple entries.
pub fn lookup(name: &str, params: &Params) -> Result<InequalityDescriptor> {
    let e = entry(name)?;
    let bad = |reason: String| Error::BadParams {
        name: e.name.to_string(),
        reason,
    };
    let l = &e.layout;
    let mut bound: Vec<Option<f64>> = l.params.iter().map(|s| s.default).collect();
    let mut n = None;
    for &(k, v) in e.fixed {
        let i = l
            .params
            .iter()
            .position(|s| s.name == k)
            .expect("fixed slot exists");
        bound[i] = Some(v);
    }
    for (k, &v) in &params.0 {
        if !v.is_finite() {
            return Err(bad(format!("{k} must be finite")));
        }
        if k == "n" && !l.tuples.is_empty() {
            if v.fract() != 0.0 || v < e.form.min_len() as f64 {
                return Err(bad(format!("n must be an integer >= {}", e.form.min_len())));
            }
            n = Some(v as usize);
            continue;
        }
        let Some(i) = l.params.iter().position(|s| s.name == k) else {
            return Err(bad(format!("unknown parameter `{k}`")));
        };
        if let Some(&(_, fv)) = e.fixed.iter().find(|(fk, _)| *fk == k) {
            if fv != v {
                return Err(bad(format!("{k} is fixed at {fv}")));
            }
        }
        if l.params[i].kind == ParamKind::Integer && v.fract() != 0.0 {
            return Err(bad(format!("{k} must be an integer")));
        }
        bound[i] = Some(v);
    }
    e.form.check_params(&bound).map_err(bad)?;
    Ok(InequalityDescriptor {
        entry: e,
        bound,
        n,
        region: Region::Primary,
        flipped: false,
        mutation: None,
    })
}

pub fn complementary(d: &InequalityDescriptor) -> Result<InequalityDescriptor> {
    if !d.entry.has_complement {
        return Err(Error::NoComplement(d.entry.name.to_string()));
    }
    let mut c = d.clone();
    c.region = match d.region {
        Region::Primary => Region::Complement,
        Region::Complement => Region::Primary,
    };
    Ok(c)
}

pub fn classify(
    d: &InequalityDescriptor,
    pt: &Point,
    ctx: &PrecisionContext,
) -> Result<PointClassification> {
    d.check_arity(pt)?;
    if !d.in_validity(pt, ctx) {
        return Ok(PointClassification {
            verdict: Verdict::OutsideValidity,
            lhs: ctx.zero(),
            rhs: ctx.zero(),
            margin: ctx.zero(),
        });
    }
    let (lhs, rhs) = d.evaluate(pt, ctx)?;
    let margin = match d.direction() {
        Direction::LeqHolds => ctx.val(&rhs - &lhs),
        Direction::GeqHolds => ctx.val(&lhs - &rhs),
    };
    let scale = comparison_scale(&lhs, &rhs, ctx);
    let verdict = match classify_sign(&margin, &scale, ctx) {
        SignClass::Positive => Verdict::StrictlyHolds,
        SignClass::Zero => Verdict::Equality,
        SignClass::Negative => Verdict::Violated,
    };
    Ok(PointClassification {
        verdict,
        lhs,
        rhs,
        margin,
    })
}

/// Margin divided by the comparison scale; the quantity greedy search descends.
pub(crate) fn normalized_margin(c: &PointClassification, ctx: &PrecisionContext) -> Scalar {
    ctx.val(&c.margin / comparison_scale(&c.lhs, &c.rhs, ctx))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Arity {
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub tuples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogListing {
    pub name: String,
    pub params: String,
    pub paper_ref: String,
    pub arity: Arity,
    pub has_complement: bool,
}

/// Every entry once, in registration order.
pub fn list_catalog() -> Vec<CatalogListing> {
    registry()
        .iter()
        .map(|e| {
            let mut params: Vec<String> = Vec::new();
            if !e.layout.tuples.is_empty() {
                params.push(format!("n>={}", e.form.min_len()));
            }
            for s in e.layout.params {
                match e.fixed.iter().find(|(k, _)| *k == s.name) {
                    Some((_, v)) => params.push(format!("{}={v}", s.name)),
                    None if s.kind == ParamKind::Integer => {
                        params.push(format!("{} integer", s.name))
                    }
                    None => params.push(s.name.to_string()),
                }
            }
            let constraint = if params.is_empty() {
                e.validity.to_string()
            } else {
                format!("{}; {}", params.join(", "), e.validity)
            };
            CatalogListing {
                name: e.name.to_string(),
                params: constraint,
                paper_ref: e.reference.to_string(),
                arity: Arity {
                    vars: e.layout.vars.iter().map(|s| s.to_string()).collect(),
                    params: e.layout.params.iter().map(|s| s.name.to_string()).collect(),
                    tuples: e.layout.tuples.iter().map(|s| s.to_string()).collect(),
                },
                has_complement: e.has_complement,
            }
        })
        .collect()
}

// Shared helpers for the entry implementations.

pub(crate) fn pos(v: &Scalar) -> bool {
    v.is_finite() && *v > 0
}

pub(crate) fn all_pos(xs: &[Scalar]) -> bool {
    xs.iter().all(pos)
}

pub(crate) fn in_unit(a: &Scalar) -> bool {
    *a >= 0 && *a <= 1
}

pub(crate) fn is_zero_or_one(a: &Scalar) -> bool {
    a.is_zero() || *a == 1
}

/// All entries of `xs` agree with the first within the band.
pub(crate) fn constant(xs: &[Scalar], ctx: &PrecisionContext) -> bool {
    xs.iter()
        .all(|x| crate::numerics::approx_eq(x, &xs[0], ctx))
}

/// `b_i / f(a_i)` is constant, i.e. `b` is proportional to `f(a)`.
pub(crate) fn proportional(a: &[Scalar], b: &[Scalar], ctx: &PrecisionContext) -> bool {
    let ratios: Vec<Scalar> = a.iter().zip(b).map(|(x, y)| ctx.val(y / x)).collect();
    constant(&ratios, ctx)
}

pub(crate) fn sum(xs: &[Scalar], ctx: &PrecisionContext) -> Scalar {
    crate::means::total(xs, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names: Vec<_> = list_catalog().into_iter().map(|l| l.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }

    #[test]
    fn unknown_parameter_rejected() {
        assert!(matches!(
            lookup("GA2E", &Params::from([("p", 2.0)])),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            lookup("NOPE", &Params::new()),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn fixed_parameters_cannot_be_overridden() {
        assert!(lookup("CAUCHY", &Params::from([("p", 3.0)])).is_err());
        assert!(lookup("CAUCHY", &Params::from([("p", 2.0)])).is_ok());
    }

    fn descriptors() -> Vec<InequalityDescriptor> {
        let mut out = Vec::new();
        for l in list_catalog() {
            let d = lookup(&l.name, &Params::new()).unwrap();
            if let Ok(c) = complementary(&d) {
                out.push(c);
            }
            out.push(d);
        }
        out
    }

    #[test]
    fn equality_points_classify_as_equality() {
        let ctx = PrecisionContext::default();
        for d in descriptors() {
            for i in 0..20 {
                let p = d
                    .equality_point(derive_seed(7, stream_id(&d.label()), i), &ctx)
                    .unwrap();
                let c = classify(&d, &p, &ctx).unwrap();
                assert_eq!(
                    c.verdict,
                    Verdict::Equality,
                    "{} at {:?}",
                    d.label(),
                    p.to_repr()
                );
            }
        }
    }

    #[test]
    fn near_equality_points_are_strict() {
        let ctx = PrecisionContext::default();
        for d in descriptors() {
            for i in 0..20 {
                let seed = derive_seed(11, stream_id(&d.label()), i);
                let p = d.near_equality_point(seed, 1e-3, &ctx).unwrap();
                let c = classify(&d, &p, &ctx).unwrap();
                assert_eq!(
                    c.verdict,
                    Verdict::StrictlyHolds,
                    "{} at {:?}",
                    d.label(),
                    p.to_repr()
                );
            }
        }
    }

    #[test]
    fn samples_never_violate() {
        let ctx = PrecisionContext::default();
        for d in descriptors() {
            let mut s = d.sampler(stream_id(&d.label()), &ctx);
            let mut inside = 0;
            for _ in 0..300 {
                let p = d.draw(&mut s);
                let c = classify(&d, &p, &ctx).unwrap();
                assert_ne!(
                    c.verdict,
                    Verdict::Violated,
                    "{} at {:?}",
                    d.label(),
                    p.to_repr()
                );
                if c.verdict != Verdict::OutsideValidity {
                    inside += 1;
                }
            }
            assert!(
                inside > 100,
                "{}: only {inside} samples inside V",
                d.label()
            );
        }
    }
}
