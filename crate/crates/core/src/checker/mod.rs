//! Sampling-based verification: soundness on `V \ E`, equality on `E`,
//! counterexample search and the aggregate suite.

mod analysis;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{
    classify, complementary, derive_seed, list_catalog, lookup, normalized_margin, stream_id,
    InequalityDescriptor, Mutation, Params, Point, PointRepr, Verdict,
};
use crate::error::{Error, Result};
use crate::numerics::{render, PrecisionContext, Scalar};
use crate::transforms::{list_witnesses, verify_witness, WitnessReport};

pub use analysis::{
    check_function_monotonicity, check_power_mean_limits, monotonicity_grid, popoviciu_chain,
    popoviciu_nondecreasing, rado_chain, rado_increasing, ChainReport, FunctionFamily, LimitReport,
    MonotonicityReport, LIMIT_GRID,
};

/// Relative size of the perturbation applied to boundary samples.
pub const BOUNDARY_PERTURBATION: f64 = 1e-6;
const MAX_DRAWS: usize = 256;
/// Counterexamples kept per entry; the counts are always complete.
const MAX_COUNTEREXAMPLES: usize = 10;
/// Precision multiplier used to confirm a violation before reporting it.
const CONFIRM_FACTOR: u32 = 4;

/// One catalog entry to check, with optional parameter bindings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntrySpec {
    pub name: String,
    #[serde(default)]
    pub params: Params,
    /// Check the complementary form instead.
    #[serde(default)]
    pub complement: bool,
    /// Deliberately corrupt the formula (mutation testing).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
}

impl EntrySpec {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            params: Params::new(),
            complement: false,
            mutation: None,
        }
    }

    pub fn resolve(&self) -> Result<InequalityDescriptor> {
        let mut d = lookup(&self.name, &self.params)?;
        if self.complement {
            d = complementary(&d)?;
        }
        if let Some(m) = self.mutation {
            d = d.mutated(m);
        }
        Ok(d)
    }
}

/// Every registered entry with default parameters, followed by its
/// complementary form when one is registered.
pub fn default_entries() -> Vec<EntrySpec> {
    let mut out = Vec::new();
    for l in list_catalog() {
        out.push(EntrySpec::new(&l.name));
        if l.has_complement {
            out.push(EntrySpec {
                complement: true,
                ..EntrySpec::new(&l.name)
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    /// Entries to check; empty means [`default_entries`].
    pub entries: Vec<EntrySpec>,
    pub samples_per_entry: usize,
    pub witness_samples: usize,
    pub seed: u64,
    pub precision_bits: u32,
    /// Fraction of samples drawn as perturbed equality points.
    pub boundary_fraction: f64,
    pub limit_tuples: usize,
    pub limit_tolerance: f64,
    pub monotonicity_a: Vec<f64>,
    pub chain_trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            entries: Vec::new(),
            samples_per_entry: 1000,
            witness_samples: 1000,
            seed: 0,
            precision_bits: crate::numerics::DEFAULT_PRECISION,
            boundary_fraction: 0.1,
            limit_tuples: 100,
            limit_tolerance: 1e-4,
            monotonicity_a: vec![-2.0, -1.0, 0.0, 1.0, 2.0],
            chain_trials: 1000,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples_per_entry == 0 {
            return Err(Error::BadContext(
                "samples_per_entry must be at least 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.boundary_fraction) {
            return Err(Error::BadContext(
                "boundary_fraction must lie in [0, 1]".into(),
            ));
        }
        self.ctx().map(|_| ())
    }

    pub fn ctx(&self) -> Result<PrecisionContext> {
        PrecisionContext::with_bits(self.precision_bits)
    }

    pub fn entries(&self) -> Vec<EntrySpec> {
        if self.entries.is_empty() {
            default_entries()
        } else {
            self.entries.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub strict: usize,
    pub equality: usize,
    pub violated: usize,
    pub outside: usize,
    pub overflow: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.strict + self.equality + self.violated + self.outside + self.overflow
    }

    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::StrictlyHolds => self.strict += 1,
            Verdict::Equality => self.equality += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::OutsideValidity => self.outside += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub entry: String,
    pub point: PointRepr,
    pub margin: String,
    pub seed: u64,
    pub index: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub params: Params,
    pub counts: Counts,
    pub counterexamples: Vec<Counterexample>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.counts.violated == 0
    }
}

/// A point in `V` of `d`. With probability `boundary_fraction` it is an
/// equality point perturbed by [`BOUNDARY_PERTURBATION`].
pub fn sample_point(
    d: &InequalityDescriptor,
    rng: &mut ChaCha8Rng,
    boundary_fraction: f64,
    ctx: &PrecisionContext,
) -> Result<Point> {
    let near = rng.gen_bool(boundary_fraction.clamp(0.0, 1.0));
    let mut s = d.sampler(rng.gen(), ctx);
    for _ in 0..MAX_DRAWS {
        let pt = if near {
            d.draw_near_equality(&mut s, BOUNDARY_PERTURBATION)
        } else {
            d.draw(&mut s)
        };
        if d.in_validity(&pt, ctx) {
            return Ok(pt);
        }
    }
    Err(Error::SamplerExhausted(d.label()))
}

/// Re-classify at `CONFIRM_FACTOR` times the precision.
fn confirmed_violation(d: &InequalityDescriptor, pt: &Point, ctx: &PrecisionContext) -> bool {
    let hi = ctx.scaled(CONFIRM_FACTOR);
    matches!(classify(d, &pt.with_prec(hi.prec()), &hi), Ok(c) if c.verdict == Verdict::Violated)
}

enum Sample {
    Verdict(Verdict, Option<Counterexample>),
    Overflow,
}

pub fn run_inequality_check(d: &InequalityDescriptor, config: &SuiteConfig) -> Result<EntryReport> {
    config.validate()?;
    let ctx = config.ctx()?;
    let label = d.label();
    let stream = stream_id(&label);
    let samples: Vec<Sample> = (0..config.samples_per_entry as u64)
        .into_par_iter()
        .map(|i| {
            let seed = derive_seed(config.seed, stream, i);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let Ok(pt) = sample_point(d, &mut rng, config.boundary_fraction, &ctx) else {
                return Sample::Verdict(Verdict::OutsideValidity, None);
            };
            let c = match classify(d, &pt, &ctx) {
                Ok(c) => c,
                Err(_) => return Sample::Overflow,
            };
            if c.verdict != Verdict::Violated {
                return Sample::Verdict(c.verdict, None);
            }
            if !confirmed_violation(d, &pt, &ctx) {
                // Roundoff artifact: the sign is not stable under more precision.
                return Sample::Verdict(Verdict::Equality, None);
            }
            let cx = Counterexample {
                entry: label.clone(),
                point: pt.to_repr(),
                margin: render(&c.margin),
                seed,
                index: i,
            };
            Sample::Verdict(Verdict::Violated, Some(cx))
        })
        .collect();
    let mut counts = Counts::default();
    let mut counterexamples = Vec::new();
    for s in samples {
        match s {
            Sample::Overflow => counts.overflow += 1,
            Sample::Verdict(v, cx) => {
                counts.add(v);
                if let Some(cx) = cx {
                    if counterexamples.len() < MAX_COUNTEREXAMPLES {
                        counterexamples.push(cx);
                    }
                }
            }
        }
    }
    Ok(EntryReport {
        name: label,
        params: d.params(),
        counts,
        counterexamples,
    })
}

enum Score {
    Violated(Scalar),
    Margin(Scalar),
}

fn score(d: &InequalityDescriptor, pt: &Point, ctx: &PrecisionContext) -> Option<Score> {
    let c = classify(d, pt, ctx).ok()?;
    match c.verdict {
        Verdict::OutsideValidity => None,
        Verdict::Violated if confirmed_violation(d, pt, ctx) => Some(Score::Violated(c.margin)),
        _ => Some(Score::Margin(normalized_margin(&c, ctx))),
    }
}

/// Random search over `V` followed by greedy multiplicative coordinate
/// descent on the normalized margin. Returns the first confirmed violation.
/// `budget` counts evaluations.
pub fn search_violation(
    d: &InequalityDescriptor,
    budget: usize,
    seed: u64,
    ctx: &PrecisionContext,
) -> Option<(Point, Scalar)> {
    let stream = stream_id(&d.label());
    let random = (budget / 2).max(1);
    let mut used = 0;
    let mut best: Option<(Point, Scalar)> = None;
    for i in 0..random as u64 {
        used += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, stream, i));
        let Ok(pt) = sample_point(d, &mut rng, 0.1, ctx) else {
            continue;
        };
        match score(d, &pt, ctx) {
            Some(Score::Violated(m)) => return Some((pt, m)),
            Some(Score::Margin(m)) if best.as_ref().is_none_or(|(_, b)| m < *b) => {
                best = Some((pt, m))
            }
            _ => {}
        }
    }
    let (mut pt, mut best_m) = best?;
    let coords = pt.vars.len() + pt.tuples.iter().map(Vec::len).sum::<usize>();
    let mut delta = 0.1;
    while used < budget && delta > 1e-12 {
        let mut improved = false;
        'coords: for k in 0..coords {
            for f in [1.0 + delta, 1.0 - delta] {
                if used >= budget {
                    return None;
                }
                used += 1;
                let mut cand = pt.clone();
                let v = coord_mut(&mut cand, k);
                *v *= f;
                if !d.in_validity(&cand, ctx) {
                    continue;
                }
                match score(d, &cand, ctx) {
                    Some(Score::Violated(m)) => return Some((cand, m)),
                    Some(Score::Margin(m)) if m < best_m => {
                        pt = cand;
                        best_m = m;
                        improved = true;
                        break 'coords;
                    }
                    _ => {}
                }
            }
        }
        if !improved {
            delta /= 2.0;
        }
    }
    None
}

fn coord_mut(pt: &mut Point, k: usize) -> &mut Scalar {
    if k < pt.vars.len() {
        return &mut pt.vars[k];
    }
    let mut k = k - pt.vars.len();
    for t in pt.tuples.iter_mut() {
        if k < t.len() {
            return &mut t[k];
        }
        k -= t.len();
    }
    unreachable!("coordinate index in range")
}

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub version: u32,
    pub seed: u64,
    pub precision_bits: u32,
    pub entries: Vec<EntryReport>,
    pub witnesses: Vec<WitnessReport>,
    pub limits: Vec<LimitReport>,
    pub monotonicity: Vec<MonotonicityReport>,
    pub chains: Vec<ChainReport>,
    /// Seconds; the only field that varies between identical runs.
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn violations(&self) -> usize {
        self.entries.iter().map(|e| e.counts.violated).sum()
    }

    pub fn witness_failures(&self) -> usize {
        self.witnesses.iter().map(|w| w.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
            && self.witness_failures() == 0
            && self.limits.iter().all(|l| l.passed)
            && self.monotonicity.iter().all(|m| m.passed)
            && self.chains.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let ctx = config.ctx()?;
    let start = Instant::now();
    let entries = config
        .entries()
        .iter()
        .map(|spec| {
            spec.resolve()
                .and_then(|d| run_inequality_check(&d, config))
        })
        .collect::<Result<Vec<_>>>()?;
    let witnesses = if config.witness_samples == 0 {
        Vec::new()
    } else {
        list_witnesses()
            .iter()
            .map(|w| verify_witness(w, config.witness_samples, config.seed, &ctx))
            .collect()
    };
    let limits = analysis::sampled_limits(
        config.limit_tuples,
        config.limit_tolerance,
        config.seed,
        &ctx,
    )?;
    let mut monotonicity = Vec::new();
    for &a in &config.monotonicity_a {
        let grid = monotonicity_grid(a, &ctx);
        let a = ctx.from_f64(a);
        for family in [FunctionFamily::F, FunctionFamily::G] {
            monotonicity.push(check_function_monotonicity(family, &a, &grid, &ctx)?);
        }
    }
    let chains = if config.chain_trials == 0 {
        Vec::new()
    } else {
        vec![
            rado_chain(config.chain_trials, config.seed, &ctx),
            popoviciu_chain(config.chain_trials, config.seed, &ctx),
        ]
    };
    Ok(SuiteReport {
        version: REPORT_VERSION,
        seed: config.seed,
        precision_bits: config.precision_bits,
        entries,
        witnesses,
        limits,
        monotonicity,
        chains,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests;
