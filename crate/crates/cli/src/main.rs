//! `ineq`: list, check and explain catalog inequalities, verify witnesses and
//! run the full sampling suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ineq_core::numerics::{render, DEFAULT_PRECISION};
use ineq_core::{
    classify, complementary, list_catalog, list_witnesses, lookup, lookup_witness, run_suite,
    verify_witness, Params, Point, PrecisionContext, SuiteConfig, Verdict, WitnessReport,
};

#[derive(Parser)]
#[command(
    name = "ineq",
    version,
    about = "Executable catalog of classical inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Emit JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Samples per entry (suite) or per direction (witness).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Working precision in bits.
    #[arg(long, global = true)]
    precision: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries and witnesses.
    List,
    /// Classify one point.
    Check {
        name: String,
        /// Variables, or the first tuple for tuple entries. A `w=` token
        /// starts the weights, e.g. `1,4,w=1,1`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Further tuples in layout order (e.g. `b` for Hölder).
        #[arg(long = "tuple", allow_hyphen_values = true)]
        tuples: Vec<String>,
        /// Parameter binding `name=value`; repeatable.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
        /// Use the complementary form.
        #[arg(long)]
        complement: bool,
    },
    /// Verify one witness, or all of them when no name is given.
    Witness {
        name: Option<String>,
        /// Pin witness parameters, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Run the full suite.
    Suite {
        /// JSON file mirroring the suite configuration.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Describe an entry in prose.
    Explain { name: String },
}

/// Usage errors exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Checks,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let ctx = PrecisionContext::with_bits(g.precision.unwrap_or(DEFAULT_PRECISION))?;
    match cli.command {
        Command::List => list(g),
        Command::Check {
            name,
            point,
            weights,
            tuples,
            params,
            complement,
        } => check(
            g,
            &ctx,
            &name,
            &point,
            weights.as_deref(),
            &tuples,
            &params,
            complement,
        ),
        Command::Witness { name, params } => witness(g, &ctx, name.as_deref(), params.as_deref()),
        Command::Suite { config } => suite(g, config),
        Command::Explain { name } => {
            let d = lookup(&name, &Params::new())?;
            print!("{}", d.explain());
            Ok(())
        }
    }
}

fn print_json<T: Serialize>(v: &T) -> Outcome {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn list(g: &Global) -> Outcome {
    let entries = list_catalog();
    let witnesses: Vec<_> = list_witnesses()
        .iter()
        .map(|w| WitnessListing {
            name: w.name(),
            source: w.source_name(),
            target: w.target_name(),
            two_way: w.two_way(),
            params: w.param_names(),
            paper_ref: w.reference(),
        })
        .collect();
    if g.json {
        return print_json(&serde_json::json!({ "entries": entries, "witnesses": witnesses }));
    }
    for e in &entries {
        let c = if e.has_complement {
            " (+complement)"
        } else {
            ""
        };
        println!("{:22} {}{c}\n{:22} {}", e.name, e.paper_ref, "", e.params);
    }
    println!();
    for w in &witnesses {
        let arrow = if w.two_way { "<->" } else { "->" };
        println!("{:22} {} {arrow} {}", w.name, w.source, w.target);
    }
    Ok(())
}

#[derive(Serialize)]
struct WitnessListing {
    name: &'static str,
    source: &'static str,
    target: &'static str,
    two_way: bool,
    params: &'static [&'static str],
    paper_ref: &'static str,
}

fn parse_list(s: &str, ctx: &PrecisionContext) -> Result<Vec<ineq_core::Scalar>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| Ok(ctx.parse(t)?))
        .collect()
}

/// Split `1,4,w=1,1` into values and weights.
fn split_point(s: &str) -> (String, Option<String>) {
    match s.split_once("w=") {
        Some((a, w)) => (a.trim_end_matches(',').to_string(), Some(w.to_string())),
        None => (s.to_string(), None),
    }
}

fn parse_params(items: &[String]) -> Result<Params, Failure> {
    let mut p = Params::new();
    for item in items {
        let (k, v) = item.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("parameter `{item}` must look like name=value"))
        })?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("cannot parse `{v}`")))?;
        p = p.with(k.trim(), v);
    }
    Ok(p)
}

#[derive(Serialize)]
struct CheckOutput {
    entry: String,
    verdict: Verdict,
    lhs: String,
    rhs: String,
    margin: String,
    point: Point,
}

#[allow(clippy::too_many_arguments)]
fn check(
    g: &Global,
    ctx: &PrecisionContext,
    name: &str,
    point: &str,
    weights: Option<&str>,
    tuples: &[String],
    params: &[String],
    complement: bool,
) -> Outcome {
    let bindings = parse_params(params)?;
    let mut d = lookup(name, &bindings)?;
    if complement {
        d = complementary(&d)?;
    }
    let (first, inline_w) = split_point(point);
    let first = parse_list(&first, ctx)?;
    let weights = match (inline_w.as_deref(), weights) {
        (Some(w), _) | (None, Some(w)) => Some(parse_list(w, ctx)?),
        (None, None) => None,
    };

    let bound = d.params();
    let mut pvals = Vec::new();
    for slot in d.param_names() {
        let v = bound
            .get(slot)
            .ok_or_else(|| Failure::Usage(format!("{} needs --param {slot}=<value>", d.name())))?;
        pvals.push(ctx.from_f64(v));
    }

    let pt = if d.tuple_names().is_empty() {
        Point::new(first, pvals, vec![])
    } else {
        let n = first.len();
        let mut queue = vec![first].into_iter().chain(
            tuples
                .iter()
                .map(|t| parse_list(t, ctx))
                .collect::<Result<Vec<_>, _>>()?,
        );
        let mut ts = Vec::new();
        for &slot in d.tuple_names() {
            if slot == "w" {
                ts.push(weights.clone().unwrap_or_else(|| vec![ctx.one(); n]));
            } else {
                let t = queue.next().ok_or_else(|| {
                    Failure::Usage(format!("{} needs a tuple for `{slot}` (--tuple)", d.name()))
                })?;
                ts.push(t);
            }
        }
        Point::new(vec![], pvals, ts)
    };

    let c = classify(&d, &pt, ctx)?;
    if g.json {
        print_json(&CheckOutput {
            entry: d.label(),
            verdict: c.verdict,
            lhs: render(&c.lhs),
            rhs: render(&c.rhs),
            margin: render(&c.margin),
            point: pt,
        })?;
    } else if c.verdict == Verdict::OutsideValidity {
        println!("OutsideValidity");
    } else {
        println!("{} margin={}", c.verdict, c.margin.to_f64());
    }
    if c.verdict == Verdict::Violated {
        return Err(Failure::Checks);
    }
    Ok(())
}

fn witness(
    g: &Global,
    ctx: &PrecisionContext,
    name: Option<&str>,
    params: Option<&str>,
) -> Outcome {
    let samples = g.samples.unwrap_or(1000);
    let seed = g.seed.unwrap_or(0);
    let ws = match name {
        Some(n) => {
            let mut w = lookup_witness(n)?;
            if let Some(p) = params {
                let p: Vec<f64> = p
                    .split(',')
                    .map(|t| t.trim().parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| Failure::Usage(format!("bad witness parameters: {e}")))?;
                w = w.with_params(&p)?;
            }
            vec![w]
        }
        None => list_witnesses(),
    };
    let reports: Vec<WitnessReport> = ws
        .iter()
        .map(|w| verify_witness(w, samples, seed, ctx))
        .collect();
    if g.json {
        if reports.len() == 1 {
            print_json(&reports[0])?;
        } else {
            print_json(&reports)?;
        }
    } else {
        for r in &reports {
            let status = if r.passed() { "ok" } else { "FAILED" };
            println!(
                "{:24} {status:6} samples={} directions={} skipped={} failures={}",
                r.witness,
                r.samples,
                r.directions.len(),
                r.skipped,
                r.failures.len()
            );
            if let Some(f) = r.failures.first() {
                println!(
                    "    first failure: {:?} #{} expected {} got {}",
                    f.direction, f.index, f.expected, f.got
                );
            }
        }
    }
    if reports.iter().all(WitnessReport::passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn suite(g: &Global, path: Option<PathBuf>) -> Outcome {
    let mut config = match path {
        Some(p) => serde_json::from_str::<SuiteConfig>(&std::fs::read_to_string(&p)?)?,
        None => SuiteConfig::default(),
    };
    if let Some(s) = g.seed {
        config.seed = s;
    }
    if let Some(n) = g.samples {
        config.samples_per_entry = n;
        config.witness_samples = n;
    }
    if let Some(b) = g.precision {
        config.precision_bits = b;
    }
    let report = run_suite(&config)?;
    if g.json {
        println!("{}", report.to_json());
    } else {
        for e in &report.entries {
            let c = &e.counts;
            println!(
                "{:24} strict={} equality={} violated={} outside={} overflow={}",
                e.name, c.strict, c.equality, c.violated, c.outside, c.overflow
            );
        }
        for w in &report.witnesses {
            println!(
                "{:24} witness failures={} skipped={}",
                w.witness,
                w.failures.len(),
                w.skipped
            );
        }
        let lim = report.limits.iter().filter(|l| l.passed).count();
        let mono = report.monotonicity.iter().filter(|m| m.passed).count();
        println!("limits {lim}/{} passed", report.limits.len());
        println!("monotonicity {mono}/{} passed", report.monotonicity.len());
        for c in &report.chains {
            println!("chain {:10} failures={}/{}", c.name, c.failures, c.trials);
        }
        println!(
            "{} in {:.1}s: {} violations, {} witness failures",
            if report.passed() { "PASS" } else { "FAIL" },
            report.wall_time,
            report.violations(),
            report.witness_failures()
        );
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
