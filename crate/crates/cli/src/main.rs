use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ringlab_core::expr::{parse_ideal_spec, parse_ring_expr, parse_subset_spec, IdealSpec};
use ringlab_core::harness::{self, CorpusConfig, Report};
use ringlab_core::ideal::minimal_generating_set;
use ringlab_core::predicate::{check, CheckOptions, CheckResult, Method, Pair, Predicate, QuantifierMode};
use ringlab_core::{Error, IdealSet, Ring, RingContext};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_VIOLATIONS: u8 = 4;

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Ideals, radicals and S-J-ideals of finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size, identity, radicals and maximal ideals of a ring.
    Describe {
        ring: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Every ideal with its generators and flags.
    Ideals {
        ring: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide one predicate for one ideal.
    Check {
        ring: String,
        #[arg(long)]
        ideal: String,
        /// Required by the S-variants.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        predicate: Predicate,
        #[arg(long, value_enum, default_value = "fixed")]
        mode: ModeArg,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Address elements by raw index instead of literals.
        #[arg(long)]
        raw: bool,
    },
    /// Run the property suite over the corpus.
    Verify {
        /// Comma-separated property ids (default: all).
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        /// JSON corpus configuration.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        max_size: Option<usize>,
        /// Use the two-ring corpus {Z4, Z6}.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Recompute the worked examples.
    Reproduce {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fixed,
    PerPair,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lattice,
    Elementwise,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::CapacityExceeded(_)) => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => f.write_str(e),
        }
    }
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Failure> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).expect("reports serialize");
        std::fs::write(path, text + "\n").map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn build_ring(text: &str) -> Result<Ring, Failure> {
    Ok(parse_ring_expr(text).map_err(Error::from)?.elaborate()?)
}

fn gens(ideal: &IdealSet) -> String {
    IdealSpec::from_elems(ideal.ring(), &minimal_generating_set(ideal, 64)).to_string()
}

#[derive(Serialize)]
struct Description {
    ring: String,
    size: usize,
    commutative: bool,
    identity: Option<String>,
    ideals: usize,
    jacobson: String,
    prime_radical: String,
    units: Option<usize>,
    maximal_ideals: Vec<String>,
    local: bool,
}

fn describe(text: &str, json: &Option<PathBuf>) -> Result<u8, Failure> {
    let ring = build_ring(text)?;
    let ctx = RingContext::new(&ring);
    let l = ctx.lattice()?;
    let maximal: Vec<String> = l.maximal_ideals().into_iter().map(|m| gens(l.ideal(m))).collect();
    let d = Description {
        ring: text.trim().to_string(),
        size: ring.size(),
        commutative: ring.is_commutative(),
        identity: ring.one().map(|o| ring.format_elem(o)),
        ideals: l.len(),
        jacobson: gens(ctx.jacobson()?),
        prime_radical: gens(ctx.prime_radical()?),
        units: ctx.units().ok().map(|u| u.len()),
        local: maximal.len() == 1,
        maximal_ideals: maximal,
    };
    println!("ring           {}", d.ring);
    println!("size           {}", d.size);
    println!("commutative    {}", d.commutative);
    println!("identity       {}", d.identity.as_deref().unwrap_or("none"));
    println!("ideals         {}", d.ideals);
    println!("jacobson       {}", d.jacobson);
    println!("prime radical  {}", d.prime_radical);
    if let Some(u) = d.units {
        println!("units          {u}");
    }
    println!("maximal        {}", d.maximal_ideals.join(" "));
    println!("local          {}", d.local);
    write_json(json, &d)?;
    Ok(0)
}

#[derive(Serialize)]
struct IdealRow {
    index: usize,
    generators: String,
    size: usize,
    proper: bool,
    maximal: bool,
    prime: bool,
    nilpotent: bool,
    superfluous: bool,
}

fn ideals(text: &str, json: &Option<PathBuf>) -> Result<u8, Failure> {
    let ring = build_ring(text)?;
    let ctx = RingContext::new(&ring);
    let l = ctx.lattice()?;
    let rows: Vec<IdealRow> = (0..l.len())
        .map(|i| {
            let f = l.flags(i);
            IdealRow {
                index: i,
                generators: gens(l.ideal(i)),
                size: l.ideal(i).len(),
                proper: f.proper,
                maximal: f.maximal,
                prime: f.prime,
                nilpotent: f.nilpotent,
                superfluous: f.superfluous,
            }
        })
        .collect();
    println!("{:>5}  {:>6}  {:<9}  generators", "index", "size", "flags");
    for r in &rows {
        let flags: String = [(r.maximal, 'M'), (r.prime, 'P'), (r.nilpotent, 'N'), (r.superfluous, 'S')]
            .iter()
            .map(|&(on, c)| if on { c } else { '.' })
            .collect();
        println!("{:>5}  {:>6}  {:<9}  {}", r.index, r.size, flags, r.generators);
    }
    write_json(json, &rows)?;
    Ok(0)
}

#[derive(Serialize)]
struct ViolationOut {
    s: Option<String>,
    kind: &'static str,
    a: String,
    b: String,
}

#[derive(Serialize)]
struct CheckOut {
    ring: String,
    ideal: String,
    subset: Option<String>,
    predicate: Predicate,
    mode: QuantifierMode,
    method: Method,
    verdict: bool,
    witness_s: Option<String>,
    working_s: Vec<String>,
    counterexample: Vec<ViolationOut>,
}

fn check_out(ring: &Ring, ctx: &RingContext, text: &str, ideal: &str, subset: Option<&str>, r: &CheckResult) -> Result<CheckOut, Failure> {
    let fmt = |x: usize| ring.format_elem(x);
    let mut counterexample = Vec::new();
    for v in &r.counterexample {
        let (kind, a, b) = match v.pair {
            Pair::Elements { a, b } => ("elements", fmt(a), fmt(b)),
            Pair::Ideals { a, b } => {
                let l = ctx.lattice()?;
                ("ideals", gens(l.ideal(a)), gens(l.ideal(b)))
            }
        };
        counterexample.push(ViolationOut {
            s: v.s.map(fmt),
            kind,
            a,
            b,
        });
    }
    Ok(CheckOut {
        ring: text.trim().to_string(),
        ideal: ideal.trim().to_string(),
        subset: subset.map(|s| s.trim().to_string()),
        predicate: r.predicate,
        mode: r.mode,
        method: r.method,
        verdict: r.verdict,
        witness_s: r.witness_s.map(fmt),
        working_s: r.working_s.iter().map(|&x| fmt(x)).collect(),
        counterexample,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    text: &str,
    ideal_text: &str,
    subset_text: Option<&str>,
    predicate: Predicate,
    mode: ModeArg,
    method: Option<MethodArg>,
    json: &Option<PathBuf>,
    raw: bool,
) -> Result<u8, Failure> {
    let ring = build_ring(text)?;
    let ctx = RingContext::new(&ring);
    let ideal = parse_ideal_spec(ideal_text).map_err(Error::from)?.elaborate(&ring, raw)?;
    let subset = match subset_text {
        Some(s) => Some(parse_subset_spec(s).map_err(Error::from)?.elaborate(&ring, raw)?),
        None => None,
    };
    let opts = CheckOptions {
        mode: match mode {
            ModeArg::Fixed => QuantifierMode::FixedS,
            ModeArg::PerPair => QuantifierMode::PerPair,
        },
        method: method.map(|m| match m {
            MethodArg::Lattice => Method::Lattice,
            MethodArg::Elementwise => Method::Elementwise,
        }),
    };
    let subset_arg = if predicate.uses_subset() { subset.as_ref() } else { None };
    let r = check(&ctx, predicate, &ideal, subset_arg, opts)?;
    let out = check_out(&ring, &ctx, text, ideal_text, subset_text.filter(|_| predicate.uses_subset()), &r)?;
    println!("predicate      {}", out.predicate);
    println!("verdict        {}", out.verdict);
    if let Some(w) = &out.witness_s {
        println!("witness s      {w}");
        println!("working s      {}", out.working_s.join(" "));
    }
    for v in &out.counterexample {
        match &v.s {
            Some(s) => println!("violation      s = {s}: ({}, {})", v.a, v.b),
            None => println!("violation      ({}, {})", v.a, v.b),
        }
    }
    write_json(json, &out)?;
    Ok(if r.verdict { 0 } else { EXIT_FALSE })
}

fn load_config(path: &Option<PathBuf>, max_size: Option<usize>, minimal: bool) -> Result<CorpusConfig, Failure> {
    let mut config = match path {
        Some(p) => read_config(p)?,
        None if minimal => CorpusConfig::empty(),
        None => CorpusConfig::default(),
    };
    if minimal {
        config.families.clear();
        config.extra.clear();
    }
    if max_size.is_some() {
        config.max_size = max_size;
    }
    Ok(config)
}

fn read_config(path: &Path) -> Result<CorpusConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Io(format!("invalid config {}: {e}", path.display())))
}

fn print_report(report: &Report) {
    println!(
        "corpus: {} rings, {} instances, {} skipped",
        report.corpus.rings,
        report.corpus.instances,
        report.corpus.skipped.len()
    );
    for p in &report.properties {
        let status = match p.status {
            harness::Status::OutOfScope => "out-of-scope".to_string(),
            _ if p.violated > 0 => "FAIL".to_string(),
            _ => "ok".to_string(),
        };
        println!(
            "{:<4} {:<12} tested {:>7}  vacuous {:>7}  violated {:>4}",
            p.property_id, status, p.tested, p.vacuous, p.violated
        );
    }
    for e in &report.examples {
        println!("{:<4} {:<12} {}", e.id, if e.passed { "ok" } else { "FAIL" }, e.detail);
    }
}

fn verify(
    properties: &[String],
    config: &Option<PathBuf>,
    max_size: Option<usize>,
    minimal: bool,
    json: &Option<PathBuf>,
) -> Result<u8, Failure> {
    let config = load_config(config, max_size, minimal)?;
    let report = harness::verify(properties, &config)?;
    print_report(&report);
    write_json(json, &report)?;
    Ok(if report.success() { 0 } else { EXIT_VIOLATIONS })
}

fn reproduce(json: &Option<PathBuf>) -> Result<u8, Failure> {
    let examples = harness::run_examples();
    for e in &examples {
        println!("{:<4} {:<5} {}", e.id, if e.passed { "ok" } else { "FAIL" }, e.description);
        println!("           {}", e.detail);
    }
    write_json(json, &examples)?;
    Ok(if examples.iter().all(|e| e.passed) { 0 } else { EXIT_VIOLATIONS })
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("RINGLAB_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| Failure::Io(format!("RINGLAB_THREADS must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Io(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Describe { ring, json } => describe(ring, json),
        Command::Ideals { ring, json } => ideals(ring, json),
        Command::Check {
            ring,
            ideal,
            subset,
            predicate,
            mode,
            method,
            json,
            raw,
        } => run_check(ring, ideal, subset.as_deref(), *predicate, *mode, *method, json, *raw),
        Command::Verify {
            properties,
            config,
            max_size,
            minimal,
            json,
        } => verify(properties, config, *max_size, *minimal, json),
        Command::Reproduce { json } => reproduce(json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
