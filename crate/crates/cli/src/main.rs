use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use gk2hopf_core::comodule::{default_quotient, summarize, ComoduleSummary, QuotientSpec};
use gk2hopf_core::families::{parse_instance, InstanceSpec};
use gk2hopf_core::invariants::{canonicalize, invariant_vector, isomorphic, InvariantVector, ISO_BOUND};
use gk2hopf_core::verify::{run_suite, AxiomReport, SuiteConfig};
use gk2hopf_core::{build, FamilyParams, Instance};

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NOT_ISOMORPHIC: u8 = 3;

#[derive(Parser)]
#[command(name = "gk2hopf", version, about = "Exact computations with the GK-dimension-two Hopf algebra families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms on a window of basis elements
    Verify {
        spec: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Print the isomorphism invariants of an instance
    Invariants {
        spec: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Decide whether two instances are isomorphic
    Iso {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Coactions, gradings and derivations for a Hopf quotient
    Comodule {
        spec: PathBuf,
        /// Built-in quotient; defaults to the family's own
        #[arg(long)]
        quotient: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Axioms, invariants and the default comodule summary in one document
    Report {
        spec: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args, Clone)]
struct Opts {
    /// Exponent window for enumerated basis elements
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
    window: i64,
    /// Exponent window for associativity triples
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
    assoc_window: i64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Seed for sampled checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Include wall-clock timing in the output
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

/// Input failure: exit code 2 with a location inside the file.
struct InputError {
    path: PathBuf,
    pointer: String,
    message: String,
}

impl InputError {
    fn report(&self) {
        if self.pointer.is_empty() {
            eprintln!("error: {}: {}", self.path.display(), self.message);
        } else {
            eprintln!("error: {}: at {}: {}", self.path.display(), self.pointer, self.message);
        }
    }
}

struct Loaded {
    path: PathBuf,
    params: FamilyParams,
    alg: Instance,
}

fn load(path: &Path) -> Result<Loaded, InputError> {
    let err = |pointer: &str, message: String| InputError { path: path.to_path_buf(), pointer: pointer.into(), message };
    let text = std::fs::read_to_string(path).map_err(|e| err("", format!("cannot read file: {e}")))?;
    let params = parse_instance(&text).map_err(|e| err(&e.pointer, e.message))?;
    let alg = build(&params).map_err(|e| err(&e.pointer, e.message))?;
    Ok(Loaded { path: path.to_path_buf(), params, alg })
}

#[derive(Serialize)]
struct InstanceEcho {
    source: String,
    name: String,
    canonical: InstanceSpec,
    canonical_name: String,
}

fn echo(l: &Loaded) -> InstanceEcho {
    let c = canonicalize(l.alg.params());
    InstanceEcho {
        source: l.path.display().to_string(),
        name: l.params.to_string(),
        canonical: InstanceSpec::from_params(&c),
        canonical_name: c.to_string(),
    }
}

fn suite_config(o: &Opts) -> SuiteConfig {
    SuiteConfig { window: o.window, associativity_window: o.assoc_window, seed: o.seed, ..SuiteConfig::default() }
}

fn envelope(command: &str, o: &Opts, instances: Vec<InstanceEcho>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("tool".into(), json!("gk2hopf"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m.insert("instances".into(), serde_json::to_value(instances).unwrap());
    m.insert(
        "config".into(),
        json!({"window": o.window, "associativity_window": o.assoc_window, "seed": o.seed}),
    );
    m
}

fn print_axioms_human(r: &AxiomReport) {
    println!("window {} (associativity {}), seed {}, {} basis elements", r.window, r.associativity_window, r.seed, r.basis_size);
    for a in &r.axioms {
        let status = if a.passed { "pass" } else { "FAIL" };
        println!("  {:<40} {status}  ({} checked)", a.axiom, a.checked);
        for f in a.failures.iter().take(10) {
            println!("      at [{}]: {}", f.indices.join(", "), f.residual);
        }
        if a.failures.len() > 10 {
            println!("      ... {} more", a.failures.len() - 10);
        }
    }
}

fn print_invariants_human(v: &InvariantVector) {
    println!("  family                      {}", v.family_tag);
    println!("  commutative                 {}", v.is_commutative);
    println!("  cocommutative               {}", v.is_cocommutative);
    println!("  grouplike rank              {}", v.grouplike_rank);
    println!("  grouplikes abelian          {}", v.grouplike_abelian);
    println!("  e(H)                        {}", v.ext1_dim);
    println!("  finite global dimension     {}", v.gldim_finite);
    println!("  abelianization Goldie rank  {} ({})", v.abelianization_goldie_rank, v.abelianization);
    println!("  pideg                       {}", v.pi_degree);
    match v.integral_order {
        Some(io) => println!("  io                          {io}"),
        None => println!("  io                          unreported"),
    }
    println!("  GK dimension                {}", v.gk_dimension);
}

fn print_comodule_human(s: &ComoduleSummary) {
    let images: Vec<String> = s.images.iter().map(|(g, t)| format!("π({g}) = {t}")).collect();
    println!("quotient {} ({:?}): {}", s.quotient, s.kind, images.join(", "));
    if !s.grading_table.is_empty() {
        println!("grading table (window {}):", s.window);
        for row in &s.grading_table {
            let parts: Vec<String> = row.components.iter().map(|((i, j), e)| format!("H_{{{i},{j}}}: {e}")).collect();
            println!("  {:<16} {}", row.index.to_string(), parts.join("; "));
        }
    }
    if !s.derivation_table.is_empty() {
        println!("derivation table (window {}):", s.window);
        for row in &s.derivation_table {
            let nil = row.nilpotence_index.map_or("-".to_string(), |n| n.to_string());
            println!("  {:<16} δ_r = {}; δ_l = {}; nilpotent at {nil}", row.index.to_string(), row.delta_r, row.delta_l);
        }
    }
    let show = |v: &[gk2hopf_core::algebra::Element]| v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ");
    println!("right coinvariants: {}", show(&s.right_coinvariants));
    println!("left coinvariants:  {}", show(&s.left_coinvariants));
    for c in &s.checks {
        println!("  {:<44} {}", c.property, if c.holds { "pass" } else { "FAIL" });
    }
}

fn emit(o: &Opts, mut doc: serde_json::Map<String, Value>, started: Instant) {
    if o.timing {
        doc.insert("timing_ms".into(), json!(started.elapsed().as_millis() as u64));
    }
    println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).unwrap());
}

fn quotient_for(l: &Loaded, name: Option<&str>) -> Result<QuotientSpec, InputError> {
    let name = name.or_else(|| default_quotient(l.alg.params())).unwrap_or("none");
    QuotientSpec::builtin(l.alg.as_ref(), name).map_err(|e| InputError {
        path: l.path.clone(),
        pointer: String::new(),
        message: e.to_string(),
    })
}

fn run(cli: Cli) -> Result<u8, InputError> {
    let started = Instant::now();
    match cli.command {
        Command::Verify { spec, opts } => {
            let l = load(&spec)?;
            let report = run_suite(l.alg.as_ref(), &suite_config(&opts));
            let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
            match opts.format {
                Format::Human => {
                    println!("{}", l.alg.name());
                    print_axioms_human(&report);
                    println!("{}", if report.passed() { "all axioms hold" } else { "axiom failures found" });
                    if opts.timing {
                        println!("time: {} ms", started.elapsed().as_millis());
                    }
                }
                Format::Structured => {
                    let mut doc = envelope("verify", &opts, vec![echo(&l)]);
                    doc.insert("passed".into(), json!(report.passed()));
                    doc.insert("axioms".into(), serde_json::to_value(&report).unwrap());
                    emit(&opts, doc, started);
                }
            }
            Ok(code)
        }
        Command::Invariants { spec, opts } => {
            let l = load(&spec)?;
            let v = invariant_vector(l.alg.as_ref(), ISO_BOUND);
            match opts.format {
                Format::Human => {
                    println!("{}", l.alg.name());
                    print_invariants_human(&v);
                }
                Format::Structured => {
                    let mut doc = envelope("invariants", &opts, vec![echo(&l)]);
                    doc.insert("invariants".into(), serde_json::to_value(&v).unwrap());
                    emit(&opts, doc, started);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Iso { left, right, opts } => {
            let (a, b) = (load(&left)?, load(&right)?);
            let verdict = isomorphic(&a.params, &b.params).map_err(|e| InputError {
                path: left.clone(),
                pointer: e.pointer,
                message: e.message,
            })?;
            let code = if verdict.isomorphic { EXIT_OK } else { EXIT_NOT_ISOMORPHIC };
            match opts.format {
                Format::Human => println!("{} vs {}: {}", verdict.left, verdict.right, verdict.explanation),
                Format::Structured => {
                    let mut doc = envelope("iso", &opts, vec![echo(&a), echo(&b)]);
                    doc.insert("verdict".into(), serde_json::to_value(&verdict).unwrap());
                    emit(&opts, doc, started);
                }
            }
            Ok(code)
        }
        Command::Comodule { spec, quotient, opts } => {
            let l = load(&spec)?;
            let q = quotient_for(&l, quotient.as_deref())?;
            let s = summarize(l.alg.as_ref(), &q, opts.window);
            let code = if s.passed() { EXIT_OK } else { EXIT_FAILED };
            match opts.format {
                Format::Human => {
                    println!("{}", l.alg.name());
                    print_comodule_human(&s);
                }
                Format::Structured => {
                    let mut doc = envelope("comodule", &opts, vec![echo(&l)]);
                    doc.insert("passed".into(), json!(s.passed()));
                    doc.insert("comodule".into(), serde_json::to_value(&s).unwrap());
                    emit(&opts, doc, started);
                }
            }
            Ok(code)
        }
        Command::Report { spec, opts } => {
            let l = load(&spec)?;
            let report = run_suite(l.alg.as_ref(), &suite_config(&opts));
            let v = invariant_vector(l.alg.as_ref(), ISO_BOUND);
            let q = quotient_for(&l, None)?;
            let s = summarize(l.alg.as_ref(), &q, opts.window);
            let passed = report.passed() && s.passed();
            match opts.format {
                Format::Human => {
                    println!("{}", l.alg.name());
                    print_axioms_human(&report);
                    println!("invariants:");
                    print_invariants_human(&v);
                    print_comodule_human(&s);
                }
                Format::Structured => {
                    let mut doc = envelope("report", &opts, vec![echo(&l)]);
                    doc.insert("passed".into(), json!(passed));
                    doc.insert("axioms".into(), serde_json::to_value(&report).unwrap());
                    doc.insert("invariants".into(), serde_json::to_value(&v).unwrap());
                    doc.insert("comodule".into(), serde_json::to_value(&s).unwrap());
                    emit(&opts, doc, started);
                }
            }
            Ok(if passed { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn jobs(cli: &Cli) -> usize {
    match &cli.command {
        Command::Verify { opts, .. }
        | Command::Invariants { opts, .. }
        | Command::Iso { opts, .. }
        | Command::Comodule { opts, .. }
        | Command::Report { opts, .. } => opts.jobs,
    }
}

fn main() -> ExitCode {
    // Exit quietly when stdout is closed early, e.g. piped into `head`.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    if jobs(&cli) > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(jobs(&cli)).build_global().expect("thread pool");
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            e.report();
            ExitCode::from(EXIT_INPUT)
        }
    }
}
