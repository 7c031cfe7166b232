//! ucyc: construct, inspect, and check universal cycles of restricted word
//! classes from the command line.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ucycle::{
    generate, step_alphabet, verify, ClassKind, ClassSpec, CyclicString, ExistenceClaim,
    FailureKind, GenerateOutcome, NonEulerianReason, OrderedAlphabet, TransitionDigraph,
    VerificationReport, DEFAULT_BUDGET,
};

const EXIT_NON_EULERIAN: u8 = 1;
const EXIT_FAILED_VERIFICATION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_RUNTIME: u8 = 65;

#[derive(Parser)]
#[command(
    name = "ucyc",
    version,
    about = "Universal cycles of restricted word classes"
)]
struct Cli {
    /// Cap on enumerated candidate words; the UCYC_BUDGET environment
    /// variable overrides the built-in default.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct the cycle for a class, or explain why none exists.
    Gen {
        #[command(flatten)]
        class: ClassOptions,
        /// Emit a JSON object instead of the bare cycle.
        #[arg(long)]
        json: bool,
        /// Include the word-by-word construction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Check a proposed cycle against a class and print the verdict report.
    Verify {
        #[command(flatten)]
        class: ClassOptions,
        /// The cycle text; single characters or comma-separated symbols.
        #[arg(long)]
        cycle: Option<String>,
        /// File holding the cycle text.
        #[arg(long)]
        cycle_file: Option<PathBuf>,
    },
    /// Report the transition digraph's size, balance, and connectivity.
    Stats {
        #[command(flatten)]
        class: ClassOptions,
    },
    /// Count the words of a class.
    Count {
        #[command(flatten)]
        class: ClassOptions,
        /// Emit a JSON object instead of the bare number.
        #[arg(long)]
        json: bool,
    },
    /// Print the words of a class in rank order, one per line.
    List {
        #[command(flatten)]
        class: ClassOptions,
    },
    /// Probe a parameter grid; one JSON line per point compares what was
    /// found against the existence table.
    Sweep {
        #[command(flatten)]
        class: ClassOptions,
        /// Alphabet sizes to probe: an inclusive range like 2..5, or one size.
        #[arg(long = "n", value_name = "LO..HI", conflicts_with = "alphabet_size")]
        sweep_n: Option<String>,
        /// Word lengths to probe: an inclusive range like 2..7, or one length.
        #[arg(long = "k", value_name = "LO..HI", conflicts_with = "length")]
        sweep_k: Option<String>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ClassName {
    AllWords,
    Injective,
    Onto,
    NearBalanced,
    Equitable,
    Monotone,
    Lipschitz,
    CyclicCategories,
    AugmentedOnto,
    Lattice,
}

#[derive(Args, Clone)]
struct ClassOptions {
    /// Word class to work on.
    #[arg(long, value_enum)]
    class: ClassName,
    /// Alphabet size; letters are then named a, b, c, ...
    #[arg(long, short = 'n', conflicts_with = "alphabet")]
    alphabet_size: Option<usize>,
    /// Explicit comma-separated symbols, least first, e.g. "x+,y+,x-,y-".
    #[arg(long)]
    alphabet: Option<String>,
    /// Window length k.
    #[arg(long, short = 'k')]
    length: Option<usize>,
    /// Measure letter gaps around the alphabet cycle (lipschitz implies this).
    #[arg(long)]
    cyclic: bool,
    /// Comma-separated sizes carving the alphabet into contiguous categories,
    /// e.g. "3,3".
    #[arg(long)]
    category_sizes: Option<String>,
    /// Largest letter gap allowed between neighbors (class lipschitz).
    #[arg(long)]
    lipschitz_c: Option<usize>,
    /// Fewest occurrences of each letter (class augmented-onto).
    #[arg(long)]
    aug_a: Option<usize>,
    /// Most occurrences of each letter (class augmented-onto).
    #[arg(long)]
    aug_b: Option<usize>,
    /// Lattice dimension (class lattice).
    #[arg(long)]
    lattice_dim: Option<usize>,
    /// Largest distance from the origin a walk may end at (class lattice).
    #[arg(long)]
    lattice_radius: Option<usize>,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage<E: Display>(err: E) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: err.to_string(),
    }
}

fn runtime<E: Display>(err: E) -> Failure {
    Failure {
        code: EXIT_RUNTIME,
        message: err.to_string(),
    }
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("{flag} is required here")))
}

fn build_alphabet(opts: &ClassOptions) -> Result<OrderedAlphabet, Failure> {
    let mut alphabet = if let Some(text) = &opts.alphabet {
        let symbols: Vec<&str> = text.split(',').map(str::trim).collect();
        OrderedAlphabet::from_symbols(symbols).map_err(usage)?
    } else if opts.class == ClassName::Lattice {
        step_alphabet(required(opts.lattice_dim, "--lattice-dim")?).map_err(usage)?
    } else {
        let n = required(opts.alphabet_size, "--alphabet-size")?;
        OrderedAlphabet::generic(n).map_err(usage)?
    };
    if opts.cyclic || opts.class == ClassName::Lipschitz {
        alphabet = alphabet.with_cyclic_metric();
    }
    if let Some(text) = &opts.category_sizes {
        let mut groups = Vec::new();
        let mut next = 0;
        for token in text.split(',') {
            let size: usize = token
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad category size: {token}")))?;
            groups.push((next..next + size).collect());
            next += size;
        }
        alphabet = alphabet.with_categories(groups).map_err(usage)?;
    }
    Ok(alphabet)
}

fn build_kind(opts: &ClassOptions) -> Result<ClassKind, Failure> {
    Ok(match opts.class {
        ClassName::AllWords => ClassKind::AllWords,
        ClassName::Injective => ClassKind::Injective,
        ClassName::Onto => ClassKind::Onto,
        ClassName::NearBalanced => ClassKind::NearBalancedBinary,
        ClassName::Equitable => ClassKind::Equitable,
        ClassName::Monotone => ClassKind::Monotone,
        ClassName::Lipschitz => ClassKind::Lipschitz {
            c: required(opts.lipschitz_c, "--lipschitz-c")?,
        },
        ClassName::CyclicCategories => ClassKind::CyclicCategories,
        ClassName::AugmentedOnto => ClassKind::AugmentedOnto {
            min_occurs: required(opts.aug_a, "--aug-a")?,
            max_occurs: required(opts.aug_b, "--aug-b")?,
        },
        ClassName::Lattice => ClassKind::LatticePath {
            dimension: required(opts.lattice_dim, "--lattice-dim")?,
            radius: required(opts.lattice_radius, "--lattice-radius")?,
        },
    })
}

fn build_spec(opts: &ClassOptions) -> Result<ClassSpec, Failure> {
    let alphabet = build_alphabet(opts)?;
    let kind = build_kind(opts)?;
    let length = required(opts.length, "--length")?;
    let spec = ClassSpec::new(alphabet, length, kind).map_err(usage)?;
    for warning in spec.warnings() {
        eprintln!("warning: {warning}");
    }
    Ok(spec)
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(budget) = flag {
        return Ok(budget);
    }
    match std::env::var("UCYC_BUDGET") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| usage(format!("UCYC_BUDGET is not a number: {text}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(err) => Err(usage(format!("UCYC_BUDGET: {err}"))),
    }
}

/// Parses "LO..HI" (inclusive) or a single number.
fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("bad range: {text} (expected LO..HI or a number)"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(usage(format!("empty range: {text}")));
        }
        Ok((lo, hi))
    } else {
        let single: usize = text.trim().parse().map_err(|_| bad())?;
        Ok((single, single))
    }
}

fn spec_header(spec: &ClassSpec) -> Value {
    json!({
        "class": spec.kind().name(),
        "n": spec.alphabet().len(),
        "k": spec.word_length(),
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    let (Some(target), Value::Object(source)) = (base.as_object_mut(), extra) else {
        unreachable!("both arguments are JSON objects");
    };
    for (key, value) in source {
        target.insert(key, value);
    }
    base
}

fn reason_json(spec: &ClassSpec, reason: &NonEulerianReason) -> Value {
    let a = spec.alphabet();
    let detail = match reason {
        NonEulerianReason::Empty => json!({}),
        NonEulerianReason::Unbalanced(witness) => json!({
            "vertex": witness.vertex.display(a),
            "in_degree": witness.in_degree,
            "out_degree": witness.out_degree,
        }),
        NonEulerianReason::Disconnected(conn) => json!({
            "component_count": conn.component_count,
            "component_sizes": conn.component_sizes,
            "sample_vertices": conn.sample_vertices
                .iter()
                .map(|w| w.display(a))
                .collect::<Vec<_>>(),
        }),
    };
    merge(
        spec_header(spec),
        json!({
            "cycle_exists": false,
            "reason": reason.label(),
            "detail": detail,
        }),
    )
}

fn report_json(spec: &ClassSpec, report: &VerificationReport) -> Value {
    let a = spec.alphabet();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "position": f.position,
                "window": f.window.display(a),
                "kind": match f.kind {
                    FailureKind::NotMember => "not-member",
                    FailureKind::Duplicate => "duplicate",
                },
            })
        })
        .collect();
    merge(
        spec_header(spec),
        json!({
            "ok": report.ok,
            "length_ok": report.length_ok,
            "all_windows_valid": report.all_windows_valid,
            "all_distinct": report.all_distinct,
            "coverage_complete": report.coverage_complete,
            "failures": failures,
        }),
    )
}

fn need_window_length(spec: &ClassSpec) -> Result<(), Failure> {
    if spec.word_length() < 2 {
        return Err(usage(
            "the transition digraph needs a word length of at least 2",
        ));
    }
    Ok(())
}

fn cmd_gen(opts: &ClassOptions, json: bool, trace: bool, budget: u64) -> Result<ExitCode, Failure> {
    let spec = build_spec(opts)?;
    need_window_length(&spec)?;
    match generate(&spec, budget).map_err(runtime)? {
        GenerateOutcome::Cycle(result) => {
            let a = spec.alphabet();
            let rendered = result.cycle.display(a);
            if json {
                let mut line = merge(
                    spec_header(&spec),
                    json!({
                        "length": result.cycle.len(),
                        "cycle": rendered,
                        "canonical": result.canonical,
                    }),
                );
                if trace {
                    let words: Vec<String> = result
                        .construction_trace
                        .iter()
                        .flatten()
                        .map(|w| w.display(a))
                        .collect();
                    line["trace"] = json!(words);
                }
                println!("{line}");
            } else {
                println!("{rendered}");
                if trace {
                    for word in result.construction_trace.iter().flatten() {
                        println!("{}", word.display(a));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        GenerateOutcome::NonEulerian(reason) => {
            eprintln!("{}", reason_json(&spec, &reason));
            Ok(ExitCode::from(EXIT_NON_EULERIAN))
        }
    }
}

fn cmd_verify(
    opts: &ClassOptions,
    cycle: Option<String>,
    cycle_file: Option<PathBuf>,
    budget: u64,
) -> Result<ExitCode, Failure> {
    let spec = build_spec(opts)?;
    let text = match (cycle, cycle_file) {
        (Some(text), None) => text,
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map_err(|err| usage(format!("{}: {err}", path.display())))?
            .trim()
            .to_string(),
        (Some(_), Some(_)) => return Err(usage("give --cycle or --cycle-file, not both")),
        (None, None) => return Err(usage("one of --cycle or --cycle-file is required")),
    };
    let cycle = CyclicString::parse(&text, spec.alphabet()).map_err(usage)?;
    let report = verify(&cycle, &spec, budget).map_err(runtime)?;
    println!("{}", report_json(&spec, &report));
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED_VERIFICATION)
    })
}

fn cmd_stats(opts: &ClassOptions, budget: u64) -> Result<ExitCode, Failure> {
    let spec = build_spec(opts)?;
    need_window_length(&spec)?;
    let digraph = TransitionDigraph::build(&spec, budget).map_err(runtime)?;
    let balance = digraph.check_balance();
    let connectivity = digraph.check_connectivity();
    let histogram: BTreeMap<String, usize> = balance
        .degree_histogram
        .iter()
        .map(|(&(din, dout), &count)| (format!("{din},{dout}"), count))
        .collect();
    let line = merge(
        spec_header(&spec),
        json!({
            "vertex_count": digraph.vertex_count(),
            "edge_count": digraph.edge_count(),
            "balanced": balance.balanced,
            "degree_histogram": histogram,
            "weakly_connected": connectivity.weakly_connected,
            "component_count": connectivity.component_count,
            "component_sizes": connectivity.component_sizes,
        }),
    );
    println!("{line}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(opts: &ClassOptions, json: bool, budget: u64) -> Result<ExitCode, Failure> {
    let spec = build_spec(opts)?;
    let count = spec.count(budget).map_err(runtime)?;
    if json {
        println!("{}", merge(spec_header(&spec), json!({ "count": count })));
    } else {
        println!("{count}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_list(opts: &ClassOptions, budget: u64) -> Result<ExitCode, Failure> {
    let spec = build_spec(opts)?;
    for word in spec.enumerate(budget).map_err(runtime)? {
        println!("{}", word.display(spec.alphabet()));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(
    opts: &ClassOptions,
    sweep_n: Option<String>,
    sweep_k: Option<String>,
    budget: u64,
) -> Result<ExitCode, Failure> {
    let sizes: Vec<Option<usize>> = match &sweep_n {
        Some(text) => {
            if opts.alphabet.is_some() {
                return Err(usage("--n sweeps the alphabet size; drop --alphabet"));
            }
            if opts.class == ClassName::Lattice {
                return Err(usage(
                    "the lattice alphabet is fixed by --lattice-dim; sweep --k instead",
                ));
            }
            let (lo, hi) = parse_range(text)?;
            (lo..=hi).map(Some).collect()
        }
        None => vec![None],
    };
    let lengths: Vec<usize> = match &sweep_k {
        Some(text) => {
            let (lo, hi) = parse_range(text)?;
            (lo..=hi).collect()
        }
        None => vec![required(opts.length, "--length (or --k)")?],
    };
    for &size in &sizes {
        for &length in &lengths {
            let mut point = opts.clone();
            if size.is_some() {
                point.alphabet_size = size;
            }
            point.length = Some(length);
            let spec = build_spec(&point)?;
            need_window_length(&spec)?;
            let count = spec.count(budget).map_err(runtime)?;
            let digraph = TransitionDigraph::build(&spec, budget).map_err(runtime)?;
            let exists = !digraph.is_empty()
                && digraph.check_balance().balanced
                && digraph.check_connectivity().weakly_connected;
            let claim = spec.existence_claim();
            let agree = match &claim {
                ExistenceClaim::ClaimedExists { .. } => exists,
                ExistenceClaim::ClaimedNotExists { .. } => !exists,
                ExistenceClaim::Unstated => true,
            };
            let mut line = merge(
                spec_header(&spec),
                json!({
                    "count": count,
                    "exists_empirically": exists,
                    "claimed": claim.label(),
                    "rule": claim.rule(),
                    "agree": agree,
                }),
            );
            if let Some(c) = opts.lipschitz_c {
                line["c"] = json!(c);
            }
            if let (Some(a), Some(b)) = (opts.aug_a, opts.aug_b) {
                line["a"] = json!(a);
                line["b"] = json!(b);
            }
            if let Some(dimension) = opts.lattice_dim {
                line["dimension"] = json!(dimension);
            }
            if let Some(radius) = opts.lattice_radius {
                line["radius"] = json!(radius);
            }
            println!("{line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let outcome = resolve_budget(cli.budget).and_then(|budget| match &cli.command {
        Cmd::Gen { class, json, trace } => cmd_gen(class, *json, *trace, budget),
        Cmd::Verify {
            class,
            cycle,
            cycle_file,
        } => cmd_verify(class, cycle.clone(), cycle_file.clone(), budget),
        Cmd::Stats { class } => cmd_stats(class, budget),
        Cmd::Count { class, json } => cmd_count(class, *json, budget),
        Cmd::List { class } => cmd_list(class, budget),
        Cmd::Sweep {
            class,
            sweep_n,
            sweep_k,
        } => cmd_sweep(class, sweep_n.clone(), sweep_k.clone(), budget),
    });
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
