//! Command-line front end.
//!
//! Every subcommand that performs a computation emits a single JSON report
//! on stdout with a fixed envelope:
//!
//! ```text
//! {
//!   "command":       the argv as typed,
//!   "inputs_digest": SHA-256 over the input documents/parameters,
//!   "mode":          "exact" | "probabilistic",
//!   "results":       subcommand-specific payload,
//!   "seed":          the RNG seed in effect,
//!   "wall_time_ms":  elapsed milliseconds, or null unless --timings
//! }
//! ```
//!
//! Keys are emitted in sorted order and the document ends in a newline, so
//! an identical command line with an identical seed produces byte-identical
//! output (modulo `--timings`).  The two emitters (`zoo emit`,
//! `bform generate`) print a bare interchange document instead, so their
//! output can be piped straight back into `analyze` or `bform classify`.
//!
//! Exit codes: `0` — success; `1` — a verified equality failed (a computed
//! dimension disagrees with its expected value at an enforced size); `2` —
//! input or usage error (unreadable file, malformed document, singular
//! form, out-of-range parameter).

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tensym_core::bform::{self, CaseLabel, Subcase};
use tensym_core::exact_arith::{rat, Mode, Rational};
use tensym_core::obstructions::{self, DegenerationFamily};
use tensym_core::symmetry::symmetry_report;
use tensym_core::tensor::{Factor, FactorVerdict, Tensor3};
use tensym_core::zoo::{self, ZooName};

use crate::io::{self as fmt_io, FormatError};
use crate::report::{lie_triple_value, vec_value, Report, ReportMode};

/// Exact symmetry Lie algebras of order-3 tensors.
#[derive(Parser)]
#[command(name = "tensym", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full symmetry report for a tensor: flattening ranks, 1-genericity,
    /// and the exact dimension of its symmetry Lie algebra.
    Analyze(AnalyzeArgs),
    /// List or emit the built-in tensors.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
    /// Recompute the classified maximal symmetry dimensions over a range of
    /// ambient dimensions and compare them with the closed forms.
    VerifyTheorem(VerifyTheoremArgs),
    /// Stabilizers of full-rank bilinear forms.
    Bform {
        #[command(subcommand)]
        action: BformAction,
    },
    /// Pairwise commutator test on the normalized slices: a nonzero
    /// commutator certifies border rank at least m + 1.
    Borderrank(BorderrankArgs),
    /// Apply an ε-parametrized family of basis changes and take the ε → 0
    /// limit exactly.
    Degenerate(DegenerateArgs),
}

/// Flags shared by the computing subcommands.
#[derive(Args, Clone)]
struct CommonFlags {
    /// Arithmetic backend: exact rationals, or rank checks over random
    /// word-size prime fields (faster, probabilistic, counts only).
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Seed for every randomized choice (witness hunting, sampled forms).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random witness trials per factor when certifying 1-genericity.
    #[arg(long, default_value_t = 20)]
    trials: u32,
    /// Render the results as aligned text instead of JSON.
    #[arg(long)]
    table: bool,
    /// Report wall-clock time (off by default so output is reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum ModeArg {
    Exact,
    Modular,
}

impl ModeArg {
    fn core(self) -> Mode {
        match self {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Modular => Mode::Modular,
        }
    }
}

/// A tensor argument: either a JSON file or a named built-in.
#[derive(Args, Clone)]
struct TensorInput {
    /// Path to a tensor JSON document (omit when using --zoo).
    #[arg(value_name = "TENSOR", required_unless_present = "zoo")]
    path: Option<PathBuf>,
    /// Name of a built-in tensor (see `tensym zoo list`).
    #[arg(long, value_name = "NAME", conflicts_with = "path", requires = "size")]
    zoo: Option<String>,
    /// Size parameter for --zoo (q for cw_big/strassen/cw_small, m else).
    #[arg(long, value_name = "N", requires = "zoo")]
    size: Option<usize>,
}

struct LoadedTensor {
    tensor: Tensor3,
    /// What to print as the input echo.
    desc: String,
    /// What to hash as the input document.
    digest_part: Vec<u8>,
}

impl TensorInput {
    fn load(&self) -> Result<LoadedTensor, CliError> {
        if let Some(name) = &self.zoo {
            let zn = ZooName::parse(name).ok_or_else(|| {
                input_err(format!("unknown tensor name `{name}`; see `tensym zoo list`"))
            })?;
            let size = self.size.expect("clap enforces --size with --zoo");
            let entry = zoo::construct(zn, size).map_err(|e| input_err(e.to_string()))?;
            let desc = format!("zoo:{name}:{size}");
            Ok(LoadedTensor { tensor: entry.tensor, digest_part: desc.clone().into_bytes(), desc })
        } else {
            let path = self.path.as_ref().expect("clap requires a path without --zoo");
            let bytes = std::fs::read(path)
                .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| input_err(format!("{}: not valid UTF-8", path.display())))?;
            let tensor = fmt_io::parse_tensor(&text)?;
            Ok(LoadedTensor { tensor, desc: path.display().to_string(), digest_part: bytes })
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: TensorInput,
    /// Include a canonical basis of the annihilator algebra g̃_T.
    #[arg(long)]
    basis: bool,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(Subcommand)]
enum ZooAction {
    /// List the built-in tensors and their size constraints.
    List {
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Print a built-in tensor as a tensor JSON document.
    Emit {
        /// Name from `tensym zoo list`.
        name: String,
        /// Size parameter (q for cw_big/strassen/cw_small, m otherwise).
        #[arg(long, value_name = "N")]
        size: usize,
        /// Write the document to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyTheoremArgs {
    /// Inclusive range `A..B` of ambient dimensions, within 4..20.
    #[arg(long, value_name = "A..B", default_value = "4..20")]
    m_range: String,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(Subcommand)]
enum BformAction {
    /// Classify a full-rank form: profile (e, ℓ, f), restricted rank,
    /// exact stabilizer dimension, and the matching named case.
    Classify {
        /// Path to a bilinear form JSON document.
        path: PathBuf,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Generate a full-rank form with a prescribed profile, conjugated by
    /// a seeded random change of basis.
    Generate {
        /// Ambient dimension.
        #[arg(long)]
        k: usize,
        /// dim ker Λ (Λ = skew part).
        #[arg(long)]
        e: usize,
        /// k − e − dim ker Q (Q = symmetric part).
        #[arg(long)]
        l: usize,
        /// Rank of Q restricted to ker Λ (default: e).
        #[arg(long, value_name = "Q")]
        q_restricted: Option<usize>,
        /// Pick the isotropic normal form where two subcases exist.
        #[arg(long)]
        isotropic: bool,
        /// Seed for the random change of basis.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the document to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Recompute every named stabilizer case at k = 12, 13, 14 from its
    /// canonical form and compare with the tabulated dimensions.
    VerifyLemma {
        #[command(flatten)]
        common: CommonFlags,
    },
}

#[derive(Args)]
struct BorderrankArgs {
    #[command(flatten)]
    input: TensorInput,
    /// Witness covector as comma-separated rationals, e.g. `1,0,2/3`.
    /// Default: e₁ if T(e₁) is invertible, else a certified random witness.
    #[arg(long, value_name = "COVECTOR")]
    witness: Option<String>,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(Args)]
struct DegenerateArgs {
    #[command(flatten)]
    input: TensorInput,
    /// Path to a degeneration family JSON document (matrices over ℚ[ε,ε⁻¹]).
    #[arg(long, value_name = "PATH", conflicts_with = "builtin", required_unless_present = "builtin")]
    family: Option<PathBuf>,
    /// A built-in family for cubic tensors.
    #[arg(long, value_enum)]
    builtin: Option<BuiltinFamily>,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(ValueEnum, Clone, Copy)]
enum BuiltinFamily {
    /// ε^plateau rescaling that kills the binding couplings.
    #[value(name = "binding")]
    Binding,
    /// diag(1, ε, …, ε) on the first factor: the limit collapses a
    /// normalized 1_A-generic tensor onto T₀.
    #[value(name = "scale_a")]
    ScaleA,
}

/// An input or usage problem: message on stderr, exit 2.
struct CliError(String);

fn input_err(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError(e.to_string())
    }
}

/// What a successfully parsed subcommand produced.
enum Output {
    Report {
        results: Value,
        mode: ReportMode,
        seed: u64,
        inputs_digest: String,
        /// Rendered tables when --table was passed.
        table: Option<String>,
        timings: bool,
        exit: i32,
    },
    /// A bare interchange document (tensor or form), optionally redirected
    /// to a file.
    Raw { doc: String, out_path: Option<PathBuf> },
}

/// Entry point used by `main`: real argv, stdout, stderr.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run(&args, &mut out, &mut err)
}

/// Run the CLI on an explicit argument list, writing to the given streams,
/// and return the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let started = Instant::now();
    let argv = std::iter::once("tensym".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version surface as clap "errors" but exit cleanly.
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{e}");
            return code;
        }
    };

    let command_echo = {
        let mut parts = vec!["tensym".to_string()];
        parts.extend(args.iter().cloned());
        parts.join(" ")
    };

    match dispatch(&cli.command) {
        Ok(Output::Report { results, mode, seed, inputs_digest, table, timings, exit }) => {
            let wall_time_ms = timings.then(|| started.elapsed().as_millis());
            if let Some(text) = table {
                let _ = write!(out, "{text}");
                if let Some(ms) = wall_time_ms {
                    let _ = writeln!(out, "wall time: {ms} ms");
                }
            } else {
                let report = Report {
                    command: command_echo,
                    inputs_digest,
                    mode,
                    seed,
                    results,
                    wall_time_ms,
                };
                let _ = write!(out, "{}", report.to_json());
            }
            exit
        }
        Ok(Output::Raw { doc, out_path }) => match out_path {
            None => {
                let _ = write!(out, "{doc}");
                0
            }
            Some(path) => match std::fs::write(&path, doc) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {}: {e}", path.display());
                    2
                }
            },
        },
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Zoo { action: ZooAction::List { common } } => cmd_zoo_list(common),
        Command::Zoo { action: ZooAction::Emit { name, size, out } } => {
            cmd_zoo_emit(name, *size, out.clone())
        }
        Command::VerifyTheorem(a) => cmd_verify_theorem(a),
        Command::Bform { action: BformAction::Classify { path, common } } => {
            cmd_bform_classify(path, common)
        }
        Command::Bform {
            action: BformAction::Generate { k, e, l, q_restricted, isotropic, seed, out },
        } => cmd_bform_generate(*k, *e, *l, *q_restricted, *isotropic, *seed, out.clone()),
        Command::Bform { action: BformAction::VerifyLemma { common } } => {
            cmd_verify_lemma(common)
        }
        Command::Borderrank(a) => cmd_borderrank(a),
        Command::Degenerate(a) => cmd_degenerate(a),
    }
}

// ---------------------------------------------------------------------------
// analyze

fn verdict_value(v: &FactorVerdict) -> Value {
    match v {
        FactorVerdict::CertifiedYes { witness } => {
            json!({ "certified": true, "witness": vec_value(witness) })
        }
        FactorVerdict::ProbablyNot { trials, failure_bound } => json!({
            "certified": false,
            "trials": trials,
            "failure_bound": fmt_io::rat_string(failure_bound),
        }),
    }
}

fn verdict_cell(v: &FactorVerdict) -> String {
    match v {
        FactorVerdict::CertifiedYes { .. } => "yes (certified)".to_string(),
        FactorVerdict::ProbablyNot { trials, failure_bound } => {
            format!("no witness in {trials} trials (failure ≤ {failure_bound})")
        }
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<Output, CliError> {
    let loaded = args.input.load()?;
    let t = &loaded.tensor;
    let (a, b, c) = t.dims();
    let mode = args.common.mode.core();
    let generic = t.genericity(args.common.trials, args.common.seed);
    let sym = symmetry_report(t, mode, args.common.seed);

    let mut results = Map::new();
    results.insert("input".into(), json!(loaded.desc));
    results.insert("dims".into(), json!([a, b, c]));
    results.insert("nnz".into(), json!(t.nnz()));
    results.insert(
        "flattening_ranks".into(),
        json!([
            generic.flattening_ranks.0,
            generic.flattening_ranks.1,
            generic.flattening_ranks.2
        ]),
    );
    results.insert("concise".into(), json!(generic.concise));
    results.insert("one_generic_a".into(), verdict_value(&generic.one_generic_flags[0]));
    results.insert("one_generic_b".into(), verdict_value(&generic.one_generic_flags[1]));
    results.insert("one_generic_c".into(), verdict_value(&generic.one_generic_flags[2]));
    results.insert("binding".into(), json!(generic.binding));
    results.insert("one_generic".into(), json!(generic.one_generic));
    results.insert("extended_convention".into(), json!(generic.extended_convention));
    results.insert("tilde_dim".into(), json!(sym.tilde_dim));
    results.insert("sym_dim".into(), json!(sym.sym_dim));
    if args.basis {
        let basis: Vec<Value> = sym.basis.iter().map(lie_triple_value).collect();
        results.insert("basis".into(), Value::Array(basis));
    }

    let table = args.common.table.then(|| {
        let mut rows = vec![
            vec!["input".to_string(), loaded.desc.clone()],
            vec!["dims".to_string(), format!("{a}×{b}×{c}")],
            vec!["nonzero entries".to_string(), t.nnz().to_string()],
            vec![
                "flattening ranks".to_string(),
                format!(
                    "{}, {}, {}",
                    generic.flattening_ranks.0,
                    generic.flattening_ranks.1,
                    generic.flattening_ranks.2
                ),
            ],
            vec!["concise".to_string(), generic.concise.to_string()],
            vec!["1_A-generic".to_string(), verdict_cell(&generic.one_generic_flags[0])],
            vec!["1_B-generic".to_string(), verdict_cell(&generic.one_generic_flags[1])],
            vec!["1_C-generic".to_string(), verdict_cell(&generic.one_generic_flags[2])],
            vec!["binding".to_string(), generic.binding.to_string()],
            vec!["1-generic".to_string(), generic.one_generic.to_string()],
            vec!["dim g̃_T".to_string(), sym.tilde_dim.to_string()],
            vec!["dim g_T".to_string(), sym.sym_dim.to_string()],
        ];
        if generic.extended_convention {
            rows.push(vec![
                "note".to_string(),
                "non-cubic: contraction ranks read against min of the other dims".to_string(),
            ]);
        }
        let mut text = render_table(&["quantity", "value"], &rows);
        if args.basis {
            text.push_str(&format!("\nbasis of g̃_T ({} triples):\n", sym.basis.len()));
            for (n, triple) in sym.basis.iter().enumerate() {
                text.push_str(&format!(
                    "  triple {}:\n  u:\n{}  v:\n{}  w:\n{}",
                    n + 1,
                    indent(&triple.u.to_string()),
                    indent(&triple.v.to_string()),
                    indent(&triple.w.to_string())
                ));
            }
        }
        text
    });

    Ok(Output::Report {
        results: Value::Object(results),
        mode: ReportMode::from(mode),
        seed: args.common.seed,
        inputs_digest: fmt_io::digest(&[&loaded.digest_part]),
        table,
        timings: args.common.timings,
        exit: 0,
    })
}

// ---------------------------------------------------------------------------
// zoo

fn cmd_zoo_list(common: &CommonFlags) -> Result<Output, CliError> {
    let listing = zoo::list();
    let tensors: Vec<Value> = listing
        .iter()
        .map(|(name, constraint)| json!({ "name": name.as_str(), "sizes": constraint }))
        .collect();
    let table = common.table.then(|| {
        let rows: Vec<Vec<String>> = listing
            .iter()
            .map(|(name, constraint)| vec![name.as_str().to_string(), constraint.to_string()])
            .collect();
        render_table(&["name", "sizes"], &rows)
    });
    Ok(Output::Report {
        results: json!({ "tensors": tensors }),
        mode: ReportMode::Exact,
        seed: common.seed,
        inputs_digest: fmt_io::digest(&[b"zoo:list"]),
        table,
        timings: common.timings,
        exit: 0,
    })
}

fn cmd_zoo_emit(name: &str, size: usize, out: Option<PathBuf>) -> Result<Output, CliError> {
    let zn = ZooName::parse(name)
        .ok_or_else(|| input_err(format!("unknown tensor name `{name}`; see `tensym zoo list`")))?;
    let entry = zoo::construct(zn, size).map_err(|e| input_err(e.to_string()))?;
    Ok(Output::Raw { doc: fmt_io::tensor_to_string(&entry.tensor), out_path: out })
}

// ---------------------------------------------------------------------------
// verify-theorem

struct TheoremTask {
    m: usize,
    name: ZooName,
    size: usize,
}

struct TheoremCheck {
    m: usize,
    name: &'static str,
    size: usize,
    expected: i64,
    computed: i64,
    provenance: &'static str,
    one_generic: bool,
    enforced: bool,
    ok: bool,
}

fn theorem_tasks(lo: usize, hi: usize) -> Vec<TheoremTask> {
    let mut tasks = Vec::new();
    for m in lo..=hi {
        if m % 2 == 0 {
            tasks.push(TheoremTask { m, name: ZooName::MaxEven, size: m });
            tasks.push(TheoremTask { m, name: ZooName::CwBig, size: m - 2 });
        } else {
            tasks.push(TheoremTask { m, name: ZooName::MaxOddSkew, size: m });
            tasks.push(TheoremTask { m, name: ZooName::CwBig, size: m - 2 });
            tasks.push(TheoremTask { m, name: ZooName::MaxMinus1Odd, size: m });
        }
    }
    tasks
}

fn run_theorem_task(task: &TheoremTask, trials: u32, seed: u64) -> TheoremCheck {
    let entry = zoo::construct(task.name, task.size).expect("sizes validated by the range");
    let generic = entry.tensor.genericity(trials, seed);
    let sym = symmetry_report(&entry.tensor, Mode::Exact, seed);
    let expected = entry.expected_sym_dim as i64;
    let enforced = task.m >= 14;
    let ok = generic.one_generic && sym.sym_dim == expected;
    TheoremCheck {
        m: task.m,
        name: task.name.as_str(),
        size: task.size,
        expected,
        computed: sym.sym_dim,
        provenance: entry.provenance.as_str(),
        one_generic: generic.one_generic,
        enforced,
        ok,
    }
}

fn parse_m_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || input_err(format!("--m-range wants `A..B` with 4 ≤ A ≤ B ≤ 20, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo < 4 || hi > 20 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Worker count: TENSYM_THREADS if set, else the machine's parallelism,
/// clamped to the task count.
fn thread_count(tasks: usize) -> usize {
    let available = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let cap = std::env::var("TENSYM_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(available);
    cap.min(tasks.max(1))
}

/// Run `f` over `tasks` on a scoped worker pool and return the results in
/// task order, so the merged output never depends on scheduling.
fn run_pool<T, R, F>(tasks: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if threads <= 1 || tasks.len() <= 1 {
        return tasks.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<R>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let r = f(&tasks[i]);
                *slots[i].lock().expect("worker never panics holding the slot") = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().expect("pool finished").expect("every slot filled"))
        .collect()
}

fn cmd_verify_theorem(args: &VerifyTheoremArgs) -> Result<Output, CliError> {
    let (lo, hi) = parse_m_range(&args.m_range)?;
    let tasks = theorem_tasks(lo, hi);
    let trials = args.common.trials;
    let seed = args.common.seed;
    let threads = thread_count(tasks.len());
    let checks = run_pool(&tasks, threads, |t| run_theorem_task(t, trials, seed));

    let enforced_failures = checks.iter().filter(|c| c.enforced && !c.ok).count();
    let all_ok = checks.iter().all(|c| c.ok);
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "m": c.m,
                "tensor": c.name,
                "size": c.size,
                "expected": c.expected,
                "computed": c.computed,
                "provenance": c.provenance,
                "one_generic": c.one_generic,
                "enforced": c.enforced,
                "ok": c.ok,
            })
        })
        .collect();
    let results = json!({
        "m_range": format!("{lo}..{hi}"),
        "checks": rows,
        "all_ok": all_ok,
        "enforced_failures": enforced_failures,
    });

    let table = args.common.table.then(|| {
        let rows: Vec<Vec<String>> = checks
            .iter()
            .map(|c| {
                vec![
                    c.m.to_string(),
                    c.name.to_string(),
                    c.size.to_string(),
                    c.expected.to_string(),
                    c.computed.to_string(),
                    c.provenance.to_string(),
                    c.one_generic.to_string(),
                    if c.enforced { "yes".into() } else { "advisory".into() },
                    if c.ok { "ok".into() } else { "MISMATCH".into() },
                ]
            })
            .collect();
        render_table(
            &["m", "tensor", "size", "expected", "computed", "provenance", "1-generic", "enforced", "status"],
            &rows,
        )
    });

    Ok(Output::Report {
        results,
        mode: ReportMode::Exact,
        seed,
        inputs_digest: fmt_io::digest(&[format!("m-range:{lo}..{hi}").as_bytes()]),
        table,
        timings: args.common.timings,
        exit: if enforced_failures > 0 { 1 } else { 0 },
    })
}

// ---------------------------------------------------------------------------
// bform

fn profile_results(p: &bform::BFormProfile, input: &str) -> Value {
    json!({
        "input": input,
        "k": p.k,
        "e": p.e,
        "l": p.l,
        "f": p.f,
        "q_restricted": p.q_restricted,
        "case": p.case_label.name(),
        "stab_dim": p.stab_dim,
        "expected_dims": p.expected_dims,
        "matches": p.matches,
        "k_too_small": p.k_too_small,
    })
}

fn cmd_bform_classify(path: &PathBuf, common: &CommonFlags) -> Result<Output, CliError> {
    let bytes =
        std::fs::read(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| input_err(format!("{}: not valid UTF-8", path.display())))?;
    let b = fmt_io::parse_bform(&text)?;
    let p = bform::classify(&b).map_err(|e| input_err(e.to_string()))?;

    let table = common.table.then(|| {
        let expected = if p.expected_dims.is_empty() {
            format!("≤ {}", p.k * (p.k - 1) / 2 - p.k - 1)
        } else {
            p.expected_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" or ")
        };
        let rows = vec![
            vec!["input".to_string(), path.display().to_string()],
            vec!["k".to_string(), p.k.to_string()],
            vec!["(e, ℓ, f)".to_string(), format!("({}, {}, {})", p.e, p.l, p.f)],
            vec!["rank Q|_ker Λ".to_string(), p.q_restricted.to_string()],
            vec!["case".to_string(), p.case_label.name().to_string()],
            vec!["dim h_B".to_string(), p.stab_dim.to_string()],
            vec!["expected".to_string(), expected],
            vec!["matches".to_string(), p.matches.to_string()],
            vec!["k ≥ 12".to_string(), (!p.k_too_small).to_string()],
        ];
        render_table(&["quantity", "value"], &rows)
    });

    // A mismatch below k = 12 is outside the classified range: advisory.
    let exit = if !p.matches && !p.k_too_small { 1 } else { 0 };
    Ok(Output::Report {
        results: profile_results(&p, &path.display().to_string()),
        mode: ReportMode::Exact,
        seed: common.seed,
        inputs_digest: fmt_io::digest(&[&bytes]),
        table,
        timings: common.timings,
        exit,
    })
}

fn cmd_bform_generate(
    k: usize,
    e: usize,
    l: usize,
    q_restricted: Option<usize>,
    isotropic: bool,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<Output, CliError> {
    if e + l > k {
        return Err(input_err(format!("profile needs e + ℓ ≤ k, got e = {e}, ℓ = {l}, k = {k}")));
    }
    let f = k - e - l;
    let q = q_restricted.unwrap_or(e);
    let subcase = if isotropic { Subcase::Isotropic } else { Subcase::Default };
    let b = bform::random_with_profile(k, e, l, f, q, subcase, seed)
        .map_err(|e| input_err(e.to_string()))?;
    Ok(Output::Raw { doc: fmt_io::bform_to_string(&b), out_path: out })
}

/// The named cases that are feasible at a given k, as
/// `(case, e, ℓ, q_restricted, subcase)`; `f = k − e − ℓ`.
fn lemma_cases(k: usize) -> Vec<(CaseLabel, usize, usize, usize, Subcase)> {
    let even = k % 2 == 0;
    let mut v = Vec::new();
    if even {
        v.push((CaseLabel::A1, 0, 0, 0, Subcase::Default));
    }
    v.push((CaseLabel::A2, k, 0, k, Subcase::Default));
    if even {
        v.push((CaseLabel::A3, 0, 1, 0, Subcase::Default));
    } else {
        v.push((CaseLabel::A4, 1, 0, 1, Subcase::Default));
    }
    if even {
        v.push((CaseLabel::B1, 0, 2, 0, Subcase::Default));
        v.push((CaseLabel::B1, 0, 2, 0, Subcase::Isotropic));
    } else {
        v.push((CaseLabel::B2, 1, 1, 1, Subcase::Default));
        v.push((CaseLabel::B2, 1, 1, 1, Subcase::Isotropic));
    }
    if even {
        v.push((CaseLabel::B3, 2, 0, 2, Subcase::Default));
    }
    v
}

fn cmd_verify_lemma(common: &CommonFlags) -> Result<Output, CliError> {
    struct LemmaCheck {
        k: usize,
        case: CaseLabel,
        subcase: Subcase,
        e: usize,
        l: usize,
        f: usize,
        q: usize,
        stab_dim: usize,
        expected: Vec<usize>,
        ok: bool,
    }

    let tasks: Vec<(usize, CaseLabel, usize, usize, usize, Subcase)> = [12usize, 13, 14]
        .iter()
        .flat_map(|&k| {
            lemma_cases(k).into_iter().map(move |(case, e, l, q, sub)| (k, case, e, l, q, sub))
        })
        .collect();

    let threads = thread_count(tasks.len());
    let checks = run_pool(&tasks, threads, |&(k, case, e, l, q, sub)| {
        let f = k - e - l;
        let b = bform::canonical_with_profile(k, e, l, f, q, sub)
            .expect("every swept profile is feasible");
        let p = bform::profile(&b).expect("canonical forms have full rank");
        let ok = p.case_label == case && p.matches;
        LemmaCheck {
            k,
            case,
            subcase: sub,
            e,
            l,
            f,
            q,
            stab_dim: p.stab_dim,
            expected: p.expected_dims,
            ok,
        }
    });

    let failures = checks.iter().filter(|c| !c.ok).count();
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "k": c.k,
                "case": c.case.name(),
                "subcase": match c.subcase {
                    Subcase::Default => "default",
                    Subcase::Isotropic => "isotropic",
                },
                "e": c.e,
                "l": c.l,
                "f": c.f,
                "q_restricted": c.q,
                "stab_dim": c.stab_dim,
                "expected_dims": c.expected,
                "ok": c.ok,
            })
        })
        .collect();
    let results = json!({
        "k_values": [12, 13, 14],
        "checks": rows,
        "all_ok": failures == 0,
    });

    let table = common.table.then(|| {
        let rows: Vec<Vec<String>> = checks
            .iter()
            .map(|c| {
                vec![
                    c.k.to_string(),
                    c.case.name().to_string(),
                    match c.subcase {
                        Subcase::Default => "default".into(),
                        Subcase::Isotropic => "isotropic".into(),
                    },
                    format!("({}, {}, {})", c.e, c.l, c.f),
                    c.q.to_string(),
                    c.stab_dim.to_string(),
                    c.expected.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" or "),
                    if c.ok { "ok".into() } else { "MISMATCH".into() },
                ]
            })
            .collect();
        render_table(
            &["k", "case", "subcase", "(e, ℓ, f)", "q|E", "dim h_B", "expected", "status"],
            &rows,
        )
    });

    Ok(Output::Report {
        results,
        mode: ReportMode::Exact,
        seed: common.seed,
        inputs_digest: fmt_io::digest(&[b"k:12,13,14"]),
        table,
        timings: common.timings,
        exit: if failures > 0 { 1 } else { 0 },
    })
}

// ---------------------------------------------------------------------------
// borderrank

fn cmd_borderrank(args: &BorderrankArgs) -> Result<Output, CliError> {
    let loaded = args.input.load()?;
    let t = &loaded.tensor;
    let (a, b, c) = t.dims();
    if a != b || b != c {
        return Err(input_err(format!(
            "the commutator test needs a cubic tensor, got {a}×{b}×{c}"
        )));
    }
    let m = a;

    let alpha: Vec<Rational> = match &args.witness {
        Some(text) => {
            let v = fmt_io::parse_covector(text)?;
            if v.len() != m {
                return Err(input_err(format!(
                    "--witness has {} entries, the tensor needs {m}",
                    v.len()
                )));
            }
            v
        }
        None => {
            let e1: Vec<Rational> =
                (0..m).map(|i| if i == 0 { rat(1) } else { rat(0) }).collect();
            let slice = t
                .contract(Factor::A, &e1)
                .expect("covector length matches the tensor");
            if slice.inverse().is_some() {
                e1
            } else {
                let generic = t.genericity(args.common.trials, args.common.seed);
                match &generic.one_generic_flags[0] {
                    FactorVerdict::CertifiedYes { witness } => witness.clone(),
                    FactorVerdict::ProbablyNot { .. } => {
                        return Err(input_err(
                            "no invertible A-contraction found (the tensor may not be \
                             1_A-generic); pass --witness",
                        ))
                    }
                }
            }
        }
    };

    let rep = obstructions::commutator_obstruction(t, &alpha)
        .map_err(|e| input_err(e.to_string()))?;

    let mut ranks = Map::new();
    for (&(i, j), &r) in &rep.commutator_ranks {
        ranks.insert(format!("{i},{j}"), json!(r));
    }
    let nonzero = rep.commutator_ranks.values().filter(|&&r| r > 0).count();
    let results = json!({
        "input": loaded.desc,
        "m": rep.m,
        "witness": vec_value(&rep.witness),
        "commutator_ranks": Value::Object(ranks),
        "pairs": rep.commutator_ranks.len(),
        "nonzero_pairs": nonzero,
        "obstructed": rep.obstructed,
        "border_rank_bound": rep.bound,
    });

    let table = args.common.table.then(|| {
        let witness = rep
            .witness
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let mut rows = vec![
            vec!["input".to_string(), loaded.desc.clone()],
            vec!["m".to_string(), rep.m.to_string()],
            vec!["witness α".to_string(), witness],
            vec!["pairs tested".to_string(), rep.commutator_ranks.len().to_string()],
            vec!["nonzero commutators".to_string(), nonzero.to_string()],
            vec!["obstructed".to_string(), rep.obstructed.to_string()],
            vec!["border rank ≥".to_string(), rep.bound.to_string()],
        ];
        if rep.obstructed {
            for (&(i, j), &r) in &rep.commutator_ranks {
                if r > 0 {
                    rows.push(vec![format!("rank [N_{i}, N_{j}]"), r.to_string()]);
                }
            }
        }
        render_table(&["quantity", "value"], &rows)
    });

    Ok(Output::Report {
        results,
        mode: ReportMode::Exact,
        seed: args.common.seed,
        inputs_digest: fmt_io::digest(&[&loaded.digest_part]),
        table,
        timings: args.common.timings,
        exit: 0,
    })
}

// ---------------------------------------------------------------------------
// degenerate

fn cmd_degenerate(args: &DegenerateArgs) -> Result<Output, CliError> {
    let loaded = args.input.load()?;
    let t = &loaded.tensor;
    let (a, b, c) = t.dims();

    let (family, family_desc, family_digest): (DegenerationFamily, String, Vec<u8>) =
        match (&args.family, args.builtin) {
            (Some(path), None) => {
                let bytes = std::fs::read(path)
                    .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
                let text = String::from_utf8(bytes.clone())
                    .map_err(|_| input_err(format!("{}: not valid UTF-8", path.display())))?;
                let fam = fmt_io::parse_family(&text)?;
                (fam, path.display().to_string(), bytes)
            }
            (None, Some(builtin)) => {
                if a != b || b != c {
                    return Err(input_err(format!(
                        "the built-in families need a cubic tensor, got {a}×{b}×{c}"
                    )));
                }
                let (fam, name) = match builtin {
                    BuiltinFamily::Binding => (DegenerationFamily::binding(a), "builtin:binding"),
                    BuiltinFamily::ScaleA => (DegenerationFamily::scale_a(a), "builtin:scale_a"),
                };
                (fam, name.to_string(), name.as_bytes().to_vec())
            }
            _ => unreachable!("clap enforces exactly one of --family/--builtin"),
        };

    let curve = obstructions::apply_family(t, &family).map_err(|e| input_err(e.to_string()))?;
    let limit = obstructions::limit(&curve).map_err(|e| input_err(e.to_string()))?;

    let results = json!({
        "input": loaded.desc,
        "family": family_desc,
        "dims": [a, b, c],
        "limit": fmt_io::tensor_to_value(&limit),
        "limit_nnz": limit.nnz(),
    });

    let table = args.common.table.then(|| {
        let mut text = render_table(
            &["quantity", "value"],
            &[
                vec!["input".to_string(), loaded.desc.clone()],
                vec!["family".to_string(), family_desc.clone()],
                vec!["dims".to_string(), format!("{a}×{b}×{c}")],
                vec!["limit entries".to_string(), limit.nnz().to_string()],
            ],
        );
        let entry_rows: Vec<Vec<String>> = limit
            .entries()
            .map(|(&(i, j, k), v)| {
                vec![i.to_string(), j.to_string(), k.to_string(), v.to_string()]
            })
            .collect();
        text.push('\n');
        text.push_str(&render_table(&["i", "j", "k", "value"], &entry_rows));
        text
    });

    Ok(Output::Report {
        results,
        mode: ReportMode::Exact,
        seed: args.common.seed,
        inputs_digest: fmt_io::digest(&[&loaded.digest_part, &family_digest]),
        table,
        timings: args.common.timings,
        exit: 0,
    })
}

// ---------------------------------------------------------------------------
// table rendering

/// Indent every line of a multi-line block by four spaces.
fn indent(block: &str) -> String {
    block.lines().map(|line| format!("    {line}\n")).collect()
}

/// Plain aligned-text table: header row, dash rule, data rows.
fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut text = String::new();
    let render_row = |cells: &[String]| -> String {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate().take(cols) {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            // Pad all but the last column.
            if i + 1 < cols {
                for _ in cell.chars().count()..widths[i] {
                    line.push(' ');
                }
            }
        }
        line.push('\n');
        line
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    text.push_str(&render_row(&header_cells));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    text.push_str(&render_row(&rule));
    for row in rows {
        text.push_str(&render_row(row));
    }
    text
}
