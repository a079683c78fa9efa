//! `hkit`: command-line front end. Every command runs as a task against a
//! problem; direct subcommands build a one-task problem from their flags.

mod exec;
mod problem;

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hkit_core::suite::{run_suite, SuiteConfig};
use hkit_core::{Error, Field, MonomialOrder};
use serde_json::{json, Map, Value};

/// Accepted names of the built-in suite.
pub(crate) const SUITE_NAMES: [&str; 2] = ["examples", "paper"];

use exec::{run_problem, Flags, Report, Status};
use problem::{ProblemFile, RingDef, Task};

#[derive(Parser, Debug)]
#[command(name = "hkit", version, about = "Hilbert coefficients of parameter ideals, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ground field: `qq` or `fp:P`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Monomial order: `lex`, `degrevlex` or `elim:B`.
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<MonomialOrder>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Largest `n` sampled for Hilbert fits.
    #[arg(long, global = true)]
    nmax: Option<u32>,
    /// Largest power of the maximal ideal examined by local lengths.
    #[arg(long, global = true)]
    cutoff: Option<u32>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include per-task wall-clock times in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every task of a problem file.
    Run { file: PathBuf },
    /// Built-in reproduction suite.
    Suite {
        #[arg(default_value = "examples")]
        name: String,
        /// Sampled reductions per family.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Reduced Gröbner basis of `--ideal`.
    Gb(TaskArgs),
    /// Length of `R/I` at the origin (`--mode local|global|truncated|saturation`).
    Colength(TaskArgs),
    /// Hilbert–Samuel function `n -> length(A/Q^{n+1})`.
    Hilb(TaskArgs),
    /// Hilbert coefficients `(e0, ..., ed)` by polynomial fit.
    Coeffs(TaskArgs),
    /// `(e1, e2)` from the kernel method on `C = R/c`.
    KernelE1(TaskArgs),
    /// Length of `(0) :_C f`.
    AnnLength(TaskArgs),
    /// `e1` from the one-dimensional slice `A/(a)`.
    SliceE1(TaskArgs),
    /// Whether the parameters form a d-sequence.
    Dseq(TaskArgs),
    /// Windowed superficiality test of `--elem` for `Q`.
    Superficial(TaskArgs),
    /// Length of `U(a)/(a)` for parameters `a, b`.
    Unmixed(TaskArgs),
    /// Whether `Q` is a reduction of `--ideal`.
    Reduction(TaskArgs),
    /// Sampled minimal reductions of `--ideal`.
    SampleReductions(TaskArgs),
    /// Observed `e1` values over reductions of `--ideal`.
    Lambda(TaskArgs),
    /// Lengths `length(I^{n+1}/Q^n I)`.
    Sally(TaskArgs),
    /// Rank of the Sally module.
    SallyRank(TaskArgs),
    /// Hilbert coefficients in `k + J` (of `J`, or of `--params` when given).
    Kplusj(TaskArgs),
}

/// Definitions for a single direct command. Object options take a name
/// from `--file` or comma-separated generators.
#[derive(Args, Debug, Default)]
struct TaskArgs {
    /// Problem file supplying named objects.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated variables (ignored with `--file`).
    #[arg(long, default_value = "x,y,z,w")]
    vars: String,
    #[arg(long)]
    ideal: Option<String>,
    /// Named quotient from `--file`.
    #[arg(long, conflicts_with = "defining")]
    quotient: Option<String>,
    /// Defining ideal of `A = R/a`.
    #[arg(long)]
    defining: Option<String>,
    /// Krull dimension of `A`.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long)]
    params: Option<String>,
    /// Ideal `c` with `C = R/c` Artinian.
    #[arg(long)]
    artinian: Option<String>,
    #[arg(long)]
    elem: Option<String>,
    #[arg(long)]
    count: Option<u64>,
    #[arg(long)]
    e0: Option<u64>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    n: Option<u64>,
    /// Kernel window or superficiality window `lo,hi`.
    #[arg(long)]
    window: Option<String>,
    /// Named parameter ideals added to `lambda`.
    #[arg(long, value_delimiter = ',')]
    named: Vec<String>,
    #[arg(long)]
    any_order: bool,
    /// Expected value as JSON, e.g. `[5,-2,-1]`.
    #[arg(long)]
    expect: Option<String>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    MonomialOrder::parse(s).map_err(|e| e.to_string())
}

fn split_gens(s: &str) -> Vec<String> {
    s.split(',').map(|g| g.trim().to_string()).filter(|g| !g.is_empty()).collect()
}

/// A name known to the problem file, or an inline generator list.
fn object(spec: &str, known: bool) -> Value {
    if known {
        json!(spec)
    } else {
        json!(split_gens(spec))
    }
}

fn direct_problem(command: &str, t: TaskArgs) -> Result<ProblemFile, Error> {
    let mut problem = match &t.file {
        Some(path) => read_problem(path)?,
        None => ProblemFile {
            ring: RingDef {
                variables: split_gens(&t.vars),
                ..RingDef::default()
            },
            ..ProblemFile::default()
        },
    };
    problem.tasks.clear();
    let mut args = Map::new();
    if let Some(s) = &t.ideal {
        let known = problem.ideals.contains_key(s) || s == "m";
        args.insert("ideal".into(), object(s, known));
    }
    if let Some(q) = &t.quotient {
        args.insert("quotient".into(), json!(q));
    } else if let Some(d) = &t.defining {
        let defining = object(d, problem.ideals.contains_key(d));
        args.insert("quotient".into(), json!({ "defining": defining, "dim": t.dim }));
    }
    if let Some(s) = &t.params {
        args.insert("params".into(), object(s, problem.parameters.contains_key(s)));
    }
    if let Some(s) = &t.artinian {
        let known = problem.artinian.contains_key(s) || problem.ideals.contains_key(s);
        args.insert("artinian".into(), object(s, known));
    }
    if let Some(s) = &t.elem {
        args.insert("elem".into(), json!(s));
    }
    for (key, v) in [("count", t.count), ("e0", t.e0), ("n", t.n)] {
        if let Some(v) = v {
            args.insert(key.into(), json!(v));
        }
    }
    if let Some(m) = &t.mode {
        args.insert("mode".into(), json!(m));
    }
    if let Some(w) = &t.window {
        let parts: Vec<u64> = w
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::InvalidInput(format!("bad window `{w}`")))?;
        let v = match parts.as_slice() {
            [n] => json!(n),
            [lo, hi] => json!([lo, hi]),
            _ => return Err(Error::InvalidInput(format!("bad window `{w}`"))),
        };
        args.insert("window".into(), v);
    }
    if !t.named.is_empty() {
        args.insert("named".into(), json!(t.named));
    }
    if t.any_order {
        args.insert("any_order".into(), json!(true));
    }
    let expect = match &t.expect {
        Some(e) => Some(
            serde_json::from_str(e).map_err(|err| Error::InvalidInput(format!("--expect: {err}")))?,
        ),
        None => None,
    };
    problem.tasks.push(Task {
        command: command.to_string(),
        label: None,
        args,
        expect,
    });
    problem.validate()?;
    Ok(problem)
}

fn read_problem(path: &PathBuf) -> Result<ProblemFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    ProblemFile::from_json(&text)
}

fn print_report(report: &Report, as_json: bool) {
    if as_json {
        out!("{}", serde_json::to_string_pretty(report).expect("serializable"));
        return;
    }
    for (k, t) in report.tasks.iter().enumerate() {
        let name = t.label.clone().unwrap_or_else(|| t.command.clone());
        let verdict = match t.pass {
            Some(true) => "  PASS",
            Some(false) => "  FAIL",
            None => "",
        };
        match &t.error {
            Some(e) => out!("[{}] {name}: error: {e}{verdict}", k + 1),
            None => {
                let expect = t.expect.as_ref().map(|e| format!("  (expected {e})")).unwrap_or_default();
                out!("[{}] {name}: {}{expect}{verdict}", k + 1, t.value);
            }
        }
        if let Some(ms) = t.millis {
            out!("    time: {ms} ms");
        }
    }
    for w in &report.warnings {
        out!("warning: {w}");
    }
}

fn fail_input(e: &Error, as_json: bool) -> ExitCode {
    let status = Status::of_error(e);
    if as_json {
        out!("{}", json!({ "error": e.to_string(), "pass": false }));
    } else {
        eprintln!("error: {e}");
    }
    ExitCode::from(status as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(Status::InputError as u8);
        }
    }
    let flags = Flags {
        field: cli.field,
        order: cli.order,
        seed: cli.seed,
        n_max: cli.nmax,
        cutoff: cli.cutoff,
        timings: cli.timings,
    };
    let problem = match cli.command {
        Command::Suite { name, samples } => {
            if !SUITE_NAMES.contains(&name.as_str()) {
                return fail_input(&Error::InvalidInput(format!("unknown suite `{name}`")), cli.json);
            }
            let cfg = SuiteConfig {
                field: cli.field.unwrap_or_default(),
                seed: cli.seed,
                samples,
                n_max: cli.nmax,
            };
            return match run_suite(&cfg) {
                Ok(r) => {
                    if cli.json {
                        out!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
                    } else {
                        for c in &r.checks {
                            let v = if c.pass { "PASS" } else { "FAIL" };
                            out!("{v}  [{}] {}: {} (expected {})", c.group, c.key, c.actual, c.expected);
                        }
                        for w in &r.warnings {
                            out!("warning: {w}");
                        }
                    }
                    ExitCode::from(if r.all_pass() { 0 } else { Status::ExpectationFailed as u8 })
                }
                Err(e) => fail_input(&e, cli.json),
            };
        }
        Command::Run { file } => read_problem(&file),
        Command::Gb(t) => direct_problem("gb", t),
        Command::Colength(t) => direct_problem("colength", t),
        Command::Hilb(t) => direct_problem("hilb", t),
        Command::Coeffs(t) => direct_problem("coeffs", t),
        Command::KernelE1(t) => direct_problem("kernel-e1", t),
        Command::AnnLength(t) => direct_problem("ann-length", t),
        Command::SliceE1(t) => direct_problem("slice-e1", t),
        Command::Dseq(t) => direct_problem("dseq", t),
        Command::Superficial(t) => direct_problem("superficial", t),
        Command::Unmixed(t) => direct_problem("unmixed", t),
        Command::Reduction(t) => direct_problem("reduction", t),
        Command::SampleReductions(t) => direct_problem("sample-reductions", t),
        Command::Lambda(t) => direct_problem("lambda", t),
        Command::Sally(t) => direct_problem("sally", t),
        Command::SallyRank(t) => direct_problem("sally-rank", t),
        Command::Kplusj(t) => direct_problem("kplusj", t),
    };
    let problem = match problem {
        Ok(p) => p,
        Err(e) => return fail_input(&e, cli.json),
    };
    let (report, status, err) = run_problem(problem, flags);
    match report {
        Some(r) => print_report(&r, cli.json),
        None => {
            let e = err.unwrap_or_default();
            if cli.json {
                out!("{}", json!({ "error": e, "pass": false }));
            } else {
                eprintln!("error: {e}");
            }
        }
    }
    ExitCode::from(status as u8)
}
