//! Command-line front end.
//!
//! Exit status: 0 for a definite answer, 1 for bad input, 2 when the
//! answer is unknown within the given resources (fuel, rounds, bound, limit).

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use workbench::diophantine::{Domain, Polynomial, SearchResult, Solver};
use workbench::dovetail::{BudgetDecider, Claim, Dovetailer, HaltingDecider};
use workbench::enumerate::Enumeration;
use workbench::pi::{run_position_capped, RunPosition};
use workbench::primrec::{parse_expr, EvalError};
use workbench::tm::{self, parse_machine, trace_line, Machine, RunOutcome};

#[derive(Debug, Parser)]
#[command(
    name = "workbench",
    version,
    about = "Turing machines, halting-set dovetailing, primitive recursion and Diophantine search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a machine on an input and print its output or `exhausted`.
    TmRun(TmRunArgs),
    /// Print every configuration a machine visits.
    TmTrace(TmTraceArgs),
    /// Dump the first machines of the enumeration in machine file format.
    Enumerate(EnumerateArgs),
    /// List halting (machine, input) pairs found by dovetailing as CSV.
    Dovetail(DovetailArgs),
    /// Look for a diagonal pair on which a halting decider wrongly claims divergence.
    Audit(AuditArgs),
    /// Evaluate a primitive recursive term.
    PrimrecEval(PrimrecArgs),
    /// Search for natural or integer roots of a polynomial.
    DioSolve(DioArgs),
    /// Diophantine commands (`dio solve` is the same as `dio-solve`).
    #[command(subcommand)]
    Dio(DioCommand),
    /// Position of the first run of x fives in the digits of pi.
    PiRun(PiArgs),
    /// Pi commands (`pi run` is the same as `pi-run`).
    #[command(subcommand)]
    Pi(PiCommand),
}

#[derive(Debug, Subcommand)]
enum DioCommand {
    Solve(DioArgs),
}

#[derive(Debug, Subcommand)]
enum PiCommand {
    Run(PiArgs),
}

#[derive(Debug, Args)]
struct MachineSource {
    /// Machine file (one `q0 1 P q0` quadruple per line).
    #[arg(long, conflicts_with = "index", required_unless_present = "index")]
    machine: Option<PathBuf>,
    /// Use the machine at this index of the enumeration instead of a file.
    #[arg(long)]
    index: Option<u64>,
}

impl MachineSource {
    fn load(&self) -> Result<Machine> {
        match (&self.machine, self.index) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("--machine: cannot read {}", path.display()))?;
                parse_machine(&text).with_context(|| format!("--machine: {}", path.display()))
            }
            (None, Some(n)) => Ok(Enumeration::default().machine_at(n).context("--index")?),
            (None, None) => bail!("one of --machine or --index is required"),
        }
    }
}

#[derive(Debug, Args)]
struct TmRunArgs {
    #[command(flatten)]
    source: MachineSource,
    /// Comma-separated natural numbers, e.g. `3` or `2,1`.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    input: Vec<u64>,
    /// Maximum number of steps.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    fuel: u64,
}

#[derive(Debug, Args)]
struct TmTraceArgs {
    #[command(flatten)]
    source: MachineSource,
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    input: Vec<u64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    fuel: u64,
    /// Refuse traces longer than this many steps.
    #[arg(long, default_value_t = tm::DEFAULT_TRACE_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    trace_cap: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DumpFormat {
    Text,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    /// First index to print.
    #[arg(long, default_value_t = 0)]
    start: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: DumpFormat,
}

#[derive(Debug, Args)]
struct DovetailArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    rounds: u64,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = workbench::dovetail::DEFAULT_ROUND_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    round_cap: u64,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// `budget:F` (halts within F steps), `diverges` or `converges`.
    #[arg(long)]
    decider: String,
    /// Largest machine index to check.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: u64,
    /// Refutation fuel; defaults to 10*F for `budget:F` and 1000 otherwise.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    fuel: Option<u64>,
}

#[derive(Debug, Args)]
struct PrimrecArgs {
    /// Term such as `rec(P[1,1]; comp(S; P[3,2]))`.
    #[arg(long)]
    expr: String,
    /// Comma-separated arguments; omit for a 0-ary term.
    #[arg(long, value_delimiter = ',')]
    args: Vec<u64>,
    /// Maximum number of recursion unfoldings.
    #[arg(long, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Nat,
    Int,
}

#[derive(Debug, Args)]
struct DioArgs {
    /// Polynomial p; the equation solved is p = 0.
    #[arg(long)]
    expr: String,
    /// Box half-width: coordinates range over 0..=bound (nat) or -bound..=bound (int).
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
    #[arg(long, value_enum, default_value = "nat")]
    domain: DomainArg,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Most box points to visit.
    #[arg(long, default_value_t = workbench::diophantine::DEFAULT_STEP_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    step_cap: u64,
}

#[derive(Debug, Args)]
struct PiArgs {
    /// Run length (at least 1).
    #[arg(long)]
    x: usize,
    /// Number of digits after the point to scan.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: u64,
    #[arg(long, default_value_t = workbench::pi::DEFAULT_PRECISION_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    precision_cap: u64,
}

/// Definite answer or "unknown within the resources given".
enum Answer {
    Definite,
    Unknown,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli.command) {
        Ok(Answer::Definite) => ExitCode::SUCCESS,
        Ok(Answer::Unknown) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<Answer> {
    match command {
        Command::TmRun(a) => tm_run(a),
        Command::TmTrace(a) => tm_trace(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Dovetail(a) => dovetail(a),
        Command::Audit(a) => audit(a),
        Command::PrimrecEval(a) => primrec_eval(a),
        Command::DioSolve(a) | Command::Dio(DioCommand::Solve(a)) => dio_solve(a),
        Command::PiRun(a) | Command::Pi(PiCommand::Run(a)) => pi_run(a),
    }
}

fn tm_run(args: TmRunArgs) -> Result<Answer> {
    let machine = args.source.load()?;
    let outcome = tm::run(&machine, &args.input, args.fuel);
    println!("{outcome}");
    Ok(match outcome {
        RunOutcome::Halted { .. } => Answer::Definite,
        RunOutcome::Exhausted { .. } => Answer::Unknown,
    })
}

fn tm_trace(args: TmTraceArgs) -> Result<Answer> {
    let machine = args.source.load()?;
    let configs = tm::trace(&machine, &args.input, args.fuel, args.trace_cap).context("--fuel")?;
    let mut out = io::stdout().lock();
    for (i, c) in configs.iter().enumerate() {
        writeln!(out, "{}", trace_line(i, c))?;
    }
    let last = configs.last().expect("trace starts with the initial configuration");
    Ok(if machine.lookup(last.state, last.read()).is_none() { Answer::Definite } else { Answer::Unknown })
}

fn enumerate(args: EnumerateArgs) -> Result<Answer> {
    let enumeration = Enumeration::default();
    let end = args.start.checked_add(args.count).context("--start + --count overflows")?;
    if end > enumeration.budget() {
        bail!("--count: indices up to {end} exceed the generation budget of {}", enumeration.budget());
    }
    let DumpFormat::Text = args.format;
    let mut out = io::stdout().lock();
    for (i, machine) in enumeration.iter_from(args.start).take(args.count as usize).enumerate() {
        if i > 0 {
            writeln!(out, "---")?;
        }
        write!(out, "{}", machine.with_name(format!("machine {}", args.start + i as u64)))?;
    }
    Ok(Answer::Definite)
}

fn csv_sink(out: &Option<PathBuf>) -> Result<csv::Writer<Box<dyn Write>>> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).with_context(|| format!("--out: cannot create {}", path.display()))?),
        None => Box::new(io::stdout()),
    };
    Ok(csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(sink))
}

/// Status lines go to stdout when the CSV went to a file, else to stderr.
fn status(out: &Option<PathBuf>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn dovetail(args: DovetailArgs) -> Result<Answer> {
    let dovetailer = Dovetailer { round_cap: args.round_cap, ..Dovetailer::default() };
    let emissions = dovetailer.dovetail(args.rounds).context("--rounds")?;
    let mut w = csv_sink(&args.out)?;
    w.write_record(["round", "n", "x", "steps", "output"])?;
    for e in &emissions {
        let c = e.certificate;
        w.write_record([e.round, c.machine_index, c.input, c.steps, c.output].map(|v| v.to_string()))?;
    }
    w.flush()?;
    status(&args.out, &format!("certificates={} rounds={}", emissions.len(), args.rounds));
    Ok(Answer::Definite)
}

enum DeciderArg {
    Budget(BudgetDecider),
    Constant(Claim),
}

impl HaltingDecider for DeciderArg {
    fn decide(&self, n: u64, x: u64) -> Claim {
        match self {
            DeciderArg::Budget(d) => d.decide(n, x),
            DeciderArg::Constant(c) => *c,
        }
    }
}

fn audit(args: AuditArgs) -> Result<Answer> {
    let dovetailer = Dovetailer::default();
    let (decider, default_fuel) = match args.decider.as_str() {
        "diverges" => (DeciderArg::Constant(Claim::Diverges), 1000),
        "converges" => (DeciderArg::Constant(Claim::Converges), 1000),
        other => {
            let fuel: u64 = other
                .strip_prefix("budget:")
                .and_then(|f| f.parse().ok())
                .with_context(|| format!("--decider: expected budget:F, diverges or converges, got {other:?}"))?;
            let fuel_10 = fuel.checked_mul(10).context("--decider: budget too large")?;
            (DeciderArg::Budget(BudgetDecider { enumeration: dovetailer.enumeration, fuel }), fuel_10.max(1))
        }
    };
    let fuel = args.fuel.unwrap_or(default_fuel);
    match dovetailer.audit(&decider, args.limit, fuel).context("--limit/--fuel")? {
        Some(cx) => {
            let c = cx.certificate;
            println!("counterexample n={} x={} claim=diverges steps={} output={}", cx.n, cx.x, c.steps, c.output);
            Ok(Answer::Definite)
        }
        None => {
            println!("no-refutation limit={} fuel={fuel}", args.limit);
            Ok(Answer::Unknown)
        }
    }
}

fn primrec_eval(args: PrimrecArgs) -> Result<Answer> {
    let expr = parse_expr(&args.expr).context("--expr")?;
    match expr.eval_u64(&args.args, args.budget) {
        Ok(v) => {
            println!("value={v}");
            Ok(Answer::Definite)
        }
        Err(EvalError::BudgetExhausted { budget }) => {
            println!("budget-exhausted budget={budget}");
            Ok(Answer::Unknown)
        }
        Err(e @ EvalError::ArityMismatch { .. }) => Err(e).context("--args"),
        Err(e) => Err(e).context("--expr"),
    }
}

fn dio_solve(args: DioArgs) -> Result<Answer> {
    let p = Polynomial::parse(&args.expr).context("--expr")?;
    let domain = match args.domain {
        DomainArg::Nat => Domain::Natural,
        DomainArg::Int => Domain::Integer,
    };
    let solver = Solver { domain, step_cap: args.step_cap };
    let result = solver.solve(&p, args.bound).context("--bound")?;
    let mut w = csv_sink(&args.out)?;
    if !p.variables().is_empty() {
        w.write_record(p.variables())?;
    }
    let write_row = |w: &mut csv::Writer<Box<dyn Write>>, row: &[num_bigint::BigInt]| {
        if !row.is_empty() {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        Ok::<_, csv::Error>(())
    };
    let (line, answer) = match &result {
        SearchResult::AllSolutionsInBox { solutions, bound } => {
            for s in solutions {
                write_row(&mut w, s)?;
            }
            (format!("result=all-solutions-in-box count={} bound={bound}", solutions.len()), Answer::Definite)
        }
        SearchResult::DecidedSolvable { witness } => {
            write_row(&mut w, witness)?;
            ("result=decided-solvable".to_string(), Answer::Definite)
        }
        SearchResult::DecidedUnsolvable { reason } => {
            (format!("result=decided-unsolvable reason={reason}"), Answer::Definite)
        }
        SearchResult::UnknownBeyondBound { bound } => {
            (format!("result=unknown-beyond-bound bound={bound}"), Answer::Unknown)
        }
    };
    w.flush()?;
    status(&args.out, &line);
    Ok(answer)
}

fn pi_run(args: PiArgs) -> Result<Answer> {
    let limit = usize::try_from(args.limit).context("--limit")?;
    let cap = usize::try_from(args.precision_cap).context("--precision-cap")?;
    let result = run_position_capped(args.x, limit, cap).context("--x/--limit")?;
    println!("{result}");
    Ok(match result {
        RunPosition::Found(_) => Answer::Definite,
        RunPosition::UnknownBeyondLimit(_) => Answer::Unknown,
    })
}
