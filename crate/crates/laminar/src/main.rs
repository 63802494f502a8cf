//! Command-line front end: evaluates queries against stream files and
//! dumps windows for inspection.
//!
//! Exit codes: 0 on success, 1 on evaluation errors, 2 on usage or
//! parse errors. Answers go to stdout, diagnostics to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use laminar::engine::Structure;
use laminar::io::{parse_query, parse_registry, parse_stream, serialize_answer, serialize_stream};
use laminar::logic::TimeTerm;
use laminar::windows::{TupleMode, WindowRegistry};

#[derive(Parser)]
#[command(name = "laminar", version, about = "Stream reasoning over timestamped atom streams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a query against a stream
    Eval(EvalArgs),
    /// Dump the window of index I applied to the urstream at a time point
    Window(WindowArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ModeArg {
    #[value(name = "exact-ordered")]
    ExactOrdered,
    #[value(name = "at-least")]
    AtLeast,
}

impl From<ModeArg> for TupleMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::ExactOrdered => TupleMode::ExactOrdered,
            ModeArg::AtLeast => TupleMode::AtLeast,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Stream document
    #[arg(long)]
    stream: PathBuf,
    /// Window registry (JSON); optional if the query uses no window operator
    #[arg(long)]
    windows: Option<PathBuf>,
    /// Query text, or @<path> to read it from a file
    #[arg(long)]
    query: String,
    /// Evaluate at this time point, overriding the query's own time
    #[arg(long, conflicts_with = "all")]
    at: Option<u64>,
    /// Evaluate at every time point of the stream timeline
    #[arg(long)]
    all: bool,
    /// Default mode for tuple and partition windows
    #[arg(long, env = "LAMINAR_MODE", default_value = "exact-ordered")]
    mode: ModeArg,
}

#[derive(Args)]
struct WindowArgs {
    /// Stream document
    #[arg(long)]
    stream: PathBuf,
    /// Window registry (JSON)
    #[arg(long)]
    windows: PathBuf,
    /// Window index to apply
    #[arg(long)]
    index: u32,
    /// Time point to apply the window at
    #[arg(long)]
    at: u64,
    /// Default mode for tuple and partition windows
    #[arg(long, env = "LAMINAR_MODE", default_value = "exact-ordered")]
    mode: ModeArg,
}

enum CliError {
    /// parse or usage problems, exit 2
    Parse(String),
    /// evaluation problems, exit 1
    Eval(String),
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_structure(
    stream: &PathBuf,
    windows: Option<&PathBuf>,
    mode: TupleMode,
) -> Result<Structure, CliError> {
    let urstream = parse_stream(&read_file(stream)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", stream.display())))?;
    let registry = match windows {
        Some(path) => parse_registry(&read_file(path)?, mode)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?,
        None => WindowRegistry::new(),
    };
    Ok(Structure::new(urstream, registry))
}

fn query_text(arg: &str) -> Result<String, CliError> {
    // "@path" reads from a file; "@ U ..." is exact-time-reference syntax
    if let Some(rest) = arg.strip_prefix('@') {
        if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
            let path = PathBuf::from(rest);
            if path.exists() {
                return read_file(&path);
            }
        }
    }
    Ok(arg.to_string())
}

fn run_eval(args: &EvalArgs) -> Result<(), CliError> {
    let m = load_structure(&args.stream, args.windows.as_ref(), args.mode.into())?;
    let text = query_text(&args.query)?;
    let mut query = parse_query(&text).map_err(|e| CliError::Parse(format!("query: {e}")))?;
    if let Some(t) = args.at {
        query.at = TimeTerm::Point(t);
    }
    if args.all {
        for (t, answer) in m
            .evaluate_continuous(&query)
            .map_err(|e| CliError::Eval(e.to_string()))?
        {
            println!("{t} {}", serialize_answer(&answer));
        }
    } else {
        let answer = m.answer(&query).map_err(|e| CliError::Eval(e.to_string()))?;
        println!("{}", serialize_answer(&answer));
    }
    Ok(())
}

fn run_window(args: &WindowArgs) -> Result<(), CliError> {
    let m = load_structure(&args.stream, Some(&args.windows), args.mode.into())?;
    let window = m
        .registry()
        .apply_extended(args.index, m.urstream(), m.urstream(), args.at)
        .map_err(|e| CliError::Eval(e.to_string()))?;
    print!("{}", serialize_stream(&window));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Window(args) => run_window(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Eval(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
