//! Command-line front end: argument definitions, command implementations and
//! the replay suite. `main.rs` only parses arguments and prints.

pub mod args;
pub mod commands;
pub mod error;
pub mod inputs;
pub mod replay;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use args::{Cli, Command};
use commands::{Context, Outcome};
use error::{CliError, CliResult};
use inputs::Inputs;

/// What the process should print and return.
#[derive(Clone, Debug)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    message: String,
    witness: &'a [String],
}

/// Structured output. Identical inputs give identical reports except for
/// `wall_time_ms`.
#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a [String],
    inputs: BTreeMap<String, String>,
    status: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorReport<'a>>,
    warnings: Vec<String>,
    wall_time_ms: u128,
}

fn parse_overrides(pairs: &[String]) -> CliResult<BTreeMap<String, PathBuf>> {
    pairs
        .iter()
        .map(|p| {
            p.split_once('=')
                .map(|(k, f)| (k.to_string(), PathBuf::from(f)))
                .ok_or_else(|| CliError::input(format!("--with expects KEY=FILE, got {p:?}")))
        })
        .collect()
}

fn dispatch(ctx: &Context, command: &Command) -> CliResult<Outcome> {
    match command {
        Command::Quandle(c) => commands::quandle(ctx, c),
        Command::Homology(a) => commands::homology(ctx, a),
        Command::Chain(a) => commands::chain(ctx, a),
        Command::Hom(c) => commands::hom(ctx, c),
        Command::Diagram(c) => commands::diagram(ctx, c),
        Command::Les(c) => commands::les(ctx, c),
        Command::Replay(a) => Ok(replay::replay(&ctx.inputs, a.seed)),
    }
}

/// Runs one parsed command line; `echo` is recorded in JSON reports.
pub fn execute(cli: &Cli, echo: &[String]) -> Execution {
    let start = Instant::now();
    let inputs = match &cli.command {
        Command::Replay(a) => match parse_overrides(&a.overrides) {
            Ok(o) => Inputs::with_overrides(o),
            Err(e) => return failure(cli, echo, &e, Inputs::new(), Vec::new(), start),
        },
        _ => Inputs::new(),
    };
    let ctx = Context::new(inputs, cli.max_columns, cli.force);
    let outcome = dispatch(&ctx, &cli.command);
    let warnings = std::mem::take(&mut *ctx.warnings.lock().unwrap());
    match outcome {
        Err(e) => failure(cli, echo, &e, ctx.inputs, warnings, start),
        Ok(o) => {
            let stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            let stdout = if cli.json {
                render(&RunReport {
                    command: echo,
                    inputs: ctx.inputs.digests(),
                    status: o.code,
                    result: Some(o.result),
                    error: None,
                    warnings,
                    wall_time_ms: start.elapsed().as_millis(),
                })
            } else {
                o.text
            };
            Execution { code: o.code, stdout, stderr }
        }
    }
}

fn render(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn failure(
    cli: &Cli,
    echo: &[String],
    e: &CliError,
    inputs: Inputs,
    warnings: Vec<String>,
    start: Instant,
) -> Execution {
    let witness: &[String] = match e {
        CliError::Precondition { witness, .. } => witness,
        _ => &[],
    };
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    stderr.push_str(&format!("error: {e}\n"));
    for w in witness {
        stderr.push_str(&format!("  {w}\n"));
    }
    let stdout = if cli.json {
        render(&RunReport {
            command: echo,
            inputs: inputs.digests(),
            status: e.code(),
            result: None,
            error: Some(ErrorReport {
                message: e.to_string(),
                witness,
            }),
            warnings,
            wall_time_ms: start.elapsed().as_millis(),
        })
    } else {
        String::new()
    };
    Execution {
        code: e.code(),
        stdout,
        stderr,
    }
}
