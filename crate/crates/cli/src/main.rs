//! `meb-kit` command-line front end. Every run prints one JSON report.

mod args;
mod commands;
mod io;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind as ClapKind;
use clap::Parser;
use serde_json::Value;

use args::{Cli, Command};
use report::{CliError, ErrorReport, RunReport, TOOL_VERSION};

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("MEB_KIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("MEB_KIT_THREADS must be an integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::usage(format!("thread pool: {e}")))
}

fn parameters(cli: &Cli) -> Value {
    let mut p = match &cli.command {
        Command::Meb(a) => serde_json::to_value(a),
        Command::Mkeb(a) => serde_json::to_value(a),
        Command::Diameter(a) => serde_json::to_value(a),
        Command::TestCluster(a) => serde_json::to_value(a),
        Command::Bounds(a) => serde_json::to_value(a),
        Command::Convexity(a) => serde_json::to_value(a),
        Command::Gen(a) => serde_json::to_value(a),
    }
    .expect("arguments serialize");
    p["input"] = serde_json::json!(cli.input);
    p
}

fn execute(cli: &Cli) -> Result<Value, CliError> {
    configure_threads()?;
    let load = || -> Result<_, CliError> {
        let path = cli.input.as_ref().ok_or_else(|| CliError::usage("--input is required"))?;
        io::read_points(path, io::format_for(path, cli.format))
    };
    match &cli.command {
        Command::Meb(a) => commands::meb(&load()?, a),
        Command::Mkeb(a) => commands::mkeb(&load()?, a, cli.seed),
        Command::Diameter(a) => commands::diameter(&load()?, a, cli.seed),
        Command::TestCluster(a) => commands::test_cluster(&load()?, a, cli.seed),
        Command::Bounds(a) => {
            let points = if cli.input.is_some() { Some(load()?) } else { None };
            commands::bounds(points.as_ref(), a)
        }
        Command::Convexity(a) => commands::convexity(&load()?, a),
        Command::Gen(a) => commands::gen(a, cli.seed, cli.format),
    }
}

fn emit(text: &str, cli: Option<&Cli>) -> Result<(), CliError> {
    match cli.and_then(|c| c.output.as_ref()) {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()), None)),
        None => {
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            Ok(())
        }
    }
}

fn fail(command: &str, err: &CliError) -> ExitCode {
    let payload = ErrorReport {
        command,
        error: err,
        tool_version: TOOL_VERSION,
    };
    let text = serde_json::to_string_pretty(&payload).expect("error payload serializes");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(err.kind.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("", &CliError::usage(e.render().to_string().trim_end())),
    };
    let command = cli.command.name();
    let start = Instant::now();
    let result = match execute(&cli) {
        Ok(v) => v,
        Err(e) => return fail(command, &e),
    };
    let report = RunReport {
        command: command.to_string(),
        parameters: parameters(&cli),
        result,
        seed: cli.seed,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
        tool_version: TOOL_VERSION,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match emit(&text, Some(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(command, &e),
    }
}
