use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use frechet_cli::{parse_spec, render, run, RunOptions, EXIT_USAGE};

/// Runs one JSON problem spec and prints the result as JSON.
///
/// Exit status: 0 when the property holds or a decision was computed,
/// 1 when it fails (the witness is in the output), 2 on bad input.
#[derive(Debug, Parser)]
#[command(name = "frechet", version)]
struct Args {
    /// Spec file; standard input when omitted.
    #[arg(long)]
    spec: Option<PathBuf>,

    /// Write the point cloud of graph-sample or sanjuan here as CSV.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Significant digits in CSV output.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,

    /// Extension window, overriding the spec.
    #[arg(long)]
    window: Option<usize>,

    /// Seed for randomized trial sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut text = Vec::new();
    let read = match &args.spec {
        Some(path) => File::open(path).and_then(|mut f| f.read_to_end(&mut text)),
        None => io::stdin().read_to_end(&mut text),
    };
    if let Err(e) = read {
        return fail(format!("cannot read spec: {e}"));
    }
    let spec = match parse_spec(&text) {
        Ok(spec) => spec,
        Err(e) => return fail(e),
    };
    let opts = RunOptions {
        window: args.window,
        seed: args.seed,
    };
    let outcome = match run(&spec, &opts) {
        Ok(outcome) => outcome,
        Err(e) => return fail(e),
    };
    if let Some(path) = &args.out {
        let Some(cloud) = &outcome.cloud else {
            return fail(format!("--out: command {} produced no point cloud", spec.command));
        };
        let written = File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            cloud.write_csv(&mut w, args.precision as usize)?;
            w.flush()
        });
        if let Err(e) = written {
            return fail(format!("cannot write {}: {e}", path.display()));
        }
    }
    print!("{}", render(&outcome.output));
    ExitCode::from(outcome.exit_code as u8)
}
