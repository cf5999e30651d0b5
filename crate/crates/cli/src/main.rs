use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use phforge::commands::{cmd_check, cmd_frames, cmd_sample, cmd_synth, SynthOptions};
use phforge::config::DEFAULT_SAMPLES;
use phforge::error::exit;
use phforge::export::Format;
use phforge::{CliError, CurveBundle, ProblemConfig};

#[derive(Parser)]
#[command(name = "phforge", version, about = "Closed rational PH curves with rational framing motions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Io {
    /// Input file: a problem for check/synth, a curve bundle for sample/frames.
    #[arg(long)]
    config: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// i-reduction and the convex hull test of the tangent indicatrix.
    Check {
        #[command(flatten)]
        io: Io,
    },
    /// Synthesize a regular closed curve and write its bundle.
    Synth {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        margin: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Run even if the hull test rules out a closed curve.
        #[arg(long)]
        force: bool,
    },
    /// Export the curve of a bundle as json, csv, obj or svg.
    Sample {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "json")]
        format: String,
        /// SVG view direction `x,y,z`.
        #[arg(long, default_value = "1,1,1", value_parser = parse_view)]
        view: [f64; 3],
    },
    /// Export the framing motion of a bundle as json or csv.
    Frames {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

fn parse_view(s: &str) -> Result<[f64; 3], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| "expected x,y,z".to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    Ok(fs::read_to_string(path)?)
}

fn write(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Check { io } => {
            let cfg = ProblemConfig::parse(&read(&io.config)?)?;
            let n = io.samples.unwrap_or_else(|| cfg.samples());
            let report = cmd_check(&cfg, n)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            write(io.out.as_deref(), &with_newline(text))
        }
        Command::Synth { io, margin, seed, force } => {
            let cfg = ProblemConfig::parse(&read(&io.config)?)?;
            let opts = SynthOptions {
                margin,
                seed,
                samples: io.samples,
                force,
            };
            let bundle = cmd_synth(&cfg, &opts)?;
            write(io.out.as_deref(), &with_newline(bundle.to_json()))
        }
        Command::Sample { io, format, view } => {
            let format: Format = format.parse()?;
            let bundle = CurveBundle::from_json(&read(&io.config)?)?;
            let text = cmd_sample(&bundle, io.samples.unwrap_or(DEFAULT_SAMPLES), format, view)?;
            write(io.out.as_deref(), &with_newline(text))
        }
        Command::Frames { io, format } => {
            let format: Format = format.parse()?;
            let bundle = CurveBundle::from_json(&read(&io.config)?)?;
            let text = cmd_frames(&bundle, io.samples.unwrap_or(DEFAULT_SAMPLES), format)?;
            write(io.out.as_deref(), &with_newline(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
