//! Command line driver: `khovanskii <subduct|khovanskii|muvak|homogenize> PROBLEM [flags]`.
//!
//! Exit status 0 means complete or verified, 2 means a cap was hit and 1
//! means the input was rejected.

mod commands;
mod error;
mod problem;
mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use khovanskii::homogenize::Method;

use crate::commands::{run_command, Command, Settings, EXIT_INPUT};
use crate::error::CliError;
use crate::problem::parse_problem_file;

#[derive(Debug, Parser)]
#[command(name = "khovanskii", version, about = "Homogeneous Khovanskii and MUVAK bases of subalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Subduct a target polynomial by the generators.
    Subduct {
        #[command(flatten)]
        common: Common,
        /// Polynomial to subduct.
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        /// Grading degree of the target, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        target_degree: Option<Vec<i64>>,
    },
    /// Complete the generators to a homogeneous Khovanskii basis.
    Khovanskii {
        #[command(flatten)]
        common: Common,
    },
    /// Complete the generators to a homogeneous MUVAK basis.
    Muvak {
        #[command(flatten)]
        common: Common,
    },
    /// Homogenize the ideal spanned by the generators with respect to the weights.
    Homogenize {
        #[command(flatten)]
        common: Common,
        /// Degree of the homogenizing variables.
        #[arg(long, allow_hyphen_values = true, value_parser = clap::builder::PossibleValuesParser::new(["-1", "1"]))]
        sign: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Bayer,
    Saturation,
}

#[derive(Debug, Args)]
struct Common {
    /// Problem file.
    problem: PathBuf,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long)]
    max_rounds: Option<usize>,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Include reduction traces, intermediate ideals and verification results.
    #[arg(long)]
    emit_certificates: bool,
}

fn run(cli: Cli) -> Result<(u8, String), CliError> {
    let (command, common, target, target_degree, sign) = match cli.command {
        Cmd::Subduct { common, target, target_degree } => (Command::Subduct, common, target, target_degree, None),
        Cmd::Khovanskii { common } => (Command::Khovanskii, common, None, None, None),
        Cmd::Muvak { common } => (Command::Muvak, common, None, None, None),
        Cmd::Homogenize { common, sign } => {
            (Command::Homogenize, common, None, None, sign.map(|s| s.parse().expect("validated by clap")))
        }
    };
    let path = common.problem.display().to_string();
    let text =
        std::fs::read_to_string(&common.problem).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let problem = parse_problem_file(&text).map_err(|e| match e {
        CliError::Problem { at, message } => CliError::Usage(format!("{path}:{at}: {message}")),
        other => other,
    })?;
    let o = &problem.options;
    let settings = Settings {
        max_iter: common.max_iter.or(o.max_iter),
        max_rounds: common.max_rounds.or(o.max_rounds),
        method: common
            .method
            .map(|m| match m {
                MethodArg::Bayer => Method::Bayer,
                MethodArg::Saturation => Method::Saturation,
            })
            .or(o.method),
        target: target.or_else(|| o.target.clone()),
        target_degree: target_degree.or_else(|| o.target_degree.clone()),
        sign: sign.or(o.sign),
        certificates: common.emit_certificates,
    };
    let outcome = run_command(command, &problem, &settings)?;
    let rendered =
        if common.json { report::render_json(&outcome.report) } else { report::render_text(&outcome.report) };
    Ok((outcome.exit, rendered))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok((code, out)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
