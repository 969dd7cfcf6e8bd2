mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.parallelism {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
        {
            eprintln!("error: cannot size worker pool: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let outcome = match &cli.command {
        Command::SlopeWord(a) => commands::slope_word(a),
        Command::Obstruct(a) => commands::obstruct(a),
        Command::Kernels(a) => commands::kernels(a),
        Command::Blanchfield(a) => commands::blanchfield(a),
        Command::Satellite(a) => match commands::satellite(a) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
        },
        Command::VerifyAll(a) => commands::verify_all(a),
    };
    let body = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&outcome.json).expect("json value")
        ),
        Format::Text => outcome.text,
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}
