use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use monomial_depth::io::{exit_code, paper_suite, run, Command, Flags, ResultDoc, Session};
use monomial_depth::{Caps, Error};

/// Depth, regularity and Cohen-Macaulay checks for monomial ideals.
///
/// Exit status: 0 success, 1 parse or I/O error, 2 precondition violated,
/// 3 resource cap exceeded, 4 a reproduction item failed.
#[derive(Parser, Debug)]
#[command(name = "mdepth", version)]
struct Cli {
    /// Operation to run.
    #[arg(value_enum)]
    command: Command,

    /// Input file in the ring/ideal/graph language, or `-` for stdin.
    /// Not used by `paper`.
    input: Option<PathBuf>,

    /// Object name followed by any extra operands (a monomial or ideal name
    /// for `colon`, an exponent for `power`/`symbolic`, a variable for `lower`).
    args: Vec<String>,

    /// Characteristic of the coefficient field: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,

    /// Largest power for `mfmc` and `sequences`.
    #[arg(long, default_value_t = 3)]
    max_k: u32,

    /// Resource caps as `key=value,...`; keys are monomials, lattice, faces,
    /// bases, cliques and induced.  Defaults come from MDEPTH_CAPS.
    #[arg(long)]
    caps: Option<String>,

    /// Use symbolic instead of ordinary powers in `sequences`.
    #[arg(long)]
    symbolic: bool,

    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

fn execute(cli: &Cli) -> Result<ResultDoc, (i32, String)> {
    let failure = |e: Error| (exit_code(&e), e.to_string());
    let caps = Caps::from_env().map_err(failure)?;
    let caps = match &cli.caps {
        Some(spec) => caps.with_overrides(spec).map_err(failure)?,
        None => caps,
    };
    let flags = Flags {
        characteristic: cli.characteristic,
        max_k: cli.max_k,
        caps,
        symbolic: cli.symbolic,
    };
    if cli.command == Command::Paper {
        if cli.input.is_some() {
            return Err((2, "`paper` takes no input file".into()));
        }
        return Ok(paper_suite(&flags));
    }
    let path = cli
        .input
        .as_ref()
        .ok_or((2, format!("`{}` needs an input file", cli.command.name())))?;
    let text = load(path).map_err(|e| (1, e))?;
    let session = Session::parse(&text).map_err(failure)?;
    let mut doc = run(cli.command, &session, &cli.args, &flags).map_err(failure)?;
    doc.inputs.insert("file".into(), path.display().to_string());
    Ok(doc)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(doc) => {
            let json = doc.to_json();
            if let Some(out) = &cli.out {
                if let Err(e) = std::fs::write(out, &json) {
                    eprintln!("mdepth: writing {}: {e}", out.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{json}");
            }
            let suite_failed = cli.command == Command::Paper && doc.outputs["all_passed"] == false;
            ExitCode::from(if suite_failed { 4 } else { 0 })
        }
        Err((code, message)) => {
            eprintln!("mdepth: {message}");
            ExitCode::from(code as u8)
        }
    }
}
