//! `ringbasis`: Gröbner, short reduced, module and border bases from problem files.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed input, 2 for
//! domain errors such as a non-monic basis.

mod commands;
mod problem;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{run, Command, Failure, Flags};
use problem::{FileError, ProblemFile};

#[derive(Parser)]
#[command(name = "ringbasis", version, about = "Groebner bases over the integers, fields and k[t]")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Groebner basis of the generators
    Gb(Common),
    /// Short reduced Groebner basis
    ShortReduce(Common),
    /// Whether the quotient is a free module (the short reduced basis is monic)
    IsFree(Common),
    /// Standard monomials forming a module basis of a free quotient
    ModuleBasis(Common),
    /// Border basis for the [order_ideal] section
    BorderBasis(Common),
    /// Normal forms of the [probe] polynomials
    Nf(Common),
    /// Strong Groebner basis test, with [probe] polynomials as extra witnesses
    StrongCheck(Common),
}

#[derive(Args)]
struct Common {
    /// Problem file, or `-` for standard input
    file: PathBuf,
    /// Degree cap for enumerating an infinite module basis
    #[arg(long)]
    cap: Option<u32>,
    /// JSON output (the default)
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain-text output
    #[arg(long)]
    text: bool,
    /// Re-verify the computed certification before reporting
    #[arg(long)]
    check: bool,
}

fn read_input(path: &PathBuf) -> Result<String, FileError> {
    let mut s = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| FileError::missing("Io", format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn execute(command: Command, args: &Common) -> Result<commands::Success, Failure> {
    let src = read_input(&args.file).map_err(|e| Failure::file(&e))?;
    let file = ProblemFile::parse(&src).map_err(|e| Failure::file(&e))?;
    run(
        command,
        &file,
        Flags {
            cap: args.cap,
            check: args.check,
        },
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (command, args) = match &cli.command {
        Cmd::Gb(a) => (Command::Gb, a),
        Cmd::ShortReduce(a) => (Command::ShortReduce, a),
        Cmd::IsFree(a) => (Command::IsFree, a),
        Cmd::ModuleBasis(a) => (Command::ModuleBasis, a),
        Cmd::BorderBasis(a) => (Command::BorderBasis, a),
        Cmd::Nf(a) => (Command::Nf, a),
        Cmd::StrongCheck(a) => (Command::StrongCheck, a),
    };
    match execute(command, args) {
        Ok(s) if args.text => {
            print!("{}", s.text);
            ExitCode::SUCCESS
        }
        Ok(s) => {
            println!("{}", serde_json::to_string(&s.json).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(f) => {
            if args.text {
                eprintln!("error: {}", f.message);
            } else {
                println!("{}", serde_json::to_string(&f.json).expect("serializable"));
            }
            ExitCode::from(f.code as u8)
        }
    }
}
