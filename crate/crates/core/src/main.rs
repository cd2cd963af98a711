use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kbsm::coeff::Substitution;
use kbsm::io::{run, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "kbsm", version, about = "Kauffman bracket skein computations from mixed braid words")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bracket of the closure by the state sum, in the basis t^n.
    Eval(Opts),
    /// Class of the word through the algebra, in the basis t^n.
    Reduce(Opts),
    /// Markov trace of the word.
    Trace(Opts),
    /// The invariant V of the closure.
    Invariant(Opts),
    /// Braid band move and band move equations up to N.
    System(Opts),
    /// Truncated presentation of the skein module of S^1 x S^2.
    Presentation(Opts),
    /// Check the anchored identities.
    Verify(Opts),
}

#[derive(Args)]
struct Opts {
    /// Number of moving strands.
    #[arg(long = "n")]
    n: Option<usize>,
    /// Word, e.g. "t s1 t1' s2^-1".
    #[arg(long)]
    word: Option<String>,
    /// Truncation.
    #[arg(long = "N")]
    big_n: Option<u32>,
    /// u=A2 or u=-A-2.
    #[arg(long, value_parser = |s: &str| s.parse::<Substitution>().map_err(|e| e.to_string()))]
    sub: Option<Substitution>,
    /// State limit is 2^cap.
    #[arg(long, default_value_t = kbsm::annular::DEFAULT_CAP)]
    cap: usize,
    /// json, csv or text.
    #[arg(long, default_value = "json", value_parser = |s: &str| s.parse::<Format>().map_err(|e| e.to_string()))]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, o) = match cli.command {
        Cmd::Eval(o) => (Command::Eval, o),
        Cmd::Reduce(o) => (Command::Reduce, o),
        Cmd::Trace(o) => (Command::Trace, o),
        Cmd::Invariant(o) => (Command::Invariant, o),
        Cmd::System(o) => (Command::System, o),
        Cmd::Presentation(o) => (Command::Presentation, o),
        Cmd::Verify(o) => (Command::Verify, o),
    };
    let cfg = RunConfig {
        command,
        strands: o.n,
        word: o.word,
        truncation: o.big_n,
        sub: o.sub,
        cap: o.cap,
        format: o.format,
    };
    if let Err(e) = cfg.validate() {
        eprintln!("usage error: {e}");
        return ExitCode::from(2);
    }
    match run(&cfg) {
        Ok(out) => {
            let mut text = out.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &o.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
