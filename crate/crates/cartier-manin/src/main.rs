use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cartier_manin::cli::{self, EXIT_MISMATCH, EXIT_PARSE};

/// Cartier–Manin / Hasse–Witt matrices and p-torsion invariants of
/// hyperelliptic curves over finite fields of odd characteristic.
#[derive(Parser)]
#[command(name = "cartier-manin", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficient, Cartier–Manin and Hasse–Witt matrices.
    Matrix(Common),
    /// Matrices plus iterates, mod-p zeta data, p-rank, a-number and
    /// superspeciality.
    Invariants(Common),
    /// Everything, cross-checked against the brute-force point-counting
    /// oracle (exit 5 on disagreement, which would mean a bug).
    Verify(Common),
    /// Demonstrate the classical wrong-order product Y·Y^σ⋯ and compare
    /// its zeta claim with the correct one.
    Pitfall(Common),
}

#[derive(Args)]
struct Common {
    /// Curve spec file (keys p, e, modulus, genus, f).
    spec_file: PathBuf,
    /// Cap on the number of field elements the oracle may enumerate.
    #[arg(long, default_value_t = 1_000_000)]
    bound: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Seed for the randomized self-checks run by `verify`.
    #[arg(long, default_value_t = cli::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()) as u8)
}

fn run(cli: Cli) -> i32 {
    let common = match &cli.command {
        Command::Matrix(c) | Command::Invariants(c) | Command::Verify(c) | Command::Pitfall(c) => c,
    };
    let spec = match std::fs::read_to_string(&common.spec_file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.spec_file.display());
            return EXIT_PARSE;
        }
    };

    let rendered = match &cli.command {
        Command::Matrix(_) => cli::cmd_matrix(&spec).map(|r| (render(&r, common.format), 0)),
        Command::Invariants(_) => {
            cli::cmd_invariants(&spec).map(|r| (render(&r, common.format), 0))
        }
        Command::Verify(_) => cli::cmd_verify(&spec, common.bound, common.seed).map(|r| {
            let code = if r.oracle_agrees() == Some(false) {
                EXIT_MISMATCH
            } else {
                0
            };
            (render(&r, common.format), code)
        }),
        Command::Pitfall(_) => cli::cmd_pitfall(&spec).map(|d| {
            let out = match common.format {
                FormatArg::Text => cli::pitfall_text(&d),
                FormatArg::Machine => cli::pitfall_machine(&d),
            };
            (out, 0)
        }),
    };

    match rendered {
        Ok((out, code)) => {
            print!("{out}");
            if code == EXIT_MISMATCH {
                eprintln!("error: matrix-side invariants disagree with the oracle");
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn render(report: &cli::Report, format: FormatArg) -> String {
    match format {
        FormatArg::Text => cli::report_text(report),
        FormatArg::Machine => cli::report_machine(report),
    }
}
