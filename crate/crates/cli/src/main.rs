use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use truthrows::{Connective, SequenceId};

mod commands;
mod report;

use report::Format;

/// Truth-table row counts of bracketed implication formulae.
#[derive(Debug, Parser)]
#[command(name = "truthrows", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every bracketing of p1 ... pn.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short, long = "connective")]
        c: Connective,
        /// Use arrow glyphs instead of ASCII.
        #[arg(long)]
        unicode: bool,
    },
    /// Count rows of every bracketing by brute force.
    Census {
        #[arg(short)]
        n: usize,
        #[arg(short, long = "connective")]
        c: Connective,
        /// One census per bracketing.
        #[arg(long, conflicts_with = "table")]
        per_formula: bool,
        /// Print the merged truth table with each row's case.
        #[arg(long)]
        table: bool,
        /// Largest n the census may run for.
        #[arg(long = "max-rows-override", env = "IMPL_CENSUS_CAP")]
        cap: Option<usize>,
    },
    /// Sequence values from the convolution recurrences.
    Seq {
        id: SequenceId,
        n_max: usize,
        /// Check the linear and quadratic identities between sequences.
        #[arg(long)]
        check_identities: bool,
        /// Cross-check against the census for n up to this value.
        #[arg(long)]
        oracle: Option<usize>,
        #[arg(long = "max-rows-override", env = "IMPL_CENSUS_CAP")]
        cap: Option<usize>,
    },
    /// Coefficients of x^1 ... x^(N-1) of the generating function.
    Gf {
        id: SequenceId,
        order: usize,
        /// Compare with the recurrence values.
        #[arg(long)]
        diff_recurrence: bool,
    },
    /// Ratios at finite n against their exact limits.
    Asymp {
        /// `id` for id/g, or `a/b` for a ratio of two sequences.
        target: String,
        #[arg(long, value_delimiter = ',', default_values_t = [10, 50, 100, 500, 1000])]
        probes: Vec<usize>,
        /// Decimal places; by default exact when short, else 30.
        #[arg(long)]
        digits: Option<usize>,
        /// Require errors to decrease along the probes and stay below 5/n.
        #[arg(long)]
        check: bool,
    },
    /// Check that values are odd exactly at powers of two.
    Parity { id: SequenceId, n_max: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Enumerate { n, c, unicode } => commands::enumerate(n, c, unicode),
        Command::Census {
            n,
            c,
            per_formula,
            table,
            cap,
        } => commands::census(n, c, per_formula, table, cap, cli.format),
        Command::Seq {
            id,
            n_max,
            check_identities,
            oracle,
            cap,
        } => commands::seq(id, n_max, check_identities, oracle, cap),
        Command::Gf {
            id,
            order,
            diff_recurrence,
        } => commands::gf(id, order, diff_recurrence),
        Command::Asymp {
            target,
            probes,
            digits,
            check,
        } => commands::asymp(&target, &probes, digits, check),
        Command::Parity { id, n_max } => commands::parity(id, n_max),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = report.emit(
        cli.format,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    ) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
