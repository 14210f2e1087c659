//! `numsg`: factorization invariants of numerical monoids from the shell.

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(name = "numsg", version, about = "Factorization invariants of numerical monoids")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

/// Comma-separated non-negative integers, e.g. `3,8,13`.
#[derive(Clone, Debug)]
struct List(Vec<u64>);

fn list(raw: &str) -> Result<List, String> {
    if raw.trim().is_empty() {
        return Ok(List(Vec::new()));
    }
    raw.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{}` is not a non-negative integer", part.trim()))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators, Frobenius number, Apéry set, Betti elements,
    /// catenary degree, and windowed catenary set.
    Analyze {
        #[arg(value_parser = list)]
        generators: List,
        #[arg(long)]
        window: Option<u64>,
    },
    /// All factorizations of N, one per line.
    Factorize {
        #[arg(value_parser = list)]
        generators: List,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Catenary degree of the element N.
    Catenary {
        #[arg(value_parser = list)]
        generators: List,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(long, hide = true)]
        use_oracle: bool,
    },
    /// Betti elements.
    Betti {
        #[arg(value_parser = list)]
        generators: List,
        #[arg(long, hide = true)]
        use_oracle: bool,
    },
    /// Catenary degrees attained up to a window end.
    Cset {
        #[arg(value_parser = list)]
        generators: List,
        #[arg(long)]
        window: Option<u64>,
    },
    /// The gluing D1·G1 + D2·G2.
    Glue {
        #[arg(value_parser = list)]
        g1: List,
        d1: u64,
        #[arg(value_parser = list)]
        g2: List,
        d2: u64,
    },
    /// T = ⟨C·n_1, …, C·n_k, B⟩.
    Adjoin {
        #[arg(value_parser = list)]
        generators: List,
        c: u64,
        b: u64,
    },
    /// Build a monoid with the given set of catenary degrees.
    Realize {
        #[arg(value_parser = list)]
        target: List,
        /// One b per adjoin step, comma-separated.
        #[arg(long, value_parser = list)]
        b_list: Option<List>,
        /// Recheck the trace directly, sweeping windows up to this size.
        #[arg(long, value_name = "BUDGET")]
        verify: Option<u64>,
    },
    /// CSV rows `n,catenary` for every element in the window.
    PlotData {
        #[arg(value_parser = list)]
        generators: List,
        #[arg(long)]
        window: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Analyze { generators, window } => commands::analyze(&generators.0, window),
        Command::Factorize { generators, n } => commands::factorize(&generators.0, n),
        Command::Catenary {
            generators,
            n,
            use_oracle,
        } => commands::catenary(&generators.0, n, use_oracle),
        Command::Betti {
            generators,
            use_oracle,
        } => commands::betti(&generators.0, use_oracle),
        Command::Cset { generators, window } => commands::cset(&generators.0, window),
        Command::Glue { g1, d1, g2, d2 } => commands::glue(&g1.0, d1, &g2.0, d2),
        Command::Adjoin { generators, c, b } => commands::adjoin(&generators.0, c, b),
        Command::Realize {
            target,
            b_list,
            verify,
        } => commands::realize(&target.0, b_list.map(|l| l.0), verify),
        Command::PlotData { generators, window } => commands::plot_data(&generators.0, window),
    };
    let written = match &result {
        Ok(report) => output::emit(report, format, &mut out),
        Err(e) => {
            eprintln!("error: {}: {}", e.name, e.message);
            output::emit_error(e.name, &e.message, format, &mut out)
        }
    };
    if written.and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(_) => ExitCode::from(1),
    }
}
