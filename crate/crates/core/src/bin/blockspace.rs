use std::process::ExitCode;

use clap::{Parser, Subcommand};

use blockspace::blocks::block_table;
use blockspace::descriptors::DescriptorFile;
use blockspace::ledger::divergences;
use blockspace::oracle::{self, all_ok};
use blockspace::output::{ledger_text, Format, OutputDocument};
use blockspace::Error;

#[derive(Parser)]
#[command(name = "blockspace", version, about = "Block decomposition of subgroup spaces of small compact Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the block table of an ambient group.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "table")]
        format: Format,
        /// append the recorded divergences from published values
        #[arg(long)]
        ledger: bool,
    },
    /// Print the per-rank dimension statistics.
    Summary {
        #[arg(long)]
        group: String,
    },
    /// Run a brute-force computation against its expected values.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
    /// List divergences between computed and published values.
    PaperDiff {
        #[arg(long)]
        group: Option<String>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Classes of subgroups of `Sp(1) × C_2` projecting onto a binary polyhedral group.
    LemmaCounting,
    /// Subgroup classes of a rank-two Weyl group (D8, V4, D6 or a root type).
    WeylSubgroups { weyl: String },
    /// Rational decomposition of a Weyl subgroup acting on the lattice.
    RepDecompose { weyl: String, h_d: String },
}

enum Failure {
    Usage(String),
    Internal(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownGroup(_) | Error::UnknownTypeLabel(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn check_group(group: &str) -> Result<(), Failure> {
    let data = DescriptorFile::bundled();
    if data.ambient(group).is_err() {
        return Err(Failure::Usage(format!(
            "unknown group `{group}` (expected one of {})",
            data.group_names().join(", ")
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Classify { group, format, ledger } => {
            check_group(&group)?;
            let ledger = if ledger { Some(divergences(Some(&group))?) } else { None };
            let doc = OutputDocument::new(block_table(&group)?, ledger);
            Ok(doc.render(format)?)
        }
        Command::Summary { group } => {
            check_group(&group)?;
            Ok(format!("{}\n", block_table(&group)?.summary().line))
        }
        Command::Oracle { oracle } => {
            let (text, ok) = match oracle {
                OracleCommand::LemmaCounting => {
                    let r = oracle::lemma_counting()?;
                    (r.render(), all_ok(&r.checks))
                }
                OracleCommand::WeylSubgroups { weyl } => {
                    let r = oracle::weyl_subgroups(&weyl)?;
                    (r.render(), all_ok(&r.checks))
                }
                OracleCommand::RepDecompose { weyl, h_d } => {
                    let r = oracle::rep_decompose(&weyl, &h_d)?;
                    (r.render(), all_ok(&r.checks))
                }
            };
            if ok {
                Ok(text)
            } else {
                Err(Failure::Mismatch(text))
            }
        }
        Command::PaperDiff { group } => {
            if let Some(g) = &group {
                check_group(g)?;
            }
            Ok(ledger_text(&divergences(group.as_deref())?))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(text)) => {
            print!("{text}");
            eprintln!("error: oracle output differs from expected values");
            ExitCode::from(1)
        }
    }
}
