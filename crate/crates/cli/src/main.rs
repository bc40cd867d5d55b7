//! `pbck`: command-line front end for the pseudo BCK-algebra workbench.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "pbck", version, about = "Check, classify and enumerate finite pseudo BCK-algebras")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Report every counterexample of a failing clause, not just the first.
    #[arg(long, global = true)]
    all_witnesses: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an axiom suite.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SystemArg::Equational)]
        system: SystemArg,
    },
    /// Commutativity verdict of all nine methods.
    Classify { file: PathBuf },
    /// List deductive systems, or the one generated by a set of elements.
    Ds(DsArgs),
    /// Quotient by a normal deductive system.
    Quotient {
        file: PathBuf,
        /// Comma-separated element names.
        #[arg(long = "ds", value_name = "LIST")]
        ds: String,
    },
    /// Enumerate states, or classify one map.
    States {
        file: PathBuf,
        /// List every map of the chosen kind (the default without --map).
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value_t = KindArg::Type1)]
        kind: KindArg,
        /// Map file to classify.
        #[arg(long, value_name = "MFILE")]
        map: Option<PathBuf>,
        #[arg(long, default_value_t = pbck::DEFAULT_STATE_BUDGET)]
        budget: u64,
    },
    /// Check a measure and report its kernel.
    Measure { file: PathBuf, measure: PathBuf },
    /// Check the pseudo-hoop axioms of a file with a `prod` section.
    Hoop {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LevelArg::Hoop)]
        level: LevelArg,
    },
    /// Direct product of two pseudo BCK-algebras.
    Product {
        first: PathBuf,
        second: PathBuf,
        /// Output file; standard output when absent.
        #[arg(short = 'o', long = "output", value_name = "OUT")]
        output: Option<PathBuf>,
    },
    /// Enumerate all pseudo BCK-algebras of a given size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = pbck::search::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

#[derive(Args, Debug)]
struct DsArgs {
    file: PathBuf,
    #[arg(long, group = "select")]
    normal: bool,
    #[arg(long, group = "select")]
    commutative: bool,
    /// Comma-separated element names.
    #[arg(long, value_name = "LIST", group = "select")]
    generated: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SystemArg {
    Relational,
    Equational,
    PseudoBci,
    PseudoBe,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Type1,
    Type2,
    Sm,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LevelArg {
    Hoop,
    Wajsberg,
    Basic,
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    use pbck::{AxiomSystem, HoopLevel, SearchKind};
    let mode = if cli.all_witnesses { pbck::WitnessMode::All } else { pbck::WitnessMode::First };
    match &cli.command {
        Command::Check { file, system } => {
            let systems = match system {
                SystemArg::Relational => vec![AxiomSystem::Relational],
                SystemArg::Equational => vec![AxiomSystem::Equational],
                SystemArg::PseudoBci => vec![AxiomSystem::PseudoBci],
                SystemArg::PseudoBe => vec![AxiomSystem::PseudoBe],
                SystemArg::All => AxiomSystem::ALL.to_vec(),
            };
            commands::check(file, &systems, mode)
        }
        Command::Classify { file } => commands::classify(file, mode),
        Command::Ds(args) => {
            let filter = if args.normal {
                commands::DsMode::Filter(pbck::DsFilter::Normal)
            } else if args.commutative {
                commands::DsMode::Filter(pbck::DsFilter::Commutative)
            } else if let Some(list) = &args.generated {
                commands::DsMode::Generated(list.clone())
            } else {
                commands::DsMode::Filter(pbck::DsFilter::All)
            };
            commands::ds(&args.file, filter)
        }
        Command::Quotient { file, ds } => commands::quotient(file, ds),
        Command::States { file, enumerate, kind, map, budget } => {
            let kind = match kind {
                KindArg::Type1 => SearchKind::Type1,
                KindArg::Type2 => SearchKind::Type2,
                KindArg::Sm => SearchKind::Morphism,
            };
            match map {
                Some(m) if !enumerate => commands::classify_state(file, m, kind),
                Some(_) => Err(CliError::Input("--enumerate and --map are mutually exclusive".into())),
                None => commands::enumerate_states(file, kind, *budget),
            }
        }
        Command::Measure { file, measure } => commands::measure(file, measure),
        Command::Hoop { file, level } => {
            let level = match level {
                LevelArg::Hoop => HoopLevel::Hoop,
                LevelArg::Wajsberg => HoopLevel::Wajsberg,
                LevelArg::Basic => HoopLevel::Basic,
            };
            commands::hoop(file, level)
        }
        Command::Product { first, second, output } => commands::product(first, second, output.as_deref()),
        Command::Enumerate { size, commutative, up_to_iso, count_only, budget } => {
            let cfg = pbck::SearchConfig::new(*size).commutative_only(*commutative).up_to_iso(*up_to_iso).budget(*budget);
            commands::enumerate(&cfg, *count_only, cli.json)
        }
    }
}

fn emit_json(v: &serde_json::Value) {
    let mut out = std::io::stdout().lock();
    if serde_json::to_writer_pretty(&mut out, v).is_ok() {
        let _ = out.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            if cli.json {
                emit_json(&outcome.json);
            } else {
                // A closed pipe (e.g. `| head`) is not an error worth reporting.
                let _ = std::io::stdout().lock().write_all(outcome.text.as_bytes());
            }
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                emit_json(&e.to_json());
            }
            eprintln!("pbck: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
