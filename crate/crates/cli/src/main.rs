use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coverideal::graph::DEFAULT_VERTEX_CAP;
use coverideal::theorem::Budget;
use coverideal_cli::commands::{self, Family, Mode, Settings};
use coverideal_cli::document::{parse_graph, parse_report, to_json, GraphDocument};
use coverideal_cli::{exit, CliError, CliResult};

/// Cover ideals of graphs: powers, irreducible decompositions and associated primes.
#[derive(Debug, Parser)]
#[command(name = "coverideal", version)]
struct Cli {
    /// Reject graphs with more vertices than this.
    #[arg(long, global = true, env = "COVERIDEAL_MAX_VERTICES", default_value_t = DEFAULT_VERTEX_CAP)]
    max_vertices: usize,

    /// Refuse to decompose powers with more minimal generators than this.
    #[arg(long, global = true, env = "COVERIDEAL_MAX_GENERATORS", default_value_t = Budget::default().max_generators)]
    max_generators: usize,

    /// Brute-force limits for verification as `t:n` pairs.
    #[arg(long, global = true, env = "COVERIDEAL_BUDGET", default_value = "1:6,2:6,3:4")]
    budget: String,

    /// Decomposition engine: auto, splitting or incremental.
    #[arg(long, global = true, env = "COVERIDEAL_ENGINE", default_value = "auto")]
    engine: String,

    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ht,
    OddCycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Brute,
    ClosedForm,
    Verify,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Brute => Mode::Brute,
            ModeArg::ClosedForm => Mode::ClosedForm,
            ModeArg::Verify => Mode::Verify,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a graph document for H_t or an odd cycle.
    Generate { family: FamilyArg, parameter: usize },
    /// Minimal generators of the cover ideal.
    CoverIdeal {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Minimal generators of the n-th power of the cover ideal.
    Power {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Irreducible components of the n-th power.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "brute")]
        mode: ModeArg,
    },
    /// Associated primes of the n-th power.
    Ass {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "brute")]
        mode: ModeArg,
    },
    /// Associated primes of the powers 1..=horizon and where they stabilize.
    Scan {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        horizon: usize,
    },
    /// Check the closed-form decomposition of the n-th power for H_t.
    VerifyTheorem {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Plain-text ideal definition, from a graph (with --n) or an ideal report.
    Export {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// A `cover-ideal` or `power` report.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

fn load_graph(path: &Path) -> CliResult<GraphDocument> {
    parse_graph(&read_input(path)?)
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Returns the document text and, for partial results, the error to report.
fn run(cli: &Cli) -> CliResult<(String, Option<CliError>)> {
    let settings = Settings {
        max_vertices: cli.max_vertices,
        budget: Budget {
            max_n_by_t: commands::parse_budget(&cli.budget)?,
            max_generators: cli.max_generators,
            engine: commands::engine_from_name(&cli.engine)?,
        },
    };
    let done = |doc: String| Ok((doc, None));
    match &cli.command {
        Command::Generate { family, parameter } => {
            let family = match family {
                FamilyArg::Ht => Family::Ht,
                FamilyArg::OddCycle => Family::OddCycle,
            };
            done(to_json(&commands::generate(family, *parameter, &settings)?))
        }
        Command::CoverIdeal { graph } => done(to_json(&commands::cover_ideal_cmd(&load_graph(graph)?, &settings)?)),
        Command::Power { graph, n } => done(to_json(&commands::power(&load_graph(graph)?, *n, &settings)?)),
        Command::Decompose { graph, n, mode } => {
            done(to_json(&commands::decompose_cmd(&load_graph(graph)?, *n, (*mode).into(), &settings)?))
        }
        Command::Ass { graph, n, mode } => done(to_json(&commands::ass(&load_graph(graph)?, *n, (*mode).into(), &settings)?)),
        Command::Scan { graph, horizon } => {
            let (doc, partial) = commands::scan(&load_graph(graph)?, *horizon, &settings)?;
            Ok((to_json(&doc), partial))
        }
        Command::VerifyTheorem { t, n } => done(to_json(&commands::verify_theorem(*t, *n, &settings)?)),
        Command::Export { graph, n, input } => match (graph, input) {
            (Some(graph), _) => done(commands::export_graph(&load_graph(graph)?, *n, &settings)?),
            (None, Some(input)) => done(commands::export_report(&parse_report(&read_input(input)?)?)?),
            (None, None) => Err(CliError::Parse("export needs --graph or --input".into())),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::PARSE as u8 } else { exit::SUCCESS as u8 });
        }
    };
    let outcome = run(&cli).and_then(|(text, partial)| {
        write_output(cli.out.as_deref(), &text)?;
        Ok(partial)
    });
    match outcome {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(partial)) => {
            eprintln!("coverideal: partial result: {partial}");
            ExitCode::from(partial.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("coverideal: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
