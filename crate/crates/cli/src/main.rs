use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bmgl_cli::game::{self, Nonempty};
use bmgl_cli::service::{self, Sessions};
use bmgl_cli::{input, report, CliError, Output};
use bmgl_core::session::SessionConfig;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bmgl", version, about = "Banach-Mazur game lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Separativity, Souslin number, pi-Noetherian type and the nabla check of a poset file.
    AnalyzePoset {
        file: PathBuf,
        /// Also compute pi-Noetherian type over every dense subset.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check every labeled poset on n elements.
    Survey {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Invariants of a finite space and of its regular-open poset.
    AnalyzeSpace {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cantor normal form, cardinal normal form and segments of an ordinal.
    Ordinal {
        expr: String,
        #[arg(long, default_value = "w_1")]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Hechler conditions and eventual domination.
    Hechler {
        #[command(subcommand)]
        command: HechlerCommand,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Banach-Mazur games on Baire space.
    Game {
        #[command(subcommand)]
        command: GameCommand,
    },
    /// HTTP session service.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: String,
        /// Keep append-only session logs here and resume them on start.
        #[arg(long)]
        persist: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum HechlerCommand {
    /// Is STRONGER an extension of WEAKER?
    Leq { stronger: String, weaker: String },
    /// A common extension, if any.
    Compatible { a: String, b: String },
    /// Eventual domination of two functions.
    LeqStar { f: String, g: String },
}

#[derive(Args)]
struct Play {
    #[arg(long, env = "BMGL_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    horizon: Option<usize>,
    /// EMPTY's moves, `;`-separated, e.g. `[3]; 3 1; 3 1 4`.
    #[arg(long, conflicts_with = "moves_file")]
    moves: Option<String>,
    #[arg(long)]
    moves_file: Option<PathBuf>,
    #[arg(long, default_value = "baire")]
    system: String,
}

impl Play {
    fn moves(&self) -> Result<Option<Vec<bmgl_core::game::BaireClopen>>, CliError> {
        let src = match (&self.moves, &self.moves_file) {
            (Some(m), _) => m.clone(),
            (None, Some(f)) => read(f)?,
            (None, None) => return Ok(None),
        };
        game::parse_moves(&src).map(Some)
    }
}

#[derive(Subcommand)]
enum GameCommand {
    /// One play as JSON lines: a line per round, then the outcome.
    Run {
        #[command(flatten)]
        play: Play,
        #[arg(long, value_enum, default_value = "galvin")]
        nonempty: Nonempty,
    },
    /// Decode audits: N seeded games, or every round of one scripted play.
    Audit {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[command(flatten)]
        play: Play,
        #[arg(long)]
        json: bool,
    },
    /// Play EMPTY against the 2-tactic in the terminal.
    Play {
        #[arg(long, env = "BMGL_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        horizon: usize,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Output, json: bool) -> Result<(), CliError> {
    print!("{}", out.render(json));
    match out.violation {
        Some(v) => Err(CliError::Violation(v)),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::AnalyzePoset {
            file,
            exhaustive,
            json,
        } => emit(report::analyze_poset(&read(&file)?, exhaustive)?, json),
        Command::Survey { n, json } => emit(report::survey(n)?, json),
        Command::AnalyzeSpace { file, json } => emit(report::analyze_space(&read(&file)?)?, json),
        Command::Ordinal { expr, lambda, json } => emit(report::ordinal(&expr, &lambda)?, json),
        Command::Hechler { command, json } => emit(
            match command {
                HechlerCommand::Leq { stronger, weaker } => {
                    report::hechler_leq(&stronger, &weaker)?
                }
                HechlerCommand::Compatible { a, b } => report::hechler_compatible(&a, &b)?,
                HechlerCommand::LeqStar { f, g } => report::ev_leq_star(&f, &g)?,
            },
            json,
        ),
        Command::Game { command } => match command {
            GameCommand::Run { play, nonempty } => {
                game::check_system(&play.system)?;
                let t = game::run(play.seed, play.horizon, play.moves()?, nonempty)?;
                print!("{}", t.to_json_lines());
                Ok(())
            }
            GameCommand::Audit { n, play, json } => {
                game::check_system(&play.system)?;
                let out = match play.moves()? {
                    Some(moves) => game::audit_one(play.seed, play.horizon, Some(moves))?,
                    None => game::audit_batch(n, play.horizon.unwrap_or(16), play.seed)?,
                };
                emit(out, json)
            }
            GameCommand::Play { seed, horizon } => {
                let config = SessionConfig {
                    horizon,
                    seed,
                    ..SessionConfig::default()
                };
                let stdin = io::stdin();
                let mut stdout = io::stdout();
                game::play(config, stdin.lock(), &mut stdout)?;
                stdout.flush().map_err(input)
            }
        },
        Command::Serve { bind, persist } => {
            let sessions = match persist {
                Some(dir) => Sessions::persistent(dir).map_err(input)?,
                None => Sessions::in_memory(),
            };
            let rt = tokio::runtime::Runtime::new().map_err(input)?;
            rt.block_on(service::serve(&bind, sessions)).map_err(input)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
