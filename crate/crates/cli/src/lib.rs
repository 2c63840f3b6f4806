//! Command-line front end: argument parsing, report building and exit codes.
//!
//! [`run_command`] is the whole program minus process plumbing, so tests can
//! drive it directly.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use treegame::format::{parse_game, print_game};
use treegame::{corpus, Caps, Error, ExtensiveGame};

pub use report::{to_json, to_text};

#[derive(Parser, Debug)]
#[command(name = "treegame", version, about = "Solvers for finite extensive games with perfect information")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append wall-clock timing to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Game document (.egt).
    #[arg(required_unless_present = "ultimatum", conflicts_with = "ultimatum")]
    game: Option<PathBuf>,
    /// Use the built-in ultimatum game over N units instead of a file.
    #[arg(long, value_name = "N")]
    ultimatum: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a game document.
    Validate(Input),
    /// Report the game classes the game belongs to.
    Classify(Input),
    /// Print the strategic form.
    Strategic {
        #[command(flatten)]
        input: Input,
        /// Use reduced strategies.
        #[arg(long)]
        reduced: bool,
    },
    /// List the pure Nash equilibria of the strategic form.
    Nash {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        reduced: bool,
    },
    /// Count the subgame perfect equilibria.
    Spe {
        #[command(flatten)]
        input: Input,
        /// Also list them (up to the expansion cap).
        #[arg(long)]
        enumerate: bool,
    },
    /// Run backward induction once.
    Bi {
        #[command(flatten)]
        input: Input,
        /// `first` or `seed:N`.
        #[arg(long, default_value = "first")]
        tie_break: String,
        /// Force a choice, as NODE=ACTION with NODE a name or `#id`.
        #[arg(long = "choose", value_name = "NODE=ACTION")]
        choose: Vec<String>,
    },
    /// Backward induction that eliminates strategies as it goes.
    Ebi {
        #[command(flatten)]
        input: Input,
        /// Verify that every removed strategy is weakly dominated.
        #[arg(long)]
        certify: bool,
    },
    /// Iterated elimination of weakly dominated strategies.
    Iewds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        reduced: bool,
        /// `max` or `greedy`.
        #[arg(long, default_value = "max")]
        policy: String,
        /// Comma-separated strategy labels to remove in order, each
        /// optionally prefixed by `PLAYER:`.
        #[arg(long, conflicts_with = "policy")]
        script: Option<String>,
    },
    /// Solve a strictly competitive game by iterated elimination.
    ScSolve(Input),
    /// Decide a win-or-lose or chess-like game.
    Zermelo(Input),
    /// Follow an improvement path.
    Dynamics {
        #[command(flatten)]
        input: Input,
        /// Start profile as comma-separated strategy labels; defaults to
        /// every player's first strategy.
        #[arg(long)]
        start: Option<String>,
        /// `first`, `best-gain`, `seed:N` or `guided`.
        #[arg(long, default_value = "guided")]
        scheduler: String,
        /// Explicit deviations `PLAYER:LABEL,...`; overrides the scheduler.
        #[arg(long)]
        script: Option<String>,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
        /// Also decide the finite improvement property.
        #[arg(long)]
        fip: bool,
    },
    /// Check that common knowledge of rationality implies backward induction.
    Ckr {
        #[command(flatten)]
        input: Input,
        /// Knowledge-system document (.eks).
        #[arg(long)]
        ks: PathBuf,
    },
    /// Export the tree as Graphviz DOT.
    Dot {
        #[command(flatten)]
        input: Input,
        /// Annotate with a backward-induction run.
        #[arg(long)]
        bi: bool,
        /// Emphasize this joint strategy (comma-separated labels).
        #[arg(long, conflicts_with = "bi")]
        strategy: Option<String>,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn failure(code: i32, message: String) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

pub(crate) struct Loaded {
    pub game: ExtensiveGame,
    pub source: String,
}

// Errors come back as finished messages so file locations read
// `path:line:col`.
fn load(input: &Input) -> Result<Loaded, String> {
    match (&input.game, input.ultimatum) {
        (_, Some(n)) => {
            let game = corpus::ultimatum(n);
            Ok(Loaded {
                source: print_game(&game),
                game,
            })
        }
        (Some(path), None) => {
            let source = read(path).map_err(|e| e.to_string())?;
            let game = parse_game(&source).map_err(|e| format!("{}:{e}", path.display()))?;
            Ok(Loaded { game, source })
        }
        (None, None) => unreachable!("clap requires one input"),
    }
}

pub(crate) fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

// The invocation without the program name, with paths cut to file names so
// reports do not depend on the working directory.
fn echo(args: &[String], paths: &[&Path]) -> String {
    args.iter()
        .skip(1)
        .map(|a| {
            match paths.iter().find(|p| p.as_os_str() == a.as_str()) {
                Some(p) => p.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_else(|| a.clone()),
                None => a.clone(),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn input_of(command: &Command) -> &Input {
    match command {
        Command::Validate(i) | Command::Classify(i) | Command::ScSolve(i) | Command::Zermelo(i) => i,
        Command::Strategic { input, .. }
        | Command::Nash { input, .. }
        | Command::Spe { input, .. }
        | Command::Bi { input, .. }
        | Command::Ebi { input, .. }
        | Command::Iewds { input, .. }
        | Command::Dynamics { input, .. }
        | Command::Ckr { input, .. }
        | Command::Dot { input, .. } => input,
    }
}

/// Runs one command line (program name first). Exit code 0 on success, 1
/// when the input is rejected or an operation fails, 2 on usage errors.
pub fn run_command<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output::failure(2, text)
            };
        }
    };
    let strings: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let started = Instant::now();
    let caps = Caps::from_env();
    let input = input_of(&cli.command);
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return Output::failure(1, format!("error: {e}\n")),
    };

    if let Command::Dot {
        bi,
        strategy,
        output,
        ..
    } = &cli.command
    {
        return match commands::dot(&loaded.game, *bi, strategy.as_deref()) {
            Ok(text) => match output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Output {
                        code: 0,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => Output::failure(1, format!("error: cannot write {}: {e}\n", path.display())),
                },
                None => Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
            },
            Err(f) => f.into_output(),
        };
    }

    let mut paths: Vec<&Path> = input.game.iter().map(|p| p.as_path()).collect();
    if let Command::Ckr { ks, .. } = &cli.command {
        paths.push(ks);
    }
    let g = &loaded.game;
    let result = match &cli.command {
        Command::Validate(_) => Ok(commands::validate(g)),
        Command::Classify(_) => Ok(commands::classify(g, &caps)),
        Command::Strategic { reduced, .. } => commands::strategic(g, *reduced, &caps),
        Command::Nash { reduced, .. } => commands::nash(g, *reduced, &caps),
        Command::Spe { enumerate, .. } => commands::spe(g, *enumerate, &caps),
        Command::Bi { tie_break, choose, .. } => commands::bi(g, tie_break, choose),
        Command::Ebi { certify, .. } => commands::ebi(g, *certify, &caps),
        Command::Iewds {
            reduced, policy, script, ..
        } => commands::iewds(g, *reduced, policy, script.as_deref(), &caps),
        Command::ScSolve(_) => commands::sc_solve(g, &caps),
        Command::Zermelo(_) => commands::zermelo(g),
        Command::Dynamics {
            start,
            scheduler,
            script,
            max_steps,
            fip,
            ..
        } => commands::dynamics(
            g,
            start.as_deref(),
            scheduler,
            script.as_deref(),
            *max_steps,
            *fip,
            &caps,
        ),
        Command::Ckr { ks, .. } => read(ks)
            .map_err(commands::Failure::from)
            .and_then(|text| commands::ckr(g, &text, &caps)),
        Command::Dot { .. } => unreachable!("handled above"),
    };
    let result = match result {
        Ok(r) => r,
        Err(f) => return f.into_output(),
    };

    let mut report = Map::new();
    report.insert("command".into(), json!(echo(&strings, &paths)));
    report.insert(
        "input".into(),
        json!({"game": g.name(), "sha256": digest(&loaded.source)}),
    );
    report.insert("result".into(), result);
    if cli.timing {
        report.insert(
            "timing".into(),
            json!({"elapsed_ms": started.elapsed().as_secs_f64() * 1000.0}),
        );
    }
    let report = Value::Object(report);
    let stdout = match cli.format {
        Format::Text => to_text(&report),
        Format::Json => to_json(&report),
    };
    Output {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}
