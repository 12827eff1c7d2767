use std::io::BufReader;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use clarith::harness::{
    builtin, cmd_check, cmd_extract, cmd_play, cmd_verify, load_strategy, spawn_server, to_jsonl, HarnessError,
    LineEnv, PlayServer, RandomEnv, ScriptedEnv, VerifyConfig,
};
use clarith::proofs::SystemId;
use clarith::strategies::{EnvironmentDriver, Limits, Strategy, TimedMove};
use clarith::syntax::{parse_sentence, Formula};

#[derive(Parser)]
#[command(name = "clarith", version, about = "Check clarithmetic proofs, extract strategies and play them")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a proof file. Exit 0 accepted, 1 rejected, 2 malformed.
    Check {
        proof: PathBuf,
        #[arg(long, default_value = "CLA8")]
        system: SystemId,
    },
    /// Extract a strategy from a proof.
    Extract {
        proof: PathBuf,
        #[arg(long, default_value = "CLA8")]
        system: SystemId,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play a strategy against every environment behavior up to a depth.
    Verify {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        game: GameOpts,
    },
    /// Play one game and print its transcript as JSON lines.
    Play {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        game: GameOpts,
        /// JSON array of environment moves to play in order.
        #[arg(long, conflicts_with = "seed")]
        script: Option<PathBuf>,
        /// Play a random environment with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Serve the play protocol over HTTP.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value_t = 100_000)]
        max_steps: u64,
    },
}

#[derive(Args)]
struct Target {
    /// A builtin (`axiom8`, `halting`) or a strategy JSON file.
    strategy: String,
    /// The game to play; defaults to the strategy's own.
    #[arg(long)]
    formula: Option<String>,
}

#[derive(Args)]
struct GameOpts {
    #[arg(long, default_value_t = 32)]
    bound: u64,
    #[arg(long, default_value_t = 3)]
    env_depth: usize,
    /// Environment constants, `lo..=hi`, `lo..hi` or `lo-hi`.
    #[arg(long, default_value = "0..=8", value_parser = parse_range)]
    range: RangeInclusive<u64>,
    #[arg(long, default_value_t = 100_000)]
    max_steps: u64,
}

impl GameOpts {
    fn limits(&self) -> Limits {
        Limits { max_steps: self.max_steps, ..Limits::default() }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    let r = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        let hi = num(b)?.checked_sub(1).ok_or("empty range")?;
        num(a)?..=hi
    } else if let Some((a, b)) = s.split_once('-') {
        num(a)?..=num(b)?
    } else {
        return Err(format!("bad range {s:?}"));
    };
    if r.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(r)
}

fn resolve(t: &Target) -> Result<(Strategy, Formula), String> {
    let (strategy, own) = match builtin(&t.strategy) {
        Some((s, g)) => (s, g),
        None => {
            let s = load_strategy(Path::new(&t.strategy)).map_err(|e| e.to_string())?;
            let g = s.game().map_err(|e| e.to_string())?;
            (s, g)
        }
    };
    let formula = match &t.formula {
        Some(text) => parse_sentence(text).map_err(|e| e.to_string())?,
        None => own,
    };
    Ok((strategy, formula))
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Check { proof, system } => {
            let out = cmd_check(&proof, system);
            println!("{}", serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?);
            Ok(ExitCode::from(out.exit_code as u8))
        }
        Cmd::Extract { proof, system, out } => match cmd_extract(&proof, system, out.as_deref()) {
            Ok(text) => {
                if out.is_none() {
                    print!("{text}");
                }
                Ok(ExitCode::SUCCESS)
            }
            Err(HarnessError::Extract(e)) => {
                eprintln!("{e}");
                Ok(ExitCode::from(1))
            }
            Err(e) => {
                eprintln!("{e}");
                Ok(ExitCode::from(2))
            }
        },
        Cmd::Verify { target, game } => {
            let (strategy, formula) = resolve(&target)?;
            let cfg = VerifyConfig { bound: game.bound, depth: game.env_depth, range: game.range.clone(), limits: game.limits() };
            let sum = cmd_verify(&strategy, &formula, &cfg).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&sum).map_err(|e| e.to_string())?);
            Ok(if sum.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Play { target, game, script, seed } => {
            let (strategy, formula) = resolve(&target)?;
            let mut env: Box<dyn EnvironmentDriver> = match (script, seed) {
                (Some(p), _) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
                    let moves: Vec<TimedMove> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
                    Box::new(ScriptedEnv::new(moves))
                }
                (None, Some(seed)) => Box::new(RandomEnv::new(seed, game.env_depth, game.range.clone())),
                // positions go to stderr so stdout stays a clean transcript
                (None, None) => Box::new(LineEnv::new(BufReader::new(std::io::stdin()), std::io::stderr())),
            };
            let lines = cmd_play(&strategy, &formula, game.bound, env.as_mut(), &game.limits())
                .map_err(|e| e.to_string())?;
            print!("{}", to_jsonl(&lines));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Serve { port, max_steps } => {
            let server = Arc::new(PlayServer::new(Limits { max_steps, ..Limits::default() }));
            let handle = spawn_server(server, port, 4).map_err(|e| e.to_string())?;
            eprintln!("listening on http://{}", handle.addr);
            handle.join();
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
