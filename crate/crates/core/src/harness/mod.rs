//! Environment drivers, exhaustive verification, the command implementations
//! behind the `clarith` binary and the play server.

mod commands;
mod drivers;
mod server;
mod verify;

pub use commands::{
    builtin, cmd_check, cmd_extract, cmd_play, cmd_verify, halting_game, load_strategy, to_jsonl, transcript,
    CheckOutcome, TranscriptLine,
};
pub use drivers::{env_moves, LineEnv, RandomEnv, RemoteEnv, ScriptedEnv};
pub use server::{spawn_server, AdjudicateResponse, PlayServer, Response, ServerHandle, SessionSummary, SessionView};
pub use verify::{verify_exhaustive, VerifyConfig, VerifySummary};

use crate::proofs::{ExtractError, LoadError};
use crate::strategies::StrategyError;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("io: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Extract(#[from] ExtractError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error("strategy plays {strategy}, not {formula}")]
    ShapeMismatch { strategy: String, formula: String },
}
