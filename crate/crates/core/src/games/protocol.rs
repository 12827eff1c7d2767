//! JSON messages of the play protocol.

use serde::{Deserialize, Serialize};

use super::session::{Adjudication, GameSession, Status};
use crate::syntax::{Formula, Labmove, MoveTemplate, Player, Run};

/// Request to open a session. `strategy` names a builtin or carries a
/// strategy document; without it the machine side is driven by the client too.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionCreate {
    pub formula: String,
    #[serde(default = "default_bound")]
    pub bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<serde_json::Value>,
}

fn default_bound() -> u64 {
    32
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct State {
    pub current: String,
    pub current_ast: Formula,
    pub run: Run,
    pub legal_moves: Vec<MoveTemplate>,
    pub status: Status,
}

impl State {
    /// Legal moves listed for both players.
    pub fn of(s: &GameSession) -> State {
        let mut legal_moves = s.legal_moves(Player::Environment);
        legal_moves.extend(s.legal_moves(Player::Machine));
        State {
            current: s.current.to_string(),
            current_ast: s.current.clone(),
            run: s.run.clone(),
            legal_moves,
            status: s.status.clone(),
        }
    }
}

pub type Move = Labmove;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolError {
    pub error: String,
    pub kind: String,
}

pub type AdjudicationMessage = Adjudication;
