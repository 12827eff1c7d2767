//! Game sessions: a sentence, the run played on it so far and its yield.

use serde::{Deserialize, Serialize};

use super::truth::{Oracle, Truth3, UnknownReason};
use crate::syntax::{
    apply_labmove, check_labmove, surface_choices, Formula, Labmove, MoveError, MoveTemplate, Player, Run,
    TemplatePayload,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Machine,
    Environment,
    Unknown,
}

impl From<Player> for Winner {
    fn from(p: Player) -> Self {
        match p {
            Player::Machine => Winner::Machine,
            Player::Environment => Winner::Environment,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjudication {
    pub winner: Winner,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "lowercase")]
pub enum Status {
    Open,
    Adjudicated(Adjudication),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("not a sentence; free variables: {}", .0.join(", "))]
    NotASentence(Vec<String>),
    #[error("the session is already adjudicated")]
    Closed,
    #[error("illegal move {mv}: {source}")]
    Illegal {
        mv: Labmove,
        #[source]
        source: MoveError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameSession {
    pub root: Formula,
    pub run: Run,
    pub current: Formula,
    pub bound: u64,
    pub status: Status,
}

impl GameSession {
    pub fn new(root: Formula, bound: u64) -> Result<Self, GameError> {
        let free = root.free_vars_ordered();
        if !free.is_empty() {
            return Err(GameError::NotASentence(free));
        }
        Ok(GameSession { current: root.clone(), root, run: Vec::new(), bound, status: Status::Open })
    }

    pub fn is_open(&self) -> bool {
        self.status == Status::Open
    }

    /// Every legal move of `player` now, constants left schematic. Empty once adjudicated.
    pub fn legal_moves(&self, player: Player) -> Vec<MoveTemplate> {
        if !self.is_open() {
            return Vec::new();
        }
        legal_moves_of(&self.current, player)
    }

    /// Extends the run by `mv`. An illegal move leaves the session untouched.
    pub fn apply_move(&mut self, mv: Labmove) -> Result<(), GameError> {
        if !self.is_open() {
            return Err(GameError::Closed);
        }
        let next = apply_labmove(&self.current, &mv).map_err(|source| GameError::Illegal { mv: mv.clone(), source })?;
        self.run.push(mv);
        self.current = next;
        Ok(())
    }

    pub fn check_move(&self, mv: &Labmove) -> Result<(), GameError> {
        if !self.is_open() {
            return Err(GameError::Closed);
        }
        check_labmove(&self.current, mv).map(|_| ()).map_err(|source| GameError::Illegal { mv: mv.clone(), source })
    }

    /// Closes the session with `offender` losing for an illegal move.
    pub fn forfeit(&mut self, offender: Player, reason: impl Into<String>) -> Adjudication {
        let adj = Adjudication {
            winner: offender.opponent().into(),
            reason: format!("{} made an illegal move: {}", offender, reason.into()),
        };
        self.status = Status::Adjudicated(adj.clone());
        adj
    }

    /// Declares the play finished and decides it by the elementarization of
    /// the current position. Idempotent.
    pub fn adjudicate(&mut self) -> Adjudication {
        if let Status::Adjudicated(a) = &self.status {
            return a.clone();
        }
        let adj = adjudicate_position(&self.current, self.bound);
        self.status = Status::Adjudicated(adj.clone());
        adj
    }
}

/// Legal moves of `player` at position `f`, constants schematic.
pub fn legal_moves_of(f: &Formula, player: Player) -> Vec<MoveTemplate> {
    let mut out = Vec::new();
    for sc in surface_choices(f).into_iter().filter(|sc| sc.owner == player) {
        let t = |payload| MoveTemplate { player, path: sc.path.clone(), payload };
        if sc.kind.is_binary() {
            out.push(t(TemplatePayload::Left));
            out.push(t(TemplatePayload::Right));
        } else {
            out.push(t(TemplatePayload::Constant));
        }
    }
    out
}

/// ⊤ wins iff the elementarization of the final position is true.
pub fn adjudicate_position(current: &Formula, bound: u64) -> Adjudication {
    let e = current.elementarization();
    match Oracle::new(bound).eval(&e) {
        Ok(Truth3::True) => Adjudication { winner: Winner::Machine, reason: format!("elementarization {e} is true") },
        Ok(Truth3::False) => {
            Adjudication { winner: Winner::Environment, reason: format!("elementarization {e} is false") }
        }
        Ok(Truth3::Unknown(r)) => Adjudication {
            winner: Winner::Unknown,
            reason: match r {
                UnknownReason::BoundExhausted => format!("truth of {e} not settled within bound {bound}"),
                UnknownReason::Overflow => format!("truth of {e} not settled: arithmetic overflow"),
            },
        },
        Err(err) => Adjudication { winner: Winner::Unknown, reason: err.to_string() },
    }
}
