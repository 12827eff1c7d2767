//! Playing formula-games: sessions, bounded truth, adjudication, and the
//! register machines behind the halting atom.

mod machine;
mod protocol;
mod session;
mod truth;

pub use machine::{
    corpus, machine_for_code, pair, proj1, proj2, rm_run, turing_t, Instr, MachineCode, RunOutcome, INPUT_REGISTER,
};
pub use protocol::{AdjudicationMessage, Move, ProtocolError, SessionCreate, State};
pub use session::{adjudicate_position, legal_moves_of, Adjudication, GameError, GameSession, Status, Winner};
pub use truth::{eval_elementary, Oracle, Truth3, TruthError, UnknownReason};
