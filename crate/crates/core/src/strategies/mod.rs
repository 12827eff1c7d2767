//! Strategies as deterministic interactive transducers, the combinators that
//! build them, and their simulation against environments.

mod compose;
mod script;
mod search;
mod simulate;
mod strategy;
mod transducer;

pub use compose::{compose_games, ComposeMode, ComposeT};
pub use script::{validate_script, Instr, Network, PayloadExpr, ScriptT, WitnessScript};
pub use search::{ConstructivizationT, InductionT, SearchT, MAX_CHAIN};
pub use simulate::{
    history_predicate, measure_steps, simulate, EnvAction, EnvironmentDriver, History, HistoryEntry, Limits,
    Outcome, Play, ScriptedEnv, StepRow, TimedMove, Verdict,
};
pub use strategy::{axiom8_game, instantiate_prefix, truth_decider, Strategy};
pub use transducer::{digest, Axiom8T, CopycatT, InstantiateT, SilentT, Step, Transducer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrategyError {
    #[error("games do not compose: provider plays {provider}, consumer plays {consumer}")]
    ShapeMismatch { provider: String, consumer: String },
    #[error("formula {0} is not elementary")]
    NotElementary(String),
    #[error("free variables {}", .0.join(", "))]
    FreeVariables(Vec<String>),
    #[error("cannot instantiate {wanted} leading choice quantifiers of {game}: reached {at}")]
    Instantiation { game: String, wanted: usize, at: String },
    #[error("undefined slot {0}")]
    UndefinedSlot(String),
    #[error("script: {0}")]
    Script(String),
    #[error("game: {0}")]
    Game(String),
}
