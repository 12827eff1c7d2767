//! Co-execution of a strategy with an environment on a game session.
//!
//! Each tick the environment may move first, then the machine performs one
//! step. Drivers that only react (exhaustive, random, remote) move only when
//! the machine is quiescent; scripted drivers may also schedule a move for a
//! given tick.

use serde::{Deserialize, Serialize};

use super::transducer::{digest, Transducer};
use super::{Strategy, StrategyError};
use crate::games::{Adjudication, GameSession, Oracle, Winner};
use crate::syntax::{yield_of, Formula, Labmove, Player, Run};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_steps: u64,
    pub max_moves: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 100_000, max_moves: 1_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Won,
    /// The run that lost.
    Lost { trace: Run },
    /// The truth oracle could not settle the outcome.
    Unknown { reason: String },
    /// A limit was hit; `provisional` is what adjudication says of the position reached.
    Stalled { steps: u64, provisional: Adjudication },
}

impl Verdict {
    pub fn is_lost(&self) -> bool {
        matches!(self, Verdict::Lost { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Won => "won",
            Verdict::Lost { .. } => "lost",
            Verdict::Unknown { .. } => "unknown",
            Verdict::Stalled { .. } => "stalled",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub step: u64,
    pub run: Run,
    pub digest: String,
}

/// Snapshots of the play: one at the start and one after every move.
pub type History = Vec<HistoryEntry>;

/// What an environment does at a tick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnvAction {
    Move(Labmove),
    Pass,
    /// No further moves will come.
    Finish,
}

pub trait EnvironmentDriver {
    /// Called at every tick before the machine steps. `quiescent` tells
    /// whether the machine has nothing to do until it sees a new move.
    fn act(&mut self, session: &GameSession, tick: u64, quiescent: bool) -> EnvAction;
}

/// A play in progress. Clonable, so that exhaustive exploration can fork it
/// at environment decision points.
#[derive(Debug, Clone)]
pub struct Play {
    pub session: GameSession,
    machine: Box<dyn Transducer>,
    inbox: Vec<Labmove>,
    pub steps: u64,
    pub history: History,
    quiescent: bool,
    finished: Option<Verdict>,
}

impl Play {
    pub fn new(strategy: &Strategy, root: Formula, oracle: &Oracle) -> Result<Play, StrategyError> {
        let session =
            GameSession::new(root, oracle.bound).map_err(|e| StrategyError::Game(e.to_string()))?;
        let machine = strategy.start(oracle)?;
        let history = vec![HistoryEntry { step: 0, run: Vec::new(), digest: digest(&*machine) }];
        Ok(Play { session, machine, inbox: Vec::new(), steps: 0, history, quiescent: false, finished: None })
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        self.finished.as_ref()
    }

    pub fn is_quiescent(&self) -> bool {
        self.quiescent && self.inbox.is_empty()
    }

    pub fn stall_note(&self) -> Option<String> {
        self.machine.stall()
    }

    fn record(&mut self) {
        self.history.push(HistoryEntry {
            step: self.steps,
            run: self.session.run.clone(),
            digest: digest(&*self.machine),
        });
    }

    fn close(&mut self, v: Verdict) -> Verdict {
        self.finished = Some(v.clone());
        v
    }

    /// An environment move. An illegal one forfeits the play for the environment.
    pub fn env_move(&mut self, mv: Labmove) -> Result<(), Verdict> {
        if let Some(v) = &self.finished {
            return Err(v.clone());
        }
        if mv.player != Player::Environment {
            self.session.forfeit(Player::Environment, format!("{mv} is not an environment move"));
            return Err(self.close(Verdict::Won));
        }
        if let Err(e) = self.session.apply_move(mv.clone()) {
            self.session.forfeit(Player::Environment, e.to_string());
            return Err(self.close(Verdict::Won));
        }
        self.inbox.push(mv);
        self.quiescent = false;
        self.record();
        Ok(())
    }

    /// One machine step.
    pub fn machine_step(&mut self, limits: &Limits) -> Result<(), Verdict> {
        if let Some(v) = &self.finished {
            return Err(v.clone());
        }
        if self.steps >= limits.max_steps || self.session.run.len() >= limits.max_moves {
            return Err(self.stalled());
        }
        let obs = std::mem::take(&mut self.inbox);
        let s = self.machine.step(&obs);
        self.steps += 1;
        self.quiescent = s.quiescent && s.emit.is_none();
        if let Some(mut mv) = s.emit {
            mv.player = Player::Machine;
            if let Err(e) = self.session.apply_move(mv.clone()) {
                self.session.forfeit(Player::Machine, e.to_string());
                let trace = self.session.run.iter().cloned().chain(std::iter::once(mv)).collect();
                return Err(self.close(Verdict::Lost { trace }));
            }
            self.record();
        }
        Ok(())
    }

    /// Steps the machine until it is quiescent. `Err` if the play ended.
    pub fn run_until_quiescent(&mut self, limits: &Limits) -> Result<(), Verdict> {
        while !self.is_quiescent() {
            self.machine_step(limits)?;
        }
        Ok(())
    }

    fn stalled(&mut self) -> Verdict {
        let provisional = self.session.clone().adjudicate();
        self.close(Verdict::Stalled { steps: self.steps, provisional })
    }

    /// The environment will not move again: adjudicate the position reached.
    pub fn finish(&mut self) -> Verdict {
        if let Some(v) = &self.finished {
            return v.clone();
        }
        let adj = self.session.adjudicate();
        let v = match adj.winner {
            Winner::Machine => Verdict::Won,
            Winner::Unknown => Verdict::Unknown { reason: adj.reason },
            Winner::Environment => match self.machine.stall() {
                Some(note) => Verdict::Unknown { reason: note },
                None => Verdict::Lost { trace: self.session.run.clone() },
            },
        };
        self.close(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub run: Run,
    pub history: History,
    pub verdict: Verdict,
    pub steps: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stall: Option<String>,
}

/// Plays `strategy` on `root` against `env` until the environment finishes
/// and the machine is quiescent, or a limit is hit.
pub fn simulate(
    strategy: &Strategy,
    root: &Formula,
    oracle: &Oracle,
    env: &mut dyn EnvironmentDriver,
    limits: &Limits,
) -> Result<Outcome, StrategyError> {
    let mut play = Play::new(strategy, root.clone(), oracle)?;
    let verdict = loop {
        let quiescent = play.is_quiescent();
        match env.act(&play.session, play.steps, quiescent) {
            EnvAction::Move(mv) => {
                if let Err(v) = play.env_move(mv) {
                    break v;
                }
                continue;
            }
            EnvAction::Finish if quiescent => break play.finish(),
            EnvAction::Pass | EnvAction::Finish => {}
        }
        if let Err(v) = play.machine_step(limits) {
            break v;
        }
    };
    Ok(Outcome {
        run: play.session.run.clone(),
        stall: play.stall_note(),
        history: play.history,
        verdict,
        steps: play.steps,
    })
}

/// Whether `a` is a well-formed history of a play on `x` whose last
/// position brings `x` down to `e` with its free variables set to `c`
/// (first-occurrence order).
pub fn history_predicate(a: &History, x: &Formula, e: &Formula, c: &[u64]) -> bool {
    let free = e.free_vars_ordered();
    if free.len() != c.len() {
        return false;
    }
    let target = free.iter().zip(c).fold(e.clone(), |acc, (v, n)| acc.instantiate(v, *n));
    let mut prev: Option<&HistoryEntry> = None;
    for h in a {
        if let Some(p) = prev {
            if h.step < p.step || h.run.len() < p.run.len() || h.run[..p.run.len()] != p.run[..] {
                return false;
            }
        }
        prev = Some(h);
    }
    let last: &[Labmove] = a.last().map(|h| h.run.as_slice()).unwrap_or(&[]);
    match yield_of(x, last) {
        Ok(y) => y.same_game(&target),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRow {
    pub play: usize,
    pub steps: u64,
    pub machine_moves: usize,
    /// Steps taken before the machine's first move.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_move_at: Option<u64>,
    pub verdict: String,
}

/// Step counts of `strategy` over a set of plays.
pub fn measure_steps(
    strategy: &Strategy,
    root: &Formula,
    oracle: &Oracle,
    plays: &mut [Box<dyn EnvironmentDriver>],
    limits: &Limits,
) -> Result<Vec<StepRow>, StrategyError> {
    plays
        .iter_mut()
        .enumerate()
        .map(|(i, env)| {
            let o = simulate(strategy, root, oracle, env.as_mut(), limits)?;
            let first_move_at = o
                .history
                .iter()
                .find(|h| h.run.last().is_some_and(|m| m.player == Player::Machine))
                .map(|h| h.step);
            Ok(StepRow {
                play: i,
                steps: o.steps,
                machine_moves: o.run.iter().filter(|m| m.player == Player::Machine).count(),
                first_move_at,
                verdict: o.verdict.label().to_string(),
            })
        })
        .collect()
}

/// A scripted environment move. Without `at_tick` it is made as soon as the
/// machine is quiescent; with it, at that tick regardless.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimedMove {
    #[serde(flatten)]
    pub mv: Labmove,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_tick: Option<u64>,
}

impl From<Labmove> for TimedMove {
    fn from(mv: Labmove) -> Self {
        TimedMove { mv, at_tick: None }
    }
}

/// Plays a fixed list of moves, then finishes.
#[derive(Debug, Clone, Default)]
pub struct ScriptedEnv {
    moves: std::collections::VecDeque<TimedMove>,
}

impl ScriptedEnv {
    pub fn new(moves: impl IntoIterator<Item = impl Into<TimedMove>>) -> Self {
        ScriptedEnv { moves: moves.into_iter().map(Into::into).collect() }
    }
}

impl EnvironmentDriver for ScriptedEnv {
    fn act(&mut self, _: &GameSession, tick: u64, quiescent: bool) -> EnvAction {
        let due = match self.moves.front() {
            None => return EnvAction::Finish,
            Some(TimedMove { at_tick: Some(k), .. }) => tick >= *k,
            Some(TimedMove { at_tick: None, .. }) => quiescent,
        };
        match (due, self.moves.pop_front()) {
            (true, Some(t)) => EnvAction::Move(t.mv),
            (false, Some(t)) => {
                self.moves.push_front(t);
                EnvAction::Pass
            }
            (_, None) => EnvAction::Finish,
        }
    }
}
