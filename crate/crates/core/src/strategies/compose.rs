//! Composition of a provider with a consumer over a shared resource game.
//!
//! With a provider for `E` and a consumer for `E → F` the result plays `F`
//! (a cut). With a provider for `D → E` it plays `D → F`. The play of `E`
//! stays internal; the consumer steps first, then the provider.

use std::collections::VecDeque;

use super::transducer::{boxed_clone, Step, Transducer};
use super::StrategyError;
use crate::syntax::{Formula, Labmove, OccurrencePath, Player};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeMode {
    Cut,
    Transitive,
}

/// Decides how two games compose and returns the composite game.
pub fn compose_games(provider: &Formula, consumer: &Formula) -> Result<(ComposeMode, Formula), StrategyError> {
    let mismatch = || StrategyError::ShapeMismatch {
        provider: provider.to_string(),
        consumer: consumer.to_string(),
    };
    let Formula::Implies(e, f) = consumer else { return Err(mismatch()) };
    if provider.same_game(e) {
        return Ok((ComposeMode::Cut, (**f).clone()));
    }
    if let Formula::Implies(d, e2) = provider {
        if e2.same_game(e) {
            return Ok((ComposeMode::Transitive, Formula::implies((**d).clone(), (**f).clone())));
        }
    }
    Err(mismatch())
}

#[derive(Debug, Clone)]
pub struct ComposeT {
    mode: ComposeMode,
    provider: Box<dyn Transducer>,
    consumer: Box<dyn Transducer>,
    to_provider: Vec<Labmove>,
    to_consumer: Vec<Labmove>,
    out: VecDeque<Labmove>,
}

impl ComposeT {
    pub fn new(mode: ComposeMode, provider: Box<dyn Transducer>, consumer: Box<dyn Transducer>) -> Self {
        ComposeT {
            mode,
            provider,
            consumer,
            to_provider: Vec::new(),
            to_consumer: Vec::new(),
            out: VecDeque::new(),
        }
    }
}

fn env_at(path: OccurrencePath, m: &Labmove) -> Labmove {
    Labmove::new(Player::Environment, path, m.payload)
}

fn machine_at(path: OccurrencePath, m: &Labmove) -> Labmove {
    Labmove::new(Player::Machine, path, m.payload)
}

impl Transducer for ComposeT {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        for m in observed {
            match self.mode {
                ComposeMode::Cut => self.to_consumer.push(env_at(m.path.prefixed(1), m)),
                ComposeMode::Transitive => match m.path.split_first() {
                    Some((0, _)) => self.to_provider.push(m.clone()),
                    Some((1, _)) => self.to_consumer.push(m.clone()),
                    _ => {}
                },
            }
        }

        let cs = self.consumer.step(&std::mem::take(&mut self.to_consumer));
        if let Some(e) = &cs.emit {
            match e.path.split_first() {
                Some((0, q)) => {
                    let p = match self.mode {
                        ComposeMode::Cut => q,
                        ComposeMode::Transitive => q.prefixed(1),
                    };
                    self.to_provider.push(env_at(p, e));
                }
                Some((1, p)) => {
                    let p = match self.mode {
                        ComposeMode::Cut => p,
                        ComposeMode::Transitive => p.prefixed(1),
                    };
                    self.out.push_back(machine_at(p, e));
                }
                _ => self.out.push_back(e.clone()),
            }
        }

        let ps = self.provider.step(&std::mem::take(&mut self.to_provider));
        if let Some(e) = &ps.emit {
            match (self.mode, e.path.split_first()) {
                (ComposeMode::Cut, _) => self.to_consumer.push(env_at(e.path.prefixed(0), e)),
                (ComposeMode::Transitive, Some((0, _))) => self.out.push_back(e.clone()),
                (ComposeMode::Transitive, Some((1, q))) => self.to_consumer.push(env_at(q.prefixed(0), e)),
                (ComposeMode::Transitive, _) => self.out.push_back(e.clone()),
            }
        }

        match self.out.pop_front() {
            Some(mv) => Step::emit(mv),
            None => Step {
                emit: None,
                quiescent: cs.quiescent
                    && ps.quiescent
                    && self.to_provider.is_empty()
                    && self.to_consumer.is_empty(),
            },
        }
    }

    fn stall(&self) -> Option<String> {
        self.consumer.stall().or_else(|| self.provider.stall())
    }

    boxed_clone!();
}
