//! The transducer interface and the simplest strategies.
//!
//! A transducer sees only the environment's moves, in its own frame: paths
//! are relative to the game it plays. Its own moves count as made the moment
//! it emits them.

use std::collections::VecDeque;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::syntax::{Labmove, OccurrencePath, Payload, Player};

/// Outcome of one computation step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub emit: Option<Labmove>,
    /// Nothing will be emitted before the next observation.
    pub quiescent: bool,
}

impl Step {
    pub fn idle() -> Step {
        Step { emit: None, quiescent: true }
    }

    pub fn busy() -> Step {
        Step { emit: None, quiescent: false }
    }

    pub fn emit(mv: Labmove) -> Step {
        Step { emit: Some(mv), quiescent: false }
    }
}

pub trait Transducer: Send + fmt::Debug {
    /// One computation step after taking in `observed`.
    fn step(&mut self, observed: &[Labmove]) -> Step;

    /// Why the transducer gave up, if it did. A stalled transducer stays quiescent.
    fn stall(&self) -> Option<String> {
        None
    }

    fn box_clone(&self) -> Box<dyn Transducer>;
}

impl Clone for Box<dyn Transducer> {
    fn clone(&self) -> Self {
        self.box_clone()
    }
}

/// Hex SHA-256 of the transducer's full state.
pub fn digest(t: &dyn Transducer) -> String {
    let h = Sha256::digest(format!("{t:?}").as_bytes());
    h.iter().take(12).map(|b| format!("{b:02x}")).collect()
}

macro_rules! boxed_clone {
    () => {
        fn box_clone(&self) -> Box<dyn Transducer> {
            Box::new(self.clone())
        }
    };
}
pub(crate) use boxed_clone;

/// Never moves.
#[derive(Debug, Clone, Default)]
pub struct SilentT;

impl Transducer for SilentT {
    fn step(&mut self, _: &[Labmove]) -> Step {
        Step::idle()
    }
    boxed_clone!();
}

/// `⊓x⊔y(y = x′)`: answers `c` with `c + 1`.
#[derive(Debug, Clone, Default)]
pub struct Axiom8T {
    inbox: VecDeque<u64>,
    answered: bool,
    stall: Option<String>,
}

impl Transducer for Axiom8T {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        for m in observed {
            if let (true, Payload::Const(c)) = (m.path.is_root(), m.payload) {
                self.inbox.push_back(c);
            }
        }
        if self.answered || self.stall.is_some() {
            return Step::idle();
        }
        match self.inbox.pop_front() {
            Some(c) => match c.checked_add(1) {
                Some(d) => {
                    self.answered = true;
                    Step::emit(Labmove::machine(OccurrencePath::root(), Payload::Const(d)))
                }
                None => {
                    self.stall = Some(format!("successor of {c} overflows"));
                    Step::idle()
                }
            },
            None => Step::idle(),
        }
    }

    fn stall(&self) -> Option<String> {
        self.stall.clone()
    }

    boxed_clone!();
}

/// Plays `E → E` by mirroring each move into the other copy.
#[derive(Debug, Clone, Default)]
pub struct CopycatT {
    out: VecDeque<Labmove>,
}

impl Transducer for CopycatT {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        for m in observed {
            if let Some((side, rest)) = m.path.split_first() {
                if side <= 1 {
                    self.out.push_back(Labmove::new(Player::Machine, rest.prefixed(1 - side), m.payload));
                }
            }
        }
        match self.out.pop_front() {
            Some(mv) => Step::emit(mv),
            None => Step::idle(),
        }
    }
    boxed_clone!();
}

/// Feeds fixed constants to the leading `⊓` quantifiers of the inner game
/// before anything else, then passes everything through.
#[derive(Debug, Clone)]
pub struct InstantiateT {
    inner: Box<dyn Transducer>,
    pending: Option<Vec<u64>>,
}

impl InstantiateT {
    pub fn new(inner: Box<dyn Transducer>, constants: Vec<u64>) -> Self {
        InstantiateT { inner, pending: Some(constants) }
    }
}

impl Transducer for InstantiateT {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        match self.pending.take() {
            Some(cs) if !cs.is_empty() => {
                let mut obs: Vec<Labmove> =
                    cs.into_iter().map(|c| Labmove::env(OccurrencePath::root(), Payload::Const(c))).collect();
                obs.extend_from_slice(observed);
                self.inner.step(&obs)
            }
            _ => self.inner.step(observed),
        }
    }

    fn stall(&self) -> Option<String> {
        self.inner.stall()
    }

    boxed_clone!();
}
