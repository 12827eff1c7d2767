//! Environment drivers beyond the scripted one.

use std::collections::VecDeque;
use std::io::{BufRead, Write};
use std::ops::RangeInclusive;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::games::{GameSession, State};
use crate::strategies::{EnvAction, EnvironmentDriver};
use crate::syntax::{Labmove, MoveTemplate, Payload, Player, TemplatePayload};

pub use crate::strategies::ScriptedEnv;

/// Concrete environment moves available in `session`, constants drawn from `range`.
pub fn env_moves(session: &GameSession, range: &RangeInclusive<u64>) -> Vec<Labmove> {
    if !session.is_open() {
        return Vec::new();
    }
    session.legal_moves(Player::Environment).iter().flat_map(|t| expand(t, range)).collect()
}

fn expand(t: &MoveTemplate, range: &RangeInclusive<u64>) -> Vec<Labmove> {
    let mv = |p| Labmove::env(t.path.clone(), p);
    match t.payload {
        TemplatePayload::Left => vec![mv(Payload::Left)],
        TemplatePayload::Right => vec![mv(Payload::Right)],
        TemplatePayload::Constant => range.clone().map(|c| mv(Payload::Const(c))).collect(),
    }
}

/// Moves at random whenever the machine is quiescent, up to `depth` moves;
/// stops early with probability `1 / (options + 1)`. Reproducible from the seed.
#[derive(Debug, Clone)]
pub struct RandomEnv {
    rng: ChaCha8Rng,
    depth: usize,
    range: RangeInclusive<u64>,
    made: usize,
}

impl RandomEnv {
    pub fn new(seed: u64, depth: usize, range: RangeInclusive<u64>) -> Self {
        RandomEnv { rng: ChaCha8Rng::seed_from_u64(seed), depth, range, made: 0 }
    }
}

impl EnvironmentDriver for RandomEnv {
    fn act(&mut self, session: &GameSession, _: u64, quiescent: bool) -> EnvAction {
        if !quiescent {
            return EnvAction::Pass;
        }
        let moves = if self.made < self.depth { env_moves(session, &self.range) } else { Vec::new() };
        let k = self.rng.gen_range(0..=moves.len());
        match moves.into_iter().nth(k) {
            Some(mv) => {
                self.made += 1;
                EnvAction::Move(mv)
            }
            None => EnvAction::Finish,
        }
    }
}

/// Moves handed in from elsewhere, such as a play server client. An empty
/// queue passes until [`RemoteEnv::finish`] is called.
#[derive(Debug, Clone, Default)]
pub struct RemoteEnv {
    queue: Arc<Mutex<(VecDeque<Labmove>, bool)>>,
}

impl RemoteEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&self, mv: Labmove) {
        self.queue.lock().expect("queue lock").0.push_back(mv);
    }

    pub fn finish(&self) {
        self.queue.lock().expect("queue lock").1 = true;
    }
}

impl EnvironmentDriver for RemoteEnv {
    fn act(&mut self, _: &GameSession, _: u64, quiescent: bool) -> EnvAction {
        let mut q = self.queue.lock().expect("queue lock");
        if !quiescent {
            return EnvAction::Pass;
        }
        match q.0.pop_front() {
            Some(mv) => EnvAction::Move(mv),
            None if q.1 => EnvAction::Finish,
            None => EnvAction::Pass,
        }
    }
}

/// A human at a terminal: shows the state as a JSON line whenever the machine
/// is quiescent and reads one move per line. An empty line, `finish` or end
/// of input ends the play.
pub struct LineEnv<R, W> {
    input: R,
    output: W,
}

impl<R: BufRead, W: Write> LineEnv<R, W> {
    pub fn new(input: R, output: W) -> Self {
        LineEnv { input, output }
    }
}

impl<R: BufRead, W: Write> EnvironmentDriver for LineEnv<R, W> {
    fn act(&mut self, session: &GameSession, _: u64, quiescent: bool) -> EnvAction {
        if !quiescent {
            return EnvAction::Pass;
        }
        loop {
            let state = serde_json::to_string(&State::of(session)).expect("state serializes");
            let _ = writeln!(self.output, "{state}");
            let _ = self.output.flush();
            let mut line = String::new();
            match self.input.read_line(&mut line) {
                Ok(0) | Err(_) => return EnvAction::Finish,
                Ok(_) => {}
            }
            let line = line.trim();
            if line.is_empty() || line == "finish" {
                return EnvAction::Finish;
            }
            match serde_json::from_str::<Labmove>(line) {
                Ok(mv) => return EnvAction::Move(mv),
                Err(e) => {
                    let _ = writeln!(self.output, "{}", serde_json::json!({ "error": e.to_string(), "kind": "parse" }));
                }
            }
        }
    }
}
