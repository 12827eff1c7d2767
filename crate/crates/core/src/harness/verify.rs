use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::drivers::env_moves;
use crate::games::Oracle;
use crate::strategies::{Limits, Play, Strategy, StrategyError, Verdict};
use crate::syntax::{Formula, Run};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub bound: u64,
    /// Most environment moves per play.
    pub depth: usize,
    pub range: RangeInclusive<u64>,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { bound: 32, depth: 3, range: 0..=8, limits: Limits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerifySummary {
    pub leaves: usize,
    pub won: usize,
    pub lost: usize,
    pub unknown: usize,
    pub stalled: usize,
    /// Most machine steps taken in any play.
    pub max_steps: u64,
    /// A shortest losing run, if any play was lost.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lost_trace: Option<Run>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub unknown_reasons: BTreeSet<String>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.lost == 0
    }

    fn record(&mut self, play: &Play, v: Verdict) {
        self.leaves += 1;
        self.max_steps = self.max_steps.max(play.steps);
        match v {
            Verdict::Won => self.won += 1,
            Verdict::Unknown { reason } => {
                self.unknown += 1;
                self.unknown_reasons.insert(reason);
            }
            Verdict::Stalled { .. } => self.stalled += 1,
            Verdict::Lost { trace } => {
                self.lost += 1;
                if self.lost_trace.as_ref().is_none_or(|t| trace.len() < t.len()) {
                    self.lost_trace = Some(trace);
                }
            }
        }
    }
}

/// Plays `strategy` on `root` against every environment behavior that makes
/// at most `depth` moves with constants in `range`, moving only when the
/// machine is quiescent. Each behavior ends in one leaf.
pub fn verify_exhaustive(
    strategy: &Strategy,
    root: &Formula,
    cfg: &VerifyConfig,
) -> Result<VerifySummary, StrategyError> {
    let play = Play::new(strategy, root.clone(), &Oracle::new(cfg.bound))?;
    let mut summary = VerifySummary::default();
    explore(play, 0, cfg, &mut summary);
    Ok(summary)
}

fn explore(mut play: Play, made: usize, cfg: &VerifyConfig, out: &mut VerifySummary) {
    if let Err(v) = play.run_until_quiescent(&cfg.limits) {
        out.record(&play, v);
        return;
    }
    let mut stop = play.clone();
    let v = stop.finish();
    out.record(&stop, v);
    if made >= cfg.depth {
        return;
    }
    for mv in env_moves(&play.session, &cfg.range) {
        let mut next = play.clone();
        match next.env_move(mv) {
            Ok(()) => explore(next, made + 1, cfg, out),
            Err(v) => out.record(&next, v),
        }
    }
}
