use std::path::Path;

use serde::{Deserialize, Serialize};

use super::verify::{verify_exhaustive, VerifyConfig, VerifySummary};
use super::HarnessError;
use crate::games::Oracle;
use crate::proofs::{check_proof, extract, parse_proof, Report, SystemId};
use crate::strategies::{simulate, truth_decider, EnvironmentDriver, Limits, Outcome, Strategy, Verdict};
use crate::syntax::{parse, Formula, Labmove};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Checks a proof file. Exit code 0 accepted, 1 rejected, 2 malformed.
pub fn cmd_check(path: &Path, system: SystemId) -> CheckOutcome {
    let parsed = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))
        .and_then(|t| parse_proof(&t).map_err(|e| e.to_string()));
    match parsed {
        Ok(p) => {
            let report = check_proof(&p, system);
            CheckOutcome { exit_code: report.exit_code(), report: Some(report), error: None }
        }
        Err(e) => CheckOutcome { exit_code: 2, report: None, error: Some(e) },
    }
}

/// Extracts a strategy from a proof file as pretty JSON, writing it to `out`
/// when given. The text depends only on the proof.
pub fn cmd_extract(path: &Path, system: SystemId, out: Option<&Path>) -> Result<String, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    let proof = parse_proof(&text)?;
    let x = extract(&proof, system)?;
    let mut json = serde_json::to_string_pretty(&x.strategy).expect("strategies serialize");
    json.push('\n');
    if let Some(out) = out {
        std::fs::write(out, &json).map_err(|e| HarnessError::Io(format!("{}: {e}", out.display())))?;
    }
    Ok(json)
}

pub fn load_strategy(path: &Path) -> Result<Strategy, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| HarnessError::Json(e.to_string()))
}

/// The game of the halting example: for a machine `x` that halts on input 0,
/// name the step at which it halts.
pub fn halting_game() -> Formula {
    parse("AAx. ((Ey. Et. T(x, 0, y, t)) -> EEy. Et. T(x, 0, y, t))").expect("fixed formula")
}

/// Builtin strategies with their games: `axiom8` and `halting`.
pub fn builtin(name: &str) -> Option<(Strategy, Formula)> {
    match name {
        "axiom8" => Some((Strategy::Axiom8, crate::strategies::axiom8_game())),
        "halting" => {
            let m = parse("Et. T(x, 0, y, t)").expect("fixed formula");
            Some((Strategy::infinite_search(truth_decider(&m), m, "y"), halting_game()))
        }
        _ => None,
    }
}

fn require_game(strategy: &Strategy, formula: &Formula) -> Result<(), HarnessError> {
    let game = strategy.game()?;
    if game.same_game(formula) {
        Ok(())
    } else {
        Err(HarnessError::ShapeMismatch { strategy: game.to_string(), formula: formula.to_string() })
    }
}

/// Exhaustive verification of `strategy` on `formula`.
pub fn cmd_verify(strategy: &Strategy, formula: &Formula, cfg: &VerifyConfig) -> Result<VerifySummary, HarnessError> {
    require_game(strategy, formula)?;
    Ok(verify_exhaustive(strategy, formula, cfg)?)
}

/// One line of a play transcript.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "lowercase")]
pub enum TranscriptLine {
    Start { formula: String, bound: u64 },
    Move { step: u64, #[serde(rename = "move")] mv: Labmove },
    End { steps: u64, #[serde(flatten)] verdict: Verdict },
}

pub fn transcript(formula: &Formula, bound: u64, o: &Outcome) -> Vec<TranscriptLine> {
    let mut lines = vec![TranscriptLine::Start { formula: formula.to_string(), bound }];
    lines.extend(o.history.iter().skip(1).filter_map(|h| {
        h.run.last().map(|mv| TranscriptLine::Move { step: h.step, mv: mv.clone() })
    }));
    lines.push(TranscriptLine::End { steps: o.steps, verdict: o.verdict.clone() });
    lines
}

pub fn to_jsonl(lines: &[TranscriptLine]) -> String {
    lines.iter().map(|l| serde_json::to_string(l).expect("transcripts serialize") + "\n").collect()
}

/// Plays one game and returns its transcript.
pub fn cmd_play(
    strategy: &Strategy,
    formula: &Formula,
    bound: u64,
    env: &mut dyn EnvironmentDriver,
    limits: &Limits,
) -> Result<Vec<TranscriptLine>, HarnessError> {
    require_game(strategy, formula)?;
    let o = simulate(strategy, formula, &Oracle::new(bound), env, limits)?;
    Ok(transcript(formula, bound, &o))
}
