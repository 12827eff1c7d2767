//! ⊓x(∃y p(x, y) → ⊔y p(x, y)) with p(x, y) = "machine x halts at step y".
//! The infinite-search strategy answers with the halting step when there is
//! one and otherwise searches forever, which shows up as a stalled play.

use clarith::games::{corpus, rm_run, Oracle, RunOutcome};
use clarith::harness::halting_game;
use clarith::strategies::{simulate, truth_decider, Limits, ScriptedEnv, Strategy, Verdict};
use clarith::syntax::{parse, Labmove, Payload, Player};

fn main() {
    let p = parse("Et. T(x, 0, y, t)").unwrap();
    let s = Strategy::infinite_search(truth_decider(&p), p, "y");
    let game = halting_game();
    println!("game: {game}\n");
    let limits = Limits { max_steps: 20_000, max_moves: 100 };
    for (code, m) in corpus().iter().enumerate() {
        let mut env = ScriptedEnv::new([Labmove::env(vec![], Payload::Const(code as u64))]);
        let o = simulate(&s, &game, &Oracle::new(32), &mut env, &limits).unwrap();
        let answer = o.run.iter().find(|mv| mv.player == Player::Machine).map(|mv| mv.payload.to_string());
        let truth = match rm_run(m, 0, 1_000_000) {
            RunOutcome::Halted { step, .. } => format!("halts at {step}"),
            RunOutcome::StillRunning => "runs forever".into(),
        };
        let verdict = match &o.verdict {
            Verdict::Stalled { provisional, .. } => format!("stalled, provisionally {:?}", provisional.winner),
            v => v.label().to_string(),
        };
        println!("{code} {:<15} {:<13} answer {:<5} {verdict}", m.name, truth, answer.unwrap_or_else(|| "-".into()));
    }
}
