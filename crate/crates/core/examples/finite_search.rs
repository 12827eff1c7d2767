//! The finite-search combinator: given a decider for F(x), it tries
//! x = 0, 1, 2, ... and moves the first witness. Here F(x) is x + w = w * w,
//! whose least witness is w² - w.

use clarith::games::Oracle;
use clarith::strategies::{simulate, truth_decider, Limits, ScriptedEnv, Strategy};
use clarith::syntax::{parse, Labmove, Payload, Player};

fn main() {
    let m = parse("x + w = w * w").unwrap();
    let s = Strategy::finite_search(truth_decider(&m), m.clone(), "x");
    let game = s.game().unwrap();
    println!("game: {game}");
    for w in 0..=5u64 {
        let mut env = ScriptedEnv::new([Labmove::env(vec![], Payload::Const(w))]);
        let o = simulate(&s, &game, &Oracle::new(32), &mut env, &Limits::default()).unwrap();
        let answer = o.run.iter().find(|mv| mv.player == Player::Machine).map(|mv| mv.payload.to_string());
        println!(
            "w = {w}: answered {:>4}, expected {:>2}, {} in {} steps",
            answer.unwrap_or_else(|| "none".into()),
            w * w - w,
            o.verdict.label(),
            o.steps
        );
    }
}
