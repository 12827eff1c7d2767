//! Plays ⊓x⊔y(y = x') twice: once by hand through a session and once with
//! the successor strategy against a scripted environment.

use clarith::games::{GameSession, Oracle, State};
use clarith::strategies::{axiom8_game, simulate, Limits, ScriptedEnv, Strategy};
use clarith::syntax::{Labmove, Payload};

fn main() {
    let game = axiom8_game();
    println!("game: {game}");

    let mut s = GameSession::new(game.clone(), 32).unwrap();
    s.apply_move(Labmove::env(vec![], Payload::Const(6))).unwrap();
    println!("after ⊥ picks 6: {}", s.current);
    if let Err(e) = s.apply_move(Labmove::env(vec![], Payload::Const(1))) {
        println!("second environment move refused: {e}");
    }
    s.apply_move(Labmove::machine(vec![], Payload::Const(7))).unwrap();
    println!("after ⊤ answers 7: {}", s.current);
    println!("adjudication: {:?}", s.adjudicate());
    println!("state message: {}", serde_json::to_string(&State::of(&s)).unwrap());

    println!();
    for x in [0, 5, 41] {
        let mut env = ScriptedEnv::new([Labmove::env(vec![], Payload::Const(x))]);
        let o = simulate(&Strategy::Axiom8, &game, &Oracle::new(32), &mut env, &Limits::default()).unwrap();
        let run: Vec<String> = o.run.iter().map(|m| m.to_string()).collect();
        println!("x = {x:>2}: run [{}], {} steps, {}", run.join(", "), o.steps, o.verdict.label());
    }
}
