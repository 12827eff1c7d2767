//! Composition: a provider for E and a consumer for E → F give a strategy
//! for F. The successor strategy is the resource ⊓x⊔y(y = x'), which a
//! script asks about 5 and then copies the answer.

use std::collections::BTreeMap;

use clarith::games::Oracle;
use clarith::strategies::{simulate, Instr, Limits, PayloadExpr, ScriptedEnv, Strategy, WitnessScript};
use clarith::syntax::{parse, Labmove, OccurrencePath, Payload};

fn show(title: &str, s: &Strategy, env: Vec<Labmove>) {
    let game = s.game().unwrap();
    let o = simulate(s, &game, &Oracle::new(32), &mut ScriptedEnv::new(env), &Limits::default()).unwrap();
    let run: Vec<String> = o.run.iter().map(|m| m.to_string()).collect();
    println!("{title}\n  game {game}\n  run  [{}]\n  {} in {} steps\n", run.join(", "), o.verdict.label(), o.steps);
}

fn main() {
    let consumer = Strategy::script(
        parse("(AAx. EEy. y = x') -> EEy. y = 5'").unwrap(),
        WitnessScript::new(vec![
            Instr::Move { at: OccurrencePath::from(vec![0]), payload: PayloadExpr::Const("5".into()) },
            Instr::WaitFor { at: OccurrencePath::from(vec![0]), bind: Some("a".into()) },
            Instr::Move { at: OccurrencePath::from(vec![1]), payload: PayloadExpr::Const("a".into()) },
        ]),
        BTreeMap::new(),
    );
    show("consumer alone, against a cooperative environment", &consumer, vec![
        Labmove::env(vec![0], Payload::Const(6)),
    ]);
    show("cut with the successor strategy", &Strategy::compose(Strategy::Axiom8, consumer), vec![]);

    // copycat on E is a right identity: composing changes no visible move
    let cc = Strategy::compose(Strategy::Axiom8, Strategy::Copycat { game: Strategy::Axiom8.game().unwrap() });
    show("successor strategy through a copycat", &cc, vec![Labmove::env(vec![], Payload::Const(11))]);
}
