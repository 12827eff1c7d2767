use std::collections::BTreeMap;

use clarith::games::{corpus, rm_run, Oracle, RunOutcome, Winner};
use clarith::strategies::{
    history_predicate, simulate, truth_decider, Instr, Limits, Network, PayloadExpr, ScriptedEnv, Strategy,
    StrategyError, TimedMove, Verdict, WitnessScript,
};
use clarith::syntax::{parse, Formula, Labmove, Payload, Player};

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn env(path: Vec<usize>, c: u64) -> Labmove {
    Labmove::env(path, Payload::Const(c))
}

fn play(s: &Strategy, moves: Vec<Labmove>, limits: Limits) -> clarith::strategies::Outcome {
    let game = s.game().unwrap();
    simulate(s, &game, &Oracle::new(32), &mut ScriptedEnv::new(moves), &limits).unwrap()
}

fn machine_moves(o: &clarith::strategies::Outcome) -> Vec<Labmove> {
    o.run.iter().filter(|m| m.player == Player::Machine).cloned().collect()
}

fn mv(at: Vec<usize>, payload: PayloadExpr) -> Instr {
    Instr::Move { at: at.into(), payload }
}

fn wait(at: Vec<usize>, bind: &str) -> Instr {
    Instr::WaitFor { at: at.into(), bind: Some(bind.into()) }
}

#[test]
fn axiom8_replies_with_successor() {
    let o = play(&Strategy::Axiom8, vec![env(vec![], 3)], Limits::default());
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(4))]);
    assert_eq!(o.verdict, Verdict::Won);
}

#[test]
fn axiom8_without_environment_move_wins() {
    let o = play(&Strategy::Axiom8, vec![], Limits::default());
    assert!(o.run.is_empty());
    assert_eq!(o.verdict, Verdict::Won);
}

#[test]
fn silent_strategy_wins_true_axiom() {
    let s = Strategy::silent(f("Ax. Ay. x + y' = (x + y)'"));
    assert_eq!(play(&s, vec![], Limits::default()).verdict, Verdict::Won);
}

fn fs(matrix: &str) -> Strategy {
    let m = f(matrix);
    Strategy::finite_search(truth_decider(&m), m, "x")
}

fn is(matrix: &str) -> Strategy {
    let m = f(matrix);
    Strategy::infinite_search(truth_decider(&m), m, "x")
}

#[test]
fn finite_search_finds_double() {
    let s = fs("x = w + w");
    assert_eq!(s.game().unwrap(), f("AAw. EEx. x = w + w"));
    let o = play(&s, vec![env(vec![], 3)], Limits::default());
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(6))]);
    assert_eq!(o.verdict, Verdict::Won);
}

#[test]
fn finite_search_least_witness() {
    for (matrix, want) in [("x = 2", 2), ("x = 0", 0), ("x * x = 9 v x = 7", 3)] {
        let o = play(&fs(matrix), vec![], Limits::default());
        assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(want))], "{matrix}");
        assert_eq!(o.verdict, Verdict::Won);
    }
}

#[test]
fn finite_search_steps_grow_with_witness() {
    let steps: Vec<u64> =
        (0..6).map(|n| play(&fs(&format!("x = {n}")), vec![], Limits::default()).steps).collect();
    assert!(steps.windows(2).all(|w| w[0] < w[1]), "{steps:?}");
}

#[test]
fn infinite_search_answers_in_consequent() {
    let o = play(&is("x = 5"), vec![], Limits::default());
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![1], Payload::Const(5))]);
    assert_eq!(o.verdict, Verdict::Won);
}

#[test]
fn infinite_search_without_witness_never_moves_and_wins() {
    let o = play(&is("~(x = x)"), vec![], Limits { max_steps: 5_000, max_moves: 10 });
    assert!(o.run.is_empty());
    match o.verdict {
        Verdict::Stalled { provisional, .. } => assert_eq!(provisional.winner, Winner::Machine),
        v => panic!("expected a stall, got {v:?}"),
    }
}

#[test]
fn halting_example_answers_least_halting_step() {
    // ⊓m (∃y p(m,y) → ⊔y p(m,y)), p(m,y): machine m on input 0 halts at step y
    let m = f("Et. T(m, 0, x, t)");
    let s = Strategy::infinite_search(truth_decider(&m), m, "x");
    assert_eq!(s.game().unwrap(), f("AAm. (Ex. Et. T(m, 0, x, t)) -> (EEx. Et. T(m, 0, x, t))"));
    for code in 0..corpus().len() as u64 {
        let o = play(&s, vec![env(vec![], code)], Limits { max_steps: 20_000, max_moves: 10 });
        match rm_run(&corpus()[code as usize], 0, 10_000) {
            RunOutcome::Halted { step, .. } => {
                assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![1], Payload::Const(step))]);
                assert_eq!(o.verdict, Verdict::Won);
            }
            RunOutcome::StillRunning => {
                assert!(machine_moves(&o).is_empty());
                assert!(matches!(o.verdict, Verdict::Stalled { .. }));
            }
        }
    }
}

#[test]
fn constructivization_names_witness() {
    let s = Strategy::Constructivization { matrix: f("x = 5"), var: "x".into() };
    let o = play(&s, vec![], Limits::default());
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(5))]);
    // least halting step of countdown-12 on input 0
    let s = Strategy::Constructivization { matrix: f("Et. T(7, 0, x, t)"), var: "x".into() };
    let want = match rm_run(&corpus()[7], 0, 1000) {
        RunOutcome::Halted { step, .. } => step,
        RunOutcome::StillRunning => unreachable!(),
    };
    let o = play(&s, vec![], Limits::default());
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(want))]);
}

#[test]
fn constructivization_stalls_on_unsettled_truth() {
    let s_text = "Ez. Et. T(3, 0, z, t)";
    let matrix = f(&format!("(x = 0 & {s_text}) v (x = 1 & ~({s_text}))"));
    let s = Strategy::Constructivization { matrix, var: "x".into() };
    let o = play(&s, vec![], Limits::default());
    assert!(o.run.is_empty());
    assert!(o.stall.is_some());
    assert!(matches!(o.verdict, Verdict::Unknown { .. }), "{:?}", o.verdict);
}

fn modus_ponens() -> Strategy {
    // ⊓x⊔y(y = x') → ⊔y(y = 3'): ask the resource about 3, copy its answer
    let program = vec![
        mv(vec![0], PayloadExpr::Const("3".into())),
        wait(vec![0], "a"),
        mv(vec![1], PayloadExpr::Const("a".into())),
    ];
    Strategy::script(f("(AAx. EEy. y = x') -> (EEy. y = 3')"), WitnessScript::new(program), BTreeMap::new())
}

#[test]
fn compose_axiom8_with_modus_ponens() {
    let s = Strategy::compose(Strategy::Axiom8, modus_ponens());
    assert_eq!(s.game().unwrap(), f("EEy. y = 3'"));
    let o = play(&s, vec![], Limits::default());
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(4))]);
    assert_eq!(o.verdict, Verdict::Won);
}

#[test]
fn compose_rejects_mismatched_games() {
    let s = Strategy::compose(Strategy::silent(f("0 = 0")), modus_ponens());
    assert!(matches!(s.game(), Err(StrategyError::ShapeMismatch { .. })));
}

#[test]
fn copycat_is_a_right_identity() {
    let s = Strategy::Axiom8;
    let cc = Strategy::compose(Strategy::Axiom8, Strategy::Copycat { game: s.game().unwrap() });
    for moves in [vec![], vec![env(vec![], 0)], vec![env(vec![], 7)]] {
        assert_eq!(play(&s, moves.clone(), Limits::default()).run, play(&cc, moves, Limits::default()).run);
    }
}

#[test]
fn induction_unrolls_to_witness() {
    // F(x) = ⊔y(y = x); base answers 0, step turns a witness n into n'
    let base = Strategy::script(
        f("EEy. y = 0"),
        WitnessScript::new(vec![mv(vec![], PayloadExpr::Const("0".into()))]),
        BTreeMap::new(),
    );
    let step = Strategy::script(
        f("AAx. (EEy. y = x) -> (EEy. y = x')"),
        WitnessScript::new(vec![wait(vec![], "x"), wait(vec![0], "n"), mv(vec![1], PayloadExpr::Const("n'".into()))]),
        BTreeMap::new(),
    );
    let s = Strategy::Induction {
        base: Box::new(base),
        step: Box::new(step),
        matrix: f("EEy. y = x"),
        var: "x".into(),
    };
    assert_eq!(s.game().unwrap(), f("AAx. EEy. y = x"));
    for c in 0..=8 {
        let o = play(&s, vec![env(vec![], c)], Limits::default());
        assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(c))]);
        assert_eq!(o.verdict, Verdict::Won);
    }
}

#[test]
fn script_move_left() {
    let s = Strategy::script(
        f("(0 = 0) vv (0 = 0')"),
        WitnessScript::new(vec![mv(vec![], PayloadExpr::Left)]),
        BTreeMap::new(),
    );
    assert_eq!(play(&s, vec![], Limits::default()).verdict, Verdict::Won);
}

#[test]
fn wrong_choice_loses_with_one_move_trace() {
    let s = Strategy::script(
        f("(0 = 0) vv (~(0 = 0))"),
        WitnessScript::new(vec![mv(vec![], PayloadExpr::Right)]),
        BTreeMap::new(),
    );
    assert_eq!(
        play(&s, vec![], Limits::default()).verdict,
        Verdict::Lost { trace: vec![Labmove::machine(vec![], Payload::Right)] }
    );
}

#[test]
fn script_loop_reproduces_finite_search() {
    let m = f("x = 2");
    let program = vec![Instr::Loop {
        counter: "i".into(),
        from: "0".into(),
        to: None,
        body: vec![
            Instr::Query { slot: "decide".into(), constants: vec!["i".into()], bind: "d".into() },
            Instr::IfEq {
                left: "d".into(),
                right: "0".into(),
                then: vec![mv(vec![], PayloadExpr::Const("i".into())), Instr::Break],
                otherwise: vec![],
            },
        ],
    }];
    let slots = BTreeMap::from([("decide".to_string(), truth_decider(&m))]);
    let s = Strategy::script(f("EEx. x = 2"), WitnessScript::new(program), slots);
    let a = play(&s, vec![], Limits::default());
    let b = play(&fs("x = 2"), vec![], Limits::default());
    assert_eq!(a.run, b.run);
    assert_eq!(a.verdict, Verdict::Won);
}

#[test]
fn script_rejects_undefined_slot() {
    let s = Strategy::script(
        f("0 = 0"),
        WitnessScript::new(vec![Instr::Delegate { network: Network::Slot { name: "nope".into(), constants: vec![] } }]),
        BTreeMap::new(),
    );
    assert_eq!(s.validate(), Err(StrategyError::UndefinedSlot("nope".into())));
}

#[test]
fn delegated_modus_ponens_network() {
    let slots = BTreeMap::from([("a".to_string(), Strategy::Axiom8), ("mp".to_string(), modus_ponens())]);
    let network = Network::Compose {
        provider: Box::new(Network::Slot { name: "a".into(), constants: vec![] }),
        consumer: Box::new(Network::Slot { name: "mp".into(), constants: vec![] }),
    };
    let s = Strategy::script(f("EEy. y = 3'"), WitnessScript::new(vec![Instr::Delegate { network }]), slots);
    assert_eq!(machine_moves(&play(&s, vec![], Limits::default())), vec![Labmove::machine(vec![], Payload::Const(4))]);
}

#[test]
fn timed_environment_move_lands_at_its_tick() {
    let s = fs("x = w + w");
    let game = s.game().unwrap();
    let mut driver = ScriptedEnv::new(vec![TimedMove { mv: env(vec![], 2), at_tick: Some(5) }]);
    let o = simulate(&s, &game, &Oracle::new(32), &mut driver, &Limits::default()).unwrap();
    assert_eq!(o.history[1].step, 5);
    assert_eq!(machine_moves(&o), vec![Labmove::machine(vec![], Payload::Const(4))]);
}

#[test]
fn histories_satisfy_the_predicate() {
    let x = Strategy::Axiom8.game().unwrap();
    assert!(history_predicate(&vec![], &x, &x, &[]));
    let o = play(&Strategy::Axiom8, vec![env(vec![], 3)], Limits::default());
    let after_env = &o.history[..2];
    assert!(history_predicate(&after_env.to_vec(), &x, &f("EEy. y = 3'"), &[]));
    assert!(history_predicate(&after_env.to_vec(), &x, &f("EEy. y = c'"), &[3]));
    assert!(!history_predicate(&after_env.to_vec(), &x, &f("EEy. y = 4'"), &[]));
    assert!(history_predicate(&o.history, &x, &f("4 = 3'"), &[]));
}

#[test]
fn replay_is_deterministic() {
    let s = is("x * x = 16");
    let a = play(&s, vec![], Limits::default());
    let b = play(&s, vec![], Limits::default());
    assert_eq!(a, b);
}

#[test]
fn strategies_round_trip_through_json() {
    let s = Strategy::compose(Strategy::Axiom8, modus_ponens());
    let text = serde_json::to_string(&s).unwrap();
    let back: Strategy = serde_json::from_str(&text).unwrap();
    assert_eq!(s, back);
}
