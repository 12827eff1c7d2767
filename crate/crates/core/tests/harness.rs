use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::net::TcpStream;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clarith::games::{Oracle, State, Status, Winner};
use clarith::harness::{
    builtin, cmd_check, cmd_extract, cmd_play, cmd_verify, halting_game, spawn_server, to_jsonl, verify_exhaustive,
    LineEnv, PlayServer, RandomEnv, ScriptedEnv, SessionView, TranscriptLine, VerifyConfig,
};
use clarith::proofs::{parse_proof, SystemId};
use clarith::strategies::{Instr, Limits, PayloadExpr, Strategy, Verdict, WitnessScript};
use clarith::syntax::{developments, parse, Formula, Labmove, OccurrencePath, Payload, Player};

fn corpus(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file)
}

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

#[test]
fn check_exit_codes() {
    assert_eq!(cmd_check(&corpus("fs_two.json"), SystemId::CLA8).exit_code, 0);
    let fs9 = cmd_check(&corpus("fs_two.json"), SystemId::CLA9);
    assert_eq!(fs9.exit_code, 1);
    let json = serde_json::to_string(&fs9).unwrap();
    assert!(json.contains("RuleNotInSystem"), "{json}");
    let bad = cmd_check(&corpus("bad/malformed.json"), SystemId::CLA8);
    assert_eq!(bad.exit_code, 2);
    assert!(bad.report.is_none());
    assert_eq!(cmd_check(&corpus("no_such_file.json"), SystemId::CLA8).exit_code, 2);
}

#[test]
fn extract_output_is_byte_identical_across_runs() {
    let dir = std::env::temp_dir().join(format!("clarith-extract-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    cmd_extract(&corpus("fs_double_golden.json"), SystemId::CLA8, Some(&a)).unwrap();
    cmd_extract(&corpus("fs_double_golden.json"), SystemId::CLA8, Some(&b)).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let s: Strategy = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(s.combinator(), "finite_search");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn axiom_proof_extracts_to_the_responder() {
    let text = cmd_extract(&corpus("ax8.json"), SystemId::CLA8, None).unwrap();
    assert_eq!(serde_json::from_str::<Strategy>(&text).unwrap(), Strategy::Axiom8);
}

#[test]
fn fs_example_wins_every_behavior() {
    let p = parse_proof(&std::fs::read_to_string(corpus("fs_double_golden.json")).unwrap()).unwrap();
    let s: Strategy = serde_json::from_str(&cmd_extract(&corpus("fs_double_golden.json"), SystemId::CLA8, None).unwrap()).unwrap();
    let sum = cmd_verify(&s, p.conclusion().unwrap(), &VerifyConfig::default()).unwrap();
    assert!(sum.passed());
    assert_eq!(sum.won, sum.leaves);
    // finish at once, or pick w in 0..=8 and then finish
    assert_eq!(sum.leaves, 1 + 9);
}

#[test]
fn always_right_loses_with_a_one_move_trace() {
    // p ⊔ ¬p with p true: choosing the right disjunct loses
    let game = f("0 = 0 vv ~0 = 0");
    let s = Strategy::script(
        game.clone(),
        WitnessScript::new(vec![Instr::Move { at: OccurrencePath::root(), payload: PayloadExpr::Right }]),
        BTreeMap::new(),
    );
    let sum = cmd_verify(&s, &game, &VerifyConfig::default()).unwrap();
    assert!(!sum.passed());
    assert_eq!(sum.lost_trace.unwrap(), vec![Labmove::machine(vec![], Payload::Right)]);
}

#[test]
fn is_with_false_antecedent_never_moves_and_holds_a_won_position() {
    // 2w + 1 = x + x has no solution, so the search never ends
    let m = f("x + x = w + w + 1");
    let is = Strategy::infinite_search(clarith::strategies::truth_decider(&m), m.clone(), "x");
    let game = f("AAw. ((Ex. x + x = w + w + 1) -> EEx. x + x = w + w + 1)");
    let limits = Limits { max_steps: 2_000, max_moves: 100 };
    let o = clarith::strategies::simulate(
        &is,
        &game,
        &Oracle::new(32),
        &mut ScriptedEnv::new([Labmove::env(vec![], Payload::Const(3))]),
        &limits,
    )
    .unwrap();
    assert_eq!(o.run, vec![Labmove::env(vec![], Payload::Const(3))]);
    match o.verdict {
        Verdict::Stalled { provisional, .. } => assert_eq!(provisional.winner, Winner::Machine),
        other => panic!("{other:?}"),
    }
    let sum = cmd_verify(&is, &game, &VerifyConfig { limits, ..VerifyConfig::default() }).unwrap();
    assert_eq!(sum.lost, 0);
}

#[test]
fn verify_refuses_a_strategy_for_another_game() {
    assert!(cmd_verify(&Strategy::Axiom8, &f("EEx. x = 0"), &VerifyConfig::default()).is_err());
}

/// Environment behaviors against a machine that never moves: finish now, or
/// make one of the available moves and continue, up to `depth` moves.
fn leaf_oracle(game: &Formula, depth: usize, range: std::ops::RangeInclusive<u64>) -> usize {
    if depth == 0 {
        return 1;
    }
    let mut n = 1;
    for d in developments(game, Player::Environment, "c").unwrap() {
        let fresh = d.result.free_vars_ordered().contains(&"c".to_string());
        if fresh {
            for c in range.clone() {
                n += leaf_oracle(&d.result.instantiate("c", c), depth - 1, range.clone());
            }
        } else {
            n += leaf_oracle(&d.result, depth - 1, range.clone());
        }
    }
    n
}

#[test]
fn exhaustive_leaf_count_matches_direct_enumeration() {
    for (src, depth, hi) in [
        ("AAx. x = x", 3, 8),
        ("AAx. AAy. x = y", 3, 4),
        ("(0 = 0 && 0 = 1) && AAx. x = 0", 3, 3),
        ("(EEx. x = 0) -> (AAy. y = y && 0 = 0)", 2, 5),
        ("0 = 0", 3, 8),
    ] {
        let game = f(src);
        let cfg = VerifyConfig { depth, range: 0..=hi, ..VerifyConfig::default() };
        let sum = verify_exhaustive(&Strategy::silent(game.clone()), &game, &cfg).unwrap();
        assert_eq!(sum.leaves, leaf_oracle(&game, depth, 0..=hi), "{src}");
    }
}

#[test]
fn random_driver_is_reproducible() {
    let (s, game) = builtin("axiom8").unwrap();
    let run = |seed| {
        to_jsonl(&cmd_play(&s, &game, 32, &mut RandomEnv::new(seed, 3, 0..=50), &Limits::default()).unwrap())
    };
    assert_eq!(run(7), run(7));
    let distinct: std::collections::BTreeSet<String> = (0..20).map(run).collect();
    assert!(distinct.len() > 1);
}

#[test]
fn axiom8_transcript() {
    let (s, game) = builtin("axiom8").unwrap();
    let t = cmd_play(&s, &game, 32, &mut ScriptedEnv::new([Labmove::env(vec![], Payload::Const(3))]), &Limits::default())
        .unwrap();
    let moves: Vec<&Labmove> = t
        .iter()
        .filter_map(|l| match l {
            TranscriptLine::Move { mv, .. } => Some(mv),
            _ => None,
        })
        .collect();
    assert_eq!(moves, vec![&Labmove::env(vec![], Payload::Const(3)), &Labmove::machine(vec![], Payload::Const(4))]);
    assert!(matches!(t.last(), Some(TranscriptLine::End { verdict: Verdict::Won, .. })));
    let text = to_jsonl(&t);
    let back: Vec<TranscriptLine> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(back, t);
}

#[test]
fn halting_transcript_waits_for_the_machine_code() {
    let (s, game) = builtin("halting").unwrap();
    assert!(game.same_game(&halting_game()));
    let t = cmd_play(&s, &game, 32, &mut ScriptedEnv::new([Labmove::env(vec![], Payload::Const(7))]), &Limits::default())
        .unwrap();
    let text = to_jsonl(&t);
    // the first move is the environment's; the machine only answers afterwards
    let first_move = text.lines().nth(1).unwrap();
    assert!(first_move.contains("environment"), "{first_move}");
    assert!(matches!(t.last(), Some(TranscriptLine::End { verdict: Verdict::Won, .. })));
}

#[test]
fn script_replay_is_deterministic() {
    let (s, game) = builtin("halting").unwrap();
    let run = || {
        to_jsonl(
            &cmd_play(&s, &game, 32, &mut ScriptedEnv::new([Labmove::env(vec![], Payload::Const(9))]), &Limits::default())
                .unwrap(),
        )
    };
    assert_eq!(run(), run());
}

#[test]
fn line_driver_reads_moves_and_reports_states() {
    let (s, game) = builtin("axiom8").unwrap();
    let input = b"{\"player\":\"environment\",\"path\":[],\"payload\":{\"const\":3}}\n\n".to_vec();
    let mut output = Vec::new();
    let t = cmd_play(&s, &game, 32, &mut LineEnv::new(&input[..], &mut output), &Limits::default()).unwrap();
    assert!(matches!(t.last(), Some(TranscriptLine::End { verdict: Verdict::Won, .. })));
    let states: Vec<State> = String::from_utf8(output).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(states.len(), 2);
    assert!(states[1].current_ast.same_game(&f("4 = 3'")));
}

fn body<T: serde::de::DeserializeOwned>(r: &clarith::harness::Response) -> T {
    serde_json::from_str(&r.body).unwrap()
}

#[test]
fn server_create_list_close() {
    let srv = PlayServer::new(Limits::default());
    assert_eq!(srv.handle("GET", "/sessions", "").body, "[]");
    let r = srv.handle("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'", "strategy": "axiom8"}"#);
    assert_eq!(r.status, 201);
    let v: SessionView = body(&r);
    let list: Vec<serde_json::Value> = body(&srv.handle("GET", "/sessions", ""));
    assert_eq!(list.len(), 1);
    assert_eq!(srv.handle("DELETE", &format!("/sessions/{}", v.id), "").status, 200);
    assert_eq!(srv.handle("GET", &format!("/sessions/{}", v.id), "").status, 404);
}

#[test]
fn server_plays_axiom8() {
    let srv = PlayServer::new(Limits::default());
    let v: SessionView = body(&srv.handle("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'", "strategy": "axiom8"}"#));
    let mv = serde_json::to_string(&Labmove::env(vec![], Payload::Const(3))).unwrap();
    let after: SessionView = body(&srv.handle("POST", &format!("/sessions/{}/move", v.id), &mv));
    assert_eq!(after.state.run.last(), Some(&Labmove::machine(vec![], Payload::Const(4))));
    let adj: serde_json::Value = body(&srv.handle("POST", &format!("/sessions/{}/adjudicate", v.id), ""));
    assert_eq!(adj["winner"], "machine");
}

#[test]
fn server_illegal_move_leaves_session_intact() {
    let srv = PlayServer::new(Limits::default());
    let v: SessionView = body(&srv.handle("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'", "strategy": "axiom8"}"#));
    let bad = serde_json::to_string(&Labmove::env(vec![], Payload::Left)).unwrap();
    let r = srv.handle("POST", &format!("/sessions/{}/move", v.id), &bad);
    assert_eq!(r.status, 409);
    let err: serde_json::Value = body(&r);
    assert_eq!(err["kind"], "illegal_move");
    let now: SessionView = body(&srv.handle("GET", &format!("/sessions/{}", v.id), ""));
    assert_eq!(now, v);
    assert_eq!(now.state.status, Status::Open);
}

#[test]
fn server_sessions_are_isolated() {
    let srv = PlayServer::new(Limits::default());
    let a: SessionView = body(&srv.handle("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'", "strategy": "axiom8"}"#));
    let b: SessionView = body(&srv.handle("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'"}"#));
    let env = |c| serde_json::to_string(&Labmove::env(vec![], Payload::Const(c))).unwrap();
    srv.handle("POST", &format!("/sessions/{}/move", a.id), &env(5));
    srv.handle("POST", &format!("/sessions/{}/move", b.id), &env(9));
    let mach = serde_json::to_string(&Labmove::machine(vec![], Payload::Const(10))).unwrap();
    srv.handle("POST", &format!("/sessions/{}/move", b.id), &mach);
    let a: SessionView = body(&srv.handle("GET", &format!("/sessions/{}", a.id), ""));
    let b: SessionView = body(&srv.handle("GET", &format!("/sessions/{}", b.id), ""));
    assert_eq!(a.state.run, vec![Labmove::env(vec![], Payload::Const(5)), Labmove::machine(vec![], Payload::Const(6))]);
    assert_eq!(b.state.run, vec![Labmove::env(vec![], Payload::Const(9)), Labmove::machine(vec![], Payload::Const(10))]);
}

#[test]
fn server_reports_unknown_distinctly() {
    let srv = PlayServer::new(Limits::default());
    let v: SessionView = body(&srv.handle("POST", "/sessions", r#"{"formula": "Ex. x = 50", "bound": 8}"#));
    let adj: serde_json::Value = body(&srv.handle("POST", &format!("/sessions/{}/adjudicate", v.id), ""));
    assert_eq!(adj["winner"], serde_json::to_value(Winner::Unknown).unwrap());
}

#[test]
fn server_speaks_http() {
    let handle = spawn_server(Arc::new(PlayServer::default()), 0, 2).unwrap();
    let request = |method: &str, path: &str, body: &str| {
        let mut s = TcpStream::connect(handle.addr).unwrap();
        write!(
            s,
            "{method} {path} HTTP/1.1\r\nHost: x\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
            body.len()
        )
        .unwrap();
        let mut out = String::new();
        s.read_to_string(&mut out).unwrap();
        out
    };
    let created = request("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'", "strategy": "axiom8"}"#);
    assert!(created.starts_with("HTTP/1.1 201"), "{created}");
    let listed = request("GET", "/sessions", "");
    assert!(listed.contains("\"id\":0"), "{listed}");
    handle.shutdown();
}
