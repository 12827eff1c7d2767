//! Constructivization turns a classical ∃xF into ⊔xF by searching for x with
//! the truth oracle. That works when some F(n) is settled true within the
//! bound, and stalls when the truth of F(n) itself is out of reach.

use clarith::games::Oracle;
use clarith::proofs::{extract, load_proof, Proof, SystemId};
use clarith::strategies::{simulate, Limits, ScriptedEnv};
use clarith::syntax::Player;

fn run(title: &str, proof: &Proof) {
    let s = extract(proof, SystemId::CLA10).unwrap().strategy;
    let goal = proof.conclusion().unwrap();
    let o = simulate(&s, goal, &Oracle::new(32), &mut ScriptedEnv::default(), &Limits::default()).unwrap();
    let moves: Vec<String> = o.run.iter().filter(|m| m.player == Player::Machine).map(|m| m.payload.to_string()).collect();
    println!("{title}\n  goal    {goal}\n  moves   [{}]\n  verdict {}", moves.join(", "), o.verdict.label());
    if let Some(note) = &o.stall {
        println!("  note    {note}");
    }
    println!();
}

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    run("halting step of the copy machine", &load_proof(dir.join("constr_halting.json")).unwrap());

    // F(x) = (x = 0 ∧ S) ∨ (x = 1 ∧ ¬S) where S asks whether a looping
    // machine ever halts. ∃xF is classically true, but no search can tell
    // which x works.
    let text = r#"{"root": "goal", "nodes": [
        {"id": "ex", "rule": "LC", "witness": [],
         "sentence": "Ex. (x = 0 & (Ez. Et. T(3, 0, z, t))) v (x = 1 & ~(Ez. Et. T(3, 0, z, t)))"},
        {"id": "goal", "rule": "CONSTR", "premises": ["ex"], "var": "x",
         "matrix": "(x = 0 & (Ez. Et. T(3, 0, z, t))) v (x = 1 & ~(Ez. Et. T(3, 0, z, t)))",
         "sentence": "EEx. (x = 0 & (Ez. Et. T(3, 0, z, t))) v (x = 1 & ~(Ez. Et. T(3, 0, z, t)))"}]}"#;
    run("a witness that depends on an undecided sentence", &clarith::proofs::parse_proof(text).unwrap());
}
