//! Extracts a strategy from a proof and plays it against every environment
//! behavior up to a depth.
//!
//! cargo run --example extract_and_verify -- corpus/ind_double.json CLA9

use std::path::{Path, PathBuf};

use clarith::harness::{cmd_verify, VerifyConfig};
use clarith::proofs::{extract, load_proof, SystemId};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (file, system) = match args.as_slice() {
        [f, s, ..] => (PathBuf::from(f), s.parse().unwrap()),
        [f] => (PathBuf::from(f), SystemId::CLA8),
        [] => (Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/fs_double_golden.json"), SystemId::CLA8),
    };
    let proof = load_proof(&file).unwrap();
    let x = match extract(&proof, system) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            std::process::exit(1);
        }
    };
    let goal = proof.conclusion().unwrap();
    println!("proof      {}", file.display());
    println!("goal       {goal}");
    println!("strategy   {} ({} nodes, {} proof nodes visited)", x.strategy.combinator(), x.strategy.size(), x.nodes_visited);

    let cfg = VerifyConfig::default();
    let sum = cmd_verify(&x.strategy, goal, &cfg).unwrap();
    println!("behaviors  {} (depth {}, constants {:?})", sum.leaves, cfg.depth, cfg.range);
    println!("won {}  lost {}  unknown {}  stalled {}  max steps {}", sum.won, sum.lost, sum.unknown, sum.stalled, sum.max_steps);
    if let Some(trace) = &sum.lost_trace {
        let t: Vec<String> = trace.iter().map(|m| m.to_string()).collect();
        println!("shortest losing run: {}", t.join(", "));
    }
    for r in sum.unknown_reasons.iter().take(3) {
        println!("unknown: {r}");
    }
}
