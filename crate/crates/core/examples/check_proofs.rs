//! Checks every proof in the bundled corpus under the system its manifest
//! names and prints the verdict, or the first violation.
//!
//! cargo run --example check_proofs -- path/to/proof.json CLA9

use std::path::Path;

use clarith::harness::cmd_check;
use clarith::proofs::SystemId;

/// Numerals print as successor chains, which get long.
fn short(s: &str) -> String {
    match s.char_indices().nth(72) {
        Some((i, _)) => format!("{}...", &s[..i]),
        None => s.to_string(),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [file, rest @ ..] = args.as_slice() {
        let system: SystemId = rest.first().map(|s| s.parse().unwrap()).unwrap_or(SystemId::CLA8);
        let out = cmd_check(Path::new(file), system);
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        std::process::exit(out.exit_code);
    }

    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let manifest: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    for entry in manifest {
        let file = entry["file"].as_str().unwrap();
        let system: SystemId = entry["system"].as_str().unwrap().parse().unwrap();
        let out = cmd_check(&dir.join(file), system);
        let detail = match (&out.report, &out.error) {
            (Some(r), _) if r.accepted => format!("proves {}", short(r.conclusion.as_deref().unwrap_or("?"))),
            (Some(r), _) => {
                let v = &r.violations[0];
                format!("{:?} at {}: {}", v.condition, v.node.as_deref().unwrap_or("-"), v.message)
            }
            (None, e) => e.clone().unwrap_or_default(),
        };
        println!("{:<5} {:<32} exit {}  {detail}", system.to_string(), file, out.exit_code);
    }
}
