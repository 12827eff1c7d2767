//! Cantor pairing and the identity ∃z₁∃z₂ T(m, y, z₁, z₂) ↔ ∃z T(m, y, (z)₁, (z)₂),
//! checked by brute force for every corpus machine on small inputs.

use clarith::games::{corpus, pair, proj1, proj2, turing_t};

const MAX: u64 = 40;

fn main() {
    println!("pair(a, b) for a, b < 6:");
    for a in 0..6 {
        let row: Vec<String> = (0..6).map(|b| format!("{:>3}", pair(a, b))).collect();
        println!("  {}", row.join(""));
    }
    let z = pair(17, 4);
    println!("pair(17, 4) = {z}, projections ({}, {})\n", proj1(z), proj2(z));

    let zmax = pair(MAX, MAX);
    for m in corpus() {
        let mut agree = 0;
        let mut holds = 0;
        for y in 0..=MAX {
            let lhs = (0..=MAX).any(|a| (0..=MAX).any(|b| turing_t(m, y, a, b)));
            let rhs = (0..=zmax).filter(|&z| proj1(z) <= MAX && proj2(z) <= MAX).any(|z| turing_t(m, y, proj1(z), proj2(z)));
            agree += u64::from(lhs == rhs);
            holds += u64::from(lhs);
        }
        println!("{:<15} {agree}/{} inputs agree, {holds} halt within {MAX} steps", m.name, MAX + 1);
    }
}
