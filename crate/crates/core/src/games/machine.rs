//! Register machines realizing the halting predicate `T(m, y, z, t)`, plus
//! Cantor pairing.
//!
//! A machine reads its input from register 1; every other register starts at
//! zero. Each executed instruction is one step, so a machine whose first
//! instruction is `halt` halts at step 1. Running off the end of the program
//! halts with the content of register 0.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Instr {
    /// Increment register.
    Inc(usize),
    /// If the register is zero jump to the target, otherwise decrement it and fall through.
    DecJz(usize, usize),
    /// Halt, outputting the register.
    Halt(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MachineCode {
    pub name: String,
    pub program: Vec<Instr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RunOutcome {
    Halted { step: u64, output: u64 },
    StillRunning,
}

pub const INPUT_REGISTER: usize = 1;

impl MachineCode {
    pub fn new(name: impl Into<String>, program: Vec<Instr>) -> Self {
        MachineCode { name: name.into(), program }
    }

    fn registers(&self) -> usize {
        self.program
            .iter()
            .map(|i| match *i {
                Instr::Inc(r) | Instr::DecJz(r, _) | Instr::Halt(r) => r,
            })
            .max()
            .unwrap_or(0)
            .max(INPUT_REGISTER)
            + 1
    }
}

/// Simulates `m` on `input` for at most `max_steps` steps.
pub fn rm_run(m: &MachineCode, input: u64, max_steps: u64) -> RunOutcome {
    let mut regs = vec![0u64; m.registers()];
    regs[INPUT_REGISTER] = input;
    let mut pc = 0usize;
    let mut step = 0u64;
    while step < max_steps {
        step += 1;
        match m.program.get(pc) {
            None => return RunOutcome::Halted { step, output: regs[0] },
            Some(Instr::Halt(r)) => return RunOutcome::Halted { step, output: regs[*r] },
            Some(Instr::Inc(r)) => {
                regs[*r] = regs[*r].saturating_add(1);
                pc += 1;
            }
            Some(Instr::DecJz(r, target)) => {
                if regs[*r] == 0 {
                    pc = *target;
                } else {
                    regs[*r] -= 1;
                    pc += 1;
                }
            }
        }
    }
    RunOutcome::StillRunning
}

/// `T(m, y, z, t)`: `m` on input `y` halts exactly at step `z` with output `t`.
pub fn turing_t(m: &MachineCode, y: u64, z: u64, t: u64) -> bool {
    z > 0 && rm_run(m, y, z) == (RunOutcome::Halted { step: z, output: t })
}

fn seq(n: usize, i: Instr) -> Vec<Instr> {
    vec![i; n]
}

/// The ten-machine corpus; a machine's code is its index here.
pub fn corpus() -> &'static [MachineCode] {
    use std::sync::OnceLock;
    static CORPUS: OnceLock<Vec<MachineCode>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        use Instr::*;
        // r9 is never written, so DecJz(9, l) is an unconditional jump
        let mut constant7 = seq(7, Inc(0));
        constant7.push(Halt(0));
        let mut countdown12 = seq(12, Inc(3));
        countdown12.extend([DecJz(3, 15), Inc(0), DecJz(9, 12), Halt(0)]);
        let mut copy20 = seq(20, Inc(1));
        copy20.extend([DecJz(1, 23), Inc(0), DecJz(9, 20), Halt(0)]);
        vec![
            MachineCode::new("halt", vec![Halt(0)]),
            MachineCode::new("identity", vec![DecJz(1, 3), Inc(0), DecJz(2, 0), Halt(0)]),
            MachineCode::new("double", vec![DecJz(1, 4), Inc(0), Inc(0), DecJz(2, 0), Halt(0)]),
            MachineCode::new("tight-loop", vec![DecJz(9, 0)]),
            MachineCode::new("count-forever", vec![Inc(2), DecJz(9, 0)]),
            MachineCode::new("constant-7", constant7),
            MachineCode::new(
                "halt-if-even",
                vec![DecJz(1, 3), DecJz(1, 4), DecJz(9, 0), Halt(0), DecJz(9, 4)],
            ),
            MachineCode::new("countdown-12", countdown12),
            MachineCode::new("wait-for-input", vec![DecJz(1, 0), Halt(0)]),
            MachineCode::new("copy-20", copy20),
        ]
    })
}

/// Decodes a machine number: corpus indices denote corpus machines, every
/// other number denotes the machine that loops forever.
pub fn machine_for_code(code: u64) -> MachineCode {
    usize::try_from(code)
        .ok()
        .and_then(|i| corpus().get(i))
        .cloned()
        .unwrap_or_else(|| MachineCode::new("loop", vec![Instr::DecJz(0, 0)]))
}

/// Cantor pairing.
pub fn pair(a: u64, b: u64) -> u64 {
    let s = a + b;
    s * (s + 1) / 2 + b
}

fn unpair(z: u64) -> (u64, u64) {
    // largest w with w(w+1)/2 <= z
    let z128 = z as u128;
    let mut w = (((8 * z128 + 1) as f64).sqrt() as u128).saturating_sub(1) / 2;
    while (w + 1) * (w + 2) / 2 <= z128 {
        w += 1;
    }
    while w * (w + 1) / 2 > z128 {
        w -= 1;
    }
    let b = z128 - w * (w + 1) / 2;
    ((w - b) as u64, b as u64)
}

/// `(z)₁`.
pub fn proj1(z: u64) -> u64 {
    unpair(z).0
}

/// `(z)₂`.
pub fn proj2(z: u64) -> u64 {
    unpair(z).1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halt_program_halts_at_step_one() {
        let m = MachineCode::new("h", vec![Instr::Halt(0)]);
        assert_eq!(rm_run(&m, 7, 10), RunOutcome::Halted { step: 1, output: 0 });
        assert_eq!(rm_run(&m, 7, 0), RunOutcome::StillRunning);
    }

    #[test]
    fn identity_copies_input() {
        let id = &corpus()[1];
        for y in 0..20 {
            match rm_run(id, y, 1_000) {
                RunOutcome::Halted { step, output } => {
                    assert_eq!(output, y);
                    assert_eq!(step, 3 * y + 2);
                }
                RunOutcome::StillRunning => panic!("identity must halt"),
            }
        }
    }

    #[test]
    fn tight_loop_never_halts() {
        for steps in [0, 1, 10, 10_000] {
            assert_eq!(rm_run(&corpus()[3], 0, steps), RunOutcome::StillRunning);
        }
        assert_eq!(rm_run(&machine_for_code(99), 0, 1000), RunOutcome::StillRunning);
    }

    #[test]
    fn halting_predicate() {
        let id = &corpus()[1];
        assert!(turing_t(id, 2, 8, 2));
        assert!(!turing_t(id, 2, 7, 2));
        assert!(!turing_t(id, 2, 8, 3));
        assert!(!turing_t(&corpus()[0], 0, 0, 0));
        // functional in (z, t)
        let hits: Vec<_> = (0..40)
            .flat_map(|z| (0..40).map(move |t| (z, t)))
            .filter(|&(z, t)| turing_t(&corpus()[2], 5, z, t))
            .collect();
        assert_eq!(hits, vec![(22, 10)]);
    }

    #[test]
    fn pairing_round_trips() {
        assert_eq!(pair(0, 0), 0);
        for a in 0..=100 {
            for b in 0..=100 {
                let z = pair(a, b);
                assert_eq!((proj1(z), proj2(z)), (a, b));
            }
        }
        for z in 0..5_000 {
            assert_eq!(pair(proj1(z), proj2(z)), z);
        }
    }
}
