//! Search strategies: the two LOOP procedures, constructivization and the
//! induction cut chain.

use super::compose::{ComposeMode, ComposeT};
use super::transducer::{boxed_clone, InstantiateT, Step, Transducer};
use super::Strategy;
use crate::games::{Oracle, Truth3};
use crate::syntax::{Formula, Labmove, OccurrencePath, Payload, Term};

/// Takes constants for the leading `⊓` block from root moves, in order.
fn collect_constants(observed: &[Labmove], want: usize, into: &mut Vec<u64>) -> Vec<Labmove> {
    let mut rest = Vec::new();
    for m in observed {
        match m.payload {
            Payload::Const(c) if into.len() < want && m.path.is_root() => into.push(c),
            _ => rest.push(m.clone()),
        }
    }
    rest
}

/// Procedure LOOP: for `i = 0, 1, …` ask the decider about `F(i)` and name
/// the first `i` it puts on the left.
#[derive(Debug, Clone)]
pub struct SearchT {
    decider: Strategy,
    oracle: Oracle,
    var: String,
    /// Closure variables of the decider, `var` among them.
    decider_vars: Vec<String>,
    /// Closure variables of the conclusion.
    outer_vars: Vec<String>,
    target: OccurrencePath,
    consts: Vec<u64>,
    i: u64,
    sim: Option<Box<dyn Transducer>>,
    done: bool,
    stall: Option<String>,
}

impl SearchT {
    /// `target` is the root for FS and the consequent for IS.
    pub fn new(decider: Strategy, matrix: &Formula, var: &str, target: OccurrencePath, oracle: Oracle) -> Self {
        let decider_vars = matrix.free_vars_ordered();
        let outer_vars = decider_vars.iter().filter(|v| *v != var).cloned().collect();
        SearchT {
            decider,
            oracle,
            var: var.to_string(),
            decider_vars,
            outer_vars,
            target,
            consts: Vec::new(),
            i: 0,
            sim: None,
            done: false,
            stall: None,
        }
    }

    fn give_up(&mut self, why: String) -> Step {
        self.stall = Some(why);
        self.sim = None;
        Step::idle()
    }
}

impl Transducer for SearchT {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        collect_constants(observed, self.outer_vars.len(), &mut self.consts);
        if self.done || self.stall.is_some() || self.consts.len() < self.outer_vars.len() {
            return Step::idle();
        }
        if self.sim.is_none() {
            let values: Vec<u64> = self
                .decider_vars
                .iter()
                .map(|v| {
                    if *v == self.var {
                        self.i
                    } else {
                        self.consts[self.outer_vars.iter().position(|w| w == v).expect("closure variable")]
                    }
                })
                .collect();
            match self.decider.start(&self.oracle) {
                Ok(t) => self.sim = Some(Box::new(InstantiateT::new(t, values))),
                Err(e) => return self.give_up(format!("decider failed to start: {e}")),
            }
        }
        let sim = self.sim.as_mut().expect("started above");
        let s = sim.step(&[]);
        match s.emit {
            Some(Labmove { path, payload: Payload::Left, .. }) if path.is_root() => {
                self.done = true;
                self.sim = None;
                Step::emit(Labmove::machine(self.target.clone(), Payload::Const(self.i)))
            }
            Some(Labmove { path, payload: Payload::Right, .. }) if path.is_root() => {
                self.sim = None;
                match self.i.checked_add(1) {
                    Some(n) => {
                        self.i = n;
                        Step::busy()
                    }
                    None => self.give_up("search ran out of numbers".into()),
                }
            }
            Some(other) => self.give_up(format!("decider made the unexpected move {other} at {}", self.i)),
            None if s.quiescent => {
                let why = sim
                    .stall()
                    .unwrap_or_else(|| format!("decider stopped without choosing at {} = {}", self.var, self.i));
                self.give_up(why)
            }
            None => Step::busy(),
        }
    }

    fn stall(&self) -> Option<String> {
        self.stall.clone()
    }

    boxed_clone!();
}

/// Scans `n = 0, 1, …` with the truth oracle and names the first `n` with `F(n)` true.
#[derive(Debug, Clone)]
pub struct ConstructivizationT {
    matrix: Formula,
    var: String,
    oracle: Oracle,
    n: u64,
    burn: u64,
    pending: Option<Truth3>,
    done: bool,
    stall: Option<String>,
}

impl ConstructivizationT {
    pub fn new(matrix: Formula, var: &str, oracle: Oracle) -> Self {
        ConstructivizationT {
            matrix,
            var: var.to_string(),
            oracle,
            n: 0,
            burn: 0,
            pending: None,
            done: false,
            stall: None,
        }
    }
}

impl Transducer for ConstructivizationT {
    fn step(&mut self, _: &[Labmove]) -> Step {
        if self.done || self.stall.is_some() {
            return Step::idle();
        }
        if let Some(t) = self.pending {
            if self.burn > 0 {
                self.burn -= 1;
                return Step::busy();
            }
            self.pending = None;
            return match t {
                Truth3::True => {
                    self.done = true;
                    Step::emit(Labmove::machine(OccurrencePath::root(), Payload::Const(self.n)))
                }
                Truth3::False => match self.n.checked_add(1) {
                    Some(n) => {
                        self.n = n;
                        Step::busy()
                    }
                    None => {
                        self.stall = Some("search ran out of numbers".into());
                        Step::idle()
                    }
                },
                Truth3::Unknown(_) => {
                    self.stall = Some(format!(
                        "truth of {} not settled within bound {}",
                        self.matrix.substitute(&self.var, &Term::num(self.n)).expect("closed"),
                        self.oracle.bound
                    ));
                    Step::idle()
                }
            };
        }
        match self.oracle.eval_counted(&self.matrix.instantiate(&self.var, self.n)) {
            Ok((t, work)) => {
                self.pending = Some(t);
                self.burn = work;
                Step::busy()
            }
            Err(e) => {
                self.stall = Some(e.to_string());
                Step::idle()
            }
        }
    }

    fn stall(&self) -> Option<String> {
        self.stall.clone()
    }

    boxed_clone!();
}

/// Longest cut chain the induction strategy will build.
pub const MAX_CHAIN: u64 = 1_000_000;

/// Waits for the closure constants, `c` among them for the induction
/// variable, then plays `F(c)` as base cut with `step@0, …, step@(c−1)`.
#[derive(Debug, Clone)]
pub struct InductionT {
    base: Strategy,
    step_strategy: Strategy,
    matrix: Formula,
    var: String,
    oracle: Oracle,
    names: Vec<String>,
    consts: Vec<u64>,
    chain: Option<Box<dyn Transducer>>,
    stall: Option<String>,
}

impl InductionT {
    pub fn new(base: Strategy, step: Strategy, matrix: Formula, var: &str, oracle: Oracle) -> Self {
        let names = matrix.free_vars_ordered();
        InductionT {
            base,
            step_strategy: step,
            matrix,
            var: var.to_string(),
            oracle,
            names,
            consts: Vec::new(),
            chain: None,
            stall: None,
        }
    }

    fn build(&self) -> Result<Box<dyn Transducer>, String> {
        let value = |v: &String| self.consts[self.names.iter().position(|w| w == v).expect("closure variable")];
        let c = if self.names.contains(&self.var) { value(&self.var) } else { 0 };
        if c > MAX_CHAIN {
            return Err(format!("induction chain of length {c} exceeds {MAX_CHAIN}"));
        }
        let base_vars = self.matrix.instantiate(&self.var, 0).free_vars_ordered();
        let next = self.matrix.substitute(&self.var, &Term::succ(Term::var(self.var.clone()))).map_err(|e| e.to_string())?;
        let step_vars = Formula::implies(self.matrix.clone(), next).free_vars_ordered();
        let base = self.base.start(&self.oracle).map_err(|e| e.to_string())?;
        let mut chain: Box<dyn Transducer> = Box::new(InstantiateT::new(base, base_vars.iter().map(value).collect()));
        for j in 0..c {
            let consts = step_vars.iter().map(|v| if *v == self.var { j } else { value(v) }).collect();
            let step = self.step_strategy.start(&self.oracle).map_err(|e| e.to_string())?;
            chain = Box::new(ComposeT::new(ComposeMode::Cut, chain, Box::new(InstantiateT::new(step, consts))));
        }
        Ok(chain)
    }
}

impl Transducer for InductionT {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        if let Some(chain) = self.chain.as_mut() {
            return chain.step(observed);
        }
        if self.stall.is_some() {
            return Step::idle();
        }
        let rest = collect_constants(observed, self.names.len(), &mut self.consts);
        if self.consts.len() < self.names.len() {
            return Step::idle();
        }
        match self.build() {
            Ok(mut chain) => {
                let s = chain.step(&rest);
                self.chain = Some(chain);
                s
            }
            Err(e) => {
                self.stall = Some(e);
                Step::idle()
            }
        }
    }

    fn stall(&self) -> Option<String> {
        self.chain.as_ref().and_then(|c| c.stall()).or_else(|| self.stall.clone())
    }

    boxed_clone!();
}
