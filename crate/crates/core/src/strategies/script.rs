//! Witness scripts: a small strategy language for LC steps.
//!
//! Terms and formulas inside a script are written in the concrete grammar
//! and may mention script variables, bound by `wait_for`, `query` and loop
//! counters. Every instruction costs one step; truth checks also cost the
//! oracle's work, and a query costs the steps of the simulated slot.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::transducer::{boxed_clone, Step, Transducer};
use super::{Strategy, StrategyError};
use crate::games::{Oracle, Truth3};
use crate::syntax::{parse, parse_term, Formula, Labmove, OccurrencePath, Payload, Term};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PayloadExpr {
    Left,
    Right,
    Const(String),
}

/// A network of strategies to hand the rest of the play to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Network {
    Slot {
        name: String,
        #[serde(default)]
        constants: Vec<String>,
    },
    Compose {
        provider: Box<Network>,
        consumer: Box<Network>,
    },
    Copycat {
        game: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Instr {
    /// Waits for an environment move at `at`; binds its constant (left = 0, right = 1).
    WaitFor {
        at: OccurrencePath,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bind: Option<String>,
    },
    Move {
        at: OccurrencePath,
        payload: PayloadExpr,
    },
    /// Simulates a slot on its game with the given closure constants until
    /// it moves at the root, and binds that move.
    Query {
        slot: String,
        #[serde(default)]
        constants: Vec<String>,
        bind: String,
    },
    IfTruth {
        formula: String,
        then: Vec<Instr>,
        #[serde(default, rename = "else")]
        otherwise: Vec<Instr>,
    },
    IfEq {
        left: String,
        right: String,
        then: Vec<Instr>,
        #[serde(default, rename = "else")]
        otherwise: Vec<Instr>,
    },
    /// Counts from `from` to `to` inclusive, or without end.
    Loop {
        counter: String,
        from: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        to: Option<String>,
        body: Vec<Instr>,
    },
    Break,
    Delegate {
        network: Network,
    },
    Retire,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessScript {
    pub program: Vec<Instr>,
}

impl WitnessScript {
    pub fn new(program: Vec<Instr>) -> Self {
        WitnessScript { program }
    }
}

#[derive(Debug, Clone)]
enum CPayload {
    Left,
    Right,
    Const(Term),
}

#[derive(Debug, Clone)]
enum CNetwork {
    Slot(String, Vec<Term>),
    Compose(Box<CNetwork>, Box<CNetwork>),
    Copycat(Formula),
}

#[derive(Debug, Clone)]
enum Op {
    WaitFor(OccurrencePath, Option<String>),
    Move(OccurrencePath, CPayload),
    Query(String, Vec<Term>, String),
    IfTruth(Formula, usize),
    IfEq(Term, Term, usize),
    Set(String, Term),
    LoopTest(String, Option<Term>, usize),
    Incr(String),
    Jump(usize),
    Delegate(CNetwork),
    Retire,
}

struct Compiler<'a> {
    slots: &'a BTreeMap<String, Strategy>,
    ops: Vec<Op>,
    breaks: Vec<Vec<usize>>,
}

fn script_err(msg: impl Into<String>) -> StrategyError {
    StrategyError::Script(msg.into())
}

impl Compiler<'_> {
    fn term(&self, s: &str) -> Result<Term, StrategyError> {
        parse_term(s).map_err(|e| script_err(format!("term {s:?}: {e}")))
    }

    fn slot(&self, name: &str) -> Result<(), StrategyError> {
        if self.slots.contains_key(name) {
            Ok(())
        } else {
            Err(StrategyError::UndefinedSlot(name.to_string()))
        }
    }

    fn network(&self, n: &Network) -> Result<CNetwork, StrategyError> {
        Ok(match n {
            Network::Slot { name, constants } => {
                self.slot(name)?;
                CNetwork::Slot(name.clone(), constants.iter().map(|c| self.term(c)).collect::<Result<_, _>>()?)
            }
            Network::Compose { provider, consumer } => {
                CNetwork::Compose(Box::new(self.network(provider)?), Box::new(self.network(consumer)?))
            }
            Network::Copycat { game } => {
                CNetwork::Copycat(parse(game).map_err(|e| script_err(format!("game {game:?}: {e}")))?)
            }
        })
    }

    fn block(&mut self, prog: &[Instr]) -> Result<(), StrategyError> {
        for i in prog {
            self.instr(i)?;
        }
        Ok(())
    }

    fn branch(&mut self, test: Op, then: &[Instr], otherwise: &[Instr]) -> Result<(), StrategyError> {
        let at = self.ops.len();
        self.ops.push(test);
        self.block(then)?;
        let jump = self.ops.len();
        self.ops.push(Op::Jump(usize::MAX));
        let else_start = self.ops.len();
        self.block(otherwise)?;
        let end = self.ops.len();
        self.ops[jump] = Op::Jump(end);
        match &mut self.ops[at] {
            Op::IfTruth(_, t) | Op::IfEq(_, _, t) => *t = else_start,
            _ => unreachable!(),
        }
        Ok(())
    }

    fn instr(&mut self, i: &Instr) -> Result<(), StrategyError> {
        match i {
            Instr::WaitFor { at, bind } => self.ops.push(Op::WaitFor(at.clone(), bind.clone())),
            Instr::Move { at, payload } => {
                let p = match payload {
                    PayloadExpr::Left => CPayload::Left,
                    PayloadExpr::Right => CPayload::Right,
                    PayloadExpr::Const(t) => CPayload::Const(self.term(t)?),
                };
                self.ops.push(Op::Move(at.clone(), p));
            }
            Instr::Query { slot, constants, bind } => {
                self.slot(slot)?;
                let cs = constants.iter().map(|c| self.term(c)).collect::<Result<_, _>>()?;
                self.ops.push(Op::Query(slot.clone(), cs, bind.clone()));
            }
            Instr::IfTruth { formula, then, otherwise } => {
                let f = parse(formula).map_err(|e| script_err(format!("formula {formula:?}: {e}")))?;
                if !f.is_elementary() {
                    return Err(StrategyError::NotElementary(f.to_string()));
                }
                self.branch(Op::IfTruth(f, usize::MAX), then, otherwise)?;
            }
            Instr::IfEq { left, right, then, otherwise } => {
                let test = Op::IfEq(self.term(left)?, self.term(right)?, usize::MAX);
                self.branch(test, then, otherwise)?;
            }
            Instr::Loop { counter, from, to, body } => {
                self.ops.push(Op::Set(counter.clone(), self.term(from)?));
                let test = self.ops.len();
                let to = to.as_deref().map(|t| self.term(t)).transpose()?;
                self.ops.push(Op::LoopTest(counter.clone(), to, usize::MAX));
                self.breaks.push(Vec::new());
                self.block(body)?;
                self.ops.push(Op::Incr(counter.clone()));
                self.ops.push(Op::Jump(test));
                let exit = self.ops.len();
                if let Op::LoopTest(_, _, e) = &mut self.ops[test] {
                    *e = exit;
                }
                for b in self.breaks.pop().expect("pushed above") {
                    self.ops[b] = Op::Jump(exit);
                }
            }
            Instr::Break => {
                let at = self.ops.len();
                self.breaks.last_mut().ok_or_else(|| script_err("break outside a loop"))?.push(at);
                self.ops.push(Op::Jump(usize::MAX));
            }
            Instr::Delegate { network } => {
                let n = self.network(network)?;
                self.ops.push(Op::Delegate(n));
            }
            Instr::Retire => self.ops.push(Op::Retire),
        }
        Ok(())
    }
}

/// Checks a script against its slots: every slot named exists, every term
/// and formula parses, every `break` sits inside a loop.
pub fn validate_script(script: &WitnessScript, slots: &BTreeMap<String, Strategy>) -> Result<(), StrategyError> {
    compile(script, slots).map(|_| ())
}

fn compile(script: &WitnessScript, slots: &BTreeMap<String, Strategy>) -> Result<Vec<Op>, StrategyError> {
    let mut c = Compiler { slots, ops: Vec::new(), breaks: Vec::new() };
    c.block(&script.program)?;
    c.ops.push(Op::Retire);
    Ok(c.ops)
}

#[derive(Debug, Clone)]
pub struct ScriptT {
    ops: Arc<Vec<Op>>,
    slots: Arc<BTreeMap<String, Strategy>>,
    oracle: Oracle,
    pc: usize,
    vars: BTreeMap<String, u64>,
    inbox: Vec<Labmove>,
    burn: u64,
    query: Option<(Box<dyn Transducer>, String)>,
    delegate: Option<Box<dyn Transducer>>,
    stall: Option<String>,
}

impl ScriptT {
    pub fn new(
        script: &WitnessScript,
        slots: &BTreeMap<String, Strategy>,
        oracle: Oracle,
    ) -> Result<Self, StrategyError> {
        Ok(ScriptT {
            ops: Arc::new(compile(script, slots)?),
            slots: Arc::new(slots.clone()),
            oracle,
            pc: 0,
            vars: BTreeMap::new(),
            inbox: Vec::new(),
            burn: 0,
            query: None,
            delegate: None,
            stall: None,
        })
    }

    fn close_term(&self, t: &Term) -> Result<u64, String> {
        let mut t = t.clone();
        for (k, v) in &self.vars {
            t = t.substitute(k, &Term::num(*v));
        }
        t.value().ok_or_else(|| format!("term {t} has unbound variables or overflows"))
    }

    fn close_formula(&self, f: &Formula) -> Formula {
        self.vars.iter().fold(f.clone(), |acc, (k, v)| acc.instantiate(k, *v))
    }

    fn network(&self, n: &CNetwork) -> Result<Strategy, String> {
        Ok(match n {
            CNetwork::Slot(name, cs) => Strategy::Instantiate {
                inner: Box::new(self.slots[name].clone()),
                constants: cs.iter().map(|c| self.close_term(c)).collect::<Result<_, _>>()?,
            },
            CNetwork::Compose(p, c) => {
                Strategy::Compose { provider: Box::new(self.network(p)?), consumer: Box::new(self.network(c)?) }
            }
            CNetwork::Copycat(g) => Strategy::Copycat { game: self.close_formula(g) },
        })
    }

    fn give_up(&mut self, why: String) -> Step {
        self.stall = Some(why);
        Step::idle()
    }

    fn exec(&mut self) -> Result<Step, String> {
        let op = self.ops[self.pc].clone();
        let next = self.pc + 1;
        match op {
            Op::WaitFor(at, bind) => {
                let Some(i) = self.inbox.iter().position(|m| m.path == at) else { return Ok(Step::idle()) };
                let m = self.inbox.remove(i);
                if let Some(b) = bind {
                    let v = match m.payload {
                        Payload::Left => 0,
                        Payload::Right => 1,
                        Payload::Const(c) => c,
                    };
                    self.vars.insert(b, v);
                }
                self.pc = next;
                Ok(Step::busy())
            }
            Op::Move(at, p) => {
                let payload = match p {
                    CPayload::Left => Payload::Left,
                    CPayload::Right => Payload::Right,
                    CPayload::Const(t) => Payload::Const(self.close_term(&t)?),
                };
                self.pc = next;
                Ok(Step::emit(Labmove::machine(at, payload)))
            }
            Op::Query(slot, cs, bind) => {
                let constants = cs.iter().map(|c| self.close_term(c)).collect::<Result<_, _>>()?;
                let s = Strategy::Instantiate { inner: Box::new(self.slots[&slot].clone()), constants };
                let t = s.start(&self.oracle).map_err(|e| e.to_string())?;
                self.query = Some((t, bind));
                Ok(Step::busy())
            }
            Op::IfTruth(f, otherwise) => {
                let g = self.close_formula(&f);
                let (t, work) = self.oracle.eval_counted(&g).map_err(|e| format!("{g}: {e}"))?;
                self.pc = match t {
                    Truth3::True => next,
                    Truth3::False => otherwise,
                    Truth3::Unknown(_) => {
                        return Err(format!("truth of {g} not settled within bound {}", self.oracle.bound))
                    }
                };
                self.burn = work;
                Ok(Step::busy())
            }
            Op::IfEq(l, r, otherwise) => {
                self.pc = if self.close_term(&l)? == self.close_term(&r)? { next } else { otherwise };
                Ok(Step::busy())
            }
            Op::Set(c, t) => {
                let v = self.close_term(&t)?;
                self.vars.insert(c, v);
                self.pc = next;
                Ok(Step::busy())
            }
            Op::LoopTest(c, to, exit) => {
                let cur = self.vars[&c];
                let done = match to {
                    Some(t) => cur > self.close_term(&t)?,
                    None => false,
                };
                self.pc = if done { exit } else { next };
                Ok(Step::busy())
            }
            Op::Incr(c) => {
                let v = self.vars.get_mut(&c).expect("loop counter is set");
                *v = v.checked_add(1).ok_or("loop counter overflows")?;
                self.pc = next;
                Ok(Step::busy())
            }
            Op::Jump(t) => {
                self.pc = t;
                Ok(Step::busy())
            }
            Op::Delegate(n) => {
                let s = self.network(&n)?;
                let mut t = s.start(&self.oracle).map_err(|e| e.to_string())?;
                let pending = std::mem::take(&mut self.inbox);
                let step = t.step(&pending);
                self.delegate = Some(t);
                Ok(step)
            }
            Op::Retire => Ok(Step::idle()),
        }
    }
}

impl Transducer for ScriptT {
    fn step(&mut self, observed: &[Labmove]) -> Step {
        if let Some(d) = self.delegate.as_mut() {
            return d.step(observed);
        }
        self.inbox.extend_from_slice(observed);
        if self.stall.is_some() {
            return Step::idle();
        }
        if self.burn > 0 {
            self.burn -= 1;
            return Step::busy();
        }
        if let Some((q, bind)) = self.query.as_mut() {
            let s = q.step(&[]);
            return match s.emit {
                Some(m) if m.path.is_root() => {
                    let v = match m.payload {
                        Payload::Left => 0,
                        Payload::Right => 1,
                        Payload::Const(c) => c,
                    };
                    let bind = bind.clone();
                    self.vars.insert(bind, v);
                    self.query = None;
                    self.pc += 1;
                    Step::busy()
                }
                Some(m) => self.give_up(format!("queried slot moved off the root: {m}")),
                None if s.quiescent => {
                    let why = q.stall().unwrap_or_else(|| "queried slot stopped without answering".into());
                    self.give_up(why)
                }
                None => Step::busy(),
            };
        }
        match self.exec() {
            Ok(s) => s,
            Err(why) => self.give_up(why),
        }
    }

    fn stall(&self) -> Option<String> {
        match &self.delegate {
            Some(d) => d.stall(),
            None => self.stall.clone(),
        }
    }

    boxed_clone!();
}
