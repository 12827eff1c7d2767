//! Bounded three-valued truth for elementary sentences.
//!
//! Quantifiers range over `0..=bound`. A bounded search that cannot settle a
//! verdict (a universal that held on every instance tried, an existential
//! that failed on every instance tried) answers `Unknown`, so a verdict of
//! `True` or `False` never changes as the bound grows.
//!
//! An existential is only ever `True` on a witness inside the bound. Apart
//! from that, some shapes are decided exactly regardless of the bound:
//!
//! * `∃x (x = t)`, `∃x (x = t ∧ G)`, `∀x (x = t → G)` and `∀x (¬(x = t) ∨ G)` with `x` not in `t`;
//! * `∃t T(m, y, z, t)` with `t` only in the output position: run `m` for `z` steps;
//! * a block of like quantifiers over a quantifier-free matrix that is a
//!   propositional tautology (∀) or contradiction (∃) once every atom is read
//!   as its normalized polynomial difference;
//! * a single quantifier over a quantifier-free matrix whose atoms mentioning
//!   the variable are polynomial equations. Past the largest root bound every
//!   such atom is false (or identically true), so finitely many candidates decide it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::machine::{machine_for_code, rm_run, turing_t, RunOutcome};
use crate::syntax::{Formula, Quantifier, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnknownReason {
    /// A quantifier search reached the bound without settling.
    BoundExhausted,
    /// Arithmetic left the 64-bit range.
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth3 {
    True,
    False,
    Unknown(UnknownReason),
}

impl Truth3 {
    pub fn from_bool(b: bool) -> Truth3 {
        if b {
            Truth3::True
        } else {
            Truth3::False
        }
    }

    pub fn is_known(self) -> bool {
        !matches!(self, Truth3::Unknown(_))
    }

    pub fn and(self, other: Truth3) -> Truth3 {
        match (self, other) {
            (Truth3::False, _) | (_, Truth3::False) => Truth3::False,
            (Truth3::True, Truth3::True) => Truth3::True,
            (Truth3::Unknown(r), _) | (_, Truth3::Unknown(r)) => Truth3::Unknown(r),
        }
    }

    pub fn or(self, other: Truth3) -> Truth3 {
        !(!self).and(!other)
    }
}

impl std::ops::Not for Truth3 {
    type Output = Truth3;

    fn not(self) -> Truth3 {
        match self {
            Truth3::True => Truth3::False,
            Truth3::False => Truth3::True,
            u => u,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TruthError {
    #[error("formula has free variables: {}", .0.join(", "))]
    Open(Vec<String>),
    #[error("formula is not elementary")]
    NotElementary,
}

/// Largest candidate range scanned by the root-bound recognizer.
const ROOT_SCAN_CAP: u128 = 4096;
/// Most distinct propositions the tautology recognizer will enumerate.
const PROP_CAP: usize = 12;

/// Truth oracle with a quantifier bound. Also counts the work it performs
/// (atom evaluations plus simulated machine steps).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Oracle {
    pub bound: u64,
}

impl Oracle {
    pub fn new(bound: u64) -> Self {
        Oracle { bound }
    }

    pub fn eval(&self, f: &Formula) -> Result<Truth3, TruthError> {
        self.eval_counted(f).map(|(t, _)| t)
    }

    pub fn eval_counted(&self, f: &Formula) -> Result<(Truth3, u64), TruthError> {
        let free = f.free_vars_ordered();
        if !free.is_empty() {
            return Err(TruthError::Open(free));
        }
        if !f.is_elementary() {
            return Err(TruthError::NotElementary);
        }
        let mut ev = Evaluator { bound: self.bound, work: 0 };
        let t = ev.eval(f, &mut Vec::new());
        Ok((t, ev.work))
    }
}

/// Evaluates a closed elementary formula with quantifiers bounded by `bound`.
pub fn eval_elementary(f: &Formula, bound: u64) -> Result<Truth3, TruthError> {
    Oracle::new(bound).eval(f)
}

type Env = Vec<(String, u64)>;

fn lookup(env: &Env, name: &str) -> Option<u64> {
    env.iter().rev().find(|(n, _)| n == name).map(|(_, v)| *v)
}

/// `None` on overflow. Callers guarantee closedness under `env`.
fn term_value(t: &Term, env: &Env) -> Option<u64> {
    match t {
        Term::Zero => Some(0),
        Term::Numeral(n) => Some(*n),
        Term::Var(v) => lookup(env, v),
        Term::Succ(a) => term_value(a, env)?.checked_add(1),
        Term::Plus(a, b) => term_value(a, env)?.checked_add(term_value(b, env)?),
        Term::Times(a, b) => term_value(a, env)?.checked_mul(term_value(b, env)?),
    }
}

struct Evaluator {
    bound: u64,
    work: u64,
}

impl Evaluator {
    fn eval(&mut self, f: &Formula, env: &mut Env) -> Truth3 {
        match f {
            Formula::Eq(a, b) => {
                self.work += 1;
                match (term_value(a, env), term_value(b, env)) {
                    (Some(x), Some(y)) => Truth3::from_bool(x == y),
                    _ => Truth3::Unknown(UnknownReason::Overflow),
                }
            }
            Formula::Halts(h) => {
                self.work += 1;
                let vals: Option<Vec<u64>> =
                    [&h.machine, &h.input, &h.step, &h.output].iter().map(|t| term_value(t, env)).collect();
                match vals {
                    Some(v) => {
                        self.work += v[2];
                        Truth3::from_bool(turing_t(&machine_for_code(v[0]), v[1], v[2], v[3]))
                    }
                    None => Truth3::Unknown(UnknownReason::Overflow),
                }
            }
            Formula::Not(g) => !self.eval(g, env),
            Formula::And(a, b) => {
                let l = self.eval(a, env);
                if l == Truth3::False {
                    return l;
                }
                l.and(self.eval(b, env))
            }
            Formula::Or(a, b) => {
                let l = self.eval(a, env);
                if l == Truth3::True {
                    return l;
                }
                l.or(self.eval(b, env))
            }
            Formula::Implies(a, b) => {
                let l = self.eval(a, env);
                if l == Truth3::False {
                    return Truth3::True;
                }
                (!l).or(self.eval(b, env))
            }
            Formula::ForAll(x, body) => self.quantifier(true, x, body, f, env),
            Formula::Exists(x, body) => self.quantifier(false, x, body, f, env),
            _ => unreachable!("checked elementary"),
        }
    }

    fn quantifier(&mut self, universal: bool, x: &str, body: &Formula, whole: &Formula, env: &mut Env) -> Truth3 {
        if let Some(t) = self.guard(universal, x, body, env) {
            return t;
        }
        if let Some(t) = self.halting_output(universal, x, body, env) {
            return t;
        }
        if let Some(t) = self.block(universal, whole, env) {
            return t;
        }
        if let Some(t) = self.root_scan(universal, x, body, env) {
            return t;
        }
        let mut acc = Truth3::from_bool(universal);
        for v in 0..=self.bound {
            env.push((x.to_string(), v));
            let t = self.eval(body, env);
            env.pop();
            match (universal, t) {
                (true, Truth3::False) => return Truth3::False,
                (false, Truth3::True) => return Truth3::True,
                (_, Truth3::Unknown(r)) => acc = Truth3::Unknown(r),
                _ => {}
            }
        }
        match acc {
            Truth3::Unknown(r) => Truth3::Unknown(r),
            _ => Truth3::Unknown(UnknownReason::BoundExhausted),
        }
    }

    /// Guarded shapes pinning the variable to one term.
    fn guard(&mut self, universal: bool, x: &str, body: &Formula, env: &mut Env) -> Option<Truth3> {
        let pinned = |eq: &Formula| -> Option<Term> {
            match eq {
                Formula::Eq(Term::Var(v), t) | Formula::Eq(t, Term::Var(v)) if v == x && !t.mentions(x) => {
                    Some(t.clone())
                }
                _ => None,
            }
        };
        let (t, rest) = match (universal, body) {
            (false, eq @ Formula::Eq(..)) => (pinned(eq)?, None),
            (false, Formula::And(eq, g)) => (pinned(eq)?, Some(&**g)),
            (true, Formula::Implies(eq, g)) => (pinned(eq)?, Some(&**g)),
            (true, Formula::Or(neg, g)) => match &**neg {
                Formula::Not(eq) => (pinned(eq)?, Some(&**g)),
                _ => return None,
            },
            _ => return None,
        };
        self.work += 1;
        let v = term_value(&t, env)?;
        let r = match rest {
            None => Truth3::True,
            Some(g) => {
                env.push((x.to_string(), v));
                let r = self.eval(g, env);
                env.pop();
                r
            }
        };
        Some(self.witness_in_bound(universal, r, v))
    }

    /// An existential verdict `True` resting on a witness past the bound
    /// degrades to `Unknown`.
    fn witness_in_bound(&self, universal: bool, r: Truth3, witness: u64) -> Truth3 {
        if !universal && r == Truth3::True && witness > self.bound {
            Truth3::Unknown(UnknownReason::BoundExhausted)
        } else {
            r
        }
    }

    fn halting_output(&mut self, universal: bool, x: &str, body: &Formula, env: &mut Env) -> Option<Truth3> {
        let Formula::Halts(h) = body else { return None };
        if universal || h.machine.mentions(x) || h.input.mentions(x) || h.step.mentions(x) {
            return None;
        }
        if h.output != Term::var(x) {
            return None;
        }
        let m = term_value(&h.machine, env)?;
        let y = term_value(&h.input, env)?;
        let z = term_value(&h.step, env)?;
        self.work += 1 + z;
        Some(match rm_run(&machine_for_code(m), y, z) {
            RunOutcome::Halted { step, output } if step == z && z > 0 => {
                self.witness_in_bound(false, Truth3::True, output)
            }
            _ => Truth3::False,
        })
    }

    /// Tautology / contradiction over a block of like quantifiers.
    fn block(&mut self, universal: bool, whole: &Formula, env: &Env) -> Option<Truth3> {
        let want = if universal { Quantifier::ForAll } else { Quantifier::Exists };
        let mut vars = Vec::new();
        let mut matrix = whole;
        while let Some((q, x, b)) = matrix.as_quantifier() {
            if q != want {
                break;
            }
            vars.push(x.to_string());
            matrix = b;
        }
        if !quantifier_free(matrix) {
            return None;
        }
        let mut props: Vec<PropKey> = Vec::new();
        let abstracted = self.abstract_matrix(matrix, &vars, env, &mut props)?;
        if props.len() > PROP_CAP {
            return None;
        }
        let mut all_true = true;
        let mut all_false = true;
        for mask in 0u32..(1u32 << props.len()) {
            self.work += 1;
            match abstracted.eval(mask) {
                Some(true) => all_false = false,
                Some(false) => all_true = false,
                None => return None,
            }
        }
        match (universal, all_true, all_false) {
            (true, true, _) => Some(Truth3::True),
            (false, _, true) => Some(Truth3::False),
            _ => None,
        }
    }

    fn abstract_matrix(
        &mut self,
        f: &Formula,
        vars: &[String],
        env: &Env,
        props: &mut Vec<PropKey>,
    ) -> Option<Prop> {
        Some(match f {
            Formula::Eq(a, b) => {
                let mentions = vars.iter().any(|v| a.mentions(v) || b.mentions(v));
                if !mentions {
                    self.work += 1;
                    return Some(Prop::Const(term_value(a, env)? == term_value(b, env)?));
                }
                let d = Poly::of_term(a, vars, env)?.sub(&Poly::of_term(b, vars, env)?)?;
                if d.is_zero() {
                    Prop::Const(true)
                } else if d.is_nonzero_constant() {
                    Prop::Const(false)
                } else {
                    Prop::Var(intern(props, PropKey::Poly(d.normalized())))
                }
            }
            Formula::Halts(h) => {
                let terms = [&h.machine, &h.input, &h.step, &h.output];
                if vars.iter().any(|v| terms.iter().any(|t| t.mentions(v))) {
                    Prop::Var(intern(props, PropKey::Opaque(format!("{f:?}|{env:?}"))))
                } else {
                    match self.eval(f, &mut env.clone()) {
                        Truth3::True => Prop::Const(true),
                        Truth3::False => Prop::Const(false),
                        Truth3::Unknown(_) => return None,
                    }
                }
            }
            Formula::Not(g) => Prop::Not(Box::new(self.abstract_matrix(g, vars, env, props)?)),
            Formula::And(a, b) => Prop::And(
                Box::new(self.abstract_matrix(a, vars, env, props)?),
                Box::new(self.abstract_matrix(b, vars, env, props)?),
            ),
            Formula::Or(a, b) => Prop::Or(
                Box::new(self.abstract_matrix(a, vars, env, props)?),
                Box::new(self.abstract_matrix(b, vars, env, props)?),
            ),
            Formula::Implies(a, b) => Prop::Or(
                Box::new(Prop::Not(Box::new(self.abstract_matrix(a, vars, env, props)?))),
                Box::new(self.abstract_matrix(b, vars, env, props)?),
            ),
            _ => return None,
        })
    }

    /// Single quantifier over a polynomial matrix: scan up to the root bound.
    fn root_scan(&mut self, universal: bool, x: &str, body: &Formula, env: &mut Env) -> Option<Truth3> {
        if !quantifier_free(body) {
            return None;
        }
        let vars = [x.to_string()];
        let mut limit: u128 = 0;
        let mut ok = true;
        body.visit(&mut |g| match g {
            Formula::Eq(a, b) if a.mentions(x) || b.mentions(x) => {
                match Poly::of_term(a, &vars, env).zip(Poly::of_term(b, &vars, env)) {
                    Some((p, q)) => match p.sub(&q) {
                        Some(d) => match d.univariate_root_bound() {
                            Some(r) => limit = limit.max(r),
                            None => ok = false,
                        },
                        None => ok = false,
                    },
                    None => ok = false,
                }
            }
            Formula::Halts(h) if [&h.machine, &h.input, &h.step, &h.output].iter().any(|t| t.mentions(x)) => {
                ok = false
            }
            _ => {}
        });
        if !ok || limit + 2 > ROOT_SCAN_CAP {
            return None;
        }
        // every x beyond `limit` behaves like `limit + 1`
        let mut any_unknown = false;
        for v in 0..=(limit as u64 + 1) {
            env.push((x.to_string(), v));
            let t = self.eval(body, env);
            env.pop();
            match (universal, t) {
                (true, Truth3::False) => return Some(Truth3::False),
                (false, Truth3::True) => return Some(self.witness_in_bound(false, t, v)),
                (_, Truth3::Unknown(_)) => any_unknown = true,
                _ => {}
            }
        }
        if any_unknown {
            None
        } else {
            Some(Truth3::from_bool(universal))
        }
    }
}

fn quantifier_free(f: &Formula) -> bool {
    f.as_quantifier().is_none() && f.children().into_iter().all(quantifier_free)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum PropKey {
    Poly(BTreeMap<Vec<u32>, i128>),
    Opaque(String),
}

fn intern(props: &mut Vec<PropKey>, key: PropKey) -> usize {
    if let Some(i) = props.iter().position(|k| *k == key) {
        return i;
    }
    props.push(key);
    props.len() - 1
}

enum Prop {
    Const(bool),
    Var(usize),
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
}

impl Prop {
    fn eval(&self, mask: u32) -> Option<bool> {
        Some(match self {
            Prop::Const(b) => *b,
            Prop::Var(i) => (mask >> *i) & 1 == 1,
            Prop::Not(p) => !p.eval(mask)?,
            Prop::And(a, b) => a.eval(mask)? && b.eval(mask)?,
            Prop::Or(a, b) => a.eval(mask)? || b.eval(mask)?,
        })
    }
}

/// Polynomial over the named variables with integer coefficients; the key is
/// the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, i128>,
}

impl Poly {
    fn constant(arity: usize, c: i128) -> Poly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; arity], c);
        }
        Poly { arity, terms }
    }

    fn of_term(t: &Term, vars: &[String], env: &Env) -> Option<Poly> {
        let n = vars.len();
        Some(match t {
            Term::Zero => Poly::constant(n, 0),
            Term::Numeral(k) => Poly::constant(n, *k as i128),
            Term::Var(v) => match vars.iter().position(|w| w == v) {
                Some(i) => {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    Poly { arity: n, terms: BTreeMap::from([(e, 1)]) }
                }
                None => Poly::constant(n, lookup(env, v)? as i128),
            },
            Term::Succ(a) => Poly::of_term(a, vars, env)?.add(&Poly::constant(n, 1))?,
            Term::Plus(a, b) => Poly::of_term(a, vars, env)?.add(&Poly::of_term(b, vars, env)?)?,
            Term::Times(a, b) => Poly::of_term(a, vars, env)?.mul(&Poly::of_term(b, vars, env)?)?,
        })
    }

    fn add(&self, other: &Poly) -> Option<Poly> {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let e = terms.entry(k.clone()).or_insert(0);
            *e = e.checked_add(*c)?;
            if *e == 0 {
                terms.remove(k);
            }
        }
        Some(Poly { arity: self.arity, terms })
    }

    fn sub(&self, other: &Poly) -> Option<Poly> {
        let neg = Poly {
            arity: other.arity,
            terms: other.terms.iter().map(|(k, c)| Some((k.clone(), c.checked_neg()?))).collect::<Option<_>>()?,
        };
        self.add(&neg)
    }

    fn mul(&self, other: &Poly) -> Option<Poly> {
        let mut out = Poly::constant(self.arity, 0);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let k: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                let mono = Poly { arity: self.arity, terms: BTreeMap::from([(k, c1.checked_mul(*c2)?)]) };
                out = out.add(&mono)?;
            }
        }
        Some(out)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(|k| k.iter().all(|e| *e == 0))
    }

    /// Divides by the content and fixes the sign of the first coefficient, so
    /// that `p = 0` and `c·p = 0` share a key.
    fn normalized(&self) -> BTreeMap<Vec<u32>, i128> {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = self.terms.values().fold(0, |acc, c| gcd(acc, *c)).max(1);
        let sign = if self.terms.values().next().is_some_and(|c| *c < 0) { -1 } else { 1 };
        self.terms.iter().map(|(k, c)| (k.clone(), sign * c / g)).collect()
    }

    /// Every natural root lies in `0..=bound`. `None` for the zero polynomial.
    fn univariate_root_bound(&self) -> Option<u128> {
        if self.is_zero() {
            return Some(0);
        }
        let degree = self.terms.keys().map(|k| k[0]).max()?;
        if degree == 0 {
            return Some(0);
        }
        let lead = self.terms.iter().find(|(k, _)| k[0] == degree).map(|(_, c)| c.unsigned_abs())?;
        let rest: u128 = self
            .terms
            .iter()
            .filter(|(k, _)| k[0] < degree)
            .try_fold(0u128, |acc, (_, c)| acc.checked_add(c.unsigned_abs()))?;
        Some(rest / lead + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn eval(src: &str, b: u64) -> Truth3 {
        eval_elementary(&parse(src).unwrap(), b).unwrap()
    }

    #[test]
    fn closed_arithmetic() {
        assert_eq!(eval("2 + 2 = 4", 0), Truth3::True);
        assert_eq!(eval("2 * 3 = 5", 0), Truth3::False);
        assert_eq!(eval("~(0 = 0')", 0), Truth3::True);
    }

    #[test]
    fn bounded_existential_settles_only_when_witnessed() {
        let f = "Ex. x + x = 5 + 5 + 0'";
        // no natural root, decided exactly by the root scan
        assert_eq!(eval(f, 3), Truth3::False);
        assert_eq!(eval("Ex. x = 5", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
        assert_eq!(eval("Ex. x = 5", 6), Truth3::True);
        assert_eq!(eval("Ex. x = 5 & ~(x = 5)", 3), Truth3::False);
        // a machine-dependent body cannot be scanned; plain bounded search
        assert_eq!(eval("Ez. Et. T(1, 2, z, t)", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
        assert_eq!(eval("Ez. Et. T(1, 2, z, t)", 8), Truth3::True);
    }

    #[test]
    fn unbounded_universal_stays_unknown_unless_recognized() {
        assert_eq!(eval("Ax. x = x", 3), Truth3::True);
        assert_eq!(eval("Ax. Ey. y = x'", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
        assert_eq!(eval("Ax. Ez. ~T(3, x, z, 0)", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
        assert_eq!(eval("Ax. Ey. ~(y = x)", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
    }

    #[test]
    fn peano_axioms_are_recognized_true() {
        for src in [
            "Ax. ~(0 = x')",
            "Ax. Ay. x' = y' -> x = y",
            "Ax. x + 0 = x",
            "Ax. Ay. x + y' = (x + y)'",
            "Ax. x * 0 = 0",
            "Ax. Ay. x * y' = (x * y) + x",
        ] {
            assert_eq!(eval(src, 2), Truth3::True, "{src}");
        }
    }

    #[test]
    fn root_scan_finds_large_witnesses() {
        assert_eq!(eval("Ex. x * x = 1369", 40), Truth3::True);
        assert_eq!(eval("Ex. x * x = 1369", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
        assert_eq!(eval("Ex. x * x = 1370", 3), Truth3::False);
        assert_eq!(eval("Ax. ~(x * x = 1370)", 3), Truth3::True);
    }

    #[test]
    fn halting_output_is_decided_by_running() {
        // identity on input 2 halts at step 8 with output 2
        assert_eq!(eval("Et. T(1, 2, 8, t)", 3), Truth3::True);
        assert_eq!(eval("Et. T(1, 2, 7, t)", 3), Truth3::False);
        // copy-20 outputs 20
        assert_eq!(eval("Et. T(9, 0, 82, t)", 3), Truth3::Unknown(UnknownReason::BoundExhausted));
        assert_eq!(eval("Et. T(9, 0, 82, t)", 20), Truth3::True);
        // a machine that never halts
        assert_eq!(eval("Ez. Et. T(3, 0, z, t)", 30), Truth3::Unknown(UnknownReason::BoundExhausted));
    }

    #[test]
    fn overflow_is_unknown() {
        assert_eq!(
            eval("18446744073709551615 + 1 = 0", 0),
            Truth3::Unknown(UnknownReason::Overflow)
        );
    }

    #[test]
    fn open_and_non_elementary_are_errors() {
        assert!(matches!(eval_elementary(&parse("x = 0").unwrap(), 3), Err(TruthError::Open(_))));
        assert!(matches!(
            eval_elementary(&parse("(0 = 0) vv (0 = 0)").unwrap(), 3),
            Err(TruthError::NotElementary)
        ));
    }

    #[test]
    fn work_is_counted() {
        let (_, w1) = Oracle::new(5).eval_counted(&parse("Et. T(1, 0, 2, t)").unwrap()).unwrap();
        let (_, w2) = Oracle::new(5).eval_counted(&parse("Et. T(1, 0, 30, t)").unwrap()).unwrap();
        assert!(w2 > w1);
    }
}
