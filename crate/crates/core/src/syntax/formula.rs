use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::term::Term;
use super::SyntaxError;

/// The machine-halting atom `T(m, y, z, t)`: machine `m` on input `y` halts at
/// step `z` with output `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HaltAtom {
    pub machine: Term,
    pub input: Term,
    pub step: Term,
    pub output: Term,
}

impl HaltAtom {
    fn terms(&self) -> [&Term; 4] {
        [&self.machine, &self.input, &self.step, &self.output]
    }

    fn map(&self, f: impl Fn(&Term) -> Term) -> HaltAtom {
        HaltAtom {
            machine: f(&self.machine),
            input: f(&self.input),
            step: f(&self.step),
            output: f(&self.output),
        }
    }
}

/// Formulas of the clarithmetic language.
///
/// Classical connectives and quantifiers sit alongside the choice operators
/// `ChAnd` (⊓), `ChOr` (⊔), `ChAll` (⊓x) and `ChEx` (⊔x).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "node", content = "args")]
pub enum Formula {
    Eq(Term, Term),
    Halts(Box<HaltAtom>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(String, Box<Formula>),
    Exists(String, Box<Formula>),
    ChAnd(Box<Formula>, Box<Formula>),
    ChOr(Box<Formula>, Box<Formula>),
    ChAll(String, Box<Formula>),
    ChEx(String, Box<Formula>),
}

/// Binder kinds, shared by the classical and choice quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    ForAll,
    Exists,
    ChAll,
    ChEx,
}

/// Binary connective kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    And,
    Or,
    Implies,
    ChAnd,
    ChOr,
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn halts(machine: Term, input: Term, step: Term, output: Term) -> Formula {
        Formula::Halts(Box::new(HaltAtom { machine, input, step, output }))
    }

    /// `0 = 0`.
    pub fn truth() -> Formula {
        Formula::Eq(Term::Zero, Term::Zero)
    }

    /// `0 = 0'`.
    pub fn falsity() -> Formula {
        Formula::Eq(Term::Zero, Term::Numeral(1))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn binary(c: Connective, a: Formula, b: Formula) -> Formula {
        let (a, b) = (Box::new(a), Box::new(b));
        match c {
            Connective::And => Formula::And(a, b),
            Connective::Or => Formula::Or(a, b),
            Connective::Implies => Formula::Implies(a, b),
            Connective::ChAnd => Formula::ChAnd(a, b),
            Connective::ChOr => Formula::ChOr(a, b),
        }
    }

    pub fn quant(q: Quantifier, var: impl Into<String>, body: Formula) -> Formula {
        let (v, b) = (var.into(), Box::new(body));
        match q {
            Quantifier::ForAll => Formula::ForAll(v, b),
            Quantifier::Exists => Formula::Exists(v, b),
            Quantifier::ChAll => Formula::ChAll(v, b),
            Quantifier::ChEx => Formula::ChEx(v, b),
        }
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::And, a, b)
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::Or, a, b)
    }
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::Implies, a, b)
    }
    pub fn ch_and(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::ChAnd, a, b)
    }
    pub fn ch_or(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::ChOr, a, b)
    }
    pub fn forall(x: impl Into<String>, body: Formula) -> Formula {
        Formula::quant(Quantifier::ForAll, x, body)
    }
    pub fn exists(x: impl Into<String>, body: Formula) -> Formula {
        Formula::quant(Quantifier::Exists, x, body)
    }
    pub fn ch_all(x: impl Into<String>, body: Formula) -> Formula {
        Formula::quant(Quantifier::ChAll, x, body)
    }
    pub fn ch_ex(x: impl Into<String>, body: Formula) -> Formula {
        Formula::quant(Quantifier::ChEx, x, body)
    }

    pub fn as_binary(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some((Connective::And, a, b)),
            Formula::Or(a, b) => Some((Connective::Or, a, b)),
            Formula::Implies(a, b) => Some((Connective::Implies, a, b)),
            Formula::ChAnd(a, b) => Some((Connective::ChAnd, a, b)),
            Formula::ChOr(a, b) => Some((Connective::ChOr, a, b)),
            _ => None,
        }
    }

    pub fn as_quantifier(&self) -> Option<(Quantifier, &str, &Formula)> {
        match self {
            Formula::ForAll(x, b) => Some((Quantifier::ForAll, x, b)),
            Formula::Exists(x, b) => Some((Quantifier::Exists, x, b)),
            Formula::ChAll(x, b) => Some((Quantifier::ChAll, x, b)),
            Formula::ChEx(x, b) => Some((Quantifier::ChEx, x, b)),
            _ => None,
        }
    }

    pub fn is_choice(&self) -> bool {
        matches!(
            self,
            Formula::ChAnd(..) | Formula::ChOr(..) | Formula::ChAll(..) | Formula::ChEx(..)
        )
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Eq(..) | Formula::Halts(..))
    }

    /// Immediate subformulas, in path-index order.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Eq(..) | Formula::Halts(..) => vec![],
            Formula::Not(f) => vec![f],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::ChAnd(a, b)
            | Formula::ChOr(a, b) => vec![a, b],
            Formula::ForAll(_, f) | Formula::Exists(_, f) | Formula::ChAll(_, f) | Formula::ChEx(_, f) => {
                vec![f]
            }
        }
    }

    pub fn child_mut(&mut self, index: usize) -> Option<&mut Formula> {
        match (self, index) {
            (Formula::Not(f), 0) => Some(f),
            (
                Formula::And(a, _)
                | Formula::Or(a, _)
                | Formula::Implies(a, _)
                | Formula::ChAnd(a, _)
                | Formula::ChOr(a, _),
                0,
            ) => Some(a),
            (
                Formula::And(_, b)
                | Formula::Or(_, b)
                | Formula::Implies(_, b)
                | Formula::ChAnd(_, b)
                | Formula::ChOr(_, b),
                1,
            ) => Some(b),
            (
                Formula::ForAll(_, f) | Formula::Exists(_, f) | Formula::ChAll(_, f) | Formula::ChEx(_, f),
                0,
            ) => Some(f),
            _ => None,
        }
    }

    /// Number of nodes in the formula tree.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(Formula::depth).max().unwrap_or(0)
    }

    pub fn is_elementary(&self) -> bool {
        !self.is_choice() && self.children().into_iter().all(Formula::is_elementary)
    }

    /// Free variables, in order of first (leftmost) free occurrence.
    pub fn free_vars_ordered(&self) -> Vec<String> {
        fn walk(f: &Formula, bound: &mut Vec<String>, out: &mut Vec<String>) {
            let mut atom_vars = Vec::new();
            match f {
                Formula::Eq(a, b) => {
                    a.collect_vars(&mut atom_vars);
                    b.collect_vars(&mut atom_vars);
                }
                Formula::Halts(h) => {
                    for t in h.terms() {
                        t.collect_vars(&mut atom_vars);
                    }
                }
                _ => {}
            }
            for v in atom_vars {
                if !bound.contains(&v) && !out.contains(&v) {
                    out.push(v);
                }
            }
            if let Some((_, x, body)) = f.as_quantifier() {
                bound.push(x.to_string());
                walk(body, bound, out);
                bound.pop();
            } else {
                for c in f.children() {
                    walk(c, bound, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        self.free_vars_ordered().into_iter().collect()
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars_ordered().is_empty()
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Eq(a, b) => {
                out.extend(a.vars());
                out.extend(b.vars());
            }
            Formula::Halts(h) => {
                for t in h.terms() {
                    out.extend(t.vars());
                }
            }
            _ => {
                if let Some((_, x, _)) = f.as_quantifier() {
                    out.insert(x.to_string());
                }
            }
        });
        out
    }

    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    /// Capture-avoiding substitution of `by` for the free occurrences of `name`.
    ///
    /// Fails instead of renaming when a binder would capture a variable of `by`.
    pub fn substitute(&self, name: &str, by: &Term) -> Result<Formula, SyntaxError> {
        let by_vars = by.vars();
        self.subst_inner(name, by, &by_vars)
    }

    fn subst_inner(&self, name: &str, by: &Term, by_vars: &BTreeSet<String>) -> Result<Formula, SyntaxError> {
        Ok(match self {
            Formula::Eq(a, b) => Formula::Eq(a.substitute(name, by), b.substitute(name, by)),
            Formula::Halts(h) => Formula::Halts(Box::new(h.map(|t| t.substitute(name, by)))),
            Formula::Not(f) => Formula::not(f.subst_inner(name, by, by_vars)?),
            _ => {
                if let Some((c, a, b)) = self.as_binary() {
                    Formula::binary(c, a.subst_inner(name, by, by_vars)?, b.subst_inner(name, by, by_vars)?)
                } else if let Some((q, x, body)) = self.as_quantifier() {
                    if x == name || !body.free_vars().contains(name) {
                        self.clone()
                    } else if by_vars.contains(x) {
                        return Err(SyntaxError::Capture { var: x.to_string(), replaced: name.to_string() });
                    } else {
                        Formula::quant(q, x, body.subst_inner(name, by, by_vars)?)
                    }
                } else {
                    unreachable!("every formula is an atom, a negation, binary or quantified")
                }
            }
        })
    }

    /// Substitutes the numeral `n` for `name`; never captures.
    pub fn instantiate(&self, name: &str, n: u64) -> Formula {
        self.substitute(name, &Term::num(n)).expect("closed terms cannot be captured")
    }

    /// Canonical numerals throughout (see [`Term::canonical`]).
    pub fn canonical(&self) -> Formula {
        self.map_terms(&|t| t.canonical())
    }

    fn map_terms(&self, f: &impl Fn(&Term) -> Term) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(f(a), f(b)),
            Formula::Halts(h) => Formula::Halts(Box::new(h.map(f))),
            Formula::Not(g) => Formula::not(g.map_terms(f)),
            _ => {
                if let Some((c, a, b)) = self.as_binary() {
                    Formula::binary(c, a.map_terms(f), b.map_terms(f))
                } else {
                    let (q, x, body) = self.as_quantifier().expect("quantifier");
                    Formula::quant(q, x, body.map_terms(f))
                }
            }
        }
    }

    /// Equality up to renaming of bound variables and numeral folding.
    pub fn same_game(&self, other: &Formula) -> bool {
        alpha_eq(&self.canonical(), &other.canonical())
    }

    /// Replaces every choice occurrence that is not nested inside another
    /// choice operator: ⊔-type by `0 = 0'` and ⊓-type by `0 = 0`.
    pub fn elementarization(&self) -> Formula {
        match self {
            Formula::ChOr(..) | Formula::ChEx(..) => Formula::falsity(),
            Formula::ChAnd(..) | Formula::ChAll(..) => Formula::truth(),
            Formula::Eq(..) | Formula::Halts(..) => self.clone(),
            Formula::Not(f) => Formula::not(f.elementarization()),
            _ => {
                if let Some((c, a, b)) = self.as_binary() {
                    Formula::binary(c, a.elementarization(), b.elementarization())
                } else {
                    let (q, x, body) = self.as_quantifier().expect("quantifier");
                    Formula::quant(q, x, body.elementarization())
                }
            }
        }
    }

    /// ⊓-closure: `⊓v1 … ⊓vk F` over the free variables in first-occurrence order.
    pub fn choice_closure(&self) -> Formula {
        closure(self, Quantifier::ChAll)
    }

    /// Classical universal closure, same variable order as [`Formula::choice_closure`].
    pub fn universal_closure(&self) -> Formula {
        closure(self, Quantifier::ForAll)
    }

    /// Splits off a leading block of `⊓` quantifiers.
    pub fn strip_choice_prefix(&self) -> (Vec<String>, &Formula) {
        let mut vars = Vec::new();
        let mut f = self;
        while let Formula::ChAll(x, body) = f {
            vars.push(x.clone());
            f = body;
        }
        (vars, f)
    }
}

fn closure(f: &Formula, q: Quantifier) -> Formula {
    f.free_vars_ordered()
        .into_iter()
        .rev()
        .fold(f.clone(), |acc, v| Formula::quant(q, v, acc))
}

/// Structural equality modulo bound-variable names.
pub fn alpha_eq(a: &Formula, b: &Formula) -> bool {
    fn term_eq(s: &Term, t: &Term, env: &[(String, String)]) -> bool {
        match (s, t) {
            (Term::Var(x), Term::Var(y)) => {
                match (
                    env.iter().rev().position(|(l, _)| l == x),
                    env.iter().rev().position(|(_, r)| r == y),
                ) {
                    (Some(i), Some(j)) => i == j,
                    (None, None) => x == y,
                    _ => false,
                }
            }
            (Term::Succ(a), Term::Succ(b)) => term_eq(a, b, env),
            (Term::Plus(a1, a2), Term::Plus(b1, b2)) | (Term::Times(a1, a2), Term::Times(b1, b2)) => {
                term_eq(a1, b1, env) && term_eq(a2, b2, env)
            }
            _ => s == t,
        }
    }
    fn go(a: &Formula, b: &Formula, env: &mut Vec<(String, String)>) -> bool {
        match (a, b) {
            (Formula::Eq(a1, a2), Formula::Eq(b1, b2)) => term_eq(a1, b1, env) && term_eq(a2, b2, env),
            (Formula::Halts(h), Formula::Halts(k)) => {
                h.terms().iter().zip(k.terms().iter()).all(|(s, t)| term_eq(s, t, env))
            }
            (Formula::Not(f), Formula::Not(g)) => go(f, g, env),
            _ => {
                if let (Some((c, a1, a2)), Some((d, b1, b2))) = (a.as_binary(), b.as_binary()) {
                    c == d && go(a1, b1, env) && go(a2, b2, env)
                } else if let (Some((q, x, f)), Some((r, y, g))) = (a.as_quantifier(), b.as_quantifier()) {
                    if q != r {
                        return false;
                    }
                    env.push((x.to_string(), y.to_string()));
                    let ok = go(f, g, env);
                    env.pop();
                    ok
                } else {
                    false
                }
            }
        }
    }
    go(a, b, &mut Vec::new())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Halts(h) => write!(f, "T({}, {}, {}, {})", h.machine, h.input, h.step, h.output),
            Formula::Not(g) => write!(f, "~({g})"),
            _ => {
                if let Some((c, a, b)) = self.as_binary() {
                    let op = match c {
                        Connective::And => "&",
                        Connective::Or => "v",
                        Connective::Implies => "->",
                        Connective::ChAnd => "&&",
                        Connective::ChOr => "vv",
                    };
                    write!(f, "({a}) {op} ({b})")
                } else {
                    let (q, x, body) = self.as_quantifier().expect("quantifier");
                    let sym = match q {
                        Quantifier::ForAll => "A",
                        Quantifier::Exists => "E",
                        Quantifier::ChAll => "AA",
                        Quantifier::ChEx => "EE",
                    };
                    write!(f, "{sym}{x}. {body}")
                }
            }
        }
    }
}
