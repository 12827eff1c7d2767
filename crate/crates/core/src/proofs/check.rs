use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Proof, ProofNode, Rule, SystemId};
use crate::strategies::{validate_script, Strategy};
use crate::syntax::{parse, Formula, SyntaxError, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ViolationCode {
    RuleNotInSystem,
    NotElementary,
    FreeVariableLeak,
    MissingParameter,
    PremiseCount,
    PremiseShape,
    ConclusionShape,
    AxiomShape,
    MissingWitness,
    BadWitness,
    OpenSentence,
    DanglingPremise,
    Cycle,
    Unreachable,
    EmptyProof,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub node: Option<String>,
    pub rule: Option<Rule>,
    pub condition: ViolationCode,
    pub message: String,
}

impl Violation {
    pub(super) fn new(
        node: Option<&ProofNode>,
        rule: Option<Rule>,
        condition: ViolationCode,
        message: impl Into<String>,
    ) -> Self {
        Violation {
            node: node.map(|n| n.id.clone()),
            rule: rule.or(node.map(|n| n.rule)),
            condition,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeVerdict {
    pub id: String,
    pub rule: Rule,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub system: SystemId,
    pub accepted: bool,
    pub conclusion: Option<String>,
    pub nodes: Vec<NodeVerdict>,
    pub violations: Vec<Violation>,
}

impl Report {
    /// 0 accepted, 1 rejected. Malformed files never get a report; they exit 2.
    pub fn exit_code(&self) -> i32 {
        if self.accepted {
            0
        } else {
            1
        }
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.condition == code)
    }
}

/// The pinned sentence of an axiom rule, for all but PA7.
pub fn axiom_sentence(rule: Rule) -> Option<Formula> {
    let src = match rule {
        Rule::Pa1 => "Ax. ~(0 = x')",
        Rule::Pa2 => "Ax. Ay. (x' = y' -> x = y)",
        Rule::Pa3 => "Ax. x + 0 = x",
        Rule::Pa4 => "Ax. Ay. x + y' = (x + y)'",
        Rule::Pa5 => "Ax. x * 0 = 0",
        Rule::Pa6 => "Ax. Ay. x * y' = x * y + x",
        Rule::Ax8 => "AAx. EEy. y = x'",
        _ => return None,
    };
    Some(parse(src).expect("pinned axioms parse"))
}

/// `∀cl((F(0) ∧ ∀x(F(x) → F(x′))) → ∀x F(x))`.
pub fn induction_axiom(matrix: &Formula, var: &str) -> Result<Formula, SyntaxError> {
    let next = matrix.substitute(var, &Term::succ(Term::var(var)))?;
    Ok(Formula::implies(
        Formula::and(matrix.instantiate(var, 0), Formula::forall(var, Formula::implies(matrix.clone(), next))),
        Formula::forall(var, matrix.clone()),
    )
    .universal_closure())
}

struct Checker<'a> {
    node: &'a ProofNode,
    out: Vec<Violation>,
}

impl<'a> Checker<'a> {
    fn fail(&mut self, code: ViolationCode, message: impl Into<String>) {
        self.out.push(Violation::new(Some(self.node), None, code, message));
    }

    fn params(&mut self) -> Option<(&'a Formula, &'a str)> {
        match (&self.node.matrix, &self.node.var) {
            (Some(m), Some(v)) => Some((m, v.as_str())),
            _ => {
                self.fail(ViolationCode::MissingParameter, format!("{} needs its matrix and var", self.node.rule));
                None
            }
        }
    }

    fn elementary(&mut self, f: &Formula) -> bool {
        let ok = f.is_elementary();
        if !ok {
            self.fail(ViolationCode::NotElementary, format!("{} needs an elementary matrix, got {f}", self.node.rule));
        }
        ok
    }

    fn premise_count(&mut self, premises: &[&ProofNode], want: usize) -> bool {
        let ok = premises.len() == want;
        if !ok {
            self.fail(
                ViolationCode::PremiseCount,
                format!("{} takes {want} premise(s), got {}", self.node.rule, premises.len()),
            );
        }
        ok
    }

    fn premise(&mut self, p: &ProofNode, want: Result<Formula, SyntaxError>, what: &str) {
        match want {
            Ok(w) if p.sentence.same_game(&w) => {}
            Ok(w) => self.fail(ViolationCode::PremiseShape, format!("{what} premise {} should be {w}, is {}", p.id, p.sentence)),
            Err(e) => self.fail(ViolationCode::PremiseShape, format!("{what} premise cannot be formed: {e}")),
        }
    }

    fn conclusion(&mut self, want: Formula) {
        if !self.node.sentence.same_game(&want) {
            self.fail(
                ViolationCode::ConclusionShape,
                format!("{} concludes {want}, node says {}", self.node.rule, self.node.sentence),
            );
        }
    }
}

fn excluded_middle(matrix: &Formula) -> Formula {
    Formula::ch_or(matrix.clone(), Formula::not(matrix.clone())).choice_closure()
}

/// Checks one rule instance. `premises` are the premise nodes in order.
pub fn check_rule(node: &ProofNode, premises: &[&ProofNode], system: SystemId) -> Vec<Violation> {
    let mut c = Checker { node, out: Vec::new() };
    if !system.allows(node.rule) {
        c.fail(ViolationCode::RuleNotInSystem, format!("{} is not a rule of {system}", node.rule));
    }
    let free = node.sentence.free_vars_ordered();
    if !free.is_empty() {
        c.fail(ViolationCode::OpenSentence, format!("free variables {}", free.join(", ")));
    }
    match node.rule {
        Rule::Pa7 => {
            c.premise_count(premises, 0);
            if let Some((m, x)) = c.params() {
                if c.elementary(m) {
                    match induction_axiom(m, x) {
                        Ok(want) if node.sentence.same_game(&want) => {}
                        Ok(want) => c.fail(ViolationCode::AxiomShape, format!("PA7 instance should be {want}")),
                        Err(e) => c.fail(ViolationCode::AxiomShape, e.to_string()),
                    }
                }
            }
        }
        r if r.is_axiom() => {
            c.premise_count(premises, 0);
            let want = axiom_sentence(r).expect("pinned axiom");
            if !node.sentence.same_game(&want) {
                c.fail(ViolationCode::AxiomShape, format!("{r} is {want}, node says {}", node.sentence));
            }
        }
        Rule::Lc => match &node.witness {
            None => c.fail(ViolationCode::MissingWitness, "LC needs a witness script"),
            Some(w) => {
                let slots: BTreeMap<String, Strategy> =
                    premises.iter().map(|p| (p.id.clone(), Strategy::silent(p.sentence.clone()))).collect();
                if let Err(e) = validate_script(w, &slots) {
                    c.fail(ViolationCode::BadWitness, e.to_string());
                }
            }
        },
        Rule::Ind => {
            if let Some((m, x)) = c.params() {
                if c.premise_count(premises, 2) {
                    c.premise(premises[0], Ok(m.instantiate(x, 0).choice_closure()), "base");
                    let step = m
                        .substitute(x, &Term::succ(Term::var(x)))
                        .map(|next| Formula::implies(m.clone(), next).choice_closure());
                    c.premise(premises[1], step, "step");
                }
                c.conclusion(m.choice_closure());
            }
        }
        Rule::Fs => {
            if let Some((m, x)) = c.params() {
                if c.elementary(m) && c.premise_count(premises, 2) {
                    c.premise(premises[0], Ok(excluded_middle(m)), "decision");
                    c.premise(premises[1], Ok(Formula::exists(x, m.clone()).choice_closure()), "existence");
                }
                c.conclusion(Formula::ch_ex(x, m.clone()).choice_closure());
            }
        }
        Rule::Is => {
            if let Some((m, x)) = c.params() {
                if c.elementary(m) && c.premise_count(premises, 1) {
                    c.premise(premises[0], Ok(excluded_middle(m)), "decision");
                }
                c.conclusion(
                    Formula::implies(Formula::exists(x, m.clone()), Formula::ch_ex(x, m.clone())).choice_closure(),
                );
            }
        }
        Rule::Constr => {
            if let Some((m, x)) = c.params() {
                let leak: Vec<String> = m.free_vars_ordered().into_iter().filter(|v| v != x).collect();
                if !leak.is_empty() {
                    c.fail(
                        ViolationCode::FreeVariableLeak,
                        format!("F may have no free variables other than {x}; found {}", leak.join(", ")),
                    );
                }
                // with a leak the displayed shapes are not sentences, so there is nothing to compare
                if leak.is_empty() {
                    if c.elementary(m) && c.premise_count(premises, 1) {
                        c.premise(premises[0], Ok(Formula::exists(x, m.clone())), "existence");
                    }
                    c.conclusion(Formula::ch_ex(x, m.clone()));
                }
            }
        }
        _ => unreachable!("every rule is covered"),
    }
    c.out
}

/// Checks every node under `system` after the graph-level checks.
pub fn check_proof(proof: &Proof, system: SystemId) -> Report {
    let mut violations = proof.structure();
    let index: BTreeMap<&str, &ProofNode> = proof.nodes.iter().map(|n| (n.id.as_str(), n)).collect();
    let mut nodes = Vec::with_capacity(proof.nodes.len());
    for n in &proof.nodes {
        let premises: Option<Vec<&ProofNode>> = n.premises.iter().map(|p| index.get(p.as_str()).copied()).collect();
        let own = match premises {
            Some(ps) => check_rule(n, &ps, system),
            None => Vec::new(),
        };
        let structural = violations.iter().any(|v| v.node.as_deref() == Some(n.id.as_str()));
        nodes.push(NodeVerdict { id: n.id.clone(), rule: n.rule, ok: own.is_empty() && !structural });
        violations.extend(own);
    }
    Report {
        system,
        accepted: violations.is_empty(),
        conclusion: proof.conclusion().map(|f| f.to_string()),
        nodes,
        violations,
    }
}
