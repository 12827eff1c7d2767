//! Proof objects, per-system rule checking and proof-to-strategy extraction.
//!
//! A proof file is JSON:
//!
//! ```json
//! {
//!   "root": "goal",
//!   "nodes": [
//!     { "id": "dec", "rule": "LC", "sentence": "AAx. (x = 0'' vv ~ x = 0'')", "witness": [ ... ] },
//!     { "id": "ex", "rule": "PA3", "sentence": "Ex. x = 0''" },
//!     { "id": "goal", "rule": "FS", "sentence": "EEx. x = 0''",
//!       "premises": ["dec", "ex"], "matrix": "x = 0''", "var": "x" }
//!   ]
//! }
//! ```
//!
//! Sentences and matrices are given in the concrete grammar or as JSON ASTs.
//! Every rule instance names its `F(x)` and variable explicitly; nothing is
//! reconstructed. An LC node carries a witness script whose slots are its
//! premise ids.

mod check;
mod extract;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::strategies::WitnessScript;
use crate::syntax::{parse, Formula};

pub use check::{
    axiom_sentence, check_proof, check_rule, induction_axiom, NodeVerdict, Report, Violation, ViolationCode,
};
pub use extract::{extract, ExtractError, Extraction};
pub use crate::strategies::measure_steps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SystemId {
    CLA8,
    CLA9,
    CLA10,
}

impl SystemId {
    pub const ALL: [SystemId; 3] = [SystemId::CLA8, SystemId::CLA9, SystemId::CLA10];

    pub fn rules(self) -> &'static [Rule] {
        use Rule::*;
        match self {
            SystemId::CLA8 => &[Pa1, Pa2, Pa3, Pa4, Pa5, Pa6, Pa7, Ax8, Lc, Ind, Fs],
            SystemId::CLA9 => &[Pa1, Pa2, Pa3, Pa4, Pa5, Pa6, Pa7, Ax8, Lc, Ind, Is],
            SystemId::CLA10 => &[Pa1, Pa2, Pa3, Pa4, Pa5, Pa6, Pa7, Ax8, Lc, Ind, Is, Constr],
        }
    }

    pub fn allows(self, rule: Rule) -> bool {
        self.rules().contains(&rule)
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemId::CLA8 => "CLA8",
            SystemId::CLA9 => "CLA9",
            SystemId::CLA10 => "CLA10",
        })
    }
}

impl FromStr for SystemId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "CLA8" => Ok(SystemId::CLA8),
            "CLA9" => Ok(SystemId::CLA9),
            "CLA10" => Ok(SystemId::CLA10),
            _ => Err(format!("unknown system {s}; expected CLA8, CLA9 or CLA10")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "PA1")]
    Pa1,
    #[serde(rename = "PA2")]
    Pa2,
    #[serde(rename = "PA3")]
    Pa3,
    #[serde(rename = "PA4")]
    Pa4,
    #[serde(rename = "PA5")]
    Pa5,
    #[serde(rename = "PA6")]
    Pa6,
    /// Induction for an elementary `F`.
    #[serde(rename = "PA7")]
    Pa7,
    #[serde(rename = "AX8")]
    Ax8,
    #[serde(rename = "LC")]
    Lc,
    #[serde(rename = "IND")]
    Ind,
    #[serde(rename = "FS")]
    Fs,
    #[serde(rename = "IS")]
    Is,
    #[serde(rename = "CONSTR")]
    Constr,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Pa1 => "PA1",
            Rule::Pa2 => "PA2",
            Rule::Pa3 => "PA3",
            Rule::Pa4 => "PA4",
            Rule::Pa5 => "PA5",
            Rule::Pa6 => "PA6",
            Rule::Pa7 => "PA7",
            Rule::Ax8 => "AX8",
            Rule::Lc => "LC",
            Rule::Ind => "IND",
            Rule::Fs => "FS",
            Rule::Is => "IS",
            Rule::Constr => "CONSTR",
        }
    }

    pub fn is_axiom(self) -> bool {
        matches!(self, Rule::Pa1 | Rule::Pa2 | Rule::Pa3 | Rule::Pa4 | Rule::Pa5 | Rule::Pa6 | Rule::Pa7 | Rule::Ax8)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofNode {
    pub id: String,
    pub sentence: Formula,
    pub rule: Rule,
    pub premises: Vec<String>,
    pub witness: Option<WitnessScript>,
    /// The rule's `F(x)`.
    pub matrix: Option<Formula>,
    pub var: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub root: String,
    pub nodes: Vec<ProofNode>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("schema: {0}")]
    Schema(String),
    #[error("node {node}: {field} does not parse: {message}")]
    Syntax { node: String, field: &'static str, message: String },
    #[error("duplicate node id {0}")]
    DuplicateId(String),
    #[error("proof structure: {}", .0.iter().map(|v| v.message.clone()).collect::<Vec<_>>().join("; "))]
    Structure(Vec<Violation>),
}

/// A formula as written in a file: concrete text or an AST.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum FormulaSrc {
    Text(String),
    Ast(Formula),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    id: String,
    sentence: FormulaSrc,
    rule: Rule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    premises: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessScript>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<FormulaSrc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    var: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProof {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root: Option<String>,
    nodes: Vec<RawNode>,
}

fn formula_of(src: FormulaSrc, node: &str, field: &'static str) -> Result<Formula, LoadError> {
    match src {
        FormulaSrc::Ast(f) => Ok(f),
        FormulaSrc::Text(s) => {
            parse(&s).map_err(|e| LoadError::Syntax { node: node.to_string(), field, message: e.to_string() })
        }
    }
}

/// Parses a proof without checking its graph structure; that is left to
/// [`check_proof`], which reports it as violations.
pub fn parse_proof(text: &str) -> Result<Proof, LoadError> {
    let raw: RawProof = serde_json::from_str(text).map_err(|e| LoadError::Schema(e.to_string()))?;
    let mut seen = BTreeSet::new();
    let mut nodes = Vec::with_capacity(raw.nodes.len());
    for n in raw.nodes {
        if !seen.insert(n.id.clone()) {
            return Err(LoadError::DuplicateId(n.id));
        }
        let sentence = formula_of(n.sentence, &n.id, "sentence")?;
        let matrix = n.matrix.map(|m| formula_of(m, &n.id, "matrix")).transpose()?;
        nodes.push(ProofNode {
            id: n.id,
            sentence,
            rule: n.rule,
            premises: n.premises,
            witness: n.witness,
            matrix,
            var: n.var,
        });
    }
    let root = raw.root.or_else(|| nodes.last().map(|n| n.id.clone())).unwrap_or_default();
    Ok(Proof { root, nodes })
}

/// Reads and parses a proof file and insists on a well-formed DAG.
pub fn load_proof(path: impl AsRef<Path>) -> Result<Proof, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    let proof = parse_proof(&text)?;
    let bad = proof.structure();
    if bad.is_empty() {
        Ok(proof)
    } else {
        Err(LoadError::Structure(bad))
    }
}

impl Proof {
    pub fn node(&self, id: &str) -> Option<&ProofNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.node(&self.root).map(|n| &n.sentence)
    }

    fn index(&self) -> BTreeMap<&str, usize> {
        self.nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect()
    }

    /// Graph-level problems: emptiness, a missing root, dangling premises,
    /// cycles and nodes the root does not depend on.
    pub fn structure(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            out.push(Violation::new(None, None, ViolationCode::EmptyProof, "the proof has no nodes"));
            return out;
        }
        let index = self.index();
        let Some(&root) = index.get(self.root.as_str()) else {
            out.push(Violation::new(
                None,
                None,
                ViolationCode::DanglingPremise,
                format!("root {} is not a node", self.root),
            ));
            return out;
        };
        for n in &self.nodes {
            for p in &n.premises {
                if !index.contains_key(p.as_str()) {
                    out.push(Violation::new(
                        Some(n),
                        None,
                        ViolationCode::DanglingPremise,
                        format!("premise {p} is not a node"),
                    ));
                }
            }
        }
        for id in self.cyclic_nodes() {
            let n = &self.nodes[index[id.as_str()]];
            out.push(Violation::new(Some(n), None, ViolationCode::Cycle, "node lies on a premise cycle"));
        }
        let mut reach = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            if std::mem::replace(&mut reach[i], true) {
                continue;
            }
            stack.extend(self.nodes[i].premises.iter().filter_map(|p| index.get(p.as_str()).copied()));
        }
        for (n, r) in self.nodes.iter().zip(reach) {
            if !r {
                out.push(Violation::new(
                    Some(n),
                    None,
                    ViolationCode::Unreachable,
                    format!("root {} does not depend on this node", self.root),
                ));
            }
        }
        out
    }

    /// Node ids in dependency order (premises first), or `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let index = self.index();
        let mut indegree = vec![0usize; self.nodes.len()];
        let mut users = vec![Vec::new(); self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for p in &n.premises {
                if let Some(&j) = index.get(p.as_str()) {
                    indegree[i] += 1;
                    users[j].push(i);
                }
            }
        }
        let mut ready: Vec<usize> = (0..self.nodes.len()).filter(|&i| indegree[i] == 0).rev().collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(i) = ready.pop() {
            order.push(i);
            for &u in users[i].iter().rev() {
                indegree[u] -= 1;
                if indegree[u] == 0 {
                    ready.push(u);
                }
            }
        }
        (order.len() == self.nodes.len()).then_some(order)
    }

    fn cyclic_nodes(&self) -> Vec<String> {
        if self.topological_order().is_some() {
            return Vec::new();
        }
        // Peel nodes without remaining premises; what is left sits on or above a cycle.
        let index = self.index();
        let mut alive = vec![true; self.nodes.len()];
        loop {
            let mut changed = false;
            for (i, n) in self.nodes.iter().enumerate() {
                if alive[i] && n.premises.iter().all(|p| index.get(p.as_str()).is_none_or(|&j| !alive[j])) {
                    alive[i] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.nodes.iter().zip(alive).filter(|(_, a)| *a).map(|(n, _)| n.id.clone()).collect()
    }

    /// Serializes with formulas in the concrete grammar.
    pub fn to_json(&self) -> String {
        let raw = RawProof {
            root: Some(self.root.clone()),
            nodes: self
                .nodes
                .iter()
                .map(|n| RawNode {
                    id: n.id.clone(),
                    sentence: FormulaSrc::Text(n.sentence.to_string()),
                    rule: n.rule,
                    premises: n.premises.clone(),
                    witness: n.witness.clone(),
                    matrix: n.matrix.as_ref().map(|m| FormulaSrc::Text(m.to_string())),
                    var: n.var.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("proofs serialize")
    }
}
