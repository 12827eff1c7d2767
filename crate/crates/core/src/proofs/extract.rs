use std::collections::BTreeMap;

use super::{check_proof, Proof, Report, Rule, SystemId};
use crate::strategies::Strategy;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub strategy: Strategy,
    /// Nodes turned into strategies, each exactly once.
    pub nodes_visited: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum ExtractError {
    #[error("proof rejected under {}: {} violation(s)", .0.system, .0.violations.len())]
    Rejected(Box<Report>),
    #[error("LC node {0} has no witness")]
    MissingWitness(String),
}

/// Builds a strategy for the proof's conclusion by structural recursion
/// over the DAG, one constructor per node.
pub fn extract(proof: &Proof, system: SystemId) -> Result<Extraction, ExtractError> {
    let report = check_proof(proof, system);
    if !report.accepted {
        return Err(ExtractError::Rejected(Box::new(report)));
    }
    let order = proof.topological_order().expect("accepted proofs are acyclic");
    let mut done: BTreeMap<&str, Strategy> = BTreeMap::new();
    for i in order {
        let n = &proof.nodes[i];
        let premise = |k: usize| done[n.premises[k].as_str()].clone();
        let params = || (n.matrix.clone().expect("checked"), n.var.clone().expect("checked"));
        let s = match n.rule {
            Rule::Ax8 => Strategy::Axiom8,
            r if r.is_axiom() => Strategy::silent(n.sentence.clone()),
            Rule::Lc => {
                let script = n.witness.clone().ok_or_else(|| ExtractError::MissingWitness(n.id.clone()))?;
                let slots = n.premises.iter().map(|p| (p.clone(), done[p.as_str()].clone())).collect();
                Strategy::script(n.sentence.clone(), script, slots)
            }
            Rule::Ind => {
                let (matrix, var) = params();
                Strategy::Induction { base: Box::new(premise(0)), step: Box::new(premise(1)), matrix, var }
            }
            Rule::Fs => {
                let (matrix, var) = params();
                Strategy::finite_search(premise(0), matrix, var)
            }
            Rule::Is => {
                let (matrix, var) = params();
                Strategy::infinite_search(premise(0), matrix, var)
            }
            Rule::Constr => {
                let (matrix, var) = params();
                Strategy::Constructivization { matrix, var }
            }
            _ => unreachable!("axioms handled above"),
        };
        done.insert(n.id.as_str(), s);
    }
    let nodes_visited = done.len();
    let strategy = done.remove(proof.root.as_str()).expect("root checked");
    Ok(Extraction { strategy, nodes_visited })
}
