//! The formula language: terms, formulas, parsing and printing, and the
//! occurrence machinery (surface choices, developments, yields).

mod formula;
mod moves;
mod parse;
mod term;

pub use formula::{alpha_eq, Connective, Formula, HaltAtom, Quantifier};
pub use moves::{
    apply_labmove, check_labmove, count_owned, developments, occurrence_info, subformula, surface_choices,
    yield_of, ChoiceKind, Development, Labmove, MoveError, MoveTemplate, OccurrenceInfo, OccurrencePath,
    Payload, Player, Run, SurfaceChoice, TemplatePayload, YieldError,
};
pub use parse::{parse, parse_sentence, parse_term};
pub use term::Term;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("syntax error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("unbound variables in sentence: {}", vars.join(", "))]
    Unbound { vars: Vec<String> },
    #[error("substituting for {replaced} would capture {var}")]
    Capture { var: String, replaced: String },
    #[error("variable {var} is not fresh")]
    NotFresh { var: String },
}

/// Canonical text of a formula.
pub fn print(f: &Formula) -> String {
    f.to_string()
}
