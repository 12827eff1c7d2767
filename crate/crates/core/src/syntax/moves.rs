//! Occurrences, labmoves, developments and the intensional yield.
//!
//! A path addresses a subformula occurrence by child indices from the root
//! (index 0 is the left operand or the quantifier body). An occurrence is on
//! the surface when the path crosses no choice operator, no classical
//! quantifier and no atom. Negation and the antecedent of an implication are
//! crossed with reversed polarity: a choice occurrence under an odd number of
//! them is resolved by the opposite player.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::formula::Formula;
use super::term::Term;
use super::SyntaxError;

/// ⊤ (the machine) or ⊥ (the environment).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Machine,
    Environment,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Machine => Player::Environment,
            Player::Environment => Player::Machine,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Player::Machine => '⊤',
            Player::Environment => '⊥',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OccurrencePath(pub Vec<usize>);

impl OccurrencePath {
    pub fn root() -> Self {
        OccurrencePath(Vec::new())
    }

    pub fn child(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        OccurrencePath(v)
    }

    pub fn prefixed(&self, i: usize) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        OccurrencePath(v)
    }

    /// Splits off the first index.
    pub fn split_first(&self) -> Option<(usize, OccurrencePath)> {
        self.0.split_first().map(|(h, t)| (*h, OccurrencePath(t.to_vec())))
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for OccurrencePath {
    fn from(v: Vec<usize>) -> Self {
        OccurrencePath(v)
    }
}

impl fmt::Display for OccurrencePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Payload {
    Left,
    Right,
    Const(u64),
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Left => f.write_str("left"),
            Payload::Right => f.write_str("right"),
            Payload::Const(n) => write!(f, "{n}"),
        }
    }
}

/// A move labeled with its author.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Labmove {
    pub player: Player,
    pub path: OccurrencePath,
    pub payload: Payload,
}

impl Labmove {
    pub fn new(player: Player, path: impl Into<OccurrencePath>, payload: Payload) -> Self {
        Labmove { player, path: path.into(), payload }
    }

    pub fn env(path: impl Into<OccurrencePath>, payload: Payload) -> Self {
        Labmove::new(Player::Environment, path, payload)
    }

    pub fn machine(path: impl Into<OccurrencePath>, payload: Payload) -> Self {
        Labmove::new(Player::Machine, path, payload)
    }
}

impl fmt::Display for Labmove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}@{}", self.player, self.payload, self.path)
    }
}

pub type Run = Vec<Labmove>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TemplatePayload {
    Left,
    Right,
    /// Any natural number.
    Constant,
}

/// A labmove with the constant left schematic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveTemplate {
    pub player: Player,
    pub path: OccurrencePath,
    pub payload: TemplatePayload,
}

impl MoveTemplate {
    pub fn matches(&self, mv: &Labmove) -> bool {
        self.player == mv.player
            && self.path == mv.path
            && matches!(
                (self.payload, mv.payload),
                (TemplatePayload::Left, Payload::Left)
                    | (TemplatePayload::Right, Payload::Right)
                    | (TemplatePayload::Constant, Payload::Const(_))
            )
    }

    pub fn of(mv: &Labmove) -> Self {
        MoveTemplate {
            player: mv.player,
            path: mv.path.clone(),
            payload: match mv.payload {
                Payload::Left => TemplatePayload::Left,
                Payload::Right => TemplatePayload::Right,
                Payload::Const(_) => TemplatePayload::Constant,
            },
        }
    }
}

/// Kind of choice operator found at an occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChoiceKind {
    Conjunction,
    Disjunction,
    Universal,
    Existential,
}

impl ChoiceKind {
    fn of(f: &Formula) -> Option<ChoiceKind> {
        match f {
            Formula::ChAnd(..) => Some(ChoiceKind::Conjunction),
            Formula::ChOr(..) => Some(ChoiceKind::Disjunction),
            Formula::ChAll(..) => Some(ChoiceKind::Universal),
            Formula::ChEx(..) => Some(ChoiceKind::Existential),
            _ => None,
        }
    }

    /// Who resolves an occurrence in positive position.
    pub fn positive_owner(self) -> Player {
        match self {
            ChoiceKind::Conjunction | ChoiceKind::Universal => Player::Environment,
            ChoiceKind::Disjunction | ChoiceKind::Existential => Player::Machine,
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(self, ChoiceKind::Conjunction | ChoiceKind::Disjunction)
    }
}

/// A choice occurrence on the surface, with the player entitled to resolve it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceChoice {
    pub path: OccurrencePath,
    pub kind: ChoiceKind,
    pub owner: Player,
}

/// Polarity and surface status of the occurrence at a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OccurrenceInfo {
    pub surface: bool,
    pub negative: bool,
}

pub fn subformula<'a>(f: &'a Formula, path: &OccurrencePath) -> Option<&'a Formula> {
    let mut cur = f;
    for &i in &path.0 {
        cur = *cur.children().get(i)?;
    }
    Some(cur)
}

/// Surface status and polarity of `path`; `None` if the path does not exist.
pub fn occurrence_info(f: &Formula, path: &OccurrencePath) -> Option<OccurrenceInfo> {
    let mut cur = f;
    let mut info = OccurrenceInfo { surface: true, negative: false };
    for &i in &path.0 {
        let child = *cur.children().get(i)?;
        match cur {
            Formula::Not(_) => info.negative = !info.negative,
            Formula::Implies(..) if i == 0 => info.negative = !info.negative,
            Formula::And(..) | Formula::Or(..) | Formula::Implies(..) => {}
            _ => info.surface = false,
        }
        cur = child;
    }
    Some(info)
}

pub fn surface_choices(f: &Formula) -> Vec<SurfaceChoice> {
    fn walk(f: &Formula, path: &mut Vec<usize>, negative: bool, out: &mut Vec<SurfaceChoice>) {
        if let Some(kind) = ChoiceKind::of(f) {
            let owner = kind.positive_owner();
            out.push(SurfaceChoice {
                path: OccurrencePath(path.clone()),
                kind,
                owner: if negative { owner.opponent() } else { owner },
            });
            return;
        }
        let mut descend = |i: usize, g: &Formula, neg: bool, out: &mut Vec<SurfaceChoice>| {
            path.push(i);
            walk(g, path, neg, out);
            path.pop();
        };
        match f {
            Formula::Not(g) => descend(0, g, !negative, out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                descend(0, a, negative, out);
                descend(1, b, negative, out);
            }
            Formula::Implies(a, b) => {
                descend(0, a, !negative, out);
                descend(1, b, negative, out);
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    walk(f, &mut Vec::new(), false, &mut out);
    out
}

/// Why a labmove cannot be made at the current position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("path {0} does not address an occurrence")]
    NoSuchPath(OccurrencePath),
    #[error("occurrence at {0} is not on the surface")]
    NotSurface(OccurrencePath),
    #[error("occurrence at {0} is not a choice operator")]
    NotAChoice(OccurrencePath),
    #[error("occurrence at {path} belongs to {owner}, not {player}")]
    WrongPlayer { path: OccurrencePath, owner: Player, player: Player },
    #[error("payload {payload} does not fit the {kind:?} at {path}")]
    WrongPayload { path: OccurrencePath, kind: ChoiceKind, payload: Payload },
}

/// Checks legality of a single labmove and returns the occurrence kind.
pub fn check_labmove(f: &Formula, mv: &Labmove) -> Result<ChoiceKind, MoveError> {
    let target = subformula(f, &mv.path).ok_or_else(|| MoveError::NoSuchPath(mv.path.clone()))?;
    let kind = ChoiceKind::of(target).ok_or_else(|| MoveError::NotAChoice(mv.path.clone()))?;
    let info = occurrence_info(f, &mv.path).expect("path exists");
    if !info.surface {
        return Err(MoveError::NotSurface(mv.path.clone()));
    }
    let owner = if info.negative { kind.positive_owner().opponent() } else { kind.positive_owner() };
    if owner != mv.player {
        return Err(MoveError::WrongPlayer { path: mv.path.clone(), owner, player: mv.player });
    }
    let fits = match mv.payload {
        Payload::Left | Payload::Right => kind.is_binary(),
        Payload::Const(_) => !kind.is_binary(),
    };
    if !fits {
        return Err(MoveError::WrongPayload { path: mv.path.clone(), kind, payload: mv.payload });
    }
    Ok(kind)
}

fn replace_at(f: &Formula, path: &[usize], by: Formula) -> Formula {
    let mut out = f.clone();
    let mut cur = &mut out;
    for &i in path {
        cur = cur.child_mut(i).expect("path checked");
    }
    *cur = by;
    out
}

/// The formula a single legal labmove brings `f` down to.
pub fn apply_labmove(f: &Formula, mv: &Labmove) -> Result<Formula, MoveError> {
    check_labmove(f, mv)?;
    let target = subformula(f, &mv.path).expect("checked");
    let replacement = match (target, mv.payload) {
        (Formula::ChAnd(a, _) | Formula::ChOr(a, _), Payload::Left) => (**a).clone(),
        (Formula::ChAnd(_, b) | Formula::ChOr(_, b), Payload::Right) => (**b).clone(),
        (Formula::ChAll(x, body) | Formula::ChEx(x, body), Payload::Const(c)) => body.instantiate(x, c),
        _ => unreachable!("payload fit was checked"),
    };
    Ok(replace_at(f, &mv.path.0, replacement))
}

/// A legal run prefix failed at `index`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("labmove #{index} ({mv}) is illegal: {source}")]
pub struct YieldError {
    pub index: usize,
    pub mv: Labmove,
    #[source]
    pub source: MoveError,
}

/// The intensional yield `⟨Φ⟩!F`: peel the first labmove, rewrite, recurse.
pub fn yield_of(f: &Formula, run: &[Labmove]) -> Result<Formula, YieldError> {
    let mut cur = f.clone();
    for (index, mv) in run.iter().enumerate() {
        cur = apply_labmove(&cur, mv).map_err(|source| YieldError { index, mv: mv.clone(), source })?;
    }
    Ok(cur)
}

/// One (p, y)-development together with the move template realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Development {
    pub template: MoveTemplate,
    pub result: Formula,
}

/// All (p, y)-developments of `f`: each surface choice owned by `player`
/// replaced by one of its components, or its body with `y` for the bound variable.
pub fn developments(f: &Formula, player: Player, y: &str) -> Result<Vec<Development>, SyntaxError> {
    if f.all_vars().contains(y) {
        return Err(SyntaxError::NotFresh { var: y.to_string() });
    }
    let mut out = Vec::new();
    for sc in surface_choices(f).into_iter().filter(|sc| sc.owner == player) {
        let target = subformula(f, &sc.path).expect("surface path exists");
        let template = |payload| MoveTemplate { player, path: sc.path.clone(), payload };
        match target {
            Formula::ChAnd(a, b) | Formula::ChOr(a, b) => {
                out.push(Development {
                    template: template(TemplatePayload::Left),
                    result: replace_at(f, &sc.path.0, (**a).clone()),
                });
                out.push(Development {
                    template: template(TemplatePayload::Right),
                    result: replace_at(f, &sc.path.0, (**b).clone()),
                });
            }
            Formula::ChAll(x, body) | Formula::ChEx(x, body) => {
                let inst = body.substitute(x, &Term::var(y))?;
                out.push(Development {
                    template: template(TemplatePayload::Constant),
                    result: replace_at(f, &sc.path.0, inst),
                });
            }
            _ => unreachable!("surface choices are choice operators"),
        }
    }
    Ok(out)
}

/// Counts surface choice occurrences by (connective, quantifier) owned by `player`.
pub fn count_owned(f: &Formula, player: Player) -> (usize, usize) {
    surface_choices(f)
        .into_iter()
        .filter(|sc| sc.owner == player)
        .fold((0, 0), |(b, q), sc| if sc.kind.is_binary() { (b + 1, q) } else { (b, q + 1) })
}
