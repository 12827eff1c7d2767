use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::compose::{compose_games, ComposeT};
use super::script::{validate_script, ScriptT, WitnessScript};
use super::search::{ConstructivizationT, InductionT, SearchT};
use super::transducer::{Axiom8T, CopycatT, InstantiateT, SilentT, Transducer};
use super::StrategyError;
use crate::games::Oracle;
use crate::syntax::{Formula, OccurrencePath, Term};

/// A strategy as a constructor tree. [`Strategy::start`] turns it into a
/// running transducer; [`Strategy::game`] names the game it is meant to win.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "combinator", rename_all = "snake_case")]
pub enum Strategy {
    Silent {
        game: Formula,
    },
    Axiom8,
    Copycat {
        game: Formula,
    },
    FiniteSearch {
        decider: Box<Strategy>,
        matrix: Formula,
        var: String,
    },
    InfiniteSearch {
        decider: Box<Strategy>,
        matrix: Formula,
        var: String,
    },
    Constructivization {
        matrix: Formula,
        var: String,
    },
    Compose {
        provider: Box<Strategy>,
        consumer: Box<Strategy>,
    },
    Induction {
        base: Box<Strategy>,
        step: Box<Strategy>,
        matrix: Formula,
        var: String,
    },
    Script {
        game: Formula,
        script: WitnessScript,
        #[serde(default)]
        slots: BTreeMap<String, Strategy>,
    },
    Instantiate {
        inner: Box<Strategy>,
        constants: Vec<u64>,
    },
}

pub fn axiom8_game() -> Formula {
    Formula::ch_all(
        "x",
        Formula::ch_ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x")))),
    )
}

fn require_elementary(f: &Formula) -> Result<(), StrategyError> {
    if f.is_elementary() {
        Ok(())
    } else {
        Err(StrategyError::NotElementary(f.to_string()))
    }
}

/// Instantiates the first `constants.len()` leading `⊓` quantifiers.
pub fn instantiate_prefix(game: &Formula, constants: &[u64]) -> Result<Formula, StrategyError> {
    let mut g = game.clone();
    for c in constants {
        match g {
            Formula::ChAll(x, body) => g = body.instantiate(&x, *c),
            other => {
                return Err(StrategyError::Instantiation {
                    game: game.to_string(),
                    wanted: constants.len(),
                    at: other.to_string(),
                })
            }
        }
    }
    Ok(g)
}

impl Strategy {
    pub fn silent(game: Formula) -> Strategy {
        Strategy::Silent { game }
    }

    pub fn compose(provider: Strategy, consumer: Strategy) -> Strategy {
        Strategy::Compose { provider: Box::new(provider), consumer: Box::new(consumer) }
    }

    pub fn instantiate(inner: Strategy, constants: Vec<u64>) -> Strategy {
        Strategy::Instantiate { inner: Box::new(inner), constants }
    }

    pub fn finite_search(decider: Strategy, matrix: Formula, var: impl Into<String>) -> Strategy {
        Strategy::FiniteSearch { decider: Box::new(decider), matrix, var: var.into() }
    }

    pub fn infinite_search(decider: Strategy, matrix: Formula, var: impl Into<String>) -> Strategy {
        Strategy::InfiniteSearch { decider: Box::new(decider), matrix, var: var.into() }
    }

    pub fn script(game: Formula, script: WitnessScript, slots: BTreeMap<String, Strategy>) -> Strategy {
        Strategy::Script { game, script, slots }
    }

    /// Name of the outermost constructor.
    pub fn combinator(&self) -> &'static str {
        match self {
            Strategy::Silent { .. } => "silent",
            Strategy::Axiom8 => "axiom8",
            Strategy::Copycat { .. } => "copycat",
            Strategy::FiniteSearch { .. } => "finite_search",
            Strategy::InfiniteSearch { .. } => "infinite_search",
            Strategy::Constructivization { .. } => "constructivization",
            Strategy::Compose { .. } => "compose",
            Strategy::Induction { .. } => "induction",
            Strategy::Script { .. } => "script",
            Strategy::Instantiate { .. } => "instantiate",
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        1 + match self {
            Strategy::FiniteSearch { decider, .. } | Strategy::InfiniteSearch { decider, .. } => decider.size(),
            Strategy::Compose { provider, consumer } => provider.size() + consumer.size(),
            Strategy::Induction { base, step, .. } => base.size() + step.size(),
            Strategy::Script { slots, .. } => slots.values().map(Strategy::size).sum(),
            Strategy::Instantiate { inner, .. } => inner.size(),
            _ => 0,
        }
    }

    /// The game this strategy plays.
    pub fn game(&self) -> Result<Formula, StrategyError> {
        Ok(match self {
            Strategy::Silent { game } => game.clone(),
            Strategy::Axiom8 => axiom8_game(),
            Strategy::Copycat { game } => Formula::implies(game.clone(), game.clone()),
            Strategy::FiniteSearch { matrix, var, .. } => {
                require_elementary(matrix)?;
                Formula::ch_ex(var.clone(), matrix.clone()).choice_closure()
            }
            Strategy::InfiniteSearch { matrix, var, .. } => {
                require_elementary(matrix)?;
                Formula::implies(
                    Formula::exists(var.clone(), matrix.clone()),
                    Formula::ch_ex(var.clone(), matrix.clone()),
                )
                .choice_closure()
            }
            Strategy::Constructivization { matrix, var } => {
                require_elementary(matrix)?;
                let g = Formula::ch_ex(var.clone(), matrix.clone());
                let free = g.free_vars_ordered();
                if !free.is_empty() {
                    return Err(StrategyError::FreeVariables(free));
                }
                g
            }
            Strategy::Compose { provider, consumer } => compose_games(&provider.game()?, &consumer.game()?)?.1,
            Strategy::Induction { matrix, .. } => matrix.choice_closure(),
            Strategy::Script { game, .. } => game.clone(),
            Strategy::Instantiate { inner, constants } => instantiate_prefix(&inner.game()?, constants)?,
        })
    }

    /// Static checks short of running: games compose, scripts compile.
    pub fn validate(&self) -> Result<(), StrategyError> {
        self.game()?;
        match self {
            Strategy::FiniteSearch { decider, .. } | Strategy::InfiniteSearch { decider, .. } => decider.validate(),
            Strategy::Compose { provider, consumer } => {
                provider.validate()?;
                consumer.validate()
            }
            Strategy::Induction { base, step, .. } => {
                base.validate()?;
                step.validate()
            }
            Strategy::Script { script, slots, .. } => {
                validate_script(script, slots)?;
                slots.values().try_for_each(Strategy::validate)
            }
            Strategy::Instantiate { inner, .. } => inner.validate(),
            _ => Ok(()),
        }
    }

    /// A fresh running instance, using `oracle` for every truth query.
    pub fn start(&self, oracle: &Oracle) -> Result<Box<dyn Transducer>, StrategyError> {
        let oracle = *oracle;
        Ok(match self {
            Strategy::Silent { .. } => Box::new(SilentT),
            Strategy::Axiom8 => Box::<Axiom8T>::default(),
            Strategy::Copycat { .. } => Box::<CopycatT>::default(),
            Strategy::FiniteSearch { decider, matrix, var } => {
                self.game()?;
                Box::new(SearchT::new((**decider).clone(), matrix, var, OccurrencePath::root(), oracle))
            }
            Strategy::InfiniteSearch { decider, matrix, var } => {
                self.game()?;
                Box::new(SearchT::new((**decider).clone(), matrix, var, OccurrencePath::root().child(1), oracle))
            }
            Strategy::Constructivization { matrix, var } => {
                self.game()?;
                Box::new(ConstructivizationT::new(matrix.clone(), var, oracle))
            }
            Strategy::Compose { provider, consumer } => {
                let (mode, _) = compose_games(&provider.game()?, &consumer.game()?)?;
                Box::new(ComposeT::new(mode, provider.start(&oracle)?, consumer.start(&oracle)?))
            }
            Strategy::Induction { base, step, matrix, var } => {
                Box::new(InductionT::new((**base).clone(), (**step).clone(), matrix.clone(), var, oracle))
            }
            Strategy::Script { script, slots, .. } => Box::new(ScriptT::new(script, slots, oracle)?),
            Strategy::Instantiate { inner, constants } => {
                self.game()?;
                Box::new(InstantiateT::new(inner.start(&oracle)?, constants.clone()))
            }
        })
    }
}

/// A script for the ⊓-closure of `F ⊔ ¬F` that reads the closure constants
/// and asks the truth oracle.
pub fn truth_decider(matrix: &Formula) -> Strategy {
    use super::script::{Instr, PayloadExpr};
    let mut program: Vec<Instr> = matrix
        .free_vars_ordered()
        .into_iter()
        .map(|v| Instr::WaitFor { at: OccurrencePath::root(), bind: Some(v) })
        .collect();
    program.push(Instr::IfTruth {
        formula: matrix.to_string(),
        then: vec![Instr::Move { at: OccurrencePath::root(), payload: PayloadExpr::Left }],
        otherwise: vec![Instr::Move { at: OccurrencePath::root(), payload: PayloadExpr::Right }],
    });
    let game = Formula::ch_or(matrix.clone(), Formula::not(matrix.clone())).choice_closure();
    Strategy::script(game, WitnessScript::new(program), BTreeMap::new())
}
