use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Arithmetic terms over `0`, `'`, `+` and `*`.
///
/// `Numeral(n)` is shorthand for `0` followed by `n` successor marks. The
/// canonical representation (see [`Term::canonical`]) folds every successor
/// chain over a numeral into a single `Numeral` and writes `Numeral(0)` as
/// `Zero`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "node", content = "args")]
pub enum Term {
    Zero,
    Numeral(u64),
    Var(String),
    Succ(Box<Term>),
    Plus(Box<Term>, Box<Term>),
    Times(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn num(n: u64) -> Term {
        if n == 0 {
            Term::Zero
        } else {
            Term::Numeral(n)
        }
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn plus(a: Term, b: Term) -> Term {
        Term::Plus(Box::new(a), Box::new(b))
    }

    pub fn times(a: Term, b: Term) -> Term {
        Term::Times(Box::new(a), Box::new(b))
    }

    /// Numeric value if the term is a (possibly unfolded) standard numeral.
    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            Term::Zero => Some(0),
            Term::Numeral(n) => Some(*n),
            Term::Succ(t) => t.as_numeral().and_then(|n| n.checked_add(1)),
            _ => None,
        }
    }

    pub fn canonical(&self) -> Term {
        match self {
            Term::Zero | Term::Numeral(0) => Term::Zero,
            Term::Numeral(n) => Term::Numeral(*n),
            Term::Var(v) => Term::Var(v.clone()),
            Term::Succ(t) => {
                let inner = t.canonical();
                match inner.as_numeral().and_then(|n| n.checked_add(1)) {
                    Some(n) => Term::Numeral(n),
                    None => Term::succ(inner),
                }
            }
            Term::Plus(a, b) => Term::plus(a.canonical(), b.canonical()),
            Term::Times(a, b) => Term::times(a.canonical(), b.canonical()),
        }
    }

    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Zero | Term::Numeral(_) => {}
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Succ(t) => t.collect_vars(out),
            Term::Plus(a, b) | Term::Times(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.into_iter().collect()
    }

    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Term::Zero | Term::Numeral(_) => false,
            Term::Var(v) => v == name,
            Term::Succ(t) => t.mentions(name),
            Term::Plus(a, b) | Term::Times(a, b) => a.mentions(name) || b.mentions(name),
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Zero | Term::Numeral(_) => true,
            Term::Var(_) => false,
            Term::Succ(t) => t.is_closed(),
            Term::Plus(a, b) | Term::Times(a, b) => a.is_closed() && b.is_closed(),
        }
    }

    pub fn substitute(&self, name: &str, by: &Term) -> Term {
        match self {
            Term::Var(v) if v == name => by.clone(),
            Term::Zero | Term::Numeral(_) | Term::Var(_) => self.clone(),
            Term::Succ(t) => Term::succ(t.substitute(name, by)),
            Term::Plus(a, b) => Term::plus(a.substitute(name, by), b.substitute(name, by)),
            Term::Times(a, b) => Term::times(a.substitute(name, by), b.substitute(name, by)),
        }
    }

    /// Value of a closed term; `None` on open terms or `u64` overflow.
    pub fn value(&self) -> Option<u64> {
        match self {
            Term::Zero => Some(0),
            Term::Numeral(n) => Some(*n),
            Term::Var(_) => None,
            Term::Succ(t) => t.value()?.checked_add(1),
            Term::Plus(a, b) => a.value()?.checked_add(b.value()?),
            Term::Times(a, b) => a.value()?.checked_mul(b.value()?),
        }
    }

    fn is_compound(&self) -> bool {
        matches!(self, Term::Plus(..) | Term::Times(..))
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compound() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => f.write_str("0"),
            Term::Numeral(n) => {
                f.write_str("0")?;
                for _ in 0..*n {
                    f.write_str("'")?;
                }
                Ok(())
            }
            Term::Var(v) => f.write_str(v),
            Term::Succ(t) => {
                t.fmt_operand(f)?;
                f.write_str("'")
            }
            Term::Plus(a, b) => {
                a.fmt_operand(f)?;
                f.write_str(" + ")?;
                b.fmt_operand(f)
            }
            Term::Times(a, b) => {
                a.fmt_operand(f)?;
                f.write_str(" * ")?;
                b.fmt_operand(f)
            }
        }
    }
}
