//! Recursive-descent parser for the concrete formula grammar.
//!
//! ```text
//! formula  := disj ( "->" formula )?
//! disj     := conj ( ("v" | "vv") conj )*
//! conj     := unary ( ("&" | "&&") unary )*
//! unary    := "~" unary | QUANT "."? formula | "(" formula ")" | atom
//! QUANT    := ("A" | "AA" | "E" | "EE") var
//! atom     := term "=" term | term "!=" term | "T" "(" term "," term "," term "," term ")"
//! term     := prod ( "+" prod )*
//! prod     := post ( "*" post )*
//! post     := prim "'"*
//! prim     := var | digits | "(" term ")"
//! ```
//!
//! The Unicode symbols ¬ ∧ ∨ → ∀ ∃ ⊓ ⊔ × ′ are accepted as alternatives.

use super::formula::{Connective, Formula, Quantifier};
use super::term::Term;
use super::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Num(u64),
    Quant(Quantifier, String),
    Halt,
    Prime,
    Plus,
    Times,
    Eq,
    Neq,
    Not,
    Bin(Connective),
    LParen,
    RParen,
    Dot,
    Comma,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_lowercase()
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_'
}

fn lex(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let ident_at = |start: usize| -> (String, usize) {
        let mut j = start;
        let mut s = String::new();
        while j < chars.len() && is_ident_char(chars[j].1) {
            s.push(chars[j].1);
            j += 1;
        }
        (s, j)
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        let next = chars.get(i + 1).map(|p| p.1);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, pos });
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                push(&mut out, Tok::LParen);
                i += 1
            }
            ')' => {
                push(&mut out, Tok::RParen);
                i += 1
            }
            '.' => {
                push(&mut out, Tok::Dot);
                i += 1
            }
            ',' => {
                push(&mut out, Tok::Comma);
                i += 1
            }
            '\'' | '′' => {
                push(&mut out, Tok::Prime);
                i += 1
            }
            '+' => {
                push(&mut out, Tok::Plus);
                i += 1
            }
            '*' | '×' => {
                push(&mut out, Tok::Times);
                i += 1
            }
            '=' => {
                push(&mut out, Tok::Eq);
                i += 1
            }
            '≠' => {
                push(&mut out, Tok::Neq);
                i += 1
            }
            '!' if next == Some('=') => {
                push(&mut out, Tok::Neq);
                i += 2
            }
            '~' | '¬' => {
                push(&mut out, Tok::Not);
                i += 1
            }
            '-' if next == Some('>') => {
                push(&mut out, Tok::Bin(Connective::Implies));
                i += 2
            }
            '→' => {
                push(&mut out, Tok::Bin(Connective::Implies));
                i += 1
            }
            '&' => {
                if next == Some('&') {
                    push(&mut out, Tok::Bin(Connective::ChAnd));
                    i += 2
                } else {
                    push(&mut out, Tok::Bin(Connective::And));
                    i += 1
                }
            }
            '∧' => {
                push(&mut out, Tok::Bin(Connective::And));
                i += 1
            }
            '∨' => {
                push(&mut out, Tok::Bin(Connective::Or));
                i += 1
            }
            '⊓' | '⊔' | '∀' | '∃' => {
                // ⊓/⊔ glued to a variable quantify; otherwise they are binary
                let mut k = i + 1;
                if matches!(c, '∀' | '∃') {
                    while k < chars.len() && chars[k].1.is_whitespace() {
                        k += 1;
                    }
                }
                let quantified = k < chars.len() && is_ident_start(chars[k].1);
                match (c, quantified) {
                    ('⊓', false) => push(&mut out, Tok::Bin(Connective::ChAnd)),
                    ('⊔', false) => push(&mut out, Tok::Bin(Connective::ChOr)),
                    (_, true) => {
                        let q = match c {
                            '⊓' => Quantifier::ChAll,
                            '⊔' => Quantifier::ChEx,
                            '∀' => Quantifier::ForAll,
                            _ => Quantifier::Exists,
                        };
                        let (name, end) = ident_at(k);
                        out.push(Token { tok: Tok::Quant(q, name), pos });
                        i = end;
                        continue;
                    }
                    _ => return Err(SyntaxError::Parse { pos, message: format!("expected a variable after '{c}'") }),
                }
                i += 1
            }
            'A' | 'E' => {
                let doubled = next == Some(c);
                let start = if doubled { i + 2 } else { i + 1 };
                if start >= chars.len() || !is_ident_start(chars[start].1) {
                    return Err(SyntaxError::Parse { pos, message: format!("expected a variable after '{c}'") });
                }
                let (name, end) = ident_at(start);
                let q = match (c, doubled) {
                    ('A', false) => Quantifier::ForAll,
                    ('A', true) => Quantifier::ChAll,
                    ('E', false) => Quantifier::Exists,
                    _ => Quantifier::ChEx,
                };
                out.push(Token { tok: Tok::Quant(q, name), pos });
                i = end;
            }
            'T' => {
                push(&mut out, Tok::Halt);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                let mut n: u64 = 0;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    let d = chars[j].1.to_digit(10).unwrap() as u64;
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d))
                        .ok_or(SyntaxError::Parse { pos, message: "numeral too large".into() })?;
                    j += 1;
                }
                push(&mut out, Tok::Num(n));
                i = j;
            }
            c if is_ident_start(c) => {
                let (name, end) = ident_at(i);
                let tok = match name.as_str() {
                    "v" => Tok::Bin(Connective::Or),
                    "vv" => Tok::Bin(Connective::ChOr),
                    _ => Tok::Var(name),
                };
                push(&mut out, tok);
                i = end;
            }
            other => return Err(SyntaxError::Parse { pos, message: format!("unexpected character '{other}'") }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError::Parse { pos: self.pos(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), SyntaxError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Tok::Bin(Connective::Implies)) {
            self.at += 1;
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.conjunction()?;
        while let Some(Tok::Bin(c @ (Connective::Or | Connective::ChOr))) = self.peek() {
            let c = *c;
            self.at += 1;
            let rhs = self.conjunction()?;
            acc = Formula::binary(c, acc, rhs);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Bin(c @ (Connective::And | Connective::ChAnd))) = self.peek() {
            let c = *c;
            self.at += 1;
            let rhs = self.unary()?;
            acc = Formula::binary(c, acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.at += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Quant(q, x)) => {
                let (q, x) = (*q, x.clone());
                self.at += 1;
                if self.peek() == Some(&Tok::Dot) {
                    self.at += 1;
                }
                let body = self.formula()?;
                Ok(Formula::quant(q, x, body))
            }
            Some(Tok::LParen) => {
                let save = self.at;
                if let Ok(atom) = self.atom() {
                    return Ok(atom);
                }
                self.at = save + 1;
                let inner = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => self.atom(),
            None => self.err("unexpected end of input"),
        }
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        if self.peek() == Some(&Tok::Halt) {
            self.at += 1;
            self.expect(Tok::LParen, "'(' after T")?;
            let mut args = Vec::with_capacity(4);
            for k in 0..4 {
                if k > 0 {
                    self.expect(Tok::Comma, "',' between T arguments (T takes 4 terms)")?;
                }
                args.push(self.term()?);
            }
            self.expect(Tok::RParen, "')' closing T (T takes 4 terms)")?;
            let mut it = args.into_iter();
            let (m, y, z, t) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
            return Ok(Formula::halts(m, y, z, t));
        }
        let lhs = self.term()?;
        match self.peek() {
            Some(Tok::Eq) => {
                self.at += 1;
                Ok(Formula::eq(lhs, self.term()?))
            }
            Some(Tok::Neq) => {
                self.at += 1;
                Ok(Formula::not(Formula::eq(lhs, self.term()?)))
            }
            _ => self.err("expected '=' or '!=' after a term"),
        }
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let mut acc = self.product()?;
        while self.peek() == Some(&Tok::Plus) {
            self.at += 1;
            acc = Term::plus(acc, self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Term, SyntaxError> {
        let mut acc = self.postfix()?;
        while self.peek() == Some(&Tok::Times) {
            self.at += 1;
            acc = Term::times(acc, self.postfix()?);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.primary()?;
        while self.peek() == Some(&Tok::Prime) {
            self.at += 1;
            t = Term::succ(t);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, SyntaxError> {
        match self.peek().cloned() {
            Some(Tok::Var(v)) => {
                self.at += 1;
                Ok(Term::Var(v))
            }
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Term::num(n))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            Some(Tok::Halt) => self.err("T is a 4-ary predicate, not a term"),
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a formula; the result is in canonical numeral form.
pub fn parse(src: &str) -> Result<Formula, SyntaxError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let f = p.formula()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(f.canonical())
}

/// Like [`parse`], but rejects formulas with free variables.
pub fn parse_sentence(src: &str) -> Result<Formula, SyntaxError> {
    let f = parse(src)?;
    let free = f.free_vars_ordered();
    if !free.is_empty() {
        return Err(SyntaxError::Unbound { vars: free });
    }
    Ok(f)
}

/// Parses a standalone term (canonical numerals).
pub fn parse_term(src: &str) -> Result<Term, SyntaxError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let t = p.term()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(t.canonical())
}
