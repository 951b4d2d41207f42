//! Recursive-descent parser for formula text.
//!
//! ```text
//! implication := disjunction ( "->" implication )?
//! disjunction := conjunction ( "|" conjunction )*
//! conjunction := unary ( "&" unary )*
//! unary       := "!" unary | atom
//! atom        := "true" | "false" | IDENT | "(" implication ")"
//! ```
//!
//! Positions in errors are byte offsets into the input.

use super::formula::Formula;
use super::worlds::Vocabulary;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'!' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Arrow
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                match &text[start..=i] {
                    "true" => Token::True,
                    "false" => Token::False,
                    name => Token::Ident(name.to_string()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        tokens.push((start, token));
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vocab: &'a Vocabulary,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> Error {
        let found = match self.peek() {
            Some(t) => t.describe(),
            None => "end of input".into(),
        };
        Error::Syntax {
            position: self.offset(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Token::Or) {
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Token::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let Some((_, token)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error("a formula"));
        };
        match token {
            Token::True => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Token::False => {
                self.pos += 1;
                Ok(Formula::Bottom)
            }
            Token::Ident(name) => match self.vocab.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Formula::Var(i))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Token::LParen => {
                self.pos += 1;
                let inner = self.implication()?;
                if !self.eat(&Token::RParen) {
                    return Err(self.error("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error("a formula")),
        }
    }
}

/// Parses `text` against `vocab`.
///
/// Precedence, tightest first: `!`, `&`, `|`, `->` (right-associative).
pub fn parse_formula(text: &str, vocab: &Vocabulary) -> Result<Formula> {
    if text.trim().is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty formula".into(),
        });
    }
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        vocab,
    };
    let formula = parser.implication()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("end of input"));
    }
    Ok(formula)
}

/// Collects identifier names in order of first appearance, skipping keywords.
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    if let Ok(tokens) = tokenize(text) {
        for (_, t) in tokens {
            if let Token::Ident(name) = t {
                if !out.contains(&name) {
                    out.push(name);
                }
            }
        }
    }
    out
}
