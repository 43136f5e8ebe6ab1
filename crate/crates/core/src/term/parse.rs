//! Recursive-descent parser.
//!
//! ```text
//! term     := impl
//! impl     := or ("->" impl)?
//! or       := and ("|" and)*
//! and      := atomexpr ("&" atomexpr)*
//! atomexpr := "top" | "bot" | ident ("@" ident)? | "(" term ")"
//! ```

use std::sync::Arc;

use super::{LatTerm, ObsTerm};
use crate::error::{Error, Result};
use crate::graph::Atom;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    At,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    End,
}

impl Token<'_> {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::At => "`@`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax { pos, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token<'_>)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'@' => Token::At,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    i += 1;
                    Token::Arrow
                } else {
                    return Err(syntax(i, "expected `->`"));
                }
            }
            c if c.is_ascii_alphanumeric() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(&text[start..i])));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Token::End));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token<'a> {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token<'a> {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn implication(&mut self) -> Result<ObsTerm> {
        let lhs = self.disjunction()?;
        if *self.peek() == Token::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(ObsTerm::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<ObsTerm> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Token::Or {
            self.bump();
            lhs = ObsTerm::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<ObsTerm> {
        let mut lhs = self.primary()?;
        while *self.peek() == Token::And {
            self.bump();
            lhs = ObsTerm::and(lhs, self.primary()?);
        }
        Ok(lhs)
    }

    fn primary(&mut self) -> Result<ObsTerm> {
        let at = self.offset();
        match self.bump() {
            Token::Ident("top") => Ok(ObsTerm::Top),
            Token::Ident("bot") => Ok(ObsTerm::Bot),
            Token::Ident(name) => {
                let component = if *self.peek() == Token::At {
                    self.bump();
                    let at_index = self.offset();
                    match self.bump() {
                        Token::Ident(i) if i != "top" && i != "bot" => Some(Arc::from(i)),
                        other => {
                            return Err(syntax(
                                at_index,
                                format!("expected component index, found {}", other.describe()),
                            ))
                        }
                    }
                } else {
                    None
                };
                Ok(ObsTerm::Atom(Atom::from_parts(Arc::from(name), component)))
            }
            Token::LParen => {
                let inner = self.implication()?;
                let close = self.offset();
                match self.bump() {
                    Token::RParen => Ok(inner),
                    other => Err(syntax(close, format!("expected `)`, found {}", other.describe()))),
                }
            }
            other => Err(syntax(at, format!("expected a term, found {}", other.describe()))),
        }
    }
}

/// Parses an observation term.
pub fn parse_term(text: &str) -> Result<ObsTerm> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0 };
    let t = p.implication()?;
    match p.peek() {
        Token::End => Ok(t),
        other => Err(syntax(p.offset(), format!("unexpected {}", other.describe()))),
    }
}

/// Parses a term that must not contain `->`.
pub fn parse_lat(text: &str) -> Result<LatTerm> {
    let t = parse_term(text)?;
    t.to_lat().ok_or_else(|| {
        let pos = text.find("->").unwrap_or(0);
        syntax(pos, "implication is not allowed in a lattice term")
    })
}
