//! Recursive-descent parser for formulas and sequents.
//!
//! ```text
//! formula := imp
//! imp     := conj ("=>" imp)?
//! conj    := unary (("." | "&") unary)*
//! unary   := "~" unary | atom
//! atom    := VAR | "#" | "(" formula ")"
//! sequent := [formula ("," formula)*] "->" formula
//! ```

use std::fmt;

use crate::formula::Formula;
use crate::script::Sequent;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {}: {kind}", .pos + 1)]
pub struct SyntaxError {
    /// Byte offset into the parsed text.
    pub pos: usize,
    pub kind: SyntaxErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyntaxErrorKind {
    UnknownToken(char),
    Unexpected { found: String, expected: &'static str },
}

impl fmt::Display for SyntaxErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxErrorKind::UnknownToken(c) => write!(f, "unknown token `{c}`"),
            SyntaxErrorKind::Unexpected { found, expected } => write!(f, "expected {expected}, found {found}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(String),
    Tilde,
    Implies,
    Dot,
    Falsum,
    LParen,
    RParen,
    Comma,
    Turnstile,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Var(v) => write!(f, "`{v}`"),
            Token::Tilde => f.write_str("`~`"),
            Token::Implies => f.write_str("`=>`"),
            Token::Dot => f.write_str("`.`"),
            Token::Falsum => f.write_str("`#`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Comma => f.write_str("`,`"),
            Token::Turnstile => f.write_str("`->`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'~' => Token::Tilde,
            b'.' | b'&' => Token::Dot,
            b'#' => Token::Falsum,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b',' => Token::Comma,
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Implies
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Turnstile
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len() && matches!(bytes[i + 1], b'a'..=b'z' | b'0'..=b'9' | b'_') {
                    i += 1;
                }
                Token::Var(input[start..=i].to_string())
            }
            _ => {
                let ch = input[i..].chars().next().unwrap_or('?');
                return Err(SyntaxError { pos: i, kind: SyntaxErrorKind::UnknownToken(ch) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((input.len(), Token::End));
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, SyntaxError> {
        Ok(Parser { tokens: lex(input)?, at: 0 })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.at].1
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.at].1.clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        tok
    }

    fn error(&self, expected: &'static str) -> SyntaxError {
        let (pos, tok) = &self.tokens[self.at];
        SyntaxError { pos: *pos, kind: SyntaxErrorKind::Unexpected { found: tok.to_string(), expected } }
    }

    fn expect(&mut self, tok: Token, expected: &'static str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.conj()?;
        if *self.peek() == Token::Implies {
            self.bump();
            let right = self.formula()?;
            return Ok(Formula::imp(left, right));
        }
        Ok(left)
    }

    fn conj(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while *self.peek() == Token::Dot {
            self.bump();
            let right = self.unary()?;
            acc = Formula::conj(acc, right);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        if *self.peek() == Token::Tilde {
            self.bump();
            return Ok(Formula::neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().clone() {
            Token::Var(name) => {
                self.bump();
                Ok(Formula::var(&name))
            }
            Token::Falsum => {
                self.bump();
                Ok(Formula::Falsum)
            }
            Token::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error("a formula")),
        }
    }

    fn sequent(&mut self) -> Result<Sequent, SyntaxError> {
        let mut antecedent = Vec::new();
        if *self.peek() != Token::Turnstile {
            antecedent.push(self.formula()?);
            while *self.peek() == Token::Comma {
                self.bump();
                antecedent.push(self.formula()?);
            }
        }
        self.expect(Token::Turnstile, "`,` or `->`")?;
        let succedent = self.formula()?;
        Ok(Sequent::new(antecedent, succedent))
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if *self.peek() == Token::End {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

pub fn parse_formula(input: &str) -> Result<Formula, SyntaxError> {
    let mut p = Parser::new(input)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_sequent(input: &str) -> Result<Sequent, SyntaxError> {
    let mut p = Parser::new(input)?;
    let s = p.sequent()?;
    p.finish()?;
    Ok(s)
}

/// Parses either a sequent or a bare formula `f`, read as `-> f`.
pub fn parse_goal(input: &str) -> Result<Sequent, SyntaxError> {
    if lex(input)?.iter().any(|(_, t)| *t == Token::Turnstile) {
        parse_sequent(input)
    } else {
        Ok(Sequent::new(Vec::new(), parse_formula(input)?))
    }
}
