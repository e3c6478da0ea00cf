//! b-words: terms over generator names built from `0`, `+`, `∘`, additive
//! negation and multiplicative inversion.
//!
//! Concrete syntax (fully parenthesized, whitespace-insensitive):
//!
//! ```text
//! word := '0' | NAME | '(' word '+' word ')' | '(' word 'o' word ')'
//!       | '(' '-' word ')' | '(' word '~' ')'
//! NAME := [a-z][a-z0-9]*
//! ```

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::brace::FiniteSkewBrace;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BWord {
    Zero,
    Gen(String),
    Sum(Box<BWord>, Box<BWord>),
    Prod(Box<BWord>, Box<BWord>),
    Neg(Box<BWord>),
    Inv(Box<BWord>),
}

/// Maps generator names to elements of a target brace.
pub type Assignment = BTreeMap<String, usize>;

impl BWord {
    pub fn gen(name: impl Into<String>) -> Self {
        BWord::Gen(name.into())
    }

    pub fn sum(a: BWord, b: BWord) -> Self {
        BWord::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: BWord, b: BWord) -> Self {
        BWord::Prod(Box::new(a), Box::new(b))
    }

    pub fn neg(a: BWord) -> Self {
        BWord::Neg(Box::new(a))
    }

    pub fn inv(a: BWord) -> Self {
        BWord::Inv(Box::new(a))
    }

    /// `a − b`, written `(a + (- b))`.
    pub fn difference(a: BWord, b: BWord) -> Self {
        Self::sum(a, Self::neg(b))
    }

    /// `a ∘ b⁻¹`, written `(a o (b ~))`.
    pub fn quotient(a: BWord, b: BWord) -> Self {
        Self::prod(a, Self::inv(b))
    }

    /// `λ_y(x) = −y + y∘x`.
    pub fn lambda(y: BWord, x: BWord) -> Self {
        Self::sum(Self::neg(y.clone()), Self::prod(y, x))
    }

    /// `y ∗ x = λ_y(x) − x`.
    pub fn star(y: BWord, x: BWord) -> Self {
        Self::difference(Self::lambda(y, x.clone()), x)
    }

    /// `x^{∘,y} = y∘x∘y⁻¹`.
    pub fn mul_conjugate(x: BWord, y: BWord) -> Self {
        Self::prod(Self::prod(y.clone(), x), Self::inv(y))
    }

    /// `x^{+,y} = y + x − y`.
    pub fn add_conjugate(x: BWord, y: BWord) -> Self {
        Self::sum(Self::sum(y.clone(), x), Self::neg(y))
    }

    /// `k·x` as the left-nested sum `((x + x) + x) …`; `0·x` is `0`.
    pub fn multiple(k: usize, x: BWord) -> Self {
        match k {
            0 => BWord::Zero,
            _ => (1..k).fold(x.clone(), |acc, _| Self::sum(acc, x.clone())),
        }
    }

    /// Generator names in order of first occurrence.
    pub fn generators(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            BWord::Zero => {}
            BWord::Gen(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            BWord::Sum(a, b) | BWord::Prod(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
            BWord::Neg(a) | BWord::Inv(a) => a.collect_generators(out),
        }
    }

    /// Replaces each generator by the word `f` returns for it.
    pub fn substitute(&self, f: &impl Fn(&str) -> BWord) -> BWord {
        match self {
            BWord::Zero => BWord::Zero,
            BWord::Gen(name) => f(name),
            BWord::Sum(a, b) => Self::sum(a.substitute(f), b.substitute(f)),
            BWord::Prod(a, b) => Self::prod(a.substitute(f), b.substitute(f)),
            BWord::Neg(a) => Self::neg(a.substitute(f)),
            BWord::Inv(a) => Self::inv(a.substitute(f)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            BWord::Zero | BWord::Gen(_) => 0,
            BWord::Sum(a, b) | BWord::Prod(a, b) => 1 + a.depth().max(b.depth()),
            BWord::Neg(a) | BWord::Inv(a) => 1 + a.depth(),
        }
    }

    /// Evaluates in `b` under `assignment`.
    pub fn eval(&self, b: &FiniteSkewBrace, assignment: &Assignment) -> Result<usize> {
        self.eval_with(b, &|name: &str| assignment.get(name).copied())
    }

    pub fn eval_with(&self, b: &FiniteSkewBrace, lookup: &impl Fn(&str) -> Option<usize>) -> Result<usize> {
        Ok(match self {
            BWord::Zero => 0,
            BWord::Gen(name) => {
                let v = lookup(name).ok_or_else(|| Error::UnboundGenerator(name.clone()))?;
                if v >= b.order() {
                    return Err(Error::ElementOutOfRange(v));
                }
                v
            }
            BWord::Sum(x, y) => b.add(x.eval_with(b, lookup)?, y.eval_with(b, lookup)?),
            BWord::Prod(x, y) => b.mul(x.eval_with(b, lookup)?, y.eval_with(b, lookup)?),
            BWord::Neg(x) => b.neg(x.eval_with(b, lookup)?),
            BWord::Inv(x) => b.inv(x.eval_with(b, lookup)?),
        })
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BWord::Zero => f.write_str("0"),
            BWord::Gen(name) => f.write_str(name),
            BWord::Sum(a, b) => write!(f, "({a} + {b})"),
            BWord::Prod(a, b) => write!(f, "({a} o {b})"),
            BWord::Neg(a) => write!(f, "(- {a})"),
            BWord::Inv(a) => write!(f, "({a} ~)"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Plus,
    Minus,
    Tilde,
    Zero,
    Name(String),
}

fn tokenize(text: &str) -> std::result::Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Token::Open,
            ')' => Token::Close,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '~' => Token::Tilde,
            '0' => Token::Zero,
            'a'..='z' => {
                let start = i;
                while i + 1 < chars.len() && matches!(chars[i + 1], 'a'..='z' | '0'..='9') {
                    i += 1;
                }
                Token::Name(chars[start..=i].iter().collect())
            }
            other => return Err(ParseError { column: col, message: format!("unexpected character `{other}`") }),
        };
        tokens.push((col, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map(|(c, _)| *c).unwrap_or(self.end_column)
    }

    fn error<T>(&self, message: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError { column: self.column(), message: message.into() })
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_close(&mut self) -> std::result::Result<(), ParseError> {
        match self.peek() {
            Some(Token::Close) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error("expected `)`"),
        }
    }

    fn word(&mut self) -> std::result::Result<BWord, ParseError> {
        match self.peek() {
            Some(Token::Zero) => {
                self.pos += 1;
                Ok(BWord::Zero)
            }
            Some(Token::Name(_)) => match self.next() {
                Some(Token::Name(name)) => Ok(BWord::Gen(name)),
                _ => unreachable!(),
            },
            Some(Token::Open) => {
                self.pos += 1;
                if self.peek() == Some(&Token::Minus) {
                    self.pos += 1;
                    let inner = self.word()?;
                    self.expect_close()?;
                    return Ok(BWord::neg(inner));
                }
                let left = self.word()?;
                let w = match self.peek() {
                    Some(Token::Plus) => {
                        self.pos += 1;
                        BWord::sum(left, self.word()?)
                    }
                    Some(Token::Name(op)) if op == "o" => {
                        self.pos += 1;
                        BWord::prod(left, self.word()?)
                    }
                    Some(Token::Tilde) => {
                        self.pos += 1;
                        BWord::inv(left)
                    }
                    _ => return self.error("expected `+`, `o` or `~`"),
                };
                self.expect_close()?;
                Ok(w)
            }
            Some(_) => self.error("expected `0`, a name or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_bword(text: &str) -> std::result::Result<BWord, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end_column: text.chars().count() + 1 };
    let w = p.word()?;
    if p.pos < p.tokens.len() {
        return p.error("trailing input");
    }
    Ok(w)
}

pub fn print_bword(w: &BWord) -> String {
    w.to_string()
}
