//! Sequence files and ring-value literals.
//!
//! A sequence travels as a small JSON document:
//!
//! ```json
//! {
//!   "ring": "Z",
//!   "terms": [1, 1, 2, 3, 5],
//!   "convention": "egf-terms"
//! }
//! ```
//!
//! Terms are integers or literal strings (`"-1/2"`, `"x^2-2*x"`,
//! `"(a+2)*x"`), the ring is a descriptor string, and the only supported
//! convention is `egf-terms`: term `n` is `a_n`, the coefficient of
//! `t^n/n!`. Serialization is canonical — parse followed by serialize is
//! byte-stable.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingKind, RingValue};
use crate::series::Seq;

/// The only supported term convention.
pub const CONVENTION: &str = "egf-terms";

/// On-disk form of a sequence.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqDocument {
    /// Ring descriptor, e.g. `Z`, `Q`, `Zmod:7`, `Poly:x:Q`.
    pub ring: String,
    /// Term literals, index 0 first.
    pub terms: Vec<TermLiteral>,
    /// Must be [`CONVENTION`].
    pub convention: String,
    /// Optional redundant length; validated against `terms` when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
}

/// A term is stored as a plain integer when possible, a literal string
/// otherwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TermLiteral {
    Int(i64),
    Text(String),
}

/// Parse the JSON text of a sequence document.
pub fn parse_document(json: &str) -> Result<SeqDocument> {
    serde_json::from_str(json).map_err(|e| Error::Parse {
        message: e.to_string(),
        line: e.line(),
        column: e.column(),
    })
}

/// Interpret a parsed document as a sequence.
pub fn document_to_seq(doc: &SeqDocument) -> Result<Seq> {
    if doc.convention != CONVENTION {
        return Err(Error::Parse {
            message: format!(
                "unsupported convention {:?} (expected {CONVENTION:?})",
                doc.convention
            ),
            line: 0,
            column: 0,
        });
    }
    if let Some(expected) = doc.length {
        if expected != doc.terms.len() {
            return Err(Error::LengthMismatch {
                expected,
                got: doc.terms.len(),
            });
        }
    }
    let ring = Ring::parse(&doc.ring)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        terms.push(match t {
            TermLiteral::Int(k) => ring.from_i64(*k),
            TermLiteral::Text(s) => parse_value_literal(&ring, s)?,
        });
    }
    Seq::new(ring, terms)
}

/// Canonical document for a sequence: integer terms are stored as JSON
/// numbers in integer and modular rings, everything else as canonical
/// literal strings.
pub fn seq_to_document(a: &Seq) -> SeqDocument {
    let plain = matches!(
        a.ring().kind(),
        RingKind::Integers | RingKind::IntegersMod(_)
    );
    let terms = a
        .terms()
        .iter()
        .map(|t| {
            if plain {
                if let Some(k) = t.to_i64() {
                    return TermLiteral::Int(k);
                }
            }
            TermLiteral::Text(t.to_string())
        })
        .collect();
    SeqDocument {
        ring: a.ring().to_string(),
        terms,
        convention: CONVENTION.to_string(),
        length: None,
    }
}

/// Parse sequence JSON straight to a [`Seq`].
pub fn parse_seq(json: &str) -> Result<Seq> {
    document_to_seq(&parse_document(json)?)
}

/// Canonical JSON for a sequence.
pub fn serialize_seq(a: &Seq) -> String {
    serde_json::to_string_pretty(&seq_to_document(a)).expect("document serialization is total")
}

/// Read a sequence document from a file.
pub fn read_seq_file(path: &std::path::Path) -> Result<Seq> {
    parse_seq(&std::fs::read_to_string(path)?)
}

// --- ring-value literals ----------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' => {
                out.push((Token::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, col));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, col));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, col));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((
                    Token::Number(digits.parse().expect("digits form an integer")),
                    start + 1,
                ));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Token::Ident(chars[start..i].iter().collect()), start + 1));
            }
            other => {
                return Err(Error::Parse {
                    message: format!("unexpected character {other:?}"),
                    line: 1,
                    column: col,
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'r> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    ring: &'r Ring,
    end_col: usize,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            message: message.into(),
            line: 1,
            column: self.col(),
        })
    }

    fn expr(&mut self) -> Result<RingValue> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            negate = true;
        } else if matches!(self.peek(), Some(Token::Plus)) {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingValue> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RingValue> {
        let base = match self.bump() {
            Some(Token::Number(n)) => {
                // a slash directly after a number forms a rational constant
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Number(d)) => {
                            if d.is_zero() {
                                return self.fail("zero denominator");
                            }
                            let denom = self.ring.from_integer(&d);
                            let inv = denom.inverse().map_err(|_| Error::Parse {
                                message: format!(
                                    "denominator {d} is not invertible in {}",
                                    self.ring
                                ),
                                line: 1,
                                column: self.col(),
                            })?;
                            self.ring.from_integer(&n).mul(&inv)
                        }
                        _ => return self.fail("expected a number after '/'"),
                    }
                } else {
                    self.ring.from_integer(&n)
                }
            }
            Some(Token::Ident(name)) => match self.ring.variable(&name) {
                Some(v) => v,
                None => return self.fail(format!("unknown variable {name:?} in {}", self.ring)),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => inner,
                    _ => return self.fail("expected ')'"),
                }
            }
            _ => return self.fail("expected a number, variable, or '('"),
        };
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Number(e)) => {
                    let exp = u64::try_from(&e).map_err(|_| Error::Parse {
                        message: format!("exponent {e} is out of range"),
                        line: 1,
                        column: self.col(),
                    })?;
                    Ok(base.pow(exp))
                }
                _ => self.fail("expected an integer exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }
}

/// Parse one ring-value literal (`-7`, `3/4`, `x^2-2*x`, `(a+2)*x^2`) as an
/// element of `ring`.
pub fn parse_value_literal(ring: &Ring, text: &str) -> Result<RingValue> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            message: "empty literal".to_string(),
            line: 1,
            column: 1,
        });
    }
    let end_col = text.chars().count() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
        end_col,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.fail("trailing input after expression");
    }
    Ok(value)
}
