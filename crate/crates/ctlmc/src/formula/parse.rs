//! Concrete syntax for formulas.
//!
//! The grammar is LL(1) with prefix operators binding tightest, `&` binding
//! tighter than `|`, and until/release written in brackets:
//!
//! ```text
//! state  := "true" | "false" | atom | "~" state | state "&" state
//!         | state "|" state | "(" state ")" | quant path
//! quant  := "A" | "E"
//! path   := "X" path | "F" path | "G" path | "Fi" path | "Gi" path
//!         | "[" path "U" path "]" | "[" path "R" path "]"
//!         | "~" path | path "&" path | path "|" path | "(" path ")" | state
//! ```
//!
//! Adjacent operator letters form one word, so `AGEF p` and `AG EF p` parse
//! identically. A bare word is an atom unless it decomposes completely into
//! operator tokens; atoms that collide with operator spellings, or that
//! contain characters outside `[a-zA-Z0-9_]`, are written quoted: `"d_3"`,
//! `"s_2^01"`.
//!
//! Parsing resolves the two sorts by embedding *maximal* state subformulas:
//! in `E[p U (q & ~r)]` the conjunction is a state formula evaluated at one
//! position, while in `A(G p & F q)` the conjunction is path-level because
//! its operands are pure temporal formulas.

use super::{PathFormula, Prop, Quantifier, StateFormula};
use thiserror::Error;

/// A formula syntax error, with 1-based line and column.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: unexpected character `{ch}`")]
    UnexpectedChar { line: usize, col: usize, ch: char },
    #[error("{line}:{col}: unterminated quoted atom")]
    UnterminatedQuote { line: usize, col: usize },
    #[error("{line}:{col}: empty quoted atom")]
    EmptyQuote { line: usize, col: usize },
    #[error("{line}:{col}: expected {expected}, found {found}")]
    Unexpected {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("{line}:{col}: unbalanced bracket: expected `{expected}`")]
    Unbalanced {
        line: usize,
        col: usize,
        expected: char,
    },
    #[error("{line}:{col}: path operator `{op}` outside the scope of a path quantifier")]
    PathOperatorOutsideQuantifier { line: usize, col: usize, op: String },
    #[error("{line}:{col}: input continues after a complete formula")]
    TrailingInput { line: usize, col: usize },
}

/// Parse a state formula from its concrete syntax.
pub fn parse_formula(text: &str) -> Result<StateFormula, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        text,
        tokens,
        pos: 0,
    };
    let raw = parser.parse_or()?;
    if parser.pos < parser.tokens.len() {
        let at = parser.tokens[parser.pos].at;
        let (line, col) = line_col(text, at);
        return Err(ParseError::TrailingInput { line, col });
    }
    to_state(text, &raw)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Tilde,
    Amp,
    Pipe,
    True,
    False,
    Atom(String),
    Prefix(Prefix),
    UntilKw,
    ReleaseKw,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Prefix {
    QuantA,
    QuantE,
    Next,
    Eventually,
    Globally,
    InfOften,
    AlmostAlways,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    at: usize,
}

fn line_col(text: &str, at: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (i, ch) in text.char_indices() {
        if i >= at {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Split a word into prefix-operator tokens, or fail if any residue is left.
/// `Fi`/`Gi` are matched before the single letters.
fn decompose_ops(word: &str) -> Option<Vec<Prefix>> {
    let mut out = Vec::new();
    let bytes = word.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'F' && i + 1 < bytes.len() && bytes[i + 1] == b'i' {
            out.push(Prefix::InfOften);
            i += 2;
        } else if bytes[i] == b'G' && i + 1 < bytes.len() && bytes[i + 1] == b'i' {
            out.push(Prefix::AlmostAlways);
            i += 2;
        } else {
            out.push(match bytes[i] {
                b'A' => Prefix::QuantA,
                b'E' => Prefix::QuantE,
                b'X' => Prefix::Next,
                b'F' => Prefix::Eventually,
                b'G' => Prefix::Globally,
                _ => return None,
            });
            i += 1;
        }
    }
    Some(out)
}

pub(super) fn word_is_reserved(word: &str) -> bool {
    matches!(word, "true" | "false" | "U" | "R") || decompose_ops(word).is_some()
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '[' | ']' | '~' | '&' | '|' => {
                chars.next();
                let tok = match ch {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '~' => Tok::Tilde,
                    '&' => Tok::Amp,
                    _ => Tok::Pipe,
                };
                out.push(Spanned { tok, at });
            }
            '"' => {
                chars.next();
                let mut name = String::new();
                let mut closed = false;
                while let Some((_, c)) = chars.next() {
                    match c {
                        '"' => {
                            closed = true;
                            break;
                        }
                        '\\' => match chars.next() {
                            Some((_, esc)) => name.push(esc),
                            None => break,
                        },
                        other => name.push(other),
                    }
                }
                if !closed {
                    let (line, col) = line_col(text, at);
                    return Err(ParseError::UnterminatedQuote { line, col });
                }
                if name.is_empty() {
                    let (line, col) = line_col(text, at);
                    return Err(ParseError::EmptyQuote { line, col });
                }
                out.push(Spanned {
                    tok: Tok::Atom(name),
                    at,
                });
            }
            c if is_ident_start(c) => {
                let mut word = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if is_ident_char(c) {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                match word.as_str() {
                    "true" => out.push(Spanned { tok: Tok::True, at }),
                    "false" => out.push(Spanned {
                        tok: Tok::False,
                        at,
                    }),
                    "U" => out.push(Spanned {
                        tok: Tok::UntilKw,
                        at,
                    }),
                    "R" => out.push(Spanned {
                        tok: Tok::ReleaseKw,
                        at,
                    }),
                    _ => match decompose_ops(&word) {
                        Some(ops) => {
                            for op in ops {
                                out.push(Spanned {
                                    tok: Tok::Prefix(op),
                                    at,
                                });
                            }
                        }
                        None => out.push(Spanned {
                            tok: Tok::Atom(word),
                            at,
                        }),
                    },
                }
            }
            other => {
                let (line, col) = line_col(text, at);
                return Err(ParseError::UnexpectedChar {
                    line,
                    col,
                    ch: other,
                });
            }
        }
    }
    Ok(out)
}

/// Single-sorted parse tree; the sorts are resolved afterwards.
#[derive(Debug, Clone)]
enum Raw {
    True,
    False,
    Atom(String),
    Not(Box<RawNode>),
    And(Box<RawNode>, Box<RawNode>),
    Or(Box<RawNode>, Box<RawNode>),
    Quant(Quantifier, Box<RawNode>),
    Next(Box<RawNode>),
    Eventually(Box<RawNode>),
    Globally(Box<RawNode>),
    InfOften(Box<RawNode>),
    AlmostAlways(Box<RawNode>),
    Until(Box<RawNode>, Box<RawNode>),
    Release(Box<RawNode>, Box<RawNode>),
}

#[derive(Debug, Clone)]
struct RawNode {
    raw: Raw,
    at: usize,
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Spanned>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|s| &s.tok)
    }

    fn at(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|s| s.at)
            .unwrap_or(self.text.len())
    }

    fn err_expected(&self, expected: &str) -> ParseError {
        let (line, col) = line_col(self.text, self.at());
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(tok) => format!("{tok:?}"),
        };
        ParseError::Unexpected {
            line,
            col,
            expected: expected.to_string(),
            found,
        }
    }

    fn parse_or(&mut self) -> Result<RawNode, ParseError> {
        let mut lhs = self.parse_and()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.pos += 1;
            let rhs = self.parse_and()?;
            let at = lhs.at;
            lhs = RawNode {
                raw: Raw::Or(Box::new(lhs), Box::new(rhs)),
                at,
            };
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<RawNode, ParseError> {
        let mut lhs = self.parse_unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            let rhs = self.parse_unary()?;
            let at = lhs.at;
            lhs = RawNode {
                raw: Raw::And(Box::new(lhs), Box::new(rhs)),
                at,
            };
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<RawNode, ParseError> {
        let at = self.at();
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                let inner = self.parse_unary()?;
                Ok(RawNode {
                    raw: Raw::Not(Box::new(inner)),
                    at,
                })
            }
            Some(Tok::Prefix(op)) => {
                let op = *op;
                self.pos += 1;
                let inner = self.parse_unary()?;
                let raw = match op {
                    Prefix::QuantA => Raw::Quant(Quantifier::ForAll, Box::new(inner)),
                    Prefix::QuantE => Raw::Quant(Quantifier::Exists, Box::new(inner)),
                    Prefix::Next => Raw::Next(Box::new(inner)),
                    Prefix::Eventually => Raw::Eventually(Box::new(inner)),
                    Prefix::Globally => Raw::Globally(Box::new(inner)),
                    Prefix::InfOften => Raw::InfOften(Box::new(inner)),
                    Prefix::AlmostAlways => Raw::AlmostAlways(Box::new(inner)),
                };
                Ok(RawNode { raw, at })
            }
            _ => self.parse_primary(),
        }
    }

    fn parse_primary(&mut self) -> Result<RawNode, ParseError> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::True) => {
                self.pos += 1;
                Ok(RawNode { raw: Raw::True, at })
            }
            Some(Tok::False) => {
                self.pos += 1;
                Ok(RawNode {
                    raw: Raw::False,
                    at,
                })
            }
            Some(Tok::Atom(name)) => {
                self.pos += 1;
                Ok(RawNode {
                    raw: Raw::Atom(name),
                    at,
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.parse_or()?;
                if self.peek() != Some(&Tok::RParen) {
                    let (line, col) = line_col(self.text, self.at());
                    return Err(ParseError::Unbalanced {
                        line,
                        col,
                        expected: ')',
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let lhs = self.parse_or()?;
                let release = match self.peek() {
                    Some(Tok::UntilKw) => false,
                    Some(Tok::ReleaseKw) => true,
                    _ => return Err(self.err_expected("`U` or `R`")),
                };
                self.pos += 1;
                let rhs = self.parse_or()?;
                if self.peek() != Some(&Tok::RBracket) {
                    let (line, col) = line_col(self.text, self.at());
                    return Err(ParseError::Unbalanced {
                        line,
                        col,
                        expected: ']',
                    });
                }
                self.pos += 1;
                let raw = if release {
                    Raw::Release(Box::new(lhs), Box::new(rhs))
                } else {
                    Raw::Until(Box::new(lhs), Box::new(rhs))
                };
                Ok(RawNode { raw, at })
            }
            _ => Err(self.err_expected("a formula")),
        }
    }
}

/// True when the node can be read as a state formula: no pure temporal
/// operator at its surface (quantified subtrees are opaque).
fn stateish(node: &RawNode) -> bool {
    match &node.raw {
        Raw::True | Raw::False | Raw::Atom(_) | Raw::Quant(..) => true,
        Raw::Not(a) => stateish(a),
        Raw::And(a, b) | Raw::Or(a, b) => stateish(a) && stateish(b),
        Raw::Next(_)
        | Raw::Eventually(_)
        | Raw::Globally(_)
        | Raw::InfOften(_)
        | Raw::AlmostAlways(_)
        | Raw::Until(..)
        | Raw::Release(..) => false,
    }
}

fn to_state(text: &str, node: &RawNode) -> Result<StateFormula, ParseError> {
    match &node.raw {
        Raw::True => Ok(StateFormula::True),
        Raw::False => Ok(StateFormula::False),
        Raw::Atom(name) => Ok(StateFormula::Atom(Prop::new(name))),
        Raw::Not(a) => Ok(StateFormula::not(to_state(text, a)?)),
        Raw::And(a, b) => Ok(StateFormula::and(to_state(text, a)?, to_state(text, b)?)),
        Raw::Or(a, b) => Ok(StateFormula::or(to_state(text, a)?, to_state(text, b)?)),
        Raw::Quant(q, body) => Ok(StateFormula::quant(*q, to_path(text, body)?)),
        Raw::Next(_)
        | Raw::Eventually(_)
        | Raw::Globally(_)
        | Raw::InfOften(_)
        | Raw::AlmostAlways(_)
        | Raw::Until(..)
        | Raw::Release(..) => {
            let (line, col) = line_col(text, node.at);
            let op = match &node.raw {
                Raw::Next(_) => "X",
                Raw::Eventually(_) => "F",
                Raw::Globally(_) => "G",
                Raw::InfOften(_) => "Fi",
                Raw::AlmostAlways(_) => "Gi",
                Raw::Until(..) => "U",
                _ => "R",
            };
            Err(ParseError::PathOperatorOutsideQuantifier {
                line,
                col,
                op: op.to_string(),
            })
        }
    }
}

fn to_path(text: &str, node: &RawNode) -> Result<PathFormula, ParseError> {
    if stateish(node) {
        return Ok(PathFormula::state(to_state(text, node)?));
    }
    match &node.raw {
        Raw::Not(a) => Ok(PathFormula::not(to_path(text, a)?)),
        Raw::And(a, b) => Ok(PathFormula::and(to_path(text, a)?, to_path(text, b)?)),
        Raw::Or(a, b) => Ok(PathFormula::or(to_path(text, a)?, to_path(text, b)?)),
        Raw::Next(a) => Ok(PathFormula::next(to_path(text, a)?)),
        Raw::Eventually(a) => Ok(PathFormula::eventually(to_path(text, a)?)),
        Raw::Globally(a) => Ok(PathFormula::globally(to_path(text, a)?)),
        Raw::InfOften(a) => Ok(PathFormula::inf_often(to_path(text, a)?)),
        Raw::AlmostAlways(a) => Ok(PathFormula::almost_always(to_path(text, a)?)),
        Raw::Until(a, b) => Ok(PathFormula::until(to_path(text, a)?, to_path(text, b)?)),
        Raw::Release(a, b) => Ok(PathFormula::release(to_path(text, a)?, to_path(text, b)?)),
        Raw::True | Raw::False | Raw::Atom(_) | Raw::Quant(..) => {
            unreachable!("stateish nodes handled above")
        }
    }
}
