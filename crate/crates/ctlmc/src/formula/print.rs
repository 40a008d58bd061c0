//! Canonical printing. `parse_formula(f.to_string())` reconstructs `f`
//! exactly for every formula the parser can produce.

use super::parse::word_is_reserved;
use super::{PathFormula, StateFormula};
use std::fmt;

const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_UNARY: u8 = 3;

impl fmt::Display for StateFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_state(self, PREC_OR, f)
    }
}

impl fmt::Display for PathFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_path(self, PREC_OR, f)
    }
}

fn fmt_atom(name: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let plain = !name.is_empty()
        && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !word_is_reserved(name);
    if plain {
        f.write_str(name)
    } else {
        write!(f, "\"")?;
        for ch in name.chars() {
            if ch == '"' || ch == '\\' {
                write!(f, "\\")?;
            }
            write!(f, "{ch}")?;
        }
        write!(f, "\"")
    }
}

fn fmt_state(s: &StateFormula, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let prec = match s {
        StateFormula::And(..) => PREC_AND,
        StateFormula::Or(..) => PREC_OR,
        _ => PREC_UNARY,
    };
    if prec < min_prec {
        write!(f, "(")?;
        fmt_state(s, PREC_OR, f)?;
        return write!(f, ")");
    }
    match s {
        StateFormula::True => write!(f, "true"),
        StateFormula::False => write!(f, "false"),
        StateFormula::Atom(p) => fmt_atom(p.as_str(), f),
        StateFormula::Not(a) => {
            write!(f, "~")?;
            fmt_state(a, PREC_UNARY, f)
        }
        StateFormula::And(a, b) => {
            fmt_state(a, PREC_AND, f)?;
            write!(f, " & ")?;
            // The parser is left-associative, so a right-nested conjunction
            // keeps its parentheses.
            fmt_state(b, PREC_AND + 1, f)
        }
        StateFormula::Or(a, b) => {
            fmt_state(a, PREC_OR, f)?;
            write!(f, " | ")?;
            fmt_state(b, PREC_OR + 1, f)
        }
        StateFormula::Quant(q, body) => {
            write!(f, "{}", q.letter())?;
            match &**body {
                PathFormula::Next(a) => {
                    write!(f, "X ")?;
                    fmt_path(a, PREC_UNARY, f)
                }
                PathFormula::Eventually(a) => {
                    write!(f, "F ")?;
                    fmt_path(a, PREC_UNARY, f)
                }
                PathFormula::Globally(a) => {
                    write!(f, "G ")?;
                    fmt_path(a, PREC_UNARY, f)
                }
                PathFormula::InfOften(a) => {
                    write!(f, "Fi ")?;
                    fmt_path(a, PREC_UNARY, f)
                }
                PathFormula::AlmostAlways(a) => {
                    write!(f, "Gi ")?;
                    fmt_path(a, PREC_UNARY, f)
                }
                PathFormula::Until(a, b) => {
                    write!(f, "[")?;
                    fmt_path(a, PREC_OR, f)?;
                    write!(f, " U ")?;
                    fmt_path(b, PREC_OR, f)?;
                    write!(f, "]")
                }
                PathFormula::Release(a, b) => {
                    write!(f, "[")?;
                    fmt_path(a, PREC_OR, f)?;
                    write!(f, " R ")?;
                    fmt_path(b, PREC_OR, f)?;
                    write!(f, "]")
                }
                other => {
                    write!(f, "(")?;
                    fmt_path(other, PREC_OR, f)?;
                    write!(f, ")")
                }
            }
        }
    }
}

fn fmt_path(p: &PathFormula, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let PathFormula::State(inner) = p {
        return fmt_state(inner, min_prec, f);
    }
    let prec = match p {
        PathFormula::And(..) => PREC_AND,
        PathFormula::Or(..) => PREC_OR,
        _ => PREC_UNARY,
    };
    if prec < min_prec {
        write!(f, "(")?;
        fmt_path(p, PREC_OR, f)?;
        return write!(f, ")");
    }
    match p {
        PathFormula::State(_) => unreachable!(),
        PathFormula::Not(a) => {
            write!(f, "~")?;
            fmt_path(a, PREC_UNARY, f)
        }
        PathFormula::And(a, b) => {
            fmt_path(a, PREC_AND, f)?;
            write!(f, " & ")?;
            fmt_path(b, PREC_AND + 1, f)
        }
        PathFormula::Or(a, b) => {
            fmt_path(a, PREC_OR, f)?;
            write!(f, " | ")?;
            fmt_path(b, PREC_OR + 1, f)
        }
        PathFormula::Next(a) => {
            write!(f, "X ")?;
            fmt_path(a, PREC_UNARY, f)
        }
        PathFormula::Eventually(a) => {
            write!(f, "F ")?;
            fmt_path(a, PREC_UNARY, f)
        }
        PathFormula::Globally(a) => {
            write!(f, "G ")?;
            fmt_path(a, PREC_UNARY, f)
        }
        PathFormula::InfOften(a) => {
            write!(f, "Fi ")?;
            fmt_path(a, PREC_UNARY, f)
        }
        PathFormula::AlmostAlways(a) => {
            write!(f, "Gi ")?;
            fmt_path(a, PREC_UNARY, f)
        }
        PathFormula::Until(a, b) => {
            write!(f, "[")?;
            fmt_path(a, PREC_OR, f)?;
            write!(f, " U ")?;
            fmt_path(b, PREC_OR, f)?;
            write!(f, "]")
        }
        PathFormula::Release(a, b) => {
            write!(f, "[")?;
            fmt_path(a, PREC_OR, f)?;
            write!(f, " R ")?;
            fmt_path(b, PREC_OR, f)?;
            write!(f, "]")
        }
    }
}
