//! Fragment-aware model checking for branching-time temporal logics.
//!
//! `ctlmc` evaluates CTL, ECTL, CTL+ and ECTL+ formulas over finite Kripke
//! structures. Beyond the checking engines themselves it ships a complexity
//! classifier that maps each syntactic fragment (operator set and negation
//! discipline) to its completeness class, and a toolkit of reduction
//! generators that turn circuits, alternating games and 3CNF formulas into
//! model-checking instances with independently known truth — a
//! self-validating corpus for the engines.
//!
//! The guide in `book/` walks through the concepts; its code blocks run as
//! doc-tests of this crate.

pub mod formula;

pub use formula::{parse_formula, PathFormula, Prop, Quantifier, StateFormula};
