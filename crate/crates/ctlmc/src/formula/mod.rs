//! Temporal formulas: the two-sorted AST, syntactic analysis (family,
//! operator set, negation discipline) and negation normal form.
//!
//! State formulas are evaluated at states, path formulas along infinite
//! paths. The only crossing from the path sort back to the state sort is
//! [`PathFormula::State`]; every engine in this crate relies on that
//! embedding being *maximal* (Boolean combinations of pure state formulas
//! are state-level, never path-level), which is exactly what the parser
//! produces. Formulas built by hand should follow the same convention or
//! round-tripping through the concrete syntax will not be the identity.

mod parse;
mod print;

pub use parse::{parse_formula, ParseError};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// An atomic proposition name.
///
/// Cheap to clone; formulas share the underlying string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prop(pub Arc<str>);

impl Prop {
    pub fn new(name: &str) -> Self {
        Prop(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Prop {
    fn from(name: &str) -> Self {
        Prop::new(name)
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A path quantifier: `A` ranges over all paths, `E` asks for one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    ForAll,
    Exists,
}

impl Quantifier {
    pub fn dual(self) -> Self {
        match self {
            Quantifier::ForAll => Quantifier::Exists,
            Quantifier::Exists => Quantifier::ForAll,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Quantifier::ForAll => 'A',
            Quantifier::Exists => 'E',
        }
    }
}

/// A pure temporal operator (everything except the path quantifiers).
///
/// `InfOften` and `AlmostAlways` are the ECTL operators, written `Fi` and
/// `Gi` in the concrete syntax.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PureOp {
    Next,
    Eventually,
    Globally,
    Until,
    Release,
    InfOften,
    AlmostAlways,
}

impl PureOp {
    pub fn token(self) -> &'static str {
        match self {
            PureOp::Next => "X",
            PureOp::Eventually => "F",
            PureOp::Globally => "G",
            PureOp::Until => "U",
            PureOp::Release => "R",
            PureOp::InfOften => "Fi",
            PureOp::AlmostAlways => "Gi",
        }
    }

    /// The operator this one turns into when a negation is pushed through.
    pub fn dual(self) -> Self {
        match self {
            PureOp::Next => PureOp::Next,
            PureOp::Eventually => PureOp::Globally,
            PureOp::Globally => PureOp::Eventually,
            PureOp::Until => PureOp::Release,
            PureOp::Release => PureOp::Until,
            PureOp::InfOften => PureOp::AlmostAlways,
            PureOp::AlmostAlways => PureOp::InfOften,
        }
    }
}

/// A CTL-operator: a path quantifier fused with one pure temporal operator,
/// such as `EX` or `AGi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CtlOp {
    pub quant: Quantifier,
    pub op: PureOp,
}

impl CtlOp {
    pub fn new(quant: Quantifier, op: PureOp) -> Self {
        CtlOp { quant, op }
    }

    pub fn dual(self) -> Self {
        CtlOp::new(self.quant.dual(), self.op.dual())
    }

    /// All ten CTL-operators over `X`, `F`, `G`, `U`, `R`.
    pub fn all_basic() -> Vec<CtlOp> {
        let quants = [Quantifier::ForAll, Quantifier::Exists];
        let ops = [
            PureOp::Next,
            PureOp::Eventually,
            PureOp::Globally,
            PureOp::Until,
            PureOp::Release,
        ];
        let mut v = Vec::new();
        for q in quants {
            for o in ops {
                v.push(CtlOp::new(q, o));
            }
        }
        v
    }

    /// The fourteen CTL/ECTL-operators, including `AFi`..`EGi`.
    pub fn all_extended() -> Vec<CtlOp> {
        let mut v = CtlOp::all_basic();
        for q in [Quantifier::ForAll, Quantifier::Exists] {
            for o in [PureOp::InfOften, PureOp::AlmostAlways] {
                v.push(CtlOp::new(q, o));
            }
        }
        v
    }
}

impl fmt::Display for CtlOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.quant.letter(), self.op.token())
    }
}

/// An operator token as reported by [`operator_set`]: paired CTL-operators
/// for CTL/ECTL formulas, separate quantifier and pure-operator tokens for
/// CTL+ and beyond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpToken {
    Ctl(CtlOp),
    Quant(Quantifier),
    Pure(PureOp),
}

impl fmt::Display for OpToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpToken::Ctl(op) => write!(f, "{op}"),
            OpToken::Quant(q) => write!(f, "{}", q.letter()),
            OpToken::Pure(op) => f.write_str(op.token()),
        }
    }
}

impl std::str::FromStr for OpToken {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let quant = |c: char| match c {
            'A' => Some(Quantifier::ForAll),
            'E' => Some(Quantifier::Exists),
            _ => None,
        };
        let pure = |s: &str| match s {
            "X" => Some(PureOp::Next),
            "F" => Some(PureOp::Eventually),
            "G" => Some(PureOp::Globally),
            "U" => Some(PureOp::Until),
            "R" => Some(PureOp::Release),
            "Fi" => Some(PureOp::InfOften),
            "Gi" => Some(PureOp::AlmostAlways),
            _ => None,
        };
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(|| "empty operator token".to_string())?;
        let rest = chars.as_str();
        if rest.is_empty() {
            if let Some(q) = quant(head) {
                return Ok(OpToken::Quant(q));
            }
        }
        if let (Some(q), Some(op)) = (quant(head), pure(rest)) {
            return Ok(OpToken::Ctl(CtlOp::new(q, op)));
        }
        if let Some(op) = pure(s) {
            return Ok(OpToken::Pure(op));
        }
        Err(format!("unknown operator token `{s}`"))
    }
}

/// A state formula: evaluated at a single state of a Kripke structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StateFormula {
    True,
    False,
    Atom(Prop),
    Not(Box<StateFormula>),
    And(Box<StateFormula>, Box<StateFormula>),
    Or(Box<StateFormula>, Box<StateFormula>),
    Quant(Quantifier, Box<PathFormula>),
}

/// A path formula: evaluated along an infinite path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PathFormula {
    /// A state formula evaluated at the current position of the path.
    State(Box<StateFormula>),
    Not(Box<PathFormula>),
    And(Box<PathFormula>, Box<PathFormula>),
    Or(Box<PathFormula>, Box<PathFormula>),
    Next(Box<PathFormula>),
    Eventually(Box<PathFormula>),
    Globally(Box<PathFormula>),
    Until(Box<PathFormula>, Box<PathFormula>),
    Release(Box<PathFormula>, Box<PathFormula>),
    /// `Fi`: the argument holds at infinitely many positions.
    InfOften(Box<PathFormula>),
    /// `Gi`: the argument holds at all but finitely many positions.
    AlmostAlways(Box<PathFormula>),
}

impl StateFormula {
    pub fn atom(name: &str) -> Self {
        StateFormula::Atom(Prop::new(name))
    }

    pub fn not(f: StateFormula) -> Self {
        StateFormula::Not(Box::new(f))
    }

    pub fn and(a: StateFormula, b: StateFormula) -> Self {
        StateFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: StateFormula, b: StateFormula) -> Self {
        StateFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn quant(q: Quantifier, body: PathFormula) -> Self {
        StateFormula::Quant(q, Box::new(body))
    }

    pub fn exists(body: PathFormula) -> Self {
        Self::quant(Quantifier::Exists, body)
    }

    pub fn forall(body: PathFormula) -> Self {
        Self::quant(Quantifier::ForAll, body)
    }

    /// Conjunction of a nonempty sequence; `true` when empty.
    pub fn conj(fs: impl IntoIterator<Item = StateFormula>) -> Self {
        let mut it = fs.into_iter();
        match it.next() {
            None => StateFormula::True,
            Some(first) => it.fold(first, StateFormula::and),
        }
    }

    /// Disjunction of a nonempty sequence; `false` when empty.
    pub fn disj(fs: impl IntoIterator<Item = StateFormula>) -> Self {
        let mut it = fs.into_iter();
        match it.next() {
            None => StateFormula::False,
            Some(first) => it.fold(first, StateFormula::or),
        }
    }

    /// Node count of the formula tree, both sorts included.
    pub fn size(&self) -> usize {
        match self {
            StateFormula::True | StateFormula::False | StateFormula::Atom(_) => 1,
            StateFormula::Not(a) => 1 + a.size(),
            StateFormula::And(a, b) | StateFormula::Or(a, b) => 1 + a.size() + b.size(),
            StateFormula::Quant(_, body) => 1 + body.size(),
        }
    }

    /// All proposition names mentioned, in sorted order.
    pub fn props(&self) -> BTreeSet<Prop> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<Prop>) {
        match self {
            StateFormula::True | StateFormula::False => {}
            StateFormula::Atom(p) => {
                out.insert(p.clone());
            }
            StateFormula::Not(a) => a.collect_props(out),
            StateFormula::And(a, b) | StateFormula::Or(a, b) => {
                a.collect_props(out);
                b.collect_props(out);
            }
            StateFormula::Quant(_, body) => body.collect_props(out),
        }
    }

    /// Number of temporal-operator occurrences (quantifiers excluded).
    pub fn temporal_ops(&self) -> usize {
        match self {
            StateFormula::True | StateFormula::False | StateFormula::Atom(_) => 0,
            StateFormula::Not(a) => a.temporal_ops(),
            StateFormula::And(a, b) | StateFormula::Or(a, b) => {
                a.temporal_ops() + b.temporal_ops()
            }
            StateFormula::Quant(_, body) => body.temporal_ops(),
        }
    }

    /// True when the formula contains no path quantifier.
    pub fn is_propositional(&self) -> bool {
        match self {
            StateFormula::True | StateFormula::False | StateFormula::Atom(_) => true,
            StateFormula::Not(a) => a.is_propositional(),
            StateFormula::And(a, b) | StateFormula::Or(a, b) => {
                a.is_propositional() && b.is_propositional()
            }
            StateFormula::Quant(..) => false,
        }
    }
}

impl PathFormula {
    pub fn state(f: StateFormula) -> Self {
        PathFormula::State(Box::new(f))
    }

    pub fn not(f: PathFormula) -> Self {
        PathFormula::Not(Box::new(f))
    }

    pub fn and(a: PathFormula, b: PathFormula) -> Self {
        PathFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: PathFormula, b: PathFormula) -> Self {
        PathFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn next(f: PathFormula) -> Self {
        PathFormula::Next(Box::new(f))
    }

    pub fn eventually(f: PathFormula) -> Self {
        PathFormula::Eventually(Box::new(f))
    }

    pub fn globally(f: PathFormula) -> Self {
        PathFormula::Globally(Box::new(f))
    }

    pub fn until(a: PathFormula, b: PathFormula) -> Self {
        PathFormula::Until(Box::new(a), Box::new(b))
    }

    pub fn release(a: PathFormula, b: PathFormula) -> Self {
        PathFormula::Release(Box::new(a), Box::new(b))
    }

    pub fn inf_often(f: PathFormula) -> Self {
        PathFormula::InfOften(Box::new(f))
    }

    pub fn almost_always(f: PathFormula) -> Self {
        PathFormula::AlmostAlways(Box::new(f))
    }

    /// Apply a unary pure operator.
    pub fn apply(op: PureOp, f: PathFormula) -> Self {
        match op {
            PureOp::Next => Self::next(f),
            PureOp::Eventually => Self::eventually(f),
            PureOp::Globally => Self::globally(f),
            PureOp::InfOften => Self::inf_often(f),
            PureOp::AlmostAlways => Self::almost_always(f),
            PureOp::Until | PureOp::Release => panic!("binary operator applied as unary"),
        }
    }

    pub fn conj(fs: impl IntoIterator<Item = PathFormula>) -> Self {
        let mut it = fs.into_iter();
        match it.next() {
            None => PathFormula::state(StateFormula::True),
            Some(first) => it.fold(first, PathFormula::and),
        }
    }

    pub fn disj(fs: impl IntoIterator<Item = PathFormula>) -> Self {
        let mut it = fs.into_iter();
        match it.next() {
            None => PathFormula::state(StateFormula::False),
            Some(first) => it.fold(first, PathFormula::or),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            PathFormula::State(f) => f.size(),
            PathFormula::Not(a)
            | PathFormula::Next(a)
            | PathFormula::Eventually(a)
            | PathFormula::Globally(a)
            | PathFormula::InfOften(a)
            | PathFormula::AlmostAlways(a) => 1 + a.size(),
            PathFormula::And(a, b)
            | PathFormula::Or(a, b)
            | PathFormula::Until(a, b)
            | PathFormula::Release(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn collect_props(&self, out: &mut BTreeSet<Prop>) {
        match self {
            PathFormula::State(f) => f.collect_props(out),
            PathFormula::Not(a)
            | PathFormula::Next(a)
            | PathFormula::Eventually(a)
            | PathFormula::Globally(a)
            | PathFormula::InfOften(a)
            | PathFormula::AlmostAlways(a) => a.collect_props(out),
            PathFormula::And(a, b)
            | PathFormula::Or(a, b)
            | PathFormula::Until(a, b)
            | PathFormula::Release(a, b) => {
                a.collect_props(out);
                b.collect_props(out);
            }
        }
    }

    pub fn temporal_ops(&self) -> usize {
        match self {
            PathFormula::State(f) => f.temporal_ops(),
            PathFormula::Not(a) => a.temporal_ops(),
            PathFormula::And(a, b) | PathFormula::Or(a, b) => {
                a.temporal_ops() + b.temporal_ops()
            }
            PathFormula::Next(a)
            | PathFormula::Eventually(a)
            | PathFormula::Globally(a)
            | PathFormula::InfOften(a)
            | PathFormula::AlmostAlways(a) => 1 + a.temporal_ops(),
            PathFormula::Until(a, b) | PathFormula::Release(a, b) => {
                1 + a.temporal_ops() + b.temporal_ops()
            }
        }
    }
}

/// The syntactic logic families, ordered coarsest to most general.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Propositional,
    Ctl,
    Ectl,
    CtlPlus,
    EctlPlus,
    CtlStar,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Propositional => "propositional",
            Family::Ctl => "CTL",
            Family::Ectl => "ECTL",
            Family::CtlPlus => "CTL+",
            Family::EctlPlus => "ECTL+",
            Family::CtlStar => "CTL*",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How negation may be used: `mon` forbids it entirely, `an` confines it to
/// atoms, `pos` keeps temporal operators out of its scope, `full` is
/// unrestricted. Ordered `mon <= an <= pos <= full`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Discipline {
    Monotone,
    AtomicNegation,
    Positive,
    Full,
}

impl Discipline {
    pub fn name(self) -> &'static str {
        match self {
            Discipline::Monotone => "mon",
            Discipline::AtomicNegation => "an",
            Discipline::Positive => "pos",
            Discipline::Full => "full",
        }
    }
}

impl fmt::Display for Discipline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The classifier's input: a logic family, an operator set and a negation
/// discipline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentProfile {
    pub family: Family,
    pub operators: BTreeSet<OpToken>,
    pub discipline: Discipline,
}

impl FragmentProfile {
    pub fn of(f: &StateFormula) -> Self {
        FragmentProfile {
            family: syntactic_class(f),
            operators: operator_set(f),
            discipline: negation_discipline(f),
        }
    }
}

/// The least syntactic family containing `f`.
///
/// CTL shape requires each path quantifier to wrap exactly one pure temporal
/// operator applied to embedded state formulas. The CTL+ shape additionally
/// admits Boolean combinations under a quantifier and chains of `X`; any
/// deeper nesting of pure operators (such as `A G F p`) is classified CTL*.
pub fn syntactic_class(f: &StateFormula) -> Family {
    if f.is_propositional() {
        return Family::Propositional;
    }
    if ctl_shaped(f) {
        if uses_infinity(f) {
            Family::Ectl
        } else {
            Family::Ctl
        }
    } else if plus_shaped(f) {
        if uses_infinity(f) {
            Family::EctlPlus
        } else {
            Family::CtlPlus
        }
    } else {
        Family::CtlStar
    }
}

fn uses_infinity(f: &StateFormula) -> bool {
    fn path(p: &PathFormula) -> bool {
        match p {
            PathFormula::State(f) => uses_infinity(f),
            PathFormula::InfOften(_) | PathFormula::AlmostAlways(_) => true,
            PathFormula::Not(a)
            | PathFormula::Next(a)
            | PathFormula::Eventually(a)
            | PathFormula::Globally(a) => path(a),
            PathFormula::And(a, b)
            | PathFormula::Or(a, b)
            | PathFormula::Until(a, b)
            | PathFormula::Release(a, b) => path(a) || path(b),
        }
    }
    match f {
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => false,
        StateFormula::Not(a) => uses_infinity(a),
        StateFormula::And(a, b) | StateFormula::Or(a, b) => {
            uses_infinity(a) || uses_infinity(b)
        }
        StateFormula::Quant(_, body) => path(body),
    }
}

fn ctl_shaped(f: &StateFormula) -> bool {
    fn embedded(p: &PathFormula) -> bool {
        matches!(p, PathFormula::State(inner) if ctl_shaped(inner))
    }
    match f {
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => true,
        StateFormula::Not(a) => ctl_shaped(a),
        StateFormula::And(a, b) | StateFormula::Or(a, b) => ctl_shaped(a) && ctl_shaped(b),
        StateFormula::Quant(_, body) => match &**body {
            PathFormula::Next(a)
            | PathFormula::Eventually(a)
            | PathFormula::Globally(a)
            | PathFormula::InfOften(a)
            | PathFormula::AlmostAlways(a) => embedded(a),
            PathFormula::Until(a, b) | PathFormula::Release(a, b) => {
                embedded(a) && embedded(b)
            }
            _ => false,
        },
    }
}

fn plus_shaped(f: &StateFormula) -> bool {
    fn embedded(p: &PathFormula) -> bool {
        matches!(p, PathFormula::State(inner) if plus_shaped(inner))
    }
    // Boolean combinations of embedded state formulas, X-chains and pure
    // operators applied directly to embedded state formulas.
    fn body(p: &PathFormula) -> bool {
        match p {
            PathFormula::State(inner) => plus_shaped(inner),
            PathFormula::Not(a) => body(a),
            PathFormula::And(a, b) | PathFormula::Or(a, b) => body(a) && body(b),
            PathFormula::Next(a) => xchain(a),
            PathFormula::Eventually(a)
            | PathFormula::Globally(a)
            | PathFormula::InfOften(a)
            | PathFormula::AlmostAlways(a) => embedded(a),
            PathFormula::Until(a, b) | PathFormula::Release(a, b) => {
                embedded(a) && embedded(b)
            }
        }
    }
    // Below an X only Boolean structure, further X's and embeddings occur.
    fn xchain(p: &PathFormula) -> bool {
        match p {
            PathFormula::State(inner) => plus_shaped(inner),
            PathFormula::Not(a) | PathFormula::Next(a) => xchain(a),
            PathFormula::And(a, b) | PathFormula::Or(a, b) => xchain(a) && xchain(b),
            _ => false,
        }
    }
    match f {
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => true,
        StateFormula::Not(a) => plus_shaped(a),
        StateFormula::And(a, b) | StateFormula::Or(a, b) => plus_shaped(a) && plus_shaped(b),
        StateFormula::Quant(_, b) => body(b),
    }
}

/// The set of operator tokens occurring in `f`: paired CTL-operators when
/// `f` is CTL/ECTL-shaped, separate quantifier and pure-operator tokens
/// otherwise.
pub fn operator_set(f: &StateFormula) -> BTreeSet<OpToken> {
    let mut out = BTreeSet::new();
    match syntactic_class(f) {
        Family::Propositional => {}
        Family::Ctl | Family::Ectl => collect_paired(f, &mut out),
        _ => collect_tokens(f, &mut out),
    }
    out
}

fn collect_paired(f: &StateFormula, out: &mut BTreeSet<OpToken>) {
    match f {
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => {}
        StateFormula::Not(a) => collect_paired(a, out),
        StateFormula::And(a, b) | StateFormula::Or(a, b) => {
            collect_paired(a, out);
            collect_paired(b, out);
        }
        StateFormula::Quant(q, body) => {
            let (op, args): (PureOp, Vec<&PathFormula>) = match &**body {
                PathFormula::Next(a) => (PureOp::Next, vec![a]),
                PathFormula::Eventually(a) => (PureOp::Eventually, vec![a]),
                PathFormula::Globally(a) => (PureOp::Globally, vec![a]),
                PathFormula::InfOften(a) => (PureOp::InfOften, vec![a]),
                PathFormula::AlmostAlways(a) => (PureOp::AlmostAlways, vec![a]),
                PathFormula::Until(a, b) => (PureOp::Until, vec![a, b]),
                PathFormula::Release(a, b) => (PureOp::Release, vec![a, b]),
                _ => unreachable!("CTL shape checked before pairing"),
            };
            out.insert(OpToken::Ctl(CtlOp::new(*q, op)));
            for arg in args {
                if let PathFormula::State(inner) = arg {
                    collect_paired(inner, out);
                }
            }
        }
    }
}

fn collect_tokens(f: &StateFormula, out: &mut BTreeSet<OpToken>) {
    fn path(p: &PathFormula, out: &mut BTreeSet<OpToken>) {
        match p {
            PathFormula::State(inner) => collect_tokens(inner, out),
            PathFormula::Not(a) => path(a, out),
            PathFormula::And(a, b) | PathFormula::Or(a, b) => {
                path(a, out);
                path(b, out);
            }
            PathFormula::Next(a) => {
                out.insert(OpToken::Pure(PureOp::Next));
                path(a, out);
            }
            PathFormula::Eventually(a) => {
                out.insert(OpToken::Pure(PureOp::Eventually));
                path(a, out);
            }
            PathFormula::Globally(a) => {
                out.insert(OpToken::Pure(PureOp::Globally));
                path(a, out);
            }
            PathFormula::InfOften(a) => {
                out.insert(OpToken::Pure(PureOp::InfOften));
                path(a, out);
            }
            PathFormula::AlmostAlways(a) => {
                out.insert(OpToken::Pure(PureOp::AlmostAlways));
                path(a, out);
            }
            PathFormula::Until(a, b) => {
                out.insert(OpToken::Pure(PureOp::Until));
                path(a, out);
                path(b, out);
            }
            PathFormula::Release(a, b) => {
                out.insert(OpToken::Pure(PureOp::Release));
                path(a, out);
                path(b, out);
            }
        }
    }
    match f {
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => {}
        StateFormula::Not(a) => collect_tokens(a, out),
        StateFormula::And(a, b) | StateFormula::Or(a, b) => {
            collect_tokens(a, out);
            collect_tokens(b, out);
        }
        StateFormula::Quant(q, body) => {
            out.insert(OpToken::Quant(*q));
            path(body, out);
        }
    }
}

/// The least negation discipline containing `f`.
pub fn negation_discipline(f: &StateFormula) -> Discipline {
    let mut has_neg = false;
    let mut atomic_only = true;
    let mut pos_ok = true;
    scan_negations(f, &mut has_neg, &mut atomic_only, &mut pos_ok);
    if !has_neg {
        Discipline::Monotone
    } else if atomic_only {
        Discipline::AtomicNegation
    } else if pos_ok {
        Discipline::Positive
    } else {
        Discipline::Full
    }
}

fn scan_negations(f: &StateFormula, has_neg: &mut bool, atomic: &mut bool, pos: &mut bool) {
    fn state_has_temporal(f: &StateFormula) -> bool {
        !f.is_propositional()
    }
    fn path_has_temporal(p: &PathFormula) -> bool {
        match p {
            PathFormula::State(inner) => state_has_temporal(inner),
            PathFormula::Not(a) => path_has_temporal(a),
            PathFormula::And(a, b) | PathFormula::Or(a, b) => {
                path_has_temporal(a) || path_has_temporal(b)
            }
            _ => true,
        }
    }
    fn path(p: &PathFormula, has_neg: &mut bool, atomic: &mut bool, pos: &mut bool) {
        match p {
            PathFormula::State(inner) => scan_negations(inner, has_neg, atomic, pos),
            PathFormula::Not(a) => {
                *has_neg = true;
                *atomic = false;
                if path_has_temporal(a) {
                    *pos = false;
                }
                path(a, has_neg, atomic, pos);
            }
            PathFormula::And(a, b)
            | PathFormula::Or(a, b)
            | PathFormula::Until(a, b)
            | PathFormula::Release(a, b) => {
                path(a, has_neg, atomic, pos);
                path(b, has_neg, atomic, pos);
            }
            PathFormula::Next(a)
            | PathFormula::Eventually(a)
            | PathFormula::Globally(a)
            | PathFormula::InfOften(a)
            | PathFormula::AlmostAlways(a) => path(a, has_neg, atomic, pos),
        }
    }
    match f {
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => {}
        StateFormula::Not(a) => {
            *has_neg = true;
            if !matches!(**a, StateFormula::Atom(_)) {
                *atomic = false;
            }
            if state_has_temporal(a) {
                *pos = false;
            }
            scan_negations(a, has_neg, atomic, pos);
        }
        StateFormula::And(a, b) | StateFormula::Or(a, b) => {
            scan_negations(a, has_neg, atomic, pos);
            scan_negations(b, has_neg, atomic, pos);
        }
        StateFormula::Quant(_, body) => path(body, has_neg, atomic, pos),
    }
}

/// Negation normal form: a semantically equivalent formula in which
/// negations sit only on atoms. Quantifiers and temporal operators are
/// swapped with their duals on the way down; the result's discipline is
/// `mon` or `an`.
pub fn to_nnf(f: &StateFormula) -> StateFormula {
    nnf_state(f, false)
}

fn nnf_state(f: &StateFormula, neg: bool) -> StateFormula {
    match f {
        StateFormula::True => {
            if neg {
                StateFormula::False
            } else {
                StateFormula::True
            }
        }
        StateFormula::False => {
            if neg {
                StateFormula::True
            } else {
                StateFormula::False
            }
        }
        StateFormula::Atom(p) => {
            if neg {
                StateFormula::not(StateFormula::Atom(p.clone()))
            } else {
                StateFormula::Atom(p.clone())
            }
        }
        StateFormula::Not(a) => nnf_state(a, !neg),
        StateFormula::And(a, b) => {
            let (na, nb) = (nnf_state(a, neg), nnf_state(b, neg));
            if neg {
                StateFormula::or(na, nb)
            } else {
                StateFormula::and(na, nb)
            }
        }
        StateFormula::Or(a, b) => {
            let (na, nb) = (nnf_state(a, neg), nnf_state(b, neg));
            if neg {
                StateFormula::and(na, nb)
            } else {
                StateFormula::or(na, nb)
            }
        }
        StateFormula::Quant(q, body) => {
            let q = if neg { q.dual() } else { *q };
            StateFormula::quant(q, nnf_path(body, neg))
        }
    }
}

/// Push negations through a path formula; exposed for the engines, which
/// dualize universal quantifiers into existential path searches.
pub fn nnf_path(p: &PathFormula, neg: bool) -> PathFormula {
    match p {
        PathFormula::State(inner) => PathFormula::state(nnf_state(inner, neg)),
        PathFormula::Not(a) => nnf_path(a, !neg),
        PathFormula::And(a, b) => {
            let (na, nb) = (nnf_path(a, neg), nnf_path(b, neg));
            if neg {
                PathFormula::or(na, nb)
            } else {
                PathFormula::and(na, nb)
            }
        }
        PathFormula::Or(a, b) => {
            let (na, nb) = (nnf_path(a, neg), nnf_path(b, neg));
            if neg {
                PathFormula::and(na, nb)
            } else {
                PathFormula::or(na, nb)
            }
        }
        PathFormula::Next(a) => PathFormula::next(nnf_path(a, neg)),
        PathFormula::Eventually(a) => {
            if neg {
                PathFormula::globally(nnf_path(a, true))
            } else {
                PathFormula::eventually(nnf_path(a, false))
            }
        }
        PathFormula::Globally(a) => {
            if neg {
                PathFormula::eventually(nnf_path(a, true))
            } else {
                PathFormula::globally(nnf_path(a, false))
            }
        }
        PathFormula::Until(a, b) => {
            let (na, nb) = (nnf_path(a, neg), nnf_path(b, neg));
            if neg {
                PathFormula::release(na, nb)
            } else {
                PathFormula::until(na, nb)
            }
        }
        PathFormula::Release(a, b) => {
            let (na, nb) = (nnf_path(a, neg), nnf_path(b, neg));
            if neg {
                PathFormula::until(na, nb)
            } else {
                PathFormula::release(na, nb)
            }
        }
        PathFormula::InfOften(a) => {
            if neg {
                PathFormula::almost_always(nnf_path(a, true))
            } else {
                PathFormula::inf_often(nnf_path(a, false))
            }
        }
        PathFormula::AlmostAlways(a) => {
            if neg {
                PathFormula::inf_often(nnf_path(a, true))
            } else {
                PathFormula::almost_always(nnf_path(a, false))
            }
        }
    }
}

#[cfg(test)]
mod tests;
