//! Kripke structures: finite state sets with a total transition relation and
//! per-state proposition labels, plus the graph precomputations the engines
//! query (reachability, cyclic states) and the relabelling transform that
//! eliminates atomic negation.

mod index;
mod io;

pub use index::GraphIndex;

use crate::formula::{PathFormula, Prop, StateFormula};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

/// States are addressed by their declaration index.
pub type StateId = usize;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("model file must start with a `kripke` header line")]
    MissingHeader,
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("state `{0}` has no outgoing transition")]
    NotTotal(String),
    #[error("structure has no states")]
    Empty,
    #[error("fresh proposition `{0}` already occurs in the instance")]
    NameCollision(String),
    #[error("formula is not in the atomic-negation fragment")]
    NotAtomicNegation,
    #[error("state name `{0}` cannot be written in the text model format")]
    UnprintableName(String),
    #[error("invalid JSON model: {0}")]
    Json(String),
}

/// A finite Kripke structure. Immutable once built; every accessor borrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeStructure {
    names: Vec<String>,
    ids: HashMap<String, StateId>,
    succ: Vec<Vec<StateId>>,
    labels: Vec<BTreeSet<Prop>>,
}

impl KripkeStructure {
    pub fn builder() -> KripkeBuilder {
        KripkeBuilder::default()
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn state_ids(&self) -> std::ops::Range<StateId> {
        0..self.names.len()
    }

    pub fn name(&self, s: StateId) -> &str {
        &self.names[s]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<StateId> {
        self.ids.get(name).copied()
    }

    /// First declared state, the default start for checking.
    pub fn first_state(&self) -> StateId {
        0
    }

    pub fn successors(&self, s: StateId) -> &[StateId] {
        &self.succ[s]
    }

    pub fn labels(&self, s: StateId) -> &BTreeSet<Prop> {
        &self.labels[s]
    }

    pub fn holds(&self, s: StateId, p: &Prop) -> bool {
        self.labels[s].contains(p)
    }

    pub fn has_edge(&self, from: StateId, to: StateId) -> bool {
        self.succ[from].binary_search(&to).is_ok()
    }

    pub fn transition_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Predecessor lists, computed on demand by the fixpoint engines.
    pub fn predecessors(&self) -> Vec<Vec<StateId>> {
        let mut preds = vec![Vec::new(); self.names.len()];
        for (from, outs) in self.succ.iter().enumerate() {
            for &to in outs {
                preds[to].push(from);
            }
        }
        preds
    }

    /// Union of all label sets.
    pub fn propositions(&self) -> BTreeSet<Prop> {
        self.labels.iter().flatten().cloned().collect()
    }

    /// The same structure with `(w,w)` added for every state.
    pub fn reflexive_closure(&self) -> KripkeStructure {
        let mut out = self.clone();
        for (s, outs) in out.succ.iter_mut().enumerate() {
            if let Err(pos) = outs.binary_search(&s) {
                outs.insert(pos, s);
            }
        }
        out
    }
}

/// Incremental construction; `build` enforces the structure invariants.
#[derive(Debug, Default, Clone)]
pub struct KripkeBuilder {
    names: Vec<String>,
    ids: HashMap<String, StateId>,
    succ: Vec<BTreeSet<StateId>>,
    labels: Vec<BTreeSet<Prop>>,
}

impl KripkeBuilder {
    /// Declare a state; errors if it already exists.
    pub fn add_state(&mut self, name: &str) -> Result<StateId, ModelError> {
        if self.ids.contains_key(name) {
            return Err(ModelError::DuplicateState(name.to_string()));
        }
        Ok(self.ensure_state(name))
    }

    /// Declare a state if new, otherwise return the existing id.
    pub fn ensure_state(&mut self, name: &str) -> StateId {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.ids.insert(name.to_string(), id);
        self.succ.push(BTreeSet::new());
        self.labels.push(BTreeSet::new());
        id
    }

    pub fn edge(&mut self, from: &str, to: &str) -> Result<(), ModelError> {
        let f = self
            .ids
            .get(from)
            .copied()
            .ok_or_else(|| ModelError::UnknownState(from.to_string()))?;
        let t = self
            .ids
            .get(to)
            .copied()
            .ok_or_else(|| ModelError::UnknownState(to.to_string()))?;
        self.succ[f].insert(t);
        Ok(())
    }

    pub fn edge_ids(&mut self, from: StateId, to: StateId) {
        self.succ[from].insert(to);
    }

    pub fn label(&mut self, state: &str, prop: &str) -> Result<(), ModelError> {
        let s = self
            .ids
            .get(state)
            .copied()
            .ok_or_else(|| ModelError::UnknownState(state.to_string()))?;
        self.labels[s].insert(Prop::new(prop));
        Ok(())
    }

    pub fn label_id(&mut self, state: StateId, prop: &str) {
        self.labels[state].insert(Prop::new(prop));
    }

    /// Validate and freeze. Totality violations are an error; pass
    /// `repair_totality` to add a self-loop on every sink instead, the
    /// repair the hardness constructions themselves use.
    pub fn build(self, repair_totality: bool) -> Result<KripkeStructure, ModelError> {
        let KripkeBuilder {
            names,
            ids,
            mut succ,
            labels,
        } = self;
        if names.is_empty() {
            return Err(ModelError::Empty);
        }
        for (s, outs) in succ.iter_mut().enumerate() {
            if outs.is_empty() {
                if repair_totality {
                    outs.insert(s);
                } else {
                    return Err(ModelError::NotTotal(names[s].clone()));
                }
            }
        }
        Ok(KripkeStructure {
            names,
            ids,
            succ: succ.into_iter().map(|s| s.into_iter().collect()).collect(),
            labels,
        })
    }
}

/// Replace every negated atom `~p` in `f` by a fresh proposition `q_p` and
/// extend the labelling so that `q_p` holds exactly where `p` does not.
/// Satisfaction is preserved at every state; the new formula is
/// negation-free.
pub fn elim_atomic_negation(
    k: &KripkeStructure,
    f: &StateFormula,
) -> Result<(KripkeStructure, StateFormula), ModelError> {
    use crate::formula::{negation_discipline, Discipline};
    if negation_discipline(f) > Discipline::AtomicNegation {
        return Err(ModelError::NotAtomicNegation);
    }
    let formula_props = f.props();
    let mut taken: BTreeSet<Prop> = k.propositions();
    taken.extend(formula_props.iter().cloned());
    let fresh: BTreeMap<Prop, Prop> = formula_props
        .iter()
        .map(|p| (p.clone(), Prop::new(&format!("q_{p}"))))
        .collect();
    for q in fresh.values() {
        if taken.contains(q) {
            return Err(ModelError::NameCollision(q.to_string()));
        }
    }

    let mut relabelled = k.clone();
    for s in k.state_ids() {
        for (p, q) in &fresh {
            if !k.holds(s, p) {
                relabelled.labels[s].insert(q.clone());
            }
        }
    }
    Ok((relabelled, subst_negated_atoms(f, &fresh)))
}

fn subst_negated_atoms(f: &StateFormula, fresh: &BTreeMap<Prop, Prop>) -> StateFormula {
    fn path(p: &PathFormula, fresh: &BTreeMap<Prop, Prop>) -> PathFormula {
        match p {
            PathFormula::State(inner) => PathFormula::state(subst_negated_atoms(inner, fresh)),
            PathFormula::Not(a) => PathFormula::not(path(a, fresh)),
            PathFormula::And(a, b) => PathFormula::and(path(a, fresh), path(b, fresh)),
            PathFormula::Or(a, b) => PathFormula::or(path(a, fresh), path(b, fresh)),
            PathFormula::Next(a) => PathFormula::next(path(a, fresh)),
            PathFormula::Eventually(a) => PathFormula::eventually(path(a, fresh)),
            PathFormula::Globally(a) => PathFormula::globally(path(a, fresh)),
            PathFormula::InfOften(a) => PathFormula::inf_often(path(a, fresh)),
            PathFormula::AlmostAlways(a) => PathFormula::almost_always(path(a, fresh)),
            PathFormula::Until(a, b) => PathFormula::until(path(a, fresh), path(b, fresh)),
            PathFormula::Release(a, b) => PathFormula::release(path(a, fresh), path(b, fresh)),
        }
    }
    match f {
        StateFormula::Not(inner) => match &**inner {
            StateFormula::Atom(p) => StateFormula::Atom(fresh[p].clone()),
            other => StateFormula::not(subst_negated_atoms(other, fresh)),
        },
        StateFormula::True | StateFormula::False | StateFormula::Atom(_) => f.clone(),
        StateFormula::And(a, b) => StateFormula::and(
            subst_negated_atoms(a, fresh),
            subst_negated_atoms(b, fresh),
        ),
        StateFormula::Or(a, b) => StateFormula::or(
            subst_negated_atoms(a, fresh),
            subst_negated_atoms(b, fresh),
        ),
        StateFormula::Quant(q, body) => StateFormula::quant(*q, path(body, fresh)),
    }
}

#[cfg(test)]
mod tests;
