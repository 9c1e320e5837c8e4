use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;

pub type StateId = usize;

/// Transition label: a symbol or an epsilon move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Epsilon,
    Symbol(char),
}

/// A deduplicated, sorted set of NFA states.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StateSet(Vec<StateId>);

impl StateSet {
    pub fn new() -> Self {
        StateSet(Vec::new())
    }

    pub fn singleton(q: StateId) -> Self {
        StateSet(vec![q])
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.0.binary_search(&q).is_ok()
    }

    pub fn insert(&mut self, q: StateId) -> bool {
        match self.0.binary_search(&q) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, q);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[StateId] {
        &self.0
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.iter().all(|q| other.contains(q))
    }
}

impl FromIterator<StateId> for StateSet {
    fn from_iter<I: IntoIterator<Item = StateId>>(iter: I) -> Self {
        let mut v: Vec<StateId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        StateSet(v)
    }
}

/// Nondeterministic finite automaton `(Q, Σ, δ, q0, F)` with epsilon moves.
///
/// States are the dense range `0..state_count`, numbered in the order they
/// were created.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    alphabet: BTreeSet<char>,
    transitions: BTreeMap<(StateId, Label), BTreeSet<StateId>>,
    start: StateId,
    accepts: BTreeSet<StateId>,
    epsilon_display: char,
    // adjacency derived from `transitions`, used by simulation
    epsilon_edges: Vec<Vec<StateId>>,
    symbol_edges: Vec<Vec<(char, StateId)>>,
}

impl Nfa {
    pub fn states(&self) -> Range<StateId> {
        0..self.state_count
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn accept_states(&self) -> &BTreeSet<StateId> {
        &self.accepts
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepts.contains(&q)
    }

    /// The character used to print epsilon labels.
    pub fn epsilon_display(&self) -> char {
        self.epsilon_display
    }

    /// Every `(from, label) -> {to}` entry, in ascending order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Label, &BTreeSet<StateId>)> {
        self.transitions.iter().map(|(&(q, l), to)| (q, l, to))
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.values().map(BTreeSet::len).sum()
    }

    pub fn epsilon_targets(&self, q: StateId) -> &[StateId] {
        &self.epsilon_edges[q]
    }

    pub fn symbol_targets(&self, q: StateId, symbol: char) -> impl Iterator<Item = StateId> + '_ {
        self.symbol_edges[q]
            .iter()
            .filter(move |(c, _)| *c == symbol)
            .map(|&(_, to)| to)
    }

    /// States from which some accept state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); self.state_count];
        for (&(from, _), to) in &self.transitions {
            for &t in to {
                reverse[t].push(from);
            }
        }
        let mut live = vec![false; self.state_count];
        let mut stack: Vec<StateId> = self.accepts.iter().copied().collect();
        for &q in &stack {
            live[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &reverse[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }
}

/// Incremental construction of an [`Nfa`].
#[derive(Debug, Clone)]
pub struct NfaBuilder {
    state_count: usize,
    alphabet: BTreeSet<char>,
    transitions: BTreeMap<(StateId, Label), BTreeSet<StateId>>,
    accepts: BTreeSet<StateId>,
    epsilon_display: char,
}

impl Default for NfaBuilder {
    fn default() -> Self {
        NfaBuilder::new('e')
    }
}

impl NfaBuilder {
    pub fn new(epsilon_display: char) -> Self {
        NfaBuilder {
            state_count: 0,
            alphabet: BTreeSet::new(),
            transitions: BTreeMap::new(),
            accepts: BTreeSet::new(),
            epsilon_display,
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.state_count += 1;
        self.state_count - 1
    }

    pub fn add_transition(&mut self, from: StateId, label: Label, to: StateId) {
        assert!(from < self.state_count && to < self.state_count, "unknown state");
        if let Label::Symbol(c) = label {
            self.alphabet.insert(c);
        }
        self.transitions.entry((from, label)).or_default().insert(to);
    }

    pub fn add_accept(&mut self, q: StateId) {
        assert!(q < self.state_count, "unknown state");
        self.accepts.insert(q);
    }

    pub fn build(self, start: StateId) -> Nfa {
        assert!(start < self.state_count, "unknown start state");
        let mut epsilon_edges = vec![Vec::new(); self.state_count];
        let mut symbol_edges = vec![Vec::new(); self.state_count];
        for (&(from, label), to) in &self.transitions {
            for &t in to {
                match label {
                    Label::Epsilon => epsilon_edges[from].push(t),
                    Label::Symbol(c) => symbol_edges[from].push((c, t)),
                }
            }
        }
        Nfa {
            state_count: self.state_count,
            alphabet: self.alphabet,
            transitions: self.transitions,
            start,
            accepts: self.accepts,
            epsilon_display: self.epsilon_display,
            epsilon_edges,
            symbol_edges,
        }
    }
}
