use std::collections::{HashMap, VecDeque};

use super::nfa::{Nfa, StateSet};
use super::simulate::{initial, step};
use crate::error::{Error, Result};

pub const DEFAULT_STATE_CAP: usize = 100_000;

/// Complete deterministic automaton produced by subset construction.
///
/// Every state carries the NFA subset it stands for. The empty subset is the
/// dead state; it is always present and loops to itself on every symbol.
/// Characters outside the alphabet lead to the dead state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<char>,
    // row-major: table[state * alphabet.len() + symbol]
    table: Vec<usize>,
    start: usize,
    dead: usize,
    accepting: Vec<bool>,
    subsets: Vec<StateSet>,
}

impl Dfa {
    pub fn state_count(&self) -> usize {
        self.subsets.len()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn dead(&self) -> usize {
        self.dead
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn subset(&self, q: usize) -> &StateSet {
        &self.subsets[q]
    }

    pub fn symbol_index(&self, c: char) -> Option<usize> {
        self.alphabet.binary_search(&c).ok()
    }

    /// Transition by alphabet index.
    pub fn next(&self, q: usize, symbol: usize) -> usize {
        self.table[q * self.alphabet.len() + symbol]
    }

    pub fn step(&self, q: usize, c: char) -> usize {
        match self.symbol_index(c) {
            Some(i) => self.next(q, i),
            None => self.dead,
        }
    }

    pub fn run_from(&self, q: usize, w: &str) -> usize {
        w.chars().fold(q, |q, c| self.step(q, c))
    }

    pub fn accepts(&self, w: &str) -> bool {
        self.accepting[self.run_from(self.start, w)]
    }

    /// States from which an accept state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..k {
                reverse[self.next(q, a)].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
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

/// Subset construction over epsilon-closed state sets with the default cap.
pub fn determinize(nfa: &Nfa) -> Result<Dfa> {
    determinize_with_cap(nfa, DEFAULT_STATE_CAP)
}

/// Subset construction; fails once more than `cap` states would be needed.
pub fn determinize_with_cap(nfa: &Nfa, cap: usize) -> Result<Dfa> {
    let alphabet: Vec<char> = nfa.alphabet().iter().copied().collect();
    let k = alphabet.len();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut table: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();

    let mut intern = |set: StateSet, subsets: &mut Vec<StateSet>, queue: &mut VecDeque<usize>| {
        if let Some(&id) = index.get(&set) {
            return Ok(id);
        }
        let id = subsets.len();
        if id >= cap {
            return Err(Error::DeterminizationBlowUp { cap });
        }
        index.insert(set.clone(), id);
        subsets.push(set);
        queue.push_back(id);
        Ok(id)
    };

    let start = intern(initial(nfa), &mut subsets, &mut queue)?;
    while let Some(q) = queue.pop_front() {
        debug_assert_eq!(table.len(), q * k);
        for &c in &alphabet {
            let next = if subsets[q].is_empty() { StateSet::new() } else { step(c, &subsets[q], nfa) };
            let id = intern(next, &mut subsets, &mut queue)?;
            table.push(id);
        }
    }
    let dead = match subsets.iter().position(StateSet::is_empty) {
        Some(d) => d,
        None => {
            let d = intern(StateSet::new(), &mut subsets, &mut queue)?;
            table.extend(std::iter::repeat_n(d, k));
            d
        }
    };
    let accepting = subsets.iter().map(|s| s.iter().any(|q| nfa.is_accepting(q))).collect();
    Ok(Dfa { alphabet, table, start, dead, accepting, subsets })
}
