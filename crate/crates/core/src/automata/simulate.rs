use super::nfa::{Label, Nfa, StateSet};

/// Smallest superset of `current` closed under epsilon moves.
///
/// Works through a growing list of states and appends each epsilon target
/// only if it is not already present, so epsilon cycles terminate.
pub fn epsilon_closure(current: &StateSet, nfa: &Nfa) -> StateSet {
    let mut seen = vec![false; nfa.state_count()];
    let mut list: Vec<usize> = current.iter().collect();
    for &q in &list {
        seen[q] = true;
    }
    let mut i = 0;
    while i < list.len() {
        for &s in nfa.epsilon_targets(list[i]) {
            if !seen[s] {
                seen[s] = true;
                list.push(s);
            }
        }
        i += 1;
    }
    list.into_iter().collect()
}

/// States reachable from `current` by one transition on `label`.
/// An epsilon label leaves the set unchanged.
pub fn transit(label: Label, current: &StateSet, nfa: &Nfa) -> StateSet {
    match label {
        Label::Epsilon => current.clone(),
        Label::Symbol(c) => current.iter().flat_map(|q| nfa.symbol_targets(q, c)).collect(),
    }
}

/// Epsilon-closed state set after reading `c` from the closed set `current`.
pub fn step(c: char, current: &StateSet, nfa: &Nfa) -> StateSet {
    epsilon_closure(&transit(Label::Symbol(c), current, nfa), nfa)
}

/// Epsilon-closed initial state set.
pub fn initial(nfa: &Nfa) -> StateSet {
    epsilon_closure(&StateSet::singleton(nfa.start()), nfa)
}

/// Membership test: tracks every path in parallel and accepts if any
/// surviving state is an accept state.
pub fn accepts(nfa: &Nfa, w: &str) -> bool {
    let mut current = initial(nfa);
    for c in w.chars() {
        if current.is_empty() {
            return false;
        }
        current = step(c, &current, nfa);
    }
    let accepted = current.iter().any(|q| nfa.is_accepting(q));
    accepted
}
