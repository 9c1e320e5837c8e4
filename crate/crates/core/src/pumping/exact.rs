//! Exact minimum pumping length.
//!
//! For a window `p`, the strings that are *not* `p`-pumpable are recognized
//! by a deterministic product automaton whose states track, while reading a
//! string:
//!
//! * the DFA state (membership of the whole string);
//! * for every candidate start of `y` inside the window, the state after `x`
//!   and the state transformation induced by the part of `y` read so far;
//! * for every `(x, y)` already closed inside the window, the set of states
//!   reached by reading the rest of the string from each state of the orbit
//!   of `y` at `x`. The split is valid at the end iff that set lies inside F.
//!
//! A string of length `>= p` in the language for which no closed split ends
//! inside F is a counterexample. Breadth-first search with symbols expanded
//! in order finds the shortlex-least one, or proves there is none.

use std::collections::{HashSet, VecDeque};

use super::{first_valid_split, MplMode, MplResult};
use crate::automata::{Dfa, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Tracker {
    depth: usize,
    state: usize,
    // (state after x, image of every DFA state under the y read so far)
    open: Vec<(usize, Vec<usize>)>,
    // antichain of sorted state sets
    closed: Vec<Vec<usize>>,
}

struct Product<'a> {
    dfa: &'a Dfa,
    p: usize,
    live: Vec<bool>,
}

impl Product<'_> {
    fn orbit_under(&self, from: usize, map: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; map.len()];
        let mut q = from;
        while !seen[q] {
            seen[q] = true;
            q = map[q];
        }
        (0..map.len()).filter(|&q| seen[q]).collect()
    }

    fn normalize(&self, mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        // a set holding a dead-end state can never end inside F
        sets.retain(|s| s.iter().all(|&q| self.live[q]));
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::with_capacity(sets.len());
        for s in sets {
            // any kept subset already covers s
            if !kept.iter().any(|k| k.iter().all(|q| s.binary_search(q).is_ok())) {
                kept.push(s);
            }
        }
        kept.sort();
        kept
    }

    fn initial(&self) -> Tracker {
        Tracker { depth: 0, state: self.dfa.start(), open: Vec::new(), closed: Vec::new() }
    }

    fn next(&self, t: &Tracker, a: usize) -> Tracker {
        let dfa = self.dfa;
        let image = |s: &[usize]| -> Vec<usize> {
            let mut v: Vec<usize> = s.iter().map(|&q| dfa.next(q, a)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut closed: Vec<Vec<usize>> = t.closed.iter().map(|s| image(s)).collect();
        let mut open = Vec::new();
        if t.depth < self.p {
            open = t
                .open
                .iter()
                .map(|(qx, map)| (*qx, map.iter().map(|&q| dfa.next(q, a)).collect::<Vec<_>>()))
                .collect();
            open.push((t.state, (0..dfa.state_count()).map(|q| dfa.next(q, a)).collect()));
            for (qx, map) in &open {
                closed.push(self.orbit_under(*qx, map));
            }
            if t.depth + 1 == self.p {
                open.clear();
            }
            open.sort();
            open.dedup();
        }
        Tracker {
            depth: (t.depth + 1).min(self.p),
            state: dfa.next(t.state, a),
            open,
            closed: self.normalize(closed),
        }
    }

    fn is_counterexample(&self, t: &Tracker) -> bool {
        t.depth == self.p
            && self.dfa.is_accepting(t.state)
            && !t.closed.iter().any(|s| s.iter().all(|&q| self.dfa.is_accepting(q)))
    }
}

/// Shortlex-least string of length `>= p` in the language that is not
/// `p`-pumpable, or `None` when `p` is a valid pumping length.
pub fn pumping_counterexample(dfa: &Dfa, p: usize, cap: usize) -> Result<Option<String>> {
    assert!(p >= 1, "pumping length must be positive");
    let product = Product { dfa, p, live: dfa.coaccessible() };
    let k = dfa.alphabet().len();

    let mut nodes: Vec<(Tracker, usize, usize)> = Vec::new();
    let mut seen: HashSet<Tracker> = HashSet::new();
    let root = product.initial();
    seen.insert(root.clone());
    nodes.push((root, usize::MAX, usize::MAX));

    let mut i = 0;
    while i < nodes.len() {
        for a in 0..k {
            let t = product.next(&nodes[i].0, a);
            if !product.live[t.state] || seen.contains(&t) {
                continue;
            }
            let bad = product.is_counterexample(&t);
            seen.insert(t.clone());
            nodes.push((t, i, a));
            if bad {
                return Ok(Some(spell(dfa, &nodes, nodes.len() - 1)));
            }
            if nodes.len() > cap {
                return Err(Error::ProductLimit { cap });
            }
        }
        i += 1;
    }
    Ok(None)
}

fn spell(dfa: &Dfa, nodes: &[(Tracker, usize, usize)], mut at: usize) -> String {
    let mut symbols = Vec::new();
    while nodes[at].1 != usize::MAX {
        symbols.push(dfa.alphabet()[nodes[at].2]);
        at = nodes[at].1;
    }
    symbols.iter().rev().collect()
}

/// Shortlex-least accepted string of length at least `min_len`.
pub(crate) fn shortlex_least_from_length(dfa: &Dfa, min_len: usize) -> Option<String> {
    let live = dfa.coaccessible();
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    // node = (state, min(depth, min_len)); breadth first in symbol order
    let key = |q: usize, d: usize| d * n + q;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * (min_len + 1)];
    let mut visited = vec![false; n * (min_len + 1)];
    let mut queue = VecDeque::new();
    let start = key(dfa.start(), 0);
    visited[start] = true;
    queue.push_back((dfa.start(), 0));
    while let Some((q, d)) = queue.pop_front() {
        if d == min_len && dfa.is_accepting(q) {
            let mut symbols = Vec::new();
            let mut at = key(q, d);
            while let Some((prev, a)) = parent[at] {
                symbols.push(dfa.alphabet()[a]);
                at = prev;
            }
            return Some(symbols.iter().rev().collect());
        }
        for a in 0..k {
            let (q2, d2) = (dfa.next(q, a), (d + 1).min(min_len));
            let id = key(q2, d2);
            if live[q2] && !visited[id] {
                visited[id] = true;
                parent[id] = Some((key(q, d), a));
                queue.push_back((q2, d2));
            }
        }
    }
    None
}

/// The true minimum pumping length with the default product cap.
pub fn min_pumping_length_exact(dfa: &Dfa) -> Result<MplResult> {
    min_pumping_length_exact_with_cap(dfa, DEFAULT_STATE_CAP)
}

/// Tries `p = 1, 2, …` until no counterexample exists. `p = |states|` always
/// works, so the loop is bounded by the size of the DFA.
pub fn min_pumping_length_exact_with_cap(dfa: &Dfa, cap: usize) -> Result<MplResult> {
    let mut previous = None;
    let mut p = 1;
    while let Some(c) = pumping_counterexample(dfa, p, cap)? {
        debug_assert!(p < dfa.state_count(), "window {p} cannot fail");
        previous = Some(c);
        p += 1;
    }
    let witness = shortlex_least_from_length(dfa, p);
    let split = witness.as_deref().and_then(|w| first_valid_split(w, p, dfa));
    Ok(MplResult {
        p,
        witness,
        split,
        mode: MplMode::Exact,
        counterexample_for_p_minus_1: previous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{compile, determinize};
    use crate::pumping::PumpSplit;
    use crate::syntax::ReservedSymbols;

    fn exact(regex: &str) -> MplResult {
        let dfa = determinize(&compile(regex, &ReservedSymbols::default()).unwrap()).unwrap();
        min_pumping_length_exact(&dfa).unwrap()
    }

    #[test]
    fn known_examples() {
        let r = exact("1*01*01*");
        assert_eq!(r.p, 3);
        assert_eq!(r.witness.as_deref(), Some("001"));
        assert_eq!(r.split, Some(PumpSplit::new("00", "1", "")));
        assert_eq!(r.counterexample_for_p_minus_1.as_deref(), Some("00"));

        assert_eq!(exact("aabUa*b*").p, 1);
        assert_eq!(exact("aabUa*b*").counterexample_for_p_minus_1, None);

        let r = exact("10*1");
        assert_eq!((r.p, r.witness.as_deref()), (3, Some("101")));
    }

    #[test]
    fn contains_101() {
        let r = exact("(1U0)*101(1U0)*");
        assert_eq!(r.p, 4);
        assert_eq!(r.counterexample_for_p_minus_1.as_deref(), Some("101"));
    }

    #[test]
    fn finite_and_empty() {
        let r = exact("ab");
        assert_eq!((r.p, r.witness, r.split), (3, None, None));
        assert_eq!(r.counterexample_for_p_minus_1.as_deref(), Some("ab"));
        let r = exact("\\");
        assert_eq!((r.p, r.witness), (1, None));
        assert_eq!(exact("e").p, 1);
    }

    #[test]
    fn shortlex_least_from_length_examples() {
        let dfa = determinize(&compile("1*01*01*", &ReservedSymbols::default()).unwrap()).unwrap();
        assert_eq!(shortlex_least_from_length(&dfa, 0).as_deref(), Some("00"));
        assert_eq!(shortlex_least_from_length(&dfa, 3).as_deref(), Some("001"));
        assert_eq!(shortlex_least_from_length(&dfa, 5).as_deref(), Some("00111"));
    }

    #[test]
    fn product_cap() {
        let dfa = determinize(&compile("(1U0)*101(1U0)*", &ReservedSymbols::default()).unwrap()).unwrap();
        assert_eq!(min_pumping_length_exact_with_cap(&dfa, 3), Err(Error::ProductLimit { cap: 3 }));
    }
}
