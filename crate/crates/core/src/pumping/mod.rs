//! Pumping-lemma decisions for regular languages.
//!
//! A split `s = xyz` is valid for window `p` when `|xy| <= p`, `|y| >= 1` and
//! `x y^i z` is in the language for every `i >= 0`. The unbounded quantifier
//! is decided on the DFA: reading `y` over and over from the state after `x`
//! produces an eventually periodic state sequence (the orbit), and the split
//! is valid iff `z` is accepted from every state of the orbit.

mod exact;
mod sampled;

pub use exact::{min_pumping_length_exact, min_pumping_length_exact_with_cap, pumping_counterexample};
pub use sampled::{default_max_len, min_pumping_length_sampled};

use serde::Serialize;

use crate::automata::Dfa;

/// A decomposition `s = x y z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PumpSplit {
    pub x: String,
    pub y: String,
    pub z: String,
}

impl PumpSplit {
    pub fn new(x: impl Into<String>, y: impl Into<String>, z: impl Into<String>) -> Self {
        PumpSplit { x: x.into(), y: y.into(), z: z.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MplMode {
    Sampled,
    Exact,
}

/// Minimum pumping length together with an illustrating string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MplResult {
    pub p: usize,
    /// Shortlex-least language string of length at least `p`, if any.
    pub witness: Option<String>,
    /// First valid split of the witness (smallest `|x|`, then smallest `|y|`).
    pub split: Option<PumpSplit>,
    pub mode: MplMode,
    /// Shortest language string showing that `p - 1` does not work. Only
    /// computed in exact mode.
    pub counterexample_for_p_minus_1: Option<String>,
}

/// `x · y^i · z`
pub fn pump(split: &PumpSplit, i: usize) -> String {
    let mut out = String::with_capacity(split.x.len() + split.y.len() * i + split.z.len());
    out.push_str(&split.x);
    for _ in 0..i {
        out.push_str(&split.y);
    }
    out.push_str(&split.z);
    out
}

/// States reached from `from` after reading `y` zero or more times.
/// Sorted, deduplicated.
pub fn orbit(dfa: &Dfa, from: usize, y: &str) -> Vec<usize> {
    let mut seen = vec![false; dfa.state_count()];
    let mut q = from;
    // a repeat closes the cycle; at most state_count steps
    while !seen[q] {
        seen[q] = true;
        q = dfa.run_from(q, y);
    }
    (0..seen.len()).filter(|&q| seen[q]).collect()
}

fn split_is_valid(dfa: &Dfa, after_x: usize, y: &str, z: &str) -> bool {
    orbit(dfa, after_x, y)
        .into_iter()
        .all(|q| dfa.is_accepting(dfa.run_from(q, z)))
}

fn splits_in_order<'a>(s: &'a str, p: usize, dfa: &'a Dfa) -> impl Iterator<Item = PumpSplit> + 'a {
    let bounds: Vec<usize> = s.char_indices().map(|(b, _)| b).chain([s.len()]).collect();
    let limit = p.min(bounds.len() - 1);
    let mut prefix_state = Vec::with_capacity(limit + 1);
    let mut q = dfa.start();
    prefix_state.push(q);
    for c in s.chars().take(limit) {
        q = dfa.step(q, c);
        prefix_state.push(q);
    }
    (0..limit)
        .flat_map(move |j| (j + 1..=limit).map(move |l| (j, l)))
        .filter_map(move |(j, l)| {
            let (x, y, z) = (&s[..bounds[j]], &s[bounds[j]..bounds[l]], &s[bounds[l]..]);
            split_is_valid(dfa, prefix_state[j], y, z).then(|| PumpSplit::new(x, y, z))
        })
}

/// Every valid split of `s` for window `p`, ordered by `|x|` then `|y|`.
///
/// When `s` is shorter than `p` the splits are still evaluated; the result
/// may well be empty.
pub fn valid_splits(s: &str, p: usize, dfa: &Dfa) -> Vec<PumpSplit> {
    splits_in_order(s, p, dfa).collect()
}

pub fn first_valid_split(s: &str, p: usize, dfa: &Dfa) -> Option<PumpSplit> {
    splits_in_order(s, p, dfa).next()
}

pub fn is_pumpable(s: &str, p: usize, dfa: &Dfa) -> bool {
    first_valid_split(s, p, dfa).is_some()
}
