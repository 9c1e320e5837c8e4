use super::{first_valid_split, is_pumpable, MplMode, MplResult};
use crate::automata::{determinize_with_cap, Nfa};
use crate::enumerate::{EnumerationCursor, Pruning};
use crate::error::Result;
use crate::Limits;

/// Default enumeration bound for sampled mode: twice the DFA size plus two.
pub fn default_max_len(dfa_states: usize) -> usize {
    2 * dfa_states + 2
}

/// Minimum pumping length judged from the language strings of length at most
/// `max_len` (default: [`default_max_len`] of the determinized automaton).
///
/// The answer is the smallest `p` for which every enumerated string of length
/// `>= p` has a valid split; strings beyond the bound are not looked at, so
/// the result is not a proof.
pub fn min_pumping_length_sampled(nfa: &Nfa, max_len: Option<usize>, limits: &Limits) -> Result<MplResult> {
    let dfa = determinize_with_cap(nfa, limits.state_cap)?;
    let max_len = max_len.unwrap_or_else(|| default_max_len(dfa.state_count()));
    let strings = EnumerationCursor::new(nfa, Pruning::default(), limits.frontier_cap)
        .take_up_to_length(max_len)?;

    // Pumpability is monotone in p, so the answer only ever moves up:
    // `bound` is the largest window shown to fail so far.
    let mut bound = 0;
    for s in &strings {
        let len = s.chars().count();
        while bound < len && !is_pumpable(s, bound + 1, &dfa) {
            bound += 1;
        }
    }
    let p = bound + 1;

    let witness = strings.iter().find(|s| s.chars().count() >= p).cloned();
    let split = witness.as_deref().and_then(|w| first_valid_split(w, p, &dfa));
    Ok(MplResult { p, witness, split, mode: MplMode::Sampled, counterexample_for_p_minus_1: None })
}
