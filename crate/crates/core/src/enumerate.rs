//! Shortlex enumeration of the strings an NFA accepts.
//!
//! The cursor walks the prefix tree breadth first, one length at a time.
//! Each frontier entry pairs a prefix with the epsilon-closed set of NFA
//! states reached by reading it. Symbols are tried in ascending character
//! order, so each level comes out sorted and the overall stream is in
//! shortlex order. Branches whose state set can no longer reach an accept
//! state are dropped as soon as they appear.

use serde::Serialize;

use crate::automata::{initial, step, Nfa, StateSet};
use crate::error::{Error, Result};

pub const DEFAULT_FRONTIER_CAP: usize = 1_000_000;

/// Which frontier entries get pruned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pruning {
    /// Keep every prefix, even those with an empty state set. Only useful to
    /// check that pruning never changes the output.
    Off,
    /// Drop prefixes whose state set is empty.
    EmptySet,
    /// Drop prefixes none of whose states can reach an accept state. This also
    /// lets finite languages whose automaton has non-empty dead ends report
    /// exhaustion.
    #[default]
    DeadBranches,
}

/// One batch of enumerated strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringBatch {
    pub strings: Vec<String>,
    /// Global shortlex position of the next string after this batch.
    pub next_offset: usize,
    pub exhausted: bool,
}

/// Resumable enumeration state. Replaying the same sequence of calls on a
/// fresh cursor gives identical output.
///
/// After a resource error the cursor is left mid-level and should be dropped.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    nfa: Nfa,
    symbols: Vec<char>,
    live: Vec<bool>,
    pruning: Pruning,
    frontier_cap: usize,
    frontier: Vec<(String, StateSet)>,
    length: usize,
    next_index: usize,
    emitted_count: usize,
    exhausted: bool,
}

/// Opens a cursor positioned before the first string.
pub fn open_enumeration(nfa: &Nfa) -> EnumerationCursor {
    EnumerationCursor::new(nfa, Pruning::default(), DEFAULT_FRONTIER_CAP)
}

impl EnumerationCursor {
    pub fn new(nfa: &Nfa, pruning: Pruning, frontier_cap: usize) -> Self {
        let mut cursor = EnumerationCursor {
            nfa: nfa.clone(),
            symbols: nfa.alphabet().iter().copied().collect(),
            live: nfa.live_states(),
            pruning,
            frontier_cap,
            frontier: Vec::new(),
            length: 0,
            next_index: 0,
            emitted_count: 0,
            exhausted: false,
        };
        let root = initial(nfa);
        if cursor.keep(&root) {
            cursor.frontier.push((String::new(), root));
        } else {
            cursor.exhausted = true;
        }
        cursor
    }

    pub fn with_frontier_cap(mut self, cap: usize) -> Self {
        self.frontier_cap = cap;
        self
    }

    pub fn emitted_count(&self) -> usize {
        self.emitted_count
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Length of the prefixes currently in the frontier.
    pub fn current_length(&self) -> usize {
        self.length
    }

    pub fn frontier(&self) -> impl Iterator<Item = (&str, &StateSet)> {
        self.frontier.iter().map(|(w, s)| (w.as_str(), s))
    }

    fn keep(&self, set: &StateSet) -> bool {
        match self.pruning {
            Pruning::Off => true,
            Pruning::EmptySet => !set.is_empty(),
            Pruning::DeadBranches => set.iter().any(|q| self.live[q]),
        }
    }

    fn accepting(&self, set: &StateSet) -> bool {
        set.iter().any(|q| self.nfa.is_accepting(q))
    }

    // Replaces the frontier with all kept one-symbol extensions.
    fn advance(&mut self) -> Result<()> {
        let mut next = Vec::new();
        for (prefix, set) in &self.frontier {
            for &c in &self.symbols {
                let s = step(c, set, &self.nfa);
                if self.keep(&s) {
                    if next.len() >= self.frontier_cap {
                        return Err(Error::FrontierLimit { cap: self.frontier_cap });
                    }
                    let mut w = String::with_capacity(prefix.len() + c.len_utf8());
                    w.push_str(prefix);
                    w.push(c);
                    next.push((w, s));
                }
            }
        }
        self.frontier = next;
        self.length += 1;
        self.next_index = 0;
        if self.frontier.is_empty() {
            self.exhausted = true;
        }
        Ok(())
    }

    fn fill(&mut self, k: usize, max_length: Option<usize>, out: &mut Vec<String>) -> Result<()> {
        while out.len() < k && !self.exhausted {
            if self.next_index == self.frontier.len() {
                if max_length.is_some_and(|m| self.length >= m) {
                    break;
                }
                self.advance()?;
                continue;
            }
            let (w, set) = &self.frontier[self.next_index];
            self.next_index += 1;
            if self.accepting(set) {
                out.push(w.clone());
                self.emitted_count += 1;
            }
        }
        Ok(())
    }

    /// Returns up to `k` further strings of the shortlex sequence.
    pub fn next_strings(&mut self, k: usize) -> Result<StringBatch> {
        let mut strings = Vec::with_capacity(k.min(1024));
        self.fill(k, None, &mut strings)?;
        // Settle the exhaustion flag when the level is used up. A cap error
        // here is not fatal for the batch; it resurfaces on the next call.
        if !self.exhausted && self.next_index == self.frontier.len() {
            let _ = self.advance();
        }
        Ok(StringBatch { strings, next_offset: self.emitted_count, exhausted: self.exhausted })
    }

    /// Skips `n` strings.
    pub fn skip(&mut self, n: usize) -> Result<()> {
        let mut sink = Vec::new();
        let mut remaining = n;
        while remaining > 0 && !self.exhausted {
            sink.clear();
            let chunk = remaining.min(4096);
            self.fill(chunk, None, &mut sink)?;
            remaining -= sink.len();
            if sink.len() < chunk {
                break;
            }
        }
        Ok(())
    }

    /// Every remaining string of length at most `max_length`.
    pub fn take_up_to_length(&mut self, max_length: usize) -> Result<Vec<String>> {
        let mut out = Vec::new();
        self.fill(usize::MAX, Some(max_length), &mut out)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::syntax::ReservedSymbols;

    fn cursor(regex: &str) -> EnumerationCursor {
        open_enumeration(&compile(regex, &ReservedSymbols::default()).unwrap())
    }

    #[test]
    fn empty_language() {
        let b = cursor("\\").next_strings(3).unwrap();
        assert!(b.strings.is_empty());
        assert!(b.exhausted);
    }

    #[test]
    fn epsilon_first() {
        let b = cursor("e").next_strings(3).unwrap();
        assert_eq!(b.strings, [""]);
        assert!(b.exhausted);
    }

    #[test]
    fn singleton() {
        let mut c = cursor("0");
        let b = c.next_strings(10).unwrap();
        assert_eq!(b.strings, ["0"]);
        assert!(b.exhausted);
        assert!(c.next_strings(10).unwrap().strings.is_empty());
    }

    #[test]
    fn shortest_first() {
        let b = cursor("1*01*01*").next_strings(4).unwrap();
        assert_eq!(b.strings, ["00", "001", "010", "100"]);
        assert!(!b.exhausted);
        assert_eq!(b.next_offset, 4);
    }

    #[test]
    fn union_with_epsilon() {
        let b = cursor("aabUa*b*").next_strings(5).unwrap();
        assert_eq!(b.strings, ["", "a", "b", "aa", "ab"]);
    }

    #[test]
    fn finite_language_reports_exhaustion_with_its_last_string() {
        let b = cursor("ab").next_strings(10).unwrap();
        assert_eq!(b.strings, ["ab"]);
        assert!(b.exhausted);
        let b = cursor("ab").next_strings(1).unwrap();
        assert!(b.exhausted);
    }

    #[test]
    fn dead_ends_are_pruned() {
        // the automaton never runs out of states, but nothing is accepted
        let mut c = cursor("(0U1)*\\");
        let b = c.next_strings(5).unwrap();
        assert!(b.strings.is_empty());
        assert!(b.exhausted);
    }

    #[test]
    fn batches_resume() {
        let mut c = cursor("(0U1)*");
        let a = c.next_strings(3).unwrap();
        let b = c.next_strings(3).unwrap();
        assert_eq!(a.strings, ["", "0", "1"]);
        assert_eq!(b.strings, ["00", "01", "10"]);
        assert_eq!(b.next_offset, 6);
    }

    #[test]
    fn skip_then_take() {
        let mut c = cursor("aabUa*b*");
        c.skip(1).unwrap();
        assert_eq!(c.next_strings(3).unwrap().strings, ["a", "b", "aa"]);
    }

    #[test]
    fn frontier_cap() {
        let n = compile("(0U1)*", &ReservedSymbols::default()).unwrap();
        let mut c = EnumerationCursor::new(&n, Pruning::default(), 8);
        let err = c.next_strings(100).unwrap_err();
        assert_eq!(err, Error::FrontierLimit { cap: 8 });
    }

    #[test]
    fn take_up_to_length_stops() {
        let mut c = cursor("0*");
        assert_eq!(c.take_up_to_length(3).unwrap(), ["", "0", "00", "000"]);
    }
}
