mod common;

use common::{brute_language, is_finite, nfa, shortlex_lt};
use regpump_core::automata::{accepts, determinize};
use regpump_core::corpus::random_corpus;
use regpump_core::enumerate::{open_enumeration, EnumerationCursor, Pruning, DEFAULT_FRONTIER_CAP};

const SIGMA: [char; 4] = ['0', '1', 'a', 'b'];

fn corpus() -> Vec<String> {
    random_corpus(0xe0, 100, &SIGMA, 4)
}

#[test]
fn completeness_and_order_up_to_length_5() {
    for regex in corpus() {
        let n = nfa(&regex);
        let got = open_enumeration(&n).take_up_to_length(5).unwrap();
        assert_eq!(got, brute_language(&regex, 5), "{regex}");
        assert!(got.windows(2).all(|w| shortlex_lt(&w[0], &w[1])), "{regex}");
        assert!(got.iter().all(|w| accepts(&n, w)));
    }
}

#[test]
fn batches_continue_the_same_sequence() {
    for regex in corpus().iter().take(40) {
        let n = nfa(regex);
        let whole = open_enumeration(&n).next_strings(60).unwrap().strings;
        let mut cursor = open_enumeration(&n);
        let mut pieces = Vec::new();
        for k in [1, 7, 3, 20, 29] {
            let batch = cursor.next_strings(k).unwrap();
            assert!(batch.strings.len() <= k);
            assert_eq!(batch.next_offset, pieces.len() + batch.strings.len());
            pieces.extend(batch.strings);
        }
        assert_eq!(pieces, whole, "{regex}");
        assert!(pieces.windows(2).all(|w| shortlex_lt(&w[0], &w[1])));
    }
}

#[test]
fn replay_is_deterministic() {
    for regex in corpus().iter().take(20) {
        let n = nfa(regex);
        let run = || {
            let mut c = open_enumeration(&n);
            [3, 5, 8].map(|k| c.next_strings(k).unwrap())
        };
        assert_eq!(run(), run());
    }
}

#[test]
fn pruning_never_changes_output() {
    for regex in corpus().iter().take(20) {
        let n = nfa(regex);
        let reference =
            EnumerationCursor::new(&n, Pruning::Off, DEFAULT_FRONTIER_CAP).take_up_to_length(5).unwrap();
        for mode in [Pruning::EmptySet, Pruning::DeadBranches] {
            let mut c = EnumerationCursor::new(&n, mode, DEFAULT_FRONTIER_CAP);
            assert_eq!(c.take_up_to_length(5).unwrap(), reference, "{regex} {mode:?}");
        }
    }
}

#[test]
fn frontier_never_holds_empty_sets() {
    for regex in corpus().iter().take(30) {
        let n = nfa(regex);
        for mode in [Pruning::EmptySet, Pruning::DeadBranches] {
            let mut c = EnumerationCursor::new(&n, mode, DEFAULT_FRONTIER_CAP);
            for _ in 0..5 {
                c.next_strings(4).unwrap();
                let mut prev: Option<&str> = None;
                for (w, set) in c.frontier() {
                    assert!(!set.is_empty());
                    assert_eq!(w.chars().count(), c.current_length());
                    if let Some(p) = prev {
                        assert!(p < w, "frontier out of order");
                    }
                    prev = Some(w);
                }
            }
        }
    }
}

#[test]
fn exhaustion_iff_finite() {
    let small = random_corpus(0xf1, 150, &['0', '1'], 3);
    let mut finite_seen = 0;
    for regex in &small {
        let finite = is_finite(regex);
        let mut c = open_enumeration(&nfa(regex));
        let batch = c.next_strings(200).unwrap();
        if finite {
            finite_seen += 1;
            assert!(batch.exhausted, "{regex} is finite");
            let n = determinize(&nfa(regex)).unwrap().state_count();
            assert_eq!(batch.strings, brute_language(regex, n), "{regex}");
        } else {
            assert!(!batch.exhausted, "{regex} is infinite");
            assert_eq!(batch.strings.len(), 200);
        }
    }
    assert!(finite_seen >= 10, "corpus has too few finite languages: {finite_seen}");
}

#[test]
fn examples() {
    let first = |r: &str, k| open_enumeration(&nfa(r)).next_strings(k).unwrap();
    assert_eq!(first("1*01*01*", 4).strings, ["00", "001", "010", "100"]);
    assert_eq!(first("aabUa*b*", 5).strings, ["", "a", "b", "aa", "ab"]);
    let b = first("ab", 10);
    assert_eq!((b.strings, b.exhausted), (vec!["ab".to_string()], true));
    let b = first("\\", 1);
    assert!(b.strings.is_empty() && b.exhausted);
}
