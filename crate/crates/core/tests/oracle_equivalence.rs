mod common;

use common::{alphabet, ast, nfa};
use regpump_core::automata::{accepts, determinize};
use regpump_core::corpus::{all_strings, random_corpus};
use regpump_core::syntax::{oracle_match, RegexAst};

const SIGMA: [char; 4] = ['0', '1', 'a', 'b'];

#[test]
fn compiled_nfa_agrees_with_tree_matcher() {
    let corpus = random_corpus(0x5eed, 500, &SIGMA, 4);
    let mut checked = 0usize;
    for regex in &corpus {
        let n = nfa(regex);
        let tree = ast(regex);
        for w in all_strings(&alphabet(&n), 6) {
            assert_eq!(accepts(&n, &w), oracle_match(&tree, &w), "regex {regex:?}, input {w:?}");
            checked += 1;
        }
    }
    assert!(checked > 100_000, "sweep too small: {checked}");
}

#[test]
fn determinization_preserves_language() {
    for regex in random_corpus(0x5eed, 500, &SIGMA, 4) {
        let n = nfa(&regex);
        let d = determinize(&n).unwrap();
        assert!(d.state_count() <= (1usize << n.state_count().min(20)) + 1);
        for w in all_strings(&alphabet(&n), 6) {
            assert_eq!(d.accepts(&w), accepts(&n, &w), "regex {regex:?}, input {w:?}");
        }
    }
}

#[test]
fn foreign_characters_are_rejected() {
    for regex in random_corpus(7, 200, &SIGMA, 4) {
        let n = nfa(&regex);
        for w in ["x", "0x", "x0", "a1z", "e"] {
            assert!(!accepts(&n, w), "{regex:?} accepted {w:?}");
        }
    }
}

#[test]
fn single_accept_state() {
    for regex in random_corpus(11, 500, &SIGMA, 4) {
        let n = nfa(&regex);
        assert!(n.accept_states().len() <= 1);
        if matches!(ast(&regex), RegexAst::Union(..) | RegexAst::Star(..)) {
            assert_eq!(n.accept_states().len(), 1, "{regex:?}");
        }
    }
    assert!(nfa("\\").accept_states().is_empty());
}

#[test]
fn small_examples_against_oracle() {
    for (regex, w, expected) in [
        ("10*1", "11", true),
        ("10*1", "10", false),
        ("10*1", "10001", true),
        ("(1U0)*101(1U0)*", "1011", true),
        ("e", "", true),
        ("\\", "", false),
        ("\\*", "", true),
    ] {
        assert_eq!(oracle_match(&ast(regex), w), expected, "{regex} {w}");
        assert_eq!(accepts(&nfa(regex), w), expected, "{regex} {w}");
    }
}
