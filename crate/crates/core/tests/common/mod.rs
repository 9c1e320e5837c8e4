#![allow(dead_code)]

use regpump_core::automata::{compile, Nfa};
use regpump_core::corpus::all_strings;
use regpump_core::pumping::{pump, PumpSplit};
use regpump_core::syntax::{oracle_match, parse_ast, RegexAst, ReservedSymbols};

pub fn nfa(regex: &str) -> Nfa {
    compile(regex, &ReservedSymbols::default()).unwrap()
}

pub fn ast(regex: &str) -> RegexAst {
    parse_ast(regex, &ReservedSymbols::default()).unwrap()
}

pub fn alphabet(nfa: &Nfa) -> Vec<char> {
    nfa.alphabet().iter().copied().collect()
}

/// Every split with |xy| <= p, |y| >= 1, in (|x|, |y|) order, kept when
/// x y^i z matches the tree for every i in 0..=max_i.
pub fn brute_splits(tree: &RegexAst, s: &str, p: usize, max_i: usize) -> Vec<PumpSplit> {
    let chars: Vec<char> = s.chars().collect();
    let limit = p.min(chars.len());
    let mut out = Vec::new();
    for j in 0..limit {
        for l in j + 1..=limit {
            let split = PumpSplit::new(
                chars[..j].iter().collect::<String>(),
                chars[j..l].iter().collect::<String>(),
                chars[l..].iter().collect::<String>(),
            );
            if (0..=max_i).all(|i| oracle_match(tree, &pump(&split, i))) {
                out.push(split);
            }
        }
    }
    out
}

/// Brute-force minimum pumping length over language strings of length at
/// most `max_len`, with pumping checked for i in 0..=max_i.
pub fn brute_mpl(regex: &str, max_len: usize, max_i: usize) -> usize {
    let tree = ast(regex);
    let sigma = alphabet(&nfa(regex));
    let members: Vec<String> =
        all_strings(&sigma, max_len).into_iter().filter(|w| oracle_match(&tree, w)).collect();
    (1..)
        .find(|&p| {
            members
                .iter()
                .filter(|w| w.chars().count() >= p)
                .all(|w| !brute_splits(&tree, w, p, max_i).is_empty())
        })
        .unwrap()
}

/// Language strings of length at most `max_len`, shortlex order, by brute force.
pub fn brute_language(regex: &str, max_len: usize) -> Vec<String> {
    let tree = ast(regex);
    all_strings(&alphabet(&nfa(regex)), max_len)
        .into_iter()
        .filter(|w| oracle_match(&tree, w))
        .collect()
}

pub fn shortlex_lt(a: &str, b: &str) -> bool {
    (a.chars().count(), a) < (b.chars().count(), b)
}

/// Finite iff the trimmed DFA graph (reachable and co-reachable states) has
/// no cycle.
pub fn is_finite(regex: &str) -> bool {
    let d = regpump_core::automata::determinize(&nfa(regex)).unwrap();
    let (n, k) = (d.state_count(), d.alphabet().len());
    let d = &d;
    let succ = |q: usize| (0..k).map(move |a| d.next(q, a));
    let mut reach = vec![false; n];
    let mut stack = vec![d.start()];
    reach[d.start()] = true;
    while let Some(q) = stack.pop() {
        for r in succ(q) {
            if !reach[r] {
                reach[r] = true;
                stack.push(r);
            }
        }
    }
    let mut coreach: Vec<bool> = (0..n).map(|q| d.is_accepting(q)).collect();
    loop {
        let before = coreach.clone();
        for q in 0..n {
            if !coreach[q] && succ(q).any(|r| coreach[r]) {
                coreach[q] = true;
            }
        }
        if before == coreach {
            break;
        }
    }
    let keep: Vec<bool> = (0..n).map(|q| reach[q] && coreach[q]).collect();
    // Kahn's algorithm on the trimmed graph
    let mut indeg = vec![0usize; n];
    for q in (0..n).filter(|&q| keep[q]) {
        for r in succ(q).filter(|&r| keep[r]) {
            indeg[r] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&q| keep[q] && indeg[q] == 0).collect();
    let mut removed = 0;
    while let Some(q) = ready.pop() {
        removed += 1;
        for r in succ(q).filter(|&r| keep[r]) {
            indeg[r] -= 1;
            if indeg[r] == 0 {
                ready.push(r);
            }
        }
    }
    removed == keep.iter().filter(|&&b| b).count()
}
