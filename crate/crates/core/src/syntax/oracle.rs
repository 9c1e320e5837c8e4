//! Brute-force matcher over the syntax tree.
//!
//! For every node it computes which substrings `w[i..j]` the node matches,
//! bottom-up, by trying every split point. It shares no code with the
//! automaton pipeline, which lets tests use it as an independent reference.

use super::RegexAst;

struct Spans {
    n: usize,
    cells: Vec<bool>,
}

impl Spans {
    fn empty(n: usize) -> Self {
        Spans { n, cells: vec![false; (n + 1) * (n + 1)] }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * (self.n + 1) + j]
    }

    fn set(&mut self, i: usize, j: usize) {
        self.cells[i * (self.n + 1) + j] = true;
    }
}

fn spans(ast: &RegexAst, w: &[char]) -> Spans {
    let n = w.len();
    let mut out = Spans::empty(n);
    match ast {
        RegexAst::EmptyLanguage => {}
        RegexAst::Epsilon => (0..=n).for_each(|i| out.set(i, i)),
        RegexAst::Symbol(c) => {
            for (i, _) in w.iter().enumerate().filter(|(_, d)| *d == c) {
                out.set(i, i + 1);
            }
        }
        RegexAst::Union(a, b) => {
            let (a, b) = (spans(a, w), spans(b, w));
            for (cell, (x, y)) in out.cells.iter_mut().zip(a.cells.iter().zip(&b.cells)) {
                *cell = *x || *y;
            }
        }
        RegexAst::Concat(a, b) => {
            let (a, b) = (spans(a, w), spans(b, w));
            for i in 0..=n {
                for j in i..=n {
                    if (i..=j).any(|k| a.get(i, k) && b.get(k, j)) {
                        out.set(i, j);
                    }
                }
            }
        }
        RegexAst::Star(a) => {
            let a = spans(a, w);
            // w[i..j] is in a* iff empty, or some non-empty a-piece w[i..k]
            // is followed by a* on w[k..j]. Fill by growing length.
            for i in 0..=n {
                out.set(i, i);
            }
            for len in 1..=n {
                for i in 0..=n - len {
                    let j = i + len;
                    if (i + 1..=j).any(|k| a.get(i, k) && out.get(k, j)) {
                        out.set(i, j);
                    }
                }
            }
        }
    }
    out
}

/// True iff `w` belongs to the language denoted by `ast`.
pub fn oracle_match(ast: &RegexAst, w: &str) -> bool {
    let chars: Vec<char> = w.chars().collect();
    spans(ast, &chars).get(0, chars.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_ast, ReservedSymbols};

    fn m(regex: &str, w: &str) -> bool {
        oracle_match(&parse_ast(regex, &ReservedSymbols::default()).unwrap(), w)
    }

    #[test]
    fn base_cases() {
        assert!(m("e", ""));
        assert!(!m("e", "e"));
        assert!(!m("\\", ""));
        assert!(m("0", "0"));
        assert!(!m("0", "00"));
    }

    #[test]
    fn membership_example() {
        assert!(m("(1U0)*101(1U0)*", "1011"));
        assert!(!m("(1U0)*101(1U0)*", "1001"));
        assert!(m("10*1", "11"));
        assert!(m("10*1", "1001"));
        assert!(!m("10*1", "10"));
    }

    #[test]
    fn star_of_empty_language_is_epsilon() {
        assert!(m("\\*", ""));
        assert!(!m("\\*", "a"));
    }
}
