use std::fmt::Write;

use super::nfa::{Label, Nfa};

fn escape(c: char) -> String {
    match c {
        '"' => "\\\"".to_string(),
        '\\' => "\\\\".to_string(),
        c => c.to_string(),
    }
}

/// Renders the automaton as a Graphviz digraph.
///
/// One node statement per state in id order, then one edge statement per
/// transition in `(from, label, to)` order, so the output is stable. Accept
/// states are double circles; the start state is drawn bold with a `start`
/// label. Epsilon edges carry the automaton's epsilon character.
pub fn export_graph(nfa: &Nfa) -> String {
    let mut out = String::from("digraph nfa {\n    rankdir=LR;\n");
    for q in nfa.states() {
        let shape = if nfa.is_accepting(q) { "doublecircle" } else { "circle" };
        if q == nfa.start() {
            let _ = writeln!(out, "    q{q} [shape={shape}, penwidth=2, xlabel=\"start\"];");
        } else {
            let _ = writeln!(out, "    q{q} [shape={shape}];");
        }
    }
    for (from, label, targets) in nfa.transitions() {
        let text = match label {
            Label::Epsilon => escape(nfa.epsilon_display()),
            Label::Symbol(c) => escape(c),
        };
        for to in targets {
            let _ = writeln!(out, "    q{from} -> q{to} [label=\"{text}\"];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::syntax::ReservedSymbols;

    fn graph(regex: &str) -> String {
        export_graph(&compile(regex, &ReservedSymbols::default()).unwrap())
    }

    fn count(dot: &str) -> (usize, usize) {
        let nodes = dot.lines().filter(|l| l.contains("[shape=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn epsilon_regex() {
        let dot = graph("e");
        assert_eq!(count(&dot), (1, 0));
        assert!(dot.contains("q0 [shape=doublecircle, penwidth=2, xlabel=\"start\"];"));
    }

    #[test]
    fn single_symbol() {
        let dot = graph("0");
        assert_eq!(
            dot,
            "digraph nfa {\n    rankdir=LR;\n    q0 [shape=circle, penwidth=2, xlabel=\"start\"];\n    q1 [shape=doublecircle];\n    q0 -> q1 [label=\"0\"];\n}\n"
        );
    }

    #[test]
    fn deterministic_output() {
        let n = compile("(1U0)*101(1U0)*", &ReservedSymbols::default()).unwrap();
        assert_eq!(export_graph(&n), export_graph(&n));
        assert!(export_graph(&n).contains("[label=\"e\"]"));
    }

    #[test]
    fn quotes_are_escaped() {
        let dot = graph("\"");
        assert!(dot.contains(r#"[label="\""]"#));
    }
}
