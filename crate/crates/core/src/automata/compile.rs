use super::nfa::{Label, Nfa, NfaBuilder, StateId};
use crate::error::SyntaxErrors;
use crate::syntax::segments::split_valid;
use crate::syntax::{validate, ReservedSymbols, Segment};

#[derive(Debug, Clone, Copy)]
struct Fragment {
    start: StateId,
    // None only for fragments denoting the empty language
    accept: Option<StateId>,
}

enum Item {
    Frag(Fragment),
    Union,
    Concat,
    Star,
}

/// Compiles an expression into an NFA.
///
/// Single-character expressions are the base cases: the empty-language
/// symbol gives a lone start state with no accept state, epsilon gives one
/// state that is both start and accept, and an alphabet symbol gives two
/// states joined by one labeled transition. Anything longer is split into
/// its segment list; operand segments are compiled recursively, then the
/// operators are applied in precedence order: every star, then every
/// concatenation, then every union.
pub fn compile(regex: &str, reserved: &ReservedSymbols) -> Result<Nfa, SyntaxErrors> {
    validate(regex, reserved)?;
    let mut b = NfaBuilder::new(reserved.epsilon);
    let frag = build(regex, reserved, &mut b);
    if let Some(f) = frag.accept {
        b.add_accept(f);
    }
    Ok(b.build(frag.start))
}

fn build(expr: &str, r: &ReservedSymbols, b: &mut NfaBuilder) -> Fragment {
    let mut chars = expr.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        return base_case(c, r, b);
    }

    let items: Vec<Item> = split_valid(expr, r)
        .iter()
        .map(|s| match s {
            Segment::Expr(e) => Item::Frag(build(e, r, b)),
            Segment::Union => Item::Union,
            Segment::Concat => Item::Concat,
            Segment::Star => Item::Star,
        })
        .collect();

    let mut starred = Vec::with_capacity(items.len());
    for item in items {
        match item {
            Item::Star => match starred.pop() {
                Some(Item::Frag(f)) => starred.push(Item::Frag(star(f, b))),
                _ => unreachable!("validated: star follows an operand"),
            },
            other => starred.push(other),
        }
    }

    let mut joined: Vec<Item> = Vec::with_capacity(starred.len());
    let mut pending_concat = false;
    for item in starred {
        match item {
            Item::Concat => pending_concat = true,
            Item::Frag(f) if pending_concat => {
                pending_concat = false;
                match joined.pop() {
                    Some(Item::Frag(left)) => joined.push(Item::Frag(concat(left, f, b))),
                    _ => unreachable!("validated: concatenation has a left operand"),
                }
            }
            other => joined.push(other),
        }
    }

    let mut result: Option<Fragment> = None;
    for item in joined {
        if let Item::Frag(f) = item {
            result = Some(match result {
                None => f,
                Some(left) => union(left, f, b),
            });
        }
    }
    result.expect("validated expression has at least one operand")
}

fn base_case(c: char, r: &ReservedSymbols, b: &mut NfaBuilder) -> Fragment {
    let q = b.add_state();
    if c == r.empty_language {
        Fragment { start: q, accept: None }
    } else if c == r.epsilon {
        Fragment { start: q, accept: Some(q) }
    } else {
        let f = b.add_state();
        b.add_transition(q, Label::Symbol(c), f);
        Fragment { start: q, accept: Some(f) }
    }
}

fn star(inner: Fragment, b: &mut NfaBuilder) -> Fragment {
    let start = b.add_state();
    let accept = b.add_state();
    b.add_transition(start, Label::Epsilon, inner.start);
    b.add_transition(start, Label::Epsilon, accept);
    if let Some(f) = inner.accept {
        b.add_transition(f, Label::Epsilon, inner.start);
        b.add_transition(f, Label::Epsilon, accept);
    }
    Fragment { start, accept: Some(accept) }
}

fn concat(left: Fragment, right: Fragment, b: &mut NfaBuilder) -> Fragment {
    if let Some(f) = left.accept {
        b.add_transition(f, Label::Epsilon, right.start);
    }
    Fragment { start: left.start, accept: right.accept }
}

fn union(left: Fragment, right: Fragment, b: &mut NfaBuilder) -> Fragment {
    let start = b.add_state();
    let accept = b.add_state();
    for branch in [left, right] {
        b.add_transition(start, Label::Epsilon, branch.start);
        if let Some(f) = branch.accept {
            b.add_transition(f, Label::Epsilon, accept);
        }
    }
    Fragment { start, accept: Some(accept) }
}
