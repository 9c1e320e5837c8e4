use std::fmt;

use super::{validate, ReservedSymbols};
use crate::error::SyntaxErrors;

/// One entry of a flat segment list: either an operand sub-expression or an
/// operator marker.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Segment {
    /// A sub-expression. Parenthesized groups lose their outer parentheses.
    Expr(String),
    Union,
    Concat,
    Star,
}

/// A top-level split of an expression into operands and explicit operators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SegmentList(pub Vec<Segment>);

impl SegmentList {
    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The segments as strings, operators spelled with their reserved characters.
    pub fn to_strings(&self, reserved: &ReservedSymbols) -> Vec<String> {
        self.0
            .iter()
            .map(|s| match s {
                Segment::Expr(e) => e.clone(),
                Segment::Union => reserved.union.to_string(),
                Segment::Concat => reserved.concat.to_string(),
                Segment::Star => reserved.star.to_string(),
            })
            .collect()
    }

    /// Rebuilds an expression string; multi-character operands are wrapped in
    /// parentheses and concatenation is written explicitly.
    pub fn to_regex(&self, reserved: &ReservedSymbols) -> String {
        let mut out = String::new();
        for s in &self.0 {
            match s {
                Segment::Expr(e) if e.chars().count() > 1 => {
                    out.push(reserved.open_paren);
                    out.push_str(e);
                    out.push(reserved.close_paren);
                }
                Segment::Expr(e) => out.push_str(e),
                Segment::Union => out.push(reserved.union),
                Segment::Concat => out.push(reserved.concat),
                Segment::Star => out.push(reserved.star),
            }
        }
        out
    }
}

impl fmt::Display for SegmentList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.to_strings(&ReservedSymbols::default());
        f.write_str("[")?;
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p:?}")?;
        }
        f.write_str("]")
    }
}

/// Splits an expression into its top-level segment list.
///
/// Characters are scanned left to right while tracking parenthesis depth.
/// A group at depth zero becomes one operand segment (without its outer
/// parentheses); any other character at depth zero becomes its own segment.
/// A concatenation marker is inserted after an operand or star whenever the
/// next character starts a new operand.
pub fn parse_segments(regex: &str, reserved: &ReservedSymbols) -> Result<SegmentList, SyntaxErrors> {
    validate(regex, reserved)?;
    Ok(split_valid(regex, reserved))
}

pub(crate) fn split_valid(regex: &str, reserved: &ReservedSymbols) -> SegmentList {
    let chars: Vec<char> = regex.chars().collect();
    let len = chars.len();
    let starts_operand = |i: usize| {
        i < len
            && ![reserved.star, reserved.union, reserved.concat, reserved.close_paren]
                .contains(&chars[i])
    };

    let mut seg = Vec::new();
    let mut depth = 0usize;
    let mut temp = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c == reserved.open_paren {
            depth += 1;
            if depth == 1 {
                continue;
            }
        } else if c == reserved.close_paren {
            depth -= 1;
            if depth == 0 {
                seg.push(Segment::Expr(std::mem::take(&mut temp)));
                if starts_operand(i + 1) {
                    seg.push(Segment::Concat);
                }
                continue;
            }
        }
        if depth > 0 {
            temp.push(c);
            continue;
        }
        // depth zero: an operator or a single symbol
        let binary = c == reserved.union || c == reserved.concat;
        seg.push(if c == reserved.union {
            Segment::Union
        } else if c == reserved.concat {
            Segment::Concat
        } else if c == reserved.star {
            Segment::Star
        } else {
            Segment::Expr(c.to_string())
        });
        if !binary && starts_operand(i + 1) {
            seg.push(Segment::Concat);
        }
    }
    SegmentList(seg)
}
