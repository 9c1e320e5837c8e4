//! The restricted regular-expression syntax.
//!
//! Expressions are built from single-character symbols and a small set of
//! reserved characters:
//!
//! | role            | default |
//! |-----------------|---------|
//! | union           | `U`     |
//! | concatenation   | `.`     |
//! | star            | `*`     |
//! | empty language  | `\`     |
//! | empty string    | `e`     |
//! | grouping        | `(` `)` |
//!
//! Concatenation is usually implicit (`ab`), but an explicit `.` is accepted
//! and means the same thing. Precedence is star, then concatenation, then
//! union. Every other non-whitespace character is an alphabet symbol.

mod ast;
mod oracle;
pub(crate) mod segments;

pub use ast::{parse_ast, render, RegexAst};
pub use oracle::oracle_match;
pub use segments::{parse_segments, Segment, SegmentList};

use serde::Serialize;

use crate::error::{Error, Result, SyntaxError, SyntaxErrorKind, SyntaxErrors};

/// The characters that carry operator meaning in an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ReservedSymbols {
    pub union: char,
    pub concat: char,
    pub star: char,
    pub empty_language: char,
    pub epsilon: char,
    pub open_paren: char,
    pub close_paren: char,
}

impl Default for ReservedSymbols {
    fn default() -> Self {
        ReservedSymbols {
            union: 'U',
            concat: '.',
            star: '*',
            empty_language: '\\',
            epsilon: 'e',
            open_paren: '(',
            close_paren: ')',
        }
    }
}

impl ReservedSymbols {
    fn all(&self) -> [char; 7] {
        [
            self.union,
            self.concat,
            self.star,
            self.empty_language,
            self.epsilon,
            self.open_paren,
            self.close_paren,
        ]
    }

    /// Fails if two roles share a character.
    pub fn check(&self) -> Result<()> {
        let all = self.all();
        for (i, c) in all.iter().enumerate() {
            if all[i + 1..].contains(c) {
                return Err(Error::DuplicateReserved(*c));
            }
        }
        Ok(())
    }

    pub fn is_reserved(&self, c: char) -> bool {
        self.all().contains(&c)
    }

    /// True for characters that can appear as alphabet symbols.
    pub fn is_symbol(&self, c: char) -> bool {
        !self.is_reserved(c) && !c.is_whitespace() && !c.is_control()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Prev {
    Start,
    Open,
    Operand,
    Binary(usize),
}

/// Checks an expression and reports every problem found, ordered by position.
///
/// An expression is well formed when its parentheses balance, no group is
/// empty, and every operator has its operands: a star needs something on its
/// left, union and explicit concatenation need something on both sides.
pub fn validate(regex: &str, reserved: &ReservedSymbols) -> Result<(), SyntaxErrors> {
    let chars: Vec<char> = regex.chars().collect();
    let mut errors = Vec::new();
    let mut push = |position, kind| errors.push(SyntaxError { position, kind });

    if chars.is_empty() {
        push(0, SyntaxErrorKind::EmptyExpression);
        return Err(SyntaxErrors(errors));
    }

    let mut opens: Vec<usize> = Vec::new();
    let mut prev = Prev::Start;
    for (i, &c) in chars.iter().enumerate() {
        if c == reserved.open_paren {
            opens.push(i);
            prev = Prev::Open;
        } else if c == reserved.close_paren {
            match opens.pop() {
                None => push(i, SyntaxErrorKind::UnbalancedClose),
                Some(open) => match prev {
                    Prev::Open => push(open, SyntaxErrorKind::EmptyGroup),
                    Prev::Binary(op) => push(op, SyntaxErrorKind::MissingOperand),
                    _ => {}
                },
            }
            prev = Prev::Operand;
        } else if c == reserved.star {
            if prev != Prev::Operand {
                push(i, SyntaxErrorKind::MissingOperand);
            }
            prev = Prev::Operand;
        } else if c == reserved.union || c == reserved.concat {
            if prev != Prev::Operand {
                push(i, SyntaxErrorKind::MissingOperand);
            }
            prev = Prev::Binary(i);
        } else if c == reserved.epsilon || c == reserved.empty_language || reserved.is_symbol(c) {
            prev = Prev::Operand;
        } else {
            push(i, SyntaxErrorKind::InvalidCharacter);
            prev = Prev::Operand;
        }
    }
    if let Prev::Binary(op) = prev {
        push(op, SyntaxErrorKind::MissingOperand);
    }
    for open in opens {
        push(open, SyntaxErrorKind::UnbalancedOpen);
    }

    if errors.is_empty() {
        Ok(())
    } else {
        errors.sort_by_key(|e| e.position);
        errors.dedup();
        Err(SyntaxErrors(errors))
    }
}
