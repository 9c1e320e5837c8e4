use super::{validate, ReservedSymbols};
use crate::error::SyntaxErrors;

/// Syntax tree of a well-formed expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    EmptyLanguage,
    Epsilon,
    Symbol(char),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn union(l: RegexAst, r: RegexAst) -> Self {
        RegexAst::Union(Box::new(l), Box::new(r))
    }

    pub fn concat(l: RegexAst, r: RegexAst) -> Self {
        RegexAst::Concat(Box::new(l), Box::new(r))
    }

    pub fn star(c: RegexAst) -> Self {
        RegexAst::Star(Box::new(c))
    }

    pub fn depth(&self) -> usize {
        match self {
            RegexAst::EmptyLanguage | RegexAst::Epsilon | RegexAst::Symbol(_) => 1,
            RegexAst::Union(l, r) | RegexAst::Concat(l, r) => 1 + l.depth().max(r.depth()),
            RegexAst::Star(c) => 1 + c.depth(),
        }
    }
}

/// Parses an expression into a tree. Union and concatenation associate to
/// the left.
pub fn parse_ast(regex: &str, reserved: &ReservedSymbols) -> Result<RegexAst, SyntaxErrors> {
    validate(regex, reserved)?;
    let chars: Vec<char> = regex.chars().collect();
    let mut parser = Parser { chars: &chars, pos: 0, reserved };
    let ast = parser.union();
    debug_assert_eq!(parser.pos, chars.len());
    Ok(ast)
}

// Only ever runs on validated input, so it never has to report errors.
struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    reserved: &'a ReservedSymbols,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn union(&mut self) -> RegexAst {
        let mut left = self.concat();
        while self.peek() == Some(self.reserved.union) {
            self.pos += 1;
            let right = self.concat();
            left = RegexAst::union(left, right);
        }
        left
    }

    fn concat(&mut self) -> RegexAst {
        let mut left = self.postfix();
        loop {
            match self.peek() {
                Some(c) if c == self.reserved.concat => {
                    self.pos += 1;
                }
                Some(c) if c == self.reserved.union || c == self.reserved.close_paren => break,
                None => break,
                Some(_) => {}
            }
            let right = self.postfix();
            left = RegexAst::concat(left, right);
        }
        left
    }

    fn postfix(&mut self) -> RegexAst {
        let mut node = self.atom();
        while self.peek() == Some(self.reserved.star) {
            self.pos += 1;
            node = RegexAst::star(node);
        }
        node
    }

    fn atom(&mut self) -> RegexAst {
        let c = self.chars[self.pos];
        self.pos += 1;
        let r = self.reserved;
        if c == r.open_paren {
            let inner = self.union();
            self.pos += 1;
            inner
        } else if c == r.epsilon {
            RegexAst::Epsilon
        } else if c == r.empty_language {
            RegexAst::EmptyLanguage
        } else {
            RegexAst::Symbol(c)
        }
    }
}

/// Writes a tree back out with the fewest parentheses that still parse to
/// the same tree.
pub fn render(ast: &RegexAst, reserved: &ReservedSymbols) -> String {
    let mut out = String::new();
    render_into(ast, 0, reserved, &mut out);
    out
}

// Binding strength: 0 union, 1 concat, 2 star operand.
fn render_into(ast: &RegexAst, ctx: u8, r: &ReservedSymbols, out: &mut String) {
    let wrap = |out: &mut String, prec: u8, body: &dyn Fn(&mut String)| {
        if ctx > prec {
            out.push(r.open_paren);
            body(out);
            out.push(r.close_paren);
        } else {
            body(out);
        }
    };
    match ast {
        RegexAst::EmptyLanguage => out.push(r.empty_language),
        RegexAst::Epsilon => out.push(r.epsilon),
        RegexAst::Symbol(c) => out.push(*c),
        RegexAst::Union(a, b) => wrap(out, 0, &|out| {
            render_into(a, 0, r, out);
            out.push(r.union);
            render_into(b, 1, r, out);
        }),
        RegexAst::Concat(a, b) => wrap(out, 1, &|out| {
            render_into(a, 1, r, out);
            render_into(b, 2, r, out);
        }),
        RegexAst::Star(a) => wrap(out, 2, &|out| {
            render_into(a, 3, r, out);
            out.push(r.star);
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RegexAst::*;

    fn ast(s: &str) -> RegexAst {
        parse_ast(s, &ReservedSymbols::default()).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(ast("e"), Epsilon);
        assert_eq!(ast("\\"), EmptyLanguage);
        assert_eq!(ast("0"), Symbol('0'));
    }

    #[test]
    fn precedence() {
        assert_eq!(
            ast("aUbc"),
            RegexAst::union(Symbol('a'), RegexAst::concat(Symbol('b'), Symbol('c')))
        );
        assert_eq!(
            ast("(aUb)c"),
            RegexAst::concat(RegexAst::union(Symbol('a'), Symbol('b')), Symbol('c'))
        );
        assert_eq!(ast("ab*"), RegexAst::concat(Symbol('a'), RegexAst::star(Symbol('b'))));
        assert_eq!(ast("a.b"), ast("ab"));
    }

    #[test]
    fn render_minimal_parens() {
        let r = ReservedSymbols::default();
        for s in ["aUbc", "(aUb)c", "a(bc)", "aU(bUc)", "(ab)*", "(a*)*", "e*\\", "(1U0)*101(1U0)*"] {
            assert_eq!(render(&ast(s), &r), s);
        }
    }
}
