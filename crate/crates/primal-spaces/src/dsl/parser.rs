//! Recursive-descent parser for the identity language.
//!
//! Grammar (terminals quoted; `IDENT` is a non-reserved name):
//!
//! ```text
//! formula  := ("forall" binders ":")? body
//! binders  := binder ("," binder)*
//! binder   := IDENT (":" sort)?          sort := "set" | "open" | "closed" | "openstar"
//! body     := atoms ("=>" atoms)?
//! atoms    := atom ("and" atom)*
//! atom     := "suitable" | "ccc"
//!           | "inP" "(" expr ")" | "notinP" "(" expr ")"
//!           | expr ("=" | "<=") expr
//! expr     := union
//! union    := difference ("|" difference)*
//! difference := intersection ("-" intersection)*
//! intersection := unary ("&" unary)*
//! unary    := "~" unary | primary
//! primary  := FUNC "(" expr ")" | IDENT | "X" | "0" | "(" expr ")"
//! ```
//!
//! `FUNC` is one of `d`, `psi`, `cl`, `int`, `cld`, `intd`. Binding
//! strength: `~` and application (4) over `&` (3) over `-` (2) over
//! `|` (1); binary operators associate to the left. Sort names are
//! recognized contextually after a binder colon; a colon followed by
//! anything else ends the binder list.

use std::collections::HashSet;

use super::ast::{Atom, Binder, Formula, Rel, SetExpr, Sort};
use super::lexer::{lex, Token, TokenKind};
use super::DslError;

/// Parse a complete formula. Every variable in the body must be bound
/// by a `forall` binder.
pub fn parse(text: &str) -> Result<Formula, DslError> {
    let mut parser = Parser::new(text)?;
    let formula = parser.formula()?;
    parser.expect_eof()?;
    Ok(formula)
}

/// Parse a bare set expression, as used by expression evaluation.
/// Variables are left free; the caller supplies bindings at evaluation
/// time.
pub fn parse_expr(text: &str) -> Result<SetExpr, DslError> {
    let mut parser = Parser::new(text)?;
    let expr = parser.expr()?;
    parser.expect_eof()?;
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    /// Byte length of the source, used as the offset of "end of input".
    end: usize,
    /// `Some(names)` once binders are known: variables must come from
    /// this set. `None` while parsing bare expressions (free variables
    /// allowed).
    bound: Option<HashSet<String>>,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, DslError> {
        Ok(Parser {
            tokens: lex(text)?,
            pos: 0,
            end: text.len(),
            bound: None,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn peek_kind_at(&self, ahead: usize) -> Option<&TokenKind> {
        self.tokens.get(self.pos + ahead).map(|t| &t.kind)
    }

    /// Error at the current position: `expected {expected}, found …`.
    fn err_expected(&self, expected: &str) -> DslError {
        match self.peek() {
            Some(token) => DslError::Parse {
                expected: expected.to_string(),
                found: token.kind.describe(),
                offset: token.offset,
            },
            None => DslError::Parse {
                expected: expected.to_string(),
                found: "end of input".to_string(),
                offset: self.end,
            },
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<(), DslError> {
        if self.peek_kind() == Some(&kind) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err_expected(expected))
        }
    }

    fn expect_eof(&self) -> Result<(), DslError> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.err_expected("end of input"))
        }
    }

    fn formula(&mut self) -> Result<Formula, DslError> {
        let binders = if self.peek_kind() == Some(&TokenKind::Forall) {
            self.pos += 1;
            self.binders()?
        } else {
            Vec::new()
        };
        self.bound = Some(binders.iter().map(|b| b.name.clone()).collect());
        let first = self.atoms()?;
        if self.peek_kind() == Some(&TokenKind::Implies) {
            self.pos += 1;
            let conclusion = self.atoms()?;
            Ok(Formula { binders, hypothesis: first, conclusion })
        } else {
            Ok(Formula { binders, hypothesis: Vec::new(), conclusion: first })
        }
    }

    /// Parses `binder ("," binder)* ":"` — the terminating colon is
    /// consumed. A colon after a binder name starts a sort annotation
    /// only when a sort name can follow; otherwise it terminates the
    /// binder list.
    fn binders(&mut self) -> Result<Vec<Binder>, DslError> {
        let mut binders: Vec<Binder> = Vec::new();
        loop {
            let (name, name_offset) = match self.peek() {
                Some(Token { kind: TokenKind::Ident(name), offset }) => {
                    (name.clone(), *offset)
                }
                _ => return Err(self.err_expected("a variable name")),
            };
            if Sort::from_name(&name).is_some() {
                return Err(DslError::Parse {
                    expected: "a variable name (sort names are reserved)".to_string(),
                    found: format!("\"{name}\""),
                    offset: name_offset,
                });
            }
            if binders.iter().any(|b| b.name == name) {
                return Err(DslError::DuplicateVar { name, offset: name_offset });
            }
            self.pos += 1;
            let mut sort = Sort::Set;
            if self.peek_kind() == Some(&TokenKind::Colon) {
                if let Some(TokenKind::Ident(word)) = self.peek_kind_at(1) {
                    if let Some(parsed) = Sort::from_name(word) {
                        self.pos += 2;
                        sort = parsed;
                    } else if matches!(
                        self.peek_kind_at(2),
                        Some(TokenKind::Comma) | Some(TokenKind::Colon)
                    ) {
                        // Shaped like a sort annotation but the name is
                        // not a sort: report it rather than mis-parsing
                        // the body.
                        let token = self.tokens[self.pos + 1].clone();
                        return Err(DslError::UnknownSort {
                            name: word.clone(),
                            offset: token.offset,
                        });
                    }
                    // Otherwise the colon terminates the binder list and
                    // the identifier begins the body.
                }
            }
            binders.push(Binder { name, sort });
            match self.peek_kind() {
                Some(TokenKind::Comma) => {
                    self.pos += 1;
                }
                Some(TokenKind::Colon) => {
                    self.pos += 1;
                    return Ok(binders);
                }
                _ => return Err(self.err_expected("',' or ':'")),
            }
        }
    }

    fn atoms(&mut self) -> Result<Vec<Atom>, DslError> {
        let mut atoms = vec![self.atom()?];
        while self.peek_kind() == Some(&TokenKind::And) {
            self.pos += 1;
            atoms.push(self.atom()?);
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Atom, DslError> {
        match self.peek_kind() {
            Some(TokenKind::Suitable) => {
                self.pos += 1;
                Ok(Atom::Suitable)
            }
            Some(TokenKind::Ccc) => {
                self.pos += 1;
                Ok(Atom::Ccc)
            }
            Some(TokenKind::InP) => {
                self.pos += 1;
                self.expect(TokenKind::LParen, "'('")?;
                let expr = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(Atom::InP(expr))
            }
            Some(TokenKind::NotInP) => {
                self.pos += 1;
                self.expect(TokenKind::LParen, "'('")?;
                let expr = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(Atom::NotInP(expr))
            }
            _ => {
                let left = self.expr()?;
                let rel = match self.peek_kind() {
                    Some(TokenKind::Eq) => Rel::Eq,
                    Some(TokenKind::SubsetEq) => Rel::Subset,
                    _ => return Err(self.err_expected("'=' or '<='")),
                };
                self.pos += 1;
                let right = self.expr()?;
                Ok(Atom::Relation(left, rel, right))
            }
        }
    }

    fn expr(&mut self) -> Result<SetExpr, DslError> {
        self.union()
    }

    fn union(&mut self) -> Result<SetExpr, DslError> {
        let mut expr = self.difference()?;
        while self.peek_kind() == Some(&TokenKind::Pipe) {
            self.pos += 1;
            let rhs = self.difference()?;
            expr = SetExpr::Union(Box::new(expr), Box::new(rhs));
        }
        Ok(expr)
    }

    fn difference(&mut self) -> Result<SetExpr, DslError> {
        let mut expr = self.intersection()?;
        while self.peek_kind() == Some(&TokenKind::Minus) {
            self.pos += 1;
            let rhs = self.intersection()?;
            expr = SetExpr::Difference(Box::new(expr), Box::new(rhs));
        }
        Ok(expr)
    }

    fn intersection(&mut self) -> Result<SetExpr, DslError> {
        let mut expr = self.unary()?;
        while self.peek_kind() == Some(&TokenKind::Amp) {
            self.pos += 1;
            let rhs = self.unary()?;
            expr = SetExpr::Intersection(Box::new(expr), Box::new(rhs));
        }
        Ok(expr)
    }

    fn unary(&mut self) -> Result<SetExpr, DslError> {
        if self.peek_kind() == Some(&TokenKind::Tilde) {
            self.pos += 1;
            let inner = self.unary()?;
            Ok(SetExpr::Complement(Box::new(inner)))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<SetExpr, DslError> {
        let token = match self.peek() {
            Some(token) => token.clone(),
            None => return Err(self.err_expected("an expression")),
        };
        match token.kind {
            TokenKind::Func(func) => {
                self.pos += 1;
                self.expect(TokenKind::LParen, "'('")?;
                let arg = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(SetExpr::App(func, Box::new(arg)))
            }
            TokenKind::Ident(name) => {
                // A name directly followed by '(' was meant as an
                // operator; only the six named operators exist.
                if self.peek_kind_at(1) == Some(&TokenKind::LParen) {
                    return Err(DslError::UnknownFunction { name, offset: token.offset });
                }
                if let Some(bound) = &self.bound {
                    if !bound.contains(&name) {
                        return Err(DslError::UnboundVar { name, offset: token.offset });
                    }
                }
                self.pos += 1;
                Ok(SetExpr::Var(name))
            }
            TokenKind::FullSet => {
                self.pos += 1;
                Ok(SetExpr::Full)
            }
            TokenKind::EmptySet => {
                self.pos += 1;
                Ok(SetExpr::Empty)
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err_expected("an expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::ast::Func;
    use super::*;

    fn var(name: &str) -> SetExpr {
        SetExpr::Var(name.to_string())
    }

    fn app(func: Func, arg: SetExpr) -> SetExpr {
        SetExpr::App(func, Box::new(arg))
    }

    #[test]
    fn parses_union_additivity() {
        let formula = parse("forall A, B: d(A | B) = d(A) | d(B)").unwrap();
        assert_eq!(
            formula.binders,
            vec![
                Binder { name: "A".into(), sort: Sort::Set },
                Binder { name: "B".into(), sort: Sort::Set },
            ]
        );
        assert!(formula.hypothesis.is_empty());
        assert_eq!(
            formula.conclusion,
            vec![Atom::Relation(
                app(Func::Diamond, SetExpr::Union(Box::new(var("A")), Box::new(var("B")))),
                Rel::Eq,
                SetExpr::Union(
                    Box::new(app(Func::Diamond, var("A"))),
                    Box::new(app(Func::Diamond, var("B"))),
                ),
            )]
        );
    }

    #[test]
    fn parses_sorted_binders() {
        let formula = parse("forall U:open: U <= psi(U)").unwrap();
        assert_eq!(formula.binders, vec![Binder { name: "U".into(), sort: Sort::Open }]);
        let formula = parse("forall A:closed, B:openstar, C:set, D: 0 <= A & B & C & D").unwrap();
        assert_eq!(
            formula.binders.iter().map(|b| b.sort).collect::<Vec<_>>(),
            vec![Sort::Closed, Sort::OpenStar, Sort::Set, Sort::Set]
        );
    }

    #[test]
    fn parses_hypothesis_and_conjunctions() {
        let formula = parse("forall A, B: notinP(~B) => d(A | B) = d(A) and d(A) = d(A - B)").unwrap();
        assert_eq!(formula.hypothesis, vec![Atom::NotInP(SetExpr::Complement(Box::new(var("B"))))]);
        assert_eq!(formula.conclusion.len(), 2);

        let formula = parse("suitable and ccc => inP(~X)").unwrap();
        assert_eq!(formula.hypothesis, vec![Atom::Suitable, Atom::Ccc]);
        assert_eq!(formula.conclusion, vec![Atom::InP(SetExpr::Complement(Box::new(SetExpr::Full)))]);
        assert!(formula.binders.is_empty());
    }

    #[test]
    fn precedence_and_associativity() {
        // `&` over `-` over `|`, all left-associative.
        let formula = parse("forall A, B, C, D: A | B & C - D = A").unwrap();
        let Atom::Relation(lhs, Rel::Eq, _) = &formula.conclusion[0] else {
            panic!("expected a relation");
        };
        assert_eq!(
            *lhs,
            SetExpr::Union(
                Box::new(var("A")),
                Box::new(SetExpr::Difference(
                    Box::new(SetExpr::Intersection(Box::new(var("B")), Box::new(var("C")))),
                    Box::new(var("D")),
                )),
            )
        );

        let formula = parse("forall A, B, C: A - B - C = 0").unwrap();
        let Atom::Relation(lhs, _, _) = &formula.conclusion[0] else { panic!() };
        assert_eq!(
            *lhs,
            SetExpr::Difference(
                Box::new(SetExpr::Difference(Box::new(var("A")), Box::new(var("B")))),
                Box::new(var("C")),
            )
        );

        let formula = parse("forall A, B: ~A & B = 0").unwrap();
        let Atom::Relation(lhs, _, _) = &formula.conclusion[0] else { panic!() };
        assert_eq!(
            *lhs,
            SetExpr::Intersection(
                Box::new(SetExpr::Complement(Box::new(var("A")))),
                Box::new(var("B")),
            )
        );
    }

    #[test]
    fn parentheses_override_precedence() {
        let expr = parse_expr("(A | B) & C").unwrap();
        assert_eq!(
            expr,
            SetExpr::Intersection(
                Box::new(SetExpr::Union(Box::new(var("A")), Box::new(var("B")))),
                Box::new(var("C")),
            )
        );
    }

    #[test]
    fn missing_close_paren_reports_offset() {
        let err = parse_expr("d(A").unwrap_err();
        assert!(err.to_string().contains("expected ')' at offset 3"), "got: {err}");
        // In formula mode the binding check fires first: `A` is not
        // bound by any `forall`, and that is reported before the
        // missing parenthesis is reached.
        assert_eq!(
            parse("d(A").unwrap_err(),
            DslError::UnboundVar { name: "A".to_string(), offset: 2 }
        );
    }

    #[test]
    fn rejects_unbound_variables_in_formulas() {
        assert_eq!(
            parse("forall A: d(A) <= B").unwrap_err(),
            DslError::UnboundVar { name: "B".into(), offset: 18 }
        );
        // Without a quantifier nothing is bound.
        assert_eq!(
            parse("d(A) = 0").unwrap_err(),
            DslError::UnboundVar { name: "A".into(), offset: 2 }
        );
        // Bare expressions leave variables free.
        assert_eq!(parse_expr("d(A)").unwrap(), app(Func::Diamond, var("A")));
    }

    #[test]
    fn rejects_duplicate_binders() {
        assert_eq!(
            parse("forall A, A: d(A) = 0").unwrap_err(),
            DslError::DuplicateVar { name: "A".into(), offset: 10 }
        );
    }

    #[test]
    fn rejects_unknown_functions_and_sorts() {
        assert_eq!(
            parse_expr("foo(A)").unwrap_err(),
            DslError::UnknownFunction { name: "foo".into(), offset: 0 }
        );
        assert_eq!(
            parse("forall A:opne: d(A) = 0").unwrap_err(),
            DslError::UnknownSort { name: "opne".into(), offset: 9 }
        );
        assert_eq!(
            parse("forall open: d(open) = 0").unwrap_err().to_string(),
            "expected a variable name (sort names are reserved) at offset 7, found \"open\""
        );
    }

    #[test]
    fn relation_is_required_and_not_chainable() {
        let err = parse("forall A: d(A)").unwrap_err();
        assert!(err.to_string().contains("expected '=' or '<='"), "got: {err}");
        let err = parse("forall A: A = A = A").unwrap_err();
        assert!(err.to_string().contains("expected end of input"), "got: {err}");
        let err = parse("forall A: A = A => A = A => A = A").unwrap_err();
        assert!(err.to_string().contains("expected end of input"), "got: {err}");
    }

    #[test]
    fn unicode_formula_parses_like_ascii() {
        assert_eq!(
            parse("forall A: Ψ(A) = X - ⋄(X - A)").unwrap(),
            parse("forall A: psi(A) = X - d(X - A)").unwrap()
        );
        assert_eq!(
            parse("forall A, B: d(A ∩ B) ⊆ d(A) ∩ d(B)").unwrap(),
            parse("forall A, B: d(A & B) <= d(A) & d(B)").unwrap()
        );
    }

    #[test]
    fn empty_input_is_an_error() {
        let err = parse("").unwrap_err();
        assert!(err.to_string().contains("expected an expression at offset 0"), "got: {err}");
    }
}
