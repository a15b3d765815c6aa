//! A small language for stating set identities over a space.
//!
//! Formulas quantify variables over subsets of the ground set (or over
//! the open, closed, or star-open families), combine them with the
//! set operations `~` `&` `-` `|`, apply the named operators `d`,
//! `psi`, `cl`, `int`, `cld`, `intd`, and relate the results with `=`
//! or `<=`. A `=>` arrow separates an optional hypothesis from the
//! conclusion, and `and` chains conjuncts on either side:
//!
//! ```text
//! forall A, B: notinP(~B) => d(A | B) = d(A) and d(A) = d(A - B)
//! forall U:open: U <= psi(U)
//! forall A: suitable => d(d(A)) = d(A)
//! ```
//!
//! `X` is the ground set, `0` the empty set, `inP(e)`/`notinP(e)` test
//! membership in the primal, and `suitable`/`ccc` are space-level
//! predicates. The Unicode spellings `⋄`, `Ψ`, `∩`, `∪`, `⊆` are
//! accepted for `d`, `psi`, `&`, `|`, `<=`.
//!
//! [`parse`] builds a [`Formula`], [`parse_expr`] a bare [`SetExpr`];
//! [`eval_formula`] and [`eval_set`] run them against an
//! [`OperatorTable`](crate::operators::OperatorTable). Displaying a
//! tree prints a canonical form that parses back to the same tree.

mod ast;
mod eval;
mod format;
mod lexer;
mod parser;

pub use ast::{Atom, Binder, Formula, Func, Rel, SetExpr, Sort};
pub use eval::{eval_formula, eval_set, Verdict};
pub use parser::{parse, parse_expr};

use thiserror::Error;

/// Everything that can go wrong while reading or evaluating formula
/// text. Offsets are byte offsets into the source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("unexpected character {ch:?} at offset {offset}")]
    Lex { ch: char, offset: usize },
    #[error("only the empty-set literal 0 is allowed as a number, found \"{lexeme}\" at offset {offset}")]
    BadNumber { lexeme: String, offset: usize },
    #[error("expected {expected} at offset {offset}, found {found}")]
    Parse { expected: String, found: String, offset: usize },
    #[error("unknown variable \"{name}\" at offset {offset}")]
    UnboundVar { name: String, offset: usize },
    #[error("duplicate variable \"{name}\" at offset {offset}")]
    DuplicateVar { name: String, offset: usize },
    #[error("unknown function \"{name}\" at offset {offset}; the operators are d, psi, cl, int, cld, intd")]
    UnknownFunction { name: String, offset: usize },
    #[error("unknown sort \"{name}\" at offset {offset}; the sorts are set, open, closed, openstar")]
    UnknownSort { name: String, offset: usize },
    #[error("no binding supplied for variable \"{name}\"")]
    MissingBinding { name: String },
}

#[cfg(test)]
mod round_trip {
    use proptest::prelude::*;

    use super::*;

    const VARS: [&str; 3] = ["A", "B", "C"];

    fn arb_func() -> impl Strategy<Value = Func> {
        prop_oneof![
            Just(Func::Diamond),
            Just(Func::Psi),
            Just(Func::Closure),
            Just(Func::Interior),
            Just(Func::DiamondClosure),
            Just(Func::DiamondInterior),
        ]
    }

    fn arb_sort() -> impl Strategy<Value = Sort> {
        prop_oneof![
            Just(Sort::Set),
            Just(Sort::Open),
            Just(Sort::Closed),
            Just(Sort::OpenStar),
        ]
    }

    /// Expressions of depth at most five drawing variables from the
    /// first `var_count` names in `VARS` (possibly none).
    fn arb_expr(var_count: usize) -> impl Strategy<Value = SetExpr> {
        let mut leaves = vec![Just(SetExpr::Full).boxed(), Just(SetExpr::Empty).boxed()];
        if var_count > 0 {
            leaves.push(
                proptest::sample::select(VARS[..var_count].to_vec())
                    .prop_map(|name| SetExpr::Var(name.to_string()))
                    .boxed(),
            );
        }
        proptest::strategy::Union::new(leaves).prop_recursive(4, 48, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| SetExpr::Complement(Box::new(e))),
                (arb_func(), inner.clone()).prop_map(|(f, e)| SetExpr::App(f, Box::new(e))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| SetExpr::Union(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| SetExpr::Difference(Box::new(a), Box::new(b))),
                (inner.clone(), inner)
                    .prop_map(|(a, b)| SetExpr::Intersection(Box::new(a), Box::new(b))),
            ]
        })
    }

    fn arb_atom(var_count: usize) -> impl Strategy<Value = Atom> {
        prop_oneof![
            1 => Just(Atom::Suitable),
            1 => Just(Atom::Ccc),
            2 => arb_expr(var_count).prop_map(Atom::InP),
            2 => arb_expr(var_count).prop_map(Atom::NotInP),
            6 => (arb_expr(var_count), prop_oneof![Just(Rel::Eq), Just(Rel::Subset)], arb_expr(var_count))
                .prop_map(|(l, rel, r)| Atom::Relation(l, rel, r)),
        ]
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        (0usize..=3).prop_flat_map(|var_count| {
            let binders = proptest::collection::vec(arb_sort(), var_count).prop_map(
                move |sorts| {
                    sorts
                        .into_iter()
                        .enumerate()
                        .map(|(i, sort)| Binder { name: VARS[i].to_string(), sort })
                        .collect::<Vec<_>>()
                },
            );
            let hypothesis = proptest::collection::vec(arb_atom(var_count), 0..=2);
            let conclusion = proptest::collection::vec(arb_atom(var_count), 1..=2);
            (binders, hypothesis, conclusion).prop_map(|(binders, hypothesis, conclusion)| {
                Formula { binders, hypothesis, conclusion }
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1024))]

        /// The canonical rendering of any tree parses back to the
        /// identical tree.
        #[test]
        fn formula_display_round_trips(formula in arb_formula()) {
            let text = formula.to_string();
            let reparsed = parse(&text);
            prop_assert_eq!(reparsed, Ok(formula), "canonical text: {}", text);
        }

        /// Bare expressions round-trip through the expression entry
        /// point, including ones with free variables.
        #[test]
        fn expr_display_round_trips(expr in arb_expr(3)) {
            let text = expr.to_string();
            let reparsed = parse_expr(&text);
            prop_assert_eq!(reparsed, Ok(expr), "canonical text: {}", text);
        }
    }
}
