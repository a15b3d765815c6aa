//! Canonical rendering of syntax trees. Parsing the rendered text
//! reproduces the tree exactly, so formatting doubles as a
//! normalizer: Unicode aliases become their ASCII spellings and
//! redundant parentheses disappear.

use std::fmt;

use super::ast::{Atom, Binder, Formula, Func, Rel, SetExpr, Sort};

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Writes `child`, parenthesized exactly when required: when it binds
/// looser than its parent, or equally tight in right-operand position
/// (all binary operators associate to the left).
fn write_child(
    f: &mut fmt::Formatter<'_>,
    child: &SetExpr,
    parent_precedence: u8,
    is_right_operand: bool,
) -> fmt::Result {
    let child_precedence = child.precedence();
    let needs_parens = child_precedence < parent_precedence
        || (child_precedence == parent_precedence && is_right_operand);
    if needs_parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Var(name) => f.write_str(name),
            SetExpr::Full => f.write_str("X"),
            SetExpr::Empty => f.write_str("0"),
            SetExpr::Complement(inner) => {
                f.write_str("~")?;
                write_child(f, inner, 4, false)
            }
            SetExpr::App(func, arg) => write!(f, "{func}({arg})"),
            SetExpr::Union(a, b) => {
                write_child(f, a, 1, false)?;
                f.write_str(" | ")?;
                write_child(f, b, 1, true)
            }
            SetExpr::Difference(a, b) => {
                write_child(f, a, 2, false)?;
                f.write_str(" - ")?;
                write_child(f, b, 2, true)
            }
            SetExpr::Intersection(a, b) => {
                write_child(f, a, 3, false)?;
                f.write_str(" & ")?;
                write_child(f, b, 3, true)
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Suitable => f.write_str("suitable"),
            Atom::Ccc => f.write_str("ccc"),
            Atom::InP(expr) => write!(f, "inP({expr})"),
            Atom::NotInP(expr) => write!(f, "notinP({expr})"),
            Atom::Relation(lhs, Rel::Eq, rhs) => write!(f, "{lhs} = {rhs}"),
            Atom::Relation(lhs, Rel::Subset, rhs) => write!(f, "{lhs} <= {rhs}"),
        }
    }
}

impl fmt::Display for Binder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if self.sort != Sort::Set {
            write!(f, ":{}", self.sort)?;
        }
        Ok(())
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, atoms: &[Atom]) -> fmt::Result {
    for (i, atom) in atoms.iter().enumerate() {
        if i > 0 {
            f.write_str(" and ")?;
        }
        write!(f, "{atom}")?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.binders.is_empty() {
            f.write_str("forall ")?;
            for (i, binder) in self.binders.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{binder}")?;
            }
            f.write_str(": ")?;
        }
        if !self.hypothesis.is_empty() {
            write_joined(f, &self.hypothesis)?;
            f.write_str(" => ")?;
        }
        write_joined(f, &self.conclusion)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parser::{parse, parse_expr};

    fn canonical(text: &str) -> String {
        parse(text).unwrap().to_string()
    }

    fn canonical_expr(text: &str) -> String {
        parse_expr(text).unwrap().to_string()
    }

    #[test]
    fn normalizes_spacing() {
        assert_eq!(canonical("forall A : d( A )=d(A)"), "forall A: d(A) = d(A)");
        assert_eq!(canonical("forall A,B:d(A|B)=d(A)|d(B)"), "forall A, B: d(A | B) = d(A) | d(B)");
    }

    #[test]
    fn keeps_only_necessary_parentheses() {
        assert_eq!(canonical_expr("(A | B) & C"), "(A | B) & C");
        assert_eq!(canonical_expr("A | (B & C)"), "A | B & C");
        assert_eq!(canonical_expr("((A))"), "A");
        assert_eq!(canonical_expr("A - (B - C)"), "A - (B - C)");
        assert_eq!(canonical_expr("(A - B) - C"), "A - B - C");
        assert_eq!(canonical_expr("~(A | B)"), "~(A | B)");
        assert_eq!(canonical_expr("~(~(A))"), "~~A");
        assert_eq!(canonical_expr("~(d(A))"), "~d(A)");
        assert_eq!(canonical_expr("(A & B) - (C & D)"), "A & B - C & D");
    }

    #[test]
    fn default_sort_is_omitted_and_others_kept() {
        assert_eq!(
            canonical("forall A:set, U:open, C:closed, V:openstar: A = U and C = V"),
            "forall A, U:open, C:closed, V:openstar: A = U and C = V"
        );
    }

    #[test]
    fn unicode_becomes_ascii() {
        assert_eq!(
            canonical("forall A: Ψ(A ∪ X) ⊆ X and ⋄(A ∩ X) ⊆ X"),
            "forall A: psi(A | X) <= X and d(A & X) <= X"
        );
    }

    #[test]
    fn hypothesis_arrow_and_membership_atoms() {
        let text = "forall A, B: notinP(~B) => d(A | B) = d(A) and d(A) = d(A - B)";
        assert_eq!(canonical(text), text);
        assert_eq!(canonical("suitable and ccc => inP(~X)"), "suitable and ccc => inP(~X)");
    }
}
