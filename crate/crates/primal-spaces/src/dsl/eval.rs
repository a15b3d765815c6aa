//! Evaluation of expressions and formulas against a space's operator
//! table.

use std::collections::BTreeMap;

use super::ast::{Atom, Formula, Func, Rel, SetExpr, Sort};
use super::DslError;
use crate::operators::OperatorTable;
use crate::setcore::SubsetCode;

/// Outcome of evaluating a formula on one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The conclusion held for every binding that satisfied the
    /// hypothesis.
    Pass,
    /// The first binding (in binder order, scanned first-binder-major
    /// and ascending) that satisfied the hypothesis but falsified the
    /// conclusion.
    Fail(Vec<(String, SubsetCode)>),
    /// A space-level hypothesis — one mentioning no variables, such as
    /// `suitable` or `ccc` — is false on this space, so the formula
    /// says nothing about it.
    HypothesisNotMet,
}

/// Evaluate a set expression. Every variable must appear in
/// `bindings`; values are expected to be valid subset codes for the
/// table's ground set.
pub fn eval_set(
    expr: &SetExpr,
    table: &OperatorTable,
    bindings: &BTreeMap<String, SubsetCode>,
) -> Result<SubsetCode, DslError> {
    let pairs: Vec<(&str, u32)> =
        bindings.iter().map(|(name, code)| (name.as_str(), code.0)).collect();
    eval_bits(expr, table, &pairs).map(SubsetCode)
}

fn eval_bits(
    expr: &SetExpr,
    table: &OperatorTable,
    bindings: &[(&str, u32)],
) -> Result<u32, DslError> {
    Ok(match expr {
        SetExpr::Var(name) => bindings
            .iter()
            .find(|(bound, _)| bound == name)
            .map(|(_, value)| *value)
            .ok_or_else(|| DslError::MissingBinding { name: name.clone() })?,
        SetExpr::Full => table.full_bits(),
        SetExpr::Empty => 0,
        SetExpr::Complement(inner) => table.full_bits() & !eval_bits(inner, table, bindings)?,
        SetExpr::App(func, arg) => {
            let value = eval_bits(arg, table, bindings)?;
            match func {
                Func::Diamond => table.d_of(value),
                Func::Psi => table.psi_of(value),
                Func::Closure => table.cl_of(value),
                Func::Interior => table.int_of(value),
                Func::DiamondClosure => table.cld_of(value),
                Func::DiamondInterior => table.intd_of(value),
            }
        }
        SetExpr::Union(a, b) => eval_bits(a, table, bindings)? | eval_bits(b, table, bindings)?,
        SetExpr::Difference(a, b) => {
            eval_bits(a, table, bindings)? & !eval_bits(b, table, bindings)?
        }
        SetExpr::Intersection(a, b) => {
            eval_bits(a, table, bindings)? & eval_bits(b, table, bindings)?
        }
    })
}

fn eval_atom(
    atom: &Atom,
    table: &OperatorTable,
    bindings: &[(&str, u32)],
) -> Result<bool, DslError> {
    Ok(match atom {
        Atom::Suitable => table.is_suitable(),
        Atom::Ccc => table.closed_complement_condition(),
        Atom::InP(expr) => table.in_p(eval_bits(expr, table, bindings)?),
        Atom::NotInP(expr) => !table.in_p(eval_bits(expr, table, bindings)?),
        Atom::Relation(lhs, rel, rhs) => {
            let left = eval_bits(lhs, table, bindings)?;
            let right = eval_bits(rhs, table, bindings)?;
            match rel {
                Rel::Eq => left == right,
                Rel::Subset => left & right == left,
            }
        }
    })
}

fn domain(sort: Sort, table: &OperatorTable) -> Vec<u32> {
    match sort {
        Sort::Set => (0..=table.full_bits()).collect(),
        Sort::Open => table.space().topology().open_sets().iter().map(|c| c.0).collect(),
        Sort::Closed => table.space().topology().closed_sets().iter().map(|c| c.0).collect(),
        Sort::OpenStar => table.star_topology().open_sets().iter().map(|c| c.0).collect(),
    }
}

/// Evaluate a formula over one space.
///
/// Hypothesis conjuncts that mention no variables are space-level:
/// when any of them is false the verdict is
/// [`Verdict::HypothesisNotMet`] without scanning bindings. Conjuncts
/// that mention variables act as guards instead: bindings that violate
/// them are skipped, and a formula whose guard excludes every binding
/// passes vacuously.
///
/// Bindings are scanned with the first binder outermost and each
/// domain in ascending code order, so a `Fail` verdict always carries
/// the first falsifying binding in that order.
///
/// # Panics
///
/// Panics if the formula mentions a variable with no binder. Formulas
/// produced by [`parse`](super::parse) always satisfy the invariant.
pub fn eval_formula(formula: &Formula, table: &OperatorTable) -> Verdict {
    let mut guarded = Vec::new();
    for atom in &formula.hypothesis {
        if atom.has_vars() {
            guarded.push(atom);
        } else {
            let holds = eval_atom(atom, table, &[])
                .expect("space-level atoms mention no variables");
            if !holds {
                return Verdict::HypothesisNotMet;
            }
        }
    }

    let domains: Vec<Vec<u32>> =
        formula.binders.iter().map(|binder| domain(binder.sort, table)).collect();
    if domains.iter().any(|d| d.is_empty()) {
        return Verdict::Pass;
    }

    let mut indices = vec![0usize; domains.len()];
    loop {
        let bindings: Vec<(&str, u32)> = formula
            .binders
            .iter()
            .zip(indices.iter().zip(&domains))
            .map(|(binder, (&i, domain))| (binder.name.as_str(), domain[i]))
            .collect();

        let guard_holds = guarded.iter().all(|atom| {
            eval_atom(atom, table, &bindings)
                .expect("every variable in a parsed formula is bound")
        });
        if guard_holds {
            for atom in &formula.conclusion {
                let holds = eval_atom(atom, table, &bindings)
                    .expect("every variable in a parsed formula is bound");
                if !holds {
                    let witness = bindings
                        .into_iter()
                        .map(|(name, value)| (name.to_string(), SubsetCode(value)))
                        .collect();
                    return Verdict::Fail(witness);
                }
            }
        }

        // Odometer step: the last binder cycles fastest.
        let mut slot = indices.len();
        loop {
            if slot == 0 {
                return Verdict::Pass;
            }
            slot -= 1;
            indices[slot] += 1;
            if indices[slot] < domains[slot].len() {
                break;
            }
            indices[slot] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parser::{parse, parse_expr};
    use super::*;
    use crate::setcore::{GroundSet, SetFamily};
    use crate::spaces::{Primal, PrimalSpace, Topology};

    /// Three points; opens {∅, {0}, X}; primal generated by {2}.
    fn s1() -> OperatorTable {
        let ground = GroundSet::new(3).unwrap();
        let opens = SetFamily::from_codes([0b000, 0b001, 0b111].map(SubsetCode));
        let topology = Topology::validate(ground, opens).unwrap();
        let primal = Primal::from_generator(ground, SubsetCode(0b100)).unwrap();
        OperatorTable::new(PrimalSpace::new(topology, primal).unwrap())
    }

    fn bind(pairs: &[(&str, u32)]) -> BTreeMap<String, SubsetCode> {
        pairs.iter().map(|&(n, v)| (n.to_string(), SubsetCode(v))).collect()
    }

    #[test]
    fn evaluates_expressions_on_a_fixed_space() {
        let table = s1();
        let cases = [
            ("d(A)", vec![("A", 0b100)], 0b110),
            ("psi(A & B)", vec![("A", 0b011), ("B", 0b111)], 0b001),
            ("~X", vec![], 0b000),
            ("cl(A)", vec![("A", 0b010)], 0b110),
            ("int(A | B)", vec![("A", 0b001), ("B", 0b010)], 0b001),
            ("cld(A) - intd(A)", vec![("A", 0b101)], 0b010),
            ("X - d(X - A)", vec![("A", 0b011)], 0b001),
        ];
        for (text, pairs, expected) in cases {
            let expr = parse_expr(text).unwrap();
            let value = eval_set(&expr, &table, &bind(&pairs)).unwrap();
            assert_eq!(value, SubsetCode(expected), "{text}");
        }
    }

    #[test]
    fn missing_binding_is_an_error() {
        let table = s1();
        let expr = parse_expr("d(A) | B").unwrap();
        assert_eq!(
            eval_set(&expr, &table, &bind(&[("A", 0b001)])).unwrap_err(),
            DslError::MissingBinding { name: "B".into() }
        );
    }

    #[test]
    fn passing_formulas() {
        let table = s1();
        for text in [
            "forall A, B: d(A | B) = d(A) | d(B)",
            "forall U:open: U <= psi(U)",
            "forall U:openstar: U <= psi(U)",
            "forall A:closed: d(A) <= A",
            "forall A: suitable => d(d(A)) = d(A)",
            "forall A, B: A <= B => d(A) <= d(B)",
            "forall A: psi(A) = X - d(X - A)",
            "d(0) = 0",
        ] {
            let formula = parse(text).unwrap();
            assert_eq!(eval_formula(&formula, &table), Verdict::Pass, "{text}");
        }
    }

    #[test]
    fn failing_formula_reports_first_witness() {
        let table = s1();
        let formula = parse("forall A: d(A) <= A").unwrap();
        assert_eq!(
            eval_formula(&formula, &table),
            Verdict::Fail(vec![("A".to_string(), SubsetCode(0b100))])
        );
    }

    #[test]
    fn two_binder_witness_scans_first_binder_major() {
        let table = s1();
        let formula = parse("forall A, B: cl(A & B) = cl(A) & cl(B)").unwrap();
        assert_eq!(
            eval_formula(&formula, &table),
            Verdict::Fail(vec![
                ("A".to_string(), SubsetCode(0b001)),
                ("B".to_string(), SubsetCode(0b010)),
            ])
        );
    }

    #[test]
    fn false_space_level_hypothesis_short_circuits() {
        let table = s1();
        // This space does not satisfy the closed-complement condition,
        // so the formula does not apply — even though its conclusion
        // would fail for U = {0}.
        let formula = parse("forall U:open: ccc => U <= d(U)").unwrap();
        assert_eq!(eval_formula(&formula, &table), Verdict::HypothesisNotMet);
    }

    #[test]
    fn variable_guards_skip_bindings_instead_of_rejecting_the_space() {
        let table = s1();
        // The guard excludes every binding, so the formula passes
        // vacuously.
        let formula = parse("forall A: A = X and A = 0 => d(A) = X").unwrap();
        assert_eq!(eval_formula(&formula, &table), Verdict::Pass);
        // A guard that admits exactly one binding: A = X, where the
        // conclusion fails (d(X) = {1,2} but cl(X) = X).
        let formula = parse("forall A: X <= A => d(A) = cl(A)").unwrap();
        assert_eq!(
            eval_formula(&formula, &table),
            Verdict::Fail(vec![("A".to_string(), SubsetCode(0b111))])
        );
    }

    #[test]
    fn binderless_formulas_evaluate_once() {
        let table = s1();
        assert_eq!(eval_formula(&parse("X = X").unwrap(), &table), Verdict::Pass);
        assert_eq!(
            eval_formula(&parse("X = 0").unwrap(), &table),
            Verdict::Fail(vec![])
        );
        assert_eq!(
            eval_formula(&parse("ccc => X = 0").unwrap(), &table),
            Verdict::HypothesisNotMet
        );
        assert_eq!(
            eval_formula(&parse("suitable => X = X").unwrap(), &table),
            Verdict::Pass
        );
    }

    #[test]
    fn membership_atoms_consult_the_primal() {
        let table = s1();
        // Members of this primal are exactly the subsets of {0,1}.
        assert_eq!(eval_formula(&parse("inP(~X)").unwrap(), &table), Verdict::Pass);
        assert_eq!(eval_formula(&parse("notinP(X)").unwrap(), &table), Verdict::Pass);
        let formula = parse("forall A: inP(A & ~d(X))").unwrap();
        assert_eq!(eval_formula(&formula, &table), Verdict::Pass);
        let formula = parse("forall A: notinP(A)").unwrap();
        assert_eq!(
            eval_formula(&formula, &table),
            Verdict::Fail(vec![("A".to_string(), SubsetCode(0b000))])
        );
    }
}
