//! The named check battery: every law the operators are expected to
//! satisfy, expressed as an executable check over one space, plus a
//! battery runner that tallies the checks across every space of a
//! given size and a counterexample search for arbitrary formulas.
//!
//! Checks are either *laws* — statements expected to hold on every
//! space that meets their hypothesis — or *observations*: facts about
//! the finite spaces enumerated here that the battery demonstrates
//! rather than assumes. Each check carries a space-level hypothesis
//! ([`Hypothesis`]); on spaces that do not meet it the check reports
//! [`CheckOutcome::HypothesisNotMet`] instead of passing or failing.
//!
//! Failing checks report the first falsifying binding in scan order
//! (first variable outermost, each domain ascending), using the same
//! variable names as the formula encodings in
//! [`DSL_ENCODED_CHECKS`], so a witness can be replayed with the
//! expression evaluator.

use serde::{Deserialize, Serialize};

use crate::dsl::{eval_formula, Formula, Verdict};
use crate::enumerate::{spaces, CapacityError, MAX_ENUM_POINTS};
use crate::operators::{base_family, primal_topology, suitability_witness, OperatorTable, StarRoute};
use crate::setcore::{SetFamily, SubsetCode};
use crate::spaces::{PrimalSpace, Topology};

/// Whether a check states a law or records an observed property of
/// the enumerated finite spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Law,
    Observation,
}

/// Space-level hypothesis of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    None,
    Suitable,
    Ccc,
    SuitableAndCcc,
}

impl Hypothesis {
    fn holds(self, table: &OperatorTable) -> bool {
        match self {
            Hypothesis::None => true,
            Hypothesis::Suitable => table.is_suitable(),
            Hypothesis::Ccc => table.closed_complement_condition(),
            Hypothesis::SuitableAndCcc => {
                table.is_suitable() && table.closed_complement_condition()
            }
        }
    }
}

/// A falsifying binding: variable names paired with subset codes.
pub type CheckWitness = Vec<(&'static str, SubsetCode)>;

type CheckFn = fn(&OperatorTable) -> Result<(), CheckWitness>;

/// One named check.
pub struct CheckDef {
    pub name: &'static str,
    pub summary: &'static str,
    pub kind: CheckKind,
    pub hypothesis: Hypothesis,
    eval: CheckFn,
}

/// Result of one check on one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(CheckWitness),
    HypothesisNotMet,
}

/// Look a check up by name.
pub fn find_check(name: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|def| def.name == name)
}

/// Run one check on one space.
pub fn run_check(def: &CheckDef, table: &OperatorTable) -> CheckOutcome {
    if !def.hypothesis.holds(table) {
        return CheckOutcome::HypothesisNotMet;
    }
    match (def.eval)(table) {
        Ok(()) => CheckOutcome::Pass,
        Err(witness) => CheckOutcome::Fail(witness),
    }
}

// ------------------------------------------------------------------
// Scan helpers. All scans ascend, first variable outermost, matching
// the formula evaluator's order so witnesses agree.

fn co(t: &OperatorTable, a: u32) -> u32 {
    t.full_bits() & !a
}

fn within(a: u32, b: u32) -> bool {
    a & !b == 0
}

fn opens(t: &OperatorTable) -> Vec<u32> {
    t.space().topology().open_sets().iter().map(|c| c.0).collect()
}

fn closeds(t: &OperatorTable) -> Vec<u32> {
    t.space().topology().closed_sets().iter().map(|c| c.0).collect()
}

fn star_opens(t: &OperatorTable) -> Vec<u32> {
    t.star_topology().open_sets().iter().map(|c| c.0).collect()
}

// ------------------------------------------------------------------
// Check bodies.

fn eval_closed_dominates(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in closeds(t) {
        if !within(t.d_of(a), a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_empty_diamond(t: &OperatorTable) -> Result<(), CheckWitness> {
    if t.d_of(0) == 0 {
        Ok(())
    } else {
        Err(vec![])
    }
}

fn eval_diamond_closed(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if t.cl_of(t.d_of(a)) != t.d_of(a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_diamond_contractive(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if !within(t.d_of(t.d_of(a)), t.d_of(a)) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_diamond_monotone(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if within(a, b) && !within(t.d_of(a), t.d_of(b)) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_union_additive(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if t.d_of(a | b) != t.d_of(a) | t.d_of(b) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_intersection_subadditive(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if !within(t.d_of(a & b), t.d_of(a) & t.d_of(b)) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_open_cap_diamond(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in opens(t) {
        for b in 0..=t.full_bits() {
            if !within(u & t.d_of(b), t.d_of(u & b)) {
                return Err(vec![("U", SubsetCode(u)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_open_cap_diamond_eq(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in opens(t) {
        for b in 0..=t.full_bits() {
            if u & t.d_of(b) != u & t.d_of(u & b) {
                return Err(vec![("U", SubsetCode(u)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_base_generates(t: &OperatorTable) -> Result<(), CheckWitness> {
    let star = t.star_topology();
    for code in t.base_family().iter() {
        if !star.is_open(code) {
            return Err(vec![("T", code)]);
        }
    }
    let via_base = primal_topology(t.space(), StarRoute::Base);
    if via_base.topology.open_sets().mask() != star.open_sets().mask() {
        return Err(vec![]);
    }
    Ok(())
}

fn eval_open_subset_diamond(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in opens(t) {
        if !within(u, t.d_of(u)) {
            return Err(vec![("U", SubsetCode(u))]);
        }
    }
    Ok(())
}

fn eval_nonmember_vanishes(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if !t.in_p(co(t, a)) && t.d_of(a) != 0 {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_difference_law(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if t.d_of(a) & !t.d_of(b) != t.d_of(a & !b) & !t.d_of(b) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_union_invariant(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if !t.in_p(co(t, b))
                && (t.d_of(a | b) != t.d_of(a) || t.d_of(a) != t.d_of(a & !b))
            {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_psi_diamond_dual(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if t.psi_of(a) != co(t, t.d_of(co(t, a))) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_open(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if t.int_of(t.psi_of(a)) != t.psi_of(a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_monotone(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if within(a, b) && !within(t.psi_of(a), t.psi_of(b)) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_psi_intersection(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            if t.psi_of(a & b) != t.psi_of(a) & t.psi_of(b) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_psi_star_open_expansive(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in star_opens(t) {
        if !within(u, t.psi_of(u)) {
            return Err(vec![("U", SubsetCode(u))]);
        }
    }
    Ok(())
}

fn eval_psi_expansive_on_psi(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if !within(t.psi_of(a), t.psi_of(t.psi_of(a))) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_idempotent_iff(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        let psi_fixed = t.psi_of(a) == t.psi_of(t.psi_of(a));
        let d_fixed = t.d_of(co(t, a)) == t.d_of(t.d_of(co(t, a)));
        if psi_fixed != d_fixed {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_nonmember_constant(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if !t.in_p(co(t, a)) && t.psi_of(a) != co(t, t.d_of(t.full_bits())) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_interior_star(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if t.intd_of(a) != t.star_topology().interior_bits(a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_difference_invariant(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for i in 0..=full {
            if !t.in_p(co(t, i)) && t.psi_of(a & !i) != t.psi_of(a) {
                return Err(vec![("A", SubsetCode(a)), ("I", SubsetCode(i))]);
            }
        }
    }
    Ok(())
}

fn eval_psi_union_invariant(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for i in 0..=full {
            if !t.in_p(co(t, i)) && t.psi_of(a | i) != t.psi_of(a) {
                return Err(vec![("A", SubsetCode(a)), ("I", SubsetCode(i))]);
            }
        }
    }
    Ok(())
}

fn eval_psi_symdiff_invariant(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    for a in 0..=full {
        for b in 0..=full {
            let symdiff = (a & !b) | (b & !a);
            if !t.in_p(co(t, symdiff)) && t.psi_of(a) != t.psi_of(b) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_open_psi_expansive(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in opens(t) {
        if !within(u, t.psi_of(u)) {
            return Err(vec![("U", SubsetCode(u))]);
        }
    }
    Ok(())
}

fn eval_psi_union_form(t: &OperatorTable) -> Result<(), CheckWitness> {
    let all_opens = opens(t);
    for a in 0..=t.full_bits() {
        let mut union = 0u32;
        for &u in &all_opens {
            if !t.in_p(co(t, u & !a)) {
                union |= u;
            }
        }
        if union != t.psi_of(a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_psi_union_lower(t: &OperatorTable) -> Result<(), CheckWitness> {
    let all_opens = opens(t);
    for a in 0..=t.full_bits() {
        let mut union = 0u32;
        for &u in &all_opens {
            let symdiff = (u & !a) | (a & !u);
            if !t.in_p(co(t, symdiff)) {
                union |= u;
            }
        }
        if !within(union, t.psi_of(a)) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_sigma_is_tau_star(t: &OperatorTable) -> Result<(), CheckWitness> {
    let via_psi = primal_topology(t.space(), StarRoute::Psi);
    if via_psi.topology.open_sets().mask() != t.star_topology().open_sets().mask() {
        return Err(vec![]);
    }
    Ok(())
}

fn eval_suitable_equivalents(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    let n = t.space().ground().points();
    let all_opens = opens(t);

    let cond1 = t.is_suitable();
    let cond2 = t
        .star_topology()
        .closed_sets()
        .iter()
        .all(|a| !t.in_p(co(t, a.0) | t.d_of(a.0)));
    let cond3 = (0..=full).all(|a| {
        let every_point_has_substantial_nbhd = (0..n).filter(|&x| a & (1 << x) != 0).all(|x| {
            all_opens
                .iter()
                .any(|&u| u & (1 << x) != 0 && !t.in_p(co(t, u & a)))
        });
        !every_point_has_substantial_nbhd || !t.in_p(co(t, a))
    });
    let cond4 = (0..=full).all(|a| a & t.d_of(a) != 0 || !t.in_p(co(t, a)));

    if cond1 == cond2 && cond2 == cond3 && cond3 == cond4 {
        Ok(())
    } else {
        Err(vec![])
    }
}

fn eval_necessity_conditions(t: &OperatorTable) -> Result<(), CheckWitness> {
    let (ca, cb, cc) = necessity_conditions(t);
    let all_equivalent = ca == cb && cb == cc;
    let follows_from_suitability = !t.is_suitable() || ca;
    if all_equivalent && follows_from_suitability {
        Ok(())
    } else {
        Err(vec![])
    }
}

/// The three necessity conditions of suitability, evaluated
/// space-wide: (a) sets disjoint from their diamond have empty
/// diamond; (b) `d(A - d(A))` is always empty; (c) `d(A & d(A)) =
/// d(A)`.
fn necessity_conditions(t: &OperatorTable) -> (bool, bool, bool) {
    let full = t.full_bits();
    let ca = (0..=full).all(|a| a & t.d_of(a) != 0 || t.d_of(a) == 0);
    let cb = (0..=full).all(|a| t.d_of(a & !t.d_of(a)) == 0);
    let cc = (0..=full).all(|a| t.d_of(a & t.d_of(a)) == t.d_of(a));
    (ca, cb, cc)
}

fn eval_idempotent(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if t.d_of(t.d_of(a)) != t.d_of(a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_star_closed_decomposition(t: &OperatorTable) -> Result<(), CheckWitness> {
    let all_closeds = closeds(t);
    for a in 0..=t.full_bits() {
        let star_closed = t.star_topology().is_closed(SubsetCode(a));
        let decomposes = all_closeds
            .iter()
            .any(|&f| within(f, a) && !t.in_p(co(t, a & !f)));
        if star_closed != decomposes {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_base_is_topology(t: &OperatorTable) -> Result<(), CheckWitness> {
    let family = base_family(t.space());
    match Topology::validate(t.space().ground(), family) {
        Ok(topology)
            if topology.open_sets().mask() == t.star_topology().open_sets().mask() =>
        {
            Ok(())
        }
        _ => Err(vec![]),
    }
}

fn eval_closure_chain(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if !within(a, t.d_of(a)) {
            continue;
        }
        let ok = t.cl_of(a) == t.cld_of(a)
            && t.cld_of(a) == t.cl_of(t.d_of(a))
            && t.cl_of(t.d_of(a)) == t.d_of(a);
        if !ok {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_star_open_chain(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in opens(t) {
        let d_u = t.d_of(u);
        let cl_u = t.cl_of(u);
        let cld_u = t.cld_of(u);
        for a in 0..=t.full_bits() {
            if t.in_p(a) {
                continue;
            }
            let g = u & a;
            let ok = t.cl_of(g) == t.cld_of(g)
                && t.cld_of(g) == t.d_of(g)
                && t.d_of(g) == d_u
                && d_u == cl_u
                && cl_u == cld_u;
            if !ok {
                return Err(vec![("U", SubsetCode(u)), ("A", SubsetCode(a))]);
            }
        }
    }
    Ok(())
}

fn eval_open_intersection_closure(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in opens(t) {
        for b in 0..=t.full_bits() {
            let inner = a & t.d_of(b);
            if t.d_of(a & b) != t.d_of(inner) || t.d_of(inner) != t.cl_of(inner) {
                return Err(vec![("A", SubsetCode(a)), ("B", SubsetCode(b))]);
            }
        }
    }
    Ok(())
}

fn eval_avoids_full_diamond(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in opens(t) {
        if !t.in_p(co(t, a)) && a & t.d_of(t.full_bits()) != 0 {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_star_family_topology(t: &OperatorTable) -> Result<(), CheckWitness> {
    let full = t.full_bits();
    let family =
        SetFamily::from_codes((0..=full).filter(|&a| t.d_of(co(t, a)) & a == 0).map(SubsetCode));
    match Topology::validate(t.space().ground(), family) {
        Ok(topology)
            if topology.open_sets().mask() == t.star_topology().open_sets().mask() =>
        {
            Ok(())
        }
        _ => Err(vec![]),
    }
}

fn eval_cl_star_is_star_closure(t: &OperatorTable) -> Result<(), CheckWitness> {
    for a in 0..=t.full_bits() {
        if t.cld_of(a) != t.star_topology().closure_bits(a) {
            return Err(vec![("A", SubsetCode(a))]);
        }
    }
    Ok(())
}

fn eval_tau_subset_tau_star(t: &OperatorTable) -> Result<(), CheckWitness> {
    for u in opens(t) {
        if !t.star_topology().is_open(SubsetCode(u)) {
            return Err(vec![("U", SubsetCode(u))]);
        }
    }
    Ok(())
}

fn eval_all_spaces_suitable(t: &OperatorTable) -> Result<(), CheckWitness> {
    if t.is_suitable() {
        Ok(())
    } else {
        Err(suitability_witness(t.space())
            .map(|w| vec![("A", w)])
            .unwrap_or_default())
    }
}

/// Every named check, in report order.
pub static REGISTRY: &[CheckDef] = &[
    CheckDef {
        name: "t1a-1-closed-dominates",
        summary: "closed sets contain their diamond: d(A) <= A when A is closed",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_closed_dominates,
    },
    CheckDef {
        name: "t1a-2-empty-diamond",
        summary: "the empty set has empty diamond",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_empty_diamond,
    },
    CheckDef {
        name: "t1a-3-diamond-closed",
        summary: "every diamond value is topologically closed",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_diamond_closed,
    },
    CheckDef {
        name: "t1a-4-diamond-contractive",
        summary: "iterating shrinks: d(d(A)) <= d(A)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_diamond_contractive,
    },
    CheckDef {
        name: "t1a-5-diamond-monotone",
        summary: "the diamond is monotone under inclusion",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_diamond_monotone,
    },
    CheckDef {
        name: "t1a-6-union-additive",
        summary: "the diamond distributes over binary union",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_union_additive,
    },
    CheckDef {
        name: "t1a-7-intersection-subadditive",
        summary: "d(A & B) sits inside d(A) & d(B)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_intersection_subadditive,
    },
    CheckDef {
        name: "t2-1-open-cap-diamond",
        summary: "open sets push into the diamond: U & d(B) <= d(U & B)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_open_cap_diamond,
    },
    CheckDef {
        name: "c2-2-open-cap-diamond-eq",
        summary: "the open-intersection bound is exact: U & d(B) = U & d(U & B)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_open_cap_diamond_eq,
    },
    CheckDef {
        name: "t2-3-base-generates",
        summary: "opens cut by primal nonmembers generate the star topology",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_base_generates,
    },
    CheckDef {
        name: "t3-1-open-subset-diamond",
        summary: "under the closed-complement condition every open set lies in its diamond",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::Ccc,
        eval: eval_open_subset_diamond,
    },
    CheckDef {
        name: "l3-2-nonmember-vanishes",
        summary: "a set whose complement is a nonmember has empty diamond",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_nonmember_vanishes,
    },
    CheckDef {
        name: "l3-3-difference-law",
        summary: "difference law: d(A) - d(B) = d(A - B) - d(B)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_difference_law,
    },
    CheckDef {
        name: "c3-4-union-invariant",
        summary: "adding or removing a set with nonmember complement leaves the diamond unchanged",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_union_invariant,
    },
    CheckDef {
        name: "c3-5-open-psi-expansive",
        summary: "every open set is contained in its psi",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_open_psi_expansive,
    },
    CheckDef {
        name: "t3-6-psi-union-form",
        summary: "psi(A) is the union of the opens whose part outside A has nonmember complement",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_union_form,
    },
    CheckDef {
        name: "t3-7-psi-union-lower",
        summary: "opens almost equal to A (symmetric difference with nonmember complement) lie inside psi(A)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_union_lower,
    },
    CheckDef {
        name: "t3-8-sigma-is-tau-star",
        summary: "the psi-expansive sets are exactly the star-open sets",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_sigma_is_tau_star,
    },
    CheckDef {
        name: "psi-1-diamond-dual",
        summary: "psi is the dual of the diamond: psi(A) = X - d(X - A)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_diamond_dual,
    },
    CheckDef {
        name: "psi-2-open",
        summary: "psi(A) is always open",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_open,
    },
    CheckDef {
        name: "psi-3-monotone",
        summary: "psi is monotone under inclusion",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_monotone,
    },
    CheckDef {
        name: "psi-4-intersection",
        summary: "psi distributes over binary intersection",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_intersection,
    },
    CheckDef {
        name: "psi-5-star-open-expansive",
        summary: "star-open sets expand under psi",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_star_open_expansive,
    },
    CheckDef {
        name: "psi-6-expansive-on-psi",
        summary: "psi expands its own image: psi(A) <= psi(psi(A))",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_expansive_on_psi,
    },
    CheckDef {
        name: "psi-7-idempotent-iff",
        summary: "psi is idempotent at A exactly when the diamond is idempotent at X - A",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_idempotent_iff,
    },
    CheckDef {
        name: "psi-8-nonmember-constant",
        summary: "on sets with nonmember complement psi is the constant X - d(X)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_nonmember_constant,
    },
    CheckDef {
        name: "psi-9-interior-star",
        summary: "A & psi(A) computes the star-topology interior of A",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_interior_star,
    },
    CheckDef {
        name: "psi-10-difference-invariant",
        summary: "removing a set with nonmember complement leaves psi unchanged",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_difference_invariant,
    },
    CheckDef {
        name: "psi-11-union-invariant",
        summary: "adding a set with nonmember complement leaves psi unchanged",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_union_invariant,
    },
    CheckDef {
        name: "psi-12-symdiff-invariant",
        summary: "psi agrees on sets whose symmetric difference has nonmember complement",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_psi_symdiff_invariant,
    },
    CheckDef {
        name: "t4-2-suitable-equivalents",
        summary: "four formulations of suitability agree",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_suitable_equivalents,
    },
    CheckDef {
        name: "t4-3-necessity-conditions",
        summary: "the three necessity conditions are mutually equivalent and follow from suitability",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_necessity_conditions,
    },
    CheckDef {
        name: "c4-4-idempotent",
        summary: "on suitable spaces the diamond is idempotent",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::Suitable,
        eval: eval_idempotent,
    },
    CheckDef {
        name: "t4-5-star-closed-decomposition",
        summary: "on suitable spaces a set is star-closed exactly when it is a closed set plus residue with nonmember complement",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::Suitable,
        eval: eval_star_closed_decomposition,
    },
    CheckDef {
        name: "c4-6-base-is-topology",
        summary: "on suitable spaces the generating family is itself a topology equal to the star topology",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::Suitable,
        eval: eval_base_is_topology,
    },
    CheckDef {
        name: "t4-7-closure-chain",
        summary: "when A <= d(A) the closure, the diamond closure, and the diamond coincide",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_closure_chain,
    },
    CheckDef {
        name: "t4-8-star-open-chain",
        summary: "on suitable spaces with the closed-complement condition, cutting an open set by a nonmember preserves the whole closure-diamond chain",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::SuitableAndCcc,
        eval: eval_star_open_chain,
    },
    CheckDef {
        name: "t4-9-open-intersection-closure",
        summary: "on suitable spaces d(A & B) = d(A & d(B)) = cl(A & d(B)) for open A",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::Suitable,
        eval: eval_open_intersection_closure,
    },
    CheckDef {
        name: "c4-10-avoids-full-diamond",
        summary: "on suitable spaces an open set with nonmember complement avoids d(X)",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::Suitable,
        eval: eval_avoids_full_diamond,
    },
    CheckDef {
        name: "d2-7-star-family-topology",
        summary: "the diamond-fixed family is a topology",
        kind: CheckKind::Law,
        hypothesis: Hypothesis::None,
        eval: eval_star_family_topology,
    },
    CheckDef {
        name: "obs-1-cl-star-is-star-closure",
        summary: "observed: A | d(A) computes the star-topology closure",
        kind: CheckKind::Observation,
        hypothesis: Hypothesis::None,
        eval: eval_cl_star_is_star_closure,
    },
    CheckDef {
        name: "obs-2-tau-subset-tau-star",
        summary: "observed: every open set is star-open",
        kind: CheckKind::Observation,
        hypothesis: Hypothesis::None,
        eval: eval_tau_subset_tau_star,
    },
    CheckDef {
        name: "obs-3-all-spaces-suitable",
        summary: "observed: every enumerated space is suitable",
        kind: CheckKind::Observation,
        hypothesis: Hypothesis::None,
        eval: eval_all_spaces_suitable,
    },
];

/// Formula encodings for the checks that the identity language can
/// express. The battery cross-validates these against the built-in
/// check bodies; they also serve as replayable documentation of what
/// each check states.
pub static DSL_ENCODED_CHECKS: &[(&str, &str)] = &[
    ("t1a-1-closed-dominates", "forall A:closed: d(A) <= A"),
    ("t1a-2-empty-diamond", "d(0) = 0"),
    ("t1a-3-diamond-closed", "forall A: cl(d(A)) = d(A)"),
    ("t1a-4-diamond-contractive", "forall A: d(d(A)) <= d(A)"),
    ("t1a-5-diamond-monotone", "forall A, B: A <= B => d(A) <= d(B)"),
    ("t1a-6-union-additive", "forall A, B: d(A | B) = d(A) | d(B)"),
    ("t1a-7-intersection-subadditive", "forall A, B: d(A & B) <= d(A) & d(B)"),
    ("t2-1-open-cap-diamond", "forall U:open, B: U & d(B) <= d(U & B)"),
    ("c2-2-open-cap-diamond-eq", "forall U:open, B: U & d(B) = U & d(U & B)"),
    ("t3-1-open-subset-diamond", "forall U:open: ccc => U <= d(U)"),
    ("l3-2-nonmember-vanishes", "forall A: notinP(~A) => d(A) = 0"),
    ("l3-3-difference-law", "forall A, B: d(A) - d(B) = d(A - B) - d(B)"),
    (
        "c3-4-union-invariant",
        "forall A, B: notinP(~B) => d(A | B) = d(A) and d(A) = d(A - B)",
    ),
    ("c3-5-open-psi-expansive", "forall U:open: U <= psi(U)"),
    ("psi-1-diamond-dual", "forall A: psi(A) = X - d(X - A)"),
    ("psi-2-open", "forall A: int(psi(A)) = psi(A)"),
    ("psi-3-monotone", "forall A, B: A <= B => psi(A) <= psi(B)"),
    ("psi-4-intersection", "forall A, B: psi(A & B) = psi(A) & psi(B)"),
    ("psi-5-star-open-expansive", "forall U:openstar: U <= psi(U)"),
    ("psi-6-expansive-on-psi", "forall A: psi(A) <= psi(psi(A))"),
    ("psi-8-nonmember-constant", "forall A: notinP(~A) => psi(A) = X - d(X)"),
    ("psi-10-difference-invariant", "forall A, I: notinP(~I) => psi(A - I) = psi(A)"),
    ("psi-11-union-invariant", "forall A, I: notinP(~I) => psi(A | I) = psi(A)"),
    (
        "psi-12-symdiff-invariant",
        "forall A, B: notinP(~((A - B) | (B - A))) => psi(A) = psi(B)",
    ),
    ("c4-4-idempotent", "forall A: suitable => d(d(A)) = d(A)"),
    (
        "t4-7-closure-chain",
        "forall A: A <= d(A) => cl(A) = cld(A) and cld(A) = cl(d(A)) and cl(d(A)) = d(A)",
    ),
    (
        "t4-9-open-intersection-closure",
        "forall A:open, B: suitable => d(A & B) = d(A & d(B)) and d(A & d(B)) = cl(A & d(B))",
    ),
    (
        "c4-10-avoids-full-diamond",
        "forall A:open: suitable and notinP(~A) => A <= X - d(X)",
    ),
];

/// Formulas worth probing by name: conjectured strengthenings that
/// exhaustive search over the small spaces settles one way or the
/// other.
pub static NAMED_PROBES: &[(&str, &str)] = &[
    ("diamond-below-argument", "forall A: d(A) <= A"),
    ("suitability", "forall A: notinP(~A | d(A))"),
    ("diamond-cap-equality", "forall A, B: d(A & B) = d(A) & d(B)"),
];

// ------------------------------------------------------------------
// Battery report.

/// A space in the same shape as the space-file format, so report
/// witnesses can be replayed directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDesc {
    pub n: u8,
    pub open: Vec<u32>,
    pub primal: GeneratorField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorField {
    pub generator: u32,
}

/// One bound variable of a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub var: String,
    pub set: u32,
}

/// The first falsifying space and binding found for a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportWitness {
    pub space: SpaceDesc,
    pub bindings: Vec<Binding>,
}

/// Tally of one check across all spaces of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub pass: u64,
    pub fail: u64,
    pub hypothesis_not_met: u64,
    pub first_witness: Option<ReportWitness>,
}

/// Outcome of running the whole registry over every space of one
/// size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryReport {
    pub n: u8,
    pub spaces: u64,
    pub checks: Vec<CheckTally>,
}

/// Render a space in the space-file shape.
pub fn describe_space(space: &PrimalSpace) -> SpaceDesc {
    SpaceDesc {
        n: space.ground().points(),
        open: space.topology().open_sets().iter().map(|c| c.0).collect(),
        primal: GeneratorField { generator: space.primal().generator().0 },
    }
}

/// Run every registry check over every space with `n` points.
pub fn run_battery(n: u8) -> Result<BatteryReport, CapacityError> {
    let stream = spaces(n)?;
    let mut tallies: Vec<CheckTally> = REGISTRY
        .iter()
        .map(|def| CheckTally {
            name: def.name.to_string(),
            pass: 0,
            fail: 0,
            hypothesis_not_met: 0,
            first_witness: None,
        })
        .collect();
    let mut space_count = 0u64;
    for space in stream {
        space_count += 1;
        let table = OperatorTable::new(space);
        for (def, tally) in REGISTRY.iter().zip(tallies.iter_mut()) {
            match run_check(def, &table) {
                CheckOutcome::Pass => tally.pass += 1,
                CheckOutcome::HypothesisNotMet => tally.hypothesis_not_met += 1,
                CheckOutcome::Fail(witness) => {
                    tally.fail += 1;
                    if tally.first_witness.is_none() {
                        tally.first_witness = Some(ReportWitness {
                            space: describe_space(table.space()),
                            bindings: witness
                                .into_iter()
                                .map(|(var, set)| Binding { var: var.to_string(), set: set.0 })
                                .collect(),
                        });
                    }
                }
            }
        }
    }
    Ok(BatteryReport { n, spaces: space_count, checks: tallies })
}

// ------------------------------------------------------------------
// Counterexample search.

/// A falsifying space and binding found by search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundWitness {
    pub space: SpaceDesc,
    pub bindings: Vec<Binding>,
    /// Spaces examined up to and including the falsifying one.
    pub spaces_scanned: u64,
}

/// Result of scanning every space of every size up to a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Falsified(FoundWitness),
    Exhausted { spaces_scanned: u64 },
}

/// Scan all spaces with 1 to `n_max` points, in enumeration order,
/// for one that falsifies the formula. Spaces where a space-level
/// hypothesis is not met count as scanned but cannot falsify.
pub fn search_counterexample(
    formula: &Formula,
    n_max: u8,
) -> Result<SearchOutcome, CapacityError> {
    if n_max == 0 || n_max > MAX_ENUM_POINTS {
        return Err(CapacityError { requested: n_max });
    }
    let mut scanned = 0u64;
    for n in 1..=n_max {
        for space in spaces(n)? {
            scanned += 1;
            let table = OperatorTable::new(space);
            if let Verdict::Fail(bindings) = eval_formula(formula, &table) {
                return Ok(SearchOutcome::Falsified(FoundWitness {
                    space: describe_space(table.space()),
                    bindings: bindings
                        .into_iter()
                        .map(|(var, set)| Binding { var, set: set.0 })
                        .collect(),
                    spaces_scanned: scanned,
                }));
            }
        }
    }
    Ok(SearchOutcome::Exhausted { spaces_scanned: scanned })
}

/// Scan for a space that satisfies all three necessity conditions yet
/// fails to be suitable — i.e. a gap showing the conditions are not
/// jointly sufficient. (No such space exists among those enumerable
/// here; the search documents that.)
pub fn search_necessity_gap(n_max: u8) -> Result<SearchOutcome, CapacityError> {
    if n_max == 0 || n_max > MAX_ENUM_POINTS {
        return Err(CapacityError { requested: n_max });
    }
    let mut scanned = 0u64;
    for n in 1..=n_max {
        for space in spaces(n)? {
            scanned += 1;
            let table = OperatorTable::new(space);
            let (ca, cb, cc) = necessity_conditions(&table);
            if ca && cb && cc && !table.is_suitable() {
                return Ok(SearchOutcome::Falsified(FoundWitness {
                    space: describe_space(table.space()),
                    bindings: vec![],
                    spaces_scanned: scanned,
                }));
            }
        }
    }
    Ok(SearchOutcome::Exhausted { spaces_scanned: scanned })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::setcore::{GroundSet, SetFamily, SubsetCode};
    use crate::spaces::{Primal, PrimalSpace, Topology};

    fn space(n: u8, open: &[u32], generator: u32) -> PrimalSpace {
        let g = GroundSet::new(n).unwrap();
        let t = Topology::validate(
            g,
            SetFamily::from_codes(open.iter().map(|&c| SubsetCode(c))),
        )
        .unwrap();
        let p = Primal::from_generator(g, SubsetCode(generator)).unwrap();
        PrimalSpace::new(t, p).unwrap()
    }

    fn s1_table() -> OperatorTable {
        OperatorTable::new(space(3, &[0, 1, 7], 0b100))
    }

    #[test]
    fn registry_is_well_formed() {
        assert!(REGISTRY.len() >= 24);
        assert_eq!(REGISTRY.len(), 43);
        let mut names: Vec<&str> = REGISTRY.iter().map(|d| d.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len(), "duplicate check names");
        for required in [
            "t1a-6-union-additive",
            "t1a-2-empty-diamond",
            "t1a-1-closed-dominates",
            "c4-4-idempotent",
            "t3-1-open-subset-diamond",
        ] {
            assert!(find_check(required).is_some(), "missing {required}");
        }
        let psi_count = REGISTRY.iter().filter(|d| d.name.starts_with("psi-")).count();
        assert_eq!(psi_count, 12);
        for def in REGISTRY {
            assert!(!def.summary.is_empty(), "{} has no summary", def.name);
        }
        let observations = REGISTRY
            .iter()
            .filter(|d| d.kind == CheckKind::Observation)
            .count();
        assert_eq!(observations, 3);
    }

    #[test]
    fn fixed_space_outcomes() {
        let table = s1_table();
        for def in REGISTRY {
            let outcome = run_check(def, &table);
            assert!(
                !matches!(outcome, CheckOutcome::Fail(_)),
                "{} failed on the fixed space: {outcome:?}",
                def.name
            );
        }
        // This space is suitable but does not satisfy the
        // closed-complement condition.
        assert_eq!(
            run_check(find_check("t3-1-open-subset-diamond").unwrap(), &table),
            CheckOutcome::HypothesisNotMet
        );
        assert_eq!(
            run_check(find_check("t4-8-star-open-chain").unwrap(), &table),
            CheckOutcome::HypothesisNotMet
        );
        assert_eq!(
            run_check(find_check("c4-4-idempotent").unwrap(), &table),
            CheckOutcome::Pass
        );
        assert_eq!(
            run_check(find_check("obs-3-all-spaces-suitable").unwrap(), &table),
            CheckOutcome::Pass
        );
    }

    #[test]
    fn battery_has_zero_failures_on_small_spaces() {
        let expected_spaces = [2u64, 16, 232];
        let expected_ccc = [1u64, 8, 101];
        for n in 1u8..=3 {
            let report = run_battery(n).unwrap();
            assert_eq!(report.n, n);
            assert_eq!(report.spaces, expected_spaces[n as usize - 1]);
            assert_eq!(report.checks.len(), REGISTRY.len());
            for (tally, def) in report.checks.iter().zip(REGISTRY) {
                assert_eq!(tally.name, def.name);
                assert_eq!(tally.fail, 0, "{} failed somewhere at n={n}", tally.name);
                assert!(tally.first_witness.is_none());
                assert_eq!(
                    tally.pass + tally.hypothesis_not_met,
                    report.spaces,
                    "{} tallies do not sum at n={n}",
                    tally.name
                );
                let expected_skips = match def.hypothesis {
                    Hypothesis::None | Hypothesis::Suitable => 0,
                    Hypothesis::Ccc | Hypothesis::SuitableAndCcc => {
                        report.spaces - expected_ccc[n as usize - 1]
                    }
                };
                assert_eq!(
                    tally.hypothesis_not_met, expected_skips,
                    "{} skip count at n={n}",
                    tally.name
                );
            }
        }
    }

    #[test]
    fn battery_rejects_out_of_range_sizes() {
        assert_eq!(run_battery(0).unwrap_err(), CapacityError { requested: 0 });
        assert_eq!(run_battery(9).unwrap_err(), CapacityError { requested: 9 });
    }

    #[test]
    fn search_finds_the_first_falsifying_space() {
        let formula = parse("forall A: d(A) <= A").unwrap();
        let outcome = search_counterexample(&formula, 3).unwrap();
        assert_eq!(
            outcome,
            SearchOutcome::Falsified(FoundWitness {
                space: SpaceDesc {
                    n: 2,
                    open: vec![0, 3],
                    primal: GeneratorField { generator: 1 },
                },
                bindings: vec![Binding { var: "A".into(), set: 1 }],
                spaces_scanned: 4,
            })
        );
    }

    #[test]
    fn search_refutes_intersection_equality() {
        let (_, text) = NAMED_PROBES
            .iter()
            .find(|(name, _)| *name == "diamond-cap-equality")
            .unwrap();
        let formula = parse(text).unwrap();
        let outcome = search_counterexample(&formula, 3).unwrap();
        assert_eq!(
            outcome,
            SearchOutcome::Falsified(FoundWitness {
                space: SpaceDesc {
                    n: 2,
                    open: vec![0, 3],
                    primal: GeneratorField { generator: 3 },
                },
                bindings: vec![
                    Binding { var: "A".into(), set: 1 },
                    Binding { var: "B".into(), set: 2 },
                ],
                spaces_scanned: 6,
            })
        );
    }

    #[test]
    fn search_exhausts_on_suitability_and_the_necessity_gap() {
        let (_, text) = NAMED_PROBES.iter().find(|(name, _)| *name == "suitability").unwrap();
        let formula = parse(text).unwrap();
        assert_eq!(
            search_counterexample(&formula, 3).unwrap(),
            SearchOutcome::Exhausted { spaces_scanned: 250 }
        );
        assert_eq!(
            search_necessity_gap(3).unwrap(),
            SearchOutcome::Exhausted { spaces_scanned: 250 }
        );
    }

    #[test]
    fn search_rejects_out_of_range_sizes() {
        let formula = parse("forall A: d(A) <= A").unwrap();
        assert_eq!(
            search_counterexample(&formula, 0).unwrap_err(),
            CapacityError { requested: 0 }
        );
        assert_eq!(
            search_counterexample(&formula, 7).unwrap_err(),
            CapacityError { requested: 7 }
        );
        assert_eq!(search_necessity_gap(5).unwrap_err(), CapacityError { requested: 5 });
    }

    #[test]
    fn formula_encodings_agree_with_check_bodies() {
        let encoded: Vec<(&CheckDef, Formula)> = DSL_ENCODED_CHECKS
            .iter()
            .map(|(name, text)| {
                let def = find_check(name).unwrap_or_else(|| panic!("unknown check {name}"));
                let formula =
                    parse(text).unwrap_or_else(|e| panic!("{name} does not parse: {e}"));
                (def, formula)
            })
            .collect();
        assert!(encoded.len() >= 20);
        for n in 1u8..=3 {
            for space in spaces(n).unwrap() {
                let table = OperatorTable::new(space);
                for (def, formula) in &encoded {
                    let outcome = run_check(def, &table);
                    let verdict = eval_formula(formula, &table);
                    let agree = matches!(
                        (&outcome, &verdict),
                        (CheckOutcome::Pass, Verdict::Pass)
                            | (CheckOutcome::HypothesisNotMet, Verdict::HypothesisNotMet)
                    ) || match (&outcome, &verdict) {
                        (CheckOutcome::Fail(registry_w), Verdict::Fail(formula_w)) => {
                            registry_w.len() == formula_w.len()
                                && registry_w.iter().zip(formula_w).all(
                                    |((rv, rs), (fv, fs))| rv == fv && rs == fs,
                                )
                        }
                        _ => false,
                    };
                    assert!(
                        agree,
                        "{} disagrees on {:?}: check {:?} vs formula {:?}",
                        def.name,
                        describe_space(table.space()),
                        outcome,
                        verdict
                    );
                }
            }
        }
    }

    #[test]
    fn named_probes_parse() {
        assert_eq!(NAMED_PROBES.len(), 3);
        for (name, text) in NAMED_PROBES {
            assert!(parse(text).is_ok(), "probe {name} does not parse");
        }
    }

    #[test]
    fn report_serializes_deterministically() {
        let a = serde_json::to_string(&run_battery(2).unwrap()).unwrap();
        let b = serde_json::to_string(&run_battery(2).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("{\"n\":2,\"spaces\":16,\"checks\":["));
        assert!(a.contains("\"first_witness\":null"));
        let round: BatteryReport = serde_json::from_str(&a).unwrap();
        assert_eq!(round, run_battery(2).unwrap());
    }

    #[test]
    fn guide_documents_every_check() {
        let chapter = include_str!("../../../book/src/battery.md");
        for def in REGISTRY {
            assert!(
                chapter.contains(def.name),
                "the battery chapter of the guide does not mention {}",
                def.name
            );
        }
    }
}
