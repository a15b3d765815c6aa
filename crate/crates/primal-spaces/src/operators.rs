//! The operator suite of a primal space.
//!
//! For a space `(X, τ, 𝒫)` and `A ⊆ X`:
//!
//! * `diamond(A)` — `{x : every open U ∋ x has A^c ∪ U^c ∈ 𝒫}`, the
//!   primal-derived local operator (written `d` in the DSL).
//! * `cl_diamond(A) = A ∪ diamond(A)` and its dual
//!   `int_diamond(A) = A ∩ psi(A)`.
//! * `psi(A)` — `{x : some open U ∋ x has (U−A)^c ∉ 𝒫}`, which always equals
//!   `X − diamond(X−A)`.
//! * the star topology `τ⋄ = {A : diamond(A^c) ⊆ A^c}`, constructible by
//!   three independent routes that agree on every space.
//! * `is_suitable` — whether `A^c ∪ diamond(A) ∉ 𝒫` for every `A`, and
//!   `closed_complement_condition` — whether every proper closed set is a
//!   member of `𝒫`.
//!
//! Fast paths use the minimal neighborhood `N(x)`: because membership in `𝒫`
//! is downward closed and `N(x)` is the least open set containing `x`, the
//! `∀U` / `∃U` quantifiers collapse to one test against `N(x)`. The literal
//! all-`U` evaluations are kept as oracles and cross-asserted.

use crate::setcore::{SetError, SetFamily, SubsetCode};
use crate::spaces::{PrimalSpace, Topology};

/// `{x : ∀U ∈ τ(x), A^c ∪ U^c ∈ 𝒫}`, evaluated via minimal neighborhoods.
///
/// Debug builds cross-assert the literal all-`U` evaluation
/// ([`diamond_literal`]); the two are also equated exhaustively in tests.
pub fn diamond(space: &PrimalSpace, a: SubsetCode) -> Result<SubsetCode, SetError> {
    space.ground().check_code(a)?;
    let out = diamond_bits(space, a.0);
    debug_assert_eq!(out, diamond_literal_bits(space, a.0));
    Ok(SubsetCode(out))
}

/// The defining quantifier of [`diamond`] evaluated literally over every
/// open neighborhood (the slow oracle).
pub fn diamond_literal(space: &PrimalSpace, a: SubsetCode) -> Result<SubsetCode, SetError> {
    space.ground().check_code(a)?;
    Ok(SubsetCode(diamond_literal_bits(space, a.0)))
}

pub(crate) fn diamond_bits(space: &PrimalSpace, a: u32) -> u32 {
    let full = space.ground().full().0;
    let ac = full ^ a;
    let mut out = 0u32;
    for x in 0..space.ground().points() {
        let nbhd = space.topology().min_nbhd_unchecked(x);
        if space.primal().contains_bits(ac | (full ^ nbhd)) {
            out |= 1 << x;
        }
    }
    out
}

fn diamond_literal_bits(space: &PrimalSpace, a: u32) -> u32 {
    let full = space.ground().full().0;
    let ac = full ^ a;
    let mut out = 0u32;
    'point: for x in 0..space.ground().points() {
        for u in space.topology().open_sets().iter() {
            if u.contains_point(x) && !space.primal().contains_bits(ac | (full ^ u.0)) {
                continue 'point;
            }
        }
        out |= 1 << x;
    }
    out
}

/// `{x : ∃U ∈ τ(x), (U−A)^c ∉ 𝒫}`, computed through the identity
/// `psi(A) = X − diamond(X−A)` and asserted equal to the existential
/// definition ([`psi_existential`]) on every call. Disagreement would be an
/// implementation bug, so it panics rather than returning either value.
pub fn psi(space: &PrimalSpace, a: SubsetCode) -> Result<SubsetCode, SetError> {
    space.ground().check_code(a)?;
    let full = space.ground().full().0;
    let via_diamond = full ^ diamond_bits(space, full ^ a.0);
    let via_definition = psi_existential_bits(space, a.0);
    assert_eq!(
        via_diamond, via_definition,
        "the two evaluation routes for psi disagree on {a:?}; this is a bug"
    );
    Ok(SubsetCode(via_diamond))
}

/// The defining existential quantifier of [`psi`] evaluated literally over
/// every open neighborhood.
pub fn psi_existential(space: &PrimalSpace, a: SubsetCode) -> Result<SubsetCode, SetError> {
    space.ground().check_code(a)?;
    Ok(SubsetCode(psi_existential_bits(space, a.0)))
}

pub(crate) fn psi_existential_bits(space: &PrimalSpace, a: u32) -> u32 {
    let full = space.ground().full().0;
    let mut out = 0u32;
    'point: for x in 0..space.ground().points() {
        for u in space.topology().open_sets().iter() {
            if u.contains_point(x) && !space.primal().contains_bits(full ^ (u.0 & !a & full)) {
                out |= 1 << x;
                continue 'point;
            }
        }
    }
    out
}

/// `cl^⋄(A) = A ∪ diamond(A)`.
pub fn cl_diamond(space: &PrimalSpace, a: SubsetCode) -> Result<SubsetCode, SetError> {
    let d = diamond(space, a)?;
    Ok(a.union(d))
}

/// `int^⋄(A) = A ∩ psi(A)`, the dual of [`cl_diamond`]; equals the
/// star-topology interior of `A`.
pub fn int_diamond(space: &PrimalSpace, a: SubsetCode) -> Result<SubsetCode, SetError> {
    let p = psi(space, a)?;
    Ok(a.intersection(p))
}

/// Whether `A^c ∪ diamond(A) ∉ 𝒫` for every `A ⊆ X`.
///
/// On these finite models the answer is always `true`: every primal here is
/// principal with some generator `B`, which makes
/// `diamond(A) = cl(A ∩ B) ⊇ A ∩ B`, and `A^c ∪ diamond(A) ⊇ A^c ∪ (A∩B) ⊇ B`
/// can then never be a member. The scan is kept as the honest definition (and
/// [`suitability_witness`] would expose any counterexample).
pub fn is_suitable(space: &PrimalSpace) -> bool {
    suitability_witness(space).is_none()
}

/// First `A` (ascending) with `A^c ∪ diamond(A) ∈ 𝒫`, if any.
pub fn suitability_witness(space: &PrimalSpace) -> Option<SubsetCode> {
    let full = space.ground().full().0;
    (0..=full)
        .find(|&a| space.primal().contains_bits((full ^ a) | diamond_bits(space, a)))
        .map(SubsetCode)
}

/// Whether every proper closed set of the topology is a member of `𝒫`.
pub fn closed_complement_condition(space: &PrimalSpace) -> bool {
    let full = space.ground().full();
    space
        .topology()
        .closed_sets()
        .iter()
        .filter(|&c| c != full)
        .all(|c| space.primal().contains(c))
}

/// The three independent constructions of the star topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarRoute {
    /// `{A : diamond(A^c) ⊆ A^c}` — sets whose complement is fixed by
    /// `cl^⋄`; uses the minimal-neighborhood diamond.
    Fixpoint,
    /// Close `{T ∩ P : T open, P ∉ 𝒫}` under pairwise unions (the family is
    /// already intersection-closed and contains `∅` and `X`).
    Base,
    /// `{A : A ⊆ psi(A)}`, with `psi` evaluated by its existential
    /// definition.
    Psi,
}

/// The star topology `τ⋄` with the route that produced it and the generating
/// family `{T ∩ P : T open, P ∉ 𝒫}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalTopology {
    pub route: StarRoute,
    pub base_family: SetFamily,
    pub topology: Topology,
}

/// `{T ∩ P : T ∈ τ, P ∉ 𝒫}`, the family whose union-closure is `τ⋄`.
pub fn base_family(space: &PrimalSpace) -> SetFamily {
    let full = space.ground().full().0;
    SetFamily::from_codes(space.topology().open_sets().iter().flat_map(|t| {
        (0..=full)
            .filter(|&p| !space.primal().contains_bits(p))
            .map(move |p| SubsetCode(t.0 & p))
    }))
}

/// Builds `τ⋄` by the chosen route. Every route yields a valid topology on
/// every space (the three families also coincide — that agreement is what
/// the check battery asserts, so it is deliberately *not* assumed here).
pub fn primal_topology(space: &PrimalSpace, route: StarRoute) -> PrimalTopology {
    let full = space.ground().full().0;
    let base = base_family(space);
    let family = match route {
        StarRoute::Fixpoint => SetFamily::from_codes(
            (0..=full)
                .filter(|&a| diamond_bits(space, full ^ a) & a == 0)
                .map(SubsetCode),
        ),
        StarRoute::Base => {
            let mut mask = base.mask();
            loop {
                let mut grown = mask;
                let members: Vec<u32> =
                    (0..=full).filter(|&c| (mask >> c) & 1 == 1).collect();
                for &a in &members {
                    for &b in &members {
                        grown |= 1 << (a | b);
                    }
                }
                if grown == mask {
                    break;
                }
                mask = grown;
            }
            SetFamily::from_mask(mask)
        }
        StarRoute::Psi => SetFamily::from_codes(
            (0..=full)
                .filter(|&a| a & psi_existential_bits(space, a) == a)
                .map(SubsetCode),
        ),
    };
    let topology = Topology::validate(space.ground(), family)
        .expect("every star-topology route yields a valid topology");
    PrimalTopology { route, base_family: base, topology }
}

/// Eagerly computed operator tables for one space: `diamond` and `psi` on
/// every subset, the star topology, and the two space-level predicates.
/// Immutable after construction, so freely shareable.
#[derive(Debug, Clone)]
pub struct OperatorTable {
    space: PrimalSpace,
    diamond: Vec<SubsetCode>,
    psi: Vec<SubsetCode>,
    star: PrimalTopology,
    suitable: bool,
    ccc: bool,
}

impl OperatorTable {
    pub fn new(space: PrimalSpace) -> OperatorTable {
        let full = space.ground().full().0;
        let diamond: Vec<SubsetCode> =
            (0..=full).map(|a| SubsetCode(diamond_bits(&space, a))).collect();
        let psi: Vec<SubsetCode> = (0..=full)
            .map(|a| {
                let value = full ^ diamond[(full ^ a) as usize].0;
                debug_assert_eq!(value, psi_existential_bits(&space, a));
                SubsetCode(value)
            })
            .collect();
        let star = primal_topology(&space, StarRoute::Fixpoint);
        let suitable = is_suitable(&space);
        let ccc = closed_complement_condition(&space);
        OperatorTable { space, diamond, psi, star, suitable, ccc }
    }

    pub fn space(&self) -> &PrimalSpace {
        &self.space
    }

    pub(crate) fn full_bits(&self) -> u32 {
        self.space.ground().full().0
    }

    /// Memoized [`diamond`]. Panics on a code outside the ground set.
    pub fn diamond(&self, a: SubsetCode) -> SubsetCode {
        self.diamond[a.0 as usize]
    }

    /// Memoized [`psi`]. Panics on a code outside the ground set.
    pub fn psi(&self, a: SubsetCode) -> SubsetCode {
        self.psi[a.0 as usize]
    }

    pub fn cl_diamond(&self, a: SubsetCode) -> SubsetCode {
        a.union(self.diamond(a))
    }

    pub fn int_diamond(&self, a: SubsetCode) -> SubsetCode {
        a.intersection(self.psi(a))
    }

    /// The star topology `τ⋄` (fixpoint route).
    pub fn star_topology(&self) -> &Topology {
        &self.star.topology
    }

    /// The generating family `{T ∩ P : T open, P ∉ 𝒫}`.
    pub fn base_family(&self) -> &SetFamily {
        &self.star.base_family
    }

    /// Topological closure *in the star topology* (not `cl^⋄`; the battery
    /// records that the two agree on every space here).
    pub fn star_closure(&self, a: SubsetCode) -> SubsetCode {
        self.star.topology.closure(a).expect("code validated by caller")
    }

    /// Topological interior in the star topology.
    pub fn star_interior(&self, a: SubsetCode) -> SubsetCode {
        self.star.topology.interior(a).expect("code validated by caller")
    }

    pub fn is_suitable(&self) -> bool {
        self.suitable
    }

    pub fn closed_complement_condition(&self) -> bool {
        self.ccc
    }

    pub(crate) fn d_of(&self, a: u32) -> u32 {
        self.diamond[a as usize].0
    }

    pub(crate) fn psi_of(&self, a: u32) -> u32 {
        self.psi[a as usize].0
    }

    pub(crate) fn cl_of(&self, a: u32) -> u32 {
        self.space.topology().closure_bits(a)
    }

    pub(crate) fn int_of(&self, a: u32) -> u32 {
        self.space.topology().interior_bits(a)
    }

    pub(crate) fn cld_of(&self, a: u32) -> u32 {
        a | self.d_of(a)
    }

    pub(crate) fn intd_of(&self, a: u32) -> u32 {
        a & self.psi_of(a)
    }

    pub(crate) fn in_p(&self, a: u32) -> bool {
        self.space.primal().contains_bits(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::GroundSet;
    use crate::spaces::Primal;

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

    fn s1() -> PrimalSpace {
        space(3, &[0, 1, 7], 0b100)
    }

    fn table(s: &PrimalSpace, f: impl Fn(u32) -> u32) -> Vec<u32> {
        (0..=s.ground().full().0).map(f).collect()
    }

    #[test]
    fn s1_diamond_table() {
        let s = s1();
        assert_eq!(
            table(&s, |a| diamond(&s, SubsetCode(a)).unwrap().0),
            vec![0, 0, 0, 0, 6, 6, 6, 6]
        );
        for a in 0..=7 {
            assert_eq!(
                diamond(&s, SubsetCode(a)).unwrap(),
                diamond_literal(&s, SubsetCode(a)).unwrap()
            );
        }
    }

    #[test]
    fn s1_psi_table() {
        let s = s1();
        assert_eq!(
            table(&s, |a| psi(&s, SubsetCode(a)).unwrap().0),
            vec![1, 1, 1, 1, 7, 7, 7, 7]
        );
        for a in 0..=7 {
            assert_eq!(
                psi(&s, SubsetCode(a)).unwrap(),
                psi_existential(&s, SubsetCode(a)).unwrap()
            );
        }
    }

    #[test]
    fn s1_derived_operators() {
        let s = s1();
        assert_eq!(
            table(&s, |a| cl_diamond(&s, SubsetCode(a)).unwrap().0),
            vec![0, 1, 2, 3, 6, 7, 6, 7]
        );
        assert_eq!(
            table(&s, |a| int_diamond(&s, SubsetCode(a)).unwrap().0),
            vec![0, 1, 0, 1, 4, 5, 6, 7]
        );
        // int^⋄ is the complement-dual of cl^⋄
        let g = s.ground();
        for a in 0..=7 {
            let a = SubsetCode(a);
            let dual = g
                .complement(cl_diamond(&s, g.complement(a).unwrap()).unwrap())
                .unwrap();
            assert_eq!(int_diamond(&s, a).unwrap(), dual);
        }
    }

    #[test]
    fn s1_star_topology_all_routes() {
        let s = s1();
        let want: Vec<u32> = vec![0, 1, 4, 5, 6, 7];
        for route in [StarRoute::Fixpoint, StarRoute::Base, StarRoute::Psi] {
            let built = primal_topology(&s, route);
            let members: Vec<u32> =
                built.topology.open_sets().iter().map(|c| c.0).collect();
            assert_eq!(members, want, "route {route:?}");
        }
        // here the generating family happens to be the whole topology already
        let members: Vec<u32> = base_family(&s).iter().map(|c| c.0).collect();
        assert_eq!(members, want);
    }

    #[test]
    fn empty_primal_gives_discrete_star() {
        let s = space(3, &[0, 1, 7], 0);
        let star = primal_topology(&s, StarRoute::Fixpoint).topology;
        assert_eq!(star.open_sets().len(), 8);
        // diamond vanishes everywhere
        assert_eq!(table(&s, |a| diamond_bits(&s, a)), vec![0; 8]);
    }

    #[test]
    fn indiscrete_maximal_gives_indiscrete_star() {
        let s = space(3, &[0, 7], 7);
        assert_eq!(
            table(&s, |a| diamond_bits(&s, a)),
            vec![0, 7, 7, 7, 7, 7, 7, 7]
        );
        let star = primal_topology(&s, StarRoute::Psi).topology;
        let members: Vec<u32> = star.open_sets().iter().map(|c| c.0).collect();
        assert_eq!(members, vec![0, 7]);
        assert!(is_suitable(&s));
        assert!(closed_complement_condition(&s));
    }

    #[test]
    fn suitability_examples() {
        assert!(is_suitable(&s1()));
        assert_eq!(suitability_witness(&s1()), None);
        // Discrete topology with generator {0,1}: diamond(A) = A ∩ {0,1}, so
        // A^c ∪ diamond(A) always contains the generator and never lands in
        // the primal — suitable like every space on these model sizes (the
        // check battery pins that universally).
        let d = space(3, &[0, 1, 2, 3, 4, 5, 6, 7], 0b011);
        assert_eq!(table(&d, |a| diamond_bits(&d, a)), vec![0, 1, 2, 3, 0, 1, 2, 3]);
        assert!(is_suitable(&d));
        assert!(!closed_complement_condition(&d));
    }

    #[test]
    fn closed_complement_examples() {
        assert!(!closed_complement_condition(&s1()));
        // indiscrete: only proper closed set is ∅, a member of any nonempty primal
        assert!(closed_complement_condition(&space(3, &[0, 7], 1)));
        // discrete + maximal primal: every proper subset is a member
        assert!(closed_complement_condition(&space(
            2,
            &[0, 1, 2, 3],
            0b11
        )));
    }

    #[test]
    fn operator_table_matches_free_functions() {
        let s = s1();
        let t = OperatorTable::new(s.clone());
        for a in 0..=7 {
            let a = SubsetCode(a);
            assert_eq!(t.diamond(a), diamond(&s, a).unwrap());
            assert_eq!(t.psi(a), psi(&s, a).unwrap());
            assert_eq!(t.cl_diamond(a), cl_diamond(&s, a).unwrap());
            assert_eq!(t.int_diamond(a), int_diamond(&s, a).unwrap());
        }
        assert!(t.is_suitable());
        assert!(!t.closed_complement_condition());
        let members: Vec<u32> =
            t.star_topology().open_sets().iter().map(|c| c.0).collect();
        assert_eq!(members, vec![0, 1, 4, 5, 6, 7]);
        // star closure/interior on the S1 fixture; {2} is not
        // star-closed (its complement 0b011 is not star-open), so its
        // star closure grows to {1,2}.
        assert_eq!(t.star_closure(SubsetCode(0b100)).0, 0b110);
        assert_eq!(t.star_interior(SubsetCode(0b010)).0, 0);
        assert_eq!(t.star_interior(SubsetCode(0b011)).0, 0b001);
    }

    /// The fast evaluations agree with the literal definitions on every
    /// subset of every space with up to 3 points.
    #[test]
    fn fast_paths_equal_literal_definitions_exhaustively() {
        for n in 1..=3u8 {
            for s in crate::enumerate::spaces(n).unwrap() {
                let full = s.ground().full().0;
                for a in 0..=full {
                    let a = SubsetCode(a);
                    assert_eq!(
                        diamond(&s, a).unwrap(),
                        diamond_literal(&s, a).unwrap()
                    );
                    assert_eq!(psi(&s, a).unwrap(), psi_existential(&s, a).unwrap());
                }
            }
        }
    }

    /// All three star-topology routes agree on every space with up to 3
    /// points.
    #[test]
    fn star_routes_agree_exhaustively() {
        for n in 1..=3u8 {
            for s in crate::enumerate::spaces(n).unwrap() {
                let fix = primal_topology(&s, StarRoute::Fixpoint).topology;
                let base = primal_topology(&s, StarRoute::Base).topology;
                let psi_route = primal_topology(&s, StarRoute::Psi).topology;
                assert_eq!(fix, base);
                assert_eq!(fix, psi_route);
                // τ ⊆ τ⋄
                for u in s.topology().open_sets().iter() {
                    assert!(fix.is_open(u));
                }
            }
        }
    }
}
