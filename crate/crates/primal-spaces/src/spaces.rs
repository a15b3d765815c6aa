//! Topologies, primals, grills, and the spaces they form together.
//!
//! A *topology* on the ground set is a family of open subsets containing `∅`
//! and `X` and closed under pairwise union and intersection (on a finite set
//! that already gives arbitrary unions). A *primal* is a family `𝒫` with
//! `X ∉ 𝒫` that is downward closed and prime: `A∩B ∈ 𝒫` forces `A ∈ 𝒫` or
//! `B ∈ 𝒫`. Its order-dual, with `∅` excluded, upward closure, and primeness
//! under union, is a *grill*; complementing every member of a primal yields a
//! grill and vice versa.
//!
//! Validation reports the first witness in ascending scan order, so error
//! messages are deterministic. Every primal on a finite ground set is the
//! principal family `{A : B ⊄ A}` of a unique generator `B` (the intersection
//! of its non-members), which is why enumeration can walk generators instead
//! of families.

use thiserror::Error;

use crate::setcore::{GroundSet, SetError, SetFamily, SubsetCode};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("open family must contain the empty set")]
    MissingEmpty,
    #[error("open family must contain the full set")]
    MissingFull,
    #[error("open family is not closed under union: {a:?} and {b:?} are open but their union is not")]
    NotUnionClosed { a: SubsetCode, b: SubsetCode },
    #[error("open family is not closed under intersection: {a:?} and {b:?} are open but their intersection is not")]
    NotIntersectionClosed { a: SubsetCode, b: SubsetCode },
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PrimalError {
    #[error("a primal must not contain the full set")]
    ContainsFull,
    #[error("primal is not downward closed: {member:?} is a member but its subset {subset:?} is not")]
    NotDownwardClosed { member: SubsetCode, subset: SubsetCode },
    #[error("primal is not prime: {a:?} ∩ {b:?} is a member but neither {a:?} nor {b:?} is")]
    NotPrime { a: SubsetCode, b: SubsetCode },
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GrillError {
    #[error("a grill must not contain the empty set")]
    ContainsEmpty,
    #[error("grill is not upward closed: {member:?} is a member but its superset {superset:?} is not")]
    NotUpwardClosed { member: SubsetCode, superset: SubsetCode },
    #[error("grill is not prime under union: {a:?} ∪ {b:?} is a member but neither {a:?} nor {b:?} is")]
    NotUnionPrime { a: SubsetCode, b: SubsetCode },
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("topology is over a {topology}-point ground set but the primal is over {primal} points")]
    GroundMismatch { topology: u8, primal: u8 },
}

/// A topology: the validated family of open sets, with per-point minimal
/// neighborhoods precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    ground: GroundSet,
    open: SetFamily,
    closed: SetFamily,
    min_nbhd: Vec<SubsetCode>,
}

impl Topology {
    /// Validates the topology axioms, reporting the first violation in
    /// ascending scan order (union closure is checked before intersection
    /// closure within each member pair).
    pub fn validate(ground: GroundSet, family: SetFamily) -> Result<Topology, TopologyError> {
        for a in family.iter() {
            ground.check_code(a)?;
        }
        if !family.contains(SubsetCode::EMPTY) {
            return Err(TopologyError::MissingEmpty);
        }
        if !family.contains(ground.full()) {
            return Err(TopologyError::MissingFull);
        }
        let members = family.members();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !family.contains(a.union(b)) {
                    return Err(TopologyError::NotUnionClosed { a, b });
                }
                if !family.contains(a.intersection(b)) {
                    return Err(TopologyError::NotIntersectionClosed { a, b });
                }
            }
        }
        let closed = SetFamily::from_codes(
            family.iter().map(|u| SubsetCode(ground.full().0 ^ u.0)),
        );
        let min_nbhd = (0..ground.points())
            .map(|x| {
                SubsetCode(
                    family
                        .iter()
                        .filter(|u| u.contains_point(x))
                        .fold(ground.full().0, |m, u| m & u.0),
                )
            })
            .collect();
        Ok(Topology { ground, open: family, closed, min_nbhd })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn open_sets(&self) -> &SetFamily {
        &self.open
    }

    pub fn is_open(&self, a: SubsetCode) -> bool {
        self.open.contains(a)
    }

    /// Complements of the open sets, ascending.
    pub fn closed_sets(&self) -> &SetFamily {
        &self.closed
    }

    pub fn is_closed(&self, a: SubsetCode) -> bool {
        self.closed.contains(a)
    }

    /// All open sets containing the point, ascending.
    pub fn neighborhoods(&self, x: u8) -> Result<SetFamily, SetError> {
        self.ground.check_point(x)?;
        Ok(SetFamily::from_codes(
            self.open.iter().filter(|u| u.contains_point(x)),
        ))
    }

    /// The intersection of all open sets containing the point — itself open,
    /// and the smallest neighborhood of `x`.
    pub fn minimal_neighborhood(&self, x: u8) -> Result<SubsetCode, SetError> {
        self.ground.check_point(x)?;
        Ok(self.min_nbhd[x as usize])
    }

    pub(crate) fn min_nbhd_unchecked(&self, x: u8) -> u32 {
        self.min_nbhd[x as usize].0
    }

    /// Topological closure: `x ∈ cl(A)` iff every open set containing `x`
    /// meets `A`, i.e. iff the minimal neighborhood of `x` meets `A`.
    pub fn closure(&self, a: SubsetCode) -> Result<SubsetCode, SetError> {
        self.ground.check_code(a)?;
        Ok(SubsetCode(self.closure_bits(a.0)))
    }

    pub(crate) fn closure_bits(&self, a: u32) -> u32 {
        let mut out = 0u32;
        for (x, nbhd) in self.min_nbhd.iter().enumerate() {
            if nbhd.0 & a != 0 {
                out |= 1 << x;
            }
        }
        out
    }

    /// Topological interior: the union of all open subsets of `A`.
    pub fn interior(&self, a: SubsetCode) -> Result<SubsetCode, SetError> {
        self.ground.check_code(a)?;
        Ok(SubsetCode(self.interior_bits(a.0)))
    }

    pub(crate) fn interior_bits(&self, a: u32) -> u32 {
        self.open
            .iter()
            .filter(|u| u.0 & a == u.0)
            .fold(0u32, |m, u| m | u.0)
    }
}

/// A primal: the validated family, its membership mask, and its principal
/// generator (the intersection of all non-members).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Primal {
    ground: GroundSet,
    sets: SetFamily,
    mask: u32,
    generator: SubsetCode,
}

impl Primal {
    /// Validates the primal axioms in order: no full set, downward closure,
    /// primeness under intersection. Witnesses are the first violating pair
    /// in ascending scan order (primeness scans *all* subset pairs, not just
    /// members). The dual characterization — non-membership is upward closed
    /// and closed under intersection — is re-verified internally; the two
    /// must agree on every family.
    pub fn validate(ground: GroundSet, family: SetFamily) -> Result<Primal, PrimalError> {
        for a in family.iter() {
            ground.check_code(a)?;
        }
        let verdict = Self::validate_inner(ground, &family);
        assert_eq!(
            verdict.is_ok(),
            dual_axioms_accept(ground, &family),
            "primal axioms and their dual characterization disagree on {family:?}"
        );
        verdict?;
        let full = ground.full().0;
        let mask = family.mask();
        let generator = SubsetCode(
            (0..=full)
                .filter(|&c| (mask >> c) & 1 == 0)
                .fold(full, |g, c| g & c),
        );
        Ok(Primal { ground, sets: family, mask, generator })
    }

    fn validate_inner(ground: GroundSet, family: &SetFamily) -> Result<(), PrimalError> {
        if family.contains(ground.full()) {
            return Err(PrimalError::ContainsFull);
        }
        if let Some((member, subset)) = crate::setcore::downward_closure_witness(family) {
            return Err(PrimalError::NotDownwardClosed { member, subset });
        }
        let full = ground.full().0;
        for a in 0..=full {
            for b in 0..=full {
                let (a, b) = (SubsetCode(a), SubsetCode(b));
                if family.contains(a.intersection(b)) && !family.contains(a) && !family.contains(b)
                {
                    return Err(PrimalError::NotPrime { a, b });
                }
            }
        }
        Ok(())
    }

    /// The principal primal `{A : B ⊄ A}` — every subset that does not
    /// contain the generator `B`.
    ///
    /// `B = ∅` yields the empty primal (admitted: it satisfies all three
    /// axioms vacuously) and `B = X` the maximal one (every proper subset).
    pub fn from_generator(ground: GroundSet, b: SubsetCode) -> Result<Primal, SetError> {
        ground.check_code(b)?;
        let full = ground.full().0;
        let sets = SetFamily::from_codes(
            (0..=full)
                .filter(|&c| c & b.0 != b.0)
                .map(SubsetCode),
        );
        let mask = sets.mask();
        debug_assert!(Self::validate_inner(ground, &sets).is_ok());
        Ok(Primal { ground, sets, mask, generator: b })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn sets(&self) -> &SetFamily {
        &self.sets
    }

    pub fn contains(&self, a: SubsetCode) -> bool {
        (self.mask >> a.0) & 1 == 1
    }

    pub(crate) fn contains_bits(&self, a: u32) -> bool {
        (self.mask >> a) & 1 == 1
    }

    /// The generator `B` with `self = {A : B ⊄ A}`: the intersection of all
    /// non-members.
    pub fn generator(&self) -> SubsetCode {
        self.generator
    }

    /// The grill `{A^c : A ∈ 𝒫}` obtained by complementing every member.
    pub fn dual_grill(&self) -> Grill {
        let family = SetFamily::from_codes(
            self.sets.iter().map(|a| SubsetCode(self.ground.full().0 ^ a.0)),
        );
        Grill::validate(self.ground, family)
            .expect("the complementwise dual of a valid primal is a valid grill")
    }
}

/// Dual axiom set for a primal: `X` is a non-member, non-membership is upward
/// closed, and non-members are closed under intersection.
fn dual_axioms_accept(ground: GroundSet, family: &SetFamily) -> bool {
    let full = ground.full().0;
    let not_in = |c: u32| !family.contains(SubsetCode(c));
    if !not_in(full) {
        return false;
    }
    for b in 0..=full {
        if not_in(b) {
            for a in 0..=full {
                if b & a == b && !not_in(a) {
                    return false;
                }
            }
        }
    }
    for a in 0..=full {
        for b in 0..=full {
            if not_in(a) && not_in(b) && !not_in(a & b) {
                return false;
            }
        }
    }
    true
}

/// A grill: excludes `∅`, upward closed, prime under union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grill {
    ground: GroundSet,
    sets: SetFamily,
}

impl Grill {
    pub fn validate(ground: GroundSet, family: SetFamily) -> Result<Grill, GrillError> {
        for a in family.iter() {
            ground.check_code(a)?;
        }
        if family.contains(SubsetCode::EMPTY) {
            return Err(GrillError::ContainsEmpty);
        }
        let full = ground.full().0;
        for member in family.iter() {
            for s in 0..=full {
                let s = SubsetCode(s);
                if member.is_subset_of(s) && !family.contains(s) {
                    return Err(GrillError::NotUpwardClosed { member, superset: s });
                }
            }
        }
        for a in 0..=full {
            for b in 0..=full {
                let (a, b) = (SubsetCode(a), SubsetCode(b));
                if family.contains(a.union(b)) && !family.contains(a) && !family.contains(b) {
                    return Err(GrillError::NotUnionPrime { a, b });
                }
            }
        }
        Ok(Grill { ground, sets: family })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn sets(&self) -> &SetFamily {
        &self.sets
    }

    pub fn contains(&self, a: SubsetCode) -> bool {
        self.sets.contains(a)
    }
}

/// A ground set carrying both a topology and a primal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalSpace {
    topology: Topology,
    primal: Primal,
}

impl PrimalSpace {
    pub fn new(topology: Topology, primal: Primal) -> Result<PrimalSpace, SpaceError> {
        if topology.ground() != primal.ground() {
            return Err(SpaceError::GroundMismatch {
                topology: topology.ground().points(),
                primal: primal.ground().points(),
            });
        }
        Ok(PrimalSpace { topology, primal })
    }

    pub fn ground(&self) -> GroundSet {
        self.topology.ground()
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn primal(&self) -> &Primal {
        &self.primal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: u8) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn family(codes: &[u32]) -> SetFamily {
        SetFamily::from_codes(codes.iter().map(|&c| SubsetCode(c)))
    }

    fn s1_topology() -> Topology {
        Topology::validate(ground(3), family(&[0, 1, 7])).unwrap()
    }

    #[test]
    fn topology_validation() {
        assert!(Topology::validate(ground(3), family(&[0, 1, 7])).is_ok());
        assert!(Topology::validate(ground(3), family(&[0, 7])).is_ok());
        assert_eq!(
            Topology::validate(ground(3), family(&[0, 1, 2, 7])),
            Err(TopologyError::NotUnionClosed { a: SubsetCode(1), b: SubsetCode(2) })
        );
        assert_eq!(
            Topology::validate(ground(3), family(&[1, 7])),
            Err(TopologyError::MissingEmpty)
        );
        assert_eq!(
            Topology::validate(ground(3), family(&[0, 1])),
            Err(TopologyError::MissingFull)
        );
        assert!(matches!(
            Topology::validate(ground(2), family(&[0, 3, 4])),
            Err(TopologyError::Set(SetError::CodeOutOfRange { code: 4, n: 2 }))
        ));
    }

    #[test]
    fn neighborhoods_and_minimal() {
        let t = s1_topology();
        assert_eq!(t.neighborhoods(0).unwrap(), family(&[1, 7]));
        assert_eq!(t.minimal_neighborhood(0).unwrap(), SubsetCode(1));
        assert_eq!(t.neighborhoods(2).unwrap(), family(&[7]));
        assert_eq!(t.minimal_neighborhood(2).unwrap(), SubsetCode(7));
        assert_eq!(
            t.neighborhoods(3),
            Err(SetError::PointOutOfRange { point: 3, n: 3 })
        );
    }

    #[test]
    fn closure_and_interior() {
        let t = s1_topology();
        assert_eq!(t.closed_sets(), &family(&[0, 6, 7]));
        assert_eq!(t.closure(SubsetCode(0b010)).unwrap(), SubsetCode(0b110));
        assert_eq!(t.interior(SubsetCode(0b011)).unwrap(), SubsetCode(0b001));
        assert_eq!(t.closure(SubsetCode(0)).unwrap(), SubsetCode(0));
        assert_eq!(t.interior(SubsetCode(7)).unwrap(), SubsetCode(7));
    }

    /// Closure agrees with its from-definition form (intersection of all
    /// closed supersets) and interior with closure by duality, on every
    /// topology over 3 points.
    #[test]
    fn closure_interior_duality_exhaustive() {
        let g = ground(3);
        let full = g.full().0;
        for t in crate::enumerate::topologies(3).unwrap() {
            for a in 0..=full {
                let a = SubsetCode(a);
                let by_def = t
                    .closed_sets()
                    .iter()
                    .filter(|c| a.is_subset_of(*c))
                    .fold(g.full(), |m, c| m.intersection(c));
                assert_eq!(t.closure(a).unwrap(), by_def);
                let dual = g
                    .complement(t.closure(g.complement(a).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(t.interior(a).unwrap(), dual);
            }
        }
    }

    #[test]
    fn primal_validation() {
        assert!(Primal::validate(ground(3), family(&[0, 1, 2, 3])).is_ok());
        assert!(Primal::validate(ground(3), SetFamily::empty()).is_ok());
        assert_eq!(
            Primal::validate(ground(3), family(&[0, 1, 2])),
            Err(PrimalError::NotPrime { a: SubsetCode(3), b: SubsetCode(4) })
        );
        assert_eq!(
            Primal::validate(ground(3), family(&[0, 3])),
            Err(PrimalError::NotDownwardClosed {
                member: SubsetCode(3),
                subset: SubsetCode(1)
            })
        );
        assert_eq!(
            Primal::validate(ground(2), family(&[0, 1, 2, 3])),
            Err(PrimalError::ContainsFull)
        );
    }

    #[test]
    fn principal_generators() {
        let g = ground(3);
        let p = Primal::from_generator(g, SubsetCode(0b100)).unwrap();
        assert_eq!(p.sets(), &family(&[0, 1, 2, 3]));
        assert_eq!(p.generator(), SubsetCode(0b100));

        let empty = Primal::from_generator(g, SubsetCode(0)).unwrap();
        assert!(empty.sets().is_empty());

        let maximal = Primal::from_generator(g, g.full()).unwrap();
        assert_eq!(maximal.sets(), &family(&[0, 1, 2, 3, 4, 5, 6]));

        // validate() recovers the generator as the intersection of non-members
        let p2 = Primal::validate(g, family(&[0, 1, 2, 3])).unwrap();
        assert_eq!(p2.generator(), SubsetCode(0b100));
    }

    #[test]
    fn dual_grills() {
        let g = ground(3);
        let p = Primal::from_generator(g, SubsetCode(0b100)).unwrap();
        assert_eq!(p.dual_grill().sets(), &family(&[4, 5, 6, 7]));

        let empty = Primal::from_generator(g, SubsetCode(0)).unwrap();
        assert!(empty.dual_grill().sets().is_empty());

        let maximal = Primal::from_generator(g, g.full()).unwrap();
        assert_eq!(maximal.dual_grill().sets(), &family(&[1, 2, 3, 4, 5, 6, 7]));
    }

    /// The dual of every primal over up to 4 points satisfies the grill
    /// axioms (dual_grill validates internally, so instantiation suffices).
    #[test]
    fn dual_grill_axioms_exhaustive() {
        for n in 1..=4u8 {
            let g = ground(n);
            for b in 0..=g.full().0 {
                let p = Primal::from_generator(g, SubsetCode(b)).unwrap();
                let grill = p.dual_grill();
                assert_eq!(grill.sets().len(), p.sets().len());
            }
        }
    }

    #[test]
    fn grill_validation() {
        assert_eq!(
            Grill::validate(ground(2), family(&[0, 3])),
            Err(GrillError::ContainsEmpty)
        );
        assert_eq!(
            Grill::validate(ground(2), family(&[1])),
            Err(GrillError::NotUpwardClosed {
                member: SubsetCode(1),
                superset: SubsetCode(3)
            })
        );
        assert_eq!(
            Grill::validate(ground(2), family(&[3])),
            Err(GrillError::NotUnionPrime { a: SubsetCode(1), b: SubsetCode(2) })
        );
        assert!(Grill::validate(ground(2), family(&[1, 3])).is_ok());
    }

    #[test]
    fn space_requires_matching_grounds() {
        let t = s1_topology();
        let p = Primal::from_generator(ground(2), SubsetCode(1)).unwrap();
        assert_eq!(
            PrimalSpace::new(t, p),
            Err(SpaceError::GroundMismatch { topology: 3, primal: 2 })
        );
    }
}
