//! Bit-encoded subsets of a small finite ground set.
//!
//! The ground set is `X = {0, 1, …, n−1}`. A subset is stored as the integer
//! whose bit `i` is set exactly when point `i` belongs to the subset, so set
//! algebra is plain bit arithmetic. Families of subsets are kept as strictly
//! ascending code lists, which gives every enumeration — and therefore every
//! report built on top of one — a single canonical order.

use std::fmt;

use thiserror::Error;

/// Largest supported ground-set size.
///
/// Families over an `n`-point ground set are indexed by the `2^n` subset
/// codes; `n = 5` keeps the characteristic mask of any family inside a `u32`.
pub const MAX_POINTS: u8 = 5;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("ground set must have between 1 and {MAX_POINTS} points, got {0}")]
    Capacity(u8),
    #[error("subset code {code} has bits outside the {n}-point ground set")]
    CodeOutOfRange { code: u32, n: u8 },
    #[error("point {point} is out of range for the {n}-point ground set")]
    PointOutOfRange { point: u8, n: u8 },
}

/// The finite ground set `{0, …, n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSet {
    n: u8,
}

impl GroundSet {
    pub fn new(n: u8) -> Result<GroundSet, SetError> {
        if n == 0 || n > MAX_POINTS {
            return Err(SetError::Capacity(n));
        }
        Ok(GroundSet { n })
    }

    /// Number of points.
    pub fn points(self) -> u8 {
        self.n
    }

    /// The code of the full set `X`.
    pub fn full(self) -> SubsetCode {
        SubsetCode((1u32 << self.n) - 1)
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(self) -> u32 {
        1u32 << self.n
    }

    pub fn check_code(self, a: SubsetCode) -> Result<(), SetError> {
        if a.0 > self.full().0 {
            Err(SetError::CodeOutOfRange { code: a.0, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_point(self, point: u8) -> Result<(), SetError> {
        if point >= self.n {
            Err(SetError::PointOutOfRange { point, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Complement within the ground set. Involutive.
    pub fn complement(self, a: SubsetCode) -> Result<SubsetCode, SetError> {
        self.check_code(a)?;
        Ok(SubsetCode(self.full().0 ^ a.0))
    }

    /// All `2^n` subset codes in ascending order.
    pub fn powerset(self) -> Vec<SubsetCode> {
        (0..=self.full().0).map(SubsetCode).collect()
    }
}

/// A subset of the ground set, encoded as its characteristic bit-vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetCode(pub u32);

impl SubsetCode {
    pub const EMPTY: SubsetCode = SubsetCode(0);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains_point(self, point: u8) -> bool {
        (self.0 >> point) & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetCode) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn union(self, other: SubsetCode) -> SubsetCode {
        SubsetCode(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetCode) -> SubsetCode {
        SubsetCode(self.0 & other.0)
    }

    /// Set difference `self − other`.
    pub fn difference(self, other: SubsetCode) -> SubsetCode {
        SubsetCode(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Roster notation, e.g. `{1,2}`; the empty set prints as `{}`.
    pub fn roster(self) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for point in 0..32 {
            if (self.0 >> point) & 1 == 1 {
                if !first {
                    out.push(',');
                }
                out.push_str(&point.to_string());
                first = false;
            }
        }
        out.push('}');
        out
    }

    /// Binary literal padded to the width of an `n`-point ground set,
    /// e.g. `0b110` for `{1,2}` when `n = 3`.
    pub fn binary(self, n: u8) -> String {
        format!("0b{:0width$b}", self.0, width = n as usize)
    }
}

impl fmt::Debug for SubsetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0b{:b}", self.0)
    }
}

/// A family of subsets, stored as a strictly ascending list of codes.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    members: Vec<SubsetCode>,
}

impl SetFamily {
    /// Canonicalizes: sorts ascending and drops duplicates.
    pub fn from_codes<I: IntoIterator<Item = SubsetCode>>(codes: I) -> SetFamily {
        let mut members: Vec<SubsetCode> = codes.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SetFamily { members }
    }

    pub fn empty() -> SetFamily {
        SetFamily { members: Vec::new() }
    }

    pub fn members(&self) -> &[SubsetCode] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: SubsetCode) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetCode> + '_ {
        self.members.iter().copied()
    }

    /// Characteristic mask of the family: bit `j` is set when subset code `j`
    /// is a member. Within the [`MAX_POINTS`] capacity every code is < 32, so
    /// the mask fits a `u32`.
    pub fn mask(&self) -> u32 {
        self.members.iter().fold(0u32, |m, c| m | (1u32 << c.0))
    }

    /// Rebuilds a family from a characteristic mask.
    pub fn from_mask(mask: u32) -> SetFamily {
        SetFamily {
            members: (0..32).filter(|c| (mask >> c) & 1 == 1).map(SubsetCode).collect(),
        }
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

impl FromIterator<SubsetCode> for SetFamily {
    fn from_iter<I: IntoIterator<Item = SubsetCode>>(iter: I) -> SetFamily {
        SetFamily::from_codes(iter)
    }
}

/// Does the family contain every subset of each of its members?
///
/// On a falsifying family the first witness in ascending scan order is
/// reported by [`downward_closure_witness`].
pub fn is_downward_closed(family: &SetFamily) -> bool {
    downward_closure_witness(family).is_none()
}

/// First `(member, missing_subset)` pair violating downward closure, scanning
/// members ascending and candidate subsets ascending.
pub fn downward_closure_witness(family: &SetFamily) -> Option<(SubsetCode, SubsetCode)> {
    for a in family.iter() {
        for s in 0..=a.0 {
            let s = SubsetCode(s);
            if s.is_subset_of(a) && !family.contains(s) {
                return Some((a, s));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ground_set_bounds() {
        assert_eq!(GroundSet::new(0), Err(SetError::Capacity(0)));
        assert_eq!(GroundSet::new(6), Err(SetError::Capacity(6)));
        for n in 1..=MAX_POINTS {
            let g = GroundSet::new(n).unwrap();
            assert_eq!(g.full().0, (1 << n) - 1);
            assert_eq!(g.subset_count(), 1 << n);
        }
    }

    #[test]
    fn complement_is_involutive_everywhere() {
        for n in 1..=MAX_POINTS {
            let g = GroundSet::new(n).unwrap();
            for a in g.powerset() {
                let c = g.complement(a).unwrap();
                assert_eq!(g.complement(c).unwrap(), a);
                assert_eq!(a.union(c), g.full());
                assert!(a.intersection(c).is_empty());
            }
        }
    }

    #[test]
    fn complement_rejects_out_of_range() {
        let g = GroundSet::new(3).unwrap();
        assert_eq!(
            g.complement(SubsetCode(0b1000)),
            Err(SetError::CodeOutOfRange { code: 8, n: 3 })
        );
    }

    #[test]
    fn powerset_is_ascending_and_complete() {
        let g = GroundSet::new(1).unwrap();
        assert_eq!(g.powerset(), vec![SubsetCode(0), SubsetCode(1)]);
        for n in 1..=MAX_POINTS {
            let g = GroundSet::new(n).unwrap();
            let ps = g.powerset();
            assert_eq!(ps.len() as u32, g.subset_count());
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn downward_closure_examples() {
        let yes = SetFamily::from_codes([0, 1, 2, 3].map(SubsetCode));
        assert!(is_downward_closed(&yes));
        let no = SetFamily::from_codes([0, 3].map(SubsetCode));
        assert_eq!(
            downward_closure_witness(&no),
            Some((SubsetCode(3), SubsetCode(1)))
        );
        let single = SetFamily::from_codes([SubsetCode(0)]);
        assert!(is_downward_closed(&single));
        assert!(is_downward_closed(&SetFamily::empty()));
    }

    #[test]
    fn family_canonicalizes() {
        let f = SetFamily::from_codes([3, 1, 3, 0].map(SubsetCode));
        assert_eq!(f.members(), &[SubsetCode(0), SubsetCode(1), SubsetCode(3)]);
        assert_eq!(f.mask(), 0b1011);
        assert_eq!(SetFamily::from_mask(0b1011), f);
    }

    #[test]
    fn formatting() {
        assert_eq!(SubsetCode(0b110).roster(), "{1,2}");
        assert_eq!(SubsetCode(0b110).binary(3), "0b110");
        assert_eq!(SubsetCode(0).roster(), "{}");
        assert_eq!(SubsetCode(0).binary(3), "0b000");
    }

    proptest! {
        #[test]
        fn set_algebra_laws(a in 0u32..32, b in 0u32..32) {
            let g = GroundSet::new(5).unwrap();
            let (a, b) = (SubsetCode(a), SubsetCode(b));
            prop_assert!(a.intersection(b).is_subset_of(a));
            prop_assert!(a.is_subset_of(a.union(b)));
            prop_assert_eq!(a.difference(b), a.intersection(g.complement(b).unwrap()));
        }

        #[test]
        fn family_mask_round_trips(mask in any::<u32>()) {
            prop_assert_eq!(SetFamily::from_mask(mask).mask(), mask);
        }
    }
}
