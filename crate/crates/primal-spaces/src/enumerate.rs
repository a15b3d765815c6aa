//! Exhaustive, deterministic streams of every topology, primal, and primal
//! space on a small ground set.
//!
//! Orders are pure functions of `n`:
//!
//! * topologies ascend by their family bitmask (the characteristic mask of
//!   the open family inside the powerset), so the indiscrete topology is
//!   first and the discrete one last;
//! * primals ascend by principal generator, `0ⱼ` through `X` — on a finite
//!   ground set every primal is `{A : B ⊄ A}` for exactly one `B`, so this
//!   walk is complete (test-guarded by a full family scan at `n ≤ 3`);
//! * spaces are the Cartesian product in topology-major order.
//!
//! Topologies are generated brute-force over all subset families for
//! `n ≤ 3` and by closure-driven growth (add one candidate open set, close
//! under pairwise union/intersection, dedupe) at `n = 4`; the two methods
//! are equated at `n ≤ 3` in tests.

use std::collections::HashSet;

use thiserror::Error;

use crate::setcore::{GroundSet, SetFamily, SubsetCode};
use crate::spaces::{Primal, PrimalSpace, Topology};

/// Full enumeration is supported for `1 ≤ n ≤ 4`.
pub const MAX_ENUM_POINTS: u8 = 4;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("enumeration supports 1 to 4 points; requested n = {requested}")]
pub struct CapacityError {
    pub requested: u8,
}

fn check_capacity(n: u8) -> Result<GroundSet, CapacityError> {
    if n == 0 || n > MAX_ENUM_POINTS {
        return Err(CapacityError { requested: n });
    }
    Ok(GroundSet::new(n).expect("enumeration capacity is within set capacity"))
}

/// All topologies on `n` points, ascending by family bitmask.
pub fn topologies(n: u8) -> Result<TopologyStream, CapacityError> {
    let g = check_capacity(n)?;
    let items: Vec<Topology> = topology_family_masks(n)
        .into_iter()
        .map(|fm| {
            Topology::validate(g, SetFamily::from_mask(fm))
                .expect("enumerated family satisfies the topology axioms")
        })
        .collect();
    Ok(TopologyStream { items: items.into_iter() })
}

/// All primals on `n` points, ascending by principal generator.
pub fn primals(n: u8) -> Result<PrimalStream, CapacityError> {
    let g = check_capacity(n)?;
    let items: Vec<Primal> = (0..=g.full().0)
        .map(|b| Primal::from_generator(g, SubsetCode(b)).expect("generator code in range"))
        .collect();
    Ok(PrimalStream { items: items.into_iter() })
}

/// All primal spaces on `n` points: topology-major product of
/// [`topologies`] and [`primals`].
pub fn spaces(n: u8) -> Result<SpaceStream, CapacityError> {
    let g = check_capacity(n)?;
    let mut items = Vec::new();
    for t in topologies(n)? {
        for b in 0..=g.full().0 {
            let p = Primal::from_generator(g, SubsetCode(b)).expect("generator code in range");
            items.push(PrimalSpace::new(t.clone(), p).expect("grounds match by construction"));
        }
    }
    Ok(SpaceStream { items: items.into_iter() })
}

macro_rules! stream {
    ($(#[$doc:meta])* $name:ident yields $item:ty) => {
        $(#[$doc])*
        #[derive(Debug, Clone)]
        pub struct $name {
            items: std::vec::IntoIter<$item>,
        }

        impl Iterator for $name {
            type Item = $item;

            fn next(&mut self) -> Option<$item> {
                self.items.next()
            }

            fn size_hint(&self) -> (usize, Option<usize>) {
                self.items.size_hint()
            }
        }

        impl ExactSizeIterator for $name {}
    };
}

stream!(
    /// Deterministic stream from [`topologies`].
    TopologyStream yields Topology
);
stream!(
    /// Deterministic stream from [`primals`].
    PrimalStream yields Primal
);
stream!(
    /// Deterministic stream from [`spaces`].
    SpaceStream yields PrimalSpace
);

fn topology_family_masks(n: u8) -> Vec<u32> {
    if n <= 3 {
        brute_force_family_masks(n)
    } else {
        closure_family_masks(n)
    }
}

/// Every family bitmask over the `2^n` subset codes that passes the
/// topology axioms, ascending. Feasible for `n ≤ 3` (256 candidate masks);
/// the oracle against which the closure-driven generator is checked.
pub(crate) fn brute_force_family_masks(n: u8) -> Vec<u32> {
    let ncodes = 1u32 << n;
    let full = ncodes - 1;
    let mut out = Vec::new();
    for fm in 0..(1u64 << ncodes) {
        let fm = fm as u32;
        if fm & 1 == 0 || (fm >> full) & 1 == 0 {
            continue;
        }
        if family_mask_is_topology(fm, ncodes) {
            out.push(fm);
        }
    }
    out
}

fn family_mask_is_topology(fm: u32, ncodes: u32) -> bool {
    for a in 0..ncodes {
        if (fm >> a) & 1 == 0 {
            continue;
        }
        for b in (a + 1)..ncodes {
            if (fm >> b) & 1 == 0 {
                continue;
            }
            if (fm >> (a | b)) & 1 == 0 || (fm >> (a & b)) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

fn close_family_mask(mut fm: u32, ncodes: u32) -> u32 {
    loop {
        let mut grown = fm;
        for a in 0..ncodes {
            if (fm >> a) & 1 == 0 {
                continue;
            }
            for b in a..ncodes {
                if (fm >> b) & 1 == 1 {
                    grown |= 1 << (a | b);
                    grown |= 1 << (a & b);
                }
            }
        }
        if grown == fm {
            return fm;
        }
        fm = grown;
    }
}

/// Closure-driven generation: grow each known topology by one absent set,
/// close under pairwise union/intersection, dedupe; sort ascending at the
/// end so the result order matches the brute-force oracle.
pub(crate) fn closure_family_masks(n: u8) -> Vec<u32> {
    let ncodes = 1u32 << n;
    let full = ncodes - 1;
    let seed = 1u32 | (1u32 << full);
    let mut seen: HashSet<u32> = HashSet::new();
    let mut work = vec![seed];
    seen.insert(seed);
    while let Some(fm) = work.pop() {
        for s in 0..ncodes {
            if (fm >> s) & 1 == 1 {
                continue;
            }
            let grown = close_family_mask(fm | (1 << s), ncodes);
            if seen.insert(grown) {
                work.push(grown);
            }
        }
    }
    let mut out: Vec<u32> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity_bounds() {
        assert_eq!(topologies(0).unwrap_err(), CapacityError { requested: 0 });
        assert_eq!(primals(5).unwrap_err(), CapacityError { requested: 5 });
        assert_eq!(spaces(9).unwrap_err(), CapacityError { requested: 9 });
        assert!(topologies(4).is_ok());
    }

    #[test]
    fn topology_counts() {
        assert_eq!(topologies(1).unwrap().len(), 1);
        assert_eq!(topologies(2).unwrap().len(), 4);
        assert_eq!(topologies(3).unwrap().len(), 29);
        assert_eq!(topologies(4).unwrap().len(), 355);
    }

    #[test]
    fn closure_generation_matches_brute_force() {
        for n in 1..=3u8 {
            assert_eq!(closure_family_masks(n), brute_force_family_masks(n), "n = {n}");
        }
    }

    #[test]
    fn n2_topologies_in_order() {
        let families: Vec<Vec<u32>> = topologies(2)
            .unwrap()
            .map(|t| t.open_sets().iter().map(|c| c.0).collect())
            .collect();
        assert_eq!(
            families,
            vec![vec![0, 3], vec![0, 1, 3], vec![0, 2, 3], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn primal_generators_ascending() {
        let gens: Vec<u32> = primals(3).unwrap().map(|p| p.generator().0).collect();
        assert_eq!(gens, (0..=7).collect::<Vec<u32>>());
    }

    /// Exactly the principal families pass the primal axioms: scanning every
    /// family of subsets (all `2^(2^n)` of them) finds precisely the `2^n`
    /// enumerated primals. `Primal::validate` also re-verifies its dual
    /// characterization on every one of these families internally.
    #[test]
    fn primal_enumeration_complete() {
        for n in 1..=3u8 {
            let g = GroundSet::new(n).unwrap();
            let ncodes = 1u32 << n;
            let by_generator: HashSet<u32> =
                primals(n).unwrap().map(|p| p.sets().mask()).collect();
            assert_eq!(by_generator.len(), 1 << n);
            for fm in 0..(1u64 << ncodes) as u32 {
                let family = SetFamily::from_mask(fm);
                let valid = Primal::validate(g, family).is_ok();
                assert_eq!(valid, by_generator.contains(&fm), "n = {n}, mask {fm:#b}");
            }
        }
    }

    #[test]
    fn space_counts() {
        assert_eq!(spaces(1).unwrap().len(), 2);
        assert_eq!(spaces(2).unwrap().len(), 16);
        assert_eq!(spaces(3).unwrap().len(), 232);
        assert_eq!(spaces(4).unwrap().len(), 355 * 16);
    }

    #[test]
    fn streams_are_deterministic() {
        let describe = |n: u8| -> Vec<(Vec<u32>, u32)> {
            spaces(n)
                .unwrap()
                .map(|s| {
                    (
                        s.topology().open_sets().iter().map(|c| c.0).collect(),
                        s.primal().generator().0,
                    )
                })
                .collect()
        };
        assert_eq!(describe(3), describe(3));
        // topology-major: the first ground-set-full+1 spaces share topology 0
        let first: Vec<(Vec<u32>, u32)> = describe(2).into_iter().take(5).collect();
        assert_eq!(first[0], (vec![0, 3], 0));
        assert_eq!(first[3], (vec![0, 3], 3));
        assert_eq!(first[4], (vec![0, 1, 3], 0));
    }
}
