//! A finite-model workbench for primal topological spaces.
//!
//! A *primal space* is a finite topological space `(X, τ)` carrying a
//! *primal* `𝒫`: a family of subsets of `X` that excludes `X` itself,
//! is downward closed, and is prime under intersection (`A ∩ B ∈ 𝒫`
//! only if `A ∈ 𝒫` or `B ∈ 𝒫`). Members of the primal play the role
//! of negligible sets; the workbench studies the operators this
//! structure induces:
//!
//! - the **diamond** `d(A)`: the points whose every open
//!   neighborhood meets `A` in a set with complement outside the
//!   primal (so `d` is a kind of primal-aware closure of `A`);
//! - **psi** `Ψ(A) = X − d(X − A)`, its open dual;
//! - the **diamond closure** `cl⋄(A) = A ∪ d(A)` and **diamond
//!   interior** `int⋄(A) = A ∩ Ψ(A)`;
//! - the **star topology** `τ⋄`, computable by three independent
//!   routes that the check battery verifies agree.
//!
//! Everything is exact: subsets are bitmasks over at most five
//! points, and all quantifiers are finite scans. The crate offers
//!
//! - validated core types ([`setcore`], [`spaces`]) and the operator
//!   table ([`operators`]);
//! - exhaustive enumeration of all topologies, primals, and spaces
//!   of a given size ([`enumerate`]);
//! - a small formula language for set identities with a
//!   counterexample-reporting evaluator ([`dsl`]);
//! - a named battery of laws checked across every enumerated space,
//!   plus counterexample search ([`verify`]);
//! - a command-line interface over JSON space files ([`cli`]).
//!
//! ```
//! use primal_spaces::operators::OperatorTable;
//! use primal_spaces::setcore::{GroundSet, SetFamily, SubsetCode};
//! use primal_spaces::spaces::{Primal, PrimalSpace, Topology};
//!
//! // Three points {0,1,2}; opens ∅, {0}, X; primal generated by {2}:
//! // the sets that do not contain point 2.
//! let ground = GroundSet::new(3).unwrap();
//! let topology = Topology::validate(
//!     ground,
//!     SetFamily::from_codes([0b000, 0b001, 0b111].map(SubsetCode)),
//! )
//! .unwrap();
//! let primal = Primal::from_generator(ground, SubsetCode(0b100)).unwrap();
//! let space = PrimalSpace::new(topology, primal).unwrap();
//!
//! let table = OperatorTable::new(space);
//! assert_eq!(table.diamond(SubsetCode(0b100)), SubsetCode(0b110));
//! assert!(table.is_suitable());
//! ```

pub mod cli;
pub mod dsl;
pub mod enumerate;
pub mod operators;
pub mod setcore;
pub mod spaces;
pub mod verify;

// Compile and run every Rust block in the guide as a doctest, so the
// book cannot drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/spaces.md")]
    mod spaces {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/dsl.md")]
    mod dsl {}
    #[doc = include_str!("../../../book/src/battery.md")]
    mod battery {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
