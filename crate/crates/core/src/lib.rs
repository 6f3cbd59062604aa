//! Finite permutation groups, exhaustive subgroup lattices, permutizers and
//! structural classifiers (supersoluble, w-supersoluble, Ore dispersive,
//! metanilpotent) for groups small enough to enumerate.
//!
//! Groups are stored with every element listed in canonical order and
//! subgroups are bitsets over that order; all predicates are exact.

pub mod arith;
pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod format;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod permutizer;
pub mod quotient;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use format::{parse_group_file, write_group_file};
pub use group::{FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use lattice::{SubgroupLattice, DEFAULT_SUBGROUP_CAP};
pub use perm::Permutation;
pub use quotient::{quotient_group, Quotient};
