//! Permutations, enumerated permutation groups, conjugacy classes,
//! coset actions and bounded subgroup enumeration.
//!
//! Full enumeration is the deliberate strategy: the groups of interest
//! have order up to a few million, and once the element table exists
//! every question (conjugacy, fixers, characters) reduces to exact set
//! operations in element-index space. No stabilizer chains anywhere.

pub mod action;
pub mod exec;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod store;
pub mod subgroup;

pub use action::{is_primitive, orbit_of, orbits, CosetAction};
pub use exec::ExecMode;
pub use group::{ClassTable, GroupError, OpScratch, PermGroup, DEFAULT_ENUMERATION_BOUND};
pub use lattice::{SubgroupClass, SubgroupLattice, DEFAULT_LATTICE_BOUND};
pub use perm::{Perm, PermError};
pub use subgroup::{centralizer, centralizer_of_perm, normalizer, point_stabilizer, setwise_stabilizer, Subgroup};
