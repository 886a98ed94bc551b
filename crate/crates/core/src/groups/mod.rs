//! Finite subgroups of the unit quaternions and the group-theoretic machinery
//! built on their Cayley tables.

pub mod automorphisms;
pub mod construct;
pub mod dicyclic_model;
pub mod subgroups;
pub mod table;

pub use automorphisms::{automorphism_group, GroupAutomorphism};
pub use construct::{build_group, element_order_census, named, FiniteQuaternionGroup, GroupTag};
pub use dicyclic_model::DicyclicModel;
pub use subgroups::{commutator_subgroup, normal_subgroups, Subgroup};
pub use table::{ElementSet, FiniteGroup, GroupRef};

use std::sync::Arc;

/// The constructed group as a trait object.
pub fn group_ref(tag: GroupTag) -> crate::Result<GroupRef> {
    let g: Arc<FiniteQuaternionGroup> = build_group(tag)?;
    Ok(g)
}
