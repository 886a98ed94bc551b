//! Imprimitive rank-two reflection groups `G_K(L, H)` and their rank-n analogues.

pub mod iso;
pub mod matrices;
pub mod model;
pub mod monomial;
pub mod orbits;
pub mod rank_n;

pub use iso::{find_isomorphism, iso_prescreen, verify_isomorphism, IsoVerdict, SearchOutcome};
pub use matrices::{realize_matrices, QuatMatrix2};
pub use model::{build_reflection_group, gamma_table, ReflectionGroup, Triple};
pub use monomial::{generate_from_reflections, minimal_diagonal_subgroup, MonomialGroup};
pub use orbits::{reflection_orbit_types, ReflectionOrbitType};
pub use rank_n::{rank_n_group, RankNDescriptor};

#[cfg(test)]
mod tests;
