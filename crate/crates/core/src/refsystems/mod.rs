//! Reflection systems: subsets of `K` closed under `a o b = a b^-1 a`.

pub mod closure;
pub mod dicyclic;
pub mod enumerate;
pub mod gamma;

pub use closure::{
    circ_closure, circ_embedding, close_system, orbit_partition, power_lemma_check, system_from_set, system_orbit,
    ReflectionSystem,
};
pub use dicyclic::{dicyclic_system, omega_count_formula, omega_set, DicyclicIndex};
pub use enumerate::{
    automorphisms_for, canonical_key, enumerate_systems, enumerate_systems_reading, enumerate_systems_with,
    systems_equivalent, EquivalenceReading, SystemClass, DEFAULT_READING,
};
pub use gamma::system_from_automorphism;

#[cfg(test)]
mod tests;
