//! Classification of reflection groups `G_K(L, H)` and the isomorphisms between them.

pub mod golden;
pub mod index;
pub mod isos;
pub mod records;
pub mod render;

pub use golden::{run_suite, CheckRow, SuiteReport, SUITES};
pub use index::{cohen_index, lambda_set, missing_from_cohen, IndexQuadruple};
pub use isos::{
    corollary_discriminant, corollary_pair_search, corollary_partner, family_isomorphism, find_isomorphisms,
    non_iso_certificate, polyhedral_isomorphism, CorollaryKind, CorollaryPair, IsoPair, NonIsoCertificate,
};
pub use records::{
    classify, classify_dicyclic, classify_k, classify_k_groups, dicyclic_orbit_types, dicyclic_record,
    dicyclic_reflection_group, dicyclic_special, dicyclic_special_record, order_scan, ClassificationRecord,
};
pub use render::render_table;
