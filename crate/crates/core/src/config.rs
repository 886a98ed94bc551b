//! Size bounds for the exhaustive searches and explicit constructions.

/// Largest group handled by the automorphism search.
pub const AUTOMORPHISM_BOUND: usize = 120;

/// Largest group handled by reflection-system enumeration.
pub const ENUMERATION_BOUND: usize = 120;

/// Largest reflection group handed to the generator-map isomorphism search.
pub const ISO_SEARCH_BOUND: usize = 4608;

/// Default bound on explicitly constructed groups.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

pub const MAX_ORDER_ENV: &str = "QUATREFL_MAX_ORDER";

/// Bound on explicit constructions, overridable through `QUATREFL_MAX_ORDER`.
pub fn max_order() -> usize {
    std::env::var(MAX_ORDER_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_ORDER)
}
