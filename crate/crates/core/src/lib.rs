//! Exact classification of imprimitive rank-two quaternionic reflection groups.

pub mod classify;
pub mod config;
pub mod error;
pub mod exactarith;
pub mod groups;
pub mod numtheory;
pub mod refgroups;
pub mod refsystems;

pub use error::{Error, Result};
