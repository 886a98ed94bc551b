//! Reflection systems obtained from an involution of `K/H`.

use super::closure::is_circ_closed;
use crate::error::{Error, Result};
use crate::groups::subgroups::{is_normal, left_cosets};
use crate::groups::{ElementSet, FiniteGroup};

/// `L_gamma = {x : gamma(xH) = x^-1 H}` for a map `gamma` on the cosets of `H`
/// (indexed as by `left_cosets`).
pub fn system_from_automorphism(k: &dyn FiniteGroup, h: &ElementSet, gamma: &[usize]) -> Result<ElementSet> {
    if !is_normal(k, h) {
        return Err(Error::InvalidArgument("H is not normal".into()));
    }
    let (coset, reps) = left_cosets(k, h);
    if gamma.len() != reps.len() || gamma.iter().any(|&c| c >= reps.len()) {
        return Err(Error::InvalidArgument("gamma is not a map on K/H".into()));
    }
    if (0..reps.len()).any(|c| gamma[gamma[c]] != c) {
        return Err(Error::InvalidArgument("gamma is not an involution on K/H".into()));
    }
    let set = ElementSet::from_indices(k.order(), (0..k.order()).filter(|&x| gamma[coset[x]] == coset[k.inv(x)]));
    if !is_circ_closed(k, &set) {
        return Err(Error::NotReflectionSystem("L_gamma is not closed under o".into()));
    }
    Ok(set)
}

/// The coset map induced by an automorphism `phi` of `K` preserving `H`.
pub fn coset_map_of(k: &dyn FiniteGroup, h: &ElementSet, phi: &[usize]) -> Vec<usize> {
    let (coset, reps) = left_cosets(k, h);
    reps.iter().map(|&r| coset[phi[r]]).collect()
}
