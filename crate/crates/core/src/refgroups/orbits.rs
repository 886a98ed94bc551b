//! Conjugation orbits of root subgroups, written `n_1 R_1, ..., n_m R_m`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::ReflectionGroup;
use crate::groups::subgroups::type_name;
use crate::groups::{ElementSet, FiniteGroup};
use crate::refsystems::closure::circ_generators;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReflectionOrbitType {
    /// `(orbit size, root subgroup type)`.
    pub parts: Vec<(usize, String)>,
}

impl fmt::Display for ReflectionOrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|(n, r)| format!("{n}{r}")).collect();
        write!(f, "{}", s.join(","))
    }
}

impl ReflectionOrbitType {
    /// The parts as a sorted multiset.
    pub fn multiset(&self) -> Vec<(usize, String)> {
        let mut v = self.parts.clone();
        v.sort();
        v
    }

    /// Number of root subgroups counted with multiplicity.
    pub fn root_count(&self) -> usize {
        self.parts.iter().map(|(n, _)| n).sum()
    }
}

/// Orbits of `lg` under `c -> h c` for `h` in `h_gens` and `c -> b c^-1 b` for
/// `b` in `l_gens`: conjugation of antidiagonal reflections by the generators
/// `diag(h, 1)` and `[[0,b],[b^-1,0]]`.
pub fn nondiagonal_orbits_in(
    k: &dyn FiniteGroup,
    lg: &ElementSet,
    l_gens: &[usize],
    h_gens: &[usize],
) -> Vec<ElementSet> {
    let n = k.order();
    let mut seen = ElementSet::new(n);
    let mut out = Vec::new();
    for c in lg.iter() {
        if seen.contains(c) {
            continue;
        }
        let mut orbit = ElementSet::from_indices(n, [c]);
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            let images = h_gens.iter().map(|&h| k.mul(h, x)).chain(l_gens.iter().map(|&b| k.circ(b, x)));
            for y in images.collect::<Vec<_>>() {
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.union_with(&orbit);
        out.push(orbit);
    }
    out
}

/// `2H` first (when `H` is nontrivial), then the antidiagonal orbit sizes ascending.
pub fn orbit_type_from(k: &dyn FiniteGroup, lg: &ElementSet, l_gens: &[usize], h: &ElementSet) -> ReflectionOrbitType {
    let h_gens: Vec<usize> = h.iter().filter(|&x| x != 0).collect();
    let mut parts = Vec::new();
    if h.len() > 1 {
        parts.push((2, type_name(k, h)));
    }
    let mut sizes: Vec<usize> = nondiagonal_orbits_in(k, lg, l_gens, &h_gens).iter().map(ElementSet::len).collect();
    sizes.sort();
    parts.extend(sizes.into_iter().map(|s| (s, "C2".to_string())));
    ReflectionOrbitType { parts }
}

pub fn nondiagonal_orbits(g: &ReflectionGroup) -> Vec<ElementSet> {
    let k = g.k().as_ref();
    let h_gens: Vec<usize> = g.h().iter().filter(|&x| x != 0).collect();
    nondiagonal_orbits_in(k, &g.nondiagonal_reflections(), &circ_generators(k, g.l()), &h_gens)
}

pub fn reflection_orbit_types(g: &ReflectionGroup) -> ReflectionOrbitType {
    let k = g.k().as_ref();
    orbit_type_from(k, &g.nondiagonal_reflections(), &circ_generators(k, g.l()), g.h())
}

/// Element order of each reflection, counted.
pub fn reflection_order_census(g: &ReflectionGroup) -> BTreeMap<usize, usize> {
    let k = g.k().as_ref();
    let mut out = BTreeMap::new();
    for h in g.h().iter().filter(|&h| h != 0) {
        *out.entry(k.element_order(h)).or_insert(0) += 2;
    }
    let lg = g.nondiagonal_reflections().len();
    if lg > 0 {
        *out.entry(2).or_insert(0) += lg;
    }
    out
}
