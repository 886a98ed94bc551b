//! Isomorphism screening, verification of explicit maps, and a bounded
//! search for reflection-preserving isomorphisms.

use serde::Serialize;

use super::model::{ReflectionGroup, Triple};
use super::orbits::{reflection_orbit_types, reflection_order_census};
use crate::config;
use crate::error::{Error, Result};
use crate::groups::automorphisms::{extend_map, word_tree};
use crate::groups::subgroups::generate;
use crate::groups::{ElementSet, FiniteGroup};
use crate::refsystems::circ_embedding;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reasons", rename_all = "lowercase")]
pub enum IsoVerdict {
    Distinct(Vec<String>),
    Candidate(Vec<String>),
}

impl IsoVerdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, IsoVerdict::Distinct(_))
    }
}

/// Compare order, reflection count, reflection orders and orbit types; for
/// different `|K|` also require the `{C2, 1}` pattern with `L1` inside `L2`.
pub fn iso_prescreen(g1: &ReflectionGroup, g2: &ReflectionGroup) -> IsoVerdict {
    let mut reasons = Vec::new();
    if g1.size() != g2.size() {
        reasons.push(format!("orders {} and {}", g1.size(), g2.size()));
    }
    let (r1, r2) = (g1.reflection_count(), g2.reflection_count());
    if r1 != r2 {
        reasons.push(format!("reflection counts {r1} and {r2}"));
    }
    let (c1, c2) = (reflection_order_census(g1), reflection_order_census(g2));
    if c1 != c2 {
        reasons.push(format!("reflection orders {c1:?} and {c2:?}"));
    }
    let (o1, o2) = (reflection_orbit_types(g1), reflection_orbit_types(g2));
    if o1.multiset() != o2.multiset() {
        reasons.push(format!("orbit types {o1} and {o2}"));
    }
    if !reasons.is_empty() {
        return IsoVerdict::Distinct(reasons);
    }
    let (k1, k2) = (g1.k().order(), g2.k().order());
    if k1 != k2 {
        let (small, big) = if k1 < k2 { (g1, g2) } else { (g2, g1) };
        let pattern = small.h().len() == 2
            && big.h().len() == 1
            && big.k().order() == 2 * small.k().order()
            && big.l().len() == small.l().len() + 2;
        if !pattern {
            return IsoVerdict::Distinct(vec![format!("|K| differ ({k1}, {k2}) without the C2/1 pattern")]);
        }
        if circ_embedding(small.k().as_ref(), small.l(), big.k().as_ref(), big.l()).is_none() {
            return IsoVerdict::Distinct(vec!["smaller L does not embed in the larger".into()]);
        }
        return IsoVerdict::Candidate(vec!["C2/1 pattern with L embedding".into()]);
    }
    IsoVerdict::Candidate(vec!["invariants agree".into()])
}

fn indices(g: &ReflectionGroup, ts: &[Triple]) -> Result<Vec<usize>> {
    ts.iter()
        .map(|&t| g.index_of(t).ok_or_else(|| Error::InvalidArgument(format!("{t:?} is not in {}", g.label()))))
        .collect()
}

/// Extend a map on generators to all of `g1`; `None` unless it is a bijective homomorphism.
pub fn extend_generator_map(
    g1: &ReflectionGroup,
    g2: &ReflectionGroup,
    generator_map: &[(Triple, Triple)],
) -> Result<Option<Vec<usize>>> {
    let src: Vec<Triple> = generator_map.iter().map(|p| p.0).collect();
    let dst: Vec<Triple> = generator_map.iter().map(|p| p.1).collect();
    let gens = indices(g1, &src)?;
    let images = indices(g2, &dst)?;
    if g1.size() != g2.size() {
        return Ok(None);
    }
    let tree = word_tree(g1, &gens);
    if tree.len() != g1.size() {
        return Err(Error::InvalidArgument("map is not defined on a generating set".into()));
    }
    let Some(map) = extend_map(g1, g2, &gens, &images, &tree) else {
        return Ok(None);
    };
    let image = ElementSet::from_indices(g2.size(), map.iter().copied());
    Ok((image.len() == g2.size()).then_some(map))
}

pub fn verify_isomorphism(
    g1: &ReflectionGroup,
    g2: &ReflectionGroup,
    generator_map: &[(Triple, Triple)],
) -> Result<bool> {
    Ok(extend_generator_map(g1, g2, generator_map)?.is_some())
}

/// Whether a full element map sends reflections onto reflections.
pub fn preserves_reflections(g1: &ReflectionGroup, g2: &ReflectionGroup, map: &[usize]) -> bool {
    (0..g1.size()).all(|i| g1.is_reflection(g1.triple(i)) == g2.is_reflection(g2.triple(map[i])))
}

/// Outcome of the bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchOutcome {
    Isomorphic(Vec<(Triple, Triple)>),
    NotIsomorphic,
    Skipped { order: usize, bound: usize },
}

fn reflection_generators(g: &ReflectionGroup) -> Vec<usize> {
    let refl: Vec<usize> = (0..g.size()).filter(|&i| g.is_reflection(g.triple(i))).collect();
    let mut gens: Vec<usize> = Vec::new();
    let mut span = ElementSet::from_indices(g.size(), [0]);
    for r in refl {
        if span.len() == g.size() {
            break;
        }
        if !span.contains(r) {
            gens.push(r);
            span = generate(g, &gens);
        }
    }
    gens
}

/// Search for an isomorphism mapping reflections to reflections, by
/// backtracking over images of a reflection generating set.
pub fn find_isomorphism(g1: &ReflectionGroup, g2: &ReflectionGroup) -> SearchOutcome {
    let bound = config::ISO_SEARCH_BOUND;
    if g1.size() > bound {
        return SearchOutcome::Skipped { order: g1.size(), bound };
    }
    if iso_prescreen(g1, g2).is_distinct() {
        return SearchOutcome::NotIsomorphic;
    }
    let gens = reflection_generators(g1);
    let tree = word_tree(g1, &gens);
    let targets: Vec<usize> = (0..g2.size()).filter(|&i| g2.is_reflection(g2.triple(i))).collect();
    let mut images = Vec::with_capacity(gens.len());
    let found = search(g1, g2, &gens, &targets, &tree, &mut images);
    match found {
        Some(map) => SearchOutcome::Isomorphic(gens.iter().map(|&x| (g1.triple(x), g2.triple(map[x]))).collect()),
        None => SearchOutcome::NotIsomorphic,
    }
}

fn search(
    g1: &ReflectionGroup,
    g2: &ReflectionGroup,
    gens: &[usize],
    targets: &[usize],
    tree: &[(usize, usize, usize)],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend_map(g1, g2, gens, images, tree)?;
        let image = ElementSet::from_indices(g2.size(), map.iter().copied());
        return (image.len() == g2.size() && preserves_reflections(g1, g2, &map)).then_some(map);
    }
    let x = gens[depth];
    for &t in targets {
        if g1.element_order(x) != g2.element_order(t) || images.contains(&t) {
            continue;
        }
        let consistent =
            (0..depth).all(|d| g1.element_order(g1.mul(gens[d], x)) == g2.element_order(g2.mul(images[d], t)));
        if !consistent {
            continue;
        }
        images.push(t);
        if let Some(map) = search(g1, g2, gens, targets, tree, images) {
            return Some(map);
        }
        images.pop();
    }
    None
}
