//! Equivalence of reflection systems and their enumeration up to equivalence.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use super::closure::{
    circ_closure, circ_closure_add, circ_generators, left_translate, right_translate, ReflectionSystem,
};
use crate::config;
use crate::error::{Error, Result};
use crate::groups::automorphisms::{automorphism_group, conjugation_automorphisms, inner_automorphisms};
use crate::groups::subgroups::generate;
use crate::groups::{build_group, ElementSet, FiniteGroup, GroupAutomorphism, GroupRef, GroupTag};

/// Which automorphisms of `K` are allowed when comparing systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivalenceReading {
    /// The full abstract automorphism group.
    Abstract,
    /// Automorphisms induced by conjugation with unit quaternions normalizing `K`.
    Realized,
}

impl fmt::Display for EquivalenceReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceReading::Abstract => "abstract",
            EquivalenceReading::Realized => "realized",
        })
    }
}

/// The reading used by default; chosen because it reproduces the known copy
/// counts for the binary polyhedral groups.
pub const DEFAULT_READING: EquivalenceReading = EquivalenceReading::Abstract;

/// Automorphisms of the constructed group `tag` under the given reading.
pub fn automorphisms_for(tag: GroupTag, reading: EquivalenceReading) -> Result<Vec<GroupAutomorphism>> {
    let k = build_group(tag)?;
    match reading {
        EquivalenceReading::Abstract => automorphism_group(k.as_ref()),
        EquivalenceReading::Realized => {
            // a finite group of unit quaternions containing the normalizer of K
            let big = match tag {
                GroupTag::T | GroupTag::O => build_group(GroupTag::O)?,
                GroupTag::I => build_group(GroupTag::I)?,
                GroupTag::Dicyclic(2) => {
                    let o = build_group(GroupTag::O)?;
                    return Ok(merge(
                        conjugation_automorphisms(k.as_ref(), o.as_ref(), &embed(&k, &o)?),
                        inner_automorphisms(k.as_ref()),
                    ));
                }
                GroupTag::Dicyclic(n) => build_group(GroupTag::Dicyclic(2 * n))?,
                GroupTag::Cyclic(1) => return Ok(vec![GroupAutomorphism::identity(1)]),
                GroupTag::Cyclic(n) => build_group(GroupTag::Dicyclic(n))?,
            };
            let emb = embed(&k, &big)?;
            Ok(conjugation_automorphisms(k.as_ref(), big.as_ref(), &emb))
        }
    }
}

fn embed(k: &crate::groups::FiniteQuaternionGroup, big: &crate::groups::FiniteQuaternionGroup) -> Result<Vec<usize>> {
    k.embedding_into(big).ok_or_else(|| Error::Construction(format!("{} does not embed in {}", k.tag(), big.tag())))
}

fn merge(a: Vec<GroupAutomorphism>, b: Vec<GroupAutomorphism>) -> Vec<GroupAutomorphism> {
    let mut s: BTreeSet<GroupAutomorphism> = a.into_iter().collect();
    s.extend(b);
    s.into_iter().collect()
}

/// All sets `phi(x L)` for `x^-1` in `L` and `phi` in `autos`.
pub fn equivalence_class(k: &dyn FiniteGroup, autos: &[GroupAutomorphism], l: &ElementSet) -> BTreeSet<ElementSet> {
    let mut out = BTreeSet::new();
    for phi in autos {
        let img = phi.apply_set(l);
        for z in img.iter() {
            out.insert(left_translate(k, &img, k.inv(z)));
        }
    }
    out
}

/// Canonical representative (least set of the class) and class size.
pub fn canonical_key(k: &dyn FiniteGroup, autos: &[GroupAutomorphism], l: &ElementSet) -> (ElementSet, usize) {
    let class = equivalence_class(k, autos, l);
    let n = class.len();
    (class.into_iter().next().expect("class contains l"), n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `L2 = phi(x L1)` (left) or `phi(L1 x)` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub x: usize,
    pub side: Side,
    pub automorphism: GroupAutomorphism,
}

pub fn systems_equivalent(
    l1: &ReflectionSystem,
    l2: &ReflectionSystem,
    autos: &[GroupAutomorphism],
) -> Option<EquivalenceWitness> {
    let k = l1.parent.as_ref();
    if l1.size() != l2.size() {
        return None;
    }
    for x in l1.members.iter() {
        for (side, set) in
            [(Side::Left, left_translate(k, &l1.members, x)), (Side::Right, right_translate(k, &l1.members, x))]
        {
            for phi in autos {
                if phi.apply_set(&set) == l2.members {
                    return Some(EquivalenceWitness { x, side, automorphism: phi.clone() });
                }
            }
        }
    }
    None
}

/// One reflection system per equivalence class, with the number of equivalent copies.
#[derive(Clone, Debug)]
pub struct SystemClass {
    pub system: ReflectionSystem,
    pub copies: usize,
}

/// Enumerate reflection systems of `k` up to equivalence under `autos`.
///
/// Breadth-first over classes of `o`-closed sets containing 1: each class
/// representative is extended by one element and re-closed. Translations by
/// members and automorphisms both commute with closure, so one representative
/// per class suffices.
pub fn enumerate_systems_with(k: &GroupRef, autos: &[GroupAutomorphism]) -> Result<Vec<SystemClass>> {
    let g = k.as_ref();
    let n = g.order();
    if n > config::ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: format!("reflection system enumeration on {}", g.name()),
            size: n,
            bound: config::ENUMERATION_BOUND,
        });
    }
    let start = circ_closure(g, &ElementSet::from_indices(n, [0]));
    let (key0, _) = canonical_key(g, autos, &start);
    let mut classes: HashSet<ElementSet> = HashSet::from([key0.clone()]);
    let mut raw_seen: HashSet<ElementSet> = HashSet::from([start]);
    let mut queue = VecDeque::from([key0]);
    let mut found: Vec<(ElementSet, usize)> = Vec::new();
    let check = |set: &ElementSet, found: &mut Vec<(ElementSet, usize)>| {
        if generate(g, &set.to_vec()).len() == n {
            let (key, size) = canonical_key(g, autos, set);
            found.push((key, size));
        }
    };
    if n == 1 {
        check(&ElementSet::from_indices(1, [0]), &mut found);
    }
    while let Some(rep) = queue.pop_front() {
        for y in 0..n {
            if rep.contains(y) {
                continue;
            }
            let child = circ_closure_add(g, &rep, y);
            if !raw_seen.insert(child.clone()) {
                continue;
            }
            let (key, _) = canonical_key(g, autos, &child);
            if classes.insert(key.clone()) {
                check(&key, &mut found);
                queue.push_back(key);
            }
        }
    }
    found.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(found
        .into_iter()
        .map(|(members, copies)| SystemClass {
            system: ReflectionSystem { parent: k.clone(), generators: circ_generators(g, &members), members },
            copies,
        })
        .collect())
}

/// Enumerate with the default reading.
pub fn enumerate_systems(tag: GroupTag) -> Result<Vec<SystemClass>> {
    enumerate_systems_reading(tag, DEFAULT_READING)
}

pub fn enumerate_systems_reading(tag: GroupTag, reading: EquivalenceReading) -> Result<Vec<SystemClass>> {
    let order = tag.order() as usize;
    if order > config::ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: format!("reflection system enumeration on {tag}"),
            size: order,
            bound: config::ENUMERATION_BOUND,
        });
    }
    let k: GroupRef = build_group(tag)?;
    let autos = automorphisms_for(tag, reading)?;
    enumerate_systems_with(&k, &autos)
}
