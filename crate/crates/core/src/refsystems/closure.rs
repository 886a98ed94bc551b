use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::groups::subgroups::{generate, type_name};
use crate::groups::{ElementSet, FiniteGroup, GroupRef};

/// A subset of `K` containing 1, closed under `a o b = a b^-1 a`, generating `K`.
#[derive(Clone)]
pub struct ReflectionSystem {
    pub parent: GroupRef,
    pub members: ElementSet,
    pub generators: Vec<usize>,
}

impl fmt::Debug for ReflectionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}({})", self.members.len(), self.parent.name())
    }
}

impl PartialEq for ReflectionSystem {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl ReflectionSystem {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// Partition into orbits of `x -> a x^-1 a`.
    pub fn orbit_partition(&self) -> Vec<ElementSet> {
        orbit_partition(self.parent.as_ref(), &self.members)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "parent": self.parent.name(),
            "size": self.size(),
            "members": self.members.to_vec(),
            "generators": self.generators,
            "orbit_partition": self.orbit_partition().iter().map(ElementSet::to_vec).collect::<Vec<_>>(),
        })
    }
}

/// Least superset of `seed` closed under `o`; no generation check.
pub fn circ_closure(k: &dyn FiniteGroup, seed: &ElementSet) -> ElementSet {
    let mut set = seed.clone();
    let mut items: Vec<usize> = set.to_vec();
    let mut done = 0;
    // every pair (x, y) with max index below `done` in `items` has been handled
    while done < items.len() {
        let x = items[done];
        done += 1;
        let mut fresh = Vec::new();
        for &y in &items[..done] {
            for z in [k.circ(x, y), k.circ(y, x)] {
                if set.insert(z) {
                    fresh.push(z);
                }
            }
        }
        items.extend(fresh);
    }
    set
}

/// Add `extra` to an already closed set and close again.
pub fn circ_closure_add(k: &dyn FiniteGroup, closed: &ElementSet, extra: usize) -> ElementSet {
    if closed.contains(extra) {
        return closed.clone();
    }
    let mut set = closed.clone();
    set.insert(extra);
    let mut items: Vec<usize> = closed.to_vec();
    let mut done = items.len();
    items.push(extra);
    while done < items.len() {
        let x = items[done];
        done += 1;
        let mut fresh = Vec::new();
        for &y in &items[..done] {
            for z in [k.circ(x, y), k.circ(y, x)] {
                if set.insert(z) {
                    fresh.push(z);
                }
            }
        }
        items.extend(fresh);
    }
    set
}

pub fn is_circ_closed(k: &dyn FiniteGroup, set: &ElementSet) -> bool {
    set.iter().all(|a| set.iter().all(|b| set.contains(k.circ(a, b))))
}

/// Close `seed` (which must contain the identity) and require the result to generate `K`.
pub fn close_system(k: &GroupRef, seed: &[usize]) -> Result<ReflectionSystem> {
    let n = k.order();
    if !seed.contains(&0) {
        return Err(Error::InvalidArgument("seed must contain the identity".into()));
    }
    if let Some(&bad) = seed.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidArgument(format!("element index {bad} out of range")));
    }
    let members = circ_closure(k.as_ref(), &ElementSet::from_indices(n, seed.iter().copied()));
    let span = generate(k.as_ref(), &members.to_vec());
    if span.len() != n {
        return Err(Error::NotReflectionSystem(format!(
            "closure of size {} generates a subgroup {} of order {}, not all of {}",
            members.len(),
            type_name(k.as_ref(), &span),
            span.len(),
            k.name()
        )));
    }
    Ok(ReflectionSystem { parent: k.clone(), members, generators: seed.to_vec() })
}

/// Wrap an already closed, generating set.
pub fn system_from_set(k: &GroupRef, members: ElementSet) -> Result<ReflectionSystem> {
    if !members.contains(0) || !is_circ_closed(k.as_ref(), &members) {
        return Err(Error::NotReflectionSystem("set is not closed under o".into()));
    }
    if generate(k.as_ref(), &members.to_vec()).len() != k.order() {
        return Err(Error::NotReflectionSystem("set does not generate K".into()));
    }
    let generators = circ_generators(k.as_ref(), &members);
    Ok(ReflectionSystem { parent: k.clone(), members, generators })
}

/// A small set containing 1 whose `o`-closure is `set`.
pub fn circ_generators(k: &dyn FiniteGroup, set: &ElementSet) -> Vec<usize> {
    let mut gens = vec![0];
    let mut span = circ_closure(k, &ElementSet::from_indices(k.order(), [0]));
    let mut order: Vec<usize> = set.to_vec();
    order.sort_by(|&a, &b| k.element_order(b).cmp(&k.element_order(a)).then(a.cmp(&b)));
    for x in order {
        if span.len() == set.len() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = circ_closure_add(k, &span, x);
        }
    }
    gens
}

/// Closure of `{b}` under `x -> a x^-1 a` for `a` in `l`.
pub fn orbit_in(k: &dyn FiniteGroup, l: &ElementSet, b: usize) -> ElementSet {
    let mut orbit = ElementSet::from_indices(k.order(), [b]);
    let mut stack = vec![b];
    while let Some(x) = stack.pop() {
        for a in l.iter() {
            let y = k.circ(a, x);
            if orbit.insert(y) {
                stack.push(y);
            }
        }
    }
    orbit
}

pub fn system_orbit(l: &ReflectionSystem, b: usize) -> Result<ElementSet> {
    if !l.contains(b) {
        return Err(Error::InvalidArgument(format!("element {b} is not in the system")));
    }
    Ok(orbit_in(l.parent.as_ref(), &l.members, b))
}

pub fn orbit_partition(k: &dyn FiniteGroup, l: &ElementSet) -> Vec<ElementSet> {
    let mut seen = ElementSet::new(k.order());
    let mut out = Vec::new();
    for b in l.iter() {
        if seen.contains(b) {
            continue;
        }
        let o = orbit_in(k, l, b);
        seen.union_with(&o);
        out.push(o);
    }
    out
}

/// `x L`.
pub fn left_translate(k: &dyn FiniteGroup, l: &ElementSet, x: usize) -> ElementSet {
    l.map(|y| k.mul(x, y))
}

/// `L x`.
pub fn right_translate(k: &dyn FiniteGroup, l: &ElementSet, x: usize) -> ElementSet {
    l.map(|y| k.mul(y, x))
}

/// Whether `(x y^-1)^n x` lies in the closure of `{1, x, y}`.
pub fn power_lemma_check(k: &dyn FiniteGroup, x: usize, y: usize, n: usize) -> bool {
    let l = circ_closure(k, &ElementSet::from_indices(k.order(), [0, x, y]));
    let z = k.mul(k.power(k.mul(x, k.inv(y)), n), x);
    l.contains(z)
}

/// An injective map `psi: L1 -> L2` with `psi(a o b) = psi(a) o psi(b)`, if one exists.
pub fn circ_embedding(
    k1: &dyn FiniteGroup,
    l1: &ElementSet,
    k2: &dyn FiniteGroup,
    l2: &ElementSet,
) -> Option<Vec<(usize, usize)>> {
    if l1.len() > l2.len() {
        return None;
    }
    let gens = circ_generators(k1, l1);
    let targets: Vec<usize> = l2.to_vec();
    let mut map = vec![usize::MAX; k1.order()];
    let mut used = ElementSet::new(k2.order());
    let mut assigned: Vec<usize> = Vec::new();
    if embed_search(k1, k2, &gens, 0, &targets, &mut map, &mut used, &mut assigned) {
        Some(l1.iter().map(|x| (x, map[x])).collect())
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn embed_search(
    k1: &dyn FiniteGroup,
    k2: &dyn FiniteGroup,
    gens: &[usize],
    i: usize,
    targets: &[usize],
    map: &mut Vec<usize>,
    used: &mut ElementSet,
    assigned: &mut Vec<usize>,
) -> bool {
    if i == gens.len() {
        return true;
    }
    let g = gens[i];
    if map[g] != usize::MAX {
        return embed_search(k1, k2, gens, i + 1, targets, map, used, assigned);
    }
    for &t in targets {
        if used.contains(t) {
            continue;
        }
        let mark = assigned.len();
        if propagate(k1, k2, g, t, map, used, assigned)
            && embed_search(k1, k2, gens, i + 1, targets, map, used, assigned)
        {
            return true;
        }
        for x in assigned.drain(mark..) {
            used.remove(map[x]);
            map[x] = usize::MAX;
        }
    }
    false
}

/// Assign `g -> t` and close the partial map under `o`; false on a conflict.
fn propagate(
    k1: &dyn FiniteGroup,
    k2: &dyn FiniteGroup,
    g: usize,
    t: usize,
    map: &mut [usize],
    used: &mut ElementSet,
    assigned: &mut Vec<usize>,
) -> bool {
    let mut queue = vec![(g, t)];
    while let Some((x, y)) = queue.pop() {
        if map[x] != usize::MAX {
            if map[x] != y {
                return false;
            }
            continue;
        }
        if used.contains(y) {
            return false;
        }
        map[x] = y;
        used.insert(y);
        assigned.push(x);
        let snapshot: Vec<usize> = assigned.clone();
        for &a in &snapshot {
            let (ia, ix) = (map[a], map[x]);
            queue.push((k1.circ(a, x), k2.circ(ia, ix)));
            queue.push((k1.circ(x, a), k2.circ(ix, ia)));
        }
    }
    true
}
