//! Subgroups of `K wr S_2` generated by monomial reflections.

use serde_json::Value;

use super::model::{anti_reflection, triple_inv, triple_is_reflection, triple_mul, Triple};
use crate::config;
use crate::error::{Error, Result};
use crate::groups::subgroups::{generate, type_name};
use crate::groups::{ElementSet, GroupRef, Subgroup};
use crate::refsystems::closure::circ_generators;

fn encode(n: usize, t: Triple) -> usize {
    (usize::from(t.s) * n + t.x) * n + t.y
}

fn decode(n: usize, i: usize) -> Triple {
    Triple { x: (i / n) % n, y: i % n, s: (i / (n * n)) as u8 }
}

/// A subgroup of `K wr S_2` stored as a bitset over all `2|K|^2` triples.
#[derive(Clone, Debug)]
pub struct MonomialGroup {
    pub k: GroupRef,
    pub members: ElementSet,
}

/// Closure of `gens` under multiplication.
pub fn monomial_closure(k: &GroupRef, gens: &[Triple], bound: usize) -> Result<MonomialGroup> {
    let n = k.order();
    let g = k.as_ref();
    let mut members = ElementSet::new(2 * n * n);
    let id = Triple::diag(0, 0);
    members.insert(encode(n, id));
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        for &b in gens {
            let c = triple_mul(g, a, b);
            if members.insert(encode(n, c)) {
                if queue.len() >= bound {
                    return Err(Error::BoundExceeded { what: "monomial closure".into(), size: queue.len() + 1, bound });
                }
                queue.push(c);
            }
        }
    }
    Ok(MonomialGroup { k: k.clone(), members })
}

/// `G(L, H)` generated by `diag(h, 1)` for `h` in `diag_seed` and the
/// antidiagonal reflections with entries in `offdiag_seed`.
pub fn generate_from_reflections(k: &GroupRef, diag_seed: &[usize], offdiag_seed: &[usize]) -> Result<MonomialGroup> {
    let n = k.order();
    if diag_seed.iter().chain(offdiag_seed).any(|&x| x >= n) {
        return Err(Error::InvalidArgument("seed element outside K".into()));
    }
    let mut gens: Vec<Triple> = diag_seed.iter().map(|&h| Triple::diag(h, 0)).collect();
    gens.extend(offdiag_seed.iter().map(|&b| anti_reflection(k.as_ref(), b)));
    if gens.is_empty() {
        gens.push(Triple::anti(0, 0));
    }
    monomial_closure(k, &gens, config::max_order())
}

impl MonomialGroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, t: Triple) -> bool {
        let n = self.k.order();
        t.x < n && t.y < n && self.members.contains(encode(n, t))
    }

    pub fn elements(&self) -> impl Iterator<Item = Triple> + '_ {
        let n = self.k.order();
        self.members.iter().map(move |i| decode(n, i))
    }

    pub fn reflections(&self) -> Vec<Triple> {
        self.elements().filter(|&t| triple_is_reflection(self.k.as_ref(), t)).collect()
    }

    /// `{h : diag(h, 1) in G}`.
    pub fn diagonal_part(&self) -> ElementSet {
        let n = self.k.order();
        ElementSet::from_indices(n, (0..n).filter(|&h| self.contains(Triple::diag(h, 0))))
    }

    /// `L_G = {b : [[0,b],[b^-1,0]] in G}`.
    pub fn nondiagonal_reflections(&self) -> ElementSet {
        let k = self.k.as_ref();
        ElementSet::from_indices(k.order(), (0..k.order()).filter(|&b| self.contains(anti_reflection(k, b))))
    }

    /// The subgroup of `K` generated by the first coordinates.
    pub fn projected_k(&self) -> ElementSet {
        let n = self.k.order();
        let xs = ElementSet::from_indices(n, self.elements().map(|t| t.x));
        generate(self.k.as_ref(), &xs.to_vec())
    }

    pub fn is_subgroup_of(&self, other: &MonomialGroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_closed(&self) -> bool {
        let g = self.k.as_ref();
        let elems: Vec<Triple> = self.elements().collect();
        elems.iter().all(|&a| self.contains(triple_inv(g, a)))
            && elems.iter().all(|&a| elems.iter().all(|&b| self.contains(triple_mul(g, a, b))))
    }

    pub fn summary(&self) -> Value {
        let g = self.k.as_ref();
        let kp = self.projected_k();
        let h = self.diagonal_part();
        serde_json::json!({
            "order": self.order(),
            "reflections": self.reflections().len(),
            "K": kp.len(),
            "L": self.nondiagonal_reflections().len(),
            "H": type_name(g, &h),
        })
    }
}

/// `H_L`: the `h` with `diag(h, 1)` in the group generated by the
/// antidiagonal reflections of `L`.
pub fn minimal_diagonal_subgroup(k: &GroupRef, l: &ElementSet) -> Result<Subgroup> {
    let g = k.as_ref();
    let gens: Vec<Triple> = circ_generators(g, l).into_iter().map(|b| anti_reflection(g, b)).collect();
    let closure = monomial_closure(k, &gens, usize::MAX)?;
    Ok(Subgroup::new(k.clone(), closure.diagonal_part()))
}
