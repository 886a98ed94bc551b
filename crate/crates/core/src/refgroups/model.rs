//! The groups `G_K(L, H)` as triples `(x, y, s)` meaning `diag(x, y) * swap^s`.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::groups::subgroups::{generate, is_normal, left_cosets, type_name};
use crate::groups::{ElementSet, FiniteGroup, GroupRef};
use crate::refsystems::closure::is_circ_closed;

/// `diag(x, y) * swap^s` with `x`, `y` indices into `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub x: usize,
    pub y: usize,
    pub s: u8,
}

impl Triple {
    pub fn diag(x: usize, y: usize) -> Self {
        Triple { x, y, s: 0 }
    }

    pub fn anti(x: usize, y: usize) -> Self {
        Triple { x, y, s: 1 }
    }
}

/// Product in `K wr S_2`.
pub fn triple_mul(k: &dyn FiniteGroup, a: Triple, b: Triple) -> Triple {
    if a.s == 0 {
        Triple { x: k.mul(a.x, b.x), y: k.mul(a.y, b.y), s: b.s }
    } else {
        Triple { x: k.mul(a.x, b.y), y: k.mul(a.y, b.x), s: 1 ^ b.s }
    }
}

pub fn triple_inv(k: &dyn FiniteGroup, a: Triple) -> Triple {
    if a.s == 0 {
        Triple::diag(k.inv(a.x), k.inv(a.y))
    } else {
        Triple::anti(k.inv(a.y), k.inv(a.x))
    }
}

/// Whether `diag(x,y) swap^s - I` has rank one.
pub fn triple_is_reflection(k: &dyn FiniteGroup, t: Triple) -> bool {
    if t.s == 0 {
        (t.x == 0) != (t.y == 0)
    } else {
        k.mul(t.y, t.x) == 0
    }
}

/// The reflection `[[0, b], [b^-1, 0]]`.
pub fn anti_reflection(k: &dyn FiniteGroup, b: usize) -> Triple {
    Triple::anti(b, k.inv(b))
}

/// The coset involution `gamma` of `K/H` with `gamma(bH) = b^-1 H` for `b` in `L`,
/// as a table on the cosets of `left_cosets(k, h)`.
pub fn gamma_table(k: &dyn FiniteGroup, l: &ElementSet, h: &ElementSet) -> Result<Vec<usize>> {
    let (coset, reps) = left_cosets(k, h);
    let n = k.order();
    let mut g = vec![usize::MAX; n];
    g[0] = coset[0];
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let base = reps[g[x]];
        for b in l.iter() {
            let y = k.mul(x, b);
            let c = coset[k.mul(base, k.inv(b))];
            if g[y] == usize::MAX {
                g[y] = c;
                stack.push(y);
            } else if g[y] != c {
                return Err(Error::MissingHL(format!(
                    "b -> b^-1 H does not extend to a map on K/H (H = {})",
                    type_name(k, h)
                )));
            }
        }
    }
    if g.contains(&usize::MAX) {
        return Err(Error::NotReflectionGroup("L does not generate K".into()));
    }
    for x in 0..n {
        for y in 0..n {
            if g[k.mul(x, y)] != coset[k.mul(reps[g[x]], reps[g[y]])] {
                return Err(Error::MissingHL("gamma is not a homomorphism of K/H".into()));
            }
        }
    }
    let table: Vec<usize> = reps.iter().map(|&r| g[r]).collect();
    if (0..reps.len()).any(|c| table[table[c]] != c) {
        return Err(Error::MissingHL("gamma is not an involution".into()));
    }
    Ok(table)
}

/// `G_K(L, H)`: the elements `diag(b, b_gamma h) swap^m`.
#[derive(Clone)]
pub struct ReflectionGroup {
    k: GroupRef,
    l: ElementSet,
    h: ElementSet,
    coset_of: Vec<usize>,
    gamma: Vec<usize>,
    coset_members: Vec<Vec<usize>>,
    pos_in_coset: Vec<usize>,
}

impl fmt::Debug for ReflectionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Build `G_K(L, H)`, checking that `H` is normal, `1 in L`, `LH = L`, `L` is
/// `o`-closed and generates `K`, and that `H` contains `H_L`.
pub fn build_reflection_group(k: &GroupRef, l: &ElementSet, h: &ElementSet) -> Result<ReflectionGroup> {
    let g = k.as_ref();
    let n = g.order();
    if l.iter().chain(h.iter()).any(|x| x >= n) {
        return Err(Error::InvalidArgument("index out of range".into()));
    }
    if !crate::groups::subgroups::is_subgroup(g, h) {
        return Err(Error::NotReflectionGroup("H is not a subgroup of K".into()));
    }
    if !is_normal(g, h) {
        return Err(Error::NotReflectionGroup("H is not normal in K".into()));
    }
    if !l.contains(0) {
        return Err(Error::NotReflectionGroup("1 is not in L".into()));
    }
    if !h.is_subset(l) {
        return Err(Error::NotReflectionGroup("H is not contained in L".into()));
    }
    if l.iter().any(|b| h.iter().any(|x| !l.contains(g.mul(b, x)))) {
        return Err(Error::NotReflectionGroup("LH != L".into()));
    }
    if !is_circ_closed(g, l) {
        return Err(Error::NotReflectionGroup("L is not closed under o".into()));
    }
    if generate(g, &l.to_vec()).len() != n {
        return Err(Error::NotReflectionGroup("L does not generate K".into()));
    }
    let gamma = gamma_table(g, l, h)?;
    let (coset_of, reps) = left_cosets(g, h);
    let mut coset_members = vec![Vec::new(); reps.len()];
    let mut pos_in_coset = vec![0; n];
    for x in 0..n {
        let c = coset_of[x];
        pos_in_coset[x] = coset_members[c].len();
        coset_members[c].push(x);
    }
    Ok(ReflectionGroup { k: k.clone(), l: l.clone(), h: h.clone(), coset_of, gamma, coset_members, pos_in_coset })
}

impl ReflectionGroup {
    pub fn k(&self) -> &GroupRef {
        &self.k
    }

    pub fn l(&self) -> &ElementSet {
        &self.l
    }

    pub fn h(&self) -> &ElementSet {
        &self.h
    }

    pub fn h_name(&self) -> String {
        type_name(self.k.as_ref(), &self.h)
    }

    /// `G_K(L|L|,H)`.
    pub fn label(&self) -> String {
        format!("G_{}(L{},{})", self.k.name(), self.l.len(), self.h_name())
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Least element of `gamma(bH)`.
    pub fn b_gamma(&self, b: usize) -> usize {
        self.coset_members[self.gamma[self.coset_of[b]]][0]
    }

    pub fn size(&self) -> usize {
        2 * self.h.len() * self.k.order()
    }

    pub fn contains(&self, t: Triple) -> bool {
        let n = self.k.order();
        t.x < n && t.y < n && t.s < 2 && self.coset_of[t.y] == self.gamma[self.coset_of[t.x]]
    }

    pub fn index_of(&self, t: Triple) -> Option<usize> {
        if !self.contains(t) {
            return None;
        }
        Some((usize::from(t.s) * self.k.order() + t.x) * self.h.len() + self.pos_in_coset[t.y])
    }

    pub fn triple(&self, idx: usize) -> Triple {
        let hl = self.h.len();
        let n = self.k.order();
        let pos = idx % hl;
        let rest = idx / hl;
        let (x, s) = (rest % n, (rest / n) as u8);
        Triple { x, y: self.coset_members[self.gamma[self.coset_of[x]]][pos], s }
    }

    pub fn elements(&self) -> impl Iterator<Item = Triple> + '_ {
        (0..self.size()).map(|i| self.triple(i))
    }

    pub fn mul_triples(&self, a: Triple, b: Triple) -> Triple {
        triple_mul(self.k.as_ref(), a, b)
    }

    pub fn is_reflection(&self, t: Triple) -> bool {
        triple_is_reflection(self.k.as_ref(), t)
    }

    /// `L_G = {b : [[0,b],[b^-1,0]] in G}`.
    pub fn nondiagonal_reflections(&self) -> ElementSet {
        let k = self.k.as_ref();
        ElementSet::from_indices(k.order(), (0..k.order()).filter(|&b| self.contains(anti_reflection(k, b))))
    }

    pub fn is_canonical(&self) -> bool {
        self.nondiagonal_reflections() == self.l
    }

    /// `2|H| + |L_G| - 2`.
    pub fn reflection_count(&self) -> usize {
        2 * self.h.len() + self.nondiagonal_reflections().len() - 2
    }

    /// `2|H| + |L| - 2`.
    pub fn reflection_count_formula(&self) -> usize {
        2 * self.h.len() + self.l.len() - 2
    }

    /// Reflections found by testing every element.
    pub fn reflections_by_enumeration(&self) -> Vec<Triple> {
        self.elements().filter(|&t| self.is_reflection(t)).collect()
    }

    /// `diag(h, 1)` for `h` in `H` and the antidiagonal reflections of `L`.
    pub fn reflection_generators(&self) -> Vec<Triple> {
        let k = self.k.as_ref();
        let mut out: Vec<Triple> = self.h.iter().filter(|&x| x != 0).map(|x| Triple::diag(x, 0)).collect();
        out.extend(self.l.iter().map(|b| anti_reflection(k, b)));
        out
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "K": self.k.name(),
            "L": self.l.len(),
            "H": self.h_name(),
            "order": self.size(),
            "reflections": self.reflection_count(),
            "orbit_types": super::orbits::reflection_orbit_types(self).to_string(),
            "canonical": self.is_canonical(),
        })
    }
}

impl FiniteGroup for ReflectionGroup {
    fn name(&self) -> String {
        self.label()
    }

    fn order(&self) -> usize {
        self.size()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let t = self.mul_triples(self.triple(a), self.triple(b));
        self.index_of(t).expect("closed under products")
    }

    fn inv(&self, a: usize) -> usize {
        let t = triple_inv(self.k.as_ref(), self.triple(a));
        self.index_of(t).expect("closed under inverses")
    }

    fn element_order(&self, a: usize) -> usize {
        let t = self.triple(a);
        let id = Triple::diag(0, 0);
        let mut y = t;
        let mut k = 1;
        while y != id {
            y = self.mul_triples(y, t);
            k += 1;
        }
        k
    }

    fn element_label(&self, a: usize) -> String {
        let t = self.triple(a);
        let (x, y) = (self.k.element_label(t.x), self.k.element_label(t.y));
        if t.s == 0 {
            format!("diag({x}, {y})")
        } else {
            format!("antidiag({x}, {y})")
        }
    }
}
