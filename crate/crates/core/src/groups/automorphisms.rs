use std::collections::BTreeSet;

use super::subgroups::generate;
use super::table::{ElementSet, FiniteGroup};
use crate::config;
use crate::error::{Error, Result};

/// An automorphism of a finite group, as the image of every element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupAutomorphism {
    pub image: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(n: usize) -> Self {
        GroupAutomorphism { image: (0..n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn apply_set(&self, s: &ElementSet) -> ElementSet {
        s.map(|x| self.image[x])
    }

    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn is_automorphism_of(&self, k: &dyn FiniteGroup) -> bool {
        let n = k.order();
        if self.image.len() != n || self.image[0] != 0 {
            return false;
        }
        let mut seen = ElementSet::new(n);
        for &y in &self.image {
            if y >= n || !seen.insert(y) {
                return false;
            }
        }
        (0..n).all(|x| (0..n).all(|y| self.image[k.mul(x, y)] == k.mul(self.image[x], self.image[y])))
    }
}

/// A small generating set, taking elements of largest order first.
pub fn greedy_generators(k: &dyn FiniteGroup) -> Vec<usize> {
    let n = k.order();
    let mut by_order: Vec<usize> = (0..n).collect();
    by_order.sort_by(|&a, &b| k.element_order(b).cmp(&k.element_order(a)).then(a.cmp(&b)));
    let mut gens = Vec::new();
    let mut span = ElementSet::from_indices(n, [0]);
    for x in by_order {
        if span.len() == n {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = generate(k, &gens);
        }
    }
    gens
}

/// Breadth-first spanning tree of the Cayley graph: `(element, parent, generator)`
/// with `element = parent * gens[generator]`.
pub(crate) fn word_tree(k: &dyn FiniteGroup, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let n = k.order();
    let mut seen = ElementSet::from_indices(n, [0]);
    let mut order = vec![(0, 0, usize::MAX)];
    let mut head = 0;
    while head < order.len() {
        let x = order[head].0;
        head += 1;
        for (gi, &g) in gens.iter().enumerate() {
            let y = k.mul(x, g);
            if seen.insert(y) {
                order.push((y, x, gi));
            }
        }
    }
    order
}

/// Extend generator images along the word tree; `None` if inconsistent or not bijective.
pub(crate) fn extend_map(
    src: &dyn FiniteGroup,
    dst: &dyn FiniteGroup,
    gens: &[usize],
    images: &[usize],
    tree: &[(usize, usize, usize)],
) -> Option<Vec<usize>> {
    let n = src.order();
    if tree.len() != n {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    for &(y, p, g) in &tree[1..] {
        map[y] = dst.mul(map[p], images[g]);
    }
    for x in 0..n {
        for (gi, &g) in gens.iter().enumerate() {
            if map[src.mul(x, g)] != dst.mul(map[x], images[gi]) {
                return None;
            }
        }
    }
    Some(map)
}

/// All automorphisms, by backtracking over generator images with matching
/// element orders and matching orders of pairwise products.
pub fn automorphism_group(k: &dyn FiniteGroup) -> Result<Vec<GroupAutomorphism>> {
    let n = k.order();
    if n > config::AUTOMORPHISM_BOUND {
        return Err(Error::BoundExceeded {
            what: format!("automorphism search on {}", k.name()),
            size: n,
            bound: config::AUTOMORPHISM_BOUND,
        });
    }
    let gens = greedy_generators(k);
    let tree = word_tree(k, &gens);
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&g| (0..n).filter(|&x| k.element_order(x) == k.element_order(g)).collect()).collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(gens.len());
    search(k, &gens, &candidates, &tree, &mut chosen, &mut out);
    Ok(out.into_iter().collect())
}

fn search(
    k: &dyn FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    tree: &[(usize, usize, usize)],
    chosen: &mut Vec<usize>,
    out: &mut BTreeSet<GroupAutomorphism>,
) {
    let i = chosen.len();
    if i == gens.len() {
        if let Some(map) = extend_map(k, k, gens, chosen, tree) {
            let mut seen = ElementSet::new(k.order());
            if map.iter().all(|&y| seen.insert(y)) {
                out.insert(GroupAutomorphism { image: map });
            }
        }
        return;
    }
    'cand: for &c in &candidates[i] {
        for (j, &prev) in chosen.iter().enumerate() {
            if k.element_order(k.mul(prev, c)) != k.element_order(k.mul(gens[j], gens[i])) {
                continue 'cand;
            }
        }
        chosen.push(c);
        search(k, gens, candidates, tree, chosen, out);
        chosen.pop();
    }
}

/// Automorphisms of `k` induced by conjugation with elements of a supergroup
/// `big`, given the index embedding of `k` into `big`.
pub fn conjugation_automorphisms(
    k: &dyn FiniteGroup,
    big: &dyn FiniteGroup,
    embedding: &[usize],
) -> Vec<GroupAutomorphism> {
    let n = k.order();
    let mut back = vec![usize::MAX; big.order()];
    for (x, &y) in embedding.iter().enumerate() {
        back[y] = x;
    }
    let mut out = BTreeSet::new();
    'g: for g in 0..big.order() {
        let mut image = Vec::with_capacity(n);
        for &y in embedding {
            let z = back[big.conjugate(g, y)];
            if z == usize::MAX {
                continue 'g;
            }
            image.push(z);
        }
        out.insert(GroupAutomorphism { image });
    }
    out.into_iter().collect()
}

/// Inner automorphisms of `k`.
pub fn inner_automorphisms(k: &dyn FiniteGroup) -> Vec<GroupAutomorphism> {
    let id: Vec<usize> = (0..k.order()).collect();
    conjugation_automorphisms(k, k, &id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, DicyclicModel, GroupTag};
    use crate::numtheory::euler_phi;

    #[test]
    fn q8_has_24() {
        let q = build_group(GroupTag::Dicyclic(2)).unwrap();
        let a = automorphism_group(q.as_ref()).unwrap();
        assert_eq!(a.len(), 24);
        assert!(a.contains(&GroupAutomorphism::identity(8)));
        assert!(a.iter().all(|f| f.is_automorphism_of(q.as_ref())));
    }

    #[test]
    fn cyclic_count_is_totient() {
        for n in 1..=20 {
            let c = build_group(GroupTag::Cyclic(n)).unwrap();
            assert_eq!(automorphism_group(c.as_ref()).unwrap().len() as u64, euler_phi(n));
        }
    }

    #[test]
    fn preserves_orders() {
        let t = build_group(GroupTag::T).unwrap();
        let a = automorphism_group(t.as_ref()).unwrap();
        assert_eq!(a.len(), 24);
        for f in &a {
            for x in 0..24 {
                assert_eq!(t.element_order(x), t.element_order(f.apply(x)));
            }
        }
    }

    #[test]
    fn bound_enforced() {
        let d = DicyclicModel::new(40);
        assert!(matches!(automorphism_group(&d), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn inner_counts() {
        let t = build_group(GroupTag::T).unwrap();
        assert_eq!(inner_automorphisms(t.as_ref()).len(), 12);
        let o = build_group(GroupTag::O).unwrap();
        let emb = t.embedding_into(&o).unwrap();
        assert_eq!(conjugation_automorphisms(t.as_ref(), o.as_ref(), &emb).len(), 24);
    }
}
