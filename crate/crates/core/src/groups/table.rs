use std::fmt;
use std::sync::Arc;

use crate::exactarith::Quaternion;

/// A finite group on the indices `0..order()`, with identity at index 0.
pub trait FiniteGroup: Send + Sync + fmt::Debug {
    fn name(&self) -> String;
    fn order(&self) -> usize;
    fn mul(&self, x: usize, y: usize) -> usize;
    fn inv(&self, x: usize) -> usize;
    fn element_order(&self, x: usize) -> usize;

    /// Quaternion realization, when the group was built from quaternions.
    fn quaternions(&self) -> Option<&[Quaternion]> {
        None
    }

    /// `(n, w, j)` when the group is the dicyclic group of order `4n` with
    /// distinguished generators `w` of order `2n` and `j`.
    fn dicyclic_params(&self) -> Option<(usize, usize, usize)> {
        None
    }

    fn identity(&self) -> usize {
        0
    }

    /// Display form of an element.
    fn element_label(&self, x: usize) -> String {
        match self.quaternions() {
            Some(q) => q[x].render(),
            None => format!("#{x}"),
        }
    }

    /// `a * b^-1 * a`.
    fn circ(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, self.inv(b)), a)
    }

    fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    fn power(&self, x: usize, e: usize) -> usize {
        let mut r = 0;
        for _ in 0..e {
            r = self.mul(r, x);
        }
        r
    }
}

pub type GroupRef = Arc<dyn FiniteGroup>;

/// Element orders by repeated multiplication.
pub(crate) fn orders_from_mul(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..n)
        .map(|x| {
            let mut y = x;
            let mut k = 1;
            while y != 0 {
                y = mul(y, x);
                k += 1;
            }
            k
        })
        .collect()
}

/// A set of element indices stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    words: Vec<u64>,
    universe: usize,
}

impl ElementSet {
    pub fn new(universe: usize) -> Self {
        ElementSet { words: vec![0; universe.div_ceil(64)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for x in 0..universe {
            s.insert(x);
        }
        s
    }

    pub fn from_indices(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Returns true if `x` was not already present.
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, x: usize) {
        self.words[x / 64] &= !(1 << (x % 64));
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        ElementSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(), universe: self.universe }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
            universe: self.universe,
        }
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> ElementSet {
        Self::from_indices(self.universe, self.iter().map(f))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut s = ElementSet::new(130);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(129);
        s.insert(64);
        assert_eq!(s.to_vec(), vec![3, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(129) && !s.contains(128) && !s.contains(500));
        let t = ElementSet::from_indices(130, [3, 64]);
        assert!(t.is_subset(&s));
        assert_eq!(s.difference(&t).to_vec(), vec![129]);
        s.remove(3);
        assert_eq!(s.intersect(&t).to_vec(), vec![64]);
    }
}
