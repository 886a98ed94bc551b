use std::collections::BTreeSet;
use std::fmt;

use super::table::{ElementSet, FiniteGroup, GroupRef};

/// A subgroup of a parent group, as a set of element indices.
#[derive(Clone)]
pub struct Subgroup {
    pub parent: GroupRef,
    pub members: ElementSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({} of {})", self.type_name(), self.parent.name())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Subgroup {
    pub fn new(parent: GroupRef, members: ElementSet) -> Self {
        Subgroup { parent, members }
    }

    pub fn trivial(parent: GroupRef) -> Self {
        let members = ElementSet::from_indices(parent.order(), [0]);
        Subgroup { parent, members }
    }

    pub fn whole(parent: GroupRef) -> Self {
        let members = ElementSet::full(parent.order());
        Subgroup { parent, members }
    }

    pub fn generated(parent: GroupRef, gens: &[usize]) -> Self {
        let members = generate(parent.as_ref(), gens);
        Subgroup { parent, members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_normal(&self) -> bool {
        is_normal(self.parent.as_ref(), &self.members)
    }

    /// Isomorphism type: `1`, `Cn`, `Q8`, `Dm`, `T`, `O` or `I`.
    pub fn type_name(&self) -> String {
        type_name(self.parent.as_ref(), &self.members)
    }
}

/// Subgroup generated by `gens`.
pub fn generate(k: &dyn FiniteGroup, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::from_indices(k.order(), [0]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = k.mul(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn is_normal(k: &dyn FiniteGroup, set: &ElementSet) -> bool {
    (0..k.order()).all(|g| set.iter().all(|h| set.contains(k.conjugate(g, h))))
}

pub fn is_subgroup(k: &dyn FiniteGroup, set: &ElementSet) -> bool {
    set.contains(0) && set.iter().all(|x| set.iter().all(|y| set.contains(k.mul(x, k.inv(y)))))
}

/// Isomorphism type of a finite subgroup of the unit quaternions.
pub fn type_name(k: &dyn FiniteGroup, set: &ElementSet) -> String {
    let n = set.len();
    let max = set.iter().map(|x| k.element_order(x)).max().unwrap_or(1);
    if n == 1 {
        "1".to_string()
    } else if max == n {
        format!("C{n}")
    } else if n == 8 {
        "Q8".to_string()
    } else if max == n / 2 && n.is_multiple_of(4) {
        format!("D{}", n / 4)
    } else {
        match n {
            24 => "T".to_string(),
            48 => "O".to_string(),
            120 => "I".to_string(),
            _ => format!("G{n}"),
        }
    }
}

pub fn conjugacy_classes(k: &dyn FiniteGroup) -> Vec<ElementSet> {
    let n = k.order();
    let mut seen = ElementSet::new(n);
    let mut out = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let class = ElementSet::from_indices(n, (0..n).map(|g| k.conjugate(g, x)));
        seen.union_with(&class);
        out.push(class);
    }
    out
}

fn join(k: &dyn FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut gens: Vec<usize> = a.iter().collect();
    gens.extend(b.iter());
    generate(k, &gens)
}

/// All normal subgroups: normal closures of conjugacy classes and their joins,
/// sorted by order and then by member set.
pub fn normal_subgroups(k: &GroupRef) -> Vec<Subgroup> {
    let g = k.as_ref();
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    found.insert(ElementSet::from_indices(g.order(), [0]));
    for class in conjugacy_classes(g) {
        let gens: Vec<usize> = class.iter().collect();
        found.insert(generate(g, &gens));
    }
    wrap(k, join_closure(g, found))
}

/// Every subgroup, as joins of cyclic subgroups.
pub fn all_subgroups(k: &GroupRef) -> Vec<Subgroup> {
    let g = k.as_ref();
    let found: BTreeSet<ElementSet> = (0..g.order()).map(|x| generate(g, &[x])).collect();
    wrap(k, join_closure(g, found))
}

fn join_closure(g: &dyn FiniteGroup, mut found: BTreeSet<ElementSet>) -> Vec<ElementSet> {
    loop {
        let list: Vec<ElementSet> = found.iter().cloned().collect();
        let mut added = false;
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if list[i].is_subset(&list[j]) || list[j].is_subset(&list[i]) {
                    continue;
                }
                if found.insert(join(g, &list[i], &list[j])) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut v: Vec<ElementSet> = found.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

fn wrap(k: &GroupRef, v: Vec<ElementSet>) -> Vec<Subgroup> {
    v.into_iter().map(|members| Subgroup::new(k.clone(), members)).collect()
}

pub fn commutator_subgroup(k: &GroupRef) -> Subgroup {
    let g = k.as_ref();
    let n = g.order();
    let mut comms = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    let gens: Vec<usize> = comms.into_iter().collect();
    Subgroup::generated(k.clone(), &gens)
}

/// Left cosets `xH` as a map from element to coset number, plus a least
/// representative for each coset.
pub fn left_cosets(k: &dyn FiniteGroup, h: &ElementSet) -> (Vec<usize>, Vec<usize>) {
    let n = k.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for y in h.iter() {
            coset[k.mul(x, y)] = c;
        }
    }
    (coset, reps)
}
