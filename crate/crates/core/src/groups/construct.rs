//! The finite subgroups of the unit quaternions, built by closure from
//! generators and stored with a full Cayley table.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use serde_json::Value;

use super::table::{orders_from_mul, FiniteGroup};
use crate::config;
use crate::error::{Error, Result};
use crate::exactarith::{rat, FieldScalar, Quaternion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupTag {
    Cyclic(u64),
    Dicyclic(u64),
    T,
    O,
    I,
}

impl GroupTag {
    pub fn from_args(kind: &str, n: Option<u64>) -> Result<GroupTag> {
        let need =
            |n: Option<u64>| n.ok_or_else(|| Error::InvalidArgument(format!("group {kind} needs a parameter n")));
        let tag = match kind {
            "cyclic" | "C" => GroupTag::Cyclic(need(n)?),
            "dicyclic" | "D" => GroupTag::Dicyclic(need(n)?),
            "T" | "t" => GroupTag::T,
            "O" | "o" => GroupTag::O,
            "I" | "i" => GroupTag::I,
            "Q8" => GroupTag::Dicyclic(2),
            _ => return Err(Error::InvalidArgument(format!("unsupported group {kind}"))),
        };
        tag.validate()?;
        Ok(tag)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupTag::Cyclic(0) => Err(Error::InvalidArgument("cyclic group needs n >= 1".into())),
            GroupTag::Dicyclic(n) if n < 2 => Err(Error::InvalidArgument("dicyclic group needs n >= 2".into())),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            GroupTag::Cyclic(n) => n,
            GroupTag::Dicyclic(n) => 4 * n,
            GroupTag::T => 24,
            GroupTag::O => 48,
            GroupTag::I => 120,
        }
    }

    /// Conductor of the scalar field the group is built over.
    pub fn conductor(&self) -> u64 {
        match *self {
            GroupTag::Cyclic(n) | GroupTag::Dicyclic(n) => 4 * n,
            GroupTag::T => 4,
            GroupTag::O => 8,
            GroupTag::I => 20,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            GroupTag::Cyclic(n) => format!("C{n}"),
            GroupTag::Dicyclic(2) => "Q8".to_string(),
            GroupTag::Dicyclic(n) => format!("D{n}"),
            GroupTag::T => "T".to_string(),
            GroupTag::O => "O".to_string(),
            GroupTag::I => "I".to_string(),
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A finite group of unit quaternions with its Cayley table.
pub struct FiniteQuaternionGroup {
    tag: GroupTag,
    conductor: u64,
    elements: Vec<Quaternion>,
    index: HashMap<Quaternion, usize>,
    table: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
}

impl fmt::Debug for FiniteQuaternionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteQuaternionGroup({}, order {})", self.tag, self.elements.len())
    }
}

/// Named quaternions used by the constructors and in tests.
pub mod named {
    use super::*;

    /// `(1 + i + j + k) / 2`.
    pub fn zeta(m: u64) -> Quaternion {
        Quaternion::from_ints(m, 1, 1, 1, 1).scale_rational(&rat(1, 2))
    }

    /// `(1 + i) / sqrt 2`.
    pub fn half_i(m: u64) -> Quaternion {
        let r = FieldScalar::sqrt2(m).expect("conductor divisible by 8");
        Quaternion::from_ints(m, 1, 1, 0, 0).scale(&r.scale(&rat(1, 2)))
    }

    /// `(1 + tau i + sigma j) / 2`.
    pub fn icosa_gen(m: u64) -> Quaternion {
        let t = FieldScalar::tau(m).expect("conductor divisible by 5");
        let s = FieldScalar::sigma(m).expect("conductor divisible by 5");
        Quaternion::new(FieldScalar::one(m), t, s, FieldScalar::zero(m))
            .expect("same conductor")
            .scale_rational(&rat(1, 2))
    }

    /// `cos(2 pi k / d) + i sin(2 pi k / d)` over conductor `m` (`d | m`, `4 | m`).
    pub fn complex_root(m: u64, d: u64, k: i64) -> Quaternion {
        let e = k * (m / d) as i64;
        Quaternion::new(
            FieldScalar::cos_2pi(m, e),
            FieldScalar::sin_2pi(m, e).expect("conductor divisible by 4"),
            FieldScalar::zero(m),
            FieldScalar::zero(m),
        )
        .expect("same conductor")
    }
}

fn generators_for(tag: GroupTag) -> Vec<Quaternion> {
    let m = tag.conductor();
    match tag {
        GroupTag::Cyclic(n) => vec![named::complex_root(m, n, 1)],
        GroupTag::Dicyclic(n) => vec![named::complex_root(m, 2 * n, 1), Quaternion::j(m)],
        GroupTag::T => vec![Quaternion::i(m), named::zeta(m)],
        GroupTag::O => vec![named::half_i(m), named::zeta(m)],
        GroupTag::I => vec![Quaternion::i(m), named::zeta(m), named::icosa_gen(m)],
    }
}

static GROUPS: LazyLock<Mutex<HashMap<GroupTag, Arc<FiniteQuaternionGroup>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Build (or fetch from the process-wide cache) the group with the given tag.
pub fn build_group(tag: GroupTag) -> Result<Arc<FiniteQuaternionGroup>> {
    tag.validate()?;
    let order = tag.order() as usize;
    if order > config::max_order() {
        return Err(Error::BoundExceeded { what: format!("group {tag}"), size: order, bound: config::max_order() });
    }
    if let Some(g) = GROUPS.lock().unwrap_or_else(|e| e.into_inner()).get(&tag) {
        return Ok(g.clone());
    }
    let g = Arc::new(FiniteQuaternionGroup::from_generators(tag, tag.conductor(), generators_for(tag))?);
    if g.order() != order {
        return Err(Error::Construction(format!("{tag} closed to {} elements, expected {order}", g.order())));
    }
    let mut cache = GROUPS.lock().unwrap_or_else(|e| e.into_inner());
    Ok(cache.entry(tag).or_insert(g).clone())
}

impl FiniteQuaternionGroup {
    /// Closure of `gens` under multiplication.
    ///
    /// Only `|K| * gens.len()` quaternion products are formed; the rest of the
    /// Cayley table follows from the breadth-first word for each element.
    pub fn from_generators(tag: GroupTag, conductor: u64, gens: Vec<Quaternion>) -> Result<Self> {
        let bound = config::max_order();
        let one = Quaternion::one(conductor);
        let mut elems = vec![one.clone()];
        let mut index: HashMap<Quaternion, usize> = HashMap::from([(one, 0)]);
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (gi, g) in gens.iter().enumerate() {
                let p = elems[x].try_mul(g)?;
                let idx = match index.get(&p) {
                    Some(&i) => i,
                    None => {
                        let i = elems.len();
                        if i >= bound {
                            return Err(Error::BoundExceeded { what: format!("closure of {tag}"), size: i + 1, bound });
                        }
                        index.insert(p.clone(), i);
                        elems.push(p);
                        parent.push((x, gi));
                        queue.push_back(i);
                        i
                    }
                };
                row.push(idx);
            }
            if right.len() <= x {
                right.resize(x + 1, Vec::new());
            }
            right[x] = row;
        }
        let n = elems.len();
        // BFS order equals index order, so parents precede children
        let mut raw = vec![0u32; n * n];
        for x in 0..n {
            raw[x * n] = x as u32;
            for y in 1..n {
                let (p, g) = parent[y];
                raw[x * n + y] = right[raw[x * n + p] as usize][g] as u32;
            }
        }
        let raw_orders = orders_from_mul(n, |a, b| raw[a * n + b] as usize);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| raw_orders[a].cmp(&raw_orders[b]).then_with(|| elems[a].cmp(&elems[b])));
        let mut pos = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[pos[x] * n + pos[y]] = pos[raw[x * n + y] as usize] as u32;
            }
        }
        let elements: Vec<Quaternion> = perm.iter().map(|&o| elems[o].clone()).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
        let mut inv = vec![0u32; n];
        for x in 0..n {
            for y in 0..n {
                if table[x * n + y] == 0 {
                    inv[x] = y as u32;
                    break;
                }
            }
        }
        let orders = perm.iter().map(|&o| raw_orders[o] as u32).collect();
        let generators = (0..gens.len()).map(|g| pos[right[0][g]]).collect();
        Ok(FiniteQuaternionGroup { tag, conductor, elements, index, table, inv, orders, generators })
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    /// Indices of the constructor's generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of `q`, lifting it into this group's field if needed.
    pub fn index_of(&self, q: &Quaternion) -> Option<usize> {
        if q.conductor() == self.conductor {
            return self.index.get(q).copied();
        }
        let lifted = q.lift(self.conductor).ok()?;
        self.index.get(&lifted).copied()
    }

    /// Index of the element written as a quaternion expression.
    pub fn parse_element(&self, expr: &str) -> Result<usize> {
        let q = crate::exactarith::parse_quaternion(self.conductor, expr)?;
        self.index_of(&q).ok_or_else(|| Error::InvalidArgument(format!("{expr} is not an element of {}", self.tag)))
    }

    pub fn parse_elements(&self, exprs: &[&str]) -> Result<Vec<usize>> {
        exprs.iter().map(|e| self.parse_element(e)).collect()
    }

    /// Index map of `self` into `big`, when every element lies in `big`.
    pub fn embedding_into(&self, big: &FiniteQuaternionGroup) -> Option<Vec<usize>> {
        self.elements.iter().map(|q| big.index_of(q)).collect()
    }

    pub fn cayley_row(&self, x: usize) -> &[u32] {
        let n = self.elements.len();
        &self.table[x * n..(x + 1) * n]
    }

    pub fn to_json(&self, with_elements: bool, with_cayley: bool) -> Value {
        let mut v = serde_json::json!({
            "name": self.tag.name(),
            "order": self.order(),
        });
        if with_elements {
            v["elements"] = Value::Array(self.elements.iter().map(Quaternion::to_json).collect());
        }
        if with_cayley {
            let n = self.order();
            v["cayley"] = Value::Array((0..n).map(|x| Value::from(self.cayley_row(x).to_vec())).collect());
        }
        v
    }
}

impl FiniteGroup for FiniteQuaternionGroup {
    fn name(&self) -> String {
        self.tag.name()
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.elements.len() + y] as usize
    }

    fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    fn quaternions(&self) -> Option<&[Quaternion]> {
        Some(&self.elements)
    }

    fn dicyclic_params(&self) -> Option<(usize, usize, usize)> {
        match self.tag {
            GroupTag::Dicyclic(n) => {
                let m = self.conductor;
                let w = self.index_of(&named::complex_root(m, 2 * n, 1))?;
                let j = self.index_of(&Quaternion::j(m))?;
                Some((n as usize, w, j))
            }
            _ => None,
        }
    }
}

/// Multiset of element orders.
pub fn element_order_census(k: &dyn FiniteGroup) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for x in 0..k.order() {
        *m.entry(k.element_order(x)).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for tag in [GroupTag::T, GroupTag::O, GroupTag::I, GroupTag::Cyclic(1), GroupTag::Cyclic(7)] {
            assert_eq!(build_group(tag).unwrap().order() as u64, tag.order());
        }
        for n in 2..=12 {
            assert_eq!(build_group(GroupTag::Dicyclic(n)).unwrap().order() as u64, 4 * n);
        }
    }

    #[test]
    fn q8_elements() {
        let q = build_group(GroupTag::Dicyclic(2)).unwrap();
        let m = q.conductor();
        for (a, b, c, d) in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)] {
            for s in [1, -1] {
                let e = Quaternion::from_ints(m, s * a, s * b, s * c, s * d);
                assert!(q.index_of(&e).is_some(), "{e}");
            }
        }
    }

    #[test]
    fn table_is_a_group() {
        let g = build_group(GroupTag::O).unwrap();
        let n = g.order();
        assert!(g.elements()[0].is_one());
        for x in 0..n {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(0, x), x);
        }
        for x in (0..n).step_by(5) {
            for y in (0..n).step_by(3) {
                for z in (0..n).step_by(7) {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
                assert_eq!(g.elements()[g.mul(x, y)], &g.elements()[x] * &g.elements()[y]);
            }
        }
    }

    #[test]
    fn census() {
        let t = build_group(GroupTag::T).unwrap();
        let c = element_order_census(t.as_ref());
        assert_eq!(c, BTreeMap::from([(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]));
        let o = build_group(GroupTag::O).unwrap();
        let c = element_order_census(o.as_ref());
        assert_eq!(c.values().sum::<usize>(), 48);
        assert!(c.contains_key(&8));
        let c1 = build_group(GroupTag::Cyclic(1)).unwrap();
        assert_eq!(element_order_census(c1.as_ref()), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn inclusions() {
        let t = build_group(GroupTag::T).unwrap();
        let o = build_group(GroupTag::O).unwrap();
        let i = build_group(GroupTag::I).unwrap();
        assert!(t.embedding_into(&o).is_some());
        assert!(t.embedding_into(&i).is_some());
        let d3 = build_group(GroupTag::Dicyclic(3)).unwrap();
        let d6 = build_group(GroupTag::Dicyclic(6)).unwrap();
        assert!(d3.embedding_into(&d6).is_some());
    }

    #[test]
    fn bad_arguments() {
        assert!(GroupTag::from_args("dicyclic", Some(1)).is_err());
        assert!(GroupTag::from_args("cyclic", Some(0)).is_err());
        assert!(GroupTag::from_args("cyclic", None).is_err());
        assert!(GroupTag::from_args("X", None).is_err());
        assert_eq!(GroupTag::from_args("T", None).unwrap(), GroupTag::T);
    }
}
