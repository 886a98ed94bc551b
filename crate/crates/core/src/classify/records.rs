//! Classification records for each `K`, the dicyclic families, and order scans.

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use super::index::{lambda_set, IndexQuadruple};
use crate::error::{Error, Result};
use crate::groups::subgroups::{generate, normal_subgroups};
use crate::groups::{group_ref, DicyclicModel, ElementSet, FiniteGroup, GroupRef, GroupTag};
use crate::refgroups::model::build_reflection_group;
use crate::refgroups::orbits::{orbit_type_from, reflection_orbit_types, ReflectionOrbitType};
use crate::refgroups::{minimal_diagonal_subgroup, ReflectionGroup};
use crate::refsystems::closure::{circ_generators, left_translate};
use crate::refsystems::dicyclic::dicyclic_system_explicit;
use crate::refsystems::{automorphisms_for, dicyclic_system, enumerate_systems, DEFAULT_READING};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub family: String,
    pub k: String,
    pub label: String,
    pub index: Option<IndexQuadruple>,
    pub l_size: usize,
    pub h: String,
    pub order: u64,
    pub reflections: u64,
    pub orbit_types: String,
    pub canonical: bool,
    /// A `o`-generating set of `L`.
    pub l_generators: Vec<String>,
    /// Generators of `H` beyond `H_L` (empty for base groups).
    pub h_generators: Vec<String>,
    pub partner: Option<String>,
}

impl ClassificationRecord {
    pub fn from_group(g: &ReflectionGroup, family: &str, label: String, index: Option<IndexQuadruple>) -> Result<Self> {
        let k = g.k();
        let hl = minimal_diagonal_subgroup(k, g.l())?;
        let h_generators = if hl.members == *g.h() {
            Vec::new()
        } else {
            extra_generators(k.as_ref(), &hl.members, g.h()).iter().map(|&x| k.element_label(x)).collect()
        };
        Ok(ClassificationRecord {
            family: family.to_string(),
            k: k.name(),
            label,
            index,
            l_size: g.l().len(),
            h: g.h_name(),
            order: g.size() as u64,
            reflections: g.reflection_count() as u64,
            orbit_types: reflection_orbit_types(g).to_string(),
            canonical: g.is_canonical(),
            l_generators: circ_generators(k.as_ref(), g.l()).iter().map(|&x| k.element_label(x)).collect(),
            h_generators,
            partner: None,
        })
    }
}

/// Elements of `h` added greedily until they generate `h` together with `base`.
fn extra_generators(k: &dyn FiniteGroup, base: &ElementSet, h: &ElementSet) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = base.clone();
    for x in h.iter() {
        if !span.contains(x) {
            gens.push(x);
            let mut all = base.to_vec();
            all.extend(&gens);
            span = generate(k, &all);
        }
    }
    gens
}

/// `G(n, a, b, r)` on the abstract dicyclic group.
pub fn dicyclic_reflection_group(idx: IndexQuadruple) -> Result<ReflectionGroup> {
    idx.validate()?;
    let k = DicyclicModel::shared(idx.n as usize);
    let (_, w, _) = k.dicyclic_params().expect("dicyclic");
    let l = dicyclic_system(&k, idx.pair())?.members;
    let h = generate(k.as_ref(), &[k.power(w, (2 * idx.n / idx.r) as usize)]);
    build_reflection_group(&k, &l, &h)
}

/// `G_{D_n}(D_n, D_n)`, or with `half` the group `G_{D_n}(D_n, <w^2, j>)`.
pub fn dicyclic_special(n: u64, half: bool) -> Result<ReflectionGroup> {
    if n < 2 || (half && n % 2 == 1) {
        return Err(Error::InvalidArgument(format!("no special group for n = {n} (half = {half})")));
    }
    let k = DicyclicModel::shared(n as usize);
    let (_, w, j) = k.dicyclic_params().expect("dicyclic");
    let all = ElementSet::from_indices(k.order(), 0..k.order());
    let h = if half { generate(k.as_ref(), &[k.mul(w, w), j]) } else { all.clone() };
    build_reflection_group(&k, &all, &h)
}

pub fn dicyclic_record(idx: IndexQuadruple) -> Result<ClassificationRecord> {
    let g = dicyclic_reflection_group(idx)?;
    ClassificationRecord::from_group(&g, "dicyclic", idx.to_string(), Some(idx))
}

pub fn dicyclic_special_record(n: u64, half: bool) -> Result<ClassificationRecord> {
    let g = dicyclic_special(n, half)?;
    let k = g.k().name();
    let h = g.h_name();
    ClassificationRecord::from_group(&g, "dicyclic", format!("G_{k}({k},{h})"), None)
}

/// Orbit type of `G(n, a, b, r)` computed on `K` alone, without building `G`.
pub fn dicyclic_orbit_types(idx: IndexQuadruple) -> Result<ReflectionOrbitType> {
    idx.validate()?;
    let k = DicyclicModel::shared(idx.n as usize);
    let (_, w, j) = k.dicyclic_params().expect("dicyclic");
    let l = dicyclic_system_explicit(k.as_ref(), idx.pair()).expect("dicyclic");
    let hgen = k.power(w, (2 * idx.n / idx.r) as usize);
    let h = generate(k.as_ref(), &[hgen]);
    let l_gens = [0, k.power(w, idx.a as usize), j, k.mul(k.power(w, idx.b as usize), j)];
    Ok(orbit_type_from(k.as_ref(), &l, &l_gens, &h))
}

/// All canonical groups for `D_n`: `Lambda_n` plus the groups with `L = K` and noncyclic `H`.
pub fn classify_dicyclic(n: u64) -> Result<Vec<ClassificationRecord>> {
    let mut out: Vec<ClassificationRecord> = lambda_set(n).into_iter().map(dicyclic_record).collect::<Result<_>>()?;
    out.push(dicyclic_special_record(n, false)?);
    if n.is_multiple_of(2) && n >= 4 {
        out.push(dicyclic_special_record(n, true)?);
    }
    out.sort_by_key(sort_key);
    Ok(out)
}

fn sort_key(r: &ClassificationRecord) -> (Reverse<usize>, Reverse<u64>, Reverse<u64>, String) {
    (Reverse(r.l_size), Reverse(r.order), Reverse(r.reflections), r.label.clone())
}

fn family_of(tag: GroupTag) -> String {
    match tag {
        GroupTag::T | GroupTag::O | GroupTag::I => tag.name(),
        GroupTag::Dicyclic(_) => "dicyclic".into(),
        GroupTag::Cyclic(_) => "cyclic".into(),
    }
}

/// Canonical groups `G_K(L, H)` found directly: for each class of reflection
/// systems the base group, then each larger normal `H` in `L` with `LH = L`
/// that leaves the group canonical, one per orbit of the symmetries of `L`.
pub fn classify_k(tag: GroupTag) -> Result<Vec<ClassificationRecord>> {
    Ok(classify_k_groups(tag)?.into_iter().map(|(r, _)| r).collect())
}

/// As `classify_k`, keeping the constructed groups.
pub fn classify_k_groups(tag: GroupTag) -> Result<Vec<(ClassificationRecord, ReflectionGroup)>> {
    let k: GroupRef = group_ref(tag)?;
    let g = k.as_ref();
    let autos = automorphisms_for(tag, DEFAULT_READING)?;
    let normals = normal_subgroups(&k);
    let mut out = Vec::new();
    for class in enumerate_systems(tag)? {
        let l = &class.system.members;
        let hl = minimal_diagonal_subgroup(&k, l)?;
        // automorphisms carrying some translate x L back to L
        let stabilizer: Vec<_> =
            autos.iter().filter(|phi| l.iter().any(|x| phi.apply_set(&left_translate(g, l, g.inv(x))) == *l)).collect();
        let mut seen: Vec<ElementSet> = Vec::new();
        for h in normals.iter().filter(|h| hl.members.is_subset(&h.members) && h.members.is_subset(l)) {
            if l.iter().any(|b| h.members.iter().any(|x| !l.contains(g.mul(b, x)))) {
                continue;
            }
            if seen.iter().any(|s| stabilizer.iter().any(|phi| phi.apply_set(&h.members) == *s)) {
                continue;
            }
            let group = build_reflection_group(&k, l, &h.members)?;
            if !group.is_canonical() {
                continue;
            }
            seen.push(h.members.clone());
            let label = format!("G_{}(L{},{})", tag.name(), l.len(), group.h_name());
            out.push((ClassificationRecord::from_group(&group, &family_of(tag), label, None)?, group));
        }
    }
    out.sort_by_key(|(r, _)| sort_key(r));
    Ok(out)
}

/// Records for the constructor: polyhedral groups directly, dicyclic groups by index.
pub fn classify(tag: GroupTag) -> Result<Vec<ClassificationRecord>> {
    match tag {
        GroupTag::Dicyclic(n) => classify_dicyclic(n),
        _ => classify_k(tag),
    }
}

/// Every imprimitive group of the given order, dicyclic ones first by index.
pub fn order_scan(order: u64) -> Result<Vec<ClassificationRecord>> {
    let mut out = Vec::new();
    for n in 2..=order / 8 {
        if order.is_multiple_of(8 * n) {
            let r = order / (8 * n);
            for q in lambda_set(n).into_iter().filter(|q| q.r == r) {
                out.push(dicyclic_record(q)?);
            }
        }
    }
    out.sort_by_key(|r| r.index);
    for n in 2..=order {
        if 32 * n * n == order {
            out.push(dicyclic_special_record(n, false)?);
        }
        if 16 * n * n == order && n % 2 == 0 && n >= 4 {
            out.push(dicyclic_special_record(n, true)?);
        }
        if 16 * n * n > order {
            break;
        }
    }
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        // the largest group for K has order 2|K|^2
        if order <= 2 * tag.order() * tag.order() {
            out.extend(classify_k(tag)?.into_iter().filter(|r| r.order == order));
        }
    }
    Ok(out)
}
