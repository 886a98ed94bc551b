//! The isomorphisms between canonical forms, and the search for index pairs
//! with equal order and reflection count.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::index::{lambda_set, IndexQuadruple};
use super::records::{classify_k_groups, dicyclic_orbit_types, dicyclic_reflection_group};
use crate::config;
use crate::error::{Error, Result};
use crate::groups::{build_group, FiniteGroup, GroupRef, GroupTag};
use crate::numtheory::exact_sqrt;
use crate::refgroups::iso::{
    extend_generator_map, find_isomorphism, iso_prescreen, preserves_reflections, SearchOutcome,
};
use crate::refgroups::model::{anti_reflection, build_reflection_group, Triple};
use crate::refgroups::ReflectionGroup;
use crate::refsystems::close_system;

/// A verified isomorphism between two canonical forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoPair {
    pub left: String,
    pub right: String,
    pub order: u64,
    pub reflections: u64,
    /// Generator images as element labels.
    pub map: Vec<(String, String)>,
}

fn label_map(g1: &ReflectionGroup, g2: &ReflectionGroup, map: &[(Triple, Triple)]) -> Vec<(String, String)> {
    map.iter()
        .map(|&(a, b)| {
            let la = g1.element_label(g1.index_of(a).expect("in G1"));
            let lb = g2.element_label(g2.index_of(b).expect("in G2"));
            (la, lb)
        })
        .collect()
}

/// Check a generator map and package it; `None` if it does not extend to an
/// isomorphism carrying reflections to reflections.
pub fn certify(
    g1: &ReflectionGroup,
    g2: &ReflectionGroup,
    left: String,
    right: String,
    map: &[(Triple, Triple)],
) -> Result<Option<IsoPair>> {
    let Some(full) = extend_generator_map(g1, g2, map)? else {
        return Ok(None);
    };
    if !preserves_reflections(g1, g2, &full) {
        return Ok(None);
    }
    Ok(Some(IsoPair {
        left,
        right,
        order: g1.size() as u64,
        reflections: g1.reflection_count() as u64,
        map: label_map(g1, g2, map),
    }))
}

/// Source group, target group and reflection images under the map.
pub type IsoData = (ReflectionGroup, ReflectionGroup, Vec<(Triple, Triple)>);

/// `G_O(L14, 1)`, `G_T(L12, C2)` and the map sending the reflection for
/// `(j-k)/sqrt 2` to `diag(-1, 1)` and fixing the reflections for `1, i, (1+i+j+k)/2`.
pub fn polyhedral_iso_data() -> Result<IsoData> {
    let o = build_group(GroupTag::O)?;
    let t = build_group(GroupTag::T)?;
    let ko: GroupRef = o.clone();
    let kt: GroupRef = t.clone();
    let shared = ["1", "i", "(1+i+j+k)/2"];
    let mut o_gens = o.parse_elements(&shared)?;
    let extra = o.parse_element("(j-k)/r2")?;
    o_gens.push(extra);
    let t_gens = t.parse_elements(&shared)?;
    let l14 = close_system(&ko, &o_gens)?.members;
    let l12 = close_system(&kt, &t_gens)?.members;
    let trivial = crate::groups::ElementSet::from_indices(48, [0]);
    let minus = t.parse_element("-1")?;
    let c2 = crate::groups::ElementSet::from_indices(24, [0, minus]);
    let g1 = build_reflection_group(&ko, &l14, &trivial)?;
    let g2 = build_reflection_group(&kt, &l12, &c2)?;
    let mut map: Vec<(Triple, Triple)> = o_gens[..3]
        .iter()
        .zip(&t_gens)
        .map(|(&a, &b)| (anti_reflection(o.as_ref(), a), anti_reflection(t.as_ref(), b)))
        .collect();
    map.push((anti_reflection(o.as_ref(), extra), Triple::diag(minus, 0)));
    Ok((g1, g2, map))
}

pub fn polyhedral_isomorphism() -> Result<Option<IsoPair>> {
    let (g1, g2, map) = polyhedral_iso_data()?;
    certify(&g1, &g2, "G_O(L14,1)".into(), "G_T(L12,C2)".into(), &map)
}

/// `G(n,1,n,2)`, `G(2n,2,n,1)` and the map `diag(1,-1) -> [[0,k],[-k,0]]`,
/// fixing the reflections for `1, w, j` with `w = e^(i pi/n)`.
pub fn family_iso_data(n: u64) -> Result<IsoData> {
    let left = IndexQuadruple::new(n, 1, n, 2);
    let right = IndexQuadruple::new(2 * n, 2, n, 1);
    let g1 = dicyclic_reflection_group(left)?;
    let g2 = dicyclic_reflection_group(right)?;
    let (k1, k2) = (g1.k().clone(), g2.k().clone());
    let (_, w1, j1) = k1.dicyclic_params().expect("dicyclic");
    let (_, w2, j2) = k2.dicyclic_params().expect("dicyclic");
    let minus = k1.power(w1, n as usize);
    // in D_2n, e^(i pi/n) = w^2 and k = w^n j
    let w = k2.power(w2, 2);
    let kk = k2.mul(k2.power(w2, n as usize), j2);
    let map = vec![
        (Triple::diag(0, minus), anti_reflection(k2.as_ref(), kk)),
        (anti_reflection(k1.as_ref(), 0), anti_reflection(k2.as_ref(), 0)),
        (anti_reflection(k1.as_ref(), w1), anti_reflection(k2.as_ref(), w)),
        (anti_reflection(k1.as_ref(), j1), anti_reflection(k2.as_ref(), j2)),
    ];
    Ok((g1, g2, map))
}

pub fn family_isomorphism(n: u64) -> Result<Option<IsoPair>> {
    let (g1, g2, map) = family_iso_data(n)?;
    certify(
        &g1,
        &g2,
        IndexQuadruple::new(n, 1, n, 2).to_string(),
        IndexQuadruple::new(2 * n, 2, n, 1).to_string(),
        &map,
    )
}

/// Isomorphic pairs among the polyhedral groups and the dicyclic groups with
/// smaller index `n <= max_n`, each with a verified map. Pairs passing the
/// invariant screen are tried with the known maps, then by bounded search.
pub fn find_isomorphisms(max_n: u64) -> Result<Vec<IsoPair>> {
    let mut groups: Vec<(String, u64, ReflectionGroup)> = Vec::new();
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        for (rec, g) in classify_k_groups(tag)? {
            groups.push((rec.label, 0, g));
        }
    }
    for n in 2..=2 * max_n {
        for q in lambda_set(n) {
            groups.push((q.to_string(), n, dicyclic_reflection_group(q)?));
        }
    }
    let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, (_, _, g)) in groups.iter().enumerate() {
        buckets.entry((g.size(), g.reflection_count())).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in buckets.values() {
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                let (ref li, ni, ref gi) = groups[i];
                let (ref lj, nj, ref gj) = groups[j];
                let small_n = match (ni, nj) {
                    (0, 0) => 0,
                    (0, m) | (m, 0) => m,
                    (a, b) => a.min(b),
                };
                if small_n > max_n || iso_prescreen(gi, gj).is_distinct() {
                    continue;
                }
                if let Some(p) = known_map(li, lj)? {
                    out.push(p);
                    continue;
                }
                if let SearchOutcome::Isomorphic(map) = find_isomorphism(gi, gj) {
                    if let Some(p) = certify(gi, gj, li.clone(), lj.clone(), &map)? {
                        out.push(p);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn known_map(li: &str, lj: &str) -> Result<Option<IsoPair>> {
    let (a, b) = (li.parse::<IndexQuadruple>().ok(), lj.parse::<IndexQuadruple>().ok());
    if let (Some(a), Some(b)) = (a, b) {
        let (s, t) = if a.n < b.n { (a, b) } else { (b, a) };
        if s.n % 2 == 1 && s == IndexQuadruple::new(s.n, 1, s.n, 2) && t == IndexQuadruple::new(2 * s.n, 2, s.n, 1) {
            return family_isomorphism(s.n);
        }
    }
    let poly = ["G_O(L14,1)", "G_T(L12,C2)"];
    if poly.contains(&li) && poly.contains(&lj) {
        return polyhedral_isomorphism();
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorollaryKind {
    /// `n = ab` odd, `a != 1`.
    I,
    /// `n = 2ab`.
    II,
}

/// How a pair was shown not to be isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum NonIsoCertificate {
    OrbitTypes {
        left: String,
        right: String,
    },
    SearchExhausted,
    /// Orbit types agree and the groups exceed the search bound.
    Unresolved {
        order: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryPair {
    pub left: IndexQuadruple,
    pub right: IndexQuadruple,
    pub c: u64,
    pub order: u64,
    pub reflections: u64,
    pub certificate: NonIsoCertificate,
}

/// The discriminant whose square root gives the partner index.
pub fn corollary_discriminant(kind: CorollaryKind, a: u64, b: u64) -> i128 {
    let (a, b) = (a as i128, b as i128);
    match kind {
        CorollaryKind::I => (a + b + 1).pow(2) - 8 * a * b,
        CorollaryKind::II => (2 * (a + b) + 1).pow(2) - 16 * a * b,
    }
}

/// Partner `[2n, (s-c)/2, (s+c)/2, 1]` of `[n, a, b, 2]`, when the discriminant
/// is an odd square `c^2`.
pub fn corollary_partner(kind: CorollaryKind, idx: IndexQuadruple) -> Option<(IndexQuadruple, u64)> {
    let (a, b) = (idx.a, idx.b);
    let s = match kind {
        CorollaryKind::I => a + b + 1,
        CorollaryKind::II => 2 * (a + b) + 1,
    };
    let c = exact_sqrt(corollary_discriminant(kind, a, b))? as u64;
    if c.is_multiple_of(2) || c >= s {
        return None;
    }
    let partner = IndexQuadruple::new(2 * idx.n, (s - c) / 2, (s + c) / 2, 1);
    partner.validate().ok()?;
    Some((partner, c))
}

/// Decide non-isomorphism of two dicyclic groups with equal invariants.
pub fn non_iso_certificate(left: IndexQuadruple, right: IndexQuadruple) -> Result<Option<NonIsoCertificate>> {
    let (ol, or) = (dicyclic_orbit_types(left)?, dicyclic_orbit_types(right)?);
    if ol.multiset() != or.multiset() {
        return Ok(Some(NonIsoCertificate::OrbitTypes { left: ol.to_string(), right: or.to_string() }));
    }
    if left.order() as usize > config::ISO_SEARCH_BOUND {
        return Ok(Some(NonIsoCertificate::Unresolved { order: left.order() }));
    }
    let (g1, g2) = (dicyclic_reflection_group(left)?, dicyclic_reflection_group(right)?);
    Ok(match find_isomorphism(&g1, &g2) {
        SearchOutcome::NotIsomorphic => Some(NonIsoCertificate::SearchExhausted),
        SearchOutcome::Isomorphic(_) => None,
        SearchOutcome::Skipped { order, .. } => Some(NonIsoCertificate::Unresolved { order: order as u64 }),
    })
}

/// Index pairs `[n,a,b,2]`, `[2n,a',b',1]` with `n <= max_n` of the given kind,
/// each with equal order and reflection count and a non-isomorphism certificate.
pub fn corollary_pair_search(max_n: u64, kind: CorollaryKind) -> Result<Vec<CorollaryPair>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for q in lambda_set(n).into_iter().filter(|q| q.r == 2) {
            let ab = q.a * q.b;
            let fits = match kind {
                CorollaryKind::I => ab == n && n % 2 == 1 && q.a != 1,
                CorollaryKind::II => 2 * ab == n,
            };
            if !fits {
                continue;
            }
            let Some((partner, c)) = corollary_partner(kind, q) else {
                continue;
            };
            if q.order() != partner.order() || q.reflections() != partner.reflections() {
                return Err(Error::Construction(format!("{q} and {partner} have different invariants")));
            }
            let Some(certificate) = non_iso_certificate(q, partner)? else {
                continue;
            };
            out.push(CorollaryPair {
                left: q,
                right: partner,
                c,
                order: q.order(),
                reflections: q.reflections(),
                certificate,
            });
        }
    }
    Ok(out)
}
