use super::closure::{circ_closure, is_circ_closed, left_translate, right_translate};
use super::*;
use crate::groups::subgroups::generate;
use crate::groups::{build_group, group_ref, ElementSet, FiniteGroup, GroupRef, GroupTag};

fn sys(tag: GroupTag, gens: &[&str]) -> ReflectionSystem {
    let k = build_group(tag).unwrap();
    let idx = k.parse_elements(gens).unwrap();
    let r: GroupRef = k;
    close_system(&r, &idx).unwrap()
}

fn l12() -> ReflectionSystem {
    sys(GroupTag::T, &["1", "i", "(1+i+j+k)/2"])
}

#[test]
fn tetrahedral_closures() {
    assert_eq!(l12().size(), 12);
    assert_eq!(sys(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"]).size(), 24);
}

#[test]
fn cyclic_single_system() {
    for n in 1..=9 {
        let k = group_ref(GroupTag::Cyclic(n)).unwrap();
        let gen = if n == 1 { 0 } else { (0..k.order()).find(|&x| k.element_order(x) == n as usize).unwrap() };
        assert_eq!(close_system(&k, &[0, gen]).unwrap().size(), n as usize);
        let classes = enumerate_systems(GroupTag::Cyclic(n)).unwrap();
        assert_eq!(classes.len(), 1, "n={n}");
        assert_eq!(classes[0].system.size(), n as usize);
    }
}

#[test]
fn closure_errors() {
    let t = build_group(GroupTag::T).unwrap();
    let i = t.parse_element("i").unwrap();
    let r: GroupRef = t;
    assert!(matches!(close_system(&r, &[0, i]), Err(crate::Error::NotReflectionSystem(_))));
    assert!(close_system(&r, &[i]).is_err());
}

#[test]
fn orbits() {
    let l = l12();
    let o = system_orbit(&l, 0).unwrap();
    assert!(o.contains(0));
    let outside = (0..24).find(|&x| !l.contains(x)).unwrap();
    assert!(system_orbit(&l, outside).is_err());
    let l20 = sys(GroupTag::O, &["1", "(1+i)/r2", "(1+i+j+k)/2", "(j-k)/r2"]);
    let mut sizes: Vec<usize> = l20.orbit_partition().iter().map(ElementSet::len).collect();
    sizes.sort();
    assert_eq!(sizes, vec![2, 6, 12]);
}

#[test]
fn equivalence_of_translates() {
    let t = build_group(GroupTag::T).unwrap();
    let autos = automorphisms_for(GroupTag::T, DEFAULT_READING).unwrap();
    let l = l12();
    let i = t.parse_element("i").unwrap();
    let il = system_from_set(&l.parent, left_translate(t.as_ref(), &l.members, i)).unwrap();
    assert!(systems_equivalent(&l, &il, &autos).is_some());
    let l24 = sys(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"]);
    assert!(systems_equivalent(&l, &l24, &autos).is_none());
    // the class has six members, and automorphisms add nothing beyond translates
    assert_eq!(canonical_key(t.as_ref(), &autos, &l.members).1, 6);
    let swap = t.parse_elements(&["1", "j", "(1+i+j-k)/2"]).unwrap();
    let swapped = close_system(&l.parent, &swap).unwrap();
    assert!(systems_equivalent(&l, &swapped, &[crate::groups::GroupAutomorphism::identity(24)]).is_some());
}

#[test]
fn polyhedral_enumeration() {
    let sizes = |tag| -> Vec<(usize, usize)> {
        enumerate_systems(tag).unwrap().iter().map(|c| (c.system.size(), c.copies)).collect()
    };
    assert_eq!(sizes(GroupTag::Dicyclic(2)), vec![(6, 3), (8, 1)]);
    assert_eq!(sizes(GroupTag::T), vec![(12, 6), (24, 1)]);
    assert_eq!(sizes(GroupTag::O), vec![(14, 7), (18, 9), (20, 10), (32, 4), (48, 1)]);
    assert_eq!(sizes(GroupTag::I), vec![(20, 10), (30, 15), (32, 16), (120, 1)]);
}

#[test]
fn readings_agree() {
    for tag in [GroupTag::Dicyclic(2), GroupTag::T, GroupTag::O, GroupTag::I, GroupTag::Dicyclic(3)] {
        let a: Vec<(usize, usize)> = enumerate_systems_reading(tag, EquivalenceReading::Abstract)
            .unwrap()
            .iter()
            .map(|c| (c.system.size(), c.copies))
            .collect();
        let r: Vec<(usize, usize)> = enumerate_systems_reading(tag, EquivalenceReading::Realized)
            .unwrap()
            .iter()
            .map(|c| (c.system.size(), c.copies))
            .collect();
        assert_eq!(a, r, "{tag}");
    }
}

#[test]
fn octahedral_intersections() {
    let o = build_group(GroupTag::O).unwrap();
    let t = build_group(GroupTag::T).unwrap();
    let l18 = sys(GroupTag::O, &["1", "(1+i)/r2", "(1+i+j+k)/2"]);
    let l14 = sys(GroupTag::O, &["1", "i", "(1+i+j+k)/2", "(j-k)/r2"]);
    let emb = t.embedding_into(&o).unwrap();
    let l12_in_o = l12().members.map(|x| emb[x]);
    let l12_in_o = ElementSet::from_indices(48, l12_in_o.iter());
    assert_eq!(l18.members.intersect(&l14.members), l12_in_o);
    let mut extra = l12_in_o.clone();
    extra.insert(o.parse_element("(j-k)/r2").unwrap());
    extra.insert(o.parse_element("(k-j)/r2").unwrap());
    assert_eq!(l14.members, extra);
}

#[test]
fn omega_sets() {
    let o6: Vec<(u64, u64)> = omega_set(6).iter().map(|d| (d.a, d.b)).collect();
    assert_eq!(o6, vec![(1, 1), (1, 2), (1, 3), (1, 6), (2, 3)]);
    for p in [2u64, 3, 5, 7, 11, 13] {
        assert_eq!(omega_set(p).len(), 2);
    }
    for n in 2..=200 {
        assert_eq!(omega_set(n).len() as u64, omega_count_formula(n), "n={n}");
        let sizes: std::collections::BTreeSet<u64> = omega_set(n).iter().map(|d| d.system_size()).collect();
        assert_eq!(sizes.len(), omega_set(n).len(), "sizes not distinct for n={n}");
    }
    assert!(DicyclicIndex::new(6, 2, 4).is_err());
    assert!(DicyclicIndex::new(6, 3, 2).is_err());
}

#[test]
fn dicyclic_systems_match_formula() {
    for n in 2..=12u64 {
        let k = group_ref(GroupTag::Dicyclic(n)).unwrap();
        for idx in omega_set(n) {
            let l = dicyclic_system(&k, idx).unwrap();
            assert_eq!(l.size() as u64, idx.system_size());
            assert_eq!(Some(l.members.clone()), dicyclic::dicyclic_system_explicit(k.as_ref(), idx));
        }
    }
    let q = group_ref(GroupTag::Dicyclic(2)).unwrap();
    let l = dicyclic_system(&q, DicyclicIndex::new(2, 1, 2).unwrap()).unwrap();
    let expect: Vec<usize> =
        build_group(GroupTag::Dicyclic(2)).unwrap().parse_elements(&["1", "-1", "i", "-i", "j", "-j"]).unwrap();
    assert_eq!(l.members, ElementSet::from_indices(8, expect));
}

#[test]
fn dicyclic_enumeration_matches_omega() {
    for n in 2..=8u64 {
        let tag = GroupTag::Dicyclic(n);
        let k = group_ref(tag).unwrap();
        let autos = automorphisms_for(tag, DEFAULT_READING).unwrap();
        let mut expected: Vec<ElementSet> = omega_set(n)
            .into_iter()
            .map(|idx| canonical_key(k.as_ref(), &autos, &dicyclic_system(&k, idx).unwrap().members).0)
            .collect();
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let found: Vec<ElementSet> = enumerate_systems(tag).unwrap().into_iter().map(|c| c.system.members).collect();
        assert_eq!(found, expected, "n={n}");
    }
}

#[test]
fn dicyclic_orbit_lemma() {
    for n in 2..=12u64 {
        let k = group_ref(GroupTag::Dicyclic(n)).unwrap();
        let (_, w, j) = k.dicyclic_params().unwrap();
        for idx in omega_set(n) {
            let l = dicyclic_system(&k, idx).unwrap();
            let wa = k.power(w, idx.a as usize);
            let wbj = k.mul(k.power(w, idx.b as usize), j);
            let o1 = system_orbit(&l, 0).unwrap();
            let owa = system_orbit(&l, wa).unwrap();
            let oj = system_orbit(&l, j).unwrap();
            let owbj = system_orbit(&l, wbj).unwrap();
            let (na, nb) = (n / idx.a, n / idx.b);
            assert_eq!(o1 == owa, na % 2 == 1);
            assert_eq!(oj == owbj, nb % 2 == 1);
            let expect_a = if na % 2 == 1 { 2 * na } else { na } as usize;
            let expect_b = if nb % 2 == 1 { 2 * nb } else { nb } as usize;
            assert_eq!((o1.len(), owa.len()), (expect_a, expect_a));
            assert_eq!((oj.len(), owbj.len()), (expect_b, expect_b));
        }
    }
}

#[test]
fn closure_properties() {
    for tag in [GroupTag::T, GroupTag::O, GroupTag::Dicyclic(6)] {
        let k = group_ref(tag).unwrap();
        for class in enumerate_systems(tag).unwrap() {
            let l = &class.system;
            let g = k.as_ref();
            assert_eq!(circ_closure(g, &l.members), l.members);
            assert!(is_circ_closed(g, &l.members));
            for x in l.members.iter() {
                assert!(l.contains(g.inv(x)) && l.contains(g.mul(x, x)));
                let xl = left_translate(g, &l.members, x);
                assert_eq!(xl, right_translate(g, &l.members, g.inv(x)));
                assert!(system_from_set(&k, xl.clone()).is_ok());
                // {1, x} u xA generates xL
                let mut seed: Vec<usize> = vec![0, x];
                seed.extend(l.generators.iter().map(|&a| g.mul(x, a)));
                assert_eq!(circ_closure(g, &ElementSet::from_indices(g.order(), seed)), xl);
            }
            assert_eq!(generate(g, &l.members.to_vec()).len(), g.order());
        }
    }
}

#[test]
fn power_lemma() {
    let t = build_group(GroupTag::T).unwrap();
    let i = t.parse_element("i").unwrap();
    assert!(power_lemma_check(t.as_ref(), i, i, 3));
    assert!(power_lemma_check(t.as_ref(), i, 0, 2));
    let d = group_ref(GroupTag::Dicyclic(6)).unwrap();
    let (_, w, j) = d.dicyclic_params().unwrap();
    assert!(power_lemma_check(d.as_ref(), j, d.mul(w, j), 3));
    for x in 0..24 {
        for y in 0..24 {
            for n in 0..4 {
                assert!(power_lemma_check(t.as_ref(), x, y, n));
            }
        }
    }
}

#[test]
fn gamma_systems() {
    use crate::groups::subgroups::left_cosets;
    // cyclic, trivial H, identity gamma: the 2-torsion
    let c = group_ref(GroupTag::Cyclic(8)).unwrap();
    let h = ElementSet::from_indices(8, [0]);
    let id: Vec<usize> = (0..8).collect();
    let l = system_from_automorphism(c.as_ref(), &h, &id).unwrap();
    assert_eq!(l.len(), 2);
    // conjugation by (i-j)/sqrt 2 on T
    let o = build_group(GroupTag::O).unwrap();
    let t = build_group(GroupTag::T).unwrap();
    let emb = t.embedding_into(&o).unwrap();
    let u = o.parse_element("(i-j)/r2").unwrap();
    let phi: Vec<usize> = emb.iter().map(|&y| emb.iter().position(|&z| z == o.conjugate(u, y)).unwrap()).collect();
    let h1 = ElementSet::from_indices(24, [0]);
    let gamma = gamma::coset_map_of(t.as_ref(), &h1, &phi);
    let lg = system_from_automorphism(t.as_ref(), &h1, &gamma).unwrap();
    assert_eq!(lg.len(), 12);
    let autos = automorphisms_for(GroupTag::T, DEFAULT_READING).unwrap();
    assert_eq!(canonical_key(t.as_ref(), &autos, &lg).0, canonical_key(t.as_ref(), &autos, &l12().members).0);
    // a system with LH = L sits inside L_gamma for its own gamma
    let q = group_ref(GroupTag::Dicyclic(2)).unwrap();
    let h2 = crate::groups::commutator_subgroup(&q).members;
    let (coset, reps) = left_cosets(q.as_ref(), &h2);
    let inv_gamma: Vec<usize> = reps.iter().map(|&r| coset[q.inv(r)]).collect();
    let full = system_from_automorphism(q.as_ref(), &h2, &inv_gamma).unwrap();
    assert_eq!(full.len(), 8);
    assert!(system_from_automorphism(q.as_ref(), &h2, &[1, 0, 0, 0]).is_err());
}

#[test]
fn circ_embeddings() {
    let o = build_group(GroupTag::O).unwrap();
    let t = build_group(GroupTag::T).unwrap();
    let l14 = sys(GroupTag::O, &["1", "i", "(1+i+j+k)/2", "(j-k)/r2"]);
    let map = circ::embedding_exists(t.as_ref(), &l12().members, o.as_ref(), &l14.members);
    assert!(map);
    let l24 = sys(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"]);
    assert!(!circ::embedding_exists(t.as_ref(), &l24.members, o.as_ref(), &l14.members));
}

mod circ {
    use super::*;
    pub fn embedding_exists(k1: &dyn FiniteGroup, l1: &ElementSet, k2: &dyn FiniteGroup, l2: &ElementSet) -> bool {
        match circ_embedding(k1, l1, k2, l2) {
            Some(map) => map.iter().all(|&(a, fa)| {
                map.iter().all(|&(b, fb)| {
                    let ab = k1.circ(a, b);
                    map.iter().any(|&(c, fc)| c == ab && fc == k2.circ(fa, fb))
                })
            }),
            None => false,
        }
    }
}
