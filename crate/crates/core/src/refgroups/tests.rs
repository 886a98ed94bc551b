use super::model::{anti_reflection, triple_inv};
use super::*;
use crate::groups::subgroups::left_cosets;
use crate::groups::{build_group, commutator_subgroup, group_ref, normal_subgroups, ElementSet, GroupRef, GroupTag};
use crate::refsystems::{close_system, dicyclic_system, DicyclicIndex};

fn normal_of_order(k: &GroupRef, order: usize) -> ElementSet {
    let found: Vec<_> = normal_subgroups(k).into_iter().filter(|s| s.order() == order).collect();
    assert_eq!(found.len(), 1, "normal subgroup of order {order} in {}", k.name());
    found[0].members.clone()
}

fn system(tag: GroupTag, gens: &[&str]) -> (GroupRef, ElementSet) {
    let q = build_group(tag).unwrap();
    let idx = q.parse_elements(gens).unwrap();
    let k: GroupRef = q;
    let l = close_system(&k, &idx).unwrap().members;
    (k, l)
}

fn group(tag: GroupTag, gens: &[&str], h: usize) -> ReflectionGroup {
    let (k, l) = system(tag, gens);
    let h = normal_of_order(&k, h);
    build_reflection_group(&k, &l, &h).unwrap()
}

const L12: [&str; 3] = ["1", "i", "(1+i+j+k)/2"];
const L14: [&str; 4] = ["1", "i", "(1+i+j+k)/2", "(j-k)/r2"];
const L20O: [&str; 4] = ["1", "(1+i)/r2", "(1+i+j+k)/2", "(j-k)/r2"];

#[test]
fn product_rule_matches_matrices() {
    let g = group(GroupTag::T, &L12, 2);
    let q = g.k().quaternions().unwrap().to_vec();
    let elems: Vec<Triple> = g.elements().collect();
    for (i, &a) in elems.iter().enumerate().step_by(7) {
        for &b in elems.iter().skip(i % 5).step_by(11) {
            let m = QuatMatrix2::from_triple(&q, a).mul(&QuatMatrix2::from_triple(&q, b));
            assert_eq!(m, QuatMatrix2::from_triple(&q, g.mul_triples(a, b)));
        }
    }
}

#[test]
fn small_examples() {
    let t = group(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"], 8);
    assert_eq!((t.size(), t.reflection_count()), (384, 38));
    let q = group(GroupTag::Dicyclic(2), &["1", "i", "j", "k"], 2);
    assert_eq!((q.size(), q.reflection_count()), (32, 10));
    assert_eq!(q.elements().filter(|&x| q.is_reflection(x)).count(), 10);
    // cyclic K with L = K gives G(n, p, 2)
    for n in [2usize, 4, 6] {
        let k = group_ref(GroupTag::Cyclic(n as u64)).unwrap();
        let l = ElementSet::from_indices(n, 0..n);
        for sub in normal_subgroups(&k) {
            let g = build_reflection_group(&k, &l, &sub.members).unwrap();
            let p = n / sub.order();
            assert_eq!(g.size(), 2 * n * n / p);
        }
    }
}

#[test]
fn element_model_is_a_group() {
    let g = group(GroupTag::O, &L20O, 2);
    assert_eq!(g.size(), 192);
    let k = g.k().as_ref();
    let elems: Vec<Triple> = g.elements().collect();
    let distinct: std::collections::BTreeSet<_> = elems.iter().collect();
    assert_eq!(distinct.len(), 192);
    for (i, &a) in elems.iter().enumerate() {
        assert_eq!(g.index_of(a), Some(i));
        assert!(g.contains(triple_inv(k, a)));
        for &b in elems.iter().step_by(13) {
            assert!(g.contains(g.mul_triples(a, b)));
        }
    }
    // the group is generated by its reflections
    let gens: Vec<Triple> = g.reflection_generators();
    let closure = monomial::monomial_closure(g.k(), &gens, usize::MAX).unwrap();
    assert_eq!(closure.order(), 192);
    assert!(closure.elements().all(|t| g.contains(t)));
}

#[test]
fn gamma_is_involution_sending_l_to_inverses() {
    for (tag, gens, h) in
        [(GroupTag::T, &L12[..], 2), (GroupTag::O, &L20O[..], 2), (GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"][..], 8)]
    {
        let g = group(tag, gens, h);
        let k = g.k().as_ref();
        let gamma = g.gamma();
        let (coset, _) = left_cosets(k, g.h());
        for c in 0..gamma.len() {
            assert_eq!(gamma[gamma[c]], c);
        }
        for b in g.l().iter() {
            assert_eq!(gamma[coset[b]], coset[k.inv(b)]);
        }
    }
}

#[test]
fn missing_hl_is_rejected() {
    let (k, l) = system(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"]);
    let c2 = normal_of_order(&k, 2);
    assert!(matches!(build_reflection_group(&k, &l, &c2), Err(crate::Error::MissingHL(_))));
    let (k, l) = system(GroupTag::T, &L12);
    let q8 = normal_of_order(&k, 8);
    assert!(build_reflection_group(&k, &l, &q8).is_err());
    let not_normal = crate::groups::subgroups::generate(
        k.as_ref(),
        &[build_group(GroupTag::T).unwrap().parse_element("i").unwrap()],
    );
    assert!(matches!(build_reflection_group(&k, &l, &not_normal), Err(crate::Error::NotReflectionGroup(_))));
}

#[test]
fn diagonal_subgroups() {
    let (k, l) = system(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"]);
    assert_eq!(minimal_diagonal_subgroup(&k, &l).unwrap().type_name(), "Q8");
    let (k, l) = system(GroupTag::T, &L12);
    assert_eq!(minimal_diagonal_subgroup(&k, &l).unwrap().order(), 1);
    for n in 2..=12u64 {
        let k = group_ref(GroupTag::Dicyclic(n)).unwrap();
        let (_, w, _) = k.dicyclic_params().unwrap();
        for idx in crate::refsystems::omega_set(n) {
            let l = dicyclic_system(&k, idx).unwrap().members;
            let hl = minimal_diagonal_subgroup(&k, &l).unwrap();
            let expect = crate::groups::subgroups::generate(k.as_ref(), &[k.power(w, (2 * idx.a * idx.b) as usize)]);
            assert_eq!(hl.members, expect, "{idx}");
            let base = build_reflection_group(&k, &l, &hl.members).unwrap();
            assert!(base.is_canonical());
        }
    }
    for tag in
        [GroupTag::Dicyclic(2), GroupTag::Dicyclic(3), GroupTag::T, GroupTag::O, GroupTag::I, GroupTag::Cyclic(4)]
    {
        let k = group_ref(tag).unwrap();
        let all = ElementSet::from_indices(k.order(), 0..k.order());
        assert_eq!(minimal_diagonal_subgroup(&k, &all).unwrap().members, commutator_subgroup(&k).members, "{tag}");
    }
}

#[test]
fn canonical_form_of_dicyclic_higher_groups() {
    for n in 2..=12u64 {
        let k = group_ref(GroupTag::Dicyclic(n)).unwrap();
        let (_, w, _) = k.dicyclic_params().unwrap();
        for idx in crate::refsystems::omega_set(n) {
            let l = dicyclic_system(&k, idx).unwrap().members;
            let h = crate::groups::subgroups::generate(k.as_ref(), &[k.power(w, (idx.a * idx.b) as usize)]);
            let g = build_reflection_group(&k, &l, &h).unwrap();
            assert_eq!(g.is_canonical(), (idx.a * idx.b) % 2 == 1, "{idx}");
            assert!(g.nondiagonal_reflections().is_subset(&g.nondiagonal_reflections()));
            assert!(l.is_subset(&g.nondiagonal_reflections()));
        }
    }
    let q = group_ref(GroupTag::Dicyclic(2)).unwrap();
    let l = dicyclic_system(&q, DicyclicIndex::new(2, 1, 2).unwrap()).unwrap().members;
    let c2 = normal_of_order(&q, 2);
    let g = build_reflection_group(&q, &l, &c2).unwrap();
    assert!(g.nondiagonal_reflections().len() > l.len());
}

#[test]
fn order_and_count_laws() {
    let cases: Vec<ReflectionGroup> = vec![
        group(GroupTag::T, &L12, 1),
        group(GroupTag::T, &L12, 2),
        group(GroupTag::O, &L14, 1),
        group(GroupTag::O, &L20O, 2),
    ];
    let q8 = build_group(GroupTag::Dicyclic(2)).unwrap();
    let c4 = crate::groups::subgroups::generate(q8.as_ref(), &[q8.parse_element("j").unwrap()]);
    let k: GroupRef = q8;
    let all = ElementSet::from_indices(8, 0..8);
    let mut cases = cases;
    cases.push(build_reflection_group(&k, &all, &c4).unwrap());
    for g in &cases {
        assert_eq!(g.elements().count(), 2 * g.h().len() * g.k().order());
        assert_eq!(g.reflections_by_enumeration().len(), g.reflection_count_formula());
        assert_eq!(g.reflection_count(), g.reflection_count_formula());
    }
}

#[test]
fn reflection_conjugates_are_reflections() {
    let g = group(GroupTag::O, &L20O, 2);
    let k = g.k().as_ref();
    let refl = g.reflections_by_enumeration();
    for &r in &refl {
        for t in g.elements() {
            let c = g.mul_triples(g.mul_triples(t, r), triple_inv(k, t));
            assert!(g.is_reflection(c) && g.contains(c));
        }
    }
}

#[test]
fn orbit_types() {
    assert_eq!(reflection_orbit_types(&group(GroupTag::O, &L20O, 2)).to_string(), "2C2,2C2,6C2,12C2");
    let tt = group(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"], 24);
    assert_eq!(reflection_orbit_types(&tt).to_string(), "2T,24C2");
    let i30 = group(GroupTag::I, &["1", "(1+i+j+k)/2", "(tau+sigma*i-j)/2"], 1);
    assert_eq!(reflection_orbit_types(&i30).to_string(), "30C2");
    assert_eq!(reflection_orbit_types(&group(GroupTag::T, &L12, 1)).to_string(), "12C2");
}

#[test]
fn realized_reflections() {
    let g = group(GroupTag::T, &L12, 2);
    let mats = realize_matrices(&g).unwrap();
    let m = g.k().quaternions().unwrap()[0].conductor();
    assert_eq!(mats[0], QuatMatrix2::identity(m));
    for (t, mat) in g.elements().zip(&mats) {
        assert_eq!(g.is_reflection(t), mat.sub_identity().rank() == 1);
    }
    // root of [[0,b],[b^-1,0]] is (1, -conj b)
    let q = g.k().quaternions().unwrap();
    for b in g.l().iter() {
        let r = matrices::realize_triple(&g, anti_reflection(g.k().as_ref(), b)).unwrap();
        let root = [q[0].clone(), -&q[b].conj()];
        let image = [
            (&r.entries[0] * &root[0]).add(&(&r.entries[1] * &root[1])),
            (&r.entries[2] * &root[0]).add(&(&r.entries[3] * &root[1])),
        ];
        assert_eq!(image, [-&root[0], -&root[1]]);
    }
    let d = group_ref(GroupTag::Dicyclic(3)).unwrap();
    let dm: GroupRef = crate::groups::DicyclicModel::shared(3);
    let l = ElementSet::from_indices(12, 0..12);
    let g = build_reflection_group(&dm, &l, &commutator_subgroup(&dm).members).unwrap();
    assert!(realize_matrices(&g).is_err());
    let _ = d;
}

#[test]
fn generated_groups() {
    let t = build_group(GroupTag::T).unwrap();
    let k: GroupRef = t.clone();
    let g = generate_from_reflections(
        &k,
        &t.parse_elements(&["(1+i+j+k)/2"]).unwrap(),
        &t.parse_elements(&["1", "i"]).unwrap(),
    )
    .unwrap();
    assert_eq!((g.order(), g.reflections().len()), (1152, 70));
    let g = generate_from_reflections(&k, &t.parse_elements(&["i", "j"]).unwrap(), &t.parse_elements(&["i"]).unwrap())
        .unwrap();
    assert_eq!((g.order(), g.reflections().len()), (128, 22));
    let g =
        generate_from_reflections(&k, &t.parse_elements(&["(1+i+j+k)/2"]).unwrap(), &t.parse_elements(&["i"]).unwrap())
            .unwrap();
    assert_eq!((g.order(), g.reflections().len()), (72, 16));
    let g = generate_from_reflections(&k, &t.parse_elements(&["j"]).unwrap(), &t.parse_elements(&["1", "i"]).unwrap())
        .unwrap();
    assert_eq!((g.order(), g.reflections().len()), (64, 14));
    let g = generate_from_reflections(&k, &[], &[0]).unwrap();
    assert_eq!(g.order(), 2);
    assert!(g.is_closed());
}

#[test]
fn inclusions_follow_l_and_h() {
    let base = group(GroupTag::T, &L12, 1);
    let higher = group(GroupTag::T, &L12, 2);
    let big = group(GroupTag::T, &["1", "i", "j", "(1+i+j+k)/2"], 8);
    for t in base.elements() {
        assert!(higher.contains(t) && big.contains(t));
    }
}

mod rank_n_tests {
    use super::super::rank_n::{in_rank_n, rank_n_group, MonomialN};
    use crate::exactarith::Quaternion;
    use crate::groups::{build_group, commutator_subgroup, group_ref, ElementSet, FiniteGroup, GroupRef, GroupTag};
    use num_bigint::BigUint;

    fn pseudo_random(seed: &mut u64, bound: usize) -> usize {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*seed >> 33) % bound as u64) as usize
    }

    fn random_monomial(seed: &mut u64, k: &dyn FiniteGroup, n: usize) -> MonomialN {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, pseudo_random(seed, i + 1));
        }
        MonomialN { b: (0..n).map(|_| pseudo_random(seed, k.order())).collect(), perm }
    }

    #[test]
    fn explicit_order_and_reflections() {
        for tag in [GroupTag::Cyclic(2), GroupTag::Cyclic(4), GroupTag::Dicyclic(2), GroupTag::Dicyclic(3), GroupTag::T]
        {
            let k = group_ref(tag).unwrap();
            let whole = ElementSet::full(k.order());
            for h in [commutator_subgroup(&k).members, whole] {
                let d = rank_n_group(3, &k, &h).unwrap();
                let ex = d.explicit.clone().expect("small enough to construct");
                let kn = k.order() as u64;
                let hn = h.len() as u64;
                assert_eq!(d.order, BigUint::from(6 * hn * kn * kn), "{tag}");
                assert_eq!(BigUint::from(ex.listed), d.order, "{tag}");
                assert_eq!(BigUint::from(ex.generated), d.order, "{tag}");
                assert_eq!(BigUint::from(ex.reflections), d.reflection_count, "{tag}");
                assert_eq!(ex.reflections as u64, 3 * (hn - 1) + 3 * kn, "{tag}");
                assert_ne!(BigUint::from(ex.reflections), d.reflection_count_stated, "{tag}");
            }
        }
    }

    #[test]
    fn preconditions() {
        let t = group_ref(GroupTag::T).unwrap();
        let trivial = ElementSet::from_indices(24, [0]);
        assert!(rank_n_group(3, &t, &trivial).is_err());
        assert!(rank_n_group(2, &t, &ElementSet::full(24)).is_err());
        let notsub = ElementSet::from_indices(24, [0, 1]);
        if !crate::groups::subgroups::is_subgroup(t.as_ref(), &notsub) {
            assert!(rank_n_group(3, &t, &notsub).is_err());
        }
        // the count is exact for large orders too
        let i = group_ref(GroupTag::I).unwrap();
        let d = rank_n_group(10, &i, &ElementSet::full(120)).unwrap();
        assert!(d.explicit.is_none());
        assert_eq!(d.order.to_string(), (BigUint::from(3628800u64) * BigUint::from(120u64).pow(10)).to_string());
    }

    /// The entry product is multiplicative modulo `[K,K]`.
    #[test]
    fn entry_product_cocycle() {
        let mut seed = 7u64;
        for tag in [GroupTag::Dicyclic(3), GroupTag::T, GroupTag::O] {
            let k = group_ref(tag).unwrap();
            let kk = commutator_subgroup(&k).members;
            for n in [3, 4] {
                for _ in 0..200 {
                    let a = random_monomial(&mut seed, k.as_ref(), n);
                    let b = random_monomial(&mut seed, k.as_ref(), n);
                    let lhs = a.mul(k.as_ref(), &b).entry_product(k.as_ref());
                    let rhs = k.mul(a.entry_product(k.as_ref()), b.entry_product(k.as_ref()));
                    assert!(kk.contains(k.mul(lhs, k.inv(rhs))), "{tag} n={n}");
                    if in_rank_n(k.as_ref(), &kk, &a) && in_rank_n(k.as_ref(), &kk, &b) {
                        assert!(in_rank_n(k.as_ref(), &kk, &a.mul(k.as_ref(), &b)));
                    }
                }
            }
        }
    }

    fn matrix(q: &crate::groups::FiniteQuaternionGroup, g: &MonomialN) -> Vec<Vec<Quaternion>> {
        let n = g.b.len();
        let m = q.conductor();
        let zero = Quaternion::from_ints(m, 0, 0, 0, 0);
        let mut a = vec![vec![zero; n]; n];
        // diag(b) P_sigma has entry b_i at (i, j) when sigma(j) = i
        for (j, &i) in g.perm.iter().enumerate() {
            a[i][j] = q.elements()[g.b[i]].clone();
        }
        a
    }

    /// Rank of a square quaternion matrix by row reduction with left multipliers.
    fn rank(mut a: Vec<Vec<Quaternion>>) -> usize {
        let n = a.len();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| !a[i][col].is_zero()) else { continue };
            a.swap(r, p);
            let inv = a[r][col].inverse().unwrap();
            for i in 0..n {
                if i != r && !a[i][col].is_zero() {
                    let f = a[i][col].try_mul(&inv).unwrap();
                    for c in 0..n {
                        let t = f.try_mul(&a[r][c]).unwrap();
                        a[i][c] = a[i][c].sub(&t);
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn cycle_rank_matches_matrix_rank() {
        let mut seed = 11u64;
        for tag in [GroupTag::Dicyclic(2), GroupTag::T] {
            let q = build_group(tag).unwrap();
            let k: GroupRef = q.clone();
            for n in [3, 4] {
                for trial in 0..300 {
                    let mut g = random_monomial(&mut seed, k.as_ref(), n);
                    if trial % 3 == 0 {
                        // force some identity entries so that fixed points occur
                        for x in g.b.iter_mut().take(n - 1) {
                            *x = 0;
                        }
                    }
                    let mut a = matrix(&q, &g);
                    for (i, row) in a.iter_mut().enumerate() {
                        row[i] = row[i].sub(&Quaternion::one(q.conductor()));
                    }
                    assert_eq!(g.rank_minus_identity(k.as_ref()), rank(a), "{tag} {g:?}");
                }
            }
        }
    }
}
