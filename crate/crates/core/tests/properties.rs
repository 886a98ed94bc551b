use proptest::prelude::*;

use quatrefl::classify::{lambda_set, IndexQuadruple};
use quatrefl::exactarith::{rat, FieldScalar, Quaternion, Rational};
use quatrefl::groups::{build_group, ElementSet, GroupRef, GroupTag};
use quatrefl::numtheory::tau;
use quatrefl::refsystems::closure::is_circ_closed;
use quatrefl::refsystems::{circ_closure, omega_count_formula, omega_set};

const CONDUCTORS: [u64; 5] = [4, 8, 12, 20, 24];

fn scalar(m: u64) -> impl Strategy<Value = FieldScalar> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..8)
        .prop_map(move |cs| FieldScalar::from_poly(m, &cs.iter().map(|&(p, q)| rat(p, q)).collect::<Vec<Rational>>()))
}

fn scalars(k: usize) -> impl Strategy<Value = (u64, Vec<FieldScalar>)> {
    prop::sample::select(&CONDUCTORS[..]).prop_flat_map(move |m| (Just(m), prop::collection::vec(scalar(m), k)))
}

fn quaternion(m: u64) -> impl Strategy<Value = Quaternion> {
    prop::collection::vec(scalar(m), 4)
        .prop_map(|v| Quaternion::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).unwrap())
}

fn small_group() -> impl Strategy<Value = GroupTag> {
    prop_oneof![
        (1u64..=12).prop_map(GroupTag::Cyclic),
        (2u64..=12).prop_map(GroupTag::Dicyclic),
        Just(GroupTag::T),
        Just(GroupTag::O),
        Just(GroupTag::I),
    ]
}

fn group_and_elements(k: usize) -> impl Strategy<Value = (GroupRef, Vec<usize>)> {
    small_group().prop_flat_map(move |tag| {
        let g: GroupRef = build_group(tag).unwrap();
        let n = g.order();
        (Just(g), prop::collection::vec(0..n, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_laws((_, v) in scalars(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((&(a - b) + b) == *a);
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a * b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn field_inverse((_, v) in scalars(2)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assume!(!a.is_zero());
        prop_assert!((a * &a.inverse().unwrap()).is_one());
        prop_assert_eq!(&(b.try_div(a).unwrap()) * a, b.clone());
    }

    #[test]
    fn lifting_is_a_ring_map((m, v) in scalars(2), mult in 1u64..=3) {
        let target = m * mult;
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!((a * b).lift(target).unwrap(), &a.lift(target).unwrap() * &b.lift(target).unwrap());
        prop_assert_eq!((a + b).lift(target).unwrap(), &a.lift(target).unwrap() + &b.lift(target).unwrap());
    }

    #[test]
    fn quaternion_norm_is_multiplicative(m in prop::sample::select(&CONDUCTORS[..]).prop_flat_map(|m| (quaternion(m), quaternion(m)))) {
        let (p, q) = m;
        let pq = p.try_mul(&q).unwrap();
        prop_assert_eq!(pq.norm(), &p.norm() * &q.norm());
        prop_assert_eq!(pq.conj(), q.conj().try_mul(&p.conj()).unwrap());
        if !p.is_zero() {
            prop_assert!(p.try_mul(&p.inverse().unwrap()).unwrap().is_one());
        }
    }

    #[test]
    fn cayley_tables_are_groups((g, xs) in group_and_elements(3)) {
        let (x, y, z) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
        let ord = g.element_order(x);
        prop_assert_eq!(g.order() % ord, 0);
        prop_assert_eq!(g.power(x, ord), g.identity());
        prop_assert_eq!(g.inv(g.mul(x, y)), g.mul(g.inv(y), g.inv(x)));
    }

    #[test]
    fn circ_closure_is_a_closure((g, xs) in group_and_elements(4)) {
        let seed = ElementSet::from_indices(g.order(), xs.iter().copied().chain([0]));
        let closed = circ_closure(g.as_ref(), &seed);
        prop_assert!(seed.is_subset(&closed));
        prop_assert!(is_circ_closed(g.as_ref(), &closed));
        prop_assert_eq!(circ_closure(g.as_ref(), &closed), closed.clone());
        let bigger = circ_closure(g.as_ref(), &ElementSet::from_indices(g.order(), closed.iter().chain([xs[0]])));
        prop_assert!(closed.is_subset(&bigger));
    }

    #[test]
    fn index_invariants(n in 2u64..=300) {
        let set = lambda_set(n);
        prop_assert_eq!(set.len() as u64, tau(2 * n * n) / 2 + 1);
        for q in set {
            prop_assert!(q.validate().is_ok());
            prop_assert_eq!(q.order(), 8 * q.n * q.r);
            prop_assert_eq!(q.reflections(), 2 * q.r + 2 * q.n / q.a + 2 * q.n / q.b - 2);
            let parsed: IndexQuadruple = q.to_string().parse().unwrap();
            prop_assert_eq!(parsed, q);
        }
    }

    #[test]
    fn omega_matches_its_count(n in 1u64..=500) {
        let set = omega_set(n);
        prop_assert_eq!(set.len() as u64, omega_count_formula(n));
        for d in set {
            prop_assert!(d.a <= d.b);
            prop_assert_eq!(n % d.a, 0);
            prop_assert_eq!(n % d.b, 0);
        }
    }
}
