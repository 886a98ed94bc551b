//! The rank-n groups `G_n(K, H)`: monomial matrices `diag(b_1..b_n) P_sigma`
//! with `b_1 ... b_n` in `H`, for `[K,K] <= H <= K`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::config;
use crate::error::{Error, Result};
use crate::groups::subgroups::{is_subgroup, type_name};
use crate::groups::{commutator_subgroup, ElementSet, FiniteGroup, GroupRef};

/// `diag(b) * P_sigma`, where `P_sigma e_j = e_sigma(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialN {
    pub b: Vec<usize>,
    pub perm: Vec<usize>,
}

impl MonomialN {
    pub fn identity(n: usize) -> Self {
        MonomialN { b: vec![0; n], perm: (0..n).collect() }
    }

    /// `(diag(b) P_s)(diag(c) P_t) = diag(b_i c_{s^-1(i)}) P_{st}`.
    pub fn mul(&self, k: &dyn FiniteGroup, other: &MonomialN) -> MonomialN {
        let n = self.b.len();
        let mut inv = vec![0; n];
        for (j, &s) in self.perm.iter().enumerate() {
            inv[s] = j;
        }
        MonomialN {
            b: (0..n).map(|i| k.mul(self.b[i], other.b[inv[i]])).collect(),
            perm: other.perm.iter().map(|&t| self.perm[t]).collect(),
        }
    }

    /// Product of the diagonal entries in index order.
    pub fn entry_product(&self, k: &dyn FiniteGroup) -> usize {
        self.b.iter().fold(0, |acc, &x| k.mul(acc, x))
    }

    /// `n - dim Fix(g)`: a fixed point contributes to `Fix` when its entry is 1,
    /// a longer cycle when the ordered product of its entries is 1.
    pub fn rank_minus_identity(&self, k: &dyn FiniteGroup) -> usize {
        let n = self.b.len();
        let mut seen = vec![false; n];
        let mut fixed = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut prod = 0;
            let mut j = start;
            loop {
                seen[j] = true;
                let next = self.perm[j];
                prod = k.mul(self.b[next], prod);
                j = next;
                if j == start {
                    break;
                }
            }
            if prod == 0 {
                fixed += 1;
            }
        }
        n - fixed
    }

    pub fn is_reflection(&self, k: &dyn FiniteGroup) -> bool {
        self.rank_minus_identity(k) == 1
    }

    fn encode(&self, kn: usize) -> usize {
        let mut code = perm_rank(&self.perm);
        for &x in &self.b {
            code = code * kn + x;
        }
        code
    }
}

fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for len in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=len {
                let mut q = p.clone();
                q.insert(pos, len);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Counts from the explicit construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankNExplicit {
    /// Elements of the defining set.
    pub listed: usize,
    /// Size of the closure of the reflections.
    pub generated: usize,
    pub reflections: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankNDescriptor {
    pub n: usize,
    pub k: String,
    pub h: String,
    /// `n! |H| |K|^(n-1)`.
    #[serde(serialize_with = "as_decimal")]
    pub order: BigUint,
    /// `n(|H| - 1) + |K|`, the stated count.
    #[serde(serialize_with = "as_decimal")]
    pub reflection_count_stated: BigUint,
    /// `n(|H| - 1) + C(n,2) |K|`: diagonal reflections plus one per
    /// transposition and entry of `K`.
    #[serde(serialize_with = "as_decimal")]
    pub reflection_count: BigUint,
    pub explicit: Option<RankNExplicit>,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn listed_elements(k: &dyn FiniteGroup, n: usize, h: &ElementSet) -> Vec<MonomialN> {
    let kn = k.order();
    let mut out = Vec::new();
    for perm in permutations(n) {
        let mut digits = vec![0usize; n - 1];
        loop {
            let prefix = digits.iter().fold(0, |acc, &x| k.mul(acc, x));
            for hh in h.iter() {
                let mut b = digits.clone();
                b.push(k.mul(k.inv(prefix), hh));
                out.push(MonomialN { b, perm: perm.clone() });
            }
            let mut i = 0;
            while i < n - 1 {
                digits[i] += 1;
                if digits[i] < kn {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == n - 1 {
                break;
            }
        }
    }
    out
}

fn rank_n_reflections(k: &dyn FiniteGroup, n: usize, h: &ElementSet) -> Vec<MonomialN> {
    let mut out = Vec::new();
    for i in 0..n {
        for x in h.iter().filter(|&x| x != 0) {
            let mut g = MonomialN::identity(n);
            g.b[i] = x;
            out.push(g);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for x in 0..k.order() {
                let mut g = MonomialN::identity(n);
                g.perm.swap(i, j);
                g.b[i] = x;
                g.b[j] = k.inv(x);
                out.push(g);
            }
        }
    }
    out
}

/// Descriptor for `G_n(K, H)`, with explicit counts when the order is within bound.
pub fn rank_n_group(n: usize, k: &GroupRef, h: &ElementSet) -> Result<RankNDescriptor> {
    let g = k.as_ref();
    if n < 3 {
        return Err(Error::InvalidArgument(format!("rank {n} < 3")));
    }
    if !is_subgroup(g, h) {
        return Err(Error::InvalidArgument("H is not a subgroup of K".into()));
    }
    if !commutator_subgroup(k).members.is_subset(h) {
        return Err(Error::InvalidArgument("H does not contain [K,K]".into()));
    }
    let kn = BigUint::from(g.order());
    let hn = BigUint::from(h.len());
    let nb = BigUint::from(n);
    let order = BigUint::from(factorial(n)) * &hn * kn.pow((n - 1) as u32);
    let diag = &nb * (&hn - 1u32);
    let reflection_count_stated = &diag + &kn;
    let reflection_count = &diag + BigUint::from(n * (n - 1) / 2) * &kn;
    let explicit = if order <= BigUint::from(config::max_order()) { Some(explicit_counts(g, n, h)) } else { None };
    Ok(RankNDescriptor {
        n,
        k: k.name(),
        h: type_name(g, h),
        order,
        reflection_count_stated,
        reflection_count,
        explicit,
    })
}

fn explicit_counts(k: &dyn FiniteGroup, n: usize, h: &ElementSet) -> RankNExplicit {
    let kn = k.order();
    let universe = factorial(n) * kn.pow(n as u32);
    let listed = listed_elements(k, n, h);
    let reflections = listed.iter().filter(|g| g.is_reflection(k)).count();
    let gens = rank_n_reflections(k, n, h);
    let mut seen = ElementSet::new(universe);
    let id = MonomialN::identity(n);
    seen.insert(id.encode(kn));
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head].clone();
        head += 1;
        for s in &gens {
            let c = a.mul(k, s);
            if seen.insert(c.encode(kn)) {
                queue.push(c);
            }
        }
    }
    RankNExplicit { listed: listed.len(), generated: queue.len(), reflections }
}

/// Whether `g` lies in `G_n(K, H)`.
pub fn in_rank_n(k: &dyn FiniteGroup, h: &ElementSet, g: &MonomialN) -> bool {
    h.contains(g.entry_product(k))
}
