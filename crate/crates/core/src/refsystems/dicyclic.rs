//! The reflection systems `L_(a,b)` of the dicyclic group `D_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::closure::{close_system, ReflectionSystem};
use crate::error::{Error, Result};
use crate::groups::{ElementSet, FiniteGroup, GroupRef};
use crate::numtheory::{divisors, factorize, gcd};

/// `(a, b)` with `a <= b`, `a | n`, `b | n`, `gcd(a, b) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DicyclicIndex {
    pub n: u64,
    pub a: u64,
    pub b: u64,
}

impl DicyclicIndex {
    pub fn new(n: u64, a: u64, b: u64) -> Result<Self> {
        let idx = DicyclicIndex { n, a, b };
        idx.validate()?;
        Ok(idx)
    }

    pub fn validate(&self) -> Result<()> {
        let DicyclicIndex { n, a, b } = *self;
        if n < 2 || a == 0 || b == 0 || a > b || n % a != 0 || n % b != 0 || gcd(a, b) != 1 {
            return Err(Error::InvalidIndex(format!(
                "({a},{b}) is not in Omega_{n}: need a <= b, a | n, b | n, gcd(a,b) = 1"
            )));
        }
        Ok(())
    }

    /// `2n/a + 2n/b`.
    pub fn system_size(&self) -> u64 {
        2 * self.n / self.a + 2 * self.n / self.b
    }
}

impl fmt::Display for DicyclicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_{}", self.a, self.b, self.n)
    }
}

/// All of `Omega_n`, sorted by `(a, b)`.
pub fn omega_set(n: u64) -> Vec<DicyclicIndex> {
    let ds = divisors(n);
    let mut out = Vec::new();
    for &a in &ds {
        for &b in &ds {
            if a <= b && gcd(a, b) == 1 {
                out.push(DicyclicIndex { n, a, b });
            }
        }
    }
    out
}

/// `(prod (2 alpha_j + 1) + 1) / 2`.
pub fn omega_count_formula(n: u64) -> u64 {
    let p: u64 = factorize(n).iter().map(|&(_, e)| 2 * u64::from(e) + 1).product();
    p.div_ceil(2)
}

/// Closure of `{1, w^a, j, w^b j}` in a dicyclic group.
pub fn dicyclic_system(k: &GroupRef, idx: DicyclicIndex) -> Result<ReflectionSystem> {
    idx.validate()?;
    let (n, w, j) =
        k.dicyclic_params().ok_or_else(|| Error::InvalidArgument(format!("{} is not dicyclic", k.name())))?;
    if n as u64 != idx.n {
        return Err(Error::InvalidArgument(format!("index {idx} does not belong to {}", k.name())));
    }
    let wa = k.power(w, idx.a as usize);
    let wbj = k.mul(k.power(w, idx.b as usize), j);
    close_system(k, &[0, wa, j, wbj])
}

/// `{w^(ma)} u {w^(lb) j}` written out directly.
pub fn dicyclic_system_explicit(k: &dyn FiniteGroup, idx: DicyclicIndex) -> Option<ElementSet> {
    let (n, w, j) = k.dicyclic_params()?;
    let mut s = ElementSet::new(k.order());
    for m in (0..2 * n).step_by(idx.a as usize) {
        s.insert(k.power(w, m));
    }
    for l in (0..2 * n).step_by(idx.b as usize) {
        s.insert(k.mul(k.power(w, l), j));
    }
    Some(s)
}
