//! The index quadruples `[n, a, b, r]` labelling `G(n, a, b, r)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::refsystems::{omega_set, DicyclicIndex};

/// `G(n, a, b, r) = G_{D_n}(L_(a,b), C_r)` with `C_r = <w^(2n/r)>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexQuadruple {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub r: u64,
}

impl fmt::Display for IndexQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.n, self.a, self.b, self.r)
    }
}

impl FromStr for IndexQuadruple {
    type Err = Error;

    /// `n,a,b,r`, optionally in brackets.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<u64> = body
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidArgument(format!("`{s}` is not n,a,b,r")))?;
        match parts[..] {
            [n, a, b, r] => Ok(IndexQuadruple { n, a, b, r }),
            _ => Err(Error::InvalidArgument(format!("`{s}` is not n,a,b,r"))),
        }
    }
}

impl IndexQuadruple {
    pub fn new(n: u64, a: u64, b: u64, r: u64) -> Self {
        IndexQuadruple { n, a, b, r }
    }

    pub fn pair(&self) -> DicyclicIndex {
        DicyclicIndex { n: self.n, a: self.a, b: self.b }
    }

    /// Membership in `Lambda_n`.
    pub fn validate(&self) -> Result<()> {
        DicyclicIndex::new(self.n, self.a, self.b)?;
        let abr = self.a * self.b * self.r;
        let ok = abr == self.n || (abr == 2 * self.n && (self.a * self.b) % 2 == 1);
        if !ok {
            return Err(Error::InvalidIndex(format!(
                "{self} is not in Lambda_{}: need abr = n, or abr = 2n with ab odd",
                self.n
            )));
        }
        Ok(())
    }

    pub fn is_base(&self) -> bool {
        self.a * self.b * self.r == self.n
    }

    /// `8nr`.
    pub fn order(&self) -> u64 {
        8 * self.n * self.r
    }

    /// `2r + 2n/a + 2n/b - 2`.
    pub fn reflections(&self) -> u64 {
        2 * self.r + 2 * self.n / self.a + 2 * self.n / self.b - 2
    }

    pub fn l_size(&self) -> u64 {
        2 * self.n / self.a + 2 * self.n / self.b
    }

    /// Swap to `a <= b`.
    pub fn normalized(self) -> Self {
        if self.a <= self.b {
            self
        } else {
            IndexQuadruple { a: self.b, b: self.a, ..self }
        }
    }
}

/// `Lambda_n`: `[n,a,b,n/ab]` for all of `Omega_n`, then `[n,a,b,2n/ab]` for `ab` odd.
pub fn lambda_set(n: u64) -> Vec<IndexQuadruple> {
    if n < 2 {
        return Vec::new();
    }
    let omega = omega_set(n);
    let mut out: Vec<IndexQuadruple> =
        omega.iter().map(|d| IndexQuadruple::new(n, d.a, d.b, n / (d.a * d.b))).collect();
    out.extend(
        omega.iter().filter(|d| (d.a * d.b) % 2 == 1).map(|d| IndexQuadruple::new(n, d.a, d.b, 2 * n / (d.a * d.b))),
    );
    out
}

/// The indices of `Lambda_n`, `n <= max_n`, with `(a,b) != (1,1)`, `r != 2`,
/// `r` not dividing `n` and `r` dividing `2n`; sorted.
pub fn missing_from_cohen(max_n: u64) -> Vec<IndexQuadruple> {
    let mut out: Vec<IndexQuadruple> = (2..=max_n)
        .flat_map(lambda_set)
        .filter(|q| (q.a, q.b) != (1, 1) && q.r != 2 && q.n % q.r != 0 && (2 * q.n) % q.r == 0)
        .collect();
    out.sort();
    out
}

fn odd_r(r: u64) -> Result<()> {
    if r.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("r = {r} must be odd")));
    }
    Ok(())
}

fn product_condition(l: u64, x: u64, y: u64) -> Result<()> {
    if gcd(l, x) * gcd(l, y) != l {
        return Err(Error::InvalidArgument(format!("{l} != gcd({l},{x}) gcd({l},{y})")));
    }
    Ok(())
}

fn bounded_r(r: u64, max: u64) -> Result<()> {
    if r > max {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds {max}")));
    }
    Ok(())
}

/// The index of a group on a line of Cohen's table of dicyclic reflection
/// groups. Lines 4 and 5 are the groups with noncyclic `H` and have no index.
pub fn cohen_index(line: u32, m: u64, ell: u64, r: u64) -> Result<IndexQuadruple> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let q = match line {
        1 => IndexQuadruple::new(m, 1, 1, 2 * m),
        2 | 3 => {
            if ell == 0 {
                return Err(Error::InvalidArgument("l must be positive".into()));
            }
            odd_r(r)?;
            bounded_r(r, ell)?;
            let (lo, hi) = ((r.saturating_sub(1)) / 2, r.div_ceil(2));
            product_condition(ell, lo, hi)?;
            let (n, rr) = if line == 2 { (2 * m * ell, 2 * m) } else { ((2 * m + 1) * ell, 2 * m + 1) };
            IndexQuadruple::new(n, gcd(ell, lo), gcd(ell, hi), rr)
        }
        6 => {
            let p = 2 * m + 1;
            bounded_r(r, m)?;
            let (lo, hi) = (r.abs_diff(1), r + 1);
            product_condition(p, lo, hi)?;
            IndexQuadruple::new(p, gcd(p, lo), gcd(p, hi), 2)
        }
        7 => {
            odd_r(r)?;
            bounded_r(r, m)?;
            let (lo, hi) = ((r - 1) / 2, r.div_ceil(2));
            product_condition(m, lo, hi)?;
            IndexQuadruple::new(m, gcd(m, lo), gcd(m, hi), 1)
        }
        4 | 5 => {
            return Err(Error::InvalidArgument(format!("line {line} has noncyclic H and no index")));
        }
        _ => return Err(Error::InvalidArgument(format!("no line {line}"))),
    };
    let q = q.normalized();
    q.validate()?;
    Ok(q)
}
