//! Exact 2x2 quaternion matrices for the triples of a reflection group.

use serde_json::Value;

use super::model::{ReflectionGroup, Triple};
use crate::config;
use crate::error::{Error, Result};
use crate::exactarith::Quaternion;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatMatrix2 {
    /// Row-major entries.
    pub entries: [Quaternion; 4],
}

impl QuatMatrix2 {
    pub fn identity(m: u64) -> Self {
        let z = Quaternion::from_ints(m, 0, 0, 0, 0);
        QuatMatrix2 { entries: [Quaternion::one(m), z.clone(), z, Quaternion::one(m)] }
    }

    pub fn from_triple(q: &[Quaternion], t: Triple) -> Self {
        let m = q[0].conductor();
        let z = Quaternion::from_ints(m, 0, 0, 0, 0);
        let (x, y) = (q[t.x].clone(), q[t.y].clone());
        let entries = if t.s == 0 { [x, z.clone(), z, y] } else { [z.clone(), x, y, z] };
        QuatMatrix2 { entries }
    }

    pub fn mul(&self, other: &QuatMatrix2) -> QuatMatrix2 {
        let a = &self.entries;
        let b = &other.entries;
        let e = |i: usize, j: usize| (&a[2 * i] * &b[j]).add(&(&a[2 * i + 1] * &b[2 + j]));
        QuatMatrix2 { entries: [e(0, 0), e(0, 1), e(1, 0), e(1, 1)] }
    }

    pub fn sub_identity(&self) -> QuatMatrix2 {
        let m = self.entries[0].conductor();
        let one = Quaternion::one(m);
        let [a, b, c, d] = self.entries.clone();
        QuatMatrix2 { entries: [a.sub(&one), b, c, d.sub(&one)] }
    }

    /// Rank over the quaternions (rows as left combinations).
    pub fn rank(&self) -> usize {
        let [p, q, r, s] = &self.entries;
        let zero = |x: &Quaternion| x.is_zero();
        if [p, q, r, s].iter().all(|x| zero(x)) {
            return 0;
        }
        if zero(p) && zero(q) {
            return 1;
        }
        // row2 = lambda * row1 ?
        let dependent = if !zero(p) {
            let lambda = r * &p.inverse().expect("nonzero");
            &lambda * q == *s
        } else {
            zero(r)
        };
        if dependent {
            1
        } else {
            2
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(Quaternion::to_json).collect())
    }
}

fn quaternions(g: &ReflectionGroup) -> Result<&[Quaternion]> {
    g.k().quaternions().ok_or_else(|| Error::InvalidArgument(format!("{} has no quaternion realization", g.k().name())))
}

pub fn realize_triple(g: &ReflectionGroup, t: Triple) -> Result<QuatMatrix2> {
    Ok(QuatMatrix2::from_triple(quaternions(g)?, t))
}

/// Every element as an exact matrix.
pub fn realize_matrices(g: &ReflectionGroup) -> Result<Vec<QuatMatrix2>> {
    let bound = config::max_order();
    if g.size() > bound {
        return Err(Error::BoundExceeded { what: "matrix realization".into(), size: g.size(), bound });
    }
    let q = quaternions(g)?;
    Ok(g.elements().map(|t| QuatMatrix2::from_triple(q, t)).collect())
}
