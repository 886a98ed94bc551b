use std::fmt;
use std::ops::{Mul, Neg};

use serde_json::Value;

use super::cyclotomic::FieldScalar;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `a + b i + c j + d k` with coefficients in one cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion {
    a: FieldScalar,
    b: FieldScalar,
    c: FieldScalar,
    d: FieldScalar,
}

impl Quaternion {
    pub fn new(a: FieldScalar, b: FieldScalar, c: FieldScalar, d: FieldScalar) -> Result<Self> {
        let m = a.conductor();
        for s in [&b, &c, &d] {
            if s.conductor() != m {
                return Err(Error::ConductorMismatch { left: m, right: s.conductor() });
            }
        }
        Ok(Quaternion { a, b, c, d })
    }

    pub fn from_rationals(m: u64, q: [Rational; 4]) -> Self {
        let [a, b, c, d] = q;
        Quaternion {
            a: FieldScalar::from_rational(m, a),
            b: FieldScalar::from_rational(m, b),
            c: FieldScalar::from_rational(m, c),
            d: FieldScalar::from_rational(m, d),
        }
    }

    pub fn from_ints(m: u64, a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion {
            a: FieldScalar::from_int(m, a),
            b: FieldScalar::from_int(m, b),
            c: FieldScalar::from_int(m, c),
            d: FieldScalar::from_int(m, d),
        }
    }

    pub fn scalar(s: FieldScalar) -> Self {
        let m = s.conductor();
        Quaternion { a: s, b: FieldScalar::zero(m), c: FieldScalar::zero(m), d: FieldScalar::zero(m) }
    }

    pub fn one(m: u64) -> Self {
        Self::from_ints(m, 1, 0, 0, 0)
    }

    pub fn i(m: u64) -> Self {
        Self::from_ints(m, 0, 1, 0, 0)
    }

    pub fn j(m: u64) -> Self {
        Self::from_ints(m, 0, 0, 1, 0)
    }

    pub fn k(m: u64) -> Self {
        Self::from_ints(m, 0, 0, 0, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.a.conductor()
    }

    pub fn coeffs(&self) -> [&FieldScalar; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|s| s.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Hamilton product.
    pub fn try_mul(&self, q: &Quaternion) -> Result<Quaternion> {
        if self.conductor() != q.conductor() {
            return Err(Error::ConductorMismatch { left: self.conductor(), right: q.conductor() });
        }
        let m = self.conductor();
        let p = self.coeffs();
        let r = q.coeffs();
        // sign and target component of e_s * e_t for basis 1, i, j, k
        const TABLE: [[(i8, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let mut out: [FieldScalar; 4] = std::array::from_fn(|_| FieldScalar::zero(m));
        for s in 0..4 {
            if p[s].is_zero() {
                continue;
            }
            for t in 0..4 {
                if r[t].is_zero() {
                    continue;
                }
                let (sign, target) = TABLE[s][t];
                let prod = p[s] * r[t];
                out[target] = if sign > 0 { &out[target] + &prod } else { &out[target] - &prod };
            }
        }
        let [a, b, c, d] = out;
        Ok(Quaternion { a, b, c, d })
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion { a: self.a.clone(), b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Reduced norm `a^2 + b^2 + c^2 + d^2`.
    pub fn norm(&self) -> FieldScalar {
        let mut n = FieldScalar::zero(self.conductor());
        for s in self.coeffs() {
            if !s.is_zero() {
                n = &n + &(s * s);
            }
        }
        n
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn inverse(&self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = self.norm();
        if n.is_one() {
            return Ok(self.conj());
        }
        let ninv = n.inverse()?;
        let c = self.conj();
        Ok(Quaternion { a: &c.a * &ninv, b: &c.b * &ninv, c: &c.c * &ninv, d: &c.d * &ninv })
    }

    pub fn scale(&self, s: &FieldScalar) -> Quaternion {
        Quaternion { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }

    pub fn scale_rational(&self, q: &Rational) -> Quaternion {
        Quaternion { a: self.a.scale(q), b: self.b.scale(q), c: self.c.scale(q), d: self.d.scale(q) }
    }

    pub fn add(&self, q: &Quaternion) -> Quaternion {
        Quaternion { a: &self.a + &q.a, b: &self.b + &q.b, c: &self.c + &q.c, d: &self.d + &q.d }
    }

    pub fn sub(&self, q: &Quaternion) -> Quaternion {
        self.add(&-q)
    }

    pub fn pow(&self, e: u32) -> Quaternion {
        let mut r = Quaternion::one(self.conductor());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Re-express over a field whose conductor is a multiple of the current one.
    pub fn lift(&self, target: u64) -> Result<Quaternion> {
        Ok(Quaternion {
            a: self.a.lift(target)?,
            b: self.b.lift(target)?,
            c: self.c.lift(target)?,
            d: self.d.lift(target)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self.coeffs().iter().map(|s| s.to_json()["coeffs"].clone()).collect();
        serde_json::json!({ "conductor": self.conductor(), "coeffs": comps })
    }

    pub fn from_json(v: &Value) -> Option<Quaternion> {
        let m = v.get("conductor")?;
        let comps = v.get("coeffs")?.as_array()?;
        if comps.len() != 4 {
            return None;
        }
        let mut s = Vec::with_capacity(4);
        for c in comps {
            s.push(FieldScalar::from_json(&serde_json::json!({"conductor": m, "coeffs": c}))?);
        }
        let mut it = s.into_iter();
        Quaternion::new(it.next()?, it.next()?, it.next()?, it.next()?).ok()
    }

    /// Text form `a + b*i + c*j + d*k`, omitting zero terms.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (s, unit) in self.coeffs().iter().zip(["", "i", "j", "k"]) {
            if s.is_zero() {
                continue;
            }
            let body = s.render();
            let term = if unit.is_empty() {
                body
            } else if body == "1" {
                unit.to_string()
            } else if body == "-1" {
                format!("-{unit}")
            } else if s.as_rational().is_some() {
                format!("{body}*{unit}")
            } else {
                format!("({body})*{unit}")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    /// Panics on a conductor mismatch; use `try_mul` to get an error instead.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        self.try_mul(rhs).expect("quaternion multiplication")
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
