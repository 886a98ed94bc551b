//! Elements of the cyclotomic field Q(zeta_m) in the power basis modulo the
//! m-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::rational::{int, rat, rational_from_json, rational_to_json, rational_to_string, Rational};
use crate::error::{Error, Result};
use crate::numtheory::{cyclotomic_polynomial, euler_phi};

/// Reduction data for one conductor.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u64,
    degree: usize,
    poly: Vec<i64>,
    /// `powers[k]` is `x^k mod Phi_m` for `0 <= k < m`, stored sparsely.
    powers: Vec<Vec<(usize, i64)>>,
}

static FIELDS: LazyLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

impl CyclotomicField {
    /// Shared field of conductor `m`, built on first use.
    pub fn get(m: u64) -> Arc<CyclotomicField> {
        assert!(m >= 1, "conductor must be positive");
        let mut cache = FIELDS.lock().unwrap_or_else(|e| e.into_inner());
        cache.entry(m).or_insert_with(|| Arc::new(CyclotomicField::build(m))).clone()
    }

    fn build(m: u64) -> CyclotomicField {
        let poly = cyclotomic_polynomial(m);
        let degree = euler_phi(m) as usize;
        debug_assert_eq!(poly.len(), degree + 1);
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..m {
            powers.push(cur.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect::<Vec<_>>());
            // multiply by x, then replace x^degree by -sum poly[i] x^i
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] -= top * poly[i];
                }
            }
        }
        CyclotomicField { conductor: m, degree, poly, powers }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }
}

/// An exact element of Q(zeta_m).
#[derive(Clone)]
pub struct FieldScalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl FieldScalar {
    pub fn zero(m: u64) -> Self {
        let field = CyclotomicField::get(m);
        let coeffs = vec![Rational::zero(); field.degree];
        FieldScalar { field, coeffs }
    }

    pub fn from_rational(m: u64, q: Rational) -> Self {
        let mut s = Self::zero(m);
        s.coeffs[0] = q;
        s
    }

    pub fn from_int(m: u64, n: i64) -> Self {
        Self::from_rational(m, int(n))
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn root_of_unity(m: u64, k: i64) -> Self {
        let mut s = Self::zero(m);
        let e = k.rem_euclid(m as i64) as usize;
        for &(i, c) in &s.field.clone().powers[e] {
            s.coeffs[i] = int(c);
        }
        s
    }

    /// Reduce an arbitrary polynomial in `zeta_m` (coefficient of `zeta^i` at
    /// position `i`, any length) into the canonical basis.
    pub fn from_poly(m: u64, poly: &[Rational]) -> Self {
        let mut s = Self::zero(m);
        let field = s.field.clone();
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(t, pc) in &field.powers[i % m as usize] {
                s.coeffs[t] += c * BigInt::from(pc);
            }
        }
        s
    }

    /// `sqrt(2) = zeta_8 + zeta_8^{-1}`; requires `8 | m`.
    pub fn sqrt2(m: u64) -> Result<Self> {
        if !m.is_multiple_of(8) {
            return Err(Error::InvalidArgument(format!("sqrt(2) needs a conductor divisible by 8, got {m}")));
        }
        let e = (m / 8) as i64;
        Ok(&Self::root_of_unity(m, e) + &Self::root_of_unity(m, -e))
    }

    /// `sqrt(5) = 2 zeta_5 + 2 zeta_5^4 + 1`; requires `5 | m`.
    pub fn sqrt5(m: u64) -> Result<Self> {
        if !m.is_multiple_of(5) {
            return Err(Error::InvalidArgument(format!("sqrt(5) needs a conductor divisible by 5, got {m}")));
        }
        let e = (m / 5) as i64;
        let two = Self::from_int(m, 2);
        let s = &Self::root_of_unity(m, e) + &Self::root_of_unity(m, 4 * e);
        Ok(&(&two * &s) + &Self::one(m))
    }

    /// Golden ratio `(1 + sqrt 5) / 2`.
    pub fn tau(m: u64) -> Result<Self> {
        let r5 = Self::sqrt5(m)?;
        Ok((&Self::one(m) + &r5).scale(&rat(1, 2)))
    }

    /// `(1 - sqrt 5) / 2`.
    pub fn sigma(m: u64) -> Result<Self> {
        let r5 = Self::sqrt5(m)?;
        Ok((&Self::one(m) - &r5).scale(&rat(1, 2)))
    }

    /// `cos(2 pi k / m)` as an element of conductor `m`.
    pub fn cos_2pi(m: u64, k: i64) -> Self {
        (&Self::root_of_unity(m, k) + &Self::root_of_unity(m, -k)).scale(&rat(1, 2))
    }

    /// `sin(2 pi k / m)`; needs `4 | m` so that the complex unit lies in the field.
    pub fn sin_2pi(m: u64, k: i64) -> Result<Self> {
        if !m.is_multiple_of(4) {
            return Err(Error::InvalidArgument(format!("sin needs a conductor divisible by 4, got {m}")));
        }
        let q = (m / 4) as i64;
        // (z^k - z^-k) / (2 i) with i = z^q
        let d = &Self::root_of_unity(m, k - q) - &Self::root_of_unity(m, -k - q);
        Ok(d.scale(&rat(1, 2)))
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldScalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor() != other.conductor() {
            Err(Error::ConductorMismatch { left: self.conductor(), right: other.conductor() })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let field = &self.field;
        let m = field.conductor as usize;
        let deg = field.degree;
        let mut out = vec![Rational::zero(); deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                let d = (i + j) % m;
                if d < deg && field.powers[d].len() == 1 && field.powers[d][0] == (d, 1) {
                    out[d] += p;
                } else {
                    for &(t, c) in &field.powers[d] {
                        if c == 1 {
                            out[t] += &p;
                        } else if c == -1 {
                            out[t] -= &p;
                        } else {
                            out[t] += &p * BigInt::from(c);
                        }
                    }
                }
            }
        }
        Ok(FieldScalar { field: field.clone(), coeffs: out })
    }

    /// Multiplicative inverse, by solving `self * x = 1` over Q.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.conductor(), q.recip()));
        }
        let deg = self.field.degree;
        let m = self.conductor();
        // column j of the multiplication matrix is self * zeta^j
        let cols: Vec<FieldScalar> =
            (0..deg).map(|j| self.try_mul(&Self::root_of_unity(m, j as i64)).expect("same field")).collect();
        let mut rows: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut r: Vec<Rational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                r.push(if i == 0 { Rational::one() } else { Rational::zero() });
                r
            })
            .collect();
        let sol = solve_square(&mut rows, deg).ok_or(Error::ZeroInverse)?;
        Ok(FieldScalar { field: self.field.clone(), coeffs: sol })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inverse()?)
    }

    /// Re-express in a field of conductor `target`, which must be a multiple of
    /// the current conductor.
    pub fn lift(&self, target: u64) -> Result<Self> {
        let m = self.conductor();
        if !target.is_multiple_of(m) {
            return Err(Error::InvalidArgument(format!("cannot embed conductor {m} into conductor {target}")));
        }
        if target == m {
            return Ok(self.clone());
        }
        let step = (target / m) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::from_poly(target, &poly))
    }

    /// Complex conjugate, `zeta^k -> zeta^{-k}`.
    pub fn conj(&self) -> Self {
        let m = self.conductor() as usize;
        let mut poly = vec![Rational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(m - i) % m] += c;
        }
        Self::from_poly(m as u64, &poly)
    }

    /// Express `self` as a rational combination of `basis`, if possible.
    pub fn express_in(&self, basis: &[FieldScalar]) -> Option<Vec<Rational>> {
        let deg = self.field.degree;
        let k = basis.len();
        let mut rows: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut r: Vec<Rational> = basis.iter().map(|b| b.coeffs[i].clone()).collect();
                r.push(self.coeffs[i].clone());
                r
            })
            .collect();
        solve_any(&mut rows, k)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "conductor": self.conductor(),
            "coeffs": self.coeffs.iter().map(rational_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let m = v.get("conductor")?.as_u64()?;
        if m == 0 {
            return None;
        }
        let coeffs = v.get("coeffs")?.as_array()?.iter().map(rational_from_json).collect::<Option<Vec<_>>>()?;
        Some(Self::from_poly(m, &coeffs))
    }

    /// Human-readable form using sqrt(2), sqrt(5) or powers of zeta_m.
    pub fn render(&self) -> String {
        if let Some(q) = self.as_rational() {
            return rational_to_string(q);
        }
        let m = self.conductor();
        let one = Self::one(m);
        let quadratic: [(u64, &str, fn(u64) -> Result<FieldScalar>); 2] =
            [(8, "√2", Self::sqrt2), (5, "√5", Self::sqrt5)];
        for (d, name, f) in quadratic {
            if m.is_multiple_of(d) {
                let r = f(m).expect("divisible conductor");
                if let Some(c) = self.express_in(&[one.clone(), r]) {
                    return combine(&[(c[0].clone(), String::new()), (c[1].clone(), name.to_string())]);
                }
            }
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = match i {
                0 => String::new(),
                1 => format!("ζ{m}"),
                _ => format!("ζ{m}^{i}"),
            };
            terms.push((c.clone(), name));
        }
        combine(&terms)
    }
}

fn combine(terms: &[(Rational, String)]) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        let body = if name.is_empty() {
            rational_to_string(&a)
        } else if a.is_one() {
            name.clone()
        } else {
            format!("{}*{}", rational_to_string(&a), name)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Gaussian elimination on an augmented `n x (n+1)` system with a unique solution.
fn solve_square(rows: &mut [Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let sol = solve_any(rows, n)?;
    Some(sol)
}

/// Solve an augmented system with `k` unknowns; returns one solution if consistent.
fn solve_any(rows: &mut [Vec<Rational>], k: usize) -> Option<Vec<Rational>> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let (src, dst) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][k].clone();
    }
    Some(sol)
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for FieldScalar {}

impl Hash for FieldScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.conductor().cmp(&other.conductor()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// Operator forms panic on a conductor mismatch; the `try_*` methods report it.
impl Add for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        self.try_add(rhs).expect("scalar addition")
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self.try_sub(rhs).expect("scalar subtraction")
    }
}

impl Mul for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        self.try_mul(rhs).expect("scalar multiplication")
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta4_squares_to_minus_one() {
        let i = FieldScalar::root_of_unity(4, 1);
        assert_eq!(&i * &i, FieldScalar::from_int(4, -1));
    }

    #[test]
    fn sqrt2_from_zeta8() {
        let s = &FieldScalar::root_of_unity(8, 1) + &FieldScalar::root_of_unity(8, -1);
        assert_eq!(&s * &s, FieldScalar::from_int(8, 2));
        assert_eq!(s, FieldScalar::sqrt2(8).unwrap());
    }

    #[test]
    fn trivial_conductor() {
        assert_eq!(FieldScalar::root_of_unity(1, 0), FieldScalar::one(1));
        assert_eq!(FieldScalar::root_of_unity(2, 1), FieldScalar::from_int(2, -1));
    }

    #[test]
    fn sqrt5_and_golden_ratio() {
        let r = FieldScalar::sqrt5(20).unwrap();
        assert_eq!(&r * &r, FieldScalar::from_int(20, 5));
        let t = FieldScalar::tau(20).unwrap();
        let s = FieldScalar::sigma(20).unwrap();
        assert_eq!(&t + &s, FieldScalar::one(20));
        assert_eq!(&t * &s, FieldScalar::from_int(20, -1));
        assert!(FieldScalar::sqrt5(8).is_err());
    }

    #[test]
    fn cos_sin_pythagoras() {
        for m in [4u64, 8, 12, 20, 24, 40] {
            for k in 0..m as i64 {
                let c = FieldScalar::cos_2pi(m, k);
                let s = FieldScalar::sin_2pi(m, k).unwrap();
                assert!((&(&c * &c) + &(&s * &s)).is_one(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn cyclotomic_polynomial_vanishes() {
        for m in 1..=24u64 {
            let f = CyclotomicField::get(m);
            let poly: Vec<Rational> = f.polynomial().iter().map(|&c| int(c)).collect();
            assert!(FieldScalar::from_poly(m, &poly).is_zero(), "m={m}");
        }
    }

    #[test]
    fn inverse_and_lift() {
        let x = &FieldScalar::root_of_unity(12, 1) + &FieldScalar::from_int(12, 3);
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(FieldScalar::zero(12).inverse(), Err(Error::ZeroInverse));
        let z = FieldScalar::root_of_unity(4, 1).lift(20).unwrap();
        assert_eq!(z, FieldScalar::root_of_unity(20, 5));
        assert!(FieldScalar::one(8).lift(12).is_err());
    }

    #[test]
    fn mismatch_reported() {
        let a = FieldScalar::one(4);
        let b = FieldScalar::one(8);
        assert_eq!(a.try_mul(&b), Err(Error::ConductorMismatch { left: 4, right: 8 }));
    }

    #[test]
    fn rendering() {
        let h = FieldScalar::sqrt2(8).unwrap().scale(&rat(1, 2));
        assert_eq!(h.render(), "1/2*√2");
        let t = FieldScalar::tau(20).unwrap();
        assert_eq!(t.render(), "1/2 + 1/2*√5");
        assert_eq!(FieldScalar::from_int(4, -3).render(), "-3");
    }

    #[test]
    fn json_round_trip() {
        let t = FieldScalar::tau(20).unwrap();
        assert_eq!(FieldScalar::from_json(&t.to_json()), Some(t));
    }
}
