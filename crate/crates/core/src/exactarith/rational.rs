//! Rational numbers are `num_rational::BigRational`, which keeps values reduced
//! with a positive denominator. This module adds constructors and the JSON
//! `[num, den]` encoding.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// `[num, den]`; integers outside the `i64` range are written as strings.
pub fn rational_to_json(q: &Rational) -> Value {
    Value::Array(vec![bigint_json(q.numer()), bigint_json(q.denom())])
}

pub fn rational_from_json(v: &Value) -> Option<Rational> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    let num = bigint_from_json(&arr[0])?;
    let den = bigint_from_json(&arr[1])?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Plain text form: `3`, `-1/2`.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
