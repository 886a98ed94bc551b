//! Parser for short quaternion expressions such as `(1+i)/r2`,
//! `(tau+sigma*i-j)/2` or `-k`.
//!
//! Grammar: an optional parenthesised sum followed by `/ divisor`, where a sum
//! is signed terms and a term is a `*`-separated product of rationals, the
//! scalar atoms `r2`, `r5`, `tau`, `sigma` (or `√2`, `√5`, `τ`, `σ`) and at
//! most one of the units `i`, `j`, `k`.

use super::cyclotomic::FieldScalar;
use super::quaternion::Quaternion;
use super::rational::Rational;
use crate::error::{Error, Result};

fn bad(s: &str, why: &str) -> Error {
    Error::InvalidArgument(format!("cannot parse `{s}`: {why}"))
}

fn atom(m: u64, name: &str) -> Result<Option<FieldScalar>> {
    Ok(Some(match name {
        "r2" | "√2" => FieldScalar::sqrt2(m)?,
        "r5" | "√5" => FieldScalar::sqrt5(m)?,
        "tau" | "τ" => FieldScalar::tau(m)?,
        "sigma" | "σ" => FieldScalar::sigma(m)?,
        _ => return Ok(None),
    }))
}

fn scalar_factor(m: u64, f: &str, whole: &str) -> Result<FieldScalar> {
    if let Some(s) = atom(m, f)? {
        return Ok(s);
    }
    let q: Rational = f.parse().map_err(|_| bad(whole, &format!("unknown factor `{f}`")))?;
    Ok(FieldScalar::from_rational(m, q))
}

fn term(m: u64, t: &str, whole: &str) -> Result<Quaternion> {
    let mut coeff = FieldScalar::one(m);
    let mut unit = Quaternion::one(m);
    let mut seen_unit = false;
    for f in t.split('*') {
        if f.is_empty() {
            return Err(bad(whole, "empty factor"));
        }
        let u = match f {
            "i" => Some(Quaternion::i(m)),
            "j" => Some(Quaternion::j(m)),
            "k" => Some(Quaternion::k(m)),
            _ => None,
        };
        match u {
            Some(u) if !seen_unit => {
                unit = u;
                seen_unit = true;
            }
            Some(_) => return Err(bad(whole, "two units in one term")),
            None => coeff = &coeff * &scalar_factor(m, f, whole)?,
        }
    }
    Ok(unit.scale(&coeff))
}

fn sum(m: u64, s: &str, whole: &str) -> Result<Quaternion> {
    let mut total = Quaternion::from_ints(m, 0, 0, 0, 0);
    let mut start = 0;
    let mut negative = false;
    let bytes: Vec<char> = s.chars().collect();
    let mut cur = String::new();
    let flush = |cur: &str, negative: bool, total: &mut Quaternion| -> Result<()> {
        if cur.is_empty() {
            return Err(bad(whole, "empty term"));
        }
        let t = term(m, cur, whole)?;
        *total = if negative { total.sub(&t) } else { total.add(&t) };
        Ok(())
    };
    for (idx, &c) in bytes.iter().enumerate() {
        if (c == '+' || c == '-') && idx > start {
            flush(&cur, negative, &mut total)?;
            cur.clear();
            negative = c == '-';
            start = idx + 1;
        } else if (c == '+' || c == '-') && idx == start {
            if c == '-' {
                negative = !negative;
            }
            start = idx + 1;
        } else {
            cur.push(c);
        }
    }
    flush(&cur, negative, &mut total)?;
    Ok(total)
}

/// Parse a quaternion over conductor `m`.
pub fn parse_quaternion(m: u64, input: &str) -> Result<Quaternion> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad(input, "empty"));
    }
    let (neg, body) = match s.strip_prefix("-(") {
        Some(rest) => (true, format!("({rest}")),
        None => (false, s.clone()),
    };
    let q = if let Some(rest) = body.strip_prefix('(') {
        let close = rest.rfind(')').ok_or_else(|| bad(input, "unbalanced parenthesis"))?;
        let inner = sum(m, &rest[..close], input)?;
        let tail = &rest[close + 1..];
        if tail.is_empty() {
            inner
        } else if let Some(d) = tail.strip_prefix('/') {
            let mut div = FieldScalar::one(m);
            for f in d.split('*') {
                div = &div * &scalar_factor(m, f, input)?;
            }
            inner.scale(&div.inverse()?)
        } else {
            return Err(bad(input, "trailing characters"));
        }
    } else {
        sum(m, &body, input)?
    };
    Ok(if neg { -&q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rat;

    #[test]
    fn simple_forms() {
        assert_eq!(parse_quaternion(4, "i").unwrap(), Quaternion::i(4));
        assert_eq!(parse_quaternion(4, "-k").unwrap(), -&Quaternion::k(4));
        assert_eq!(
            parse_quaternion(4, "(1+i+j+k)/2").unwrap(),
            Quaternion::from_ints(4, 1, 1, 1, 1).scale_rational(&rat(1, 2))
        );
        assert_eq!(
            parse_quaternion(4, "-(1-i)/2").unwrap(),
            Quaternion::from_ints(4, -1, 1, 0, 0).scale_rational(&rat(1, 2))
        );
    }

    #[test]
    fn radicals() {
        let h = parse_quaternion(8, "(1+i)/r2").unwrap();
        assert_eq!(h.pow(2), Quaternion::i(8));
        let g = parse_quaternion(20, "(tau+sigma*i-j)/2").unwrap();
        assert!(g.is_unit());
        assert_eq!(g.pow(10), Quaternion::one(20));
        assert!(parse_quaternion(20, "(1+tau*i+sigma*j)/2").unwrap().is_unit());
    }

    #[test]
    fn errors() {
        assert!(parse_quaternion(4, "").is_err());
        assert!(parse_quaternion(4, "(1+i").is_err());
        assert!(parse_quaternion(4, "i*j").is_err());
        assert!(parse_quaternion(4, "x").is_err());
        assert!(parse_quaternion(4, "(1+i)/r2").is_err());
    }
}
