//! Golden-data verification against the fixture files in `fixtures/`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::index::{missing_from_cohen, IndexQuadruple};
use super::isos::{family_isomorphism, find_isomorphisms, polyhedral_isomorphism};
use super::records::{
    classify_dicyclic, classify_k, classify_k_groups, dicyclic_reflection_group, order_scan, ClassificationRecord,
};
use crate::config;
use crate::error::{Error, Result};
use crate::groups::{build_group, GroupTag};
use crate::refgroups::iso::{find_isomorphism, iso_prescreen, IsoVerdict, SearchOutcome};
use crate::refgroups::monomial::monomial_closure;
use crate::refgroups::ReflectionGroup;

pub const SUITES: [&str; 6] = ["table1", "table3", "orders", "appendix", "isos", "missing"];

const TABLE1: &str = include_str!("../../fixtures/table1.json");
const TABLE3: &str = include_str!("../../fixtures/table3.json");
const ORDERS: &str = include_str!("../../fixtures/orders.json");
const APPENDIX: &str = include_str!("../../fixtures/appendix.json");
const MISSING: &str = include_str!("../../fixtures/missing.json");
const SYSTEMS: &str = include_str!("../../fixtures/systems.json");
const COROLLARY: &str = include_str!("../../fixtures/corollary.json");

/// Largest `n` for the odd family checked by the `isos` suite.
pub const FAMILY_CHECK_MAX_N: u64 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub item: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckRow {
    fn new(item: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckRow { item: item.into(), pass, detail: detail.into() }
    }

    fn compare<T: PartialEq + std::fmt::Debug>(item: impl Into<String>, expected: T, got: T) -> Self {
        let pass = expected == got;
        let detail = if pass { format!("{got:?}") } else { format!("expected {expected:?}, got {got:?}") };
        CheckRow::new(item, pass, detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<CheckRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("fixture {name} is malformed: {e}"))
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table1Row {
    #[serde(rename = "K")]
    pub k: String,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "H")]
    pub h: String,
    pub order: u64,
    pub refs: u64,
    pub orbits: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
    pub isomorphism: (String, String),
    pub distinct_groups: usize,
}

pub fn table1_fixture() -> Table1 {
    parse("table1", TABLE1)
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table3Row {
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "H")]
    pub h: String,
    pub order: u64,
    pub refs: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table3 {
    pub q8_rows: Vec<Table3Row>,
    pub n_range: (u64, u64),
}

pub fn table3_fixture() -> Table3 {
    parse("table3", TABLE3)
}

#[derive(Clone, Debug, Deserialize)]
pub struct OrderRow {
    pub label: String,
    pub refs: u64,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "H")]
    pub h: String,
}

/// The order tables keyed by order, plus the isomorphic and distinct label lists.
pub fn order_fixture() -> (BTreeMap<u64, Vec<OrderRow>>, Vec<(String, String)>, Vec<String>) {
    let raw: BTreeMap<String, serde_json::Value> = parse("orders", ORDERS);
    let mut tables = BTreeMap::new();
    let mut isomorphic = Vec::new();
    let mut distinct = Vec::new();
    for (key, v) in raw {
        match key.as_str() {
            "isomorphic" => isomorphic = serde_json::from_value(v).expect("orders fixture"),
            "distinct_22_at_192" => distinct = serde_json::from_value(v).expect("orders fixture"),
            _ => {
                let order: u64 = key.parse().expect("orders fixture key");
                tables.insert(order, serde_json::from_value(v).expect("orders fixture"));
            }
        }
    }
    (tables, isomorphic, distinct)
}

/// `(base element, number of powers)` for each of T, O, I.
pub fn appendix_fixture() -> BTreeMap<String, Vec<(String, usize)>> {
    parse("appendix", APPENDIX)
}

pub fn missing_fixture() -> (u64, Vec<IndexQuadruple>) {
    #[derive(Deserialize)]
    struct Missing {
        max_n: u64,
        indices: Vec<[u64; 4]>,
    }
    let m: Missing = parse("missing", MISSING);
    (m.max_n, m.indices.iter().map(|&[n, a, b, r]| IndexQuadruple::new(n, a, b, r)).collect())
}

/// `(system size, copy count)` per `K`.
pub fn systems_fixture() -> BTreeMap<String, Vec<(usize, usize)>> {
    parse("systems", SYSTEMS)
}

#[derive(Clone, Debug, Deserialize)]
pub struct TypeIIExample {
    pub left: [u64; 4],
    pub right: [u64; 4],
    pub c: u64,
    pub order: u64,
    pub refs: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CorollaryFixture {
    pub type_i_max_n: u64,
    pub type_i: Vec<([u64; 4], [u64; 4])>,
    pub type_ii_example: TypeIIExample,
}

pub fn corollary_fixture() -> CorollaryFixture {
    parse("corollary", COROLLARY)
}

pub fn quad(v: [u64; 4]) -> IndexQuadruple {
    IndexQuadruple::new(v[0], v[1], v[2], v[3])
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let rows = match name {
        "table1" => table1()?,
        "table3" => table3()?,
        "orders" => orders()?,
        "appendix" => appendix()?,
        "isos" => isos()?,
        "missing" => missing()?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite `{name}` (expected one of {})",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport { suite: name.to_string(), rows })
}

fn table1() -> Result<Vec<CheckRow>> {
    let fx = table1_fixture();
    let mut records: Vec<ClassificationRecord> = Vec::new();
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        records.extend(classify_k(tag)?);
    }
    let mut rows = Vec::new();
    for row in &fx.rows {
        let item = format!("{} |L|={} H={}", row.k, row.l, row.h);
        let found = records.iter().find(|r| r.k == row.k && r.l_size == row.l && r.h == row.h);
        rows.push(match found {
            None => CheckRow::new(item, false, "no such group computed"),
            Some(r) => CheckRow::compare(
                item,
                (row.order, row.refs, row.orbits.clone()),
                (r.order, r.reflections, r.orbit_types.clone()),
            ),
        });
    }
    rows.push(CheckRow::compare("group count", fx.rows.len(), records.len()));
    let iso = polyhedral_isomorphism()?;
    let (a, b) = &fx.isomorphism;
    let pass = iso.as_ref().is_some_and(|p| {
        let got = [p.left.as_str(), p.right.as_str()];
        got.contains(&a.as_str()) && got.contains(&b.as_str())
    });
    let detail = match &iso {
        Some(p) => format!("{} ~ {} ({} generator images checked)", p.left, p.right, p.map.len()),
        None => "explicit map does not extend to an isomorphism".into(),
    };
    rows.push(CheckRow::new(format!("{a} ~ {b}"), pass, detail));
    rows.push(CheckRow::compare("distinct groups", fx.distinct_groups, records.len() - usize::from(pass)));
    Ok(rows)
}

/// Order and reflection count of the group generated by the reflections of `g`.
pub fn explicit_counts(g: &ReflectionGroup) -> Result<(u64, u64)> {
    let closure = monomial_closure(g.k(), &g.reflection_generators(), config::max_order())?;
    Ok((closure.order() as u64, closure.reflections().len() as u64))
}

/// Stated order and reflection count of a dicyclic record.
pub fn dicyclic_formulas(rec: &ClassificationRecord, n: u64) -> (u64, u64) {
    match rec.index {
        Some(q) => (q.order(), q.reflections()),
        None if rec.l_size as u64 == 4 * n && rec.h == rec.k => (32 * n * n, 12 * n - 2),
        None => (16 * n * n, 8 * n - 2),
    }
}

fn table3() -> Result<Vec<CheckRow>> {
    let fx = table3_fixture();
    let mut rows = Vec::new();
    let q8 = classify_dicyclic(2)?;
    for row in &fx.q8_rows {
        let item = format!("Q8 |L|={} H={}", row.l, row.h);
        let found = q8.iter().find(|r| r.l_size == row.l && r.h == row.h);
        rows.push(match found {
            None => CheckRow::new(item, false, "no such group computed"),
            Some(r) => CheckRow::compare(item, (row.order, row.refs), (r.order, r.reflections)),
        });
    }
    rows.push(CheckRow::compare("Q8 group count", fx.q8_rows.len(), q8.len()));
    let (lo, hi) = fx.n_range;
    for n in lo..=hi {
        for rec in classify_dicyclic(n)? {
            let g = match rec.index {
                Some(q) => dicyclic_reflection_group(q)?,
                None => super::records::dicyclic_special(n, rec.l_size as u64 == 4 * n && rec.h != rec.k)?,
            };
            let formula = dicyclic_formulas(&rec, n);
            let counted = explicit_counts(&g)?;
            rows.push(CheckRow::compare(format!("n={n} {}", rec.label), formula, counted));
        }
    }
    Ok(rows)
}

/// The canonical group for a label: an index `[n,a,b,r]` or a polyhedral `G_K(L..,H)`.
pub fn group_by_label(label: &str) -> Result<ReflectionGroup> {
    if let Ok(q) = label.parse::<IndexQuadruple>() {
        return dicyclic_reflection_group(q);
    }
    let tag = match label.get(..4) {
        Some("G_T(") => GroupTag::T,
        Some("G_O(") => GroupTag::O,
        Some("G_I(") => GroupTag::I,
        _ => return Err(Error::InvalidArgument(format!("unrecognised group label `{label}`"))),
    };
    classify_k_groups(tag)?
        .into_iter()
        .find(|(r, _)| r.label == label)
        .map(|(_, g)| g)
        .ok_or_else(|| Error::InvalidArgument(format!("no canonical group `{label}`")))
}

/// Why two groups are not isomorphic, or `None` if they are (or the search was skipped).
pub fn distinctness_reason(g1: &ReflectionGroup, g2: &ReflectionGroup) -> Option<String> {
    if let IsoVerdict::Distinct(reasons) = iso_prescreen(g1, g2) {
        return Some(reasons.join("; "));
    }
    match find_isomorphism(g1, g2) {
        SearchOutcome::NotIsomorphic => Some("map search exhausted".into()),
        _ => None,
    }
}

fn orders() -> Result<Vec<CheckRow>> {
    let (tables, isomorphic, distinct) = order_fixture();
    let mut rows = Vec::new();
    for (order, expected) in &tables {
        let scan = order_scan(*order)?;
        for row in expected {
            let item = format!("order {order} {}", row.label);
            let found = scan.iter().find(|r| r.label == row.label);
            rows.push(match found {
                None => CheckRow::new(item, false, "not found in scan"),
                Some(r) => {
                    CheckRow::compare(item, (row.refs, row.l, row.h.clone()), (r.reflections, r.l_size, r.h.clone()))
                }
            });
        }
        let extra: Vec<&str> =
            scan.iter().filter(|r| !expected.iter().any(|e| e.label == r.label)).map(|r| r.label.as_str()).collect();
        rows.push(CheckRow::new(
            format!("order {order} row count"),
            extra.is_empty() && scan.len() == expected.len(),
            format!("{} rows, unexpected: {extra:?}", scan.len()),
        ));
    }
    for (a, b) in &isomorphic {
        let pair = known_isomorphism(a, b)?;
        rows.push(CheckRow::new(format!("{a} ~ {b}"), pair, if pair { "map verified" } else { "no verified map" }));
    }
    let groups: Vec<ReflectionGroup> = distinct.iter().map(|l| group_by_label(l)).collect::<Result<_>>()?;
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            let reason = distinctness_reason(&groups[i], &groups[j]);
            rows.push(CheckRow::new(
                format!("{} !~ {}", distinct[i], distinct[j]),
                reason.is_some(),
                reason.unwrap_or_else(|| "not certified distinct".into()),
            ));
        }
    }
    Ok(rows)
}

fn known_isomorphism(a: &str, b: &str) -> Result<bool> {
    let poly = ["G_T(L12,C2)", "G_O(L14,1)"];
    if poly.contains(&a) && poly.contains(&b) {
        return Ok(polyhedral_isomorphism()?.is_some());
    }
    let (Ok(p), Ok(q)) = (a.parse::<IndexQuadruple>(), b.parse::<IndexQuadruple>()) else {
        return Ok(false);
    };
    let (s, t) = if p.n < q.n { (p, q) } else { (q, p) };
    if s != IndexQuadruple::new(s.n, 1, s.n, 2) || t != IndexQuadruple::new(2 * s.n, 2, s.n, 1) {
        return Ok(false);
    }
    Ok(family_isomorphism(s.n)?.is_some())
}

fn appendix() -> Result<Vec<CheckRow>> {
    let fx = appendix_fixture();
    let mut rows = Vec::new();
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        let g = build_group(tag)?;
        let lists = fx.get(&tag.name()).ok_or_else(|| Error::InvalidArgument(format!("no appendix list for {tag}")))?;
        let mut set = BTreeSet::new();
        for (base, count) in lists {
            let q = crate::exactarith::parse_quaternion(g.conductor(), base)?;
            let mut p = q.clone();
            for _ in 0..*count {
                let idx = g.index_of(&p).ok_or_else(|| Error::Construction(format!("{base} power not in {tag}")))?;
                set.insert(idx);
                p = p.try_mul(&q)?;
            }
        }
        rows.push(CheckRow::compare(format!("{tag} elements"), g.elements().len(), set.len()));
    }
    Ok(rows)
}

fn isos() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let poly = polyhedral_isomorphism()?;
    rows.push(CheckRow::new(
        "G_O(L14,1) ~ G_T(L12,C2)",
        poly.is_some(),
        if poly.is_some() { "map verified" } else { "map does not extend" },
    ));
    let mut expected: BTreeSet<(String, String)> = BTreeSet::new();
    expected.insert(("G_O(L14,1)".into(), "G_T(L12,C2)".into()));
    for n in (3..=FAMILY_CHECK_MAX_N).step_by(2) {
        let p = family_isomorphism(n)?;
        let (l, r) = (IndexQuadruple::new(n, 1, n, 2), IndexQuadruple::new(2 * n, 2, n, 1));
        rows.push(CheckRow::new(
            format!("{l} ~ {r}"),
            p.is_some(),
            if p.is_some() { "map verified" } else { "map does not extend" },
        ));
        expected.insert((l.to_string(), r.to_string()));
    }
    for n in (2..=8).step_by(2) {
        let q = IndexQuadruple::new(n, 1, n, 2);
        rows.push(CheckRow::new(format!("{q} for even n"), q.validate().is_err(), "not an index, no family pair"));
    }
    let found: BTreeSet<(String, String)> = find_isomorphisms(FAMILY_CHECK_MAX_N)?
        .into_iter()
        .map(|p| if p.left < p.right { (p.left, p.right) } else { (p.right, p.left) })
        .collect();
    let expected: BTreeSet<(String, String)> =
        expected.into_iter().map(|(a, b)| if a < b { (a, b) } else { (b, a) }).collect();
    rows.push(CheckRow::compare(format!("all isomorphisms, n <= {FAMILY_CHECK_MAX_N}"), expected, found));
    Ok(rows)
}

fn missing() -> Result<Vec<CheckRow>> {
    let (max_n, mut expected) = missing_fixture();
    expected.sort();
    let got = missing_from_cohen(max_n);
    let mut rows: Vec<CheckRow> = expected
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let found = got.get(i).map_or_else(|| "nothing".to_string(), ToString::to_string);
            CheckRow::compare(format!("#{}", i + 1), q.to_string(), found)
        })
        .collect();
    rows.push(CheckRow::compare("list length", expected.len(), got.len()));
    Ok(rows)
}
