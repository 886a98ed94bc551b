//! Plain-text tables for classification records.

use super::records::ClassificationRecord;

const HEADERS: [&str; 8] = ["K", "|L|", "H", "order", "refs", "orbits", "ℒ", "ℋ"];

fn cells(r: &ClassificationRecord) -> [String; 8] {
    let k = match r.index {
        Some(q) => format!("{} {q}", r.k),
        None => r.label.clone(),
    };
    let hgens = if r.h_generators.is_empty() { "-".to_string() } else { r.h_generators.join(", ") };
    [
        k,
        r.l_size.to_string(),
        r.h.clone(),
        r.order.to_string(),
        r.reflections.to_string(),
        r.orbit_types.clone(),
        r.l_generators.join(", "),
        hgens,
    ]
}

/// Aligned rows in the column order `K, |L|, H, order, refs, orbits, ℒ, ℋ`.
pub fn render_table(records: &[ClassificationRecord]) -> String {
    let rows: Vec<[String; 8]> = records.iter().map(cells).collect();
    let mut widths: Vec<usize> = HEADERS.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, (c, w)) in cols.iter().zip(&widths).enumerate() {
            if i + 1 == cols.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(w - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(HEADERS.to_vec());
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_dicyclic, IndexQuadruple};

    #[test]
    fn columns_line_up() {
        let recs = classify_dicyclic(3).unwrap();
        let text = render_table(&recs);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), recs.len() + 1);
        assert!(lines[0].starts_with("K "));
        let q = IndexQuadruple::new(3, 1, 3, 2);
        assert!(lines.iter().any(|l| l.contains(&q.to_string()) && l.contains(" 48 ")));
        let col = lines[0].find("order").unwrap();
        assert!(lines[1..].iter().all(|l| l.chars().nth(col - 1) == Some(' ')));
    }
}
