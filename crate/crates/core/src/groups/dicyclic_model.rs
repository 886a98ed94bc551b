//! The dicyclic group D_n = <w, j | w^{2n} = 1, j^2 = w^n, j w j^-1 = w^-1>
//! as arithmetic on exponent pairs, with no quaternion realization.
//!
//! Index `m + 2n e` stands for `w^m j^e` with `0 <= m < 2n`, `e in {0, 1}`.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_integer::Integer;

use super::table::{FiniteGroup, GroupRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DicyclicModel {
    n: usize,
}

static MODELS: LazyLock<Mutex<HashMap<usize, GroupRef>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

impl DicyclicModel {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "dicyclic model needs n >= 2");
        DicyclicModel { n }
    }

    pub fn shared(n: usize) -> GroupRef {
        let mut cache = MODELS.lock().unwrap_or_else(|e| e.into_inner());
        cache.entry(n).or_insert_with(|| Arc::new(DicyclicModel::new(n))).clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of `w^m j^e`.
    pub fn index(&self, m: i64, e: usize) -> usize {
        let t = 2 * self.n as i64;
        m.rem_euclid(t) as usize + 2 * self.n * (e & 1)
    }

    /// Exponent pair `(m, e)` of an index.
    pub fn split(&self, x: usize) -> (usize, usize) {
        (x % (2 * self.n), x / (2 * self.n))
    }
}

impl FiniteGroup for DicyclicModel {
    fn name(&self) -> String {
        if self.n == 2 {
            "Q8".to_string()
        } else {
            format!("D{}", self.n)
        }
    }

    fn order(&self) -> usize {
        4 * self.n
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let (m1, e1) = self.split(x);
        let (m2, e2) = self.split(y);
        let (m1, m2) = (m1 as i64, m2 as i64);
        match (e1, e2) {
            (0, e) => self.index(m1 + m2, e),
            (_, 0) => self.index(m1 - m2, 1),
            _ => self.index(m1 - m2 + self.n as i64, 0),
        }
    }

    fn inv(&self, x: usize) -> usize {
        let (m, e) = self.split(x);
        if e == 0 {
            self.index(-(m as i64), 0)
        } else {
            self.index(m as i64 + self.n as i64, 1)
        }
    }

    fn element_order(&self, x: usize) -> usize {
        let (m, e) = self.split(x);
        if e == 1 {
            4
        } else {
            2 * self.n / m.gcd(&(2 * self.n))
        }
    }

    fn dicyclic_params(&self) -> Option<(usize, usize, usize)> {
        Some((self.n, self.index(1, 0), self.index(0, 1)))
    }

    fn element_label(&self, x: usize) -> String {
        match self.split(x) {
            (0, 0) => "1".to_string(),
            (1, 0) => "w".to_string(),
            (m, 0) => format!("w^{m}"),
            (0, _) => "j".to_string(),
            (1, _) => "wj".to_string(),
            (m, _) => format!("w^{m}j"),
        }
    }
}
