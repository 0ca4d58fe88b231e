use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::algebra::{BasisIndex, Generator};
use crate::qcombinat::skew_binomial_expand;
use crate::scalars::CycloScalar;

/// Powers of a fixed scalar. Roots of unity use a full period table;
/// anything else is exponentiated on demand.
pub(crate) struct Powers {
    base: CycloScalar,
    period: Option<Vec<CycloScalar>>,
}

impl Powers {
    pub fn new(base: CycloScalar) -> Self {
        let period = base.order_of_unity().map(|o| {
            let mut t = Vec::with_capacity(o as usize);
            let mut cur = CycloScalar::one_at(base.level());
            for _ in 0..o {
                t.push(cur.clone());
                cur = cur.mul(&base);
            }
            t
        });
        Powers { base, period }
    }

    pub fn get(&self, e: i64) -> CycloScalar {
        match &self.period {
            Some(t) => t[e.rem_euclid(t.len() as i64) as usize].clone(),
            None => self.base.pow(e),
        }
    }

    /// Signed q-integer: `(q^a - 1)/(q - 1)`, equal to `a` at `q = 1`.
    pub fn q_int(&self, a: i64) -> CycloScalar {
        let level = self.base.level();
        let mut acc = CycloScalar::zero_at(level);
        if a >= 0 {
            for i in 0..a {
                acc = acc.add(&self.get(i));
            }
        } else {
            for i in a..0 {
                acc = acc.sub(&self.get(i));
            }
        }
        acc
    }
}

/// Memoized skew binomial coefficients for one commutation ratio.
pub(crate) struct SkewBinomials {
    ratio: CycloScalar,
    cache: RwLock<HashMap<u32, Arc<Vec<CycloScalar>>>>,
}

impl SkewBinomials {
    pub fn new(ratio: CycloScalar) -> Self {
        SkewBinomials { ratio, cache: RwLock::new(HashMap::new()) }
    }

    pub fn get(&self, a: u32) -> Arc<Vec<CycloScalar>> {
        if let Some(v) = self.cache.read().get(&a) {
            return v.clone();
        }
        let v = Arc::new(skew_binomial_expand(a, &self.ratio));
        self.cache.write().entry(a).or_insert(v).clone()
    }
}

pub(crate) fn gen(name: &'static str, index: BasisIndex, invertible: bool) -> Generator {
    Generator { name, index, invertible }
}

/// `[-bound, bound]` or `[0, bound]`.
pub(crate) fn range(bound: i64, signed: bool) -> std::ops::RangeInclusive<i64> {
    if signed {
        -bound..=bound
    } else {
        0..=bound
    }
}

/// Generic two-slot window `y^a x^b`.
pub(crate) fn window_yx(bound: i64, y_signed: bool, x_signed: bool) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for a in range(bound, y_signed) {
        for b in range(bound, x_signed) {
            out.push(BasisIndex::yx(a, b));
        }
    }
    out
}

/// Factorization `y^a x^b` with generator positions `(y_pos, x_pos)`.
pub(crate) fn factor_yx(idx: &BasisIndex, y_pos: usize, x_pos: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    if idx.a() != 0 {
        out.push((y_pos, idx.a()));
    }
    if idx.x != 0 {
        out.push((x_pos, idx.x));
    }
    out
}

/// Memo table shared by providers.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: std::hash::Hash + Eq + Clone, V> Memo<K, V> {
    pub fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub fn get_or(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().get(key) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.map.write().entry(key.clone()).or_insert(v).clone()
    }
}
