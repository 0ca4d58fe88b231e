use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::scalars::CycloScalar;

/// Canonical monomial index: exponents of the `y`-type generators followed
/// by the exponent of `x`. Each family fixes how many `y` slots it uses and
/// which signs are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisIndex {
    pub y: SmallVec<[i64; 2]>,
    pub x: i64,
}

impl BasisIndex {
    /// Index `y^a x^b` for the two-generator families.
    pub fn yx(a: i64, b: i64) -> Self {
        let mut y = SmallVec::new();
        y.push(a);
        BasisIndex { y, x: b }
    }

    pub fn multi(y: &[i64], x: i64) -> Self {
        BasisIndex { y: y.iter().copied().collect(), x }
    }

    /// Exponent of the single `y` generator; zero if there is none.
    pub fn a(&self) -> i64 {
        self.y.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.y.len() == 1 {
            match self.y[0] {
                0 => {}
                1 => parts.push("y".to_string()),
                a => parts.push(format!("y^{a}")),
            }
        } else {
            for (i, a) in self.y.iter().enumerate() {
                match a {
                    0 => {}
                    1 => parts.push(format!("y{}", i + 1)),
                    a => parts.push(format!("y{}^{a}", i + 1)),
                }
            }
        }
        match self.x {
            0 => {}
            1 => parts.push("x".to_string()),
            b => parts.push(format!("x^{b}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Finite linear combination with no zero coefficients, iterated in key order.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, CycloScalar>,
}

pub type Element = LinComb<BasisIndex>;
pub type Tensor2 = LinComb<(BasisIndex, BasisIndex)>;
pub type Tensor3 = LinComb<(BasisIndex, BasisIndex, BasisIndex)>;

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn term(key: K, c: CycloScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, CycloScalar::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, CycloScalar)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> CycloScalar {
        self.terms.get(key).cloned().unwrap_or_else(CycloScalar::zero)
    }

    pub fn get(&self, key: &K) -> Option<&CycloScalar> {
        self.terms.get(key)
    }

    /// Smallest key in the support.
    pub fn leading(&self) -> Option<(&K, &CycloScalar)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, key: K, c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.neg());
        }
        out
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect(),
        }
    }

    /// Applies a linear map given on keys.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        LinComb::from_terms(self.terms.iter().map(|(k, v)| (f(k), v.clone())))
    }
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> FromIterator<(K, CycloScalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, CycloScalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Prefix written before a basis key: nothing for 1, `-` for -1.
fn coefficient(v: &CycloScalar) -> String {
    if v.is_one() {
        String::new()
    } else if v.neg().is_one() {
        "-".into()
    } else {
        format!("({v})·")
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, v)| format!("{}{k:?}", coefficient(v))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b), v)| format!("{}{a}⊗{b}", coefficient(v))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b, c), v)| format!("{}{a}⊗{b}⊗{c}", coefficient(v)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Wire record for one term of an element.
#[derive(Serialize)]
pub struct TermRecord<'a, K: Serialize> {
    pub index: &'a K,
    pub scalar: &'a CycloScalar,
}

impl<K: Ord + Serialize> Serialize for LinComb<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(index, scalar)| TermRecord { index, scalar }))
    }
}

/// `a⊗b`
pub fn tensor(a: &Element, b: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add_term((i.clone(), j.clone()), x.mul(y));
        }
    }
    out
}

/// Swaps the two tensor legs.
pub fn tensor_flip(t: &Tensor2) -> Tensor2 {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}
