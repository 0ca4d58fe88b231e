//! Exact arithmetic in cyclotomic fields.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use smallvec::SmallVec;

use super::poly::QPolynomial;
use super::rational::{lcm_u64, Rational};
use crate::error::ScalarError;

type Terms = SmallVec<[(u32, Rational); 2]>;

/// Precomputed data for `Q(ζ_ℓ)`: the modulus and the reduced form of every
/// power `ζ^k`, `0 ≤ k < ℓ`.
pub struct CycloField {
    level: u32,
    phi: u32,
    modulus: QPolynomial,
    powers: Vec<Vec<(u32, Rational)>>,
}

impl CycloField {
    fn new(level: u32) -> Self {
        let modulus = cyclotomic_polynomial(level);
        let phi = modulus.degree().expect("cyclotomic polynomial is nonzero") as u32;
        let mut powers = Vec::with_capacity(level as usize);
        // dense residue of ζ^k, advanced one step at a time
        let mut cur = vec![Rational::ZERO; phi as usize];
        if phi > 0 {
            cur[0] = Rational::ONE;
        }
        for _ in 0..level {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i as u32, c.clone()))
                    .collect(),
            );
            // multiply by ζ, substituting ζ^φ = -(Φ - x^φ)
            let top = cur.pop().unwrap_or(Rational::ZERO);
            cur.insert(0, Rational::ZERO);
            if !top.is_zero() {
                for (i, slot) in cur.iter_mut().enumerate() {
                    let m = modulus.coeff(i);
                    if !m.is_zero() {
                        *slot = &*slot - &(&top * &m);
                    }
                }
            }
        }
        CycloField { level, phi, modulus, powers }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Degree of the field over the rationals, Euler's φ(ℓ).
    pub fn degree(&self) -> u32 {
        self.phi
    }

    pub fn modulus(&self) -> &QPolynomial {
        &self.modulus
    }

    fn power(&self, k: i64) -> &[(u32, Rational)] {
        &self.powers[k.rem_euclid(self.level as i64) as usize]
    }
}

static FIELDS: Lazy<RwLock<HashMap<u32, Arc<CycloField>>>> = Lazy::new(|| RwLock::new(HashMap::new()));
static POLYS: Lazy<RwLock<HashMap<u32, QPolynomial>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Shared field data for level `ℓ`, built on first use.
pub fn field(level: u32) -> Arc<CycloField> {
    assert!(level >= 1, "cyclotomic level must be positive");
    if let Some(f) = FIELDS.read().get(&level) {
        return f.clone();
    }
    let built = Arc::new(CycloField::new(level));
    FIELDS.write().entry(level).or_insert(built).clone()
}

/// The ℓ-th cyclotomic polynomial, by dividing `x^ℓ - 1` by `Φ_d` for the
/// proper divisors `d` of `ℓ`.
pub fn cyclotomic_polynomial(level: u32) -> QPolynomial {
    assert!(level >= 1, "cyclotomic level must be positive");
    if let Some(p) = POLYS.read().get(&level) {
        return p.clone();
    }
    let mut coeffs = vec![0i64; level as usize + 1];
    coeffs[0] = -1;
    coeffs[level as usize] = 1;
    let mut p = QPolynomial::from_ints(&coeffs);
    for d in 1..level {
        if level % d == 0 {
            p = p.exact_div(&cyclotomic_polynomial(d)).expect("Φ_d divides x^ℓ - 1");
        }
    }
    POLYS.write().insert(level, p.clone());
    p
}

/// Element of `Q(ζ_ℓ)` in the power basis `1, ζ, …, ζ^{φ(ℓ)-1}`.
///
/// Only nonzero coordinates are stored. Values at different levels compare
/// and combine after lifting to the lcm of the levels.
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    terms: Terms,
}

impl CycloScalar {
    pub fn zero_at(level: u32) -> Self {
        CycloScalar { field: field(level), terms: Terms::new() }
    }

    pub fn one_at(level: u32) -> Self {
        Self::rational_at(Rational::ONE, level)
    }

    pub fn zero() -> Self {
        Self::zero_at(1)
    }

    pub fn one() -> Self {
        Self::one_at(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational_at(Rational::from_int(n), 1)
    }

    pub fn rational(r: Rational) -> Self {
        Self::rational_at(r, 1)
    }

    pub fn rational_at(r: Rational, level: u32) -> Self {
        let mut terms = Terms::new();
        if !r.is_zero() {
            terms.push((0, r));
        }
        CycloScalar { field: field(level), terms }
    }

    /// `ζ_ℓ^k`.
    pub fn root_of_unity(level: u32, k: i64) -> Self {
        let f = field(level);
        let terms = f.power(k).iter().cloned().collect();
        CycloScalar { field: f, terms }
    }

    /// Reduces an arbitrary coefficient vector (a polynomial in `ζ_ℓ`).
    pub fn from_coeffs(level: u32, coeffs: &[Rational]) -> Self {
        let f = field(level);
        let mut acc = vec![Rational::ZERO; f.phi as usize];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, r) in f.power(k as i64) {
                acc[*t as usize] = &acc[*t as usize] + &(c * r);
            }
        }
        Self::from_dense(f, acc)
    }

    fn from_dense(field: Arc<CycloField>, dense: Vec<Rational>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c))
            .collect();
        CycloScalar { field, terms }
    }

    pub fn level(&self) -> u32 {
        self.field.level
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Dense coordinate vector of length φ(ℓ).
    pub fn coeffs(&self) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.field.phi as usize];
        for (i, c) in &self.terms {
            out[*i as usize] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::ZERO),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Re-expresses the value in `Q(ζ_L)`; `L` must be a multiple of the level.
    pub fn lift(&self, level: u32) -> Self {
        if level == self.level() {
            return self.clone();
        }
        assert!(level % self.level() == 0, "can only lift to a multiple of the level");
        let f = field(level);
        let step = (level / self.level()) as i64;
        if self.terms.iter().all(|(i, _)| *i == 0) {
            return CycloScalar { field: f, terms: self.terms.clone() };
        }
        let mut acc = vec![Rational::ZERO; f.phi as usize];
        for (i, c) in &self.terms {
            for (t, r) in f.power(*i as i64 * step) {
                acc[*t as usize] = &acc[*t as usize] + &(c * r);
            }
        }
        Self::from_dense(f, acc)
    }

    fn common(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self) {
        if self.level() == other.level() {
            return (std::borrow::Cow::Borrowed(self), other.clone());
        }
        let l = lcm_u64(self.level() as u64, other.level() as u64) as u32;
        (std::borrow::Cow::Owned(self.lift(l)), other.lift(l))
    }

    fn with_common<R>(&self, other: &Self, f: impl FnOnce(&Self, &Self) -> R) -> R {
        if self.level() == other.level() {
            f(self, other)
        } else {
            let (a, b) = self.common(other);
            f(&a, &b)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() && other.level() <= self.level() && self.level() % other.level() == 0 {
            return self.clone();
        }
        if self.is_zero() && self.level() <= other.level() && other.level() % self.level() == 0 {
            return other.clone();
        }
        self.with_common(other, |a, b| {
            let mut terms = Terms::new();
            let (mut i, mut j) = (0, 0);
            while i < a.terms.len() || j < b.terms.len() {
                match (a.terms.get(i), b.terms.get(j)) {
                    (Some(x), Some(y)) if x.0 == y.0 => {
                        let s = &x.1 + &y.1;
                        if !s.is_zero() {
                            terms.push((x.0, s));
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(x), Some(y)) if x.0 < y.0 => {
                        terms.push(x.clone());
                        i += 1;
                    }
                    (Some(_), Some(y)) => {
                        terms.push(y.clone());
                        j += 1;
                    }
                    (Some(x), None) => {
                        terms.push(x.clone());
                        i += 1;
                    }
                    (None, Some(y)) => {
                        terms.push(y.clone());
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            CycloScalar { field: a.field.clone(), terms }
        })
    }

    pub fn neg(&self) -> Self {
        CycloScalar {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return CycloScalar { field: self.field.clone(), terms: Terms::new() };
        }
        CycloScalar {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(i, c)| (*i, c * r)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.with_common(other, |a, b| {
            let f = &a.field;
            if a.terms.is_empty() || b.terms.is_empty() {
                return CycloScalar { field: f.clone(), terms: Terms::new() };
            }
            // rational factor: no reduction needed
            if let [(0, r)] = a.terms.as_slice() {
                return b.scale(r).rebased(f);
            }
            if let [(0, r)] = b.terms.as_slice() {
                return a.scale(r);
            }
            let level = f.level as usize;
            if a.terms.len() == 1 && b.terms.len() == 1 {
                let k = (a.terms[0].0 + b.terms[0].0) as usize % level;
                let p = &a.terms[0].1 * &b.terms[0].1;
                if k < f.phi as usize {
                    let mut terms = Terms::new();
                    terms.push((k as u32, p));
                    return CycloScalar { field: f.clone(), terms };
                }
                return CycloScalar {
                    field: f.clone(),
                    terms: f.power(k as i64).iter().map(|(t, r)| (*t, &p * r)).collect(),
                };
            }
            // convolve modulo x^ℓ - 1, then fold the high powers back
            let mut cyc = vec![Rational::ZERO; level];
            for (i, x) in &a.terms {
                for (j, y) in &b.terms {
                    let k = (*i + *j) as usize % level;
                    cyc[k] = &cyc[k] + &(x * y);
                }
            }
            let phi = f.phi as usize;
            let mut dense: Vec<Rational> = cyc.drain(..phi.min(level)).collect();
            for (off, c) in cyc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, r) in f.power((phi + off) as i64) {
                    dense[*t as usize] = &dense[*t as usize] + &(c * r);
                }
            }
            Self::from_dense(f.clone(), dense)
        })
    }

    fn rebased(mut self, f: &Arc<CycloField>) -> Self {
        self.field = f.clone();
        self
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        let f = &self.field;
        match self.terms.as_slice() {
            [] => Err(ScalarError::DivisionByZero),
            [(i, c)] => {
                let ci = c.recip().unwrap();
                Ok(CycloScalar {
                    field: f.clone(),
                    terms: f.power(-(*i as i64)).iter().map(|(t, r)| (*t, &ci * r)).collect(),
                })
            }
            _ => {
                let p = QPolynomial::from_coeffs(self.coeffs());
                let (g, s) = p.inverse_mod(&f.modulus);
                debug_assert!(g == QPolynomial::one());
                Ok(Self::from_coeffs(f.level, s.coeffs()))
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        // monomials rotate
        if let [(i, c)] = self.terms.as_slice() {
            let ce = c.pow(e as u32);
            let f = &self.field;
            return CycloScalar {
                field: f.clone(),
                terms: f.power(*i as i64 * e).iter().map(|(t, r)| (*t, &ce * r)).collect(),
            };
        }
        let mut base = self.clone();
        let mut acc = CycloScalar::one_at(self.level());
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative order if the value is a root of unity.
    ///
    /// Every root of unity in `Q(ζ_ℓ)` has order dividing `lcm(2, ℓ)`, so only
    /// those divisors are tested.
    pub fn order_of_unity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm_u64(2, self.level() as u64);
        if !self.pow(bound as i64).is_one() {
            return None;
        }
        (1..=bound)
            .filter(|d| bound % d == 0)
            .find(|d| self.pow(*d as i64).is_one())
    }

    /// Deterministic total order: level, then coordinates lexicographically
    /// under [`Rational::magnitude_cmp`].
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.level().cmp(&other.level()).then_with(|| {
            let (a, b) = (self.coeffs(), other.coeffs());
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| x.magnitude_cmp(y))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.level() == other.level() {
            return self.terms == other.terms;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (a, b) = self.common(other);
        a.terms == b.terms
    }
}

impl Eq for CycloScalar {}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let level = self.level();
        for (n, (i, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            match (*i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z{level}")?,
                (1, false) => write!(f, "{mag}*z{level}")?,
                (_, true) => write!(f, "z{level}^{i}")?,
                (_, false) => write!(f, "{mag}*z{level}^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.level(), self)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct ScalarWire {
    level: u32,
    coeffs: Vec<Rational>,
}

impl serde::Serialize for CycloScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarWire { level: self.level(), coeffs: self.coeffs() }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for CycloScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = ScalarWire::deserialize(d)?;
        if w.level == 0 {
            return Err(serde::de::Error::custom("level must be positive"));
        }
        Ok(CycloScalar::from_coeffs(w.level, &w.coeffs))
    }
}
