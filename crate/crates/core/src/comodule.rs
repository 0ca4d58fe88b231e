//! Comodule structures induced by a Hopf quotient `π: H → k[t^{±1}]` (with
//! `t` grouplike) or `π: H → k[t]` (with `t` primitive).
//!
//! `ρ = (id⊗π)Δ` and `λ = (π⊗id)Δ` are returned as their `t`-coefficient
//! decompositions: `ρ(h) = Σ_n ρ_n(h) ⊗ t^n`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{kernel, mul, BasisIndex, Element, LinComb, StructureProvider, Subspace};
use crate::error::QuotientError;
use crate::families::{presentation, FamilyParams};
use crate::scalars::{binomial, factorial, CycloScalar};

/// Laurent or ordinary polynomial in `t`, keyed by exponent.
pub type QuotientPolynomial = LinComb<i64>;

/// Components of `ρ(h)` or `λ(h)` indexed by the power of `t`.
pub type Coaction = BTreeMap<i64, Element>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientKind {
    /// `k[t^{±1}]`, `t` grouplike
    Laurent,
    /// `k[t]`, `t` primitive
    Polynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSpec {
    pub name: String,
    pub kind: QuotientKind,
    /// Image of each generator, by generator position.
    pub images: Vec<QuotientPolynomial>,
}

pub const BUILTIN_QUOTIENTS: [&str; 5] = ["a-y", "b-y", "c-y-1", "env-y", "group-z2-x"];

/// Name of the built-in quotient for a family, if it has one.
pub fn default_quotient(params: &FamilyParams) -> Option<&'static str> {
    match params {
        FamilyParams::A { .. } => Some("a-y"),
        FamilyParams::B { .. } => Some("b-y"),
        FamilyParams::C { .. } | FamilyParams::CLift { .. } => Some("c-y-1"),
        FamilyParams::EnvAbelian | FamilyParams::EnvNonabelian => Some("env-y"),
        FamilyParams::GroupZ2 | FamilyParams::GroupZSemiZ => Some("group-z2-x"),
    }
}

fn t_pow(level: u32, k: i64) -> QuotientPolynomial {
    QuotientPolynomial::term(k, CycloScalar::one_at(level))
}

fn poly_mul(a: &QuotientPolynomial, b: &QuotientPolynomial) -> QuotientPolynomial {
    let mut out = QuotientPolynomial::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add_term(i + j, x.mul(y));
        }
    }
    out
}

impl QuotientSpec {
    /// Checks the image shapes, that every defining relation is killed, and
    /// that `π` is compatible with `Δ` and `ε` on generators.
    pub fn new(
        alg: &dyn StructureProvider,
        name: &str,
        kind: QuotientKind,
        images: Vec<QuotientPolynomial>,
    ) -> Result<Self, QuotientError> {
        assert_eq!(images.len(), alg.generators().len(), "one image per generator");
        for (g, img) in alg.generators().iter().zip(&images) {
            let shape_ok = match (kind, img.len()) {
                (_, 0) => !g.invertible,
                (QuotientKind::Laurent, 1) => {
                    let (_, c) = img.leading().unwrap();
                    c.is_one() || c.neg().is_one()
                }
                (QuotientKind::Polynomial, 1) => {
                    let (k, c) = img.leading().unwrap();
                    c.is_one() && (*k == 0 || (*k == 1 && !g.invertible))
                }
                _ => false,
            };
            if !shape_ok {
                return Err(QuotientError::BadImage(g.name.to_string()));
            }
        }
        let spec = QuotientSpec { name: name.to_string(), kind, images };
        let pres = presentation(alg);
        for rel in &pres.relations {
            let mut total = QuotientPolynomial::zero();
            for (c, word) in &rel.terms {
                let mut acc = t_pow(alg.level(), 0);
                for &g in word {
                    acc = poly_mul(&acc, &spec.project(alg, &pres.generators[g].image));
                }
                total.add_scaled(&acc, c);
            }
            if !total.is_zero() {
                return Err(QuotientError::RelationNotPreserved(rel.label.clone()));
            }
        }
        for (g, img) in alg.generators().iter().zip(&spec.images) {
            let d = alg.coproduct_basis(&g.index);
            let mut lhs: LinComb<(i64, i64)> = LinComb::zero();
            for ((a, b), c) in d.iter() {
                for (i, x) in spec.project(alg, a).iter() {
                    for (j, y) in spec.project(alg, b).iter() {
                        lhs.add_term((*i, *j), c.mul(x).mul(y));
                    }
                }
            }
            let mut rhs: LinComb<(i64, i64)> = LinComb::zero();
            let mut eps = CycloScalar::zero();
            for (k, c) in img.iter() {
                match kind {
                    QuotientKind::Laurent => {
                        rhs.add_term((*k, *k), c.clone());
                        eps = eps.add(c);
                    }
                    QuotientKind::Polynomial => {
                        for i in 0..=*k {
                            rhs.add_term((i, k - i), c.mul(&CycloScalar::rational(binomial(*k as u64, i as u64))));
                        }
                        if *k == 0 {
                            eps = eps.add(c);
                        }
                    }
                }
            }
            if lhs != rhs || eps != alg.counit_basis(&g.index) {
                return Err(QuotientError::NotHopf(g.name.to_string()));
            }
        }
        Ok(spec)
    }

    /// A built-in quotient by name.
    pub fn builtin(alg: &dyn StructureProvider, name: &str) -> Result<Self, QuotientError> {
        let p = alg.params();
        let unavailable = || QuotientError::Unavailable { name: name.to_string(), instance: alg.name() };
        let level = alg.level();
        let (kind, image): (QuotientKind, Box<dyn Fn(&str) -> QuotientPolynomial>) = match name {
            "a-y" if matches!(p, FamilyParams::A { .. }) => (
                QuotientKind::Laurent,
                Box::new(move |g| if g == "x" { t_pow(level, 1) } else { QuotientPolynomial::zero() }),
            ),
            "b-y" if matches!(p, FamilyParams::B { .. }) => (
                QuotientKind::Laurent,
                Box::new(move |g| if g == "x" { t_pow(level, 1) } else { QuotientPolynomial::zero() }),
            ),
            "c-y-1" if matches!(p, FamilyParams::C { .. } | FamilyParams::CLift { .. }) => (
                QuotientKind::Polynomial,
                Box::new(move |g| if g == "x" { t_pow(level, 1) } else { t_pow(level, 0) }),
            ),
            "env-y" if matches!(p, FamilyParams::EnvAbelian | FamilyParams::EnvNonabelian) => (
                QuotientKind::Polynomial,
                Box::new(move |g| if g == "x" { t_pow(level, 1) } else { QuotientPolynomial::zero() }),
            ),
            "group-z2-x" if matches!(p, FamilyParams::GroupZ2 | FamilyParams::GroupZSemiZ) => (
                QuotientKind::Laurent,
                Box::new(move |g| if g == "x" { t_pow(level, 1) } else { t_pow(level, 0) }),
            ),
            _ => return Err(unavailable()),
        };
        let images = alg.generators().iter().map(|g| image(g.name)).collect();
        Self::new(alg, name, kind, images)
    }

    /// `π` of a basis monomial.
    pub fn project(&self, alg: &dyn StructureProvider, idx: &BasisIndex) -> QuotientPolynomial {
        let mut acc = t_pow(alg.level(), 0);
        for (g, e) in alg.factorize(idx) {
            let img = &self.images[g];
            let base = if e < 0 {
                // only unit monomials c·t^k are inverted
                let (k, c) = img.leading().expect("inverted generator has nonzero image");
                QuotientPolynomial::term(-k, c.inv().expect("nonzero"))
            } else {
                img.clone()
            };
            for _ in 0..e.abs() {
                acc = poly_mul(&acc, &base);
            }
        }
        acc
    }

    fn require(&self, kind: QuotientKind) -> Result<(), QuotientError> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(QuotientError::KindMismatch {
                expected: match kind {
                    QuotientKind::Laurent => "Laurent",
                    QuotientKind::Polynomial => "polynomial",
                },
            })
        }
    }
}

/// `ρ(h) = (id⊗π)Δ(h)`
pub fn rho(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element) -> Coaction {
    coact(alg, spec, h, true)
}

/// `λ(h) = (π⊗id)Δ(h)`
pub fn lambda(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element) -> Coaction {
    coact(alg, spec, h, false)
}

fn coact(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element, right: bool) -> Coaction {
    let mut out: Coaction = BTreeMap::new();
    for (idx, hc) in h.iter() {
        for ((a, b), c) in alg.coproduct_basis(idx).iter() {
            let (keep, proj) = if right { (a, b) } else { (b, a) };
            let c = c.mul(hc);
            for (n, pc) in spec.project(alg, proj).iter() {
                out.entry(*n).or_default().add_term(keep.clone(), c.mul(pc));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Multiplies two coactions as elements of `H ⊗ k[t^{±1}]`.
pub fn coaction_product(alg: &dyn StructureProvider, a: &Coaction, b: &Coaction) -> Coaction {
    let mut out: Coaction = BTreeMap::new();
    for (n, x) in a {
        for (m, y) in b {
            let p = mul(alg, x, y);
            let e = out.entry(n + m).or_default();
            *e = e.add(&p);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `π^r_n(h)`: the component of `h` in `H_n`.
pub fn projection_r(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element, n: i64) -> Element {
    rho(alg, spec, h).remove(&n).unwrap_or_default()
}

/// `π^l_m(h)`: the component of `h` in `_mH`.
pub fn projection_l(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element, m: i64) -> Element {
    lambda(alg, spec, h).remove(&m).unwrap_or_default()
}

/// Decomposition of `h` into `H_{i,j} = H_i ∩ _jH`.
pub fn grade_projections(
    alg: &dyn StructureProvider,
    spec: &QuotientSpec,
    h: &Element,
) -> Result<BTreeMap<(i64, i64), Element>, QuotientError> {
    spec.require(QuotientKind::Laurent)?;
    let mut out = BTreeMap::new();
    for (i, hi) in rho(alg, spec, h) {
        for (j, hij) in lambda(alg, spec, &hi) {
            out.insert((i, j), hij);
        }
    }
    Ok(out)
}

/// Window-level check of `H_{-n} H_n ⊇ H_0`.
pub fn check_strong_grading(
    alg: &dyn StructureProvider,
    spec: &QuotientSpec,
    n: i64,
    window: i64,
) -> Result<bool, QuotientError> {
    spec.require(QuotientKind::Laurent)?;
    let basis = alg.window(window);
    let graded = |k: i64| -> Vec<Element> {
        basis
            .iter()
            .map(|b| projection_r(alg, spec, &alg.basis(b.clone()), k))
            .filter(|e| !e.is_zero())
            .collect()
    };
    let (neg, pos, zero) = (graded(-n), graded(n), graded(0));
    let mut products = Subspace::new();
    for a in &neg {
        for b in &pos {
            products.insert(mul(alg, a, b));
        }
    }
    Ok(zero.iter().all(|h| products.contains(h)))
}

/// `δ_r(h)`: the `t`-coefficient of `ρ(h)`.
pub fn delta_r(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element) -> Result<Element, QuotientError> {
    spec.require(QuotientKind::Polynomial)?;
    Ok(rho(alg, spec, h).remove(&1).unwrap_or_default())
}

/// `δ_l(h)`: the `t`-coefficient of `λ(h)`.
pub fn delta_l(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element) -> Result<Element, QuotientError> {
    spec.require(QuotientKind::Polynomial)?;
    Ok(lambda(alg, spec, h).remove(&1).unwrap_or_default())
}

/// Whether every `t^n`-coefficient of `ρ(h)` equals `δ_r^n(h)/n!` for
/// `n ≤ max_n` and beyond the support of `ρ(h)`.
pub fn taylor_consistent(
    alg: &dyn StructureProvider,
    spec: &QuotientSpec,
    h: &Element,
    max_n: i64,
) -> Result<bool, QuotientError> {
    spec.require(QuotientKind::Polynomial)?;
    let r = rho(alg, spec, h);
    let top = r.keys().next_back().copied().unwrap_or(0).max(max_n);
    let mut d = h.clone();
    for n in 0..=top {
        let inv = CycloScalar::rational(factorial(n as u64).recip().expect("n! is nonzero"));
        let expected = d.scale(&inv);
        if r.get(&n).cloned().unwrap_or_default() != expected {
            return Ok(false);
        }
        d = delta_r(alg, spec, &d)?;
    }
    Ok(r.keys().all(|k| (0..=top).contains(k)))
}

/// Smallest `N ≤ limit` with `δ_r^N(h) = 0`.
pub fn nilpotence_index(
    alg: &dyn StructureProvider,
    spec: &QuotientSpec,
    h: &Element,
    limit: usize,
) -> Result<Option<usize>, QuotientError> {
    let mut d = h.clone();
    for n in 0..=limit {
        if d.is_zero() {
            return Ok(Some(n));
        }
        d = delta_r(alg, spec, &d)?;
    }
    Ok(None)
}

fn coinvariants(alg: &dyn StructureProvider, spec: &QuotientSpec, window: i64, right: bool) -> Vec<Element> {
    let basis = alg.window(window);
    let columns: Vec<LinComb<(BasisIndex, i64)>> = basis
        .iter()
        .map(|b| {
            let e = alg.basis(b.clone());
            let mut col = LinComb::zero();
            for (n, comp) in coact(alg, spec, &e, right) {
                for (k, c) in comp.iter() {
                    col.add_term((k.clone(), n), c.clone());
                }
            }
            col.add_term((b.clone(), 0), CycloScalar::one_at(alg.level()).neg());
            col
        })
        .collect();
    kernel(&columns)
        .into_iter()
        .map(|v| LinComb::from_terms(v.iter().map(|(k, c)| (basis[*k].clone(), c.clone()))))
        .collect()
}

/// Basis of the right coinvariants `H_0 = {h : ρ(h) = h⊗1}` within the
/// window. This is a lower bound for the coinvariant algebra.
pub fn coinvariants_basis(alg: &dyn StructureProvider, spec: &QuotientSpec, window: i64) -> Vec<Element> {
    coinvariants(alg, spec, window, true)
}

/// Basis of the left coinvariants `_0H = {h : λ(h) = 1⊗h}` within the window.
pub fn left_coinvariants_basis(alg: &dyn StructureProvider, spec: &QuotientSpec, window: i64) -> Vec<Element> {
    coinvariants(alg, spec, window, false)
}

/// Whether `h` is a right coinvariant.
pub fn is_right_coinvariant(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element) -> bool {
    let r = rho(alg, spec, h);
    r.len() <= 1 && r.get(&0).cloned().unwrap_or_default() == *h
}

/// Whether `h` is a left coinvariant.
pub fn is_left_coinvariant(alg: &dyn StructureProvider, spec: &QuotientSpec, h: &Element) -> bool {
    let l = lambda(alg, spec, h);
    l.len() <= 1 && l.get(&0).cloned().unwrap_or_default() == *h
}

/// One row of a grading table: the bigraded components of a basis element.
#[derive(Clone, Debug, Serialize)]
pub struct GradingRow {
    pub index: BasisIndex,
    /// `((i, j), component in H_{i,j})`
    pub components: Vec<((i64, i64), Element)>,
}

/// One row of a derivation table.
#[derive(Clone, Debug, Serialize)]
pub struct DerivationRow {
    pub index: BasisIndex,
    pub delta_r: Element,
    pub delta_l: Element,
    /// Smallest `N` with `δ_r^N(h) = 0`, searched up to `x`-degree + 1.
    pub nilpotence_index: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub property: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComoduleSummary {
    pub quotient: String,
    pub kind: QuotientKind,
    /// Generator name and its image, written in `t`.
    pub images: Vec<(String, String)>,
    pub window: i64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub grading_table: Vec<GradingRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub derivation_table: Vec<DerivationRow>,
    pub right_coinvariants: Vec<Element>,
    pub left_coinvariants: Vec<Element>,
    pub checks: Vec<PropertyCheck>,
}

impl ComoduleSummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Writes a polynomial in `t`, highest power first.
pub fn format_t_polynomial(p: &QuotientPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts: Vec<String> = p
        .iter()
        .map(|(k, c)| {
            let t = match k {
                0 => String::new(),
                1 => "t".into(),
                k => format!("t^{k}"),
            };
            match (c.is_one(), t.is_empty()) {
                (true, true) => "1".into(),
                (true, false) => t,
                (false, true) => format!("({c})"),
                (false, false) => format!("({c})·{t}"),
            }
        })
        .collect();
    parts.reverse();
    parts.join(" + ")
}

fn check(property: &str, holds: bool) -> PropertyCheck {
    PropertyCheck { property: property.to_string(), holds }
}

/// Grading or derivation table for every basis element of the window, plus
/// the property checks that apply to the quotient kind.
pub fn summarize(alg: &dyn StructureProvider, spec: &QuotientSpec, window: i64) -> ComoduleSummary {
    let basis = alg.window(window);
    let elements: Vec<Element> = basis.iter().map(|b| alg.basis(b.clone())).collect();
    let images = alg
        .generators()
        .iter()
        .zip(&spec.images)
        .map(|(g, img)| (g.name.to_string(), format_t_polynomial(img)))
        .collect();
    let mut summary = ComoduleSummary {
        quotient: spec.name.clone(),
        kind: spec.kind,
        images,
        window,
        grading_table: Vec::new(),
        derivation_table: Vec::new(),
        right_coinvariants: coinvariants_basis(alg, spec, window),
        left_coinvariants: left_coinvariants_basis(alg, spec, window),
        checks: Vec::new(),
    };
    let multiplicative = basis.iter().all(|i| {
        basis.iter().all(|j| {
            let (a, b) = (alg.basis(i.clone()), alg.basis(j.clone()));
            let ab = mul(alg, &a, &b);
            rho(alg, spec, &ab) == coaction_product(alg, &rho(alg, spec, &a), &rho(alg, spec, &b))
                && lambda(alg, spec, &ab) == coaction_product(alg, &lambda(alg, spec, &a), &lambda(alg, spec, &b))
        })
    });
    match spec.kind {
        QuotientKind::Laurent => {
            let mut commute = true;
            let mut decompose = true;
            for (idx, h) in basis.iter().zip(&elements) {
                let parts = grade_projections(alg, spec, h).expect("Laurent quotient");
                decompose &= parts.values().fold(Element::zero(), |acc, e| acc.add(e)) == *h;
                for (&(n, m), part) in &parts {
                    let lr = projection_l(alg, spec, &projection_r(alg, spec, h, n), m);
                    let rl = projection_r(alg, spec, &projection_l(alg, spec, h, m), n);
                    commute &= lr == rl && lr == *part;
                }
                summary.grading_table.push(GradingRow { index: idx.clone(), components: parts.into_iter().collect() });
            }
            summary.checks.push(check("projections commute", commute));
            summary.checks.push(check("bigraded decomposition sums to the identity", decompose));
            // H_n meets the window only for |n| <= window
            let reach = window.min(2);
            for n in -reach..=reach {
                let holds = check_strong_grading(alg, spec, n, window).expect("Laurent quotient");
                summary.checks.push(check(&format!("H_{} H_{} contains H_0", -n, n), holds));
            }
        }
        QuotientKind::Polynomial => {
            let mut commute = true;
            let mut taylor = true;
            let mut nilpotent = true;
            for (idx, h) in basis.iter().zip(&elements) {
                let dr = delta_r(alg, spec, h).expect("polynomial quotient");
                let dl = delta_l(alg, spec, h).expect("polynomial quotient");
                commute &= delta_l(alg, spec, &dr).unwrap() == delta_r(alg, spec, &dl).unwrap();
                taylor &= taylor_consistent(alg, spec, h, 6).unwrap();
                let limit = idx.x.max(0) as usize + 1;
                let nil = nilpotence_index(alg, spec, h, limit).unwrap();
                nilpotent &= nil.is_some();
                summary.derivation_table.push(DerivationRow {
                    index: idx.clone(),
                    delta_r: dr,
                    delta_l: dl,
                    nilpotence_index: nil,
                });
            }
            summary.checks.push(check("δ_r and δ_l commute", commute));
            summary.checks.push(check("ρ(h) = Σ δ_r^n(h)/n! ⊗ t^n", taylor));
            summary.checks.push(check("δ_r locally nilpotent", nilpotent));
        }
    }
    summary.checks.push(check("ρ and λ are multiplicative", multiplicative));
    summary
}
