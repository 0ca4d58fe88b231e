//! Exact checks of the Hopf algebra axioms on windows of basis monomials,
//! and searches for grouplike and skew-primitive elements.
//!
//! Every structure map sends a basis monomial to a finite combination, so
//! each individual check is an exact identity; the window only decides
//! which monomials are enumerated.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    apply_antipode, apply_coproduct, apply_counit, coproduct_otimes_id, id_otimes_coproduct, kernel, mul,
    power, tensor, tensor_flip, tensor_mul, BasisIndex, Element, LinComb, StructureProvider, Tensor2, Tensor3,
};
use crate::error::AlgebraError;
use crate::families::FamilyParams;
use crate::scalars::CycloScalar;

/// `(id⊗Δ)Δ(e) - (Δ⊗id)Δ(e)`
pub fn coassociativity_residual(alg: &dyn StructureProvider, idx: &BasisIndex) -> Tensor3 {
    let d = alg.coproduct_basis(idx);
    id_otimes_coproduct(alg, &d).sub(&coproduct_otimes_id(alg, &d))
}

pub fn check_coassociativity(alg: &dyn StructureProvider, idx: &BasisIndex) -> bool {
    coassociativity_residual(alg, idx).is_zero()
}

/// `((ε⊗id)Δ(e) - e) + ((id⊗ε)Δ(e) - e)` reported as the pair of residuals.
pub fn counit_residuals(alg: &dyn StructureProvider, idx: &BasisIndex) -> (Element, Element) {
    let d = alg.coproduct_basis(idx);
    let mut left = Element::zero();
    let mut right = Element::zero();
    for ((a, b), c) in d.iter() {
        left.add_term(b.clone(), c.mul(&alg.counit_basis(a)));
        right.add_term(a.clone(), c.mul(&alg.counit_basis(b)));
    }
    let e = alg.basis(idx.clone());
    (left.sub(&e), right.sub(&e))
}

pub fn check_counit(alg: &dyn StructureProvider, idx: &BasisIndex) -> bool {
    let (l, r) = counit_residuals(alg, idx);
    l.is_zero() && r.is_zero()
}

/// `m(S⊗id)Δ(e) - ε(e)1` and `m(id⊗S)Δ(e) - ε(e)1`.
pub fn antipode_residuals(alg: &dyn StructureProvider, idx: &BasisIndex) -> (Element, Element) {
    let d = alg.coproduct_basis(idx);
    let mut left = Element::zero();
    let mut right = Element::zero();
    for ((a, b), c) in d.iter() {
        left.add_scaled(&mul(alg, &alg.antipode_basis(a), &alg.basis(b.clone())), c);
        right.add_scaled(&mul(alg, &alg.basis(a.clone()), &alg.antipode_basis(b)), c);
    }
    let unit = alg.scalar(alg.counit_basis(idx));
    (left.sub(&unit), right.sub(&unit))
}

pub fn check_antipode(alg: &dyn StructureProvider, idx: &BasisIndex) -> bool {
    let (l, r) = antipode_residuals(alg, idx);
    l.is_zero() && r.is_zero()
}

/// `Δ(e_i e_j) - Δ(e_i)Δ(e_j)` and `ε(e_i e_j) - ε(e_i)ε(e_j)`.
pub fn bialgebra_residuals(alg: &dyn StructureProvider, i: &BasisIndex, j: &BasisIndex) -> (Tensor2, CycloScalar) {
    let prod = alg.multiply_basis(i, j);
    let lhs = apply_coproduct(alg, &prod);
    let rhs = tensor_mul(alg, &alg.coproduct_basis(i), &alg.coproduct_basis(j));
    let eps = apply_counit(alg, &prod).sub(&alg.counit_basis(i).mul(&alg.counit_basis(j)));
    (lhs.sub(&rhs), eps)
}

pub fn check_bialgebra(alg: &dyn StructureProvider, i: &BasisIndex, j: &BasisIndex) -> bool {
    let (t, e) = bialgebra_residuals(alg, i, j);
    t.is_zero() && e.is_zero()
}

pub fn associativity_residual(alg: &dyn StructureProvider, i: &BasisIndex, j: &BasisIndex, k: &BasisIndex) -> Element {
    let ij = alg.multiply_basis(i, j);
    let jk = alg.multiply_basis(j, k);
    mul(alg, &ij, &alg.basis(k.clone())).sub(&mul(alg, &alg.basis(i.clone()), &jk))
}

pub fn check_associativity(alg: &dyn StructureProvider, i: &BasisIndex, j: &BasisIndex, k: &BasisIndex) -> bool {
    associativity_residual(alg, i, j, k).is_zero()
}

/// `τΔ = Δ` on the algebra generators.
pub fn is_cocommutative(alg: &dyn StructureProvider) -> bool {
    alg.generators().iter().all(|g| {
        let d = alg.coproduct_basis(&g.index);
        tensor_flip(&d) == d
    })
}

/// Generators pairwise commute.
pub fn is_commutative(alg: &dyn StructureProvider) -> bool {
    let gens = alg.generators();
    gens.iter().enumerate().all(|(k, g)| {
        gens[k + 1..]
            .iter()
            .all(|h| alg.multiply_basis(&g.index, &h.index) == alg.multiply_basis(&h.index, &g.index))
    })
}

pub fn is_grouplike(alg: &dyn StructureProvider, g: &Element) -> bool {
    !g.is_zero() && apply_counit(alg, g).is_one() && apply_coproduct(alg, g) == tensor(g, g)
}

/// Grouplike scalar multiples of unit monomials with exponents in the window.
///
/// Units of these algebras are scalar multiples of monomials in the
/// invertible generators, so no other candidates are considered.
pub fn find_grouplikes(alg: &dyn StructureProvider, bound: i64) -> Vec<Element> {
    let mut out = Vec::new();
    for m in alg.unit_monomials(bound) {
        let d = alg.coproduct_basis(&m);
        let single = d.len() == 1;
        let lambda = match d.leading() {
            Some(((a, b), c)) if single && *a == m && *b == m => c.clone(),
            _ => continue,
        };
        let g = Element::term(m, lambda);
        if is_grouplike(alg, &g) {
            out.push(g);
        }
    }
    out
}

/// Basis of `{p in span(window) : Δ(p) = g⊗p + p⊗h}`.
pub fn find_skew_primitives(
    alg: &dyn StructureProvider,
    g: &Element,
    h: &Element,
    window: i64,
) -> Result<Vec<Element>, AlgebraError> {
    for e in [g, h] {
        if !is_grouplike(alg, e) {
            return Err(AlgebraError::NotGrouplike(format!("{e}")));
        }
    }
    let basis = alg.window(window);
    let columns: Vec<Tensor2> = basis
        .par_iter()
        .map(|b| {
            let e = alg.basis(b.clone());
            alg.coproduct_basis(b).sub(&tensor(g, &e)).sub(&tensor(&e, h))
        })
        .collect();
    Ok(kernel(&columns)
        .into_iter()
        .map(|v| LinComb::from_terms(v.iter().map(|(k, c)| (basis[*k].clone(), c.clone()))))
        .collect())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub indices: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: String,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl AxiomResult {
    fn new(axiom: &str, checked: usize, mut failures: Vec<Failure>) -> Self {
        failures.sort_by(|a, b| a.indices.cmp(&b.indices));
        AxiomResult { axiom: axiom.to_string(), checked, passed: failures.is_empty(), failures }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub window: i64,
    pub associativity_window: i64,
    pub seed: u64,
    pub basis_size: usize,
    pub axioms: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub window: i64,
    /// Triples are cubic in the window size, so they get their own bound.
    pub associativity_window: i64,
    pub seed: u64,
    /// Random pairs checked for `S(ab) = S(b)S(a)`.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { window: 3, associativity_window: 2, seed: 0, samples: 64 }
    }
}

fn failure(indices: &[&BasisIndex], residual: String) -> Failure {
    Failure { indices: indices.iter().map(|i| i.to_string()).collect(), residual }
}

fn nonzero_pair<A: ToString, B: ToString>(l: (A, bool), r: (B, bool)) -> Option<String> {
    match (l.1, r.1) {
        (true, true) => None,
        (false, true) => Some(format!("left: {}", l.0.to_string())),
        (true, false) => Some(format!("right: {}", r.0.to_string())),
        (false, false) => Some(format!("left: {}; right: {}", l.0.to_string(), r.0.to_string())),
    }
}

/// Runs every axiom check on the window, in parallel over basis indices.
pub fn run_suite(alg: &dyn StructureProvider, config: &SuiteConfig) -> AxiomReport {
    let basis = alg.window(config.window);
    let mut axioms = Vec::new();

    let unit = alg.unit_index();
    let mut unit_fail = Vec::new();
    let du = alg.coproduct_basis(&unit);
    let expect = Tensor2::term((unit.clone(), unit.clone()), CycloScalar::one_at(alg.level()));
    if du != expect || !alg.counit_basis(&unit).is_one() {
        unit_fail.push(failure(&[&unit], format!("Δ(1) = {du}")));
    }
    axioms.push(AxiomResult::new("unit", 1, unit_fail));

    let coassoc: Vec<Failure> = basis
        .par_iter()
        .filter_map(|i| {
            let r = coassociativity_residual(alg, i);
            (!r.is_zero()).then(|| failure(&[i], r.to_string()))
        })
        .collect();
    axioms.push(AxiomResult::new("coassociativity", basis.len(), coassoc));

    let counit: Vec<Failure> = basis
        .par_iter()
        .filter_map(|i| {
            let (l, r) = counit_residuals(alg, i);
            let (lz, rz) = (l.is_zero(), r.is_zero());
            nonzero_pair((l, lz), (r, rz)).map(|s| failure(&[i], s))
        })
        .collect();
    axioms.push(AxiomResult::new("counit", basis.len(), counit));

    let antipode: Vec<Failure> = basis
        .par_iter()
        .filter_map(|i| {
            let (l, r) = antipode_residuals(alg, i);
            let (lz, rz) = (l.is_zero(), r.is_zero());
            nonzero_pair((l, lz), (r, rz)).map(|s| failure(&[i], s))
        })
        .collect();
    axioms.push(AxiomResult::new("antipode", basis.len(), antipode));

    let pairs: Vec<(&BasisIndex, &BasisIndex)> =
        basis.iter().flat_map(|i| basis.iter().map(move |j| (i, j))).collect();
    let bialg: Vec<Failure> = pairs
        .par_iter()
        .filter_map(|(i, j)| {
            let (t, e) = bialgebra_residuals(alg, i, j);
            let (tz, ez) = (t.is_zero(), e.is_zero());
            nonzero_pair((t, tz), (e, ez)).map(|s| failure(&[i, j], s))
        })
        .collect();
    axioms.push(AxiomResult::new("bialgebra", pairs.len(), bialg));

    let small_basis = alg.window(config.associativity_window);
    let small = &small_basis;
    let triples: Vec<(&BasisIndex, &BasisIndex, &BasisIndex)> = small
        .iter()
        .flat_map(|i| small.iter().flat_map(move |j| small.iter().map(move |k| (i, j, k))))
        .collect();
    let assoc: Vec<Failure> = triples
        .par_iter()
        .filter_map(|(i, j, k)| {
            let r = associativity_residual(alg, i, j, k);
            (!r.is_zero()).then(|| failure(&[i, j, k], r.to_string()))
        })
        .collect();
    axioms.push(AxiomResult::new("associativity", triples.len(), assoc));

    // sampled anti-multiplicativity of S, reproducible from the seed
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let sampled: Vec<(BasisIndex, BasisIndex)> = (0..config.samples)
        .filter_map(|_| Some((basis.choose(&mut rng)?.clone(), basis.choose(&mut rng)?.clone())))
        .collect();
    let anti: Vec<Failure> = sampled
        .par_iter()
        .filter_map(|(i, j)| {
            let lhs = apply_antipode(alg, &alg.multiply_basis(i, j));
            let rhs = mul(alg, &alg.antipode_basis(j), &alg.antipode_basis(i));
            let r = lhs.sub(&rhs);
            (!r.is_zero()).then(|| failure(&[i, j], r.to_string()))
        })
        .collect();
    axioms.push(AxiomResult::new("antipode_antimultiplicative_sampled", sampled.len(), anti));

    if let FamilyParams::B { .. } = alg.params() {
        axioms.push(b_power_identities(alg));
    }

    AxiomReport {
        window: config.window,
        associativity_window: config.associativity_window,
        seed: config.seed,
        basis_size: basis.len(),
        axioms,
    }
}

/// Identities specific to `B`: for every `i`,
/// `Δ(y_i)^{p_i} = y_i^{p_i}⊗1 + x^{mn}⊗y_i^{p_i}`, all `Δ(y_i)^{p_i}` agree,
/// and `S(y_i)^{p_i} = -x^{-mn} y_i^{p_i}`.
pub fn b_power_identities(alg: &dyn StructureProvider) -> AxiomResult {
    let checks = b_power_identity_checks(alg);
    let failures = checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| Failure { indices: vec![c.generator.clone()], residual: c.identity.clone() })
        .collect();
    AxiomResult::new("b_power_identities", checks.len(), failures)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub generator: String,
    pub identity: String,
    pub holds: bool,
}

pub fn b_power_identity_checks(alg: &dyn StructureProvider) -> Vec<IdentityCheck> {
    let FamilyParams::B { n, p, .. } = alg.params() else {
        return Vec::new();
    };
    let data = FamilyParams::b_data(*n, p).expect("validated parameters");
    let s = data.s();
    let x = alg.generator("x").expect("x");
    let x_inv = alg.basis(BasisIndex { y: x.leading().unwrap().0.y.clone(), x: -1 });
    let mn = (data.m * data.n) as u32;
    let x_mn = power(alg, &x, mn);
    let x_neg_mn = power(alg, &x_inv, mn);
    let mut out = Vec::new();
    let mut first: Option<Tensor2> = None;
    for i in 0..s {
        let name = format!("y{}", i + 1);
        let y = alg.generator(&name).expect("generator");
        let pi = data.ps[i] as u32;
        let dy = apply_coproduct(alg, &y);
        let lhs = (0..pi).fold(tensor(&alg.one(), &alg.one()), |acc, _| tensor_mul(alg, &acc, &dy));
        let ypi = power(alg, &y, pi);
        let rhs = tensor(&ypi, &alg.one()).add(&tensor(&x_mn, &ypi));
        out.push(IdentityCheck {
            generator: name.clone(),
            identity: format!("Δ({name})^{pi} = {name}^{pi}⊗1 + x^{mn}⊗{name}^{pi}"),
            holds: lhs == rhs,
        });
        if let Some(f) = &first {
            out.push(IdentityCheck {
                generator: name.clone(),
                identity: format!("Δ(y1)^{} = Δ({name})^{pi}", data.ps[0]),
                holds: *f == lhs,
            });
        } else {
            first = Some(lhs);
        }
        let w = apply_antipode(alg, &y);
        let wp = power(alg, &w, pi);
        let expected = mul(alg, &x_neg_mn, &ypi).neg();
        out.push(IdentityCheck {
            generator: name.clone(),
            identity: format!("S({name})^{pi} = -x^-{mn}·{name}^{pi}"),
            holds: wp == expected,
        });
    }
    out
}
