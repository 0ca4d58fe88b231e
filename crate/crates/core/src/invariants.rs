//! Isomorphism invariants and the isomorphism decision between instances.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{LinComb, StructureProvider, Subspace};
use crate::error::InvalidParams;
use crate::families::{build, presentation, FamilyParams, Presentation};
use crate::scalars::{gcd_u64, CycloScalar, QPolynomial};
use crate::verify::{find_grouplikes, is_cocommutative, is_commutative};

/// Goldie rank of `H/[H,H]`, or a marker when that quotient is the whole
/// (commutative) algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldieRank {
    Finite(u64),
    CommutativeQuotient,
}

impl fmt::Display for GoldieRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldieRank::Finite(n) => write!(f, "{n}"),
            GoldieRank::CommutativeQuotient => write!(f, "commutative-quotient"),
        }
    }
}

impl Serialize for GoldieRank {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GoldieRank::Finite(n) => s.serialize_u64(*n),
            GoldieRank::CommutativeQuotient => s.serialize_str("commutative-quotient"),
        }
    }
}

/// A positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(n) => write!(f, "{n}"),
            Degree::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(n) => s.serialize_u64(*n),
            Degree::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    pub family_tag: String,
    pub is_commutative: bool,
    pub is_cocommutative: bool,
    pub grouplike_rank: usize,
    pub grouplike_abelian: bool,
    pub ext1_dim: usize,
    pub gldim_finite: bool,
    pub abelianization_goldie_rank: GoldieRank,
    pub abelianization: String,
    pub pi_degree: Degree,
    /// `None` when the algebra is not PI.
    pub integral_order: Option<u64>,
    /// Recorded, not computed: every instance has GK-dimension two.
    pub gk_dimension: u32,
}

/// Tangent space data at the counit: each letter `g` is replaced by
/// `ε(g) + t_g` and relations are truncated to degree one in the `t`'s.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationLinearization {
    pub generators: Vec<String>,
    pub counits: Vec<CycloScalar>,
    /// One row per relation, keyed by generator position.
    pub rows: Vec<LinComb<usize>>,
    pub rank: usize,
}

pub fn linearize(pres: &Presentation) -> PresentationLinearization {
    let counits: Vec<CycloScalar> = pres.generators.iter().map(|g| g.counit.clone()).collect();
    let mut rows = Vec::new();
    for rel in &pres.relations {
        let mut constant = CycloScalar::zero();
        let mut row = LinComb::zero();
        for (c, word) in &rel.terms {
            let eps: Vec<&CycloScalar> = word.iter().map(|&g| &counits[g]).collect();
            let all = eps.iter().fold(c.clone(), |acc, e| acc.mul(e));
            constant = constant.add(&all);
            for (pos, &g) in word.iter().enumerate() {
                let others = eps
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != pos)
                    .fold(c.clone(), |acc, (_, e)| acc.mul(e));
                row.add_term(g, others);
            }
        }
        assert!(constant.is_zero(), "counit does not kill relation {}", rel.label);
        rows.push(row);
    }
    let rank = Subspace::span(rows.iter()).dim();
    PresentationLinearization {
        generators: pres.generators.iter().map(|g| g.name.clone()).collect(),
        counits,
        rows,
        rank,
    }
}

/// `e(H) = dim (m/m^2)^*`, from the linearized presentation.
pub fn ext1_of(alg: &dyn StructureProvider) -> usize {
    let lin = linearize(&presentation(alg));
    lin.generators.len() - lin.rank
}

pub fn ext1_dimension(params: &FamilyParams) -> Result<usize, InvalidParams> {
    Ok(ext1_of(build(params)?.as_ref()))
}

fn distinct_roots(coeffs: &[i64]) -> u64 {
    QPolynomial::from_ints(coeffs).distinct_root_count() as u64
}

/// `x^k - 1`
fn unity_poly(k: u64) -> Vec<i64> {
    let mut c = vec![0; k as usize + 1];
    c[0] = -1;
    c[k as usize] = 1;
    c
}

/// Goldie rank of the abelianization and a description of it.
///
/// The abelianization is always a polynomial or Laurent ring over
/// `k[y^{±1}]/(f)` for some `f` whose roots are roots of unity, so the
/// Goldie rank is the number of distinct roots of `f`.
pub fn abelianization(params: &FamilyParams) -> (GoldieRank, String) {
    use GoldieRank::*;
    match params {
        FamilyParams::GroupZ2 => (CommutativeQuotient, "k[x^{±1}, y^{±1}]".into()),
        FamilyParams::EnvAbelian => (CommutativeQuotient, "k[x, y]".into()),
        // y = y^{-1} forces y^2 = 1
        FamilyParams::GroupZSemiZ => (Finite(distinct_roots(&unity_poly(2))), "k[y]/(y^2 - 1) ⊗ k[x^{±1}]".into()),
        FamilyParams::EnvNonabelian => (Finite(1), "k[x]".into()),
        FamilyParams::A { q, .. } if q.is_one() => (CommutativeQuotient, "k[x^{±1}, y]".into()),
        FamilyParams::A { .. } | FamilyParams::B { .. } => (Finite(1), "k[x^{±1}]".into()),
        FamilyParams::C { n: 1 } => (CommutativeQuotient, "k[y^{±1}, x]".into()),
        FamilyParams::CLift { n: 1, q } if q.is_one() => (CommutativeQuotient, "k[y^{±1}, x]".into()),
        // [x, y] = y^n - y with y a unit gives y^{n-1} = 1
        FamilyParams::C { n } | FamilyParams::CLift { n, .. } if params.q().is_none_or(CycloScalar::is_one) => (
            Finite(distinct_roots(&unity_poly(n - 1))),
            format!("k[y^{{±1}}]/(y^{} - 1) ⊗ k[x]", n - 1),
        ),
        // (q-1) yx = y - y^n solves for x
        FamilyParams::CLift { .. } => (Finite(1), "k[y^{±1}]".into()),
        FamilyParams::C { .. } => unreachable!(),
    }
}

pub fn abelianization_goldie_rank(params: &FamilyParams) -> GoldieRank {
    abelianization(params).0
}

/// Rank of the group generated by the grouplikes in the window, and whether
/// it is abelian.
pub fn grouplike_profile(alg: &dyn StructureProvider, bound: i64) -> (usize, bool) {
    let gs = find_grouplikes(alg, bound);
    let mut lattice: Subspace<usize> = Subspace::new();
    for g in &gs {
        let (idx, _) = g.leading().expect("grouplike is nonzero");
        let v = LinComb::from_terms(
            idx.y
                .iter()
                .chain(std::iter::once(&idx.x))
                .enumerate()
                .map(|(k, &e)| (k, CycloScalar::from_int(e))),
        );
        lattice.insert(v);
    }
    let abelian = gs.iter().enumerate().all(|(k, g)| {
        gs[k + 1..].iter().all(|h| {
            let gh = crate::algebra::mul(alg, g, h);
            let hg = crate::algebra::mul(alg, h, g);
            gh == hg
        })
    });
    (lattice.dim(), abelian)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GlDim {
    Finite2,
    Infinite,
}

/// Global dimension class, read off the family: `B` is the only family of
/// infinite global dimension, all others have global dimension two.
pub fn gldim_class(params: &FamilyParams) -> GlDim {
    match params {
        FamilyParams::B { .. } => GlDim::Infinite,
        _ => GlDim::Finite2,
    }
}

/// `(pideg, io)` for `B`: `(ℓ, ℓ / gcd(d, ℓ))` with
/// `d = ℓ + m(s-1) - Σ m_i`.
pub fn pi_degree_and_io(params: &FamilyParams) -> Result<(u64, u64), InvalidParams> {
    let FamilyParams::B { n, p, .. } = params else {
        return Err(InvalidParams::new("/family", "PI-degree formula applies to family B only"));
    };
    let data = FamilyParams::b_data(*n, p)?;
    let d = data.ell + data.m * (data.s() as u64 - 1) - data.mi.iter().sum::<u64>();
    Ok((data.ell, data.ell / gcd_u64(d, data.ell)))
}

/// `d` from the integral-order formula, exposed for reports and tests.
pub fn integral_order_d(params: &FamilyParams) -> Option<u64> {
    let FamilyParams::B { n, p, .. } = params else { return None };
    let data = FamilyParams::b_data(*n, p).ok()?;
    Some(data.ell + data.m * (data.s() as u64 - 1) - data.mi.iter().sum::<u64>())
}

/// PI-degree and integral order for every family. Outside `B` the two agree
/// whenever the algebra is PI; non-PI algebras report an infinite PI-degree
/// and no integral order.
pub fn pi_data(params: &FamilyParams) -> (Degree, Option<u64>) {
    let root_order = |q: &CycloScalar| q.order_of_unity();
    let both = |o: Option<u64>| match o {
        Some(o) => (Degree::Finite(o), Some(o)),
        None => (Degree::Infinite, None),
    };
    match params {
        FamilyParams::B { .. } => {
            let (pd, io) = pi_degree_and_io(params).expect("validated parameters");
            (Degree::Finite(pd), Some(io))
        }
        FamilyParams::GroupZ2 | FamilyParams::EnvAbelian => both(Some(1)),
        FamilyParams::GroupZSemiZ => both(Some(2)),
        FamilyParams::EnvNonabelian => both(None),
        FamilyParams::A { q, .. } => both(root_order(q)),
        FamilyParams::C { n: 1 } => both(Some(1)),
        FamilyParams::C { .. } => both(None),
        FamilyParams::CLift { n, q } => {
            if q.is_one() {
                both(if *n == 1 { Some(1) } else { None })
            } else {
                both(root_order(q))
            }
        }
    }
}

/// Computes the full invariant vector of a built instance. Grouplikes are
/// searched among unit monomials with exponents up to `bound`.
pub fn invariant_vector(alg: &dyn StructureProvider, bound: i64) -> InvariantVector {
    let params = alg.params();
    let (rank, abelian) = grouplike_profile(alg, bound);
    let (goldie, abel) = abelianization(params);
    let (pideg, io) = pi_data(params);
    InvariantVector {
        family_tag: params.tag().to_string(),
        is_commutative: is_commutative(alg),
        is_cocommutative: is_cocommutative(alg),
        grouplike_rank: rank,
        grouplike_abelian: abelian,
        ext1_dim: ext1_of(alg),
        gldim_finite: gldim_class(params) == GlDim::Finite2,
        abelianization_goldie_rank: goldie,
        abelianization: abel,
        pi_degree: pideg,
        integral_order: io,
        gk_dimension: 2,
    }
}

/// The A-family sign normalization and the `A(0, q) ≅ A(0, q^{-1})`
/// tie-break; every other family is returned unchanged.
pub fn canonicalize(params: &FamilyParams) -> FamilyParams {
    match params {
        FamilyParams::A { n, q } if *n < 0 => FamilyParams::A { n: -n, q: q.inv().expect("q is nonzero") },
        FamilyParams::A { n: 0, q } => {
            let qi = q.inv().expect("q is nonzero");
            let q = if qi.total_cmp(q) == Ordering::Less { qi } else { q.clone() };
            FamilyParams::A { n: 0, q }
        }
        other => other.clone(),
    }
}

pub const RULE_A_SIGN: &str = "A(-n, q^-1) ≅ A(n, q)";
pub const RULE_A_ZERO: &str = "A(0, q) ≅ A(0, q^-1)";
pub const RULE_CLIFT_TRIVIAL: &str = "C(n, 1) = C(n)";
pub const RULE_CLIFT: &str = "C(n, q) ≅ A(n-1, q^-1) for q ≠ 1";
pub const RULE_C_ONE: &str = "C(1) ≅ A(0, 1)";

/// Representative of the isomorphism class within the family list, with
/// the coincidence rules that were applied.
pub fn normal_form(params: &FamilyParams) -> (FamilyParams, Vec<&'static str>) {
    let mut rules = Vec::new();
    let mut p = params.clone();
    if let FamilyParams::CLift { n, q } = &p {
        if q.is_one() {
            rules.push(RULE_CLIFT_TRIVIAL);
            p = FamilyParams::C { n: *n };
        } else {
            rules.push(RULE_CLIFT);
            p = FamilyParams::A { n: *n as i64 - 1, q: q.inv().expect("q is nonzero") };
        }
    }
    if let FamilyParams::C { n: 1 } = p {
        rules.push(RULE_C_ONE);
        p = FamilyParams::A { n: 0, q: CycloScalar::one() };
    }
    if let FamilyParams::A { n, .. } = &p {
        let c = canonicalize(&p);
        if *n < 0 {
            rules.push(RULE_A_SIGN);
        }
        if let (FamilyParams::A { n: 0, q: q0 }, FamilyParams::A { q: q1, .. }) = (&p, &c) {
            if q0 != q1 {
                rules.push(RULE_A_ZERO);
            }
        }
        p = c;
    }
    (p, rules)
}

/// First invariant (in a fixed order) on which two instances differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinction {
    pub invariant: &'static str,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Distinction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ≠ {}", self.invariant, self.left, self.right)
    }
}

pub fn compare_vectors(a: &InvariantVector, b: &InvariantVector) -> Option<Distinction> {
    macro_rules! cmp {
        ($field:ident) => {
            if a.$field != b.$field {
                return Some(Distinction {
                    invariant: stringify!($field),
                    left: a.$field.to_string(),
                    right: b.$field.to_string(),
                });
            }
        };
    }
    cmp!(grouplike_rank);
    cmp!(grouplike_abelian);
    cmp!(gldim_finite);
    cmp!(abelianization_goldie_rank);
    cmp!(is_commutative);
    cmp!(is_cocommutative);
    cmp!(ext1_dim);
    cmp!(pi_degree);
    None
}

/// Instance-level comparison. A result proves non-isomorphism; `None` is
/// inconclusive.
pub fn distinguish(a: &dyn StructureProvider, b: &dyn StructureProvider, bound: i64) -> Option<Distinction> {
    compare_vectors(&invariant_vector(a, bound), &invariant_vector(b, bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub left: String,
    pub right: String,
    /// Coincidence rules used to reach a common normal form.
    pub rules: Vec<&'static str>,
    pub distinction: Option<Distinction>,
    pub explanation: String,
}

/// Grouplike search bound used when `isomorphic` falls back to invariants.
pub const ISO_BOUND: i64 = 2;

/// Decides isomorphism from the parameters. When the normal forms differ,
/// the first differing invariant of the built instances is named; if none
/// differ the parameter rule of the family is cited.
pub fn isomorphic(p1: &FamilyParams, p2: &FamilyParams) -> Result<IsoVerdict, InvalidParams> {
    p1.validate()?;
    p2.validate()?;
    let (n1, r1) = normal_form(p1);
    let (n2, r2) = normal_form(p2);
    let mut rules: Vec<&'static str> = r1.into_iter().chain(r2).collect();
    rules.sort();
    rules.dedup();
    let (left, right) = (p1.to_string(), p2.to_string());
    if n1 == n2 {
        let explanation = if rules.is_empty() {
            "isomorphic via identical parameters".to_string()
        } else {
            format!("isomorphic via {}", rules.join("; "))
        };
        return Ok(IsoVerdict { isomorphic: true, left, right, rules, distinction: None, explanation });
    }
    let (a1, a2) = (build(&n1)?, build(&n2)?);
    let distinction = distinguish(a1.as_ref(), a2.as_ref(), ISO_BOUND);
    let explanation = match &distinction {
        Some(d) => format!("distinguished by {d}"),
        None => format!("distinguished by parameters: {}", parameter_rule(&n1)),
    };
    Ok(IsoVerdict { isomorphic: false, left, right, rules: Vec::new(), distinction, explanation })
}

fn parameter_rule(p: &FamilyParams) -> &'static str {
    match p {
        FamilyParams::A { .. } => "A(n, q) ≅ A(m, r) only if (m, r) = (n, q) or (-n, q^-1)",
        FamilyParams::B { .. } => "B(n, p_0, ..., p_s, q) ≅ B(n', p'_0, ..., p'_t, r) only if all parameters agree",
        FamilyParams::C { .. } => "C(m) ≅ C(n) only if m = n",
        _ => "different families",
    }
}
