use gk2hopf_core::algebra::{mul, span_basis, BasisIndex, Element, StructureProvider};
use gk2hopf_core::comodule::{
    coaction_product, coinvariants_basis, delta_l, delta_r, grade_projections, is_left_coinvariant,
    is_right_coinvariant, lambda, left_coinvariants_basis, nilpotence_index, projection_l, projection_r, rho,
    check_strong_grading, taylor_consistent, QuotientSpec,
};
use gk2hopf_core::scalars::CycloScalar;
use gk2hopf_core::{build, FamilyParams, Instance, QuotientError};

fn z(level: u32, k: i64) -> CycloScalar {
    CycloScalar::root_of_unity(level, k)
}

fn yx(a: i64, b: i64) -> BasisIndex {
    BasisIndex::yx(a, b)
}

fn with_quotient(p: FamilyParams, name: &str) -> (Instance, QuotientSpec) {
    let alg = build(&p).unwrap();
    let spec = QuotientSpec::builtin(alg.as_ref(), name).unwrap();
    (alg, spec)
}

fn laurent_cases() -> Vec<(FamilyParams, &'static str)> {
    vec![
        (FamilyParams::A { n: 2, q: CycloScalar::one() }, "a-y"),
        (FamilyParams::A { n: 1, q: z(3, 1) }, "a-y"),
        (FamilyParams::A { n: 3, q: CycloScalar::from_int(2) }, "a-y"),
        (FamilyParams::B { n: 1, p: vec![1, 2, 3], q: z(6, 1) }, "b-y"),
        (FamilyParams::GroupZ2, "group-z2-x"),
        (FamilyParams::GroupZSemiZ, "group-z2-x"),
    ]
}

fn polynomial_cases() -> Vec<(FamilyParams, &'static str)> {
    vec![
        (FamilyParams::C { n: 2 }, "c-y-1"),
        (FamilyParams::C { n: 3 }, "c-y-1"),
        (FamilyParams::EnvNonabelian, "env-y"),
    ]
}

/// Basis elements of the window plus a few mixed combinations.
fn window_elements(alg: &dyn StructureProvider, w: i64) -> Vec<Element> {
    let basis = alg.window(w);
    let mut out: Vec<Element> = basis.iter().map(|b| alg.basis(b.clone())).collect();
    for k in 0..basis.len().min(12) {
        let mut e = alg.basis(basis[k].clone());
        e.add_term(basis[(5 * k + 3) % basis.len()].clone(), CycloScalar::from_int(k as i64 + 2));
        out.push(e);
    }
    out
}

#[test]
fn projections_commute_and_decompose() {
    for (p, q) in laurent_cases() {
        let (alg, spec) = with_quotient(p.clone(), q);
        let alg = alg.as_ref();
        for h in window_elements(alg, 3) {
            let parts = grade_projections(alg, &spec, &h).unwrap();
            let sum = parts.values().fold(Element::zero(), |acc, e| acc.add(e));
            assert_eq!(sum, h, "{p}: decomposition of {h}");
            let ns: Vec<i64> = rho(alg, &spec, &h).keys().copied().collect();
            let ms: Vec<i64> = lambda(alg, &spec, &h).keys().copied().collect();
            for &n in &ns {
                let hn = projection_r(alg, &spec, &h, n);
                assert_eq!(projection_r(alg, &spec, &hn, n), hn, "{p}: idempotence");
                for &m in &ms {
                    let rl = projection_r(alg, &spec, &projection_l(alg, &spec, &h, m), n);
                    let lr = projection_l(alg, &spec, &hn, m);
                    assert_eq!(rl, lr, "{p}: π^r_{n} π^l_{m} on {h}");
                    assert_eq!(parts.get(&(n, m)).cloned().unwrap_or_default(), lr);
                }
            }
        }
    }
}

#[test]
fn strong_grading_a_two_one() {
    let (alg, spec) = with_quotient(FamilyParams::A { n: 2, q: CycloScalar::one() }, "a-y");
    for n in -2..=2 {
        assert!(check_strong_grading(alg.as_ref(), &spec, n, 3).unwrap(), "n = {n}");
    }
    let (g, spec) = with_quotient(FamilyParams::GroupZ2, "group-z2-x");
    assert!(check_strong_grading(g.as_ref(), &spec, 1, 2).unwrap());
}

#[test]
fn derivations_commute_and_match_taylor_expansion() {
    for (p, q) in polynomial_cases() {
        let (alg, spec) = with_quotient(p.clone(), q);
        let alg = alg.as_ref();
        for h in window_elements(alg, 3) {
            let rl = delta_r(alg, &spec, &delta_l(alg, &spec, &h).unwrap()).unwrap();
            let lr = delta_l(alg, &spec, &delta_r(alg, &spec, &h).unwrap()).unwrap();
            assert_eq!(rl, lr, "{p}: on {h}");
            assert!(taylor_consistent(alg, &spec, &h, 6).unwrap(), "{p}: Taylor on {h}");
            let xdeg = h.keys().map(|k| k.x).max().unwrap_or(0) as usize;
            let n = nilpotence_index(alg, &spec, &h, xdeg + 1).unwrap();
            assert!(n.is_some(), "{p}: δ_r not nilpotent on {h}");
        }
    }
}

#[test]
fn worked_values_for_a() {
    for n in 1..=3 {
        let (alg, spec) = with_quotient(FamilyParams::A { n, q: CycloScalar::one() }, "a-y");
        let y = alg.basis(yx(1, 0));
        let l = lambda(alg.as_ref(), &spec, &y);
        assert_eq!(l.len(), 1);
        assert_eq!(l[&n], y);
        let r = rho(alg.as_ref(), &spec, &y);
        assert_eq!(r.len(), 1);
        assert_eq!(r[&0], y);
        // y sits in H_{0,n}; x in H_{1,1}
        let parts = grade_projections(alg.as_ref(), &spec, &y).unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![(0, n)]);
        let x = alg.basis(yx(0, 1));
        let parts = grade_projections(alg.as_ref(), &spec, &x).unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        assert!(is_right_coinvariant(alg.as_ref(), &spec, &y));
        assert!(!is_left_coinvariant(alg.as_ref(), &spec, &y));
    }
}

#[test]
fn unit_coaction_is_trivial() {
    let (alg, spec) = with_quotient(FamilyParams::C { n: 3 }, "c-y-1");
    let r = rho(alg.as_ref(), &spec, &alg.one());
    assert_eq!(r.into_iter().collect::<Vec<_>>(), vec![(0, alg.one())]);
}

#[test]
fn c_coaction_of_x() {
    for n in 2..=5 {
        let (alg, spec) = with_quotient(FamilyParams::C { n }, "c-y-1");
        let x = alg.basis(yx(0, 1));
        let r = rho(alg.as_ref(), &spec, &x);
        assert_eq!(r.into_iter().collect::<Vec<_>>(), vec![(0, x.clone()), (1, alg.one())]);
        assert_eq!(delta_r(alg.as_ref(), &spec, &x).unwrap(), alg.one());
        assert!(delta_r(alg.as_ref(), &spec, &alg.basis(yx(1, 0))).unwrap().is_zero());
    }
}

#[test]
fn env_derivation_values() {
    let (alg, spec) = with_quotient(FamilyParams::EnvNonabelian, "env-y");
    assert_eq!(delta_r(alg.as_ref(), &spec, &alg.basis(yx(0, 1))).unwrap(), alg.one());
    assert_eq!(delta_r(alg.as_ref(), &spec, &alg.basis(yx(1, 1))).unwrap(), alg.basis(yx(1, 0)));
}

#[test]
fn coactions_are_multiplicative() {
    for (p, q) in laurent_cases().into_iter().chain(polynomial_cases()) {
        let (alg, spec) = with_quotient(p.clone(), q);
        let alg = alg.as_ref();
        let basis = alg.window(2);
        for i in &basis {
            for j in basis.iter().step_by(3) {
                let (a, b) = (alg.basis(i.clone()), alg.basis(j.clone()));
                let ab = mul(alg, &a, &b);
                let lhs = rho(alg, &spec, &ab);
                let rhs = coaction_product(alg, &rho(alg, &spec, &a), &rho(alg, &spec, &b));
                assert_eq!(lhs, rhs, "{p}: ρ({i}·{j})");
                let lhs = lambda(alg, &spec, &ab);
                let rhs = coaction_product(alg, &lambda(alg, &spec, &a), &lambda(alg, &spec, &b));
                assert_eq!(lhs, rhs, "{p}: λ({i}·{j})");
            }
        }
    }
}

fn span_of_y_powers(alg: &dyn StructureProvider, range: std::ops::RangeInclusive<i64>) -> Vec<Element> {
    range.map(|a| alg.basis(yx(a, 0))).collect()
}

fn same_span(a: &[Element], b: &[Element]) -> bool {
    let (sa, sb) = (span_basis(a), span_basis(b));
    sa.dim() == sb.dim() && b.iter().all(|e| sa.contains(e))
}

#[test]
fn coinvariant_examples() {
    let (c, spec) = with_quotient(FamilyParams::C { n: 3 }, "c-y-1");
    assert!(same_span(&coinvariants_basis(c.as_ref(), &spec, 3), &span_of_y_powers(c.as_ref(), -3..=3)));
    let (a, spec) = with_quotient(FamilyParams::A { n: 2, q: z(5, 1) }, "a-y");
    assert!(same_span(&coinvariants_basis(a.as_ref(), &spec, 3), &span_of_y_powers(a.as_ref(), 0..=3)));
    // left coinvariants miss y
    let left = left_coinvariants_basis(a.as_ref(), &spec, 3);
    assert!(!span_basis(&left).contains(&a.basis(yx(1, 0))));
    let (e, spec) = with_quotient(FamilyParams::EnvNonabelian, "env-y");
    assert!(same_span(&coinvariants_basis(e.as_ref(), &spec, 3), &span_of_y_powers(e.as_ref(), 0..=3)));
}

#[test]
fn quotient_errors() {
    let lift = build(&FamilyParams::CLift { n: 3, q: z(4, 1) }).unwrap();
    assert!(matches!(
        QuotientSpec::builtin(lift.as_ref(), "c-y-1"),
        Err(QuotientError::RelationNotPreserved(_))
    ));
    let a = build(&FamilyParams::A { n: 1, q: z(3, 1) }).unwrap();
    assert!(matches!(QuotientSpec::builtin(a.as_ref(), "env-y"), Err(QuotientError::Unavailable { .. })));
    let spec = QuotientSpec::builtin(a.as_ref(), "a-y").unwrap();
    assert!(matches!(delta_r(a.as_ref(), &spec, &a.one()), Err(QuotientError::KindMismatch { .. })));
    let (c, spec) = with_quotient(FamilyParams::C { n: 2 }, "c-y-1");
    assert!(grade_projections(c.as_ref(), &spec, &c.one()).is_err());
}
