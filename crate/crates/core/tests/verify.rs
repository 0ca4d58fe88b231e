mod common;

use common::grid;
use gk2hopf_core::algebra::{apply_coproduct, el_mul, BasisIndex, Element, Tensor3};
use gk2hopf_core::scalars::CycloScalar;
use gk2hopf_core::verify::{
    b_power_identity_checks, check_antipode, check_bialgebra, check_coassociativity, check_counit,
    coassociativity_residual, find_grouplikes, find_skew_primitives, is_cocommutative, run_suite, SuiteConfig,
};
use gk2hopf_core::{build, FamilyParams};

fn z(level: u32, k: i64) -> CycloScalar {
    CycloScalar::root_of_unity(level, k)
}

fn yx(a: i64, b: i64) -> BasisIndex {
    BasisIndex::yx(a, b)
}

fn one() -> CycloScalar {
    CycloScalar::one()
}

#[test]
fn coassociativity_examples() {
    let a = build(&FamilyParams::A { n: 2, q: z(3, 1) }).unwrap();
    assert!(coassociativity_residual(a.as_ref(), &yx(1, 0)).is_zero());
    let c = build(&FamilyParams::C { n: 3 }).unwrap();
    let d = c.coproduct_basis(&yx(0, 1));
    let expected =
        gk2hopf_core::algebra::Tensor2::from_terms([((yx(0, 1), yx(2, 0)), one()), ((yx(0, 0), yx(0, 1)), one())]);
    assert_eq!(d, expected);
    // (Δ⊗id)Δ(x) written out by hand
    let three = Tensor3::from_terms([
        ((yx(0, 1), yx(2, 0), yx(2, 0)), one()),
        ((yx(0, 0), yx(0, 1), yx(2, 0)), one()),
        ((yx(0, 0), yx(0, 0), yx(0, 1)), one()),
    ]);
    let lhs = gk2hopf_core::algebra::coproduct_otimes_id(c.as_ref(), &d);
    assert_eq!(lhs, three);
    assert!(check_coassociativity(c.as_ref(), &yx(0, 1)));
}

#[test]
fn antipode_and_counit_examples() {
    let a = build(&FamilyParams::A { n: 3, q: z(5, 1) }).unwrap();
    // S(y) = -x^{-n} y = -q^{-n} y x^{-n}
    let s = a.antipode_basis(&yx(1, 0));
    let expected = Element::term(yx(1, -3), z(5, -3).neg());
    assert_eq!(s, expected);
    for i in a.window(2) {
        assert!(check_counit(a.as_ref(), &i));
        assert!(check_antipode(a.as_ref(), &i));
    }
    let b = build(&FamilyParams::B { n: 1, p: vec![1, 2, 3], q: z(6, 1) }).unwrap();
    assert!(check_antipode(b.as_ref(), &BasisIndex::multi(&[1, 0], 0)));
}

#[test]
fn bialgebra_examples() {
    let a = build(&FamilyParams::A { n: 2, q: z(7, 1) }).unwrap();
    assert!(check_bialgebra(a.as_ref(), &yx(0, 1), &yx(1, 0)));
    let c = build(&FamilyParams::C { n: 2 }).unwrap();
    assert!(check_bialgebra(c.as_ref(), &yx(0, 1), &yx(1, 0)));
    assert!(check_bialgebra(c.as_ref(), &yx(-2, 3), &yx(3, 2)));
}

#[test]
fn grouplike_examples() {
    let a = build(&FamilyParams::A { n: 1, q: z(3, 1) }).unwrap();
    let g = find_grouplikes(a.as_ref(), 2);
    let idx: Vec<_> = g.iter().map(|e| e.leading().unwrap().0.clone()).collect();
    assert_eq!(idx, (-2..=2).map(|b| yx(0, b)).collect::<Vec<_>>());
    assert_eq!(find_grouplikes(build(&FamilyParams::GroupZ2).unwrap().as_ref(), 1).len(), 9);
    let c = build(&FamilyParams::C { n: 3 }).unwrap();
    let idx: Vec<_> = find_grouplikes(c.as_ref(), 2).iter().map(|e| e.leading().unwrap().0.clone()).collect();
    assert_eq!(idx, (-2..=2).map(|a| yx(a, 0)).collect::<Vec<_>>());
    assert!(find_grouplikes(build(&FamilyParams::EnvNonabelian).unwrap().as_ref(), 2).len() == 1);
}

#[test]
fn grouplikes_form_a_group() {
    for p in grid() {
        let alg = build(&p).unwrap();
        let small = find_grouplikes(alg.as_ref(), 1);
        let big = find_grouplikes(alg.as_ref(), 2);
        for g in &small {
            assert!(small.iter().any(|h| el_mul(alg.as_ref(), g, h).unwrap() == alg.one()), "{p}: inverse of {g}");
            for h in &small {
                let gh = el_mul(alg.as_ref(), g, h).unwrap();
                assert!(big.contains(&gh), "{p}: {g}·{h} not found");
            }
        }
    }
}

#[test]
fn skew_primitive_examples() {
    let a = build(&FamilyParams::A { n: 2, q: z(3, 1) }).unwrap();
    let g = a.basis(yx(0, 2));
    let sols = find_skew_primitives(a.as_ref(), &g, &a.one(), 2).unwrap();
    let space = gk2hopf_core::algebra::span_basis(&sols);
    assert!(gk2hopf_core::algebra::member(&space, &a.basis(yx(1, 0))));
    assert!(gk2hopf_core::algebra::member(&space, &g.sub(&a.one())));

    let b = build(&FamilyParams::B { n: 1, p: vec![1, 2, 3], q: z(6, 1) }).unwrap();
    let g = b.basis(BasisIndex::multi(&[0, 0], 3));
    let sols = find_skew_primitives(b.as_ref(), &g, &b.one(), 1).unwrap();
    let space = gk2hopf_core::algebra::span_basis(&sols);
    assert!(gk2hopf_core::algebra::member(&space, &b.basis(BasisIndex::multi(&[1, 0], 0))));

    let y = a.basis(yx(1, 0));
    assert!(find_skew_primitives(a.as_ref(), &y, &a.one(), 1).is_err());
}

#[test]
fn cocommutative_exactly_on_expected_members() {
    for p in grid() {
        let alg = build(&p).unwrap();
        let expected = matches!(
            p,
            FamilyParams::GroupZ2
                | FamilyParams::GroupZSemiZ
                | FamilyParams::EnvAbelian
                | FamilyParams::EnvNonabelian
                | FamilyParams::A { n: 0, .. }
        );
        assert_eq!(is_cocommutative(alg.as_ref()), expected, "{p}");
    }
}

#[test]
fn coproduct_is_multiplicative_on_generators() {
    for p in grid() {
        let alg = build(&p).unwrap();
        for g in alg.generators() {
            for h in alg.generators() {
                let (eg, eh) = (alg.basis(g.index.clone()), alg.basis(h.index.clone()));
                let prod = el_mul(alg.as_ref(), &eg, &eh).unwrap();
                let lhs = apply_coproduct(alg.as_ref(), &prod);
                let rhs = gk2hopf_core::algebra::tensor_mul(
                    alg.as_ref(),
                    &apply_coproduct(alg.as_ref(), &eg),
                    &apply_coproduct(alg.as_ref(), &eh),
                );
                assert_eq!(lhs, rhs, "{p}");
            }
        }
    }
}

#[test]
fn b_identities_hold() {
    for (n, p, l) in [(1u64, vec![1u64, 2, 3], 6u32), (2, vec![1, 2, 3], 12), (7, vec![1, 3, 5], 105)] {
        let alg = build(&FamilyParams::B { n, p, q: z(l, 1) }).unwrap();
        let checks = b_power_identity_checks(alg.as_ref());
        assert!(!checks.is_empty());
        for c in checks {
            assert!(c.holds, "{}: {}", alg.name(), c.identity);
        }
    }
}

#[test]
fn full_suite_window_four() {
    let config = SuiteConfig { window: 4, associativity_window: 3, seed: 7, samples: 64 };
    for p in grid() {
        if matches!(p, FamilyParams::B { n: 7, .. }) {
            continue;
        }
        let alg = build(&p).unwrap();
        let report = run_suite(alg.as_ref(), &config);
        assert!(report.passed(), "{p}: {:?}", report.axioms);
    }
}

#[test]
fn large_b_suite_window_four() {
    let config = SuiteConfig { window: 4, associativity_window: 2, seed: 7, samples: 64 };
    let alg = build(&FamilyParams::B { n: 7, p: vec![1, 3, 5], q: z(105, 1) }).unwrap();
    let report = run_suite(alg.as_ref(), &config);
    assert!(report.passed(), "{:?}", report.axioms);
}
