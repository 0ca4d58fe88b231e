//! Enveloping algebras of the two-dimensional Lie algebras, PBW basis
//! `y^a x^b` with `x, y` primitive. The nonabelian one has `[x, y] = y`.

use crate::algebra::{extend_along_factorization, BasisIndex, Element, Generator, StructureProvider, Tensor2};
use crate::scalars::{binomial, CycloScalar, Rational};

use super::common::{factor_yx, gen, window_yx};
use super::FamilyParams;

pub struct Enveloping {
    params: FamilyParams,
    abelian: bool,
    gens: Vec<Generator>,
}

fn int(v: Rational) -> CycloScalar {
    CycloScalar::rational(v)
}

impl Enveloping {
    pub fn new(abelian: bool) -> Self {
        Enveloping {
            params: if abelian { FamilyParams::EnvAbelian } else { FamilyParams::EnvNonabelian },
            abelian,
            gens: vec![gen("y", BasisIndex::yx(1, 0), false), gen("x", BasisIndex::yx(0, 1), false)],
        }
    }
}

impl StructureProvider for Enveloping {
    fn params(&self) -> &FamilyParams {
        &self.params
    }

    fn level(&self) -> u32 {
        1
    }

    fn unit_index(&self) -> BasisIndex {
        BasisIndex::yx(0, 0)
    }

    fn generators(&self) -> &[Generator] {
        &self.gens
    }

    fn contains(&self, idx: &BasisIndex) -> bool {
        idx.y.len() == 1 && idx.a() >= 0 && idx.x >= 0
    }

    fn multiply_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Element {
        let (a, b, a2, b2) = (i.a(), i.x, j.a(), j.x);
        if self.abelian || a2 == 0 || b == 0 {
            return Element::basis(BasisIndex::yx(a + a2, b + b2));
        }
        // x^b y^a' = y^a' (x + a')^b
        let mut out = Element::zero();
        for k in 0..=b {
            let c = binomial(b as u64, k as u64) * Rational::from_int(a2).pow((b - k) as u32);
            out.add_term(BasisIndex::yx(a + a2, k + b2), int(c));
        }
        out
    }

    fn coproduct_basis(&self, i: &BasisIndex) -> Tensor2 {
        let (a, b) = (i.a(), i.x);
        let mut out = Tensor2::zero();
        for r in 0..=a {
            for s in 0..=b {
                let c = binomial(a as u64, r as u64) * binomial(b as u64, s as u64);
                out.add_term((BasisIndex::yx(r, s), BasisIndex::yx(a - r, b - s)), int(c));
            }
        }
        out
    }

    fn counit_basis(&self, i: &BasisIndex) -> CycloScalar {
        if i.a() == 0 && i.x == 0 {
            CycloScalar::one()
        } else {
            CycloScalar::zero()
        }
    }

    fn antipode_basis(&self, i: &BasisIndex) -> Element {
        extend_along_factorization(self, i, true, |g, _| {
            let idx = if g == 0 { BasisIndex::yx(1, 0) } else { BasisIndex::yx(0, 1) };
            Element::term(idx, CycloScalar::from_int(-1))
        })
    }

    fn grading(&self, i: &BasisIndex) -> Option<(i64, i64)> {
        if self.abelian {
            Some((i.x, i.a()))
        } else {
            None
        }
    }

    fn factorize(&self, i: &BasisIndex) -> Vec<(usize, i64)> {
        factor_yx(i, 0, 1)
    }

    fn window(&self, bound: i64) -> Vec<BasisIndex> {
        window_yx(bound, false, false)
    }

    fn unit_monomials(&self, _bound: i64) -> Vec<BasisIndex> {
        vec![self.unit_index()]
    }
}
