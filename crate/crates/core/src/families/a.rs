//! `A(n, q) = k<x^{±1}, y | xy = q yx>` with `x` grouplike and
//! `Δ(y) = y⊗1 + x^n⊗y`.

use crate::algebra::{extend_along_factorization, BasisIndex, Element, Generator, StructureProvider, Tensor2};
use crate::scalars::CycloScalar;

use super::common::{factor_yx, gen, window_yx, Powers, SkewBinomials};
use super::FamilyParams;

pub struct AlgebraA {
    params: FamilyParams,
    n: i64,
    level: u32,
    q: Powers,
    /// skew binomials for the ratio `q^n` between `y⊗1` and `x^n⊗y`
    binom: SkewBinomials,
    gens: Vec<Generator>,
}

impl AlgebraA {
    pub fn new(n: i64, q: CycloScalar) -> Self {
        let level = q.level();
        let powers = Powers::new(q.clone());
        let binom = SkewBinomials::new(powers.get(n));
        AlgebraA {
            params: FamilyParams::A { n, q },
            n,
            level,
            q: powers,
            binom,
            gens: vec![gen("y", BasisIndex::yx(1, 0), false), gen("x", BasisIndex::yx(0, 1), true)],
        }
    }
}

impl StructureProvider for AlgebraA {
    fn params(&self) -> &FamilyParams {
        &self.params
    }

    fn level(&self) -> u32 {
        self.level
    }

    fn unit_index(&self) -> BasisIndex {
        BasisIndex::yx(0, 0)
    }

    fn generators(&self) -> &[Generator] {
        &self.gens
    }

    fn contains(&self, idx: &BasisIndex) -> bool {
        idx.y.len() == 1 && idx.a() >= 0
    }

    fn multiply_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Element {
        // x^b y^a' = q^{b a'} y^a' x^b
        let c = self.q.get(i.x * j.a());
        Element::term(BasisIndex::yx(i.a() + j.a(), i.x + j.x), c)
    }

    fn coproduct_basis(&self, i: &BasisIndex) -> Tensor2 {
        let (a, b) = (i.a(), i.x);
        let coeffs = self.binom.get(a as u32);
        let mut out = Tensor2::zero();
        for (r, c) in coeffs.iter().enumerate() {
            let r = r as i64;
            out.add_term((BasisIndex::yx(a - r, self.n * r + b), BasisIndex::yx(r, b)), c.clone());
        }
        out
    }

    fn counit_basis(&self, i: &BasisIndex) -> CycloScalar {
        if i.a() == 0 {
            CycloScalar::one_at(self.level)
        } else {
            CycloScalar::zero_at(self.level)
        }
    }

    fn antipode_basis(&self, i: &BasisIndex) -> Element {
        extend_along_factorization(self, i, true, |g, sign| match (g, sign) {
            // S(y) = -x^{-n} y = -q^{-n} y x^{-n}
            (0, _) => Element::term(BasisIndex::yx(1, -self.n), self.q.get(-self.n).neg()),
            (_, s) => Element::term(BasisIndex::yx(0, -s), CycloScalar::one_at(self.level)),
        })
    }

    fn grading(&self, i: &BasisIndex) -> Option<(i64, i64)> {
        Some((i.x, i.a()))
    }

    fn factorize(&self, i: &BasisIndex) -> Vec<(usize, i64)> {
        factor_yx(i, 0, 1)
    }

    fn window(&self, bound: i64) -> Vec<BasisIndex> {
        window_yx(bound, false, true)
    }

    fn unit_monomials(&self, bound: i64) -> Vec<BasisIndex> {
        (-bound..=bound).map(|b| BasisIndex::yx(0, b)).collect()
    }
}
