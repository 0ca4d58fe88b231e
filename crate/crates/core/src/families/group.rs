//! Group algebras `k[Z^2]` and `k[Z ⋊ Z]`; every basis monomial is grouplike.

use crate::algebra::{BasisIndex, Element, Generator, StructureProvider, Tensor2};
use crate::scalars::CycloScalar;

use super::common::{factor_yx, gen, window_yx};
use super::FamilyParams;

pub struct GroupAlgebra {
    params: FamilyParams,
    /// `x y x^{-1} = y^{-1}` instead of commuting generators
    twisted: bool,
    gens: Vec<Generator>,
}

impl GroupAlgebra {
    pub fn new(twisted: bool) -> Self {
        GroupAlgebra {
            params: if twisted { FamilyParams::GroupZSemiZ } else { FamilyParams::GroupZ2 },
            twisted,
            gens: vec![gen("y", BasisIndex::yx(1, 0), true), gen("x", BasisIndex::yx(0, 1), true)],
        }
    }

    fn sign(&self, b: i64) -> i64 {
        if self.twisted && b.rem_euclid(2) == 1 {
            -1
        } else {
            1
        }
    }
}

impl StructureProvider for GroupAlgebra {
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
        idx.y.len() == 1
    }

    fn multiply_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Element {
        Element::basis(BasisIndex::yx(i.a() + self.sign(i.x) * j.a(), i.x + j.x))
    }

    fn coproduct_basis(&self, i: &BasisIndex) -> Tensor2 {
        Tensor2::basis((i.clone(), i.clone()))
    }

    fn counit_basis(&self, _i: &BasisIndex) -> CycloScalar {
        CycloScalar::one()
    }

    fn antipode_basis(&self, i: &BasisIndex) -> Element {
        // (y^a x^b)^{-1} = x^{-b} y^{-a}
        Element::basis(BasisIndex::yx(-self.sign(i.x) * i.a(), -i.x))
    }

    fn grading(&self, i: &BasisIndex) -> Option<(i64, i64)> {
        if self.twisted {
            None
        } else {
            Some((i.x, i.a()))
        }
    }

    fn factorize(&self, i: &BasisIndex) -> Vec<(usize, i64)> {
        factor_yx(i, 0, 1)
    }

    fn window(&self, bound: i64) -> Vec<BasisIndex> {
        window_yx(bound, true, true)
    }

    fn unit_monomials(&self, bound: i64) -> Vec<BasisIndex> {
        self.window(bound)
    }
}
