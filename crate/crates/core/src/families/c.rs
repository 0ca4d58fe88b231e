//! `C(n)` and its lift `C(n, q)`: `k[y^{±1}][x]` with
//! `xy = q yx + y^n - y`, `y` grouplike and `Δ(x) = x⊗y^{n-1} + 1⊗x`.
//! `C(n)` is the case `q = 1`.

use std::sync::Arc;

use crate::algebra::{
    extend_along_factorization, mul, tensor_mul, BasisIndex, Element, Generator, StructureProvider, Tensor2,
};
use crate::scalars::CycloScalar;

use super::common::{factor_yx, gen, window_yx, Memo, Powers};
use super::FamilyParams;

pub struct AlgebraC {
    params: FamilyParams,
    n: i64,
    level: u32,
    q: Powers,
    gens: Vec<Generator>,
    /// normal form of `x^b y^a`, keyed by `(b, a)`
    x_pow_y_pow: Memo<(i64, i64), Element>,
    /// `Δ(x)^b`
    delta_x_pow: Memo<i64, Tensor2>,
}

impl AlgebraC {
    pub fn new(params: FamilyParams) -> Self {
        let (n, q) = match &params {
            FamilyParams::C { n } => (*n as i64, CycloScalar::one()),
            FamilyParams::CLift { n, q } => (*n as i64, q.clone()),
            _ => unreachable!("AlgebraC built from non-C parameters"),
        };
        AlgebraC {
            params,
            n,
            level: q.level(),
            q: Powers::new(q),
            gens: vec![gen("y", BasisIndex::yx(1, 0), true), gen("x", BasisIndex::yx(0, 1), false)],
            x_pow_y_pow: Memo::new(),
            delta_x_pow: Memo::new(),
        }
    }

    fn one_scalar(&self) -> CycloScalar {
        CycloScalar::one_at(self.level)
    }

    /// `x y^a = q^a y^a x + c_a (y^{a+n-1} - y^a)` with `c_a` the signed
    /// q-integer.
    fn x_times_y_pow(&self, a: i64) -> Element {
        let mut out = Element::term(BasisIndex::yx(a, 1), self.q.get(a));
        let c = self.q.q_int(a);
        out.add_term(BasisIndex::yx(a + self.n - 1, 0), c.clone());
        out.add_term(BasisIndex::yx(a, 0), c.neg());
        out
    }

    fn x_pow_times_y_pow(&self, b: i64, a: i64) -> Arc<Element> {
        self.x_pow_y_pow.get_or(&(b, a), || {
            if b == 0 {
                return Element::term(BasisIndex::yx(a, 0), self.one_scalar());
            }
            // x^b y^a = x · (x^{b-1} y^a), then push the single x through
            let inner = self.x_pow_times_y_pow(b - 1, a);
            let mut out = Element::zero();
            for (idx, c) in inner.iter() {
                for (t, tc) in self.x_times_y_pow(idx.a()).iter() {
                    out.add_term(BasisIndex::yx(t.a(), t.x + idx.x), tc.mul(c));
                }
            }
            out
        })
    }

    fn delta_x_power(&self, b: i64) -> Arc<Tensor2> {
        self.delta_x_pow.get_or(&b, || {
            if b == 0 {
                let u = self.unit_index();
                return Tensor2::term((u.clone(), u), self.one_scalar());
            }
            let prev = self.delta_x_power(b - 1);
            let mut dx = Tensor2::zero();
            dx.add_term((BasisIndex::yx(0, 1), BasisIndex::yx(self.n - 1, 0)), self.one_scalar());
            dx.add_term((BasisIndex::yx(0, 0), BasisIndex::yx(0, 1)), self.one_scalar());
            tensor_mul(self, &prev, &dx)
        })
    }
}

impl StructureProvider for AlgebraC {
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
        idx.y.len() == 1 && idx.x >= 0
    }

    fn multiply_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Element {
        let middle = self.x_pow_times_y_pow(i.x, j.a());
        let mut out = Element::zero();
        for (t, c) in middle.iter() {
            out.add_term(BasisIndex::yx(i.a() + t.a(), t.x + j.x), c.clone());
        }
        out
    }

    fn coproduct_basis(&self, i: &BasisIndex) -> Tensor2 {
        // (y^a ⊗ y^a) Δ(x)^b; left multiplication by y^a only shifts exponents
        let a = i.a();
        self.delta_x_power(i.x)
            .map_keys(|(l, r)| (BasisIndex::yx(l.a() + a, l.x), BasisIndex::yx(r.a() + a, r.x)))
    }

    fn counit_basis(&self, i: &BasisIndex) -> CycloScalar {
        if i.x == 0 {
            self.one_scalar()
        } else {
            CycloScalar::zero_at(self.level)
        }
    }

    fn antipode_basis(&self, i: &BasisIndex) -> Element {
        extend_along_factorization(self, i, true, |g, sign| match g {
            0 => Element::term(BasisIndex::yx(-sign, 0), self.one_scalar()),
            // S(x) = -x y^{1-n}
            _ => mul(
                self,
                &Element::term(BasisIndex::yx(0, 1), self.one_scalar().neg()),
                &Element::term(BasisIndex::yx(1 - self.n, 0), self.one_scalar()),
            ),
        })
    }

    fn grading(&self, _i: &BasisIndex) -> Option<(i64, i64)> {
        None
    }

    fn factorize(&self, i: &BasisIndex) -> Vec<(usize, i64)> {
        factor_yx(i, 0, 1)
    }

    fn window(&self, bound: i64) -> Vec<BasisIndex> {
        window_yx(bound, true, false)
    }

    fn unit_monomials(&self, bound: i64) -> Vec<BasisIndex> {
        (-bound..=bound).map(|a| BasisIndex::yx(a, 0)).collect()
    }
}
