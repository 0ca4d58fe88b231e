//! `B(n, p_0, …, p_s, q)`: `x^{±1}, y_1, …, y_s` with `x y_i = q^{m_i} y_i x`,
//! commuting `y_i`, and `y_i^{p_i} = y_j^{p_j}`.
//!
//! Basis monomials are `y_1^{d_1} ⋯ y_s^{d_s} x^b` with `d_i < p_i` for
//! `i ≥ 2`; larger exponents carry into `y_1` through `y_i^{p_i} = y_1^{p_1}`.

use smallvec::SmallVec;

use crate::algebra::{
    extend_along_factorization, tensor_mul, BasisIndex, Element, Generator, StructureProvider, Tensor2,
};
use crate::scalars::CycloScalar;

use super::common::{gen, Memo, Powers, SkewBinomials};
use super::params::BData;
use super::FamilyParams;

const Y_NAMES: [&str; 8] = ["y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"];

pub struct AlgebraB {
    params: FamilyParams,
    data: BData,
    level: u32,
    q: Powers,
    /// ratio `q^{m_i^2 n}` between the legs of `Δ(y_i)`
    binoms: Vec<SkewBinomials>,
    gens: Vec<Generator>,
    /// `Δ(y^d)`, keyed by `d`
    delta_y: Memo<SmallVec<[i64; 2]>, Tensor2>,
}

/// `μ·d = Σ m_i d_i`.
pub fn mu_degree(data: &BData, d: &[i64]) -> i64 {
    d.iter().zip(&data.mi).map(|(di, mi)| di * *mi as i64).sum()
}

/// Carries exponents `d_i ≥ p_i` (`i ≥ 2`) into `d_1`. Preserves `μ·d`.
pub fn renormalize_b_index(data: &BData, d_raw: &[i64]) -> SmallVec<[i64; 2]> {
    let mut d: SmallVec<[i64; 2]> = d_raw.iter().copied().collect();
    let p1 = data.ps[0] as i64;
    for i in 1..d.len() {
        let pi = data.ps[i] as i64;
        if d[i] >= pi {
            let k = d[i] / pi;
            d[i] -= k * pi;
            d[0] += k * p1;
        }
    }
    d
}

impl AlgebraB {
    pub fn new(data: BData, p: Vec<u64>, q: CycloScalar) -> Self {
        let level = q.level();
        let powers = Powers::new(q.clone());
        let n = data.n as i64;
        let binoms = data
            .mi
            .iter()
            .map(|&mi| SkewBinomials::new(powers.get(mi as i64 * mi as i64 * n)))
            .collect();
        let mut gens: Vec<Generator> = (0..data.s())
            .map(|i| {
                let mut d = vec![0; data.s()];
                d[i] = 1;
                gen(Y_NAMES[i], BasisIndex::multi(&d, 0), false)
            })
            .collect();
        gens.push(gen("x", BasisIndex::multi(&vec![0; data.s()], 1), true));
        AlgebraB {
            params: FamilyParams::B { n: data.n, p, q },
            data,
            level,
            q: powers,
            binoms,
            gens,
            delta_y: Memo::new(),
        }
    }

    pub fn data(&self) -> &BData {
        &self.data
    }

    fn one_scalar(&self) -> CycloScalar {
        CycloScalar::one_at(self.level)
    }

    fn mono(&self, d: &[i64], b: i64) -> BasisIndex {
        BasisIndex { y: renormalize_b_index(&self.data, d), x: b }
    }

    /// `Δ(y_i)^k` by the skew binomial theorem.
    fn delta_generator_power(&self, i: usize, k: i64) -> Tensor2 {
        let s = self.data.s();
        let shift = self.data.mi[i] as i64 * self.data.n as i64;
        let mut out = Tensor2::zero();
        for (r, c) in self.binoms[i].get(k as u32).iter().enumerate() {
            let r = r as i64;
            let mut left = vec![0; s];
            left[i] = k - r;
            let mut right = vec![0; s];
            right[i] = r;
            out.add_term((self.mono(&left, shift * r), self.mono(&right, 0)), c.clone());
        }
        out
    }

    fn delta_of_y(&self, d: &SmallVec<[i64; 2]>) -> std::sync::Arc<Tensor2> {
        self.delta_y.get_or(d, || {
            let u = self.unit_index();
            let mut acc = Tensor2::term((u.clone(), u), self.one_scalar());
            for (i, &di) in d.iter().enumerate() {
                if di > 0 {
                    acc = tensor_mul(self, &acc, &self.delta_generator_power(i, di));
                }
            }
            acc
        })
    }
}

impl StructureProvider for AlgebraB {
    fn params(&self) -> &FamilyParams {
        &self.params
    }

    fn level(&self) -> u32 {
        self.level
    }

    fn unit_index(&self) -> BasisIndex {
        BasisIndex::multi(&vec![0; self.data.s()], 0)
    }

    fn generators(&self) -> &[Generator] {
        &self.gens
    }

    fn contains(&self, idx: &BasisIndex) -> bool {
        idx.y.len() == self.data.s()
            && idx.y.iter().all(|&d| d >= 0)
            && idx.y.iter().zip(&self.data.ps).skip(1).all(|(&d, &p)| d < p as i64)
    }

    fn multiply_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Element {
        let c = self.q.get(i.x * mu_degree(&self.data, &j.y));
        let d: SmallVec<[i64; 2]> = i.y.iter().zip(&j.y).map(|(a, b)| a + b).collect();
        Element::term(self.mono(&d, i.x + j.x), c)
    }

    fn coproduct_basis(&self, i: &BasisIndex) -> Tensor2 {
        let dy = self.delta_of_y(&i.y);
        if i.x == 0 {
            return (*dy).clone();
        }
        dy.map_keys(|(l, r)| {
            (BasisIndex { y: l.y.clone(), x: l.x + i.x }, BasisIndex { y: r.y.clone(), x: r.x + i.x })
        })
    }

    fn counit_basis(&self, i: &BasisIndex) -> CycloScalar {
        if i.y.iter().all(|&d| d == 0) {
            self.one_scalar()
        } else {
            CycloScalar::zero_at(self.level)
        }
    }

    fn antipode_basis(&self, i: &BasisIndex) -> Element {
        let s = self.data.s();
        let n = self.data.n as i64;
        extend_along_factorization(self, i, true, |g, sign| {
            if g == s {
                return Element::term(self.mono(&vec![0; s], -sign), self.one_scalar());
            }
            // S(y_i) = -x^{-m_i n} y_i = -q^{-m_i^2 n} y_i x^{-m_i n}
            let mi = self.data.mi[g] as i64;
            let mut d = vec![0; s];
            d[g] = 1;
            Element::term(self.mono(&d, -mi * n), self.q.get(-mi * mi * n).neg())
        })
    }

    fn grading(&self, i: &BasisIndex) -> Option<(i64, i64)> {
        Some((i.x, mu_degree(&self.data, &i.y)))
    }

    fn factorize(&self, i: &BasisIndex) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> =
            i.y.iter().enumerate().filter(|(_, &d)| d != 0).map(|(k, &d)| (k, d)).collect();
        if i.x != 0 {
            out.push((self.data.s(), i.x));
        }
        out
    }

    fn window(&self, bound: i64) -> Vec<BasisIndex> {
        let mut ds: Vec<Vec<i64>> = vec![vec![]];
        for (k, &p) in self.data.ps.iter().enumerate() {
            let top = if k == 0 { bound } else { bound.min(p as i64 - 1) };
            ds = ds
                .into_iter()
                .flat_map(|d| {
                    (0..=top).map(move |v| {
                        let mut e = d.clone();
                        e.push(v);
                        e
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for d in &ds {
            for b in -bound..=bound {
                out.push(BasisIndex::multi(d, b));
            }
        }
        out.sort();
        out
    }

    fn unit_monomials(&self, bound: i64) -> Vec<BasisIndex> {
        (-bound..=bound).map(|b| BasisIndex::multi(&vec![0; self.data.s()], b)).collect()
    }
}
