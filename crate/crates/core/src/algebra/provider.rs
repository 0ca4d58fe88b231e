use crate::error::AlgebraError;
use crate::families::FamilyParams;
use crate::scalars::CycloScalar;

use super::sparse::{BasisIndex, Element, LinComb, Tensor2, Tensor3};

/// A named algebra generator and the basis index of its monomial.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: &'static str,
    pub index: BasisIndex,
    /// Laurent generator; its inverse is a basis monomial too.
    pub invertible: bool,
}

/// Basis-level structure constants of one Hopf algebra instance.
///
/// Implementations are immutable after construction (memo tables are
/// internally synchronized), so a provider can be shared across threads.
pub trait StructureProvider: Send + Sync {
    fn params(&self) -> &FamilyParams;

    /// Level of the cyclotomic field all scalars of the instance live in.
    fn level(&self) -> u32;

    fn unit_index(&self) -> BasisIndex;

    fn generators(&self) -> &[Generator];

    /// Whether `idx` is a canonical basis index of this instance.
    fn contains(&self, idx: &BasisIndex) -> bool;

    fn multiply_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Element;

    fn coproduct_basis(&self, i: &BasisIndex) -> Tensor2;

    fn counit_basis(&self, i: &BasisIndex) -> CycloScalar;

    fn antipode_basis(&self, i: &BasisIndex) -> Element;

    /// `(x-degree, y-degree)` when the instance is graded that way.
    fn grading(&self, i: &BasisIndex) -> Option<(i64, i64)>;

    /// The basis monomial as an ordered product of generator powers
    /// (positions into [`generators`](Self::generators)); negative exponents
    /// only occur on invertible generators.
    fn factorize(&self, i: &BasisIndex) -> Vec<(usize, i64)>;

    /// Basis indices whose exponents lie in `[-bound, bound]`, clipped to the
    /// allowed signs of each slot.
    fn window(&self, bound: i64) -> Vec<BasisIndex>;

    /// Monomials in the invertible generators only, exponents in the window.
    fn unit_monomials(&self, bound: i64) -> Vec<BasisIndex>;

    fn name(&self) -> String {
        self.params().to_string()
    }

    fn one(&self) -> Element {
        Element::term(self.unit_index(), CycloScalar::one_at(self.level()))
    }

    fn scalar(&self, c: CycloScalar) -> Element {
        Element::term(self.unit_index(), c)
    }

    fn generator(&self, name: &str) -> Option<Element> {
        self.generators()
            .iter()
            .find(|g| g.name == name)
            .map(|g| Element::term(g.index.clone(), CycloScalar::one_at(self.level())))
    }

    fn basis(&self, idx: BasisIndex) -> Element {
        Element::term(idx, CycloScalar::one_at(self.level()))
    }
}

fn check<P: StructureProvider + ?Sized>(alg: &P, a: &Element) -> Result<(), AlgebraError> {
    match a.keys().find(|k| !alg.contains(k)) {
        Some(k) => Err(AlgebraError::InstanceMismatch { index: k.to_string(), instance: alg.name() }),
        None => Ok(()),
    }
}

/// Product of two elements, rejecting indices foreign to the instance.
pub fn el_mul<P: StructureProvider + ?Sized>(alg: &P, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    check(alg, a)?;
    check(alg, b)?;
    Ok(mul(alg, a, b))
}

pub fn el_add<P: StructureProvider + ?Sized>(alg: &P, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    check(alg, a)?;
    check(alg, b)?;
    Ok(a.add(b))
}

pub fn el_scale<P: StructureProvider + ?Sized>(alg: &P, a: &Element, c: &CycloScalar) -> Result<Element, AlgebraError> {
    check(alg, a)?;
    Ok(a.scale(c))
}

/// Bilinear extension of `multiply_basis`.
pub fn mul<P: StructureProvider + ?Sized>(alg: &P, a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            let c = x.mul(y);
            out.add_scaled(&alg.multiply_basis(i, j), &c);
        }
    }
    out
}

pub fn power<P: StructureProvider + ?Sized>(alg: &P, base: &Element, e: u32) -> Element {
    let mut acc = alg.one();
    for _ in 0..e {
        acc = mul(alg, &acc, base);
    }
    acc
}

pub fn apply_coproduct<P: StructureProvider + ?Sized>(alg: &P, h: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (i, c) in h.iter() {
        out.add_scaled(&alg.coproduct_basis(i), c);
    }
    out
}

pub fn apply_counit<P: StructureProvider + ?Sized>(alg: &P, h: &Element) -> CycloScalar {
    h.iter()
        .fold(CycloScalar::zero_at(alg.level()), |acc, (i, c)| acc.add(&c.mul(&alg.counit_basis(i))))
}

pub fn apply_antipode<P: StructureProvider + ?Sized>(alg: &P, h: &Element) -> Element {
    let mut out = Element::zero();
    for (i, c) in h.iter() {
        out.add_scaled(&alg.antipode_basis(i), c);
    }
    out
}

/// `(a⊗b)(c⊗d) = ac⊗bd`
pub fn tensor_mul<P: StructureProvider + ?Sized>(alg: &P, s: &Tensor2, t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((a, b), x) in s.iter() {
        for ((c, d), y) in t.iter() {
            let left = alg.multiply_basis(a, c);
            let right = alg.multiply_basis(b, d);
            let coeff = x.mul(y);
            for (l, lc) in left.iter() {
                let lc = lc.mul(&coeff);
                for (r, rc) in right.iter() {
                    out.add_term((l.clone(), r.clone()), lc.mul(rc));
                }
            }
        }
    }
    out
}

pub fn tensor_power<P: StructureProvider + ?Sized>(alg: &P, base: &Tensor2, e: u32) -> Tensor2 {
    let u = alg.unit_index();
    let mut acc = Tensor2::term((u.clone(), u), CycloScalar::one_at(alg.level()));
    for _ in 0..e {
        acc = tensor_mul(alg, &acc, base);
    }
    acc
}

/// `(id⊗Δ)`
pub fn id_otimes_coproduct<P: StructureProvider + ?Sized>(alg: &P, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for ((b1, b2), d) in alg.coproduct_basis(b).iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c.mul(d));
        }
    }
    out
}

/// `(Δ⊗id)`
pub fn coproduct_otimes_id<P: StructureProvider + ?Sized>(alg: &P, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for ((a1, a2), d) in alg.coproduct_basis(a).iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c.mul(d));
        }
    }
    out
}

/// Multiplication map `H⊗H → H`.
pub fn multiply_out<P: StructureProvider + ?Sized>(alg: &P, t: &Tensor2) -> Element {
    let mut out = Element::zero();
    for ((a, b), c) in t.iter() {
        out.add_scaled(&alg.multiply_basis(a, b), c);
    }
    out
}

/// Applies `f⊗g` for linear maps given on basis elements.
pub fn map_tensor(
    t: &Tensor2,
    mut f: impl FnMut(&BasisIndex) -> Element,
    mut g: impl FnMut(&BasisIndex) -> Element,
) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((a, b), c) in t.iter() {
        let fa = f(a);
        let gb = g(b);
        for (l, lc) in fa.iter() {
            let lc = lc.mul(c);
            for (r, rc) in gb.iter() {
                out.add_term((l.clone(), r.clone()), lc.mul(rc));
            }
        }
    }
    out
}

/// Extends images of generator powers multiplicatively along the
/// factorization of `idx`. With `reverse` the factors are multiplied in the
/// opposite order, which is how an anti-homomorphism such as the antipode is
/// extended.
pub fn extend_along_factorization<P: StructureProvider + ?Sized>(
    alg: &P,
    idx: &BasisIndex,
    reverse: bool,
    mut image: impl FnMut(usize, i64) -> Element,
) -> Element {
    let mut factors = alg.factorize(idx);
    if reverse {
        factors.reverse();
    }
    let mut acc = alg.one();
    for (g, e) in factors {
        let unit = if e < 0 { -1 } else { 1 };
        let img = image(g, unit);
        for _ in 0..e.abs() {
            acc = mul(alg, &acc, &img);
        }
    }
    acc
}

/// Sparse identity check used by tests and reports.
pub fn residual<K: Ord + Clone>(lhs: &LinComb<K>, rhs: &LinComb<K>) -> LinComb<K> {
    lhs.sub(rhs)
}
