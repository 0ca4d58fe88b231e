//! Family-agnostic sparse algebra: elements, tensors, structure maps and
//! exact subspace computations.

pub mod linalg;
mod provider;
mod sparse;

pub use linalg::{kernel, Subspace};
pub use provider::{
    apply_antipode, apply_coproduct, apply_counit, coproduct_otimes_id, el_add, el_mul, el_scale,
    extend_along_factorization, id_otimes_coproduct, map_tensor, mul, multiply_out, power, residual,
    tensor_mul, tensor_power, Generator, StructureProvider,
};
pub use sparse::{tensor, tensor_flip, BasisIndex, Element, LinComb, Tensor2, Tensor3, TermRecord};

/// Span of a set of elements.
pub fn span_basis<'a>(vectors: impl IntoIterator<Item = &'a Element>) -> Subspace<BasisIndex> {
    Subspace::span(vectors)
}

pub fn member(space: &Subspace<BasisIndex>, v: &Element) -> bool {
    space.contains(v)
}

pub fn dim(space: &Subspace<BasisIndex>) -> usize {
    space.dim()
}
