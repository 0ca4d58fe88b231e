//! Exact scalars: rationals, rational polynomials and cyclotomic fields.
//!
//! Every algebra instance lives over a single field `Q(ζ_ℓ)`; rational
//! instances use level 1.

mod cyclo;
mod poly;
mod rational;

pub use cyclo::{cyclotomic_polynomial, field, CycloField, CycloScalar};
pub use poly::QPolynomial;
pub use rational::{binomial, factorial, Rational};
pub(crate) use rational::gcd_u64;

/// `ζ_ℓ^k` reduced modulo `Φ_ℓ`.
pub fn root_of_unity(level: u32, k: i64) -> CycloScalar {
    CycloScalar::root_of_unity(level, k)
}

/// Multiplicative order of `a`, or `None` if it is not a root of unity.
pub fn order_of_unity(a: &CycloScalar) -> Option<u64> {
    a.order_of_unity()
}
