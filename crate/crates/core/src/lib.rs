//! Exact construction and verification of a list of Hopf algebras of
//! Gelfand-Kirillov dimension two over cyclotomic fields: the group algebras
//! of `Z^2` and `Z ⋊ Z`, the enveloping algebras of the two-dimensional Lie
//! algebras, `A(n, q)`, `B(n, p_0, …, p_s, q)`, `C(n)` and the lift `C(n, q)`.
//!
//! The crate computes isomorphism invariants, decides isomorphism between
//! instances, and provides the comodule gradings and derivations induced by
//! Hopf quotients onto `k[t^{±1}]` and `k[t]`.

pub mod algebra;
pub mod comodule;
mod error;
pub mod families;
pub mod invariants;
pub mod qcombinat;
pub mod scalars;
pub mod verify;

pub use error::{AlgebraError, InvalidParams, QuotientError, ScalarError};
pub use families::{build, FamilyParams, Instance};
