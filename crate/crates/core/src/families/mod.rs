//! Validated constructors for every family and their structure constants.

mod a;
mod b;
mod c;
mod common;
mod env;
mod group;
mod params;
pub mod presentation;
pub mod spec_file;

use std::sync::Arc;

pub use a::AlgebraA;
pub use b::{mu_degree, renormalize_b_index, AlgebraB};
pub use c::AlgebraC;
pub use env::Enveloping;
pub use group::GroupAlgebra;
pub use params::{BData, FamilyParams};
pub use presentation::{presentation, Presentation};
pub use spec_file::{parse_instance, InstanceSpec};

use crate::algebra::StructureProvider;
use crate::error::InvalidParams;

/// Shared handle to a built instance.
pub type Instance = Arc<dyn StructureProvider>;

/// Validates `params` and constructs the structure provider. `A(n, q)` with
/// `n < 0` is stored as the isomorphic `A(-n, q^{-1})`.
pub fn build(params: &FamilyParams) -> Result<Instance, InvalidParams> {
    params.validate()?;
    Ok(match params {
        FamilyParams::GroupZ2 => Arc::new(GroupAlgebra::new(false)),
        FamilyParams::GroupZSemiZ => Arc::new(GroupAlgebra::new(true)),
        FamilyParams::EnvAbelian => Arc::new(Enveloping::new(true)),
        FamilyParams::EnvNonabelian => Arc::new(Enveloping::new(false)),
        FamilyParams::A { n, q } => {
            if *n < 0 {
                let qi = q.inv().map_err(|_| InvalidParams::new("/q", "q must be nonzero"))?;
                Arc::new(AlgebraA::new(-n, qi))
            } else {
                Arc::new(AlgebraA::new(*n, q.clone()))
            }
        }
        FamilyParams::B { n, p, q } => {
            let data = FamilyParams::b_data(*n, p)?;
            Arc::new(AlgebraB::new(data, p.clone(), q.clone()))
        }
        FamilyParams::C { .. } | FamilyParams::CLift { .. } => Arc::new(AlgebraC::new(params.clone())),
    })
}
