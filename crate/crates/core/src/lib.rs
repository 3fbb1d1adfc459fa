//! Finite rings, finite right modules and the module-theoretic predicates
//! built on the cosingular radical `Z̄²(M)`.
//!
//! Everything is exhaustive: submodule lattices, hom sets and endomorphism
//! rings are enumerated explicitly, so the crate is meant for modules with at
//! most a few thousand elements.

pub mod bitset;
pub mod cosingular;
pub mod error;
pub mod group;
pub mod hom;
pub mod json;
pub mod lattice;
pub mod limits;
pub mod module;
pub mod ring;
pub mod sections;
pub mod structure;
pub mod submodule;
pub mod ttheory;
pub mod zdiag;

pub use error::{AlgebraError, Result};
pub use hom::{end_ring, hom_count, hom_set, is_isomorphic, EndRing, ModuleHom};
pub use lattice::{submodules, SubmoduleLattice};
pub use module::{
    direct_sum, quotient, regular_module, sub_as_module, subquotient, FiniteModule, Module,
};
pub use ring::{build_ring, FiniteRing, RingSpec};
pub use submodule::Submodule;
