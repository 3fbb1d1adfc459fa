//! Catalog generation, verification suites, property reports and the
//! command-line front end for `modlab_core`.

pub mod cache;
pub mod catalog;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod profile;
pub mod rings;
pub mod run;
pub mod suites;

pub use catalog::{enumerate_modules, ModuleCatalog, Policy};
pub use error::{HarnessError, Result};
pub use profile::{profile_module, PropertyReport};
pub use run::{run_all, RunConfig, RunOutcome, TheoremReport};
