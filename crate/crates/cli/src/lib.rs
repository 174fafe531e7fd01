//! Command line, weight-spec parsing, parallel drivers and catalog formats
//! for the weighted Fano K3 census. The mathematics lives in `fk3_core`.

pub mod catalog;
pub mod cli;
pub mod driver;
pub mod spec;

pub use catalog::{emit_catalog, emit_k3_catalog, emit_strata, CatalogFormat};
pub use cli::{run, Exit};
pub use driver::Driver;
pub use spec::{parse_weight_spec, render_weight_spec, SpecError};
