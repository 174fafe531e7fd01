//! Classification engine for quasi-smooth weighted hypersurfaces.
//!
//! Everything here works on the numerical data of a *general* hypersurface
//! `X_d ⊂ P(a_0, ..., a_n)`: a sorted weight tuple plus a degree. No
//! polynomial is ever built; each decision (well-formedness, quasi-smoothness,
//! Hodge numbers, orbifold strata, terminality) is a function of the weights.
//!
//! The crate is `no_std` and only needs `alloc`. IO, parallel drivers and the
//! command line live in the companion `fk3` crate.
//!
//! Module map:
//!
//! - [`weights`]: gcd profiles, well-formedness, semigroup membership.
//! - [`quasismooth`]: the subset criterion for quasi-smooth, non-cone hypersurfaces.
//! - [`series`] and [`hodge`]: Jacobian-ring Hilbert series and primitive Hodge numbers.
//! - [`singularity`]: orbifold strata, transverse quotient types, Reid–Tai.
//! - [`census`]: the K3, fourfold and extra-family sweeps and per-family records.
//! - [`verify`]: cross-checks over finished censuses.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod census;
mod error;
pub mod hodge;
pub mod quasismooth;
pub mod series;
pub mod singularity;
pub mod verify;
pub mod weights;

pub use census::{
    analyze_family, associate_k3, brute_force_census, enumerate_extra_families,
    enumerate_fk3_fourfolds, enumerate_k3_surfaces, fourfolds_from_k3, Condition, CyclicDelPezzo,
    FamilyRecord, Fk3Filter, K3Association, Rationality, SurfaceRecord, Tag,
};
pub use error::Error;
pub use hodge::{
    hodge_correspondence_holds, is_fano_k3_numerics, primitive_middle_hodge, HodgeRow,
};
pub use quasismooth::{is_quasi_smooth_not_cone, subset_condition, IndexSet, QuasiSmoothness};
pub use series::{jacobian_hilbert_series, TruncatedSeries};
pub use singularity::{
    classify_hypersurface, enumerate_strata, reid_tai_classify, singular_locus_dimension,
    stratum_relation, QuotientType, SingClass, Stratum,
};
pub use weights::{
    dim_sing_gcd_conditions, is_well_formed_hypersurface, is_well_formed_space,
    normalize_weight_system, semigroup_contains, WeightSystem,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
