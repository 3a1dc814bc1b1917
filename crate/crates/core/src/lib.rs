//! Finite orthoposets, their cone operators, and exhaustive law checking.

pub mod checks;
pub mod error;
pub mod io;
pub mod laws;
pub mod mask;
pub mod models;
pub mod ops;
pub mod ortho;
pub mod poset;
pub mod query;
pub mod report;

pub use checks::{CheckReport, Checker, IdentitySelect, Property, SubsetMode, Witness};
pub use error::{Error, Result};
pub use io::{export_dot, parse_poset, serialize_poset};
pub use laws::{LawId, LawReport, Reading, RunMode, Status, Suite, Verifier};
pub use mask::{ElementId, SubsetMask};
pub use ops::{OpId, OperatorTable};
pub use ortho::{validate_ortho, OrthoPoset};
pub use poset::{validate_order, Cone, Extremum, FinitePoset};
pub use report::ReportDocument;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/orthoposets.md")]
    mod orthoposets {}
    #[doc = include_str!("../../../book/src/hierarchy.md")]
    mod hierarchy {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
