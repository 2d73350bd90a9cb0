//! Lozenge tilings of dented hexagons: region construction, exact
//! enumeration of weighted tiling polynomials, closed product formulas and
//! the identities that tie them together.

pub mod condense;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod partitions;
pub mod qalgebra;

pub use error::{Error, Result};

// The guide's code listings run as doctests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/qalgebra.md")]
    mod qalgebra {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/condensation.md")]
    mod condensation {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
