//! Unramified coverings of bordered Riemann surfaces: surface-group
//! presentations with their anti-holomorphic involution, coverings as
//! permutation actions, induced representations and transported signature
//! data, and boundary quadrature on the annulus family `z ↦ zⁿ`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod annulus;
pub mod check;
pub mod covering;
pub mod error;
pub mod induction;
pub mod linalg;
pub mod presentation;
pub mod representation;
pub mod torus;
pub mod word;

pub use check::{Check, EXACT_TOL, ISOMETRY_TOL, LONG_WORD_TOL};
pub use covering::{
    build_covering, schreier_transversal, CoveringAction, SchreierLabel, SheetPermutation, Transversal,
};
pub use error::{Error, Result};
pub use induction::{
    build_g2, build_j2_diagonal, build_j2_from_pairing, default_bookkeeping, extend_to_double, induce_representation,
    transport_signatures, verify_symmetry_conditions, InducedRep, LiftBookkeeping, LiftSignatures, SignatureData,
};
pub use linalg::{CMatrix, C64};
pub use presentation::{
    double_group, surface_group, DoubledPresentation, GeneratorLabel, GroupPresentation, Presentation,
};
pub use representation::{MatrixRep, SubgroupRep};
pub use word::{Alphabet, Letter, Word};
