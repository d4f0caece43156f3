//! Exact combinatorics of affine Weyl groups and their Shi varieties.
//!
//! This crate enumerates the irreducible components of the Shi variety of an
//! irreducible affine Weyl group as *admitted vectors*, builds the natural
//! poset on them, and machine-verifies the structural facts that hold for it:
//! the alcove characterization of Shi coefficient vectors, the cover relation
//! via reflections, the Φ⁺-representation, and the semidistributive lattice
//! structure.
//!
//! Everything is computed in exact rational arithmetic; there is no floating
//! point anywhere and no numerical tolerance in any comparison.
//!
//! The pipeline, bottom to top:
//!
//! - [`rootsys`] — irreducible crystallographic root systems of every type,
//!   with Gram data, coroots, dual heights, Cartan matrix and its inverse,
//!   and the fundamental weights.
//! - [`weyl`] — elements of the affine Weyl group as exact affine maps:
//!   generators, composition, semidirect decomposition, Shi coefficient
//!   vectors and two independent length oracles.
//! - [`shi`] — the alcove-vector characterization, admissible/admitted
//!   predicates and λ-extraction (component membership).
//! - [`phirep`] — the Φ⁺-representation by integer affine maps on ℤ^m and the
//!   induced ⋄-action on admitted vectors.
//! - [`components`] — enumeration of all components, the componentwise poset,
//!   meets/joins, and the lattice / semidistributivity / cover-geometry /
//!   weak-order-interval verifications.
//! - [`cli`] — the command surface used by the `shi-variety` binary.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod components;
pub mod linalg;
pub mod phirep;
pub mod rootsys;
pub mod shi;
pub mod weyl;

pub use components::ComponentPoset;
pub use linalg::Q;
pub use rootsys::{CartanType, RootSystem};
pub use shi::AdmittedVector;
pub use weyl::{AffineElement, ShiVector};

/// Errors produced anywhere in the crate.
///
/// The CLI maps these onto process exit codes: property violations exit 1,
/// input and integrity errors exit 2, capacity refusals exit 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The requested Cartan type / rank pair does not name an irreducible
    /// root system.
    #[error("invalid type {letter}{rank}: {reason}")]
    InvalidType {
        letter: char,
        rank: usize,
        reason: String,
    },
    /// Malformed caller input (unknown root, missing coordinate, bad word).
    #[error("input error: {0}")]
    Input(String),
    /// An internal consistency check failed; this signals a construction bug,
    /// not bad input.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// The request exceeds a configured enumeration budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A verified structural property failed; carries a witness description.
    #[error("property violation: {0}")]
    PropertyViolation(String),
}

impl Error {
    /// Process exit code for this error under the CLI contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PropertyViolation(_) => 1,
            Error::InvalidType { .. } | Error::Input(_) | Error::Integrity(_) => 2,
            Error::Capacity(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
