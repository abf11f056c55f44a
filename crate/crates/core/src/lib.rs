//! Upper and lower bounds on the two-way assisted quantum and private
//! capacities (Q₂, P₂) of quantum channels, derived from the squashed
//! entanglement of the channel.
//!
//! The crate covers two families:
//!
//! * phase-insensitive Gaussian bosonic channels, with and without a
//!   mean-photon-number constraint on the input ([`bounds::esq_finite_n`],
//!   [`bounds::esq_asymptotic`] and friends);
//! * finite-dimensional channels: erasure, amplitude damping, Pauli and
//!   depolarizing.
//!
//! Reference curves from the entanglement-flux and coherent-information
//! literature live in [`comparisons`].
//!
//! # Conventions
//!
//! **Vacuum variance is 1.** The covariance matrix of the vacuum is the
//! identity, a thermal state with mean photon number `N` has covariance
//! `(1 + 2N)·I`, and symplectic eigenvalues are `≥ 1`. Other references use
//! vacuum variance ½; divide by 2 to convert.
//!
//! Quadratures are ordered `(x₁, p₁, x₂, p₂, …)` and the symplectic form is
//! `Ω = ⊕ [[0, 1], [-1, 0]]`.
//!
//! All entropies and capacities are in bits.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// `!(x >= 0.0)` is used deliberately so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Oracle values in tests are pasted with all the digits they were printed with.
#![cfg_attr(test, allow(clippy::excessive_precision))]

extern crate alloc;

pub mod bounds;
pub mod channels;
pub mod comparisons;
mod dd;
pub mod error;
pub mod gaussian;
pub mod math;
pub mod matrix;
pub mod optimize;

pub use bounds::{BoundKind, BoundResult, ClosedFormSpectra, Direction};
pub use channels::{Channel, PhaseInsensitiveChannel, PhotonConstraint, QubitChannelSpec};
pub use error::{Error, Result};
pub use gaussian::{CovarianceMatrix, SymplecticSpectrum, SymplecticTransform};
pub use matrix::Matrix;
