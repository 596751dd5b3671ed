//! Quantum states from combinatorial Laplacians of star-relevant graphs.
//!
//! A simple undirected graph `G` maps to the density matrix
//! `ρ_G = (Δ(G) − A(G)) / d_G`, where `d_G` is the sum of vertex degrees.
//! This crate builds those matrices exactly, computes their spectra both in
//! closed form and with a Jacobi eigensolver, evaluates Von Neumann entropy,
//! and decides LOCC convertibility of the associated pure states through
//! majorization of the spectra.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line tool and parallel sweeps live in the `laplaceq` companion crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod density;
pub mod entropy;
pub mod error;
pub mod explore;
pub mod graph;
pub mod jacobi;
pub mod majorization;
pub mod rational;
pub mod spectrum;
pub mod verify;
pub mod weighted;

pub use density::DensityMatrix;
pub use entropy::{entropy, entropy_closed_form, EntropyValue};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use majorization::{
    locc_transformable, locc_verdict_pair, majorizes, Comparability, MajorizationResult,
    PairVerdict, ProbVector, Weight,
};
pub use rational::Rational;
pub use spectrum::{closed_form_spectrum, numeric_spectrum, Eigenvalue, Spectrum};
