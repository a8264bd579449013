//! Quantum correlations of two-mode quasi-Bell cat states under photon loss.
//!
//! The loss channel is a beam splitter (transmissivity `t2`) acting on the
//! second mode; every bipartition of the resulting pure three-party state
//! (A|B, A|E, B|E and A|BE) maps onto a pair of logical qubits. This crate
//! provides the closed forms for concurrence, entanglement of formation,
//! quantum discord and geometric discord of those bipartitions, their
//! monogamy deficits, and independent matrix-level oracles for each.
//!
//! The crate is `no_std`; file IO and the command line live in the
//! `catcorr` crate.

#![no_std]

#[cfg(test)]
extern crate std;

pub mod catstates;
pub mod discord;
pub mod entanglement;
mod error;
pub mod geodiscord;
pub mod monogamy;
pub mod numerics;
pub mod printed;

pub use catstates::{ModelParams, Parity, QubitBasisCoeffs};
pub use error::{Error, Result};
pub use numerics::{DensityMatrix, DensityMatrix2, DensityMatrix4, Spectrum};
