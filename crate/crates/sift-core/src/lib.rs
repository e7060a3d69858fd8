//! Time-scale decomposition of sampled series.
//!
//! `sift-core` splits a series into intrinsic mode functions by iterative
//! envelope-mean subtraction (sifting), assigns each mode a characteristic
//! time scale from its analytic signal and a Hurst exponent from rescaled-range
//! analysis, and reconstructs short-term and long-term component series from
//! the classified modes. A synthetic-signal module provides generators with
//! exactly known ground truth (pure tones, fractional Gaussian noise) for
//! validating the estimators.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats, and the
//! command-line front end live in the companion `sift-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod emd;
pub mod error;
pub mod fft;
pub mod fundamentals;
pub mod hurst;
pub mod scales;
pub mod spectral;
pub mod spline;
pub mod synth;

pub use emd::{Decomposition, SiftConfig, decompose};
pub use error::CoreError;
pub use hurst::{HurstEstimate, hurst_exponent};
pub use scales::{ImfDiagnostics, Label, ScaleParams, ScaleReport};
pub use spectral::{InstantaneousProfile, characteristic_timescale};
