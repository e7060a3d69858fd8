//! Error type shared by the analysis modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// Input series is too short for the requested operation.
    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// Fewer than two envelope anchors after boundary extension; the
    /// caller must stop sifting.
    #[error("degenerate envelope: fewer than two anchors after boundary extension")]
    DegenerateEnvelope,

    /// Series is identically zero; no analytic signal exists.
    #[error("degenerate signal: input is identically zero")]
    DegenerateSignal,

    /// More than half of the interior instantaneous frequencies are
    /// non-positive; no meaningful time scale can be quoted.
    #[error("unreliable frequency: {nonpositive} of {interior} interior omega values non-positive")]
    UnreliableFrequency { nonpositive: usize, interior: usize },

    /// Constant window: the rescaled range is undefined when S = 0.
    #[error("zero dispersion: window standard deviation is zero")]
    ZeroDispersion,

    /// Fewer than four usable scales survived for the log-log regression.
    #[error("insufficient scales: only {usable} usable scales (need 4)")]
    InsufficientScales { usable: usize },

    /// Every mode is identically zero; normalized variance is undefined.
    #[error("degenerate energy: all modes have zero energy")]
    DegenerateEnergy,

    /// Correlation input has zero variance.
    #[error("zero variance: correlation input is constant")]
    ZeroVariance,

    /// Fewer than three fiscal year-ends could be aligned with the series.
    #[error("insufficient overlap: only {aligned} aligned year-ends (need 3)")]
    InsufficientOverlap { aligned: usize },

    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
