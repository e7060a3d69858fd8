//! Analytic signal and characteristic time scale of a mode.
//!
//! The analytic signal is built in the frequency domain (negative bins
//! zeroed, positive bins doubled, DC and Nyquist kept at unit weight). The
//! characteristic time scale is `2*pi` over the median interior
//! instantaneous frequency, quoted in samples per cycle — for daily data,
//! trading days per cycle.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::Range;
use num_complex::Complex64;

use crate::error::CoreError;
use crate::fft;

/// Trading days per calendar month and year, for report labels.
pub const TRADING_DAYS_PER_MONTH: f64 = 21.0;
pub const TRADING_DAYS_PER_YEAR: f64 = 252.0;

/// Instantaneous phase/frequency profile of one mode.
#[derive(Debug, Clone)]
pub struct InstantaneousProfile {
    /// Unwrapped phase, one value per sample.
    pub phase: Vec<f64>,
    /// Forward-difference instantaneous frequency, radians per sample;
    /// one value per sample pair.
    pub omega: Vec<f64>,
    /// Characteristic time scale, samples per cycle: `2*pi / median(omega)`
    /// over the trimmed interior, non-positive values excluded.
    pub tau: f64,
    /// Same quantity from the mean instead of the median, as a diagnostic.
    pub tau_mean: f64,
    /// Range of `omega` indices that entered the statistics.
    pub interior: Range<usize>,
    /// Interior omega values excluded for being non-positive.
    pub nonpositive_omega: usize,
}

/// Complex extension of `imf` whose imaginary part is the Hilbert transform.
pub fn analytic_signal(imf: &[f64]) -> Result<Vec<Complex64>, CoreError> {
    let n = imf.len();
    if n < 8 {
        return Err(CoreError::InsufficientData { needed: 8, got: n });
    }
    if imf.iter().all(|&v| v == 0.0) {
        return Err(CoreError::DegenerateSignal);
    }
    let buf: Vec<Complex64> = imf.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut spec = fft::dft(&buf);
    let half = n / 2;
    if n % 2 == 0 {
        for v in spec.iter_mut().take(half).skip(1) {
            *v *= 2.0;
        }
        for v in spec.iter_mut().skip(half + 1) {
            *v = Complex64::new(0.0, 0.0);
        }
    } else {
        for v in spec.iter_mut().take(half + 1).skip(1) {
            *v *= 2.0;
        }
        for v in spec.iter_mut().skip(half + 1) {
            *v = Complex64::new(0.0, 0.0);
        }
    }
    Ok(fft::idft(&spec))
}

fn unwrap_phase(wrapped: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut out = Vec::new();
    let mut offset = 0.0;
    let mut prev = f64::NAN;
    for p in wrapped {
        if prev.is_finite() {
            let d = p - prev;
            if d > PI {
                offset -= 2.0 * PI;
            } else if d < -PI {
                offset += 2.0 * PI;
            }
        }
        prev = p;
        out.push(p + offset);
    }
    out
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Phase, instantaneous frequency, and characteristic time scale of a mode.
///
/// `trim_frac` of the omega series is discarded at each end before taking
/// the median; the discrete analytic signal is distorted there.
pub fn characteristic_timescale(
    imf: &[f64],
    trim_frac: f64,
) -> Result<InstantaneousProfile, CoreError> {
    if !(0.0..0.5).contains(&trim_frac) {
        return Err(CoreError::InvalidParameter("trim_frac must be in [0, 0.5)"));
    }
    let z = analytic_signal(imf)?;
    let phase = unwrap_phase(z.iter().map(|c| c.im.atan2(c.re)));
    let omega: Vec<f64> = phase.windows(2).map(|w| w[1] - w[0]).collect();
    let m = omega.len();
    let trim = ((trim_frac * m as f64).floor() as usize).min(m / 2);
    let interior = trim..m - trim;
    let mut kept: Vec<f64> = omega[interior.clone()]
        .iter()
        .copied()
        .filter(|&w| w > 0.0)
        .collect();
    let interior_len = interior.len();
    let nonpositive = interior_len - kept.len();
    if nonpositive * 2 > interior_len {
        return Err(CoreError::UnreliableFrequency {
            nonpositive,
            interior: interior_len,
        });
    }
    kept.sort_by(f64::total_cmp);
    let med = median(&kept);
    let mean = kept.iter().sum::<f64>() / kept.len() as f64;
    Ok(InstantaneousProfile {
        phase,
        omega,
        tau: 2.0 * PI / med,
        tau_mean: 2.0 * PI / mean,
        interior,
        nonpositive_omega: nonpositive,
    })
}

/// Human-readable span for a time scale in trading days: "3.4 D", "2.8 M",
/// or "1.3 Y".
pub fn tau_label(tau_days: f64) -> String {
    use alloc::format;
    if tau_days < TRADING_DAYS_PER_MONTH {
        format!("{tau_days:.1} D")
    } else if tau_days < TRADING_DAYS_PER_YEAR {
        format!("{:.1} M", tau_days / TRADING_DAYS_PER_MONTH)
    } else {
        format!("{:.1} Y", tau_days / TRADING_DAYS_PER_YEAR)
    }
}
