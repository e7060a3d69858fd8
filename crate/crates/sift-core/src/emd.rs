//! Empirical mode decomposition by envelope-mean sifting.
//!
//! A mode is accepted when the extrema/zero-crossing counts stay within one
//! of each other for a configured number of consecutive sifts (the S-number
//! rule); decomposition stops when the remainder is monotonic or too
//! extrema-poor to envelope reliably.

use alloc::vec::Vec;

use crate::error::CoreError;
use crate::spline::NaturalCubicSpline;

/// Envelope boundary extension policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Reflect up to two extrema about each endpoint before fitting.
    #[default]
    Mirror,
}

/// Envelope interpolation kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplineKind {
    /// Natural cubic: zero second derivative at the ends of the extended
    /// anchor set.
    #[default]
    NaturalCubic,
}

/// Sifting parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SiftConfig {
    /// Hard cap on sift iterations per mode.
    pub max_sift_iters: usize,
    /// Consecutive sifts with |#extrema - #zero-crossings| <= 1 required to
    /// accept a mode.
    pub s_number: usize,
    /// Cap on the number of extracted modes.
    pub max_imfs: usize,
    pub boundary: Boundary,
    pub spline: SplineKind,
}

impl Default for SiftConfig {
    fn default() -> Self {
        Self {
            max_sift_iters: 100,
            s_number: 4,
            max_imfs: 16,
            boundary: Boundary::Mirror,
            spline: SplineKind::NaturalCubic,
        }
    }
}

impl SiftConfig {
    fn validate(&self) -> Result<(), CoreError> {
        if self.max_sift_iters < 1 {
            return Err(CoreError::InvalidParameter("max_sift_iters must be >= 1"));
        }
        if self.s_number < 1 {
            return Err(CoreError::InvalidParameter("s_number must be >= 1"));
        }
        Ok(())
    }
}

/// Why sifting stopped for one mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiftTermination {
    /// The S-number criterion was met.
    SNumber,
    /// `max_sift_iters` was reached; the candidate was kept as-is.
    MaxIters,
    /// The candidate lost the extrema needed for envelopes mid-sift.
    DegenerateEnvelope,
}

/// An ordered set of modes plus the residue, with sifting provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    /// Modes, fastest first; every mode has `source_len` samples.
    pub imfs: Vec<Vec<f64>>,
    pub residue: Vec<f64>,
    /// Sift iterations spent on each mode.
    pub sift_counts: Vec<usize>,
    /// How each mode's sifting terminated.
    pub terminations: Vec<SiftTermination>,
    /// RMS of the final mean envelope of each mode — a diagnostic for how
    /// far the mode is from a zero-mean envelope.
    pub mean_env_rms: Vec<f64>,
    pub config: SiftConfig,
    pub source_len: usize,
}

impl Decomposition {
    /// Elementwise `sum(IMFs) + residue`.
    pub fn reassemble(&self) -> Vec<f64> {
        let mut out = self.residue.clone();
        for imf in &self.imfs {
            for (o, v) in out.iter_mut().zip(imf.iter()) {
                *o += v;
            }
        }
        out
    }
}

/// Interior local extrema by sign change of the first difference.
///
/// Flat plateaus report their midpoint index, rounded down. Endpoints are
/// never extrema.
pub fn find_extrema(x: &[f64]) -> (Vec<usize>, Vec<usize>) {
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    if x.len() < 3 {
        return (maxima, minima);
    }
    let mut last_sign = 0i8;
    let mut last_pos = 0usize;
    for i in 0..x.len() - 1 {
        let d = x[i + 1] - x[i];
        if d == 0.0 {
            continue;
        }
        let s: i8 = if d > 0.0 { 1 } else { -1 };
        if last_sign > 0 && s < 0 {
            maxima.push((last_pos + 1 + i) / 2);
        } else if last_sign < 0 && s > 0 {
            minima.push((last_pos + 1 + i) / 2);
        }
        last_sign = s;
        last_pos = i;
    }
    (maxima, minima)
}

/// Count of sign changes, ignoring exact zeros.
pub fn count_zero_crossings(x: &[f64]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &v in x {
        if v == 0.0 {
            continue;
        }
        let s: i8 = if v > 0.0 { 1 } else { -1 };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn is_monotonic(x: &[f64]) -> bool {
    x.windows(2).all(|w| w[1] >= w[0]) || x.windows(2).all(|w| w[1] <= w[0])
}

/// Spline envelope through `x[anchors]`, extended per `boundary` and
/// evaluated at every sample index.
pub fn envelope(x: &[f64], anchors: &[usize], boundary: Boundary) -> Result<Vec<f64>, CoreError> {
    let Boundary::Mirror = boundary;
    let n = x.len();
    let k = anchors.len();
    if k == 0 {
        return Err(CoreError::DegenerateEnvelope);
    }
    // Reflect up to two anchors about each endpoint. Interior anchors lie in
    // 1..n-2, so mirrored positions are strictly outside [0, n-1] and the
    // combined abscissae are strictly increasing.
    let mirrored = k.min(2);
    let mut xs = Vec::with_capacity(k + 2 * mirrored);
    let mut ys = Vec::with_capacity(k + 2 * mirrored);
    for j in (0..mirrored).rev() {
        xs.push(-(anchors[j] as f64));
        ys.push(x[anchors[j]]);
    }
    for &a in anchors {
        xs.push(a as f64);
        ys.push(x[a]);
    }
    let end = 2.0 * (n - 1) as f64;
    for j in 0..mirrored {
        xs.push(end - anchors[k - 1 - j] as f64);
        ys.push(x[anchors[k - 1 - j]]);
    }
    if xs.len() < 2 {
        return Err(CoreError::DegenerateEnvelope);
    }
    let spline = NaturalCubicSpline::fit(&xs, &ys).ok_or(CoreError::DegenerateEnvelope)?;
    Ok((0..n).map(|t| spline.eval(t as f64)).collect())
}

/// One sifting step: subtract the mean of the upper and lower envelopes.
///
/// Returns the new candidate and the mean envelope that was removed.
pub fn sift_once(h: &[f64], config: &SiftConfig) -> Result<(Vec<f64>, Vec<f64>), CoreError> {
    let (maxima, minima) = find_extrema(h);
    if maxima.is_empty() || minima.is_empty() {
        return Err(CoreError::DegenerateEnvelope);
    }
    let upper = envelope(h, &maxima, config.boundary)?;
    let lower = envelope(h, &minima, config.boundary)?;
    let mean_env: Vec<f64> = upper
        .iter()
        .zip(lower.iter())
        .map(|(u, v)| (u + v) / 2.0)
        .collect();
    let next: Vec<f64> = h.iter().zip(mean_env.iter()).map(|(a, m)| a - m).collect();
    Ok((next, mean_env))
}

fn condition_one_holds(x: &[f64]) -> bool {
    let (maxima, minima) = find_extrema(x);
    let extrema = maxima.len() + minima.len();
    let crossings = count_zero_crossings(x);
    extrema.abs_diff(crossings) <= 1
}

fn rms(x: &[f64]) -> f64 {
    if x.is_empty() {
        return 0.0;
    }
    (x.iter().map(|v| v * v).sum::<f64>() / x.len() as f64).sqrt()
}

/// Result of extracting a single mode.
#[derive(Debug, Clone)]
pub struct ExtractedImf {
    pub imf: Vec<f64>,
    pub sift_count: usize,
    pub termination: SiftTermination,
    /// RMS of the last mean envelope subtracted.
    pub mean_env_rms: f64,
}

/// Sift `d` until the S-number criterion holds or the iteration cap is hit.
pub fn extract_imf(d: &[f64], config: &SiftConfig) -> Result<ExtractedImf, CoreError> {
    config.validate()?;
    let mut h = d.to_vec();
    let mut streak = 0usize;
    let mut count = 0usize;
    let mut env_rms = 0.0;
    for _ in 0..config.max_sift_iters {
        let (next, mean_env) = match sift_once(&h, config) {
            Ok(pair) => pair,
            Err(CoreError::DegenerateEnvelope) => {
                return Ok(ExtractedImf {
                    imf: h,
                    sift_count: count,
                    termination: SiftTermination::DegenerateEnvelope,
                    mean_env_rms: env_rms,
                });
            }
            Err(e) => return Err(e),
        };
        h = next;
        env_rms = rms(&mean_env);
        count += 1;
        if condition_one_holds(&h) {
            streak += 1;
            if streak >= config.s_number {
                return Ok(ExtractedImf {
                    imf: h,
                    sift_count: count,
                    termination: SiftTermination::SNumber,
                    mean_env_rms: env_rms,
                });
            }
        } else {
            streak = 0;
        }
    }
    Ok(ExtractedImf {
        imf: h,
        sift_count: count,
        termination: SiftTermination::MaxIters,
        mean_env_rms: env_rms,
    })
}

/// Decompose `x` into modes plus a residue.
///
/// Modes are extracted from the running remainder until it is monotonic, has
/// fewer than four interior extrema, or `max_imfs` is reached. The modes and
/// residue sum back to the input elementwise.
pub fn decompose(x: &[f64], config: &SiftConfig) -> Result<Decomposition, CoreError> {
    config.validate()?;
    if x.len() < 8 {
        return Err(CoreError::InsufficientData {
            needed: 8,
            got: x.len(),
        });
    }
    let mut remainder = x.to_vec();
    let mut imfs = Vec::new();
    let mut sift_counts = Vec::new();
    let mut terminations = Vec::new();
    let mut mean_env_rms = Vec::new();
    while imfs.len() < config.max_imfs {
        if is_monotonic(&remainder) {
            break;
        }
        let (maxima, minima) = find_extrema(&remainder);
        if maxima.len() + minima.len() < 4 {
            break;
        }
        let extracted = extract_imf(&remainder, config)?;
        for (r, v) in remainder.iter_mut().zip(extracted.imf.iter()) {
            *r -= v;
        }
        imfs.push(extracted.imf);
        sift_counts.push(extracted.sift_count);
        terminations.push(extracted.termination);
        mean_env_rms.push(extracted.mean_env_rms);
    }
    Ok(Decomposition {
        imfs,
        residue: remainder,
        sift_counts,
        terminations,
        mean_env_rms,
        config: config.clone(),
        source_len: x.len(),
    })
}
