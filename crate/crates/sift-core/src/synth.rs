//! Synthetic series with exactly known ground truth.
//!
//! These generators are the oracles for the decomposition and estimator
//! modules: tones have a known period, fractional Gaussian noise has a known
//! Hurst exponent. Randomness comes from ChaCha8 seeded directly from a
//! `u64`, with normal variates drawn through the ziggurat sampler, so a
//! `(spec, seed)` pair reproduces bit-identically across platforms.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::CoreError;

/// Fractional Gaussian noise with unit-variance increments, generated by the
/// exact conditional (Hosking) recursion — the output autocovariance is the
/// target autocovariance at every lag, not an approximation.
pub fn gen_fgn(h: f64, n: usize, seed: u64) -> Result<Vec<f64>, CoreError> {
    if !(0.0 < h && h < 1.0) {
        return Err(CoreError::InvalidParameter("fgn requires 0 < h < 1"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gn: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();

    // gamma(k) = 0.5 (|k-1|^{2H} - 2|k|^{2H} + |k+1|^{2H})
    let two_h = 2.0 * h;
    let cov: Vec<f64> = (0..n)
        .map(|k| {
            if k == 0 {
                1.0
            } else {
                let k = k as f64;
                0.5 * ((k - 1.0).powf(two_h) - 2.0 * k.powf(two_h) + (k + 1.0).powf(two_h))
            }
        })
        .collect();

    let mut out = vec![0.0; n];
    let mut phi = vec![0.0; n];
    let mut psi = vec![0.0; n];
    out[0] = gn[0];
    let mut v = 1.0;
    for i in 1..n {
        phi[i - 1] = cov[i];
        for j in 0..i - 1 {
            psi[j] = phi[j];
            phi[i - 1] -= psi[j] * cov[i - j - 1];
        }
        phi[i - 1] /= v;
        for j in 0..i - 1 {
            phi[j] = psi[j] - phi[i - 1] * psi[i - j - 2];
        }
        v *= 1.0 - phi[i - 1] * phi[i - 1];
        let mut acc = 0.0;
        for j in 0..i {
            acc += phi[j] * out[i - j - 1];
        }
        out[i] = acc + v.sqrt() * gn[i];
    }
    Ok(out)
}

/// Fractional Brownian motion: the cumulative sum of [`gen_fgn`].
pub fn gen_fbm(h: f64, n: usize, seed: u64) -> Result<Vec<f64>, CoreError> {
    let mut fgn = gen_fgn(h, n, seed)?;
    let mut acc = 0.0;
    for v in &mut fgn {
        acc += *v;
        *v = acc;
    }
    Ok(fgn)
}

/// Independent standard-normal samples scaled by `sd`.
pub fn gen_white(sd: f64, n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| sd * rng.sample::<f64, _>(StandardNormal))
        .collect()
}

/// Linear ramp `slope * t`.
pub fn gen_trend(slope: f64, n: usize) -> Vec<f64> {
    (0..n).map(|t| slope * t as f64).collect()
}

/// A sum of sinusoids plus optional Gaussian noise, with each pure
/// component returned alongside the mix.
#[derive(Debug, Clone)]
pub struct ToneMix {
    pub mix: Vec<f64>,
    pub components: Vec<Vec<f64>>,
}

/// `sum_i amplitudes[i] * sin(2*pi*t / periods[i]) + noise`.
pub fn gen_tone_mix(
    periods: &[f64],
    amplitudes: &[f64],
    n: usize,
    noise_sd: f64,
    seed: u64,
) -> Result<ToneMix, CoreError> {
    if periods.len() != amplitudes.len() {
        return Err(CoreError::InvalidParameter(
            "periods and amplitudes must have the same length",
        ));
    }
    if periods.iter().any(|&p| !(p > 0.0)) {
        return Err(CoreError::InvalidParameter("periods must be positive"));
    }
    for (i, &p) in periods.iter().enumerate() {
        if periods[..i].contains(&p) {
            return Err(CoreError::InvalidParameter("periods must be distinct"));
        }
    }
    let components: Vec<Vec<f64>> = periods
        .iter()
        .zip(amplitudes.iter())
        .map(|(&p, &a)| (0..n).map(|t| a * (2.0 * PI * t as f64 / p).sin()).collect())
        .collect();
    let mut mix = vec![0.0; n];
    for c in &components {
        for (m, v) in mix.iter_mut().zip(c.iter()) {
            *m += v;
        }
    }
    if noise_sd > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for m in &mut mix {
            *m += noise_sd * rng.sample::<f64, _>(StandardNormal);
        }
    }
    Ok(ToneMix { mix, components })
}

/// Which generator to run.
#[derive(Debug, Clone, PartialEq)]
pub enum SynthKind {
    Fgn { h: f64 },
    Fbm { h: f64 },
    Tone { period: f64, amplitude: f64 },
    ToneMix {
        periods: Vec<f64>,
        amplitudes: Vec<f64>,
        noise_sd: f64,
    },
    Trend { slope: f64 },
    White { sd: f64 },
}

/// A complete, reproducible description of one synthetic series.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub kind: SynthKind,
    pub n: usize,
    pub seed: u64,
}

impl SynthSpec {
    pub fn generate(&self) -> Result<Vec<f64>, CoreError> {
        if self.n < 64 {
            return Err(CoreError::InvalidParameter("synth length must be >= 64"));
        }
        match &self.kind {
            SynthKind::Fgn { h } => gen_fgn(*h, self.n, self.seed),
            SynthKind::Fbm { h } => gen_fbm(*h, self.n, self.seed),
            SynthKind::Tone { period, amplitude } => {
                Ok(gen_tone_mix(&[*period], &[*amplitude], self.n, 0.0, self.seed)?.mix)
            }
            SynthKind::ToneMix {
                periods,
                amplitudes,
                noise_sd,
            } => Ok(gen_tone_mix(periods, amplitudes, self.n, *noise_sd, self.seed)?.mix),
            SynthKind::Trend { slope } => Ok(gen_trend(*slope, self.n)),
            SynthKind::White { sd } => Ok(gen_white(*sd, self.n, self.seed)),
        }
    }
}
