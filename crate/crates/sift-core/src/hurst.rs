//! Hurst exponent by rescaled-range analysis.
//!
//! For each window length `l` on a log-spaced grid the series is cut into
//! disjoint blocks, the range of the cumulative mean-deviation sum is divided
//! by the population standard deviation, and the block averages are fitted
//! with a least-squares line in log-log space. The slope is the Hurst
//! exponent; its regression standard error is the quoted uncertainty.

use alloc::vec::Vec;

use crate::error::CoreError;

/// Estimates with a log-log fit quality below this are treated as
/// unreliable by the horizon classifier: the scaling law did not hold.
pub const RELIABLE_R2_MIN: f64 = 0.95;

/// Rescaled-range Hurst estimate with regression diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct HurstEstimate {
    /// Fitted scaling exponent.
    pub h: f64,
    /// One-sigma standard error of the regression slope.
    pub stderr: f64,
    /// Coefficient of determination of the log-log fit.
    pub r2: f64,
    /// Window lengths that produced a usable mean R/S.
    pub scales: Vec<usize>,
    /// Mean R/S per scale, aligned with `scales`.
    pub rs_values: Vec<f64>,
}

impl HurstEstimate {
    /// Outside the meaningful estimator range: `h` values above 1 say more
    /// about the fit than about persistence.
    pub fn is_suspicious(&self) -> bool {
        self.h <= 0.0 || self.h > 1.0
    }

    /// Whether the log-log relationship was close enough to linear for the
    /// exponent to mean anything.
    pub fn is_reliable(&self) -> bool {
        self.r2 >= RELIABLE_R2_MIN
    }
}

/// R/S statistic of one window: range of cumulative mean deviations over
/// the population standard deviation.
pub fn rs_statistic(window: &[f64]) -> Result<f64, CoreError> {
    let n = window.len();
    if n < 4 {
        return Err(CoreError::InsufficientData { needed: 4, got: n });
    }
    let mean = window.iter().sum::<f64>() / n as f64;
    let mut cum = 0.0;
    let mut z_max = f64::MIN;
    let mut z_min = f64::MAX;
    let mut sq = 0.0;
    for &v in window {
        let dev = v - mean;
        cum += dev;
        z_max = z_max.max(cum);
        z_min = z_min.min(cum);
        sq += dev * dev;
    }
    let s = (sq / n as f64).sqrt();
    if s == 0.0 {
        return Err(CoreError::ZeroDispersion);
    }
    Ok((z_max - z_min) / s)
}

/// Log-spaced window lengths in `[min_scale, n/2]`, deduplicated.
fn scale_grid(n: usize, min_scale: usize, n_scales: usize) -> Vec<usize> {
    let lo = min_scale as f64;
    let hi = (n / 2) as f64;
    let mut out: Vec<usize> = Vec::with_capacity(n_scales);
    for i in 0..n_scales {
        let f = if n_scales == 1 {
            0.0
        } else {
            i as f64 / (n_scales - 1) as f64
        };
        let l = (lo.ln() + f * (hi.ln() - lo.ln())).exp().round() as usize;
        if out.last() != Some(&l) {
            out.push(l);
        }
    }
    out
}

/// Estimate the Hurst exponent of `x`.
///
/// Scales where every block is zero-dispersion are dropped; fewer than four
/// surviving scales is an error.
pub fn hurst_exponent(
    x: &[f64],
    min_scale: usize,
    n_scales: usize,
) -> Result<HurstEstimate, CoreError> {
    if x.len() < 64 {
        return Err(CoreError::InsufficientData {
            needed: 64,
            got: x.len(),
        });
    }
    if min_scale < 4 {
        return Err(CoreError::InvalidParameter("min_scale must be >= 4"));
    }
    if min_scale > x.len() / 2 {
        return Err(CoreError::InvalidParameter("min_scale exceeds half the series length"));
    }
    if n_scales < 4 {
        return Err(CoreError::InvalidParameter("n_scales must be >= 4"));
    }
    let mut scales = Vec::new();
    let mut rs_values = Vec::new();
    for l in scale_grid(x.len(), min_scale, n_scales) {
        let mut sum = 0.0;
        let mut count = 0usize;
        for block in x.chunks_exact(l) {
            match rs_statistic(block) {
                Ok(rs) => {
                    sum += rs;
                    count += 1;
                }
                Err(CoreError::ZeroDispersion) => {}
                Err(e) => return Err(e),
            }
        }
        if count > 0 {
            scales.push(l);
            rs_values.push(sum / count as f64);
        }
    }
    if scales.len() < 4 {
        return Err(CoreError::InsufficientScales {
            usable: scales.len(),
        });
    }
    let k = scales.len() as f64;
    let lx: Vec<f64> = scales.iter().map(|&l| (l as f64).ln()).collect();
    let ly: Vec<f64> = rs_values.iter().map(|&v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxx: f64 = lx.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = lx.iter().zip(ly.iter()).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let sse: f64 = lx
        .iter()
        .zip(ly.iter())
        .map(|(a, b)| {
            let fit = my + slope * (a - mx);
            (b - fit) * (b - fit)
        })
        .sum();
    let sst: f64 = ly.iter().map(|v| (v - my) * (v - my)).sum();
    let stderr = (sse / (k - 2.0) / sxx).sqrt();
    let r2 = if sst > 0.0 { 1.0 - sse / sst } else { 0.0 };
    Ok(HurstEstimate {
        h: slope,
        stderr,
        r2,
        scales,
        rs_values,
    })
}

/// Convenience: estimate with the default grid (`min_scale` 10, 20 scales).
pub fn hurst_exponent_default(x: &[f64]) -> Result<HurstEstimate, CoreError> {
    hurst_exponent(x, 10, 20)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth;
    use alloc::vec;

    #[test]
    fn rs_statistic_hand_computed() {
        // mean 2.5, Z = [-1.5, -2, -1.5, 0], R = 2, S = sqrt(1.25).
        let rs = rs_statistic(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!((rs - 1.7888543819998317).abs() < 1e-15);
    }

    #[test]
    fn rs_statistic_constant_window_errors() {
        assert_eq!(
            rs_statistic(&[5.0, 5.0, 5.0, 5.0]),
            Err(CoreError::ZeroDispersion)
        );
    }

    #[test]
    fn rs_statistic_is_sign_symmetric() {
        let w = [1.0, -2.0, 0.5, 3.5, -1.0, 0.25];
        let neg: Vec<f64> = w.iter().map(|v| -v).collect();
        assert_eq!(rs_statistic(&w).unwrap(), rs_statistic(&neg).unwrap());
    }

    #[test]
    fn rs_statistic_rejects_short_window() {
        assert_eq!(
            rs_statistic(&[1.0, 2.0]),
            Err(CoreError::InsufficientData { needed: 4, got: 2 })
        );
    }

    #[test]
    fn scale_grid_is_increasing_and_bounded() {
        let g = scale_grid(4096, 10, 20);
        assert!(g.len() >= 10);
        assert_eq!(g[0], 10);
        assert_eq!(*g.last().unwrap(), 2048);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn affine_invariance() {
        let x = synth::gen_fgn(0.6, 512, 11).unwrap();
        let base = hurst_exponent_default(&x).unwrap();
        // Power-of-two scale, zero shift: exact in floating point.
        let scaled: Vec<f64> = x.iter().map(|v| v * 4.0).collect();
        assert_eq!(base.h, hurst_exponent_default(&scaled).unwrap().h);
        // General affine map agrees to rounding error.
        let affine: Vec<f64> = x.iter().map(|v| -1.7 * v + 3.1).collect();
        let got = hurst_exponent_default(&affine).unwrap();
        assert!((got.h - base.h).abs() < 1e-9);
    }

    #[test]
    fn white_noise_estimate_is_near_half() {
        let mut sum = 0.0;
        let seeds = 50;
        for seed in 0..seeds {
            let x = synth::gen_white(1.0, 4096, seed);
            sum += hurst_exponent_default(&x).unwrap().h;
        }
        let mean = sum / seeds as f64;
        assert!((0.45..=0.60).contains(&mean), "mean H = {mean}");
    }

    #[test]
    fn monotone_in_target_h() {
        // Mean estimate over fractional-noise seeds must order with the
        // target exponent.
        let targets = [0.3, 0.5, 0.7, 0.9];
        let mut means = Vec::new();
        for &h in &targets {
            let mut sum = 0.0;
            let seeds = 50;
            for seed in 0..seeds {
                let x = synth::gen_fgn(h, 4096, seed).unwrap();
                sum += hurst_exponent_default(&x).unwrap().h;
            }
            means.push(sum / seeds as f64);
        }
        for w in means.windows(2) {
            assert!(w[0] < w[1], "means not increasing: {means:?}");
        }
    }

    #[test]
    fn insufficient_scales_when_series_nearly_constant() {
        // All blocks constant at every scale: every scale is dropped.
        let x = vec![3.25; 128];
        assert_eq!(
            hurst_exponent_default(&x),
            Err(CoreError::InsufficientScales { usable: 0 })
        );
    }

    #[test]
    fn parameter_validation() {
        let x = synth::gen_white(1.0, 128, 1);
        assert!(matches!(
            hurst_exponent(&x, 3, 20),
            Err(CoreError::InvalidParameter(_))
        ));
        assert!(matches!(
            hurst_exponent(&x, 10, 2),
            Err(CoreError::InvalidParameter(_))
        ));
        assert!(matches!(
            hurst_exponent(&x[..32], 10, 20),
            Err(CoreError::InsufficientData { .. })
        ));
    }
}
