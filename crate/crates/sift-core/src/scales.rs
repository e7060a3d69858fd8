//! Horizon classification and reconstruction.
//!
//! Modes are ranked by normalized variance, labelled short- or long-term
//! from their Hurst exponent (time scale as fallback when the exponent is
//! unreliable), and summed into the two horizon series. The residue always
//! belongs to the long-term series.

use alloc::vec;
use alloc::vec::Vec;

use crate::emd::Decomposition;
use crate::error::CoreError;
use crate::hurst::HurstEstimate;

/// Horizon label for one mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    ShortTerm,
    LongTerm,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::ShortTerm => "short",
            Label::LongTerm => "long",
        }
    }
}

/// Classification thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleParams {
    /// Modes with `H` strictly above this are long-term; the boundary value
    /// itself stays short-term.
    pub h_boundary: f64,
    /// Fallback boundary on the characteristic time scale, trading days,
    /// used when the Hurst estimate is unreliable.
    pub tau_boundary_days: f64,
}

impl Default for ScaleParams {
    fn default() -> Self {
        Self {
            h_boundary: 0.65,
            tau_boundary_days: 90.0,
        }
    }
}

/// Per-mode diagnostics feeding classification and reports.
#[derive(Debug, Clone)]
pub struct ImfDiagnostics {
    /// 1-based mode index, fastest first.
    pub imf_index: usize,
    /// Characteristic time scale in samples (trading days for daily data).
    pub tau_days: f64,
    /// Hurst estimate; `None` when estimation failed outright.
    pub hurst: Option<HurstEstimate>,
    /// Normalized variance share, in [0, 1].
    pub nv: f64,
}

/// Classification outcome: one label per mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub labels: Vec<Label>,
    /// True when the raw per-mode labels were not monotone in mode index and
    /// slower modes had to be promoted to long-term.
    pub nonmonotone_warning: bool,
}

/// The reconstructed horizon series.
#[derive(Debug, Clone)]
pub struct ScaleReport {
    pub labels: Vec<Label>,
    /// Sum of short-term modes.
    pub x_st: Vec<f64>,
    /// Sum of long-term modes plus the residue.
    pub x_lt: Vec<f64>,
    pub h_boundary: f64,
    pub tau_boundary_days: f64,
}

/// Estimator settings used when assembling per-mode diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticsParams {
    /// Smallest rescaled-range window.
    pub min_scale: usize,
    /// Number of log-spaced rescaled-range windows.
    pub n_scales: usize,
    /// Fraction trimmed from each end of the instantaneous-frequency series.
    pub trim_frac: f64,
}

impl Default for DiagnosticsParams {
    fn default() -> Self {
        Self {
            min_scale: 10,
            n_scales: 20,
            trim_frac: 0.05,
        }
    }
}

/// Assemble time scale, Hurst estimate, and normalized variance for every
/// mode of a decomposition.
///
/// A failed Hurst estimation is recorded as `None` (the classifier falls
/// back to the time scale); a failed time-scale estimate aborts, since a
/// mode without a scale cannot be reported.
pub fn diagnose(
    d: &Decomposition,
    params: &DiagnosticsParams,
) -> Result<Vec<ImfDiagnostics>, CoreError> {
    let nv = normalized_variance(d)?;
    let mut out = Vec::with_capacity(d.imfs.len());
    for (i, imf) in d.imfs.iter().enumerate() {
        let profile = crate::spectral::characteristic_timescale(imf, params.trim_frac)?;
        let hurst = crate::hurst::hurst_exponent(imf, params.min_scale, params.n_scales).ok();
        out.push(ImfDiagnostics {
            imf_index: i + 1,
            tau_days: profile.tau,
            hurst,
            nv: nv[i],
        });
    }
    Ok(out)
}

/// Normalized variance of each mode: root-sum-square energy as a fraction
/// of the total over all modes. The residue is excluded.
pub fn normalized_variance(d: &Decomposition) -> Result<Vec<f64>, CoreError> {
    if d.imfs.is_empty() {
        return Err(CoreError::InvalidParameter(
            "normalized variance requires at least one mode",
        ));
    }
    let rss: Vec<f64> = d
        .imfs
        .iter()
        .map(|imf| imf.iter().map(|v| v * v).sum::<f64>().sqrt())
        .collect();
    let total: f64 = rss.iter().sum();
    if total == 0.0 {
        return Err(CoreError::DegenerateEnergy);
    }
    Ok(rss.iter().map(|v| v / total).collect())
}

fn raw_label(diag: &ImfDiagnostics, params: &ScaleParams) -> Label {
    match &diag.hurst {
        Some(est) if est.is_reliable() => {
            if est.h > params.h_boundary {
                Label::LongTerm
            } else {
                Label::ShortTerm
            }
        }
        // Estimation failed or the scaling law did not hold: fall back to
        // the time scale.
        _ => {
            if diag.tau_days > params.tau_boundary_days {
                Label::LongTerm
            } else {
                Label::ShortTerm
            }
        }
    }
}

/// Label every mode, enforcing monotonicity: once a mode is long-term, all
/// slower modes are long-term too.
pub fn classify_imfs(diags: &[ImfDiagnostics], params: &ScaleParams) -> Classification {
    let raw: Vec<Label> = diags.iter().map(|d| raw_label(d, params)).collect();
    let mut labels = raw.clone();
    if let Some(first_long) = labels.iter().position(|&l| l == Label::LongTerm) {
        for l in labels.iter_mut().skip(first_long) {
            *l = Label::LongTerm;
        }
    }
    Classification {
        nonmonotone_warning: labels != raw,
        labels,
    }
}

/// Sum the labelled modes into the two horizon series.
///
/// The two outputs partition the input: `x_st + x_lt` reproduces the
/// decomposed series elementwise.
pub fn reconstruct(
    d: &Decomposition,
    labels: &[Label],
    params: &ScaleParams,
) -> Result<ScaleReport, CoreError> {
    if labels.len() != d.imfs.len() {
        return Err(CoreError::InvalidParameter(
            "label count must match mode count",
        ));
    }
    let n = d.source_len;
    let mut x_st = vec![0.0; n];
    let mut x_lt = d.residue.clone();
    for (imf, &label) in d.imfs.iter().zip(labels.iter()) {
        let target = match label {
            Label::ShortTerm => &mut x_st,
            Label::LongTerm => &mut x_lt,
        };
        for (acc, v) in target.iter_mut().zip(imf.iter()) {
            *acc += v;
        }
    }
    Ok(ScaleReport {
        labels: labels.to_vec(),
        x_st,
        x_lt,
        h_boundary: params.h_boundary,
        tau_boundary_days: params.tau_boundary_days,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emd::{SiftConfig, decompose};
    use crate::hurst::HurstEstimate;
    use crate::synth;

    fn estimate(h: f64, r2: f64) -> HurstEstimate {
        HurstEstimate {
            h,
            stderr: 0.02,
            r2,
            scales: vec![10, 20, 40, 80],
            rs_values: vec![1.0; 4],
        }
    }

    fn diag(idx: usize, tau: f64, hurst: Option<HurstEstimate>) -> ImfDiagnostics {
        ImfDiagnostics {
            imf_index: idx,
            tau_days: tau,
            hurst,
            nv: 0.0,
        }
    }

    fn toy_decomposition(imfs: Vec<Vec<f64>>, residue: Vec<f64>) -> Decomposition {
        let n = residue.len();
        let k = imfs.len();
        Decomposition {
            imfs,
            residue,
            sift_counts: vec![1; k],
            terminations: vec![crate::emd::SiftTermination::SNumber; k],
            mean_env_rms: vec![0.0; k],
            config: SiftConfig::default(),
            source_len: n,
        }
    }

    #[test]
    fn nv_single_mode_is_one() {
        let d = toy_decomposition(vec![vec![1.0, -1.0, 1.0, -1.0]], vec![0.0; 4]);
        assert_eq!(normalized_variance(&d).unwrap(), vec![1.0]);
    }

    #[test]
    fn nv_equal_energy_splits_evenly() {
        let d = toy_decomposition(
            vec![vec![1.0, -1.0, 1.0, -1.0], vec![-1.0, 1.0, -1.0, 1.0]],
            vec![0.0; 4],
        );
        let nv = normalized_variance(&d).unwrap();
        assert!((nv[0] - 0.5).abs() < 1e-15);
        assert!((nv[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn nv_three_to_one_energy_ratio() {
        // Root-sum-squares 3 and 1.
        let d = toy_decomposition(
            vec![vec![3.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 0.0, 0.0]],
            vec![0.0; 4],
        );
        let nv = normalized_variance(&d).unwrap();
        assert!((nv[0] - 0.75).abs() < 1e-15);
        assert!((nv[1] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn nv_all_zero_modes_is_degenerate() {
        let d = toy_decomposition(vec![vec![0.0; 4], vec![0.0; 4]], vec![1.0; 4]);
        assert_eq!(normalized_variance(&d), Err(CoreError::DegenerateEnergy));
    }

    #[test]
    fn nv_sums_to_one_on_a_real_decomposition() {
        let tm = synth::gen_tone_mix(&[8.0, 64.0], &[1.0, 2.0], 1024, 0.0, 0).unwrap();
        let d = decompose(&tm.mix, &SiftConfig::default()).unwrap();
        let nv = normalized_variance(&d).unwrap();
        let total: f64 = nv.iter().sum();
        assert!((total - 1.0).abs() <= 1e-12);
        assert!(nv.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn classify_random_short_scale_mode_is_short_term() {
        let c = classify_imfs(
            &[diag(1, 5.0, Some(estimate(0.50, 0.99)))],
            &ScaleParams::default(),
        );
        assert_eq!(c.labels, vec![Label::ShortTerm]);
    }

    #[test]
    fn classify_persistent_slow_mode_is_long_term() {
        let c = classify_imfs(
            &[diag(1, 150.0, Some(estimate(0.80, 0.99)))],
            &ScaleParams::default(),
        );
        assert_eq!(c.labels, vec![Label::LongTerm]);
    }

    #[test]
    fn classify_boundary_h_stays_short_term() {
        let c = classify_imfs(
            &[diag(1, 150.0, Some(estimate(0.65, 0.99)))],
            &ScaleParams::default(),
        );
        assert_eq!(c.labels, vec![Label::ShortTerm]);
    }

    #[test]
    fn classify_unreliable_fit_falls_back_to_tau() {
        // Poor log-log linearity: labels come from the time scale.
        let c = classify_imfs(
            &[
                diag(1, 40.0, Some(estimate(0.9, 0.80))),
                diag(2, 120.0, Some(estimate(0.4, 0.80))),
                diag(3, 400.0, None),
            ],
            &ScaleParams::default(),
        );
        assert_eq!(
            c.labels,
            vec![Label::ShortTerm, Label::LongTerm, Label::LongTerm]
        );
        assert!(!c.nonmonotone_warning);
    }

    #[test]
    fn classify_enforces_monotone_labels() {
        // A long-term outlier in second place promotes everything after it.
        let c = classify_imfs(
            &[
                diag(1, 3.0, Some(estimate(0.50, 0.99))),
                diag(2, 9.0, Some(estimate(0.70, 0.99))),
                diag(3, 30.0, Some(estimate(0.55, 0.99))),
            ],
            &ScaleParams::default(),
        );
        assert_eq!(
            c.labels,
            vec![Label::ShortTerm, Label::LongTerm, Label::LongTerm]
        );
        assert!(c.nonmonotone_warning);
    }

    #[test]
    fn reconstruct_all_short_leaves_residue_in_x_lt() {
        let d = toy_decomposition(
            vec![vec![1.0, -1.0, 1.0, -1.0]],
            vec![5.0, 5.0, 5.0, 5.0],
        );
        let r = reconstruct(&d, &[Label::ShortTerm], &ScaleParams::default()).unwrap();
        assert_eq!(r.x_lt, vec![5.0; 4]);
        assert_eq!(r.x_st, vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn reconstruct_all_long_zeroes_x_st() {
        let d = toy_decomposition(
            vec![vec![1.0, -1.0, 1.0, -1.0]],
            vec![5.0, 5.0, 5.0, 5.0],
        );
        let r = reconstruct(&d, &[Label::LongTerm], &ScaleParams::default()).unwrap();
        assert_eq!(r.x_st, vec![0.0; 4]);
        assert_eq!(r.x_lt, vec![6.0, 4.0, 6.0, 4.0]);
    }

    #[test]
    fn reconstruct_partitions_a_real_decomposition() {
        let tm = synth::gen_tone_mix(&[8.0, 64.0], &[1.0, 1.0], 1024, 0.0, 0).unwrap();
        let d = decompose(&tm.mix, &SiftConfig::default()).unwrap();
        let labels: Vec<Label> = (0..d.imfs.len())
            .map(|i| if i == 0 { Label::ShortTerm } else { Label::LongTerm })
            .collect();
        let r = reconstruct(&d, &labels, &ScaleParams::default()).unwrap();
        let range = 4.0;
        for t in 0..1024 {
            let back = r.x_st[t] + r.x_lt[t];
            assert!((back - tm.mix[t]).abs() <= 1e-8 * range);
        }
    }

    #[test]
    fn reconstruct_rejects_label_mismatch() {
        let d = toy_decomposition(vec![vec![0.0; 4]], vec![0.0; 4]);
        assert!(matches!(
            reconstruct(&d, &[], &ScaleParams::default()),
            Err(CoreError::InvalidParameter(_))
        ));
    }
}
