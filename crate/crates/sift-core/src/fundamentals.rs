//! Alignment of a dated series with fiscal year-ends, and correlation.
//!
//! Dates are passed as opaque day numbers (any strictly increasing integer
//! key works); the CLI converts calendar dates before calling in.

use alloc::vec::Vec;

use crate::error::CoreError;

/// Result of aligning a dated series with fiscal year-ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnualAlignment {
    /// `(year_end index, sample index)` pairs: the sample is the last one
    /// at or before the year-end.
    pub pairs: Vec<(usize, usize)>,
    /// Year-end indices with no sample at or before them.
    pub dropped: Vec<usize>,
}

/// For each fiscal year-end, pick the last sample day at or before it.
///
/// `sample_days` must be strictly increasing. Year-ends before the first
/// sample are dropped; fewer than three surviving pairs is an error.
pub fn annual_align(
    sample_days: &[i64],
    year_end_days: &[i64],
) -> Result<AnnualAlignment, CoreError> {
    if sample_days.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CoreError::InvalidParameter(
            "sample days must be strictly increasing",
        ));
    }
    let mut pairs = Vec::new();
    let mut dropped = Vec::new();
    for (yi, &ye) in year_end_days.iter().enumerate() {
        // Number of samples <= ye; zero means the year-end precedes coverage.
        let pos = sample_days.partition_point(|&d| d <= ye);
        if pos == 0 {
            dropped.push(yi);
        } else {
            pairs.push((yi, pos - 1));
        }
    }
    if pairs.len() < 3 {
        return Err(CoreError::InsufficientOverlap {
            aligned: pairs.len(),
        });
    }
    Ok(AnnualAlignment { pairs, dropped })
}

/// Product-moment correlation coefficient.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64, CoreError> {
    if a.len() != b.len() {
        return Err(CoreError::InvalidParameter(
            "correlation inputs must have equal length",
        ));
    }
    let n = a.len();
    if n < 3 {
        return Err(CoreError::InsufficientData { needed: 3, got: n });
    }
    let ma = a.iter().sum::<f64>() / n as f64;
    let mb = b.iter().sum::<f64>() / n as f64;
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (&x, &y) in a.iter().zip(b.iter()) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    if va == 0.0 || vb == 0.0 {
        return Err(CoreError::ZeroVariance);
    }
    Ok(cov / (va.sqrt() * vb.sqrt()))
}
