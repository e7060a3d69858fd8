//! Discrete Fourier transform for arbitrary lengths.
//!
//! Power-of-two lengths use an iterative radix-2 transform; everything else
//! goes through Bluestein's chirp-z reduction to a padded power-of-two
//! convolution, so daily series of awkward lengths transform exactly.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Forward DFT, unnormalized: `X[k] = sum_n x[n] exp(-2*pi*i*n*k/N)`.
pub fn dft(x: &[Complex64]) -> Vec<Complex64> {
    transform(x, false)
}

/// Inverse DFT, normalized by `1/N`.
pub fn idft(x: &[Complex64]) -> Vec<Complex64> {
    transform(x, true)
}

fn transform(x: &[Complex64], inverse: bool) -> Vec<Complex64> {
    let n = x.len();
    if n <= 1 {
        return x.to_vec();
    }
    let mut out = if n.is_power_of_two() {
        let mut buf = x.to_vec();
        radix2_in_place(&mut buf, inverse);
        buf
    } else {
        bluestein(x, inverse)
    };
    if inverse {
        let scale = 1.0 / n as f64;
        for v in &mut out {
            *v *= scale;
        }
    }
    out
}

fn radix2_in_place(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    // Bit-reversal permutation.
    let shift = n.leading_zeros() + 1;
    for i in 0..n {
        let j = i.reverse_bits() >> shift;
        if j > i {
            buf.swap(i, j);
        }
    }
    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * 2.0 * PI / len as f64;
        let w_len = Complex64::new(ang.cos(), ang.sin());
        for start in (0..n).step_by(len) {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let a = buf[start + k];
                let b = buf[start + k + len / 2] * w;
                buf[start + k] = a + b;
                buf[start + k + len / 2] = a - b;
                w *= w_len;
            }
        }
        len <<= 1;
    }
}

/// Chirp-z: express the length-`n` DFT as a circular convolution of length
/// `m >= 2n - 1`, `m` a power of two.
fn bluestein(x: &[Complex64], inverse: bool) -> Vec<Complex64> {
    let n = x.len();
    let m = (2 * n - 1).next_power_of_two();
    let sign = if inverse { 1.0 } else { -1.0 };

    // chirp[k] = exp(sign * i * pi * k^2 / n); k^2 reduced mod 2n exactly.
    let chirp: Vec<Complex64> = (0..n)
        .map(|k| {
            let q = ((k as u64 * k as u64) % (2 * n as u64)) as f64;
            let ang = sign * PI * q / n as f64;
            Complex64::new(ang.cos(), ang.sin())
        })
        .collect();

    let mut a = vec![Complex64::new(0.0, 0.0); m];
    for k in 0..n {
        a[k] = x[k] * chirp[k];
    }
    let mut b = vec![Complex64::new(0.0, 0.0); m];
    b[0] = chirp[0].conj();
    for k in 1..n {
        let c = chirp[k].conj();
        b[k] = c;
        b[m - k] = c;
    }

    radix2_in_place(&mut a, false);
    radix2_in_place(&mut b, false);
    for k in 0..m {
        a[k] *= b[k];
    }
    radix2_in_place(&mut a, true);
    let scale = 1.0 / m as f64;
    (0..n).map(|k| a[k] * scale * chirp[k]).collect()
}
