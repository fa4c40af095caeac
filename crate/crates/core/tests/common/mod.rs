//! Test-only oracles: defining sums evaluated term by term, independent of
//! the FFT path used by the library.
#![allow(dead_code)]

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tfe_core::Complex;

pub fn direct_dft(x: &[f64]) -> Vec<Complex<f64>> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(i, &v)| {
                    // Reduce k·i mod N first so the angle stays small and exact.
                    let arg = -2.0 * PI * ((k * i) % n) as f64 / n as f64;
                    Complex::new(v * arg.cos(), v * arg.sin())
                })
                .sum()
        })
        .collect()
}

pub fn direct_idft(bins: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let n = bins.len();
    (0..n)
        .map(|i| {
            bins.iter()
                .enumerate()
                .map(|(k, &b)| {
                    b * Complex::from_polar(1.0, 2.0 * PI * ((k * i) % n) as f64 / n as f64)
                })
                .sum::<Complex<f64>>()
                / n as f64
        })
        .collect()
}

/// One-sided weight: 1 at DC and Nyquist, 2 strictly inside, 0 above.
pub fn one_sided(k: usize, n: usize) -> f64 {
    if k == 0 || 2 * k == n {
        1.0
    } else if 2 * k < n {
        2.0
    } else {
        0.0
    }
}

pub fn direct_analytic(x: &[f64]) -> Vec<Complex<f64>> {
    let n = x.len();
    let spec: Vec<_> = direct_dft(x)
        .into_iter()
        .enumerate()
        .map(|(k, b)| b * one_sided(k, n))
        .collect();
    direct_idft(&spec)
}

pub fn random_samples(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn max_abs_diff(a: &[Complex<f64>], b: &[Complex<f64>]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
