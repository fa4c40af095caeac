//! Analytic and dual-analytic signals and the orthogonal band decomposition
//! of the analytic signal.
//!
//! The analytic signal is built by DFT, one-sided weighting and inverse DFT.
//! Weights: bin 0 gets 1, bins `1..⌈N/2⌉` get 2, bin `N/2` (even N) gets 1,
//! the rest 0. With those weights `Re(z1) = x` holds exactly.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::{forward_dft, inverse_dft_bins, SampledSignal};

/// Complex time series at a known sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries<T> {
    values: Vec<Complex<T>>,
    sample_rate_hz: T,
}

impl<T: Scalar> ComplexSeries<T> {
    pub fn new(values: Vec<Complex<T>>, sample_rate_hz: T) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("complex series must be nonempty"));
        }
        if !(sample_rate_hz > T::zero()) {
            return Err(Error::invalid("sample rate must be positive"));
        }
        Ok(Self {
            values,
            sample_rate_hz,
        })
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn sample_rate_hz(&self) -> T {
        self.sample_rate_hz
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn conj(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| v.conj()).collect(),
            sample_rate_hz: self.sample_rate_hz,
        }
    }
}

/// Partition of `[0, π]` (radians per sample) into `M` contiguous bands.
///
/// Band `i` covers `(edges[i-1], edges[i]]`; DC belongs to the first band.
#[derive(Debug, Clone, PartialEq)]
pub struct BandSpec<T> {
    edges: Vec<T>,
}

impl<T: Scalar> BandSpec<T> {
    pub fn new(edges: Vec<T>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::invalid("band spec needs at least two edges"));
        }
        if edges[0] != T::zero() || *edges.last().unwrap() != T::PI() {
            return Err(Error::invalid("band edges must start at 0 and end at π"));
        }
        if edges.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::invalid("band edges must be strictly increasing"));
        }
        Ok(Self { edges })
    }

    /// Builds bands from interior edges given in Hz; `0` and `π` are added.
    pub fn from_interior_hz(interior_hz: &[T], sample_rate_hz: T) -> Result<Self> {
        let mut edges = Vec::with_capacity(interior_hz.len() + 2);
        edges.push(T::zero());
        edges.extend(interior_hz.iter().map(|&f| T::TAU() * f / sample_rate_hz));
        edges.push(T::PI());
        Self::new(edges)
    }

    pub fn edges(&self) -> &[T] {
        &self.edges
    }

    /// Number of bands `M`.
    pub fn count(&self) -> usize {
        self.edges.len() - 1
    }

    /// Band index (0-based) holding angular frequency `omega` in `[0, π]`.
    pub fn band_of(&self, omega: T) -> usize {
        // First edge `>= omega` closes the band; DC falls into band 0.
        let upper = self.edges[1..].partition_point(|&e| e < omega);
        upper.min(self.count() - 1)
    }
}

/// `M` equal-width bands: `ω_i = i·π/M`.
pub fn uniform_bands<T: Scalar>(m: usize) -> Result<BandSpec<T>> {
    if m == 0 {
        return Err(Error::invalid("number of bands must be at least 1"));
    }
    let mut edges: Vec<T> = (0..m)
        .map(|i| T::PI() * T::from_index(i) / T::from_index(m))
        .collect();
    edges.push(T::PI());
    BandSpec::new(edges)
}

/// One-sided spectral weight of bin `k` in an N-point DFT.
fn one_sided_weight<T: Scalar>(k: usize, n: usize) -> T {
    if k == 0 || (n.is_multiple_of(2) && k == n / 2) {
        T::one()
    } else if k < n.div_ceil(2) {
        T::lit(2.0)
    } else {
        T::zero()
    }
}

fn weighted_spectrum<T: Scalar>(signal: &SampledSignal<T>) -> Vec<Complex<T>> {
    let spec = forward_dft(signal);
    let n = spec.len();
    spec.bins()
        .iter()
        .enumerate()
        .map(|(k, b)| b.scale(one_sided_weight(k, n)))
        .collect()
}

/// `z1[n]`, whose spectrum vanishes at negative frequencies.
pub fn analytic_signal<T: Scalar>(signal: &SampledSignal<T>) -> ComplexSeries<T> {
    let values = inverse_dft_bins(&weighted_spectrum(signal)).expect("signal has N >= 2");
    ComplexSeries {
        values,
        sample_rate_hz: signal.sample_rate_hz(),
    }
}

/// `z̃1[n] = z1[n]*`, whose spectrum vanishes at positive frequencies.
pub fn dual_analytic_signal<T: Scalar>(signal: &SampledSignal<T>) -> ComplexSeries<T> {
    analytic_signal(signal).conj()
}

/// Splits the analytic signal into one component per band.
///
/// Component `i` is the inverse DFT of the one-sided spectrum restricted to
/// bins with `2πk/N ∈ (ω_{i−1}, ω_i]`. The components sum to
/// [`analytic_signal`].
pub fn band_components<T: Scalar>(
    signal: &SampledSignal<T>,
    bands: &BandSpec<T>,
) -> Vec<ComplexSeries<T>> {
    let weighted = weighted_spectrum(signal);
    let n = weighted.len();
    let zero = Complex::new(T::zero(), T::zero());

    let mut per_band = vec![vec![zero; n]; bands.count()];
    for (k, &b) in weighted.iter().enumerate().take(n / 2 + 1) {
        let omega = T::TAU() * T::from_index(k) / T::from_index(n);
        per_band[bands.band_of(omega)][k] = b;
    }
    per_band
        .into_iter()
        .map(|bins| ComplexSeries {
            values: inverse_dft_bins(&bins).expect("nonempty"),
            sample_rate_hz: signal.sample_rate_hz(),
        })
        .collect()
}
