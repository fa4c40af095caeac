//! Forward/inverse DFT on the N-point grid and the positive/negative-time
//! spectral split.
//!
//! Bin `k` of an N-point spectrum represents angular frequency `2πk/N`
//! radians per sample. Transforms are backed by `rustfft`, which gives
//! bit-stable results for identical inputs.

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Real-valued, uniformly sampled time series.
///
/// `origin_index` marks the sample treated as time `n = 0`; samples before it
/// are negative time.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal<T> {
    samples: Vec<T>,
    sample_rate_hz: T,
    origin_index: usize,
}

impl<T: Scalar> SampledSignal<T> {
    /// Signal with its origin at the first sample.
    pub fn new(samples: Vec<T>, sample_rate_hz: T) -> Result<Self> {
        Self::with_origin(samples, sample_rate_hz, 0)
    }

    pub fn with_origin(samples: Vec<T>, sample_rate_hz: T, origin_index: usize) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::invalid(format!(
                "signal needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        if !(sample_rate_hz > T::zero()) || !sample_rate_hz.is_finite() {
            return Err(Error::invalid(format!(
                "sample rate must be positive and finite, got {sample_rate_hz}"
            )));
        }
        if origin_index > samples.len() {
            return Err(Error::invalid(format!(
                "origin index {origin_index} outside [0, {}]",
                samples.len()
            )));
        }
        Ok(Self {
            samples,
            sample_rate_hz,
            origin_index,
        })
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn sample_rate_hz(&self) -> T {
        self.sample_rate_hz
    }

    pub fn origin_index(&self) -> usize {
        self.origin_index
    }

    pub fn into_samples(self) -> Vec<T> {
        self.samples
    }
}

/// Full-length complex DFT bins plus grid metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum<T> {
    bins: Vec<Complex<T>>,
    bin_spacing_rad: T,
    source_rate_hz: T,
}

impl<T: Scalar> ComplexSpectrum<T> {
    /// Wraps raw bins; the spacing is derived from the length.
    pub fn new(bins: Vec<Complex<T>>, source_rate_hz: T) -> Result<Self> {
        if bins.len() < 2 {
            return Err(Error::invalid(format!(
                "spectrum needs at least 2 bins, got {}",
                bins.len()
            )));
        }
        if !(source_rate_hz > T::zero()) {
            return Err(Error::invalid("source sample rate must be positive"));
        }
        let bin_spacing_rad = T::TAU() / T::from_index(bins.len());
        Ok(Self {
            bins,
            bin_spacing_rad,
            source_rate_hz,
        })
    }

    pub fn bins(&self) -> &[Complex<T>] {
        &self.bins
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// `2π/N` radians per sample per bin.
    pub fn bin_spacing_rad(&self) -> T {
        self.bin_spacing_rad
    }

    pub fn source_rate_hz(&self) -> T {
        self.source_rate_hz
    }

    /// Angular frequency of bin `k` in radians per sample.
    pub fn bin_omega(&self, k: usize) -> T {
        T::TAU() * T::from_index(k) / T::from_index(self.bins.len())
    }

    /// Frequency of bin `k` in Hz.
    pub fn bin_hz(&self, k: usize) -> T {
        T::from_index(k) * self.source_rate_hz / T::from_index(self.bins.len())
    }
}

/// Spectra of the samples at `n >= 0` and at `n < 0`, on a common grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSplitSpectra<T> {
    pub positive_part: ComplexSpectrum<T>,
    pub negative_part: ComplexSpectrum<T>,
    /// Number of samples at negative time.
    pub negative_len: usize,
}

fn fft_in_place<T: Scalar>(buf: &mut [Complex<T>], inverse: bool) {
    let mut planner = FftPlanner::<T>::new();
    let fft = if inverse {
        planner.plan_fft_inverse(buf.len())
    } else {
        planner.plan_fft_forward(buf.len())
    };
    fft.process(buf);
}

/// `bins[k] = Σ_n x[n]·exp(−j·2πkn/N)` with `n` the array index.
pub fn forward_dft<T: Scalar>(signal: &SampledSignal<T>) -> ComplexSpectrum<T> {
    let mut buf: Vec<Complex<T>> = signal
        .samples
        .iter()
        .map(|&x| Complex::new(x, T::zero()))
        .collect();
    fft_in_place(&mut buf, false);
    ComplexSpectrum::new(buf, signal.sample_rate_hz).expect("signal invariants hold")
}

/// Forward DFT of an arbitrary complex buffer, same sign convention as
/// [`forward_dft`].
pub fn forward_dft_complex<T: Scalar>(values: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut buf = values.to_vec();
    fft_in_place(&mut buf, false);
    buf
}

/// Normalized inverse DFT: `x[n] = (1/N)·Σ_k X[k]·exp(j·2πkn/N)`.
pub fn inverse_dft<T: Scalar>(spectrum: &ComplexSpectrum<T>) -> Result<Vec<Complex<T>>> {
    inverse_dft_bins(&spectrum.bins)
}

pub(crate) fn inverse_dft_bins<T: Scalar>(bins: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    if bins.is_empty() {
        return Err(Error::invalid("cannot invert an empty spectrum"));
    }
    let mut buf = bins.to_vec();
    fft_in_place(&mut buf, true);
    let scale = T::one() / T::from_index(buf.len());
    for v in &mut buf {
        *v = v.scale(scale);
    }
    Ok(buf)
}

/// Splits the signal at its origin into `X1` (samples at `n >= 0`) and `X̃1`
/// (samples at `n < 0`), both evaluated on the N-point grid.
///
/// The finite record is the whole signal; nothing is extended.
pub fn split_time_spectra<T: Scalar>(signal: &SampledSignal<T>) -> TimeSplitSpectra<T> {
    split_time_spectra_padded(signal, 1).expect("pad factor 1 is always valid")
}

/// Like [`split_time_spectra`] on a grid refined by `pad` (a power of two):
/// `L = pad·N` bins of spacing `2π/L`.
pub fn split_time_spectra_padded<T: Scalar>(
    signal: &SampledSignal<T>,
    pad: usize,
) -> Result<TimeSplitSpectra<T>> {
    if pad == 0 || !pad.is_power_of_two() {
        return Err(Error::invalid(format!(
            "pad factor must be a power of two, got {pad}"
        )));
    }
    let n = signal.len();
    let len = n
        .checked_mul(pad)
        .ok_or_else(|| Error::invalid("padded length overflows"))?;
    let origin = signal.origin_index;
    let zero = Complex::new(T::zero(), T::zero());

    let mut pos = vec![zero; len];
    for (slot, &x) in pos.iter_mut().zip(&signal.samples[origin..]) {
        *slot = Complex::new(x, T::zero());
    }
    // Time −p lands on bin-grid index L − p.
    let mut neg = vec![zero; len];
    for (i, &x) in signal.samples[..origin].iter().enumerate() {
        neg[len - origin + i] = Complex::new(x, T::zero());
    }
    fft_in_place(&mut pos, false);
    fft_in_place(&mut neg, false);

    let fs = signal.sample_rate_hz;
    Ok(TimeSplitSpectra {
        positive_part: ComplexSpectrum::new(pos, fs)?,
        negative_part: ComplexSpectrum::new(neg, fs)?,
        negative_len: origin,
    })
}
