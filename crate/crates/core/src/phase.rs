//! Polar decomposition of complex sequences and 1-D phase unwrapping.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Amplitudes at or below this fraction of the sequence peak are treated as
/// zero and their phase is held.
pub const ZERO_AMPLITUDE_RATIO: f64 = 1e-12;

/// Which axis a [`PolarSequence`] runs along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Sample index; spacing in seconds per step.
    Time,
    /// Frequency bin; spacing in radians per sample per bin.
    Frequency,
}

/// Nonnegative amplitude and unwrapped phase over time or frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarSequence<T> {
    amplitude: Vec<T>,
    phase: Vec<T>,
    axis: Axis,
    axis_spacing: T,
    zero_threshold: T,
}

impl<T: Scalar> PolarSequence<T> {
    pub fn amplitude(&self) -> &[T] {
        &self.amplitude
    }

    pub fn phase(&self) -> &[T] {
        &self.phase
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn axis_spacing(&self) -> T {
        self.axis_spacing
    }

    /// Amplitude at or below which the phase was held.
    pub fn zero_threshold(&self) -> T {
        self.zero_threshold
    }

    pub fn len(&self) -> usize {
        self.amplitude.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitude.is_empty()
    }

    /// `true` where the amplitude carries a defined phase.
    pub fn is_defined(&self, i: usize) -> bool {
        self.amplitude[i] > self.zero_threshold
    }

    /// `a·exp(jφ)` at every index.
    pub fn to_complex(&self) -> Vec<Complex<T>> {
        self.amplitude
            .iter()
            .zip(&self.phase)
            .map(|(&a, &p)| Complex::from_polar(a, p))
            .collect()
    }
}

/// Amplitude and unwrapped phase of `values`.
///
/// Where the amplitude is at or below `1e-12 ×` the peak amplitude the phase
/// is undefined; it is held at the previous defined value (0 for a leading
/// run of such indices).
pub fn to_polar<T: Scalar>(
    values: &[Complex<T>],
    axis: Axis,
    axis_spacing: T,
) -> Result<PolarSequence<T>> {
    if values.is_empty() {
        return Err(Error::invalid(
            "cannot take the polar form of an empty sequence",
        ));
    }
    let amplitude: Vec<T> = values.iter().map(|v| v.norm()).collect();
    let peak = amplitude.iter().copied().fold(T::zero(), T::max);
    let zero_threshold = T::lit(ZERO_AMPLITUDE_RATIO) * peak;

    let mut held = T::zero();
    let wrapped: Vec<T> = values
        .iter()
        .zip(&amplitude)
        .map(|(v, &a)| {
            if a > zero_threshold {
                held = v.im.atan2(v.re);
            }
            held
        })
        .collect();

    Ok(PolarSequence {
        amplitude,
        phase: unwrap_phase(&wrapped),
        axis,
        axis_spacing,
        zero_threshold,
    })
}

/// Adds integer multiples of 2π so consecutive outputs differ by at most π.
///
/// `output[0] = wrapped[0]`. When two multiples both land exactly π away,
/// the one with the smaller `|m|` wins.
pub fn unwrap_phase<T: Scalar>(wrapped: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(wrapped.len());
    let Some(&first) = wrapped.first() else {
        return out;
    };
    out.push(first);
    let tau = T::TAU();
    let pi = T::PI();
    let mut prev = first;
    for &w in &wrapped[1..] {
        let centre = ((prev - w) / tau).round();
        // Candidates ordered by |m| so the first hit honours the tie rule.
        let mut candidates = [centre - T::one(), centre, centre + T::one()];
        candidates.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(b.total_cmp(a)));
        let pick = candidates
            .iter()
            .map(|&m| if m == T::zero() { w } else { w + tau * m })
            .find(|&v| (v - prev).abs() <= pi)
            .unwrap_or_else(|| {
                // Rounding pushed every candidate a hair past π; take the closest.
                candidates
                    .iter()
                    .map(|&m| w + tau * m)
                    .min_by(|a, b| (*a - prev).abs().total_cmp(&(*b - prev).abs()))
                    .expect("three candidates")
            });
        out.push(pick);
        prev = pick;
    }
    out
}
