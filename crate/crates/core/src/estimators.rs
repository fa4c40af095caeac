//! Branch-corrected backward phase differences.
//!
//! Instantaneous frequency (IF) differences the unwrapped phase of the
//! analytic signal along time; frequentaneous time (FT) differences the
//! unwrapped phase of the spectrum along frequency and negates it. A
//! difference on the wrong side of zero is shifted by exactly π (not 2π).
//! Values stay in raw units: rad/sample for IF, rad of phase per bin for FT.

use crate::error::{Error, Result};
use crate::phase::{Axis, PolarSequence};
use crate::scalar::Scalar;

/// Sign branch of an estimator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Positive,
    Negative,
}

/// Instantaneous frequency in radians per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct IFTrace<T> {
    pub omega: Vec<T>,
    pub branch: Branch,
}

impl<T: Scalar> IFTrace<T> {
    /// Frequencies in Hz at the given sample rate.
    pub fn hz(&self, sample_rate_hz: T) -> Vec<T> {
        self.omega
            .iter()
            .map(|&w| w * sample_rate_hz / T::TAU())
            .collect()
    }
}

/// Frequentaneous time as phase per frequency bin.
#[derive(Debug, Clone, PartialEq)]
pub struct FTTrace<T> {
    pub tau_phase: Vec<T>,
    pub branch: Branch,
    /// Grid spacing `2π/L` in radians per sample.
    pub bin_spacing_rad: T,
}

impl<T: Scalar> FTTrace<T> {
    /// Time in samples: `tau_phase / bin_spacing_rad`.
    pub fn samples(&self) -> Vec<T> {
        self.tau_phase
            .iter()
            .map(|&p| p / self.bin_spacing_rad)
            .collect()
    }

    pub fn seconds(&self, sample_rate_hz: T) -> Vec<T> {
        self.tau_phase
            .iter()
            .map(|&p| p / self.bin_spacing_rad / sample_rate_hz)
            .collect()
    }
}

/// Snap values that overshoot `[lo, hi]` by floating noise back onto it.
fn clamp_noise<T: Scalar>(v: T, lo: T, hi: T) -> T {
    let slack = T::branch_slack();
    if v < lo && v >= lo - slack {
        lo
    } else if v > hi && v <= hi + slack {
        hi
    } else {
        v
    }
}

/// Applies `step` to each backward difference; index 0 copies index 1.
fn backward<T: Scalar>(phase: &[T], step: impl Fn(T) -> T) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(phase.len());
    out.push(T::zero());
    out.extend(phase.windows(2).map(|w| step(w[1] - w[0])));
    out[0] = out[1];
    out
}

fn check_input<T: Scalar>(polar: &PolarSequence<T>, axis: Axis) -> Result<()> {
    if polar.len() < 2 {
        return Err(Error::invalid(format!(
            "phase-difference estimator needs at least 2 samples, got {}",
            polar.len()
        )));
    }
    if polar.axis() != axis {
        return Err(Error::invalid(format!(
            "expected a {axis:?}-axis polar sequence, got {:?}",
            polar.axis()
        )));
    }
    Ok(())
}

/// IF of a time-axis polar sequence.
///
/// Positive branch: `Δφ` if `Δφ ≥ 0`, else `Δφ + π`, landing in `[0, π]`.
/// Negative branch: `Δφ` if `Δφ ≤ 0`, else `Δφ − π`, landing in `[−π, 0]`.
pub fn instantaneous_frequency<T: Scalar>(
    polar: &PolarSequence<T>,
    branch: Branch,
) -> Result<IFTrace<T>> {
    check_input(polar, Axis::Time)?;
    let pi = T::PI();
    let zero = T::zero();
    let omega = match branch {
        Branch::Positive => backward(polar.phase(), |d| {
            let w = if d >= zero { d } else { d + pi };
            clamp_noise(w, zero, pi)
        }),
        Branch::Negative => backward(polar.phase(), |d| {
            let w = if d <= zero { d } else { d - pi };
            clamp_noise(w, -pi, zero)
        }),
    };
    Ok(IFTrace { omega, branch })
}

/// FT of a frequency-axis polar sequence.
///
/// With `v = −Δφ`: positive branch gives `v` if `v ≥ 0`, else `v + π`;
/// negative branch gives `v` if `v < 0`, else `v − π`.
pub fn frequentaneous_time<T: Scalar>(
    polar: &PolarSequence<T>,
    branch: Branch,
) -> Result<FTTrace<T>> {
    check_input(polar, Axis::Frequency)?;
    let pi = T::PI();
    let zero = T::zero();
    let tau_phase = match branch {
        Branch::Positive => backward(polar.phase(), |d| {
            let v = T::zero() - d;
            let t = if v >= zero { v } else { v + pi };
            clamp_noise(t, zero, pi)
        }),
        Branch::Negative => backward(polar.phase(), |d| {
            let v = T::zero() - d;
            let t = if v < zero { v } else { v - pi };
            clamp_noise(t, -pi, zero)
        }),
    };
    Ok(FTTrace {
        tau_phase,
        branch,
        bin_spacing_rad: polar.axis_spacing(),
    })
}
