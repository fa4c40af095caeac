//! Deterministic test-signal generators (cosine phase convention).

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::SampledSignal;

/// Default sample rate for the five-chirp example (Hz).
pub const CHIRP_DEFAULT_FS: f64 = 8000.0;
/// Default length for the five-chirp example (1 s at 8 kHz).
pub const CHIRP_DEFAULT_LEN: usize = 8000;

fn check_band<T: Scalar>(f: T, fs: T, what: &str) -> Result<()> {
    let nyquist = fs / T::lit(2.0);
    if !(f >= T::zero()) || !(f < nyquist) {
        return Err(Error::invalid(format!(
            "{what} = {f} Hz must lie in [0, {nyquist}) for fs = {fs} Hz"
        )));
    }
    Ok(())
}

fn check_rate<T: Scalar>(fs: T) -> Result<()> {
    if !(fs > T::zero()) || !fs.is_finite() {
        return Err(Error::invalid(format!(
            "sample rate must be positive, got {fs}"
        )));
    }
    Ok(())
}

/// Linear chirp `A·cos(2π(f0·t + (f1−f0)·t²/(2T)))`, `t = m/fs`, `T = n/fs`.
pub fn gen_chirp<T: Scalar>(
    f0_hz: T,
    f1_hz: T,
    fs_hz: T,
    n: usize,
    amplitude: T,
) -> Result<SampledSignal<T>> {
    check_rate(fs_hz)?;
    check_band(f0_hz, fs_hz, "f0")?;
    check_band(f1_hz, fs_hz, "f1")?;
    let duration = T::from_index(n) / fs_hz;
    let sweep = (f1_hz - f0_hz) / (T::lit(2.0) * duration);
    let samples = (0..n)
        .map(|m| {
            let t = T::from_index(m) / fs_hz;
            amplitude * (T::TAU() * (f0_hz * t + sweep * t * t)).cos()
        })
        .collect();
    SampledSignal::new(samples, fs_hz)
}

/// Sum of cosines `Σ_i amps[i]·cos(2π·freqs[i]·m/fs)`.
pub fn gen_tones<T: Scalar>(
    freqs_hz: &[T],
    amps: &[T],
    fs_hz: T,
    n: usize,
) -> Result<SampledSignal<T>> {
    check_rate(fs_hz)?;
    if freqs_hz.len() != amps.len() {
        return Err(Error::invalid(format!(
            "{} frequencies but {} amplitudes",
            freqs_hz.len(),
            amps.len()
        )));
    }
    for &f in freqs_hz {
        check_band(f, fs_hz, "tone frequency")?;
    }
    let samples = (0..n)
        .map(|m| {
            let m = T::from_index(m);
            freqs_hz.iter().zip(amps).fold(T::zero(), |acc, (&f, &a)| {
                acc + a * (T::TAU() * f * m / fs_hz).cos()
            })
        })
        .collect();
    SampledSignal::new(samples, fs_hz)
}

/// Unit samples at the listed positions, zero elsewhere.
pub fn gen_impulses<T: Scalar>(
    positions: &[usize],
    fs_hz: T,
    n: usize,
) -> Result<SampledSignal<T>> {
    check_rate(fs_hz)?;
    let mut samples = vec![T::zero(); n];
    for &p in positions {
        let slot = samples
            .get_mut(p)
            .ok_or_else(|| Error::invalid(format!("impulse position {p} outside [0, {n})")))?;
        *slot = T::one();
    }
    SampledSignal::new(samples, fs_hz)
}

/// The five overlapping linear chirps 500–1500, 1000–2000, …, 2500–3500 Hz.
pub fn five_chirps<T: Scalar>(fs_hz: T, n: usize) -> Result<SampledSignal<T>> {
    let mut acc = vec![T::zero(); n];
    for i in 0..5 {
        let f0 = T::lit(500.0 * (i + 1) as f64);
        let chirp = gen_chirp(f0, f0 + T::lit(1000.0), fs_hz, n, T::one())?;
        for (a, &x) in acc.iter_mut().zip(chirp.samples()) {
            *a = *a + x;
        }
    }
    SampledSignal::new(acc, fs_hz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn degenerate_chirp_is_a_tone() {
        let c = gen_chirp::<f64>(100.0, 100.0, 1000.0, 1000, 1.0).unwrap();
        let t = gen_tones(&[100.0], &[1.0], 1000.0, 1000).unwrap();
        for (a, b) in c.samples().iter().zip(t.samples()) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn chirp_phase_derivative_ramps() {
        let fs = 8000.0;
        let n = 8000;
        let c = gen_chirp(500.0, 1500.0, fs, n, 1.0).unwrap();
        assert_eq!(c.len(), n);
        assert_eq!(c.samples()[0], 1.0);
        // d/dt of the phase argument divided by 2π: f0 + (f1 − f0)·t/T.
        let phase = |t: f64| 2.0 * PI * (500.0 * t + 1000.0 * t * t / 2.0);
        let h = 1e-6;
        for &t in &[0.0, 0.25, 0.5, 0.999] {
            let f = (phase(t + h) - phase(t)) / h / (2.0 * PI);
            assert!((f - (500.0 + 1000.0 * t)).abs() < 1e-2);
        }
    }

    #[test]
    fn zero_amplitude_chirp_is_silent() {
        let c = gen_chirp(10.0, 20.0, 100.0, 50, 0.0).unwrap();
        assert!(c.samples().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn chirp_rejects_nyquist_violations() {
        assert!(gen_chirp(600.0, 600.0, 1000.0, 100, 1.0).is_err());
        assert!(gen_chirp(100.0, 500.0, 1000.0, 100, 1.0).is_err());
        assert!(gen_chirp(-1.0, 100.0, 1000.0, 100, 1.0).is_err());
    }

    #[test]
    fn tones() {
        let s = gen_tones(&[100.0, 200.0], &[1.0, 1.0], 1000.0, 1000).unwrap();
        assert_eq!(s.samples()[0], 2.0);
        assert!((s.samples()[5] - ((PI).cos() + (2.0 * PI).cos())).abs() < 1e-12);
        let z = gen_tones::<f64>(&[], &[], 1000.0, 10).unwrap();
        assert!(z.samples().iter().all(|&x| x == 0.0));
        assert!(gen_tones(&[100.0], &[], 1000.0, 10).is_err());
        assert!(gen_tones(&[500.0], &[1.0], 1000.0, 10).is_err());
    }

    #[test]
    fn impulses() {
        let s = gen_impulses::<f64>(&[1000, 3000], 100.0, 4000).unwrap();
        assert_eq!(s.samples().iter().filter(|&&x| x == 1.0).count(), 2);
        assert_eq!(s.samples()[1000], 1.0);
        assert_eq!(s.samples()[3000], 1.0);
        let d = gen_impulses::<f64>(&[0], 1.0, 4).unwrap();
        assert_eq!(d.samples(), &[1.0, 0.0, 0.0, 0.0]);
        let z = gen_impulses::<f64>(&[], 1.0, 4).unwrap();
        assert!(z.samples().iter().all(|&x| x == 0.0));
        assert!(gen_impulses::<f64>(&[4], 1.0, 4).is_err());
    }

    #[test]
    fn generators_are_bit_identical_across_calls() {
        let a = five_chirps::<f64>(CHIRP_DEFAULT_FS, 1024).unwrap();
        let b = five_chirps::<f64>(CHIRP_DEFAULT_FS, 1024).unwrap();
        assert_eq!(a, b);
    }
}
