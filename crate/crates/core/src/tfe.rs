//! Assembly of time-frequency-energy point sets for both methods, their
//! marginals, and binning onto a dense grid.
//!
//! - TFD-IF emits `(n/Fs, ω_i[n]·Fs/2π, a_i²[n])` for every band component
//!   `i` and time index `n`.
//! - TFD-FT emits `(τ[k] in seconds, k·Fs/L, a²[k])` for every one-sided
//!   frequency bin `k` of each time-split part.
//!
//! Reductions run in point order, so results do not depend on scheduling.

use serde::{Deserialize, Serialize};

use crate::analytic::{band_components, uniform_bands, BandSpec};
use crate::error::{Error, Result};
use crate::estimators::{frequentaneous_time, instantaneous_frequency, Branch};
use crate::phase::{to_polar, Axis};
use crate::scalar::Scalar;
use crate::spectrum::{split_time_spectra_padded, ComplexSpectrum, SampledSignal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Instantaneous frequency of the analytic signal.
    TfdIf,
    /// Frequentaneous time of the time-split spectra.
    TfdFt,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::TfdIf => "tfd_if",
            Method::TfdFt => "tfd_ft",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TfePoint<T> {
    pub time_s: T,
    pub freq_hz: T,
    pub energy: T,
}

/// Sparse TFE point set plus what produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct TFEDistribution<T> {
    /// Ordered by (part or band, bin or time index).
    pub points: Vec<TfePoint<T>>,
    pub method: Method,
    pub sample_rate_hz: T,
    /// Samples in the analysed signal.
    pub n_time: usize,
    /// Frequency rows: band count for TFD-IF, one-sided bins for TFD-FT.
    pub n_freq: usize,
    /// Band edges in rad/sample (TFD-IF only).
    pub band_edges: Option<Vec<T>>,
    pub origin_index: usize,
    pub pad_factor: usize,
    /// TFD-FT points whose time falls outside the record.
    pub out_of_record: usize,
}

impl<T: Scalar> TFEDistribution<T> {
    pub fn total_energy(&self) -> T {
        self.points.iter().fold(T::zero(), |acc, p| acc + p.energy)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Dense energy grid; `cells[i][j]` covers time cell `i`, frequency cell `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TFEGrid<T> {
    pub time_edges: Vec<T>,
    pub freq_edges: Vec<T>,
    pub cells: Vec<Vec<T>>,
}

impl<T: Scalar> TFEGrid<T> {
    pub fn total(&self) -> T {
        self.cells
            .iter()
            .flatten()
            .fold(T::zero(), |acc, &c| acc + c)
    }
}

/// TFD-IF. Without `bands` the whole analytic signal is one component.
pub fn tfd_if<T: Scalar>(
    signal: &SampledSignal<T>,
    bands: Option<&BandSpec<T>>,
) -> Result<TFEDistribution<T>> {
    let single;
    let bands = match bands {
        Some(b) => b,
        None => {
            single = uniform_bands(1)?;
            &single
        }
    };
    let fs = signal.sample_rate_hz();
    let n = signal.len();
    let dt = T::one() / fs;

    let mut points = Vec::with_capacity(n * bands.count());
    for component in band_components(signal, bands) {
        let polar = to_polar(component.values(), Axis::Time, dt)?;
        let trace = instantaneous_frequency(&polar, Branch::Positive)?;
        points.extend(
            trace
                .hz(fs)
                .into_iter()
                .zip(polar.amplitude())
                .enumerate()
                .map(|(i, (f, &a))| TfePoint {
                    time_s: T::from_index(i) / fs,
                    freq_hz: f,
                    energy: a * a,
                }),
        );
    }

    Ok(TFEDistribution {
        points,
        method: Method::TfdIf,
        sample_rate_hz: fs,
        n_time: n,
        n_freq: bands.count(),
        band_edges: Some(bands.edges().to_vec()),
        origin_index: signal.origin_index(),
        pad_factor: 1,
        out_of_record: 0,
    })
}

/// TFD-FT on the plain N-point grid.
pub fn tfd_ft<T: Scalar>(signal: &SampledSignal<T>) -> Result<TFEDistribution<T>> {
    tfd_ft_padded(signal, 1)
}

/// TFD-FT on a grid refined by `pad` (a power of two).
pub fn tfd_ft_padded<T: Scalar>(
    signal: &SampledSignal<T>,
    pad: usize,
) -> Result<TFEDistribution<T>> {
    let split = split_time_spectra_padded(signal, pad)?;
    let fs = signal.sample_rate_hz();
    let half = split.positive_part.len() / 2;

    let mut points = ft_points(&split.positive_part, half, Branch::Positive)?;
    if split.negative_len > 0 {
        points.extend(ft_points(&split.negative_part, half, Branch::Negative)?);
    }

    // Record spans samples −origin ..= N−1−origin; allow half a sample.
    let origin = T::from_index(signal.origin_index());
    let half_sample = T::lit(0.5);
    let earliest = -(origin + half_sample) / fs;
    let latest = (T::from_index(signal.len() - 1) - origin + half_sample) / fs;
    let out_of_record = points
        .iter()
        .filter(|p| p.time_s < earliest || p.time_s > latest)
        .count();

    Ok(TFEDistribution {
        points,
        method: Method::TfdFt,
        sample_rate_hz: fs,
        n_time: signal.len(),
        n_freq: half + 1,
        band_edges: None,
        origin_index: signal.origin_index(),
        pad_factor: pad,
        out_of_record,
    })
}

fn ft_points<T: Scalar>(
    spectrum: &ComplexSpectrum<T>,
    half: usize,
    branch: Branch,
) -> Result<Vec<TfePoint<T>>> {
    let fs = spectrum.source_rate_hz();
    let one_sided = &spectrum.bins()[..=half];
    let polar = to_polar(one_sided, Axis::Frequency, spectrum.bin_spacing_rad())?;
    let trace = frequentaneous_time(&polar, branch)?;
    Ok(trace
        .seconds(fs)
        .into_iter()
        .zip(polar.amplitude())
        .enumerate()
        .map(|(k, (t, &a))| TfePoint {
            time_s: t,
            freq_hz: spectrum.bin_hz(k),
            energy: a * a,
        })
        .collect())
}

/// Sums energy over points sharing the same key, ordered by key.
fn marginal_by<T: Scalar>(points: &[TfePoint<T>], key: impl Fn(&TfePoint<T>) -> T) -> Vec<(T, T)> {
    let mut keyed: Vec<(T, T)> = points.iter().map(|p| (key(p), p.energy)).collect();
    // Stable: equal keys keep point order, fixing the summation order.
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<(T, T)> = Vec::new();
    for (k, e) in keyed {
        match out.last_mut() {
            Some((last, acc)) if *last == k => *acc = *acc + e,
            _ => out.push((k, e)),
        }
    }
    out
}

/// Sum over time: `(freq_hz, energy)` per frequency bin, i.e. the power
/// spectrum `a1²[k] (+ ã1²[k])`. TFD-FT only.
pub fn marginal_over_time<T: Scalar>(dist: &TFEDistribution<T>) -> Result<Vec<(T, T)>> {
    if dist.method != Method::TfdFt {
        return Err(Error::invalid(
            "marginal over time needs a tfd_ft distribution (tfd_if frequencies are not bin-aligned)",
        ));
    }
    Ok(marginal_by(&dist.points, |p| p.freq_hz))
}

/// Sum over frequency: `(time_s, energy)` per time index, i.e. the
/// instantaneous energy `Σ_i a_i²[n]`. TFD-IF only.
pub fn marginal_over_frequency<T: Scalar>(dist: &TFEDistribution<T>) -> Result<Vec<(T, T)>> {
    if dist.method != Method::TfdIf {
        return Err(Error::invalid(
            "marginal over frequency needs a tfd_if distribution (tfd_ft times are not sample-aligned)",
        ));
    }
    Ok(marginal_by(&dist.points, |p| p.time_s))
}

fn uniform_edges<T: Scalar>(lo: T, hi: T, cells: usize) -> Vec<T> {
    let mut edges: Vec<T> = (0..cells)
        .map(|i| lo + (hi - lo) * T::from_index(i) / T::from_index(cells))
        .collect();
    edges.push(hi);
    edges
}

fn cell_index<T: Scalar>(v: T, lo: T, hi: T, cells: usize) -> usize {
    let pos = ((v - lo) / (hi - lo) * T::from_index(cells)).floor();
    if pos <= T::zero() {
        0
    } else {
        pos.to_usize().unwrap_or(cells).min(cells - 1)
    }
}

/// Bins every point's full energy into one cell of a uniform grid.
///
/// Time spans `[min(0, earliest point), latest point]`, frequency `[0, Fs/2]`.
/// Cells are half-open except the last on each axis.
pub fn bin_grid<T: Scalar>(
    dist: &TFEDistribution<T>,
    n_time_cells: usize,
    n_freq_cells: usize,
) -> Result<TFEGrid<T>> {
    if n_time_cells == 0 || n_freq_cells == 0 {
        return Err(Error::invalid("grid needs at least one cell on each axis"));
    }
    let fs = dist.sample_rate_hz;
    let t_lo = dist.points.iter().map(|p| p.time_s).fold(T::zero(), T::min);
    let mut t_hi = dist.points.iter().map(|p| p.time_s).fold(t_lo, T::max);
    if t_hi <= t_lo {
        t_hi = t_lo + T::from_index(dist.n_time.max(1)) / fs;
    }
    let f_hi = fs / T::lit(2.0);

    let mut cells = vec![vec![T::zero(); n_freq_cells]; n_time_cells];
    for p in &dist.points {
        let i = cell_index(p.time_s, t_lo, t_hi, n_time_cells);
        let j = cell_index(p.freq_hz, T::zero(), f_hi, n_freq_cells);
        cells[i][j] = cells[i][j] + p.energy;
    }
    Ok(TFEGrid {
        time_edges: uniform_edges(t_lo, t_hi, n_time_cells),
        freq_edges: uniform_edges(T::zero(), f_hi, n_freq_cells),
        cells,
    })
}
