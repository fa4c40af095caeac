//! Time-frequency-energy (TFE) distributions of sampled signals, computed two
//! dual ways:
//!
//! - **TFD-IF**: instantaneous frequency of the analytic signal (optionally
//!   decomposed into orthogonal frequency bands), giving points
//!   `(n, ω[n], a²[n])`.
//! - **TFD-FT**: frequentaneous time, the negative frequency derivative of the
//!   phase of the forward DFT, giving points `(τ[k], k, a²[k])`.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! `f64` aliases below are what most callers want.

pub mod analytic;
pub mod error;
pub mod estimators;
pub mod io;
pub mod phase;
pub mod scalar;
pub mod signals;
pub mod spectrum;
pub mod tfe;

pub use analytic::{
    analytic_signal, band_components, dual_analytic_signal, uniform_bands, BandSpec, ComplexSeries,
};
pub use error::{Error, Result};
pub use estimators::{frequentaneous_time, instantaneous_frequency, Branch, FTTrace, IFTrace};
pub use phase::{to_polar, unwrap_phase, Axis, PolarSequence};
pub use scalar::Scalar;
pub use spectrum::{
    forward_dft, inverse_dft, split_time_spectra, split_time_spectra_padded, ComplexSpectrum,
    SampledSignal, TimeSplitSpectra,
};
pub use tfe::{
    bin_grid, marginal_over_frequency, marginal_over_time, tfd_ft, tfd_ft_padded, tfd_if, Method,
    TFEDistribution, TFEGrid, TfePoint,
};

pub use num_complex::Complex;

pub type Signal = SampledSignal<f64>;
pub type Spectrum = ComplexSpectrum<f64>;
pub type SplitSpectra = TimeSplitSpectra<f64>;
pub type Polar = PolarSequence<f64>;
pub type Series = ComplexSeries<f64>;
pub type Bands = BandSpec<f64>;
pub type IfTrace = IFTrace<f64>;
pub type FtTrace = FTTrace<f64>;
pub type Distribution = TFEDistribution<f64>;
pub type Grid = TFEGrid<f64>;
pub type Point = TfePoint<f64>;

pub type Signal32 = SampledSignal<f32>;
pub type Spectrum32 = ComplexSpectrum<f32>;
pub type Distribution32 = TFEDistribution<f32>;
