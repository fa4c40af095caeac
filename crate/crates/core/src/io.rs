//! CSV ingest of sampled data and CSV/JSON export of distributions,
//! marginals and grids.
//!
//! All writers emit UTF-8 with LF line endings and format numbers to 12
//! significant digits, so identical inputs give byte-identical files.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::SampledSignal;
use crate::tfe::{Method, TFEDistribution, TFEGrid, TfePoint};

pub const DISTRIBUTION_HEADER: &str = "time_s,freq_hz,energy";
pub const GRID_CORNER: &str = "time_s\\freq_hz";

/// Which column of a signal CSV carries the amplitudes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnSelector {
    /// Zero-based index. A non-numeric first row is taken as a header.
    Index(usize),
    /// Header name; the first row must be a header.
    Name(String),
}

impl Default for ColumnSelector {
    fn default() -> Self {
        ColumnSelector::Index(0)
    }
}

impl FromStr for ColumnSelector {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.parse::<usize>() {
            Ok(i) => ColumnSelector::Index(i),
            Err(_) => ColumnSelector::Name(s.to_string()),
        })
    }
}

/// Sidecar describing a distribution CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionMetadata {
    pub method: Method,
    pub sample_rate_hz: f64,
    pub n_time: usize,
    pub n_freq: usize,
    /// Band edges in radians per sample (TFD-IF only).
    pub band_edges: Option<Vec<f64>>,
    pub origin_index: usize,
    pub pad_factor: usize,
    pub out_of_record_points: usize,
    pub points: usize,
}

impl DistributionMetadata {
    pub fn of<T: Scalar>(dist: &TFEDistribution<T>) -> Self {
        Self {
            method: dist.method,
            sample_rate_hz: dist.sample_rate_hz.to_f64_lossy(),
            n_time: dist.n_time,
            n_freq: dist.n_freq,
            band_edges: dist
                .band_edges
                .as_ref()
                .map(|e| e.iter().map(|v| v.to_f64_lossy()).collect()),
            origin_index: dist.origin_index,
            pad_factor: dist.pad_factor,
            out_of_record_points: dist.out_of_record,
            points: dist.points.len(),
        }
    }
}

/// Formats to 12 significant digits, shortest form.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("own formatting parses");
    let mag = rounded.abs();
    if (1e-5..1e16).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> Error + '_ {
    move |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn format_err(path: &Path, message: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

fn open_csv(path: &Path) -> Result<csv::Reader<fs::File>> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    Ok(csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(file))
}

fn line_of(record: &csv::StringRecord, fallback: usize) -> usize {
    record
        .position()
        .map(|p| p.line() as usize)
        .unwrap_or(fallback)
}

fn parse_cell(path: &Path, row: usize, cell: Option<&str>) -> Result<f64> {
    let cell = cell.unwrap_or("");
    cell.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::Parse {
            path: path.to_path_buf(),
            row,
            value: cell.to_string(),
        })
}

/// Reads one column of a CSV file as a signal with origin 0.
///
/// Rows are numbered from 1 in error messages, counting any header.
pub fn read_signal_csv<T: Scalar>(
    path: impl AsRef<Path>,
    sample_rate_hz: T,
    column: &ColumnSelector,
) -> Result<SampledSignal<T>> {
    let path = path.as_ref();
    let mut reader = open_csv(path)?;
    let mut records = reader.records().enumerate();
    let mut values: Vec<T> = Vec::new();

    let index = match column {
        ColumnSelector::Index(i) => *i,
        ColumnSelector::Name(name) => {
            let (_, header) = records
                .next()
                .ok_or_else(|| format_err(path, "file is empty"))?;
            let header = header.map_err(csv_err(path))?;
            header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| format_err(path, format!("no column named {name:?}")))?
        }
    };
    let named = matches!(column, ColumnSelector::Name(_));

    for (i, record) in records {
        let record = record.map_err(csv_err(path))?;
        let row = line_of(&record, i + 1);
        match parse_cell(path, row, record.get(index)) {
            Ok(v) => values.push(T::lit(v)),
            // Unnamed columns may still sit under a header row.
            Err(_) if !named && i == 0 => continue,
            Err(e) => return Err(e),
        }
    }
    if values.is_empty() {
        return Err(format_err(path, "selected column has no values"));
    }
    SampledSignal::new(values, sample_rate_hz)
}

/// Writes samples one per line, no header.
pub fn write_signal_csv<T: Scalar>(
    signal: &SampledSignal<T>,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::with_capacity(signal.len() * 16);
    for &x in signal.samples() {
        out.push_str(&format_value(x.to_f64_lossy()));
        out.push('\n');
    }
    fs::write(path, out).map_err(io_err(path))
}

/// Sidecar path for a distribution CSV: same stem, `.json` extension.
pub fn metadata_path(csv_path: impl AsRef<Path>) -> PathBuf {
    csv_path.as_ref().with_extension("json")
}

/// Writes `time_s,freq_hz,energy` rows in point order.
pub fn write_distribution_csv<T: Scalar>(
    dist: &TFEDistribution<T>,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::with_capacity(32 + dist.points.len() * 48);
    out.push_str(DISTRIBUTION_HEADER);
    out.push('\n');
    for p in &dist.points {
        out.push_str(&format_value(p.time_s.to_f64_lossy()));
        out.push(',');
        out.push_str(&format_value(p.freq_hz.to_f64_lossy()));
        out.push(',');
        out.push_str(&format_value(p.energy.to_f64_lossy()));
        out.push('\n');
    }
    fs::write(path, out).map_err(io_err(path))
}

pub fn write_metadata_json(meta: &DistributionMetadata, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(meta).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    text.push('\n');
    fs::write(path, text).map_err(io_err(path))
}

pub fn read_metadata_json(path: impl AsRef<Path>) -> Result<DistributionMetadata> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes the distribution CSV and its JSON sidecar.
pub fn write_distribution<T: Scalar>(
    dist: &TFEDistribution<T>,
    csv_path: impl AsRef<Path>,
) -> Result<()> {
    let csv_path = csv_path.as_ref();
    write_distribution_csv(dist, csv_path)?;
    write_metadata_json(&DistributionMetadata::of(dist), metadata_path(csv_path))
}

/// Reads the points of a distribution CSV.
pub fn read_distribution_points(path: impl AsRef<Path>) -> Result<Vec<TfePoint<f64>>> {
    let path = path.as_ref();
    let mut reader = open_csv(path)?;
    let mut records = reader.records().enumerate();
    match records.next() {
        Some((_, Ok(h))) if h.iter().collect::<Vec<_>>().join(",") == DISTRIBUTION_HEADER => {}
        Some((_, Err(e))) => return Err(csv_err(path)(e)),
        _ => {
            return Err(format_err(
                path,
                format!("expected header {DISTRIBUTION_HEADER:?}"),
            ))
        }
    }
    let mut points = Vec::new();
    for (i, record) in records {
        let record = record.map_err(csv_err(path))?;
        let row = line_of(&record, i + 1);
        let energy = parse_cell(path, row, record.get(2))?;
        if energy < 0.0 {
            return Err(format_err(path, format!("row {row}: negative energy")));
        }
        points.push(TfePoint {
            time_s: parse_cell(path, row, record.get(0))?,
            freq_hz: parse_cell(path, row, record.get(1))?,
            energy,
        });
    }
    Ok(points)
}

/// Reads a distribution CSV together with its JSON sidecar.
pub fn read_distribution(csv_path: impl AsRef<Path>) -> Result<TFEDistribution<f64>> {
    let csv_path = csv_path.as_ref();
    let meta = read_metadata_json(metadata_path(csv_path))?;
    let points = read_distribution_points(csv_path)?;
    Ok(TFEDistribution {
        points,
        method: meta.method,
        sample_rate_hz: meta.sample_rate_hz,
        n_time: meta.n_time,
        n_freq: meta.n_freq,
        band_edges: meta.band_edges,
        origin_index: meta.origin_index,
        pad_factor: meta.pad_factor,
        out_of_record: meta.out_of_record_points,
    })
}

/// Dense grid CSV.
///
/// The first row is the corner label followed by every frequency edge; each
/// following row starts with a time edge. The cell for
/// `[t_i, t_{i+1}) × [f_j, f_{j+1})` sits at (time edge `i`, frequency edge
/// `j`); the final row and column are zero padding.
pub fn write_grid_csv<T: Scalar>(grid: &TFEGrid<T>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let nf = grid.freq_edges.len();
    let mut out = String::new();
    out.push_str(GRID_CORNER);
    for &f in &grid.freq_edges {
        out.push(',');
        out.push_str(&format_value(f.to_f64_lossy()));
    }
    out.push('\n');
    for (i, &t) in grid.time_edges.iter().enumerate() {
        out.push_str(&format_value(t.to_f64_lossy()));
        let row = grid.cells.get(i);
        for j in 0..nf {
            let v = row.and_then(|r| r.get(j)).copied().unwrap_or(T::zero());
            out.push(',');
            out.push_str(&format_value(v.to_f64_lossy()));
        }
        out.push('\n');
    }
    fs::write(path, out).map_err(io_err(path))
}

/// Two-column marginal CSV with header `<axis_label>,energy`.
pub fn write_marginal_csv<T: Scalar>(
    marginal: &[(T, T)],
    axis_label: &str,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let mut out = format!("{axis_label},energy\n");
    for &(k, e) in marginal {
        out.push_str(&format_value(k.to_f64_lossy()));
        out.push(',');
        out.push_str(&format_value(e.to_f64_lossy()));
        out.push('\n');
    }
    fs::write(path, out).map_err(io_err(path))
}
