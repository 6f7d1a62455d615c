//! Univariate series container, CSV ingestion, train/test splitting,
//! min-max scaling and lag-window construction shared by all experts.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// An ordered univariate series with optional row labels (dates, indices).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    pub name: String,
    pub values: Vec<f64>,
    pub labels: Option<Vec<String>>,
}

impl TimeSeries {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        let name = name.into();
        if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
            return Err(CoreError::InvalidSeries { name });
        }
        Ok(Self {
            name,
            values,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.values.len() {
            return Err(CoreError::DimensionMismatch {
                what: "labels",
                expected: self.values.len(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub train_fraction: f64,
}

impl Default for SplitSpec {
    fn default() -> Self {
        Self {
            train_fraction: 0.9,
        }
    }
}

/// Contiguous prefix/suffix split at `floor(n * train_fraction)`; no shuffling.
pub fn split(ts: &TimeSeries, spec: &SplitSpec) -> Result<(TimeSeries, TimeSeries)> {
    let n = ts.len();
    if !(spec.train_fraction > 0.0 && spec.train_fraction < 1.0) {
        return Err(CoreError::InvalidConfig {
            field: "train_fraction",
            reason: format!("{} is not in (0, 1)", spec.train_fraction),
        });
    }
    let n_train = (n as f64 * spec.train_fraction).floor() as usize;
    if n_train < 2 || n_train >= n {
        return Err(CoreError::DegenerateSplit {
            n,
            fraction: spec.train_fraction,
        });
    }
    let slice_labels = |lo: usize, hi: usize| {
        ts.labels
            .as_ref()
            .map(|l| l[lo..hi].to_vec())
    };
    let mut train = TimeSeries::new(format!("{}_train", ts.name), ts.values[..n_train].to_vec())?;
    train.labels = slice_labels(0, n_train);
    let mut test = TimeSeries::new(format!("{}_test", ts.name), ts.values[n_train..].to_vec())?;
    test.labels = slice_labels(n_train, n);
    Ok((train, test))
}

/// Affine map from the training range `[lo, hi]` onto `[-1, 1]`.
///
/// Test data is transformed with the training parameters and may land
/// outside `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalerParams {
    pub lo: f64,
    pub hi: f64,
}

impl ScalerParams {
    pub fn apply(&self, v: f64) -> f64 {
        2.0 * (v - self.lo) / (self.hi - self.lo) - 1.0
    }

    pub fn invert(&self, u: f64) -> f64 {
        self.lo + (self.hi - self.lo) * (u + 1.0) / 2.0
    }

    pub fn apply_slice(&self, vs: &[f64]) -> Vec<f64> {
        vs.iter().map(|&v| self.apply(v)).collect()
    }

    pub fn invert_slice(&self, us: &[f64]) -> Vec<f64> {
        us.iter().map(|&u| self.invert(u)).collect()
    }
}

pub fn fit_scaler(train: &TimeSeries) -> Result<ScalerParams> {
    let lo = train.values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = train
        .values
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    if !(hi > lo) {
        return Err(CoreError::ConstantSeries);
    }
    Ok(ScalerParams { lo, hi })
}

/// Lagged supervised pairs: sample `i` has inputs `(y_{i+P-1}, ..., y_i)`
/// (most recent lag first) and target `y_{i+P}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupervisedSet {
    pub inputs: Vec<Vec<f64>>,
    pub targets: Vec<f64>,
    pub p_lags: usize,
}

impl SupervisedSet {
    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }
}

pub fn make_supervised(ts: &TimeSeries, p_lags: usize) -> Result<SupervisedSet> {
    make_supervised_from(&ts.values, p_lags)
}

pub fn make_supervised_from(values: &[f64], p_lags: usize) -> Result<SupervisedSet> {
    if p_lags == 0 {
        return Err(CoreError::InvalidConfig {
            field: "p_lags",
            reason: "must be at least 1".into(),
        });
    }
    let n = values.len();
    if n <= p_lags {
        return Err(CoreError::SeriesTooShort {
            needed: p_lags + 1,
            got: n,
            n,
        });
    }
    let mut inputs = Vec::with_capacity(n - p_lags);
    let mut targets = Vec::with_capacity(n - p_lags);
    for t in p_lags..n {
        // lags ordered y_{t-1}, y_{t-2}, ..., y_{t-P}
        let row: Vec<f64> = (1..=p_lags).map(|i| values[t - i]).collect();
        inputs.push(row);
        targets.push(values[t]);
    }
    Ok(SupervisedSet {
        inputs,
        targets,
        p_lags,
    })
}

/// Loads a univariate series from a CSV file with a header row.
///
/// Every row must have a finite numeric entry in `value_column`; the error
/// for a bad cell reports the 1-based data row index.
pub fn load_csv(
    path: impl AsRef<Path>,
    value_column: &str,
    label_column: Option<&str>,
) -> Result<TimeSeries> {
    let path = path.as_ref();
    let path_str = path.display().to_string();
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    let value_idx = headers
        .iter()
        .position(|h| h == value_column)
        .ok_or_else(|| CoreError::MissingColumn {
            path: path_str.clone(),
            column: value_column.to_string(),
        })?;
    let label_idx = match label_column {
        Some(col) => Some(headers.iter().position(|h| h == col).ok_or_else(|| {
            CoreError::MissingColumn {
                path: path_str.clone(),
                column: col.to_string(),
            }
        })?),
        None => None,
    };

    let mut values = Vec::new();
    let mut labels = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let cell = record.get(value_idx).unwrap_or("");
        let parsed: f64 = cell.trim().parse().map_err(|_| CoreError::BadCell {
            path: path_str.clone(),
            row: i + 1,
            column: value_column.to_string(),
            value: cell.to_string(),
        })?;
        if !parsed.is_finite() {
            return Err(CoreError::BadCell {
                path: path_str.clone(),
                row: i + 1,
                column: value_column.to_string(),
                value: cell.to_string(),
            });
        }
        values.push(parsed);
        if let Some(idx) = label_idx {
            labels.push(record.get(idx).unwrap_or("").to_string());
        }
    }

    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "series".to_string());
    let ts = TimeSeries::new(name, values)?;
    if label_idx.is_some() {
        ts.with_labels(labels)
    } else {
        Ok(ts)
    }
}

/// Writes a series as `label,value` (or `index,value`) CSV for audit.
pub fn write_series_csv(path: impl AsRef<Path>, ts: &TimeSeries) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["label", "value"])?;
    for (i, v) in ts.values.iter().enumerate() {
        let label = ts
            .labels
            .as_ref()
            .map(|l| l[i].clone())
            .unwrap_or_else(|| i.to_string());
        w.write_record([label, crate::fmt17(*v)])?;
    }
    w.flush()?;
    Ok(())
}
