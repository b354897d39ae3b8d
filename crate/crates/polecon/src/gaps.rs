//! Output gaps, cyclical unemployment, and detection of sustained
//! negative-cyclical-unemployment episodes.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::dataio::TimeSeries;
use crate::{Error, Result};

/// What a gap series measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapKind {
    /// Actual GDP minus potential GDP. Negative => recessionary.
    OutputGap,
    /// Actual minus natural unemployment. Negative => overheating.
    UnemploymentGap,
}

/// Sign classification of one gap observation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapState {
    /// Output below potential / unemployment above natural.
    Recessionary,
    /// Output above potential / unemployment below natural (overheating).
    Inflationary,
    /// |gap| within the tolerance band.
    Balanced,
}

/// A difference series (actual minus reference) with its classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapSeries {
    base: TimeSeries,
    kind: GapKind,
}

impl GapSeries {
    pub fn base(&self) -> &TimeSeries {
        &self.base
    }

    pub fn kind(&self) -> GapKind {
        self.kind
    }

    /// Classify one gap value. Total: every value is exactly one state.
    pub fn classify(&self, value: f64, tolerance: f64) -> GapState {
        if value.abs() <= tolerance {
            GapState::Balanced
        } else {
            // For an output gap, a negative value means output below
            // potential; for an unemployment gap the recessionary sign is
            // positive (actual unemployment above natural).
            let recessionary = match self.kind {
                GapKind::OutputGap => value < 0.0,
                GapKind::UnemploymentGap => value > 0.0,
            };
            if recessionary {
                GapState::Recessionary
            } else {
                GapState::Inflationary
            }
        }
    }

    /// Per-point classification at the given balanced-band tolerance.
    pub fn classified(&self, tolerance: f64) -> Vec<(NaiveDate, f64, GapState)> {
        self.base
            .points()
            .iter()
            .map(|&(d, v)| (d, v, self.classify(v, tolerance)))
            .collect()
    }
}

fn difference(
    actual: &TimeSeries,
    reference: &TimeSeries,
    kind: GapKind,
    name: &str,
) -> Result<GapSeries> {
    if actual.frequency() != reference.frequency() {
        return Err(Error::NotAligned {
            a: actual.name().to_string(),
            b: reference.name().to_string(),
            message: format!(
                "frequency mismatch: {:?} vs {:?}",
                actual.frequency(),
                reference.frequency()
            ),
        });
    }
    if actual.len() != reference.len()
        || actual.dates().zip(reference.dates()).any(|(a, b)| a != b)
    {
        return Err(Error::NotAligned {
            a: actual.name().to_string(),
            b: reference.name().to_string(),
            message: "gap computation requires identical date vectors".into(),
        });
    }
    let points = actual
        .points()
        .iter()
        .zip(reference.values())
        .map(|(&(d, a), r)| (d, a - r))
        .collect();
    Ok(GapSeries {
        base: TimeSeries::new(name, actual.frequency(), points)?,
        kind,
    })
}

/// `gap_t = actual_t - potential_t`, in the source units.
pub fn output_gap(actual_gdp: &TimeSeries, potential_gdp: &TimeSeries) -> Result<GapSeries> {
    difference(actual_gdp, potential_gdp, GapKind::OutputGap, "output_gap")
}

/// `cyc_t = actual_t - natural_t`, in percentage points. Negative values
/// signal an overheating economy.
pub fn cyclical_unemployment(actual_u: &TimeSeries, natural_u: &TimeSeries) -> Result<GapSeries> {
    difference(
        actual_u,
        natural_u,
        GapKind::UnemploymentGap,
        "cyclical_unemployment",
    )
}

/// A maximal contiguous run of negative gap values, with its extremum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Episode {
    pub start: NaiveDate,
    pub end: NaiveDate,
    pub extremum_date: NaiveDate,
    pub extremum_value: f64,
    /// Number of observations in `[start, end]`.
    pub duration: usize,
}

/// Detect maximal contiguous runs with `gap < -entry_tol` lasting at least
/// `min_duration` observations.
///
/// Runs interrupted by even a single non-negative point are not merged.
/// The extremum date is the earliest date attaining the minimum.
pub fn detect_negative_episodes(
    cyc: &GapSeries,
    min_duration: usize,
    entry_tol: f64,
) -> Result<Vec<Episode>> {
    if min_duration == 0 {
        return Err(Error::param("min_duration", "must be at least 1"));
    }
    if entry_tol < 0.0 {
        return Err(Error::param("entry_tol", "must be non-negative"));
    }
    let mut episodes = Vec::new();
    let mut run: Vec<(NaiveDate, f64)> = Vec::new();
    let mut flush = |run: &mut Vec<(NaiveDate, f64)>| {
        if run.len() >= min_duration {
            let &(start, _) = run.first().unwrap();
            let &(end, _) = run.last().unwrap();
            let &(ex_date, ex_value) = run
                .iter()
                .reduce(|best, p| if p.1 < best.1 { p } else { best })
                .unwrap();
            episodes.push(Episode {
                start,
                end,
                extremum_date: ex_date,
                extremum_value: ex_value,
                duration: run.len(),
            });
        }
        run.clear();
    };
    for &(d, v) in cyc.base().points() {
        if v < -entry_tol {
            run.push((d, v));
        } else {
            flush(&mut run);
        }
    }
    flush(&mut run);
    Ok(episodes)
}
