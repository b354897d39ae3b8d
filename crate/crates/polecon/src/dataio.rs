//! Ingestion, alignment, deflation, and summary statistics for FRED-style
//! time-series data.
//!
//! CSV input is expected to carry a header row with a date column (`DATE` by
//! default) and one or more value columns. Dates are ISO `YYYY-MM-DD`; the
//! FRED missing-value marker `.` causes a row to be skipped.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Observation frequency. Gaps are allowed; points spaced more finely than
/// the declared frequency are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Frequency {
    Annual,
    Quarterly,
    Monthly,
}

impl Frequency {
    /// Minimum admissible spacing between consecutive observations, in days.
    pub fn min_spacing_days(self) -> i64 {
        match self {
            Frequency::Monthly => 28,
            Frequency::Quarterly => 85,
            Frequency::Annual => 360,
        }
    }

    /// Coarsest frequency consistent with the given minimum gap.
    fn infer(min_gap_days: i64) -> Frequency {
        if min_gap_days >= 360 {
            Frequency::Annual
        } else if min_gap_days >= 85 {
            Frequency::Quarterly
        } else {
            Frequency::Monthly
        }
    }
}

/// Dated numeric observations at a declared frequency.
///
/// Invariants (enforced at construction): dates strictly increasing, all
/// values finite, spacing no finer than the declared frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    name: String,
    frequency: Frequency,
    points: Vec<(NaiveDate, f64)>,
}

impl TimeSeries {
    pub fn new(
        name: impl Into<String>,
        frequency: Frequency,
        points: Vec<(NaiveDate, f64)>,
    ) -> Result<Self> {
        let name = name.into();
        for window in points.windows(2) {
            let (d0, _) = window[0];
            let (d1, _) = window[1];
            if d1 <= d0 {
                return Err(Error::InvalidSeries {
                    name,
                    message: format!("dates not strictly increasing at {d1}"),
                });
            }
            let gap = (d1 - d0).num_days();
            if gap < frequency.min_spacing_days() {
                return Err(Error::InvalidSeries {
                    name,
                    message: format!(
                        "points {d0} and {d1} are spaced {gap} days apart, \
                         finer than the declared {frequency:?} frequency"
                    ),
                });
            }
        }
        if let Some((d, v)) = points.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidSeries {
                name,
                message: format!("non-finite value {v} at {d}"),
            });
        }
        Ok(TimeSeries {
            name,
            frequency,
            points,
        })
    }

    /// Build a series, inferring the coarsest frequency consistent with the
    /// observed spacing. Series with fewer than two points default to
    /// monthly.
    pub fn infer(name: impl Into<String>, points: Vec<(NaiveDate, f64)>) -> Result<Self> {
        let min_gap = points
            .windows(2)
            .map(|w| (w[1].0 - w[0].0).num_days())
            .min()
            .unwrap_or(28);
        Self::new(name, Frequency::infer(min_gap), points)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn frequency(&self) -> Frequency {
        self.frequency
    }

    pub fn points(&self) -> &[(NaiveDate, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dates(&self) -> impl Iterator<Item = NaiveDate> + '_ {
        self.points.iter().map(|(d, _)| *d)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|(_, v)| *v)
    }

    pub fn first_date(&self) -> Option<NaiveDate> {
        self.points.first().map(|(d, _)| *d)
    }

    pub fn last_date(&self) -> Option<NaiveDate> {
        self.points.last().map(|(d, _)| *d)
    }

    /// Value at the given date, if observed.
    pub fn value_at(&self, date: NaiveDate) -> Option<f64> {
        self.points
            .binary_search_by_key(&date, |(d, _)| *d)
            .ok()
            .map(|i| self.points[i].1)
    }

    /// Last observed value at or before the given date (stepwise semantics).
    pub fn value_at_or_before(&self, date: NaiveDate) -> Option<f64> {
        match self.points.binary_search_by_key(&date, |(d, _)| *d) {
            Ok(i) => Some(self.points[i].1),
            Err(0) => None,
            Err(i) => Some(self.points[i - 1].1),
        }
    }

    /// Derive a same-shape series by mapping values.
    pub fn map_values(&self, name: impl Into<String>, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        Self::new(
            name,
            self.frequency,
            self.points.iter().map(|&(d, v)| (d, f(v))).collect(),
        )
    }

    /// Emit as `date,value` CSV. Values print in shortest round-trip form,
    /// so parse(emit(s)) reproduces the series exactly.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("date,value\n");
        for (d, v) in &self.points {
            out.push_str(&format!("{d},{v}\n"));
        }
        out
    }
}

/// Parse a CSV stream with a header into a [`TimeSeries`].
///
/// Rows whose value cell equals `.` (the FRED missing marker) are skipped.
/// Row numbers in errors are 1-based and count the header.
pub fn parse_series(input: &str, value_column: &str, date_column: &str) -> Result<TimeSeries> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header row"))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let date_idx = columns
        .iter()
        .position(|c| c.eq_ignore_ascii_case(date_column))
        .ok_or_else(|| Error::parse(1, format!("header has no '{date_column}' column")))?;
    let value_idx = columns
        .iter()
        .position(|c| *c == value_column)
        .ok_or_else(|| Error::parse(1, format!("header has no '{value_column}' column")))?;

    let mut points: Vec<(NaiveDate, f64)> = Vec::new();
    for (i, line) in lines {
        let row = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() <= date_idx.max(value_idx) {
            return Err(Error::parse(row, format!("expected {} cells, got {}", columns.len(), cells.len())));
        }
        let date = cells[date_idx]
            .parse::<NaiveDate>()
            .map_err(|e| Error::parse(row, format!("bad date '{}': {e}", cells[date_idx])))?;
        let cell = cells[value_idx];
        if cell == "." {
            continue;
        }
        let value = cell
            .parse::<f64>()
            .map_err(|_| Error::parse(row, format!("non-numeric value '{cell}'")))?;
        if !value.is_finite() {
            return Err(Error::parse(row, format!("non-finite value '{cell}'")));
        }
        if let Some(&(last, _)) = points.last() {
            if date == last {
                return Err(Error::parse(row, format!("duplicate date {date}")));
            }
            if date < last {
                return Err(Error::parse(row, format!("date {date} out of order (after {last})")));
            }
        }
        points.push((date, value));
    }
    TimeSeries::infer(value_column, points)
}

/// How to put two series on a common date vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlignPolicy {
    /// Keep only dates present in both series.
    IntersectDates,
    /// Carry the last observed value of `a` forward onto each date of `b`
    /// at or after `a`'s first observation. `a` must be stepwise-meaningful.
    StepInterpolateAOntoB,
}

/// Align two series onto an identical date vector.
pub fn align(a: &TimeSeries, b: &TimeSeries, policy: AlignPolicy) -> Result<(TimeSeries, TimeSeries)> {
    if a.is_empty() {
        return Err(Error::EmptySeries(a.name.clone()));
    }
    if b.is_empty() {
        return Err(Error::EmptySeries(b.name.clone()));
    }
    let no_overlap = || Error::NoOverlap {
        a: a.name.clone(),
        b: b.name.clone(),
    };
    match policy {
        AlignPolicy::IntersectDates => {
            let mut pa = Vec::new();
            let mut pb = Vec::new();
            for &(d, va) in &a.points {
                if let Some(vb) = b.value_at(d) {
                    pa.push((d, va));
                    pb.push((d, vb));
                }
            }
            if pa.is_empty() {
                return Err(no_overlap());
            }
            Ok((
                TimeSeries::infer(a.name.clone(), pa)?,
                TimeSeries::infer(b.name.clone(), pb)?,
            ))
        }
        AlignPolicy::StepInterpolateAOntoB => {
            let mut pa = Vec::new();
            let mut pb = Vec::new();
            for &(d, vb) in &b.points {
                if let Some(va) = a.value_at_or_before(d) {
                    pa.push((d, va));
                    pb.push((d, vb));
                }
            }
            if pa.is_empty() {
                return Err(no_overlap());
            }
            Ok((
                TimeSeries::new(a.name.clone(), b.frequency, pa)?,
                TimeSeries::new(b.name.clone(), b.frequency, pb)?,
            ))
        }
    }
}

/// Which base the real (deflated) series is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeflationBase {
    /// `real_t = nominal_t * 100 / cpi_t` (CPI index = 100).
    IndexBase,
    /// `real_t = nominal_t * cpi_d / cpi_t` (constant purchasing power of
    /// the reference date's dollars).
    ReferenceDate(NaiveDate),
}

/// Deflate a nominal series by an aligned CPI series.
///
/// All ratios, argmax/argmin dates, and sign classifications of the result
/// are independent of the base choice: the two modes differ by a single
/// positive scalar factor.
pub fn deflate(nominal: &TimeSeries, cpi: &TimeSeries, base: DeflationBase) -> Result<TimeSeries> {
    if nominal.len() != cpi.len()
        || nominal.dates().zip(cpi.dates()).any(|(a, b)| a != b)
    {
        return Err(Error::NotAligned {
            a: nominal.name.clone(),
            b: cpi.name.clone(),
            message: "deflate requires identical date vectors".into(),
        });
    }
    for &(d, v) in &cpi.points {
        if v <= 0.0 {
            return Err(Error::NonPositiveCpi { date: d, value: v });
        }
    }
    let scale = match base {
        DeflationBase::IndexBase => 100.0,
        DeflationBase::ReferenceDate(d) => cpi.value_at(d).ok_or_else(|| {
            Error::param("reference_date", format!("no CPI observation at {d}"))
        })?,
    };
    let points = nominal
        .points
        .iter()
        .zip(cpi.values())
        .map(|(&(d, n), c)| (d, n * scale / c))
        .collect();
    TimeSeries::new(format!("{}_real", nominal.name), nominal.frequency, points)
}

/// A value paired with the date it was observed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DatedValue {
    pub date: NaiveDate,
    pub value: f64,
}

/// Summary statistics of a stepwise minimum-wage history and its real
/// (deflated) counterpart.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinWageStats {
    pub distinct_count: usize,
    pub change_count: usize,
    pub avg_nominal_by_count: f64,
    pub avg_nominal_duration_weighted: f64,
    pub min_nominal: f64,
    pub max_nominal: f64,
    pub min_real: DatedValue,
    pub max_real: DatedValue,
    pub avg_real: f64,
    pub avg_duration_years: f64,
}

const DAYS_PER_YEAR: f64 = 365.25;

/// Summarize a stepwise nominal series and its real counterpart over the
/// window from the first anchor through `window_end`.
///
/// A plateau's duration runs from its effective date to the next change, or
/// to `window_end` for the last plateau. Real extremes are taken over the
/// `real` series; ties resolve to the earliest date.
pub fn summarize_minwage(
    nominal: &TimeSeries,
    real: &TimeSeries,
    window_end: NaiveDate,
) -> Result<MinWageStats> {
    if nominal.is_empty() {
        return Err(Error::EmptySeries(nominal.name.clone()));
    }
    if real.is_empty() {
        return Err(Error::EmptySeries(real.name.clone()));
    }
    if window_end <= nominal.last_date().unwrap() {
        return Err(Error::param(
            "window_end",
            format!("must fall after the last anchor {}", nominal.last_date().unwrap()),
        ));
    }

    // Collapse consecutive equal values into plateaus.
    let mut plateaus: Vec<(NaiveDate, f64)> = Vec::new();
    for &(d, v) in nominal.points() {
        match plateaus.last() {
            Some(&(_, prev)) if prev == v => {}
            _ => plateaus.push((d, v)),
        }
    }

    let n = plateaus.len();
    let mut weighted = 0.0;
    let mut total_years = 0.0;
    for (i, &(start, value)) in plateaus.iter().enumerate() {
        let end = plateaus.get(i + 1).map(|&(d, _)| d).unwrap_or(window_end);
        let years = (end - start).num_days() as f64 / DAYS_PER_YEAR;
        weighted += years * value;
        total_years += years;
    }

    let values: Vec<f64> = plateaus.iter().map(|&(_, v)| v).collect();
    let (min_real, max_real) = real_extremes(real);
    Ok(MinWageStats {
        distinct_count: n,
        change_count: n - 1,
        avg_nominal_by_count: values.iter().sum::<f64>() / n as f64,
        avg_nominal_duration_weighted: weighted / total_years,
        min_nominal: values.iter().cloned().fold(f64::INFINITY, f64::min),
        max_nominal: values.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        min_real,
        max_real,
        avg_real: real.values().sum::<f64>() / real.len() as f64,
        avg_duration_years: total_years / n as f64,
    })
}

fn real_extremes(real: &TimeSeries) -> (DatedValue, DatedValue) {
    let mut min = DatedValue {
        date: real.points()[0].0,
        value: real.points()[0].1,
    };
    let mut max = min;
    for &(d, v) in real.points() {
        if v < min.value {
            min = DatedValue { date: d, value: v };
        }
        if v > max.value {
            max = DatedValue { date: d, value: v };
        }
    }
    (min, max)
}
