//! Counterfactual minimum-wage trajectories whose increase dates coincide
//! with negative-cyclical-unemployment episodes.
//!
//! The level question (how much to raise) is deliberately out of scope:
//! `w_start` and `w_end` are inputs, and timing and level are orthogonal —
//! switching the timing method never changes the wage values.

use chrono::{Datelike, NaiveDate};
use serde::{Deserialize, Serialize};

use crate::dataio::{Frequency, TimeSeries};
use crate::gaps::{Episode, GapSeries};
use crate::{Error, Result};

/// A stepwise (date, wage) path: each wage holds until the next effective
/// date.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WageSchedule {
    anchors: Vec<(NaiveDate, f64)>,
}

impl WageSchedule {
    pub fn new(anchors: Vec<(NaiveDate, f64)>) -> Result<Self> {
        if anchors.is_empty() {
            return Err(Error::param("anchors", "schedule must have at least one anchor"));
        }
        for w in anchors.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::param(
                    "anchors",
                    format!("effective dates not strictly increasing at {}", w[1].0),
                ));
            }
        }
        if let Some(&(d, w)) = anchors.iter().find(|(_, w)| *w <= 0.0) {
            return Err(Error::param("anchors", format!("wage {w} at {d} not positive")));
        }
        Ok(WageSchedule { anchors })
    }

    /// Interpret a stepwise time series (e.g. the parsed minimum-wage
    /// history) as a schedule.
    pub fn from_series(series: &TimeSeries) -> Result<Self> {
        Self::new(series.points().to_vec())
    }

    pub fn anchors(&self) -> &[(NaiveDate, f64)] {
        &self.anchors
    }

    /// The increases: every anchor after the initial plateau.
    pub fn increases(&self) -> &[(NaiveDate, f64)] {
        &self.anchors[1..]
    }

    pub fn start_wage(&self) -> f64 {
        self.anchors[0].1
    }

    pub fn end_wage(&self) -> f64 {
        self.anchors[self.anchors.len() - 1].1
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.anchors.windows(2).all(|w| w[1].1 >= w[0].1)
    }

    /// Wage in force on the given date, if the schedule has started.
    pub fn wage_at(&self, date: NaiveDate) -> Option<f64> {
        self.anchors
            .iter()
            .take_while(|(d, _)| *d <= date)
            .last()
            .map(|(_, w)| *w)
    }

    /// Emit as stepwise `effective_date,wage` CSV.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("effective_date,wage\n");
        for (d, w) in &self.anchors {
            out.push_str(&format!("{d},{w}\n"));
        }
        out
    }

    /// Sample onto the date grid of another series (for dense plotting).
    pub fn sample_onto(&self, grid: &TimeSeries) -> Result<TimeSeries> {
        let points = grid
            .dates()
            .filter_map(|d| self.wage_at(d).map(|w| (d, w)))
            .collect();
        TimeSeries::new("wage", grid.frequency(), points)
    }
}

/// Where inside each episode the increase lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimingMethod {
    /// Calendar midpoint of the episode, rounded down to the series
    /// frequency grid (never earlier than the episode start).
    Midpoint,
    /// The episode's extremum date.
    LocalMin,
}

/// How wage levels grow from `w_start` to `w_end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthScheme {
    /// Equal increments.
    Arithmetic,
    /// Equal ratios; the natural choice for a purchasing-power variable.
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RetimeConfig {
    pub timing_method: TimingMethod,
    pub growth_scheme: GrowthScheme,
    pub w_start: f64,
    pub w_end: f64,
}

impl RetimeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.w_start > 0.0 && self.w_end > self.w_start) {
            return Err(Error::param(
                "retime_config",
                "requires w_end > w_start > 0",
            ));
        }
        Ok(())
    }
}

fn round_down_to_grid(date: NaiveDate, frequency: Frequency) -> NaiveDate {
    let month = match frequency {
        Frequency::Monthly => date.month(),
        Frequency::Quarterly => (date.month() - 1) / 3 * 3 + 1,
        Frequency::Annual => 1,
    };
    NaiveDate::from_ymd_opt(date.year(), month, 1).unwrap()
}

/// One increase date per episode, strictly increasing.
pub fn timing_points(
    episodes: &[Episode],
    method: TimingMethod,
    frequency: Frequency,
) -> Vec<NaiveDate> {
    episodes
        .iter()
        .map(|e| match method {
            TimingMethod::LocalMin => e.extremum_date,
            TimingMethod::Midpoint => {
                let half = (e.end - e.start).num_days() / 2;
                let mid = e.start + chrono::Duration::days(half);
                round_down_to_grid(mid, frequency).max(e.start)
            }
        })
        .collect()
}

/// Wage levels for `n_steps` increases from `w_start` to `w_end`. The final
/// value is pinned to `w_end` exactly rather than accumulated.
pub fn step_values(w_start: f64, w_end: f64, n_steps: usize, scheme: GrowthScheme) -> Result<Vec<f64>> {
    if n_steps == 0 {
        return Err(Error::param("n_steps", "must be at least 1"));
    }
    if !(w_start > 0.0 && w_end > w_start) {
        return Err(Error::param("step_values", "requires w_end > w_start > 0"));
    }
    let n = n_steps as f64;
    let mut values: Vec<f64> = (1..=n_steps)
        .map(|k| match scheme {
            GrowthScheme::Arithmetic => w_start + k as f64 * (w_end - w_start) / n,
            GrowthScheme::Geometric => w_start * (w_end / w_start).powf(k as f64 / n),
        })
        .collect();
    *values.last_mut().unwrap() = w_end;
    Ok(values)
}

/// Build the counterfactual schedule: one increase per episode at its
/// timing point, wage levels from [`step_values`], starting plateau
/// `w_start` at `window_start`.
pub fn retime(
    episodes: &[Episode],
    config: &RetimeConfig,
    window_start: NaiveDate,
    frequency: Frequency,
) -> Result<WageSchedule> {
    config.validate()?;
    if episodes.is_empty() {
        return Err(Error::NoEpisodes);
    }
    let dates = timing_points(episodes, config.timing_method, frequency);
    if dates[0] <= window_start {
        return Err(Error::param(
            "window_start",
            format!("must precede the first timing point {}", dates[0]),
        ));
    }
    let values = step_values(config.w_start, config.w_end, episodes.len(), config.growth_scheme)?;
    let mut anchors = vec![(window_start, config.w_start)];
    anchors.extend(dates.into_iter().zip(values));
    let schedule = WageSchedule::new(anchors)?;
    debug_assert!(schedule.is_non_decreasing());
    Ok(schedule)
}

/// One schedule increase checked against the cyclical-unemployment series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncreaseCheck {
    pub date: NaiveDate,
    pub wage: f64,
    /// Cyclical unemployment in force at the increase date, if covered.
    pub cyclical_value: Option<f64>,
    /// True when the increase lands while cyclical unemployment is
    /// negative.
    pub aligned: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct AlignmentSummary {
    pub aligned: usize,
    pub misaligned: usize,
    pub uncovered: usize,
}

/// Side-by-side alignment report for the historical and proposed paths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub actual: Vec<IncreaseCheck>,
    pub proposed: Vec<IncreaseCheck>,
    pub actual_summary: AlignmentSummary,
    pub proposed_summary: AlignmentSummary,
}

fn check_increases(schedule: &WageSchedule, cyc: &GapSeries) -> (Vec<IncreaseCheck>, AlignmentSummary) {
    let mut checks = Vec::new();
    let mut summary = AlignmentSummary::default();
    for &(date, wage) in schedule.increases() {
        let value = cyc.base().value_at_or_before(date).filter(|_| {
            // Dates past the series end are uncovered, not carried forward.
            Some(date) <= cyc.base().last_date()
        });
        let aligned = matches!(value, Some(v) if v < 0.0);
        match value {
            None => summary.uncovered += 1,
            Some(v) if v < 0.0 => summary.aligned += 1,
            Some(_) => summary.misaligned += 1,
        }
        checks.push(IncreaseCheck {
            date,
            wage,
            cyclical_value: value,
            aligned,
        });
    }
    (checks, summary)
}

/// Check each increase of both schedules against the sign of cyclical
/// unemployment in force at that date.
pub fn compare_schedules(
    actual: &WageSchedule,
    proposed: &WageSchedule,
    cyc: &GapSeries,
) -> ComparisonReport {
    let (actual_checks, actual_summary) = check_increases(actual, cyc);
    let (proposed_checks, proposed_summary) = check_increases(proposed, cyc);
    ComparisonReport {
        actual: actual_checks,
        proposed: proposed_checks,
        actual_summary,
        proposed_summary,
    }
}
