//! NPV marginal cost-benefit engine for a subsidized student-loan program.
//!
//! The government disburses a principal `L` at the subsidized rate `r_sl`;
//! its only marginal cost is the interest spread `dr = r_fm - r_sl` applied
//! to the outstanding balance in each year, discounted at the social rate.
//! Benefits arrive as three streams: human-capital value added over the
//! working years, welfare-program cost savings, and positive-externality
//! gains over the remaining lifetime.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Program milestones, in years from enrollment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramTimeline {
    pub t_enroll: usize,
    pub t_grad: usize,
    pub t_work_start: usize,
    pub t_repay_end: usize,
    pub t_retire: usize,
    pub t_death: usize,
}

impl Default for ProgramTimeline {
    /// Enroll at 0, graduate at 4, work and repay from 5, 25 annual
    /// payments through 29, retire at 45, die at 57.
    fn default() -> Self {
        ProgramTimeline {
            t_enroll: 0,
            t_grad: 4,
            t_work_start: 5,
            t_repay_end: 29,
            t_retire: 45,
            t_death: 57,
        }
    }
}

impl ProgramTimeline {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_enroll < self.t_grad
            && self.t_grad < self.t_work_start
            && self.t_work_start <= self.t_repay_end
            && self.t_repay_end < self.t_retire
            && self.t_retire < self.t_death)
        {
            return Err(Error::param(
                "timeline",
                "milestones must satisfy enroll < grad < work_start <= repay_end < retire < death",
            ));
        }
        Ok(())
    }

    /// Number of annual repayments.
    pub fn repayment_years(&self) -> usize {
        self.t_repay_end - self.t_work_start + 1
    }
}

/// Free-market rate, subsidized rate, and the social discount rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateSet {
    pub r_fm: f64,
    pub r_sl: f64,
    pub i_social: f64,
}

impl RateSet {
    pub fn new(r_fm: f64, r_sl: f64, i_social: f64) -> Result<Self> {
        let set = RateSet { r_fm, r_sl, i_social };
        set.validate()?;
        Ok(set)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r_fm <= -1.0 || self.r_sl <= -1.0 || self.i_social <= -1.0 {
            return Err(Error::param("rates", "all rates must exceed -1"));
        }
        if self.r_sl > self.r_fm {
            return Err(Error::param(
                "rates",
                "subsidized rate must not exceed the free-market rate",
            ));
        }
        Ok(())
    }

    /// Interest spread `r_fm - r_sl`.
    pub fn spread(&self) -> f64 {
        self.r_fm - self.r_sl
    }
}

/// How the principal reaches the student.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Disbursement {
    /// Entire principal at enrollment.
    LumpT0,
    /// Equal annual tranches over the school years (enroll .. grad-1).
    EqualT0ToT3,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScheduleRow {
    pub t: usize,
    /// Balance outstanding at the start of year `t`.
    pub balance: f64,
    /// Repayment made in year `t` (zero during school).
    pub payment: f64,
}

/// Per-year balances and repayment cash flows of the subsidized loan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmortizationSchedule {
    pub principal: f64,
    pub r_sl: f64,
    pub timeline: ProgramTimeline,
    pub rows: Vec<ScheduleRow>,
    /// Balance after the final payment; zero up to rounding.
    pub final_balance: f64,
}

impl AmortizationSchedule {
    pub fn annual_payment(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.payment)
            .find(|&p| p != 0.0)
            .unwrap_or(0.0)
    }
}

/// Level annuity payment amortizing `balance` over `n` annual payments at
/// rate `r` (simply `balance / n` when `r == 0`).
pub fn level_annuity_payment(balance: f64, r: f64, n: usize) -> f64 {
    if r == 0.0 {
        balance / n as f64
    } else {
        balance * r / (1.0 - (1.0 + r).powi(-(n as i32)))
    }
}

/// Build the loan schedule: balance accumulates per the disbursement plan
/// with no borrower-side accrual in school, then amortizes as a level
/// annuity at `r_sl`.
pub fn build_schedule(
    principal: f64,
    rates: &RateSet,
    timeline: &ProgramTimeline,
    disbursement: Disbursement,
) -> Result<AmortizationSchedule> {
    if principal <= 0.0 {
        return Err(Error::param("principal", "must be positive"));
    }
    rates.validate()?;
    timeline.validate()?;

    let n = timeline.repayment_years();
    let mut rows = Vec::with_capacity(timeline.t_repay_end + 1);

    // School phase: tranches land at the start of each year; the
    // borrower-side balance does not accrue interest.
    let mut balance = 0.0;
    for t in timeline.t_enroll..timeline.t_work_start {
        match disbursement {
            Disbursement::LumpT0 => {
                if t == timeline.t_enroll {
                    balance = principal;
                }
            }
            Disbursement::EqualT0ToT3 => {
                if t < timeline.t_grad {
                    balance += principal / (timeline.t_grad - timeline.t_enroll) as f64;
                }
            }
        }
        rows.push(ScheduleRow {
            t,
            balance,
            payment: 0.0,
        });
    }

    // Repayment phase: level annuity at r_sl.
    let payment = level_annuity_payment(balance, rates.r_sl, n);
    for t in timeline.t_work_start..=timeline.t_repay_end {
        rows.push(ScheduleRow {
            t,
            balance,
            payment,
        });
        balance = balance * (1.0 + rates.r_sl) - payment;
    }

    Ok(AmortizationSchedule {
        principal,
        r_sl: rates.r_sl,
        timeline: *timeline,
        rows,
        final_balance: balance,
    })
}

fn discount(value: f64, rate: f64, t: usize) -> f64 {
    value / (1.0 + rate).powi(t as i32)
}

/// NPV of the program's marginal cost: the interest spread applied to each
/// year's outstanding balance, discounted at the social rate.
///
/// `sum_t dr * LB_t / (1 + i_social)^t` over the schedule's rows.
pub fn marginal_cost_npv(schedule: &AmortizationSchedule, rates: &RateSet) -> f64 {
    let dr = rates.spread();
    schedule
        .rows
        .iter()
        .map(|r| discount(dr * r.balance, rates.i_social, r.t))
        .sum()
}

/// Same cost via the cash-flow formulation: the free-market repayment in
/// year `t` is the subsidized repayment plus `dr * LB_t`, and the cost is
/// the discounted sum of the differences. Agrees with
/// [`marginal_cost_npv`] to within floating-point error; kept as the
/// second algebraic route.
pub fn marginal_cost_npv_via_cashflows(schedule: &AmortizationSchedule, rates: &RateSet) -> f64 {
    let dr = rates.spread();
    schedule
        .rows
        .iter()
        .map(|r| {
            let lrcf_fm = r.payment + dr * r.balance;
            discount(lrcf_fm - r.payment, rates.i_social, r.t)
        })
        .sum()
}

/// Annual benefit streams. `hcva` runs over the working years
/// `[t_work_start, t_retire]`; `wpcs` and `peg` over
/// `[t_work_start, t_death]`. Values are stored densely indexed by `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenefitStreams {
    pub timeline: ProgramTimeline,
    pub hcva: Vec<f64>,
    pub wpcs: Vec<f64>,
    pub peg: Vec<f64>,
}

impl BenefitStreams {
    /// Constant value on each stream's window, zero elsewhere.
    pub fn constant(timeline: &ProgramTimeline, hcva: f64, wpcs: f64, peg: f64) -> Result<Self> {
        timeline.validate()?;
        let len = timeline.t_death + 1;
        let fill = |value: f64, end: usize| -> Vec<f64> {
            (0..len)
                .map(|t| {
                    if t >= timeline.t_work_start && t <= end {
                        value
                    } else {
                        0.0
                    }
                })
                .collect()
        };
        let streams = BenefitStreams {
            timeline: *timeline,
            hcva: fill(hcva, timeline.t_retire),
            wpcs: fill(wpcs, timeline.t_death),
            peg: fill(peg, timeline.t_death),
        };
        streams.validate()?;
        Ok(streams)
    }

    /// Dense per-year values; each vector must be zero outside its window
    /// and non-negative inside.
    pub fn from_dense(
        timeline: &ProgramTimeline,
        hcva: Vec<f64>,
        wpcs: Vec<f64>,
        peg: Vec<f64>,
    ) -> Result<Self> {
        timeline.validate()?;
        let streams = BenefitStreams {
            timeline: *timeline,
            hcva,
            wpcs,
            peg,
        };
        streams.validate()?;
        Ok(streams)
    }

    fn validate(&self) -> Result<()> {
        let len = self.timeline.t_death + 1;
        let check = |name: &str, v: &[f64], end: usize| -> Result<()> {
            if v.len() != len {
                return Err(Error::param(
                    name,
                    format!("expected {len} values (t = 0..={}), got {}", len - 1, v.len()),
                ));
            }
            for (t, &x) in v.iter().enumerate() {
                if !x.is_finite() || x < 0.0 {
                    return Err(Error::param(name, format!("value {x} at t={t} invalid")));
                }
                if (t < self.timeline.t_work_start || t > end) && x != 0.0 {
                    return Err(Error::param(
                        name,
                        format!("value at t={t} falls outside the stream's window"),
                    ));
                }
            }
            Ok(())
        };
        check("hcva", &self.hcva, self.timeline.t_retire)?;
        check("wpcs", &self.wpcs, self.timeline.t_death)?;
        check("peg", &self.peg, self.timeline.t_death)
    }

    /// Pointwise sum of two stream sets on the same timeline.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if factor < 0.0 {
            return Err(Error::param("factor", "must be non-negative"));
        }
        BenefitStreams::from_dense(
            &self.timeline,
            self.hcva.iter().map(|v| v * factor).collect(),
            self.wpcs.iter().map(|v| v * factor).collect(),
            self.peg.iter().map(|v| v * factor).collect(),
        )
    }
}

/// Discounted sum of all three benefit streams.
pub fn benefits_npv(streams: &BenefitStreams, i_social: f64) -> f64 {
    let sum = |v: &[f64]| -> f64 {
        v.iter()
            .enumerate()
            .map(|(t, &x)| discount(x, i_social, t))
            .sum::<f64>()
    };
    sum(&streams.hcva) + sum(&streams.wpcs) + sum(&streams.peg)
}

/// Everything needed to evaluate the program once.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProgramInputs {
    pub principal: f64,
    pub rates: RateSet,
    pub timeline: ProgramTimeline,
    pub disbursement: Disbursement,
    pub streams: BenefitStreams,
}

/// Outcome of one marginal cost-benefit evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decision {
    pub benefits_npv: f64,
    pub costs_npv: f64,
    /// Strict: benefits must exceed costs.
    pub passes: bool,
    pub margin: f64,
}

/// Evaluate `NPV(benefits) > NPV(costs)` for the given inputs.
pub fn evaluate_program(inputs: &ProgramInputs) -> Result<Decision> {
    let schedule = build_schedule(
        inputs.principal,
        &inputs.rates,
        &inputs.timeline,
        inputs.disbursement,
    )?;
    let costs = marginal_cost_npv(&schedule, &inputs.rates);
    let benefits = benefits_npv(&inputs.streams, inputs.rates.i_social);
    Ok(Decision {
        benefits_npv: benefits,
        costs_npv: costs,
        passes: benefits > costs,
        margin: benefits - costs,
    })
}

/// Which scalar the sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParameter {
    /// Replace the social discount rate.
    SocialDiscountRate,
    /// Replace the spread by setting `r_fm = r_sl + value`.
    RateSpread,
    /// Scale all three benefit streams.
    StreamScale,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub benefits_npv: f64,
    pub costs_npv: f64,
    pub passes: bool,
    pub margin: f64,
}

/// One [`evaluate_program`] per grid point. The grid must be non-empty and
/// strictly increasing.
pub fn sensitivity_sweep(
    base: &ProgramInputs,
    parameter: SweepParameter,
    grid: &[f64],
) -> Result<Vec<SweepRow>> {
    if grid.is_empty() {
        return Err(Error::param("grid", "must be non-empty"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::param("grid", "must be strictly increasing"));
    }
    let mut rows = Vec::with_capacity(grid.len());
    for &value in grid {
        let mut inputs = base.clone();
        match parameter {
            SweepParameter::SocialDiscountRate => inputs.rates.i_social = value,
            SweepParameter::RateSpread => {
                if value < 0.0 {
                    return Err(Error::param("grid", "rate spread must be non-negative"));
                }
                inputs.rates.r_fm = inputs.rates.r_sl + value;
            }
            SweepParameter::StreamScale => inputs.streams = base.streams.scaled(value)?,
        }
        inputs.rates.validate()?;
        let d = evaluate_program(&inputs)?;
        rows.push(SweepRow {
            value,
            benefits_npv: d.benefits_npv,
            costs_npv: d.costs_npv,
            passes: d.passes,
            margin: d.margin,
        });
    }
    Ok(rows)
}
