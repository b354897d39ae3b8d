//! MPC-targeted stimulus sizing for a recessionary gap.
//!
//! Aggregate-demand impact supports two modes: `FirstRound` (the induced
//! spending is `mpc * stimulus`, the default) and `Multiplier` (the geometric
//! tax-cut multiplier `mpc / (1 - mpc)`).

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImpactMode {
    FirstRound,
    Multiplier,
}

/// An income group with its marginal propensity to consume and share of
/// the targeted population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncomeGroup {
    pub label: String,
    pub mpc: f64,
    pub population_share: f64,
}

impl IncomeGroup {
    pub fn new(label: impl Into<String>, mpc: f64, population_share: f64) -> Self {
        IncomeGroup {
            label: label.into(),
            mpc,
            population_share,
        }
    }
}

fn check_mpc(mpc: f64, mode: ImpactMode) -> Result<()> {
    if !(mpc > 0.0 && mpc <= 1.0) {
        return Err(Error::param("mpc", format!("{mpc} must lie in (0, 1]")));
    }
    if mode == ImpactMode::Multiplier && mpc >= 1.0 {
        return Err(Error::DivergentMultiplier(mpc));
    }
    Ok(())
}

/// Aggregate-demand impact of a stimulus handed to a group with the given
/// MPC.
pub fn ad_impact(stimulus: f64, mpc: f64, mode: ImpactMode) -> Result<f64> {
    if stimulus < 0.0 {
        return Err(Error::param("stimulus", "must be non-negative"));
    }
    check_mpc(mpc, mode)?;
    Ok(match mode {
        ImpactMode::FirstRound => stimulus * mpc,
        ImpactMode::Multiplier => stimulus * mpc / (1.0 - mpc),
    })
}

/// The unique stimulus whose AD impact equals the gap. Strictly decreasing
/// in the MPC.
pub fn required_stimulus(gap: f64, mpc: f64, mode: ImpactMode) -> Result<f64> {
    if gap <= 0.0 {
        return Err(Error::param("gap", "must be positive"));
    }
    check_mpc(mpc, mode)?;
    Ok(match mode {
        ImpactMode::FirstRound => gap / mpc,
        ImpactMode::Multiplier => gap * (1.0 - mpc) / mpc,
    })
}

/// AD impact per stimulus dollar of a targeted group relative to a blanket
/// group.
pub fn effectiveness_ratio(mpc_targeted: f64, mpc_blanket: f64, mode: ImpactMode) -> Result<f64> {
    Ok(ad_impact(1.0, mpc_targeted, mode)? / ad_impact(1.0, mpc_blanket, mode)?)
}

/// Per-group allocation: stimulus handed to the group and the AD it induces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Allocation {
    pub group: IncomeGroup,
    pub stimulus: f64,
    pub induced_ad: f64,
}

/// Evaluation of a naive plan that assumes one uniform MPC for everyone,
/// scored against the groups' true MPCs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaiveComparison {
    pub assumed_mpc: f64,
    pub naive_total_stimulus: f64,
    /// AD the naive plan actually induces under the true MPCs.
    pub induced_ad_under_true_mpcs: f64,
    /// Induced AD minus the gap; positive means over-stimulation.
    pub overshoot: f64,
    pub over_stimulation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StimulusPlan {
    pub gap: f64,
    pub mode: ImpactMode,
    pub allocations: Vec<Allocation>,
    pub total_stimulus: f64,
    pub total_induced_ad: f64,
    pub naive: Option<NaiveComparison>,
}

/// Allocate stimulus so each group's induced AD share equals its population
/// share and the total induced AD equals the gap.
///
/// When `assumed_uniform_mpc` is given, the same allocation rule is also
/// evaluated as if every group had that MPC, and the resulting plan is
/// scored against the true MPCs to flag over-stimulation.
pub fn allocate(
    gap: f64,
    groups: &[IncomeGroup],
    mode: ImpactMode,
    assumed_uniform_mpc: Option<f64>,
) -> Result<StimulusPlan> {
    if groups.is_empty() {
        return Err(Error::param("groups", "must be non-empty"));
    }
    let share_sum: f64 = groups.iter().map(|g| g.population_share).sum();
    if (share_sum - 1.0).abs() > 1e-9 {
        return Err(Error::param(
            "population_share",
            format!("shares sum to {share_sum}, expected 1"),
        ));
    }
    if groups.iter().any(|g| g.population_share <= 0.0) {
        return Err(Error::param("population_share", "shares must be positive"));
    }

    let mut allocations = Vec::with_capacity(groups.len());
    for g in groups {
        let induced = gap * g.population_share;
        let stimulus = required_stimulus(induced, g.mpc, mode)?;
        allocations.push(Allocation {
            group: g.clone(),
            stimulus,
            induced_ad: induced,
        });
    }
    let total_stimulus = allocations.iter().map(|a| a.stimulus).sum();
    let total_induced_ad = allocations.iter().map(|a| a.induced_ad).sum();

    let naive = match assumed_uniform_mpc {
        None => None,
        Some(assumed) => {
            check_mpc(assumed, mode)?;
            let mut naive_total = 0.0;
            let mut induced_true = 0.0;
            for g in groups {
                let s = required_stimulus(gap * g.population_share, assumed, mode)?;
                naive_total += s;
                induced_true += ad_impact(s, g.mpc, mode)?;
            }
            let overshoot = induced_true - gap;
            Some(NaiveComparison {
                assumed_mpc: assumed,
                naive_total_stimulus: naive_total,
                induced_ad_under_true_mpcs: induced_true,
                overshoot,
                over_stimulation: overshoot > 0.0,
            })
        }
    };

    Ok(StimulusPlan {
        gap,
        mode,
        allocations,
        total_stimulus,
        total_induced_ad,
        naive,
    })
}
