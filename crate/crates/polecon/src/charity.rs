//! Charitable-giving response to changes in the tax price of giving, and a
//! leaky-bucket comparison of transfer channels.
//!
//! The tax price of giving is the donor's net cost of one donated dollar,
//! `1 - marginal deduction rate`. The default elasticity is -4: a one
//! percent rise in the price of giving lowers receipts by about four
//! percent.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElasticityMode {
    /// `G1 = G0 * (p1/p0)^eps`.
    ConstantElasticity,
    /// `G1 = G0 * (1 + eps * (p1 - p0)/p0)`, floored at zero.
    PointElasticity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GivingScenario {
    pub baseline_giving: f64,
    pub baseline_price: f64,
    pub new_price: f64,
    pub elasticity: f64,
    pub mode: ElasticityMode,
}

impl GivingScenario {
    pub fn new(g0: f64, p0: f64, p1: f64, elasticity: f64, mode: ElasticityMode) -> Result<Self> {
        if g0 < 0.0 {
            return Err(Error::param("baseline_giving", "must be non-negative"));
        }
        if !(p0 > 0.0 && p0 <= 1.0) {
            return Err(Error::param("baseline_price", "must lie in (0, 1]"));
        }
        if !(p1 > 0.0 && p1 <= 1.0) {
            return Err(Error::param("new_price", "must lie in (0, 1]"));
        }
        Ok(GivingScenario {
            baseline_giving: g0,
            baseline_price: p0,
            new_price: p1,
            elasticity,
            mode,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GivingResponse {
    pub new_giving: f64,
    /// True when the point-elasticity prediction fell below zero and was
    /// clamped.
    pub floored: bool,
}

/// Predicted giving after the price change.
pub fn giving_response(scenario: &GivingScenario) -> GivingResponse {
    let g0 = scenario.baseline_giving;
    let ratio = scenario.new_price / scenario.baseline_price;
    match scenario.mode {
        ElasticityMode::ConstantElasticity => GivingResponse {
            new_giving: g0 * ratio.powf(scenario.elasticity),
            floored: false,
        },
        ElasticityMode::PointElasticity => {
            let raw = g0 * (1.0 + scenario.elasticity * (ratio - 1.0));
            GivingResponse {
                new_giving: raw.max(0.0),
                floored: raw < 0.0,
            }
        }
    }
}

/// Delivered amounts through the two channels: a direct public transfer
/// through the leaky bucket versus giving induced by a tax incentive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelComparison {
    pub via_tax: f64,
    pub via_charity: f64,
    /// Delivered per public dollar: (transfer channel, incentive channel).
    pub per_public_dollar: (f64, f64),
}

pub fn channel_comparison(
    public_transfer: f64,
    leak: f64,
    incentive_cost: f64,
    induced_giving: f64,
) -> Result<ChannelComparison> {
    if public_transfer < 0.0 || induced_giving < 0.0 {
        return Err(Error::param("amounts", "must be non-negative"));
    }
    if !(0.0..1.0).contains(&leak) {
        return Err(Error::param("leak", "must lie in [0, 1)"));
    }
    if incentive_cost <= 0.0 {
        return Err(Error::param("incentive_cost", "must be positive"));
    }
    let via_tax = public_transfer * (1.0 - leak);
    let per_transfer_dollar = if public_transfer > 0.0 {
        via_tax / public_transfer
    } else {
        0.0
    };
    Ok(ChannelComparison {
        via_tax,
        via_charity: induced_giving,
        per_public_dollar: (per_transfer_dollar, induced_giving / incentive_cost),
    })
}
