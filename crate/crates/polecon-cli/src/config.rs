//! Run configuration: one JSON document, every field overridable by a
//! command-line flag (flags win).

use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use polecon::charity::ElasticityMode;
use polecon::empowerment::{Disbursement, ProgramTimeline, SweepParameter};
use polecon::fiscal::{ImpactMode, IncomeGroup};
use polecon::minwage::{GrowthScheme, TimingMethod};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub data: DataPaths,
    pub out_dir: PathBuf,
    pub gaps: GapsConfig,
    pub stimulus: StimulusConfig,
    pub npv: NpvConfig,
    pub retime: RetimeSection,
    pub game: GameConfig,
    pub charity: CharityConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            data: DataPaths::default(),
            out_dir: PathBuf::from("out"),
            gaps: GapsConfig::default(),
            stimulus: StimulusConfig::default(),
            npv: NpvConfig::default(),
            retime: RetimeSection::default(),
            game: GameConfig::default(),
            charity: CharityConfig::default(),
        }
    }
}

impl RunConfig {
    /// Resolve every data path relative to `base` (normally the config
    /// file's directory) unless it is already absolute.
    pub fn anchor_paths(&mut self, base: &Path) {
        for p in [
            &mut self.data.gdp,
            &mut self.data.potential_gdp,
            &mut self.data.unemployment,
            &mut self.data.natural_unemployment,
            &mut self.data.cpi,
            &mut self.data.minwage,
        ] {
            if p.is_relative() {
                *p = base.join(&p);
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DataPaths {
    pub gdp: PathBuf,
    pub potential_gdp: PathBuf,
    pub unemployment: PathBuf,
    pub natural_unemployment: PathBuf,
    pub cpi: PathBuf,
    pub minwage: PathBuf,
}

impl Default for DataPaths {
    fn default() -> Self {
        DataPaths {
            gdp: "data/gdp.csv".into(),
            potential_gdp: "data/potential_gdp.csv".into(),
            unemployment: "data/unemployment.csv".into(),
            natural_unemployment: "data/natural_unemployment.csv".into(),
            cpi: "data/cpi.csv".into(),
            minwage: "data/minimum_wage.csv".into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GapsConfig {
    /// Minimum episode length in observation periods.
    pub min_duration: usize,
    /// Entry threshold: a point joins a run only when value < -entry_tolerance.
    pub entry_tolerance: f64,
    /// Half-width of the "balanced" band in classification output.
    pub balance_tolerance: f64,
}

impl Default for GapsConfig {
    fn default() -> Self {
        GapsConfig {
            min_duration: 4,
            entry_tolerance: 0.0,
            balance_tolerance: 0.1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StimulusConfig {
    pub gap: f64,
    pub mode: ImpactMode,
    pub groups: Vec<IncomeGroup>,
    /// When set, also reports the naive uniform-MPC plan for comparison.
    pub assumed_uniform_mpc: Option<f64>,
}

impl Default for StimulusConfig {
    fn default() -> Self {
        StimulusConfig {
            gap: 100.0,
            mode: ImpactMode::FirstRound,
            groups: vec![
                IncomeGroup::new("low_income", 0.8, 0.5),
                IncomeGroup::new("high_income", 0.4, 0.5),
            ],
            assumed_uniform_mpc: Some(0.8),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NpvConfig {
    pub principal: f64,
    pub r_fm: f64,
    pub r_sl: f64,
    pub i_social: f64,
    pub disbursement: Disbursement,
    pub timeline: ProgramTimeline,
    /// Constant annual benefit levels over each stream's window.
    pub hcva: f64,
    pub wpcs: f64,
    pub peg: f64,
    pub sweep: Option<SweepConfig>,
}

impl Default for NpvConfig {
    fn default() -> Self {
        NpvConfig {
            principal: 10_000.0,
            r_fm: 0.05,
            r_sl: 0.02,
            i_social: 0.03,
            disbursement: Disbursement::LumpT0,
            timeline: ProgramTimeline::default(),
            hcva: 500.0,
            wpcs: 300.0,
            peg: 200.0,
            sweep: Some(SweepConfig::default()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub parameter: SweepParameter,
    pub grid: Vec<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            parameter: SweepParameter::SocialDiscountRate,
            grid: vec![0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RetimeSection {
    pub timing_method: TimingMethod,
    pub growth_scheme: GrowthScheme,
    pub w_start: f64,
    pub w_end: f64,
    /// Date of the opening plateau; must precede the first increase.
    pub window_start: NaiveDate,
}

impl Default for RetimeSection {
    fn default() -> Self {
        RetimeSection {
            timing_method: TimingMethod::Midpoint,
            growth_scheme: GrowthScheme::Geometric,
            w_start: 0.40,
            w_end: 7.25,
            window_start: NaiveDate::from_ymd_opt(1948, 1, 1).unwrap(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GameConfig {
    pub strategy_labels: [String; 2],
    /// Row-major 2x2 grid of (player 1, player 2) payoffs.
    pub payoffs: [[(f64, f64); 2]; 2],
    /// Row index of the profile a corrective tax should select.
    pub tax_target: usize,
    /// Tax levels for the sweep table, beyond the computed infimum.
    pub tax_sweep_step: f64,
    pub tax_sweep_extra_steps: usize,
}

impl Default for GameConfig {
    fn default() -> Self {
        let g = polecon::games::Game2x2::commons();
        GameConfig {
            strategy_labels: g.strategy_labels.clone(),
            payoffs: g.payoffs,
            tax_target: 0,
            tax_sweep_step: 2.5,
            tax_sweep_extra_steps: 4,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CharityConfig {
    pub baseline_giving: f64,
    pub baseline_price: f64,
    pub new_price: f64,
    pub elasticity: f64,
    pub mode: ElasticityMode,
    pub public_transfer: f64,
    pub leak: f64,
    pub incentive_cost: f64,
}

impl Default for CharityConfig {
    fn default() -> Self {
        CharityConfig {
            baseline_giving: 100.0,
            baseline_price: 0.60,
            new_price: 0.55,
            elasticity: -4.0,
            mode: ElasticityMode::PointElasticity,
            public_transfer: 100.0,
            leak: 0.3,
            incentive_cost: 5.0,
        }
    }
}
