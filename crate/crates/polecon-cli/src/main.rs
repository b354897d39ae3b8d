//! `polecon` — reproducible analyses of gaps, stimulus targeting, loan
//! subsidies, minimum-wage retiming, commons games, and giving elasticity.
//!
//! Configuration comes from an optional JSON document (`--config`); every
//! parameter can also be set by a flag, and flags win. Exit codes: 0 on
//! success, 1 on input errors, 2 on internal errors.

mod commands;
mod config;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use chrono::NaiveDate;
use clap::{Parser, Subcommand, ValueEnum};

use polecon::charity::ElasticityMode;
use polecon::empowerment::Disbursement;
use polecon::fiscal::{ImpactMode, IncomeGroup};
use polecon::minwage::{GrowthScheme, TimingMethod};

use config::RunConfig;

#[derive(Debug)]
pub enum CliError {
    /// Bad configuration, unreadable or malformed data, or parameters a
    /// module rejects.
    Input(String),
    /// Failures the user cannot fix by changing inputs (output I/O,
    /// serialization).
    Internal(String),
}

impl From<polecon::Error> for CliError {
    fn from(e: polecon::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "polecon", version, about = "Efficiency-and-equality policy toolkit")]
struct Cli {
    /// JSON configuration file; data paths resolve relative to it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory (overrides the config).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    FirstRound,
    Multiplier,
}

impl From<ModeArg> for ImpactMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::FirstRound => ImpactMode::FirstRound,
            ModeArg::Multiplier => ImpactMode::Multiplier,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Midpoint,
    LocalMin,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Arithmetic,
    Geometric,
}

#[derive(Clone, Copy, ValueEnum)]
enum DisbursementArg {
    LumpT0,
    EqualT0ToT3,
}

#[derive(Clone, Copy, ValueEnum)]
enum ElasticityArg {
    ConstantElasticity,
    PointElasticity,
}

#[derive(Subcommand)]
enum Command {
    /// Output gap, cyclical unemployment, and negative-episode detection.
    Gaps {
        /// Minimum episode length in observation periods.
        #[arg(long)]
        min_duration: Option<usize>,
        #[arg(long)]
        entry_tolerance: Option<f64>,
        #[arg(long)]
        balance_tolerance: Option<f64>,
    },
    /// MPC-targeted stimulus allocation for a demand gap.
    Stimulus {
        /// Size of the demand gap to close.
        #[arg(long)]
        gap: Option<f64>,
        #[arg(long)]
        mode: Option<ModeArg>,
        /// Income group as label:share:mpc; repeat for several groups.
        #[arg(long = "group")]
        groups: Vec<String>,
        /// Uniform MPC for the naive comparison plan.
        #[arg(long)]
        assumed_mpc: Option<f64>,
    },
    /// NPV cost-benefit for a subsidized student-loan program.
    Npv {
        #[arg(long)]
        principal: Option<f64>,
        /// Free-market interest rate.
        #[arg(long)]
        r_fm: Option<f64>,
        /// Subsidized student-loan rate.
        #[arg(long)]
        r_sl: Option<f64>,
        /// Social discount rate.
        #[arg(long)]
        i_social: Option<f64>,
        #[arg(long)]
        disbursement: Option<DisbursementArg>,
        #[arg(long)]
        hcva: Option<f64>,
        #[arg(long)]
        wpcs: Option<f64>,
        #[arg(long)]
        peg: Option<f64>,
        /// Skip the sensitivity sweep table.
        #[arg(long)]
        no_sweep: bool,
    },
    /// Counterfactual minimum-wage schedule retimed onto episodes.
    Retime {
        #[arg(long)]
        method: Option<MethodArg>,
        #[arg(long)]
        scheme: Option<SchemeArg>,
        #[arg(long)]
        w_start: Option<f64>,
        #[arg(long)]
        w_end: Option<f64>,
        /// Date of the opening plateau (YYYY-MM-DD).
        #[arg(long)]
        window_start: Option<NaiveDate>,
        #[arg(long)]
        min_duration: Option<usize>,
    },
    /// Commons-game diagnosis and corrective tax.
    Game {
        /// Two strategy names, comma separated.
        #[arg(long)]
        labels: Option<String>,
        /// Row-major payoffs "a,b;c,d;e,f;g,h" as (p1,p2) per cell.
        #[arg(long)]
        payoffs: Option<String>,
        /// Strategy index the corrective tax should select.
        #[arg(long)]
        tax_target: Option<usize>,
    },
    /// Giving elasticity and leaky-bucket channel comparison.
    Charity {
        #[arg(long)]
        baseline_giving: Option<f64>,
        #[arg(long)]
        baseline_price: Option<f64>,
        #[arg(long)]
        new_price: Option<f64>,
        #[arg(long)]
        elasticity: Option<f64>,
        #[arg(long)]
        mode: Option<ElasticityArg>,
        #[arg(long)]
        public_transfer: Option<f64>,
        #[arg(long)]
        leak: Option<f64>,
        #[arg(long)]
        incentive_cost: Option<f64>,
    },
    /// Run every analysis and emit an artifact index.
    Report {},
}

fn parse_group(spec: &str) -> CliResult<IncomeGroup> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Input(format!(
            "group '{spec}' must be label:share:mpc"
        )));
    }
    let share: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Input(format!("group '{spec}': bad share")))?;
    let mpc: f64 = parts[2]
        .parse()
        .map_err(|_| CliError::Input(format!("group '{spec}': bad mpc")))?;
    Ok(IncomeGroup::new(parts[0], mpc, share))
}

fn load_config(cli: &Cli) -> CliResult<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Input(format!("cannot read {}: {e}", path.display()))
            })?;
            let mut cfg: RunConfig = serde_json::from_str(&text).map_err(|e| {
                CliError::Input(format!("{}: {e}", path.display()))
            })?;
            if let Some(dir) = path.parent() {
                cfg.anchor_paths(dir);
            }
            cfg
        }
        None => RunConfig::default(),
    };
    if let Some(out) = &cli.out {
        cfg.out_dir = out.clone();
    }
    Ok(cfg)
}

/// Copy flag values over the loaded config; flags win.
fn apply_overrides(cfg: &mut RunConfig, command: &Command) -> CliResult<()> {
    match command {
        Command::Gaps {
            min_duration,
            entry_tolerance,
            balance_tolerance,
        } => {
            if let Some(v) = min_duration {
                cfg.gaps.min_duration = *v;
            }
            if let Some(v) = entry_tolerance {
                cfg.gaps.entry_tolerance = *v;
            }
            if let Some(v) = balance_tolerance {
                cfg.gaps.balance_tolerance = *v;
            }
        }
        Command::Stimulus {
            gap,
            mode,
            groups,
            assumed_mpc,
        } => {
            if let Some(v) = gap {
                cfg.stimulus.gap = *v;
            }
            if let Some(v) = mode {
                cfg.stimulus.mode = (*v).into();
            }
            if !groups.is_empty() {
                cfg.stimulus.groups = groups
                    .iter()
                    .map(|s| parse_group(s))
                    .collect::<CliResult<Vec<_>>>()?;
            }
            if let Some(v) = assumed_mpc {
                cfg.stimulus.assumed_uniform_mpc = Some(*v);
            }
        }
        Command::Npv {
            principal,
            r_fm,
            r_sl,
            i_social,
            disbursement,
            hcva,
            wpcs,
            peg,
            no_sweep,
        } => {
            if let Some(v) = principal {
                cfg.npv.principal = *v;
            }
            if let Some(v) = r_fm {
                cfg.npv.r_fm = *v;
            }
            if let Some(v) = r_sl {
                cfg.npv.r_sl = *v;
            }
            if let Some(v) = i_social {
                cfg.npv.i_social = *v;
            }
            if let Some(v) = disbursement {
                cfg.npv.disbursement = match v {
                    DisbursementArg::LumpT0 => Disbursement::LumpT0,
                    DisbursementArg::EqualT0ToT3 => Disbursement::EqualT0ToT3,
                };
            }
            if let Some(v) = hcva {
                cfg.npv.hcva = *v;
            }
            if let Some(v) = wpcs {
                cfg.npv.wpcs = *v;
            }
            if let Some(v) = peg {
                cfg.npv.peg = *v;
            }
            if *no_sweep {
                cfg.npv.sweep = None;
            }
        }
        Command::Retime {
            method,
            scheme,
            w_start,
            w_end,
            window_start,
            min_duration,
        } => {
            if let Some(v) = method {
                cfg.retime.timing_method = match v {
                    MethodArg::Midpoint => TimingMethod::Midpoint,
                    MethodArg::LocalMin => TimingMethod::LocalMin,
                };
            }
            if let Some(v) = scheme {
                cfg.retime.growth_scheme = match v {
                    SchemeArg::Arithmetic => GrowthScheme::Arithmetic,
                    SchemeArg::Geometric => GrowthScheme::Geometric,
                };
            }
            if let Some(v) = w_start {
                cfg.retime.w_start = *v;
            }
            if let Some(v) = w_end {
                cfg.retime.w_end = *v;
            }
            if let Some(v) = window_start {
                cfg.retime.window_start = *v;
            }
            if let Some(v) = min_duration {
                cfg.gaps.min_duration = *v;
            }
        }
        Command::Game {
            labels,
            payoffs,
            tax_target,
        } => {
            if let Some(spec) = labels {
                let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
                if parts.len() != 2 {
                    return Err(CliError::Input(format!(
                        "labels '{spec}' must name exactly two strategies"
                    )));
                }
                cfg.game.strategy_labels = [parts[0].to_string(), parts[1].to_string()];
            }
            if let Some(spec) = payoffs {
                cfg.game.payoffs = parse_payoffs(spec)?;
            }
            if let Some(v) = tax_target {
                if *v > 1 {
                    return Err(CliError::Input("tax target must be 0 or 1".into()));
                }
                cfg.game.tax_target = *v;
            }
        }
        Command::Charity {
            baseline_giving,
            baseline_price,
            new_price,
            elasticity,
            mode,
            public_transfer,
            leak,
            incentive_cost,
        } => {
            if let Some(v) = baseline_giving {
                cfg.charity.baseline_giving = *v;
            }
            if let Some(v) = baseline_price {
                cfg.charity.baseline_price = *v;
            }
            if let Some(v) = new_price {
                cfg.charity.new_price = *v;
            }
            if let Some(v) = elasticity {
                cfg.charity.elasticity = *v;
            }
            if let Some(v) = mode {
                cfg.charity.mode = match v {
                    ElasticityArg::ConstantElasticity => ElasticityMode::ConstantElasticity,
                    ElasticityArg::PointElasticity => ElasticityMode::PointElasticity,
                };
            }
            if let Some(v) = public_transfer {
                cfg.charity.public_transfer = *v;
            }
            if let Some(v) = leak {
                cfg.charity.leak = *v;
            }
            if let Some(v) = incentive_cost {
                cfg.charity.incentive_cost = *v;
            }
        }
        Command::Report {} => {}
    }
    Ok(())
}

/// Parse "a,b;c,d;e,f;g,h" into the row-major 2x2 payoff grid.
fn parse_payoffs(spec: &str) -> CliResult<[[(f64, f64); 2]; 2]> {
    let bad = || CliError::Input(format!("payoffs '{spec}' must be four 'p1,p2' cells separated by ';'"));
    let cells: Vec<&str> = spec.split(';').collect();
    if cells.len() != 4 {
        return Err(bad());
    }
    let mut parsed = [(0.0, 0.0); 4];
    for (i, cell) in cells.iter().enumerate() {
        let parts: Vec<&str> = cell.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(bad());
        }
        let a: f64 = parts[0].parse().map_err(|_| bad())?;
        let b: f64 = parts[1].parse().map_err(|_| bad())?;
        parsed[i] = (a, b);
    }
    Ok([[parsed[0], parsed[1]], [parsed[2], parsed[3]]])
}

fn run(cli: &Cli) -> CliResult<Vec<PathBuf>> {
    let mut cfg = load_config(cli)?;
    apply_overrides(&mut cfg, &cli.command)?;
    match &cli.command {
        Command::Gaps { .. } => commands::cmd_gaps(&cfg),
        Command::Stimulus { .. } => commands::cmd_stimulus(&cfg),
        Command::Npv { .. } => commands::cmd_npv(&cfg),
        Command::Retime { .. } => commands::cmd_retime(&cfg),
        Command::Game { .. } => commands::cmd_game(&cfg),
        Command::Charity { .. } => commands::cmd_charity(&cfg),
        Command::Report {} => commands::cmd_report(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(files) => {
            for f in files {
                println!("wrote {}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
