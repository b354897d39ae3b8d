//! End-to-end acceptance checks against the bundled data snapshots.
//! Each test prints one PASS/FAIL line (run with `--nocapture` to see the
//! lines for passing tests too).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use chrono::NaiveDate;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use polecon::dataio::{
    align, deflate, parse_series, summarize_minwage, AlignPolicy, DeflationBase, TimeSeries,
};
use polecon::empowerment::{
    build_schedule, evaluate_program, marginal_cost_npv, marginal_cost_npv_via_cashflows,
    sensitivity_sweep, BenefitStreams, Disbursement, ProgramInputs, ProgramTimeline, RateSet,
    SweepParameter,
};
use polecon::fiscal::{
    ad_impact, allocate, effectiveness_ratio, required_stimulus, ImpactMode, IncomeGroup,
};
use polecon::games::{
    apply_tax, best_social_outcome, dominant_strategy, equality_gap, min_corrective_tax,
    pure_nash, tragedy_diagnosis, Dominance, Game2x2,
};
use polecon::gaps::{cyclical_unemployment, detect_negative_episodes, Episode};
use polecon::minwage::{retime, GrowthScheme, RetimeConfig, TimingMethod};

fn data_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn load(name: &str) -> TimeSeries {
    let path = data_path(name);
    let text = fs::read_to_string(&path).unwrap();
    let header = text.lines().next().unwrap();
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    parse_series(&text, cols[1], cols[0]).unwrap()
}

fn verdict(name: &str, ok: bool) {
    println!(
        "acceptance: {name} ... {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion failed: {name}");
}

fn ymd(y: i32, m: u32, d: u32) -> NaiveDate {
    NaiveDate::from_ymd_opt(y, m, d).unwrap()
}

fn within_months(date: NaiveDate, target: NaiveDate, months: i64) -> bool {
    (date - target).num_days().abs() <= months * 31
}

fn real_minwage() -> (TimeSeries, TimeSeries, TimeSeries) {
    let nominal = load("minimum_wage.csv");
    let cpi = load("cpi.csv");
    let (monthly, cpi_aligned) = align(&nominal, &cpi, AlignPolicy::StepInterpolateAOntoB).unwrap();
    (nominal, monthly, cpi_aligned)
}

#[test]
fn criterion_1_minimum_wage_table() {
    let started = Instant::now();
    let (nominal, monthly, cpi) = real_minwage();
    let real = deflate(&monthly, &cpi, DeflationBase::IndexBase).unwrap();
    let window_end = ymd(2023, 1, 1);
    let stats = summarize_minwage(&nominal, &real, window_end).unwrap();
    let elapsed = started.elapsed();

    let ok = stats.distinct_count == 21
        && stats.change_count == 20
        && (stats.avg_duration_years - 3.62).abs() <= 0.15
        && (stats.avg_nominal_by_count - 3.03).abs() <= 0.02 * 3.03
        && (stats.avg_nominal_duration_weighted - 3.65).abs() <= 0.02 * 3.65
        && elapsed.as_secs_f64() < 1.0;
    verdict("1 minimum-wage history statistics", ok);
}

#[test]
fn criterion_2_real_wage_extremes() {
    let (_, monthly, cpi) = real_minwage();
    let bases = [
        DeflationBase::IndexBase,
        DeflationBase::ReferenceDate(cpi.first_date().unwrap()),
    ];
    let mut ok = true;
    for base in bases {
        let real = deflate(&monthly, &cpi, base).unwrap();
        let (mut min_d, mut min_v) = (real.points()[0].0, f64::INFINITY);
        let (mut max_d, mut max_v) = (real.points()[0].0, f64::NEG_INFINITY);
        for &(d, v) in real.points() {
            if v < min_v {
                (min_d, min_v) = (d, v);
            }
            if v > max_v {
                (max_d, max_v) = (d, v);
            }
        }
        let ratio = max_v / min_v;
        ok &= (ratio - 2.81).abs() <= 0.03 * 2.81;
        ok &= within_months(max_d, ymd(1968, 2, 1), 1);
        // Minimum anywhere in Jan-Feb 1949, with one month of slack.
        ok &= min_d >= ymd(1948, 12, 1) && min_d <= ymd(1949, 3, 1);
    }
    verdict("2 real-wage max/min ratio and extreme dates", ok);
}

fn episodes_min4() -> Vec<Episode> {
    let u = load("unemployment.csv");
    let n = load("natural_unemployment.csv");
    let cyc = cyclical_unemployment(&u, &n).unwrap();
    detect_negative_episodes(&cyc, 4, 0.0).unwrap()
}

#[test]
fn criterion_3_episode_detection() {
    let episodes = episodes_min4();
    let named = [(1950, 1953), (1964, 1970), (1996, 2001), (2017, 2019)];
    let ok = named.iter().all(|&(y1, y2)| {
        // One year of slack at each boundary.
        let lo = ymd(y1 - 1, 1, 1);
        let hi = ymd(y2 + 1, 12, 31);
        episodes.iter().any(|e| e.start <= hi && e.end >= lo)
    });
    verdict("3 negative cyclical-unemployment episodes", ok);
}

#[test]
fn criterion_4_commons_game() {
    let game = Game2x2::commons();
    let ne = pure_nash(&game);
    let diag = tragedy_diagnosis(&game);
    let bso = best_social_outcome(&game);
    let tax = min_corrective_tax(&game, 0).unwrap();

    let heavy = game.strategy_index("Heavy").unwrap();
    let light = game.strategy_index("Light").unwrap();
    let mut ok = ne.len() == 1 && ne[0].s1 == heavy && ne[0].s2 == heavy;
    ok &= ne[0].payoffs == (30.0, 30.0);
    ok &= bso.profile.s1 == light && bso.profile.s2 == light;
    ok &= bso.profile.payoff_sum() == 100.0;
    ok &= diag.efficiency_loss == 40.0;
    ok &= equality_gap(&ne[0]) == 0.0 && equality_gap(&bso.profile) == 0.0;
    ok &= dominant_strategy(&game, 0) == Dominance::Strict(heavy)
        && dominant_strategy(&game, 1) == Dominance::Strict(heavy);
    ok &= tax.infimum_tau == 10.0;

    // Probe just above and just below the infimum.
    let above = apply_tax(&game, "Heavy", 10.0 + 1e-6).unwrap();
    let ne_above = pure_nash(&above);
    ok &= ne_above.len() == 1 && ne_above[0].s1 == light && ne_above[0].s2 == light;
    let below = apply_tax(&game, "Heavy", 10.0 - 1e-6).unwrap();
    let ne_below = pure_nash(&below);
    ok &= !(ne_below.len() == 1 && ne_below[0].s1 == light && ne_below[0].s2 == light);

    verdict("4 commons game equilibrium, optimum, corrective tax", ok);
}

/// Independent year-by-year oracle for the subsidy cost.
fn cost_oracle(principal: f64, r_fm: f64, r_sl: f64, i_social: f64) -> f64 {
    let dr = r_fm - r_sl;
    let annuity = principal * r_sl / (1.0 - (1.0 + r_sl).powi(-25));
    let mut balance = principal;
    let mut cost = 0.0;
    for t in 0..30 {
        if t >= 5 {
            // Repayment year: interest accrues, then the annuity is paid.
            cost += dr * balance / (1.0 + i_social).powi(t);
            balance = balance * (1.0 + r_sl) - annuity;
        } else {
            cost += dr * balance / (1.0 + i_social).powi(t);
        }
    }
    cost
}

#[test]
fn criterion_5_npv_program() {
    let timeline = ProgramTimeline::default();
    let mut ok = true;

    // Two algebraic routes to the cost agree over randomized draws.
    let mut rng = StdRng::seed_from_u64(421_000);
    for _ in 0..1500 {
        let r_sl: f64 = rng.gen_range(0.0..0.10);
        let spread: f64 = rng.gen_range(0.0..0.10);
        let i_social: f64 = rng.gen_range(0.0..0.12);
        let principal: f64 = rng.gen_range(100.0..250_000.0);
        let rates = RateSet::new(r_sl + spread, r_sl, i_social).unwrap();
        let disb = if rng.gen_bool(0.5) {
            Disbursement::LumpT0
        } else {
            Disbursement::EqualT0ToT3
        };
        let s = build_schedule(principal, &rates, &timeline, disb).unwrap();
        let a = marginal_cost_npv(&s, &rates);
        let b = marginal_cost_npv_via_cashflows(&s, &rates);
        ok &= (a - b).abs() <= 1e-9 * a.abs().max(1.0);
    }

    // Zero spread means zero subsidy cost.
    let flat = RateSet::new(0.04, 0.04, 0.03).unwrap();
    let s = build_schedule(10_000.0, &flat, &timeline, Disbursement::LumpT0).unwrap();
    ok &= marginal_cost_npv(&s, &flat).abs() <= 1e-9;

    // The annuity retires the balance.
    let rates = RateSet::new(0.05, 0.02, 0.03).unwrap();
    let s = build_schedule(10_000.0, &rates, &timeline, Disbursement::LumpT0).unwrap();
    ok &= s.final_balance.abs() <= 1e-6;

    // Reference case agrees with the independent oracle.
    let cost = marginal_cost_npv(&s, &rates);
    let oracle = cost_oracle(10_000.0, 0.05, 0.02, 0.03);
    ok &= (cost - oracle).abs() <= 1e-6 * oracle;

    // Margin falls strictly as the social discount rate rises.
    let inputs = ProgramInputs {
        principal: 10_000.0,
        rates,
        timeline: timeline.clone(),
        disbursement: Disbursement::LumpT0,
        streams: BenefitStreams::constant(&timeline, 500.0, 300.0, 200.0).unwrap(),
    };
    ok &= evaluate_program(&inputs).is_ok();
    let grid = [0.01, 0.02, 0.03, 0.05, 0.08, 0.12];
    let rows = sensitivity_sweep(&inputs, SweepParameter::SocialDiscountRate, &grid).unwrap();
    ok &= rows.windows(2).all(|w| w[1].margin < w[0].margin);

    verdict("5 loan-subsidy NPV engine", ok);
}

#[test]
fn criterion_6_retiming() {
    let started = Instant::now();
    let u = load("unemployment.csv");
    let n = load("natural_unemployment.csv");
    let cyc = cyclical_unemployment(&u, &n).unwrap();
    let episodes = detect_negative_episodes(&cyc, 4, 0.0).unwrap();
    let window_start = ymd(1948, 1, 1);
    let make = |method| RetimeConfig {
        timing_method: method,
        growth_scheme: GrowthScheme::Geometric,
        w_start: 0.40,
        w_end: 7.25,
    };
    let midpoint = retime(
        &episodes,
        &make(TimingMethod::Midpoint),
        window_start,
        cyc.base().frequency(),
    )
    .unwrap();
    let local_min = retime(
        &episodes,
        &make(TimingMethod::LocalMin),
        window_start,
        cyc.base().frequency(),
    )
    .unwrap();
    let elapsed = started.elapsed();

    let mut ok = midpoint.start_wage() == 0.40 && midpoint.end_wage() == 7.25;
    ok &= midpoint.is_non_decreasing();

    // Every increase lands inside its episode, where the gap is negative.
    for schedule in [&midpoint, &local_min] {
        for (&(d, _), e) in schedule.increases().iter().zip(&episodes) {
            ok &= d >= e.start && d <= e.end;
            ok &= matches!(cyc.base().value_at(d), Some(v) if v < 0.0);
        }
    }

    // Geometric steps share one ratio (the final value is pinned, which
    // changes it by far less than the tolerance).
    let wages: Vec<f64> = midpoint.anchors().iter().map(|&(_, w)| w).collect();
    let g = (7.25f64 / 0.40).powf(1.0 / episodes.len() as f64);
    ok &= wages
        .windows(2)
        .all(|w| (w[1] / w[0] - g).abs() <= 1e-9 * g);

    // The two timing methods differ only in dates.
    let mw: Vec<f64> = midpoint.anchors().iter().map(|&(_, w)| w).collect();
    let lw: Vec<f64> = local_min.anchors().iter().map(|&(_, w)| w).collect();
    ok &= mw == lw;
    ok &= elapsed.as_secs_f64() < 1.0;

    verdict("6 counterfactual wage retiming", ok);
}

#[test]
fn criterion_7_stimulus_targeting() {
    let mut ok = true;

    // Impact and required stimulus invert each other.
    for &(gap, mpc) in &[(100.0, 0.8), (37.5, 0.4), (1e6, 0.95), (3.0, 0.05)] {
        for mode in [ImpactMode::FirstRound, ImpactMode::Multiplier] {
            let s = required_stimulus(gap, mpc, mode).unwrap();
            ok &= (ad_impact(s, mpc, mode).unwrap() - gap).abs() <= 1e-9 * gap;
        }
    }

    ok &= effectiveness_ratio(0.8, 0.4, ImpactMode::FirstRound).unwrap() == 2.0;
    ok &= effectiveness_ratio(0.9, 0.3, ImpactMode::FirstRound).unwrap() == 3.0;

    // Assuming a uniform MPC below the population average over-stimulates.
    let groups = [
        IncomeGroup::new("low_income", 0.8, 0.5),
        IncomeGroup::new("high_income", 0.4, 0.5),
    ];
    let plan = allocate(100.0, &groups, ImpactMode::FirstRound, Some(0.4)).unwrap();
    let naive = plan.naive.unwrap();
    ok &= naive.over_stimulation && naive.overshoot > 0.0;
    ok &= (plan.total_induced_ad - 100.0).abs() <= 1e-9 * 100.0;

    verdict("7 MPC-targeted stimulus", ok);
}

#[test]
fn criterion_8_report_determinism() {
    let tmp = tempfile::tempdir().unwrap();
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut outputs = Vec::new();
    for run in 0..2 {
        let out = tmp.path().join(format!("run{run}"));
        let status = Command::new(env!("CARGO_BIN_EXE_polecon"))
            .current_dir(manifest)
            .args(["report", "--out"])
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success());
        let mut files: Vec<PathBuf> = fs::read_dir(&out)
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| {
                matches!(
                    p.extension().and_then(|e| e.to_str()),
                    Some("csv") | Some("json")
                )
            })
            .collect();
        files.sort();
        let blobs: Vec<(String, Vec<u8>)> = files
            .iter()
            .map(|p| {
                (
                    p.file_name().unwrap().to_string_lossy().into_owned(),
                    fs::read(p).unwrap(),
                )
            })
            .collect();
        outputs.push(blobs);
    }
    let ok = !outputs[0].is_empty() && outputs[0] == outputs[1];
    verdict("8 byte-identical report outputs", ok);
}
