//! The seven subcommands. Each reads its inputs, runs the library, and
//! writes CSV/JSON/SVG artifacts atomically into the output directory.

use std::fs;
use std::path::{Path, PathBuf};

use chrono::Months;
use serde::Serialize;

use polecon::charity::{channel_comparison, giving_response, GivingScenario};
use polecon::dataio::{
    align, deflate, parse_series, summarize_minwage, AlignPolicy, DeflationBase, TimeSeries,
};
use polecon::empowerment::{
    benefits_npv, build_schedule, evaluate_program, marginal_cost_npv, sensitivity_sweep,
    BenefitStreams, ProgramInputs, RateSet,
};
use polecon::fiscal::allocate;
use polecon::games::{
    apply_tax, min_corrective_tax, pure_nash, tragedy_diagnosis, Game2x2,
};
use polecon::gaps::{
    cyclical_unemployment, detect_negative_episodes, output_gap, Episode, GapSeries, GapState,
};
use polecon::minwage::{compare_schedules, retime, RetimeConfig, WageSchedule};

use crate::config::RunConfig;
use crate::svg::{date_num, LinearScale, Svg, HEIGHT, MARGIN, WIDTH};
use crate::{CliError, CliResult};

// ------------------------------------------------------------------ I/O

/// Load a two-column CSV (date column first, one value column) as a series.
fn load_series(path: &Path) -> CliResult<TimeSeries> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let header = text
        .lines()
        .next()
        .ok_or_else(|| CliError::Input(format!("{}: empty file", path.display())))?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    if cols.len() != 2 {
        return Err(CliError::Input(format!(
            "{}: expected two columns, found {}",
            path.display(),
            cols.len()
        )));
    }
    parse_series(&text, cols[1], cols[0])
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn ensure_out_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Internal(format!("cannot create {}: {e}", dir.display())))
}

/// Write via a sibling temp file and rename, so readers never observe a
/// partial artifact.
fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let mut tmp_name = path
        .file_name()
        .ok_or_else(|| CliError::Internal(format!("bad output path {}", path.display())))?
        .to_os_string();
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    fs::write(&tmp, contents)
        .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path)
        .map_err(|e| CliError::Internal(format!("cannot rename to {}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    text.push('\n');
    write_atomic(path, &text)
}

// ----------------------------------------------------------- shared steps

struct GapArtifacts {
    unemployment: TimeSeries,
    natural: TimeSeries,
    output_gap: GapSeries,
    cyclical: GapSeries,
    episodes: Vec<Episode>,
}

fn compute_gaps(cfg: &RunConfig) -> CliResult<GapArtifacts> {
    let gdp = load_series(&cfg.data.gdp)?;
    let potential = load_series(&cfg.data.potential_gdp)?;
    let unemployment = load_series(&cfg.data.unemployment)?;
    let natural = load_series(&cfg.data.natural_unemployment)?;
    let og = output_gap(&gdp, &potential)?;
    let cyc = cyclical_unemployment(&unemployment, &natural)?;
    let episodes =
        detect_negative_episodes(&cyc, cfg.gaps.min_duration, cfg.gaps.entry_tolerance)?;
    Ok(GapArtifacts {
        unemployment,
        natural,
        output_gap: og,
        cyclical: cyc,
        episodes,
    })
}

fn episodes_csv(episodes: &[Episode]) -> String {
    let mut out = String::from("start,end,extremum_date,extremum_value,duration\n");
    for e in episodes {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.start, e.end, e.extremum_date, e.extremum_value, e.duration
        ));
    }
    out
}

fn state_counts(series: &GapSeries, tolerance: f64) -> serde_json::Value {
    let mut recessionary = 0usize;
    let mut inflationary = 0usize;
    let mut balanced = 0usize;
    for (_, _, state) in series.classified(tolerance) {
        match state {
            GapState::Recessionary => recessionary += 1,
            GapState::Inflationary => inflationary += 1,
            GapState::Balanced => balanced += 1,
        }
    }
    serde_json::json!({
        "recessionary": recessionary,
        "inflationary": inflationary,
        "balanced": balanced,
    })
}

fn series_xy(series: &TimeSeries, x: &LinearScale, y: &LinearScale) -> Vec<(f64, f64)> {
    series
        .points()
        .iter()
        .map(|&(d, v)| (x.map(date_num(d)), y.map(v)))
        .collect()
}

fn x_scale_for(series: &TimeSeries) -> LinearScale {
    let d0 = date_num(series.first_date().unwrap());
    let d1 = date_num(series.last_date().unwrap());
    LinearScale::new((d0, d1), (MARGIN, WIDTH - MARGIN))
}

fn value_bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let pad = 0.05 * (hi - lo).max(1e-9);
    (lo - pad, hi + pad)
}

// -------------------------------------------------------------- commands

pub fn cmd_gaps(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let art = compute_gaps(cfg)?;

    let og_path = cfg.out_dir.join("output_gap.csv");
    write_atomic(&og_path, &art.output_gap.base().to_csv())?;
    let cyc_path = cfg.out_dir.join("cyclical_unemployment.csv");
    write_atomic(&cyc_path, &art.cyclical.base().to_csv())?;
    let ep_path = cfg.out_dir.join("episodes.csv");
    write_atomic(&ep_path, &episodes_csv(&art.episodes))?;

    let json_path = cfg.out_dir.join("gaps.json");
    write_json(
        &json_path,
        &serde_json::json!({
            "episodes": art.episodes,
            "min_duration": cfg.gaps.min_duration,
            "output_gap_states": state_counts(&art.output_gap, cfg.gaps.balance_tolerance),
            "cyclical_states": state_counts(&art.cyclical, cfg.gaps.balance_tolerance),
        }),
    )?;

    // Overlay plot: actual vs natural unemployment, negative episodes shaded.
    let x = x_scale_for(&art.unemployment);
    let (lo, hi) = value_bounds(
        art.unemployment
            .values()
            .chain(art.natural.values()),
    );
    let y = LinearScale::new((lo, hi), (HEIGHT - MARGIN, MARGIN));
    let mut svg = Svg::new("Unemployment vs natural rate, negative cyclical episodes shaded");
    for e in &art.episodes {
        svg.shaded_rect(x.map(date_num(e.start)), x.map(date_num(e.end)), "#7fb3d5");
    }
    svg.polyline(&series_xy(&art.unemployment, &x, &y), "#1f4e79");
    svg.polyline(&series_xy(&art.natural, &x, &y), "#c0392b");
    svg.label(MARGIN + 8.0, MARGIN + 16.0, "#1f4e79", "actual unemployment");
    svg.label(MARGIN + 8.0, MARGIN + 32.0, "#c0392b", "natural rate");
    let svg_path = cfg.out_dir.join("gaps.svg");
    write_atomic(&svg_path, &svg.finish())?;

    Ok(vec![og_path, cyc_path, ep_path, json_path, svg_path])
}

pub fn cmd_stimulus(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let s = &cfg.stimulus;
    let plan = allocate(s.gap, &s.groups, s.mode, s.assumed_uniform_mpc)?;

    let mut csv = String::from("group,share,mpc,stimulus,induced_ad\n");
    for a in &plan.allocations {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            a.group.label, a.group.population_share, a.group.mpc, a.stimulus, a.induced_ad
        ));
    }
    let csv_path = cfg.out_dir.join("stimulus_plan.csv");
    write_atomic(&csv_path, &csv)?;
    let json_path = cfg.out_dir.join("stimulus_plan.json");
    write_json(&json_path, &plan)?;
    Ok(vec![csv_path, json_path])
}

pub fn cmd_npv(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let n = &cfg.npv;
    let rates = RateSet::new(n.r_fm, n.r_sl, n.i_social)?;
    let streams = BenefitStreams::constant(&n.timeline, n.hcva, n.wpcs, n.peg)?;
    let inputs = ProgramInputs {
        principal: n.principal,
        rates: rates.clone(),
        timeline: n.timeline.clone(),
        disbursement: n.disbursement,
        streams: streams.clone(),
    };
    let decision = evaluate_program(&inputs)?;
    let schedule = build_schedule(n.principal, &rates, &n.timeline, n.disbursement)?;

    let mut csv = String::from("t,balance,payment\n");
    for row in &schedule.rows {
        csv.push_str(&format!("{},{},{}\n", row.t, row.balance, row.payment));
    }
    let sched_path = cfg.out_dir.join("loan_schedule.csv");
    write_atomic(&sched_path, &csv)?;

    let json_path = cfg.out_dir.join("npv_decision.json");
    write_json(
        &json_path,
        &serde_json::json!({
            "principal": n.principal,
            "rates": rates,
            "disbursement": n.disbursement,
            "annual_payment": schedule.annual_payment(),
            "benefits_npv": benefits_npv(&streams, rates.i_social),
            "costs_npv": marginal_cost_npv(&schedule, &rates),
            "decision": decision,
        }),
    )?;

    let mut files = vec![sched_path, json_path];
    if let Some(sweep) = &n.sweep {
        let rows = sensitivity_sweep(&inputs, sweep.parameter, &sweep.grid)?;
        let mut csv = String::from("value,benefits_npv,costs_npv,margin,passes\n");
        for r in &rows {
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                r.value, r.benefits_npv, r.costs_npv, r.margin, r.passes
            ));
        }
        let sweep_path = cfg.out_dir.join("npv_sweep.csv");
        write_atomic(&sweep_path, &csv)?;
        files.push(sweep_path);
    }
    Ok(files)
}

pub fn cmd_retime(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let art = compute_gaps(cfg)?;
    let actual = WageSchedule::from_series(&load_series(&cfg.data.minwage)?)?;
    let retime_cfg = RetimeConfig {
        timing_method: cfg.retime.timing_method,
        growth_scheme: cfg.retime.growth_scheme,
        w_start: cfg.retime.w_start,
        w_end: cfg.retime.w_end,
    };
    let proposed = retime(
        &art.episodes,
        &retime_cfg,
        cfg.retime.window_start,
        art.cyclical.base().frequency(),
    )?;
    let report = compare_schedules(&actual, &proposed, &art.cyclical);

    let mut files = Vec::new();
    for (name, schedule) in [("actual", &actual), ("proposed", &proposed)] {
        let step_path = cfg.out_dir.join(format!("{name}_schedule.csv"));
        write_atomic(&step_path, &schedule.to_csv())?;
        files.push(step_path);
        let dense = schedule.sample_onto(art.cyclical.base())?;
        let dense_path = cfg.out_dir.join(format!("{name}_schedule_dense.csv"));
        write_atomic(&dense_path, &dense.to_csv())?;
        files.push(dense_path);
    }

    let json_path = cfg.out_dir.join("retime_comparison.json");
    write_json(
        &json_path,
        &serde_json::json!({
            "config": cfg.retime,
            "episodes": art.episodes,
            "comparison": report,
        }),
    )?;
    files.push(json_path);

    // Both wage paths over the cyclical-gap series, episodes shaded.
    let x = x_scale_for(art.cyclical.base());
    let x_end = x.map(date_num(art.cyclical.base().last_date().unwrap()));
    let wage_hi = actual.end_wage().max(proposed.end_wage());
    let yw = LinearScale::new((0.0, 1.1 * wage_hi), (HEIGHT - MARGIN, MARGIN));
    let (clo, chi) = value_bounds(art.cyclical.base().values());
    let yc = LinearScale::new((clo, chi), (HEIGHT - MARGIN, MARGIN));
    let mut svg = Svg::new("Actual vs retimed minimum wage over the cyclical gap");
    for e in &art.episodes {
        svg.shaded_rect(x.map(date_num(e.start)), x.map(date_num(e.end)), "#7fb3d5");
    }
    svg.polyline(&series_xy(art.cyclical.base(), &x, &yc), "#bfbfbf");
    svg.hline(yc.map(0.0), "#8c8c8c");
    let step_points = |s: &WageSchedule| -> Vec<(f64, f64)> {
        s.anchors()
            .iter()
            .map(|&(d, w)| (x.map(date_num(d)).max(MARGIN), yw.map(w)))
            .collect()
    };
    svg.step_path(&step_points(&actual), x_end, "#1f4e79");
    svg.step_path(&step_points(&proposed), x_end, "#c0392b");
    svg.label(MARGIN + 8.0, MARGIN + 16.0, "#1f4e79", "actual schedule");
    svg.label(MARGIN + 8.0, MARGIN + 32.0, "#c0392b", "retimed schedule");
    let svg_path = cfg.out_dir.join("retime.svg");
    write_atomic(&svg_path, &svg.finish())?;
    files.push(svg_path);

    Ok(files)
}

pub fn cmd_game(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let g = &cfg.game;
    let game = Game2x2::new(
        [g.strategy_labels[0].as_str(), g.strategy_labels[1].as_str()],
        g.payoffs,
    )?;
    let diagnosis = tragedy_diagnosis(&game);
    let tax = min_corrective_tax(&game, g.tax_target)?;

    let json_path = cfg.out_dir.join("game_diagnosis.json");
    write_json(
        &json_path,
        &serde_json::json!({
            "game": game,
            "diagnosis": diagnosis,
            "corrective_tax": tax,
        }),
    )?;

    // Human-readable table.
    let labels = &game.strategy_labels;
    let cell = |s1: usize, s2: usize| {
        let (a, b) = game.payoff(s1, s2);
        format!("({a}, {b})")
    };
    let profile_name = |s1: usize, s2: usize| format!("{}/{}", labels[s1], labels[s2]);
    let mut txt = String::new();
    txt.push_str(&format!("{:<12}{:<16}{:<16}\n", "", labels[0], labels[1]));
    for s1 in 0..2 {
        txt.push_str(&format!(
            "{:<12}{:<16}{:<16}\n",
            labels[s1],
            cell(s1, 0),
            cell(s1, 1)
        ));
    }
    txt.push('\n');
    if diagnosis.nash.is_empty() {
        txt.push_str("pure Nash equilibria: none\n");
    } else {
        let names: Vec<String> = diagnosis
            .nash
            .iter()
            .map(|p| format!("{} {}", profile_name(p.s1, p.s2), cell(p.s1, p.s2)))
            .collect();
        txt.push_str(&format!("pure Nash equilibria: {}\n", names.join("; ")));
    }
    let bso = &diagnosis.bso.profile;
    txt.push_str(&format!(
        "best social outcome: {} (sum {})\n",
        profile_name(bso.s1, bso.s2),
        bso.payoff_sum()
    ));
    txt.push_str(&format!("efficiency loss: {}\n", diagnosis.efficiency_loss));
    txt.push_str(&format!("tragedy of the commons: {}\n", diagnosis.is_tragedy));
    txt.push_str(&format!(
        "corrective tax on '{}': infimum {} ({})\n",
        tax.taxed_strategy,
        tax.infimum_tau,
        if tax.strict_above {
            "indifference at the infimum, strict selection above it"
        } else {
            "already selected at the infimum"
        }
    ));
    let txt_path = cfg.out_dir.join("game_diagnosis.txt");
    write_atomic(&txt_path, &txt)?;

    // Tax sweep: equilibria as the tax on the taxed strategy rises.
    let step = g.tax_sweep_step;
    let n_to_infimum = if step > 0.0 {
        (tax.infimum_tau / step).ceil() as usize
    } else {
        0
    };
    let mut csv = String::from("tau,pure_nash,target_selected\n");
    for k in 0..=(n_to_infimum + g.tax_sweep_extra_steps) {
        let tau = k as f64 * step;
        let taxed = apply_tax(&game, &tax.taxed_strategy, tau)?;
        let ne = pure_nash(&taxed);
        let names: Vec<String> = ne.iter().map(|p| profile_name(p.s1, p.s2)).collect();
        let selected = ne.len() == 1 && (ne[0].s1, ne[0].s2) == (g.tax_target, g.tax_target);
        csv.push_str(&format!("{tau},{},{selected}\n", names.join(";")));
    }
    let sweep_path = cfg.out_dir.join("game_tax_sweep.csv");
    write_atomic(&sweep_path, &csv)?;

    Ok(vec![json_path, txt_path, sweep_path])
}

pub fn cmd_charity(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let c = &cfg.charity;
    let scenario = GivingScenario::new(
        c.baseline_giving,
        c.baseline_price,
        c.new_price,
        c.elasticity,
        c.mode,
    )?;
    let response = giving_response(&scenario);
    let induced = (response.new_giving - c.baseline_giving).max(0.0);
    let channels = channel_comparison(c.public_transfer, c.leak, c.incentive_cost, induced)?;

    let json_path = cfg.out_dir.join("charity.json");
    write_json(
        &json_path,
        &serde_json::json!({
            "scenario": scenario,
            "response": response,
            "induced_giving": induced,
            "channels": channels,
        }),
    )?;
    Ok(vec![json_path])
}

/// Everything at once, plus the minimum-wage history statistics and an
/// index of all artifacts.
pub fn cmd_report(cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    ensure_out_dir(&cfg.out_dir)?;
    let mut files = Vec::new();
    files.extend(cmd_gaps(cfg)?);
    files.extend(cmd_stimulus(cfg)?);
    files.extend(cmd_npv(cfg)?);
    files.extend(cmd_retime(cfg)?);
    files.extend(cmd_game(cfg)?);
    files.extend(cmd_charity(cfg)?);

    // Nominal and real minimum-wage history.
    let nominal = load_series(&cfg.data.minwage)?;
    let cpi = load_series(&cfg.data.cpi)?;
    let (nominal_monthly, cpi_aligned) =
        align(&nominal, &cpi, AlignPolicy::StepInterpolateAOntoB)?;
    let real = deflate(&nominal_monthly, &cpi_aligned, DeflationBase::IndexBase)?;
    let window_end = cpi
        .last_date()
        .unwrap()
        .checked_add_months(Months::new(1))
        .unwrap();
    let stats = summarize_minwage(&nominal, &real, window_end)?;

    let real_path = cfg.out_dir.join("real_minimum_wage.csv");
    write_atomic(&real_path, &real.to_csv())?;
    files.push(real_path);

    let stats_json = cfg.out_dir.join("minwage_stats.json");
    write_json(&stats_json, &stats)?;
    files.push(stats_json);

    let mut txt = String::new();
    txt.push_str(&format!("distinct_count={}\n", stats.distinct_count));
    txt.push_str(&format!("change_count={}\n", stats.change_count));
    txt.push_str(&format!("avg_nominal_by_count={}\n", stats.avg_nominal_by_count));
    txt.push_str(&format!(
        "avg_nominal_duration_weighted={}\n",
        stats.avg_nominal_duration_weighted
    ));
    txt.push_str(&format!("min_nominal={}\n", stats.min_nominal));
    txt.push_str(&format!("max_nominal={}\n", stats.max_nominal));
    txt.push_str(&format!(
        "min_real={} ({})\n",
        stats.min_real.value, stats.min_real.date
    ));
    txt.push_str(&format!(
        "max_real={} ({})\n",
        stats.max_real.value, stats.max_real.date
    ));
    txt.push_str(&format!(
        "max_min_real_ratio={}\n",
        stats.max_real.value / stats.min_real.value
    ));
    txt.push_str(&format!("avg_real={}\n", stats.avg_real));
    txt.push_str(&format!("avg_duration_years={}\n", stats.avg_duration_years));
    let stats_txt = cfg.out_dir.join("minwage_stats.txt");
    write_atomic(&stats_txt, &txt)?;
    files.push(stats_txt);

    // Index last, listing every artifact by file name.
    let mut names: Vec<String> = files
        .iter()
        .filter_map(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .collect();
    names.sort();
    let index_path = cfg.out_dir.join("index.json");
    write_json(&index_path, &serde_json::json!({ "artifacts": names }))?;
    files.push(index_path);

    Ok(files)
}
