//! Per-subcommand pipelines producing [`Report`]s.

use anyhow::{anyhow, Result};

use threeway_core::oracle::{self, GridSpec, SuiteReport};
use threeway_core::{
    decide_possibility, per_object_error, preference_matrix, preference_totals, reduce_losses,
    region_errors, risk_intervals, risks, shadow_assign, thresholds_from_losses, Interval,
    IntervalFuzzySet, IntervalLossProfile, Region, Theta, ThresholdPair,
};

use crate::report::{
    ConfigEcho, Counts, ObjectRow, RegionErrorsOut, Report, RiskIntervalsOut, RisksOut, Summary,
    ThresholdsOut, TotalsOut,
};

fn option_finite(value: f64) -> Option<f64> {
    value.is_finite().then_some(value)
}

fn count(counts: &mut Counts, region: Region) {
    match region {
        Region::Elevate => counts.elevate += 1,
        Region::Shadow => counts.shadow += 1,
        Region::Reduce => counts.reduce += 1,
    }
}

fn reduced_rows(set: &IntervalFuzzySet, theta: Theta) -> Vec<(String, Interval, f64)> {
    let scalar = set.reduce(theta);
    set.iter()
        .zip(scalar.iter())
        .map(|((id, grade), (_, m))| (id.as_str().to_owned(), grade, m))
        .collect()
}

pub fn cmd_reduce(set: &IntervalFuzzySet, theta: Theta, config: ConfigEcho) -> Report {
    let objects = reduced_rows(set, theta)
        .into_iter()
        .map(|(id, grade, m)| ObjectRow::new(&id, grade.lo(), grade.hi(), m))
        .collect();
    Report {
        command: "reduce",
        config,
        thresholds: None,
        objects,
        summary: None,
        suites: None,
    }
}

pub fn cmd_shadow(
    set: &IntervalFuzzySet,
    theta: Theta,
    explicit: Option<(f64, f64)>,
    config: ConfigEcho,
) -> Result<Report> {
    let scalar = set.reduce(theta);
    let (pair, source, objective) = match explicit {
        Some((alpha, beta)) => {
            let pair = ThresholdPair::new(alpha, beta).map_err(|e| anyhow!("{e}"))?;
            let objective = threeway_core::objective_v(&scalar, &pair);
            (pair, "given", objective)
        }
        None => {
            let best =
                threeway_core::optimize_thresholds_balanced(&scalar).map_err(|e| anyhow!("{e}"))?;
            let pair = ThresholdPair::balanced(best.alpha).map_err(|e| anyhow!("{e}"))?;
            (pair, "optimized", best.objective)
        }
    };

    let mut counts = Counts::default();
    let objects = reduced_rows(set, theta)
        .into_iter()
        .map(|(id, grade, m)| {
            let region = shadow_assign(m, &pair);
            count(&mut counts, region);
            let mut row = ObjectRow::new(&id, grade.lo(), grade.hi(), m);
            row.region = Some(region.name());
            row.shadow_value = Some(region.shadow_label());
            row
        })
        .collect();
    let errors = region_errors(&scalar, &pair);
    Ok(Report {
        command: "shadow",
        config,
        thresholds: Some(ThresholdsOut {
            source,
            alpha: pair.alpha(),
            beta: pair.beta(),
            gamma: None,
            gamma_minus: None,
            gamma_plus: None,
        }),
        objects,
        summary: Some(Summary {
            counts,
            objective: Some(objective),
            region_errors: Some(RegionErrorsOut {
                elevated: errors.elevated,
                reduced: errors.reduced,
                shadow: errors.shadow,
                shadow_half: errors.shadow_half,
            }),
            ..Summary::default()
        }),
        suites: None,
    })
}

pub fn cmd_approx(
    set: &IntervalFuzzySet,
    theta: Theta,
    alpha: f64,
    beta: f64,
    config: ConfigEcho,
) -> Result<Report> {
    let pair = ThresholdPair::new(alpha, beta).map_err(|e| anyhow!("{e}"))?;
    let mut counts = Counts::default();
    let mut total_error = 0.0;
    let objects = reduced_rows(set, theta)
        .into_iter()
        .map(|(id, grade, m)| {
            let region = pair.classify(m);
            let error = per_object_error(m, &pair);
            count(&mut counts, region);
            total_error += error;
            let mut row = ObjectRow::new(&id, grade.lo(), grade.hi(), m);
            row.region = Some(region.name());
            row.value = Some(region.codebook_value());
            row.error = Some(error);
            row
        })
        .collect();
    Ok(Report {
        command: "approx",
        config,
        thresholds: Some(ThresholdsOut {
            source: "given",
            alpha,
            beta,
            gamma: None,
            gamma_minus: None,
            gamma_plus: None,
        }),
        objects,
        summary: Some(Summary {
            counts,
            total_error: Some(total_error),
            ..Summary::default()
        }),
        suites: None,
    })
}

fn derived_thresholds_out(losses: &IntervalLossProfile, theta: Theta) -> Result<ThresholdsOut> {
    let profile = reduce_losses(losses, theta).map_err(|e| anyhow!("{e}"))?;
    let t = thresholds_from_losses(&profile);
    Ok(ThresholdsOut {
        source: "derived",
        alpha: t.alpha,
        beta: t.beta,
        gamma: Some(t.gamma),
        gamma_minus: option_finite(t.gamma_minus),
        gamma_plus: option_finite(t.gamma_plus),
    })
}

pub fn cmd_thresholds(
    losses: &IntervalLossProfile,
    theta: Theta,
    config: ConfigEcho,
) -> Result<Report> {
    Ok(Report {
        command: "thresholds",
        config,
        thresholds: Some(derived_thresholds_out(losses, theta)?),
        objects: Vec::new(),
        summary: None,
        suites: None,
    })
}

pub fn cmd_decide(
    set: &IntervalFuzzySet,
    losses: &IntervalLossProfile,
    theta: Theta,
    config: ConfigEcho,
) -> Result<Report> {
    let profile = reduce_losses(losses, theta).map_err(|e| anyhow!("{e}"))?;
    let derived = thresholds_from_losses(&profile);
    let pair = derived.pair();
    let mut counts = Counts::default();
    let mut total_error = 0.0;
    let mut total_cost = 0.0;
    let objects = reduced_rows(set, theta)
        .into_iter()
        .map(|(id, grade, m)| {
            let region = threeway_core::decide(m, &derived);
            let object_risks = risks(m, &profile);
            let error = per_object_error(m, &pair);
            let cost = match region {
                Region::Elevate => object_risks.elevate,
                Region::Reduce => object_risks.reduce,
                Region::Shadow => object_risks.shadow,
            };
            count(&mut counts, region);
            total_error += error;
            total_cost += cost;
            let mut row = ObjectRow::new(&id, grade.lo(), grade.hi(), m);
            row.region = Some(region.name());
            row.value = Some(region.codebook_value());
            row.error = Some(error);
            row.risks = Some(RisksOut {
                elevate: object_risks.elevate,
                reduce: object_risks.reduce,
                shadow: object_risks.shadow,
                shadow_action: match object_risks.situation {
                    threeway_core::Situation::High => "s_down",
                    threeway_core::Situation::Low => "s_up",
                },
            });
            row.cost = Some(cost);
            row
        })
        .collect();
    Ok(Report {
        command: "decide",
        config,
        thresholds: Some(ThresholdsOut {
            source: "derived",
            alpha: derived.alpha,
            beta: derived.beta,
            gamma: Some(derived.gamma),
            gamma_minus: option_finite(derived.gamma_minus),
            gamma_plus: option_finite(derived.gamma_plus),
        }),
        objects,
        summary: Some(Summary {
            counts,
            total_error: Some(total_error),
            total_cost: Some(total_cost),
            ..Summary::default()
        }),
        suites: None,
    })
}

pub fn cmd_decide_iv(
    set: &IntervalFuzzySet,
    losses: &IntervalLossProfile,
    theta: Theta,
    config: ConfigEcho,
) -> Report {
    let mut counts = Counts::default();
    let mut cost_lo = 0.0;
    let mut cost_hi = 0.0;
    let mut total_error = 0.0;
    let objects = reduced_rows(set, theta)
        .into_iter()
        .map(|(id, grade, m)| {
            let object_risks = risk_intervals(m, losses);
            let matrix = preference_matrix(&object_risks);
            let totals = preference_totals(&matrix);
            let region = totals.best();
            let chosen = match region {
                Region::Elevate => object_risks.elevate,
                Region::Reduce => object_risks.reduce,
                Region::Shadow => object_risks.shadow,
            };
            let error = match region {
                Region::Elevate => 1.0 - m,
                Region::Reduce => m,
                Region::Shadow => (m - 0.5).abs(),
            };
            count(&mut counts, region);
            cost_lo += chosen.lo();
            cost_hi += chosen.hi();
            total_error += error;
            let mut row = ObjectRow::new(&id, grade.lo(), grade.hi(), m);
            row.region = Some(region.name());
            row.value = Some(region.codebook_value());
            row.error = Some(error);
            row.risk_intervals = Some(RiskIntervalsOut {
                elevate: [object_risks.elevate.lo(), object_risks.elevate.hi()],
                reduce: [object_risks.reduce.lo(), object_risks.reduce.hi()],
                shadow: [object_risks.shadow.lo(), object_risks.shadow.hi()],
                situation: match object_risks.situation {
                    threeway_core::Situation::High => "high",
                    threeway_core::Situation::Low => "low",
                },
            });
            row.cost_interval = Some([chosen.lo(), chosen.hi()]);
            row.matrix = Some(matrix.to_array());
            row.totals = Some(TotalsOut {
                elevate: totals.elevate,
                reduce: totals.reduce,
                shadow: totals.shadow,
            });
            debug_assert_eq!(region, decide_possibility(m, losses));
            row
        })
        .collect();
    Report {
        command: "decide-iv",
        config,
        thresholds: None,
        objects,
        summary: Some(Summary {
            counts,
            total_error: Some(total_error),
            total_cost_interval: Some([cost_lo, cost_hi]),
            ..Summary::default()
        }),
        suites: None,
    }
}

pub struct CheckOutcome {
    pub report: Report,
    pub clean: bool,
}

pub fn cmd_check(
    seed: u64,
    cases: usize,
    grid_points: usize,
    epsilon: f64,
    config: ConfigEcho,
) -> Result<CheckOutcome> {
    let grid = GridSpec::unit(grid_points).map_err(|e| anyhow!("{e}"))?;
    let suites: Vec<SuiteReport> = vec![
        oracle::possibility_consistency_suite(seed, cases),
        oracle::closed_form_agreement(seed, 100, &grid, epsilon),
        oracle::optimizer_vs_scan(seed, 50, 10_000),
        oracle::threshold_range_suite(seed, cases),
    ];
    let clean = suites.iter().all(|suite| suite.is_clean());
    Ok(CheckOutcome {
        report: Report {
            command: "check",
            config,
            thresholds: None,
            objects: Vec::new(),
            summary: None,
            suites: Some(suites),
        },
        clean,
    })
}
