//! Acceptance suite. One test per criterion; each prints a pass line via the
//! harness. Worked-example values are certified two ways: proximity to the
//! published decimal values (1e-12, far above representation error and far
//! below any algorithmic error), and bit-exact equality with an independent
//! oracle that evaluates the same operations in exact rational arithmetic
//! and rounds once per operation.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use threeway_core::oracle::{
    closed_form_agreement, exhaustive_v_scan, optimizer_vs_scan, possibility_consistency_suite,
    threshold_range_suite, GridSpec,
};
use threeway_core::{
    decide_possibility, preference_matrix, preference_totals, risk_intervals, Interval,
    IntervalFuzzySet, IntervalLossProfile, ObjectId, Region, Theta,
};

// --- exact rational arithmetic, rounded to nearest-even once per operation

fn rat(value: f64) -> BigRational {
    BigRational::from_float(value).expect("finite")
}

/// Correctly rounded f64 of a rational, round-to-nearest ties-to-even.
fn round_nearest(value: &BigRational) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    let negative = value.is_negative();
    let num = value.numer().abs();
    let den = value.denom().abs();

    // value >= 2^shift ?
    let at_least = |shift: i64| -> bool {
        if shift >= 0 {
            num >= (den.clone() << shift as u64)
        } else {
            (num.clone() << (-shift) as u64) >= den
        }
    };
    let mut exponent = num.bits() as i64 - den.bits() as i64;
    if !at_least(exponent) {
        exponent -= 1;
    }
    if at_least(exponent + 1) {
        exponent += 1;
    }
    assert!(at_least(exponent) && !at_least(exponent + 1));

    // mantissa = round(value * 2^(52 - exponent)) in [2^52, 2^53]
    let shift = 52 - exponent;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num << shift as u64, den)
    } else {
        (num, den << (-shift) as u64)
    };
    let mut mantissa = &scaled_num / &scaled_den;
    let remainder = &scaled_num % &scaled_den;
    let twice: BigInt = remainder << 1u32;
    match twice.cmp(&scaled_den) {
        std::cmp::Ordering::Greater => mantissa += 1,
        std::cmp::Ordering::Equal => {
            if mantissa.bit(0) {
                mantissa += 1;
            }
        }
        std::cmp::Ordering::Less => {}
    }
    let magnitude = scale_by_power_of_two(mantissa.to_f64().expect("<= 2^53"), exponent - 52);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

/// `value * 2^exponent` in exact chunks, avoiding the overflow-then-invert
/// path `powi` takes on large negative exponents.
fn scale_by_power_of_two(mut value: f64, mut exponent: i64) -> f64 {
    while exponent != 0 {
        let step = exponent.clamp(-1000, 1000);
        value *= 2f64.powi(step as i32);
        exponent -= step;
    }
    value
}

/// Half-weight reduction: both halvings are exact, so the one rounding sits
/// on the final sum.
fn oracle_reduce_half(lo: f64, hi: f64) -> f64 {
    round_nearest(&((rat(lo) + rat(hi)) / rat(2.0)))
}

fn oracle_product(a: f64, b: f64) -> f64 {
    round_nearest(&(rat(a) * rat(b)))
}

fn oracle_sub(a: f64, b: f64) -> f64 {
    round_nearest(&(rat(a) - rat(b)))
}

fn oracle_add(a: f64, b: f64) -> f64 {
    round_nearest(&(rat(a) + rat(b)))
}

/// Possibility degree with each intermediate rounded like one machine op.
fn oracle_possibility(x: (f64, f64), y: (f64, f64)) -> f64 {
    let spread = oracle_add(oracle_sub(x.1, x.0), oracle_sub(y.1, y.0));
    if spread == 0.0 {
        return if x.0 > y.0 {
            1.0
        } else if x.0 == y.0 {
            0.5
        } else {
            0.0
        };
    }
    let ratio = round_nearest(&(rat(oracle_sub(y.1, x.0)) / rat(spread)));
    if ratio >= 1.0 {
        0.0
    } else if ratio <= 0.0 {
        1.0
    } else {
        oracle_sub(1.0, ratio)
    }
}

#[test]
fn oracle_rounding_round_trips() {
    for value in [
        0.1,
        0.15,
        0.3,
        0.7,
        1.0,
        4.2,
        1e-12,
        123456.789,
        2.2250738585072014e-308,
    ] {
        assert_eq!(round_nearest(&rat(value)), value);
        assert_eq!(round_nearest(&rat(-value)), -value);
    }
    // a value strictly between two doubles rounds to the nearer one
    let between = rat(1.0) + (rat(1.0) / rat(3.0)) * (rat(f64::EPSILON));
    assert_eq!(round_nearest(&between), 1.0);
}

// --- fixtures shared across criteria

fn example_set() -> IntervalFuzzySet {
    let iv = |lo, hi| Interval::membership(lo, hi).unwrap();
    IntervalFuzzySet::new(vec![
        (ObjectId::new("x1").unwrap(), iv(0.1, 0.2)),
        (ObjectId::new("x2").unwrap(), iv(0.6, 0.8)),
        (ObjectId::new("x3").unwrap(), iv(0.3, 0.5)),
        (ObjectId::new("x4").unwrap(), iv(0.1, 0.8)),
    ])
    .unwrap()
}

fn high_losses() -> IntervalLossProfile {
    let iv = |lo, hi| Interval::new(lo, hi).unwrap();
    IntervalLossProfile::new(iv(1.0, 2.0), iv(5.0, 6.0), iv(3.0, 4.0), iv(3.0, 4.0)).unwrap()
}

fn low_losses() -> IntervalLossProfile {
    let iv = |lo, hi| Interval::new(lo, hi).unwrap();
    IntervalLossProfile::new(iv(5.0, 6.0), iv(1.0, 2.0), iv(3.0, 4.0), iv(3.0, 4.0)).unwrap()
}

/// Certifies one end-to-end interval pipeline run: grade -> reduced m ->
/// risk intervals -> preference matrix -> decision, against the oracle and
/// against the published decimal values.
fn certify_pipeline(
    grade: (f64, f64),
    losses: &IntervalLossProfile,
    paper_m: f64,
    paper_risks: [[f64; 2]; 3],
    paper_matrix: [[f64; 3]; 3],
    expected: Region,
) {
    let m = Interval::membership(grade.0, grade.1)
        .unwrap()
        .reduce(Theta::HALF);
    assert_eq!(m, oracle_reduce_half(grade.0, grade.1));
    assert!((m - paper_m).abs() < 1e-12);

    let risks = risk_intervals(m, losses);
    let loss_bounds = [
        (losses.elevate().lo(), losses.elevate().hi()),
        (losses.reduce().lo(), losses.reduce().hi()),
        if m >= 0.5 {
            (losses.shadow_down().lo(), losses.shadow_down().hi())
        } else {
            (losses.shadow_up().lo(), losses.shadow_up().hi())
        },
    ];
    let weights = [
        oracle_sub(1.0, m),
        m,
        if m >= 0.5 {
            oracle_sub(m, 0.5)
        } else {
            oracle_sub(0.5, m)
        },
    ];
    let computed = [risks.elevate, risks.reduce, risks.shadow];
    for ((interval, (lam_lo, lam_hi)), (weight, paper)) in computed
        .iter()
        .zip(loss_bounds)
        .zip(weights.iter().zip(paper_risks))
    {
        assert_eq!(interval.lo(), oracle_product(*weight, lam_lo));
        assert_eq!(interval.hi(), oracle_product(*weight, lam_hi));
        assert!(
            (interval.lo() - paper[0]).abs() < 1e-12,
            "{interval} vs {paper:?}"
        );
        assert!(
            (interval.hi() - paper[1]).abs() < 1e-12,
            "{interval} vs {paper:?}"
        );
    }

    let matrix = preference_matrix(&risks).to_array();
    let bounds = |i: usize| (computed[i].lo(), computed[i].hi());
    for i in 0..3 {
        assert_eq!(matrix[i][i], 0.5);
        for j in 0..3 {
            if i < j {
                assert_eq!(matrix[i][j], oracle_possibility(bounds(i), bounds(j)));
                assert_eq!(matrix[j][i], 1.0 - matrix[i][j]);
            }
            assert!(
                (matrix[i][j] - paper_matrix[i][j]).abs() < 1e-12,
                "entry ({i},{j}) = {} vs {}",
                matrix[i][j],
                paper_matrix[i][j]
            );
        }
    }

    let totals = preference_totals(&preference_matrix(&risks));
    assert_eq!(totals.sum(), 4.5);
    assert_eq!(totals.best(), expected);
    assert_eq!(decide_possibility(m, losses), expected);
}

// --- the acceptance criteria

#[test]
fn theta_reduction_goldens() {
    let set = example_set();
    let a = Interval::membership(0.1, 0.2).unwrap();
    let b = Interval::membership(0.15, 0.25).unwrap();
    let started = Instant::now();
    let ma = a.reduce(Theta::HALF);
    let mb = b.reduce(Theta::HALF);
    let reduced = set.reduce(Theta::HALF);
    let elapsed = started.elapsed();

    assert_eq!(ma, oracle_reduce_half(0.1, 0.2));
    assert!((ma - 0.15).abs() < 1e-12);
    assert_eq!(mb, 0.2);
    assert_eq!(mb, oracle_reduce_half(0.15, 0.25));

    let grades: Vec<f64> = reduced.grades().collect();
    let inputs = [(0.1, 0.2), (0.6, 0.8), (0.3, 0.5), (0.1, 0.8)];
    let paper = [0.15, 0.7, 0.4, 0.45];
    for ((grade, input), decimal) in grades.iter().zip(inputs).zip(paper) {
        assert_eq!(*grade, oracle_reduce_half(input.0, input.1));
        assert!((grade - decimal).abs() < 1e-12, "{grade} vs {decimal}");
    }
    // the grade published as [0.8, 0.1] is rejected at ingestion
    assert!(Interval::membership(0.8, 0.1).is_err());

    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
}

#[test]
fn interval_pipeline_high_case() {
    certify_pipeline(
        (0.6, 0.8),
        &high_losses(),
        0.7,
        [[0.3, 0.6], [3.5, 4.2], [0.6, 0.8]],
        [[0.5, 0.0, 0.0], [1.0, 0.5, 1.0], [1.0, 0.0, 0.5]],
        Region::Elevate,
    );
}

#[test]
fn interval_pipeline_low_case() {
    certify_pipeline(
        (0.3, 0.5),
        &low_losses(),
        0.4,
        [[3.0, 3.6], [0.4, 0.8], [0.3, 0.4]],
        [[0.5, 1.0, 1.0], [0.0, 0.5, 1.0], [0.0, 0.0, 0.5]],
        Region::Shadow,
    );
    // this matrix lands exactly on the published one
    let m = Interval::membership(0.3, 0.5).unwrap().reduce(Theta::HALF);
    let matrix = preference_matrix(&risk_intervals(m, &low_losses())).to_array();
    assert_eq!(matrix, [[0.5, 1.0, 1.0], [0.0, 0.5, 1.0], [0.0, 0.0, 0.5]]);
}

#[test]
fn closed_form_matches_brute_force() {
    let started = Instant::now();
    let grid = GridSpec::unit(1001).unwrap();
    let report = closed_form_agreement(42, 100, &grid, 1e-9);
    assert_eq!(report.cases, 100);
    assert!(report.is_clean(), "{:#?}", report.violations.first());
    assert!(started.elapsed() < Duration::from_secs(5));
}

#[test]
fn possibility_degree_bulk_properties() {
    let started = Instant::now();
    let report = possibility_consistency_suite(42, 10_000);
    assert_eq!(report.cases, 10_002);
    assert!(report.is_clean(), "{:#?}", report.violations.first());
    assert!(started.elapsed() < Duration::from_secs(10));
}

#[test]
fn regime_table_consistency() {
    let report = possibility_consistency_suite(42, 10_000);
    let table_violations: Vec<_> = report
        .violations
        .iter()
        .filter(|violation| violation.check == "outcome-in-table")
        .collect();
    assert!(table_violations.is_empty(), "{table_violations:#?}");
}

#[test]
fn optimizer_never_beaten_by_grid_scan() {
    let started = Instant::now();
    let report = optimizer_vs_scan(42, 50, 10_000);
    assert_eq!(report.cases, 50);
    assert!(report.is_clean(), "{:#?}", report.violations.first());
    assert!(started.elapsed() < Duration::from_secs(5));

    // spot value: a lone central grade leaves one object in the shadow band
    // whichever balanced threshold is chosen
    let set = threeway_core::ScalarFuzzySet::new(vec![(ObjectId::new("x").unwrap(), 0.5)]).unwrap();
    let scan = exhaustive_v_scan(
        &set,
        &GridSpec {
            points: 10_000,
            lo: 0.5,
            hi: 1.0,
        },
    )
    .unwrap();
    assert_eq!(scan.objective, 1.0);
}

#[test]
fn threshold_ranges_and_scale_invariance() {
    let report = threshold_range_suite(42, 10_000);
    assert_eq!(report.cases, 10_000);
    assert!(report.is_clean(), "{:#?}", report.violations.first());
}

#[test]
fn cli_reports_are_deterministic_and_match_goldens() {
    let binary = env!("CARGO_BIN_EXE_threeway");
    let fixture = |name: &str| {
        Path::new("tests/fixtures")
            .join(name)
            .to_string_lossy()
            .into_owned()
    };
    let run = |losses: &str| {
        let output = Command::new(binary)
            .args([
                "decide-iv",
                "--dataset",
                &fixture("example_grades.csv"),
                "--losses",
                &fixture(losses),
            ])
            .output()
            .expect("binary runs");
        assert!(
            output.status.success(),
            "stderr: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        output.stdout
    };

    let first = run("losses_high.json");
    let second = run("losses_high.json");
    assert_eq!(first, second, "repeated runs must be byte-identical");
    let golden_high = std::fs::read("tests/golden/decide_iv_high.json").unwrap();
    assert_eq!(first, golden_high, "high-case report drifted from golden");

    let low = run("losses_low.json");
    let golden_low = std::fs::read("tests/golden/decide_iv_low.json").unwrap();
    assert_eq!(low, golden_low, "low-case report drifted from golden");

    let report: serde_json::Value = serde_json::from_slice(&first).unwrap();
    let regions: Vec<&str> = report["objects"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["region"].as_str().unwrap())
        .collect();
    assert_eq!(regions[1], "elevate");
    let report: serde_json::Value = serde_json::from_slice(&low).unwrap();
    assert_eq!(report["objects"][2]["region"], "shadow");
}
