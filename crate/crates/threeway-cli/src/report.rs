//! Report model and writers. Reports are deterministic byte-for-byte:
//! struct field order fixes JSON key order, and every float is rendered with
//! 17 significant digits so values round-trip exactly.

use std::io::{self, Write};

use serde::Serialize;

use threeway_core::oracle::SuiteReport;

/// Effective run configuration, echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub theta: f64,
    pub grid_points: usize,
    pub seed: u64,
    pub epsilon: f64,
    pub format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Threshold block: closed forms (with `gamma`) or explicit/optimized pairs.
/// `gamma_minus` and `gamma_plus` are omitted when infinite, which happens
/// exactly when the corresponding admissibility condition holds with
/// equality.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdsOut {
    pub source: &'static str,
    pub alpha: f64,
    pub beta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_minus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_plus: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradeOut {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RisksOut {
    pub elevate: f64,
    pub reduce: f64,
    pub shadow: f64,
    pub shadow_action: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct RiskIntervalsOut {
    pub elevate: [f64; 2],
    pub reduce: [f64; 2],
    pub shadow: [f64; 2],
    pub situation: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct TotalsOut {
    pub elevate: f64,
    pub reduce: f64,
    pub shadow: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObjectRow {
    pub id: String,
    pub grade: GradeOut,
    pub m: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shadow_value: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub risks: Option<RisksOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub risk_intervals: Option<RiskIntervalsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost_interval: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<[[f64; 3]; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub totals: Option<TotalsOut>,
}

impl ObjectRow {
    pub fn new(id: &str, lo: f64, hi: f64, m: f64) -> Self {
        Self {
            id: id.to_owned(),
            grade: GradeOut { lo, hi },
            m,
            region: None,
            value: None,
            shadow_value: None,
            error: None,
            risks: None,
            cost: None,
            risk_intervals: None,
            cost_interval: None,
            matrix: None,
            totals: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Counts {
    pub elevate: usize,
    pub shadow: usize,
    pub reduce: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegionErrorsOut {
    pub elevated: f64,
    pub reduced: f64,
    pub shadow: f64,
    pub shadow_half: f64,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Summary {
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region_errors: Option<RegionErrorsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_cost: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_cost_interval: Option<[f64; 2]>,
}

impl Default for RegionErrorsOut {
    fn default() -> Self {
        Self {
            elevated: 0.0,
            reduced: 0.0,
            shadow: 0.0,
            shadow_half: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<ThresholdsOut>,
    pub objects: Vec<ObjectRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<SuiteReport>>,
}

/// 17 significant digits: enough to reproduce any binary double exactly.
pub fn fmt_float(value: f64) -> String {
    format!("{value:.16e}")
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

pub fn write_json(report: &Report, out: &mut dyn Write) -> anyhow::Result<()> {
    let mut buffer = Vec::new();
    let mut serializer = serde_json::Serializer::with_formatter(&mut buffer, SciFormatter);
    report.serialize(&mut serializer)?;
    buffer.push(b'\n');
    out.write_all(&buffer)?;
    Ok(())
}

/// CSV rendering: `#` comment lines carry the config and the summary, the
/// body is one row per object (or per suite for verification runs).
pub fn write_csv(report: &Report, out: &mut dyn Write) -> anyhow::Result<()> {
    writeln!(out, "# command={}", report.command)?;
    let config = &report.config;
    let format_name = match config.format {
        OutputFormat::Json => "json",
        OutputFormat::Csv => "csv",
    };
    writeln!(
        out,
        "# theta={} grid_points={} seed={} epsilon={} format={}{}",
        fmt_float(config.theta),
        config.grid_points,
        config.seed,
        fmt_float(config.epsilon),
        format_name,
        config
            .cases
            .map(|c| format!(" cases={c}"))
            .unwrap_or_default(),
    )?;
    if let Some(thresholds) = &report.thresholds {
        let mut line = format!(
            "# thresholds source={} alpha={} beta={}",
            thresholds.source,
            fmt_float(thresholds.alpha),
            fmt_float(thresholds.beta)
        );
        if let Some(gamma) = thresholds.gamma {
            line.push_str(&format!(" gamma={}", fmt_float(gamma)));
        }
        line.push_str(&format!(
            " gamma_minus={}",
            thresholds
                .gamma_minus
                .map(fmt_float)
                .unwrap_or_else(|| "-inf".into())
        ));
        line.push_str(&format!(
            " gamma_plus={}",
            thresholds
                .gamma_plus
                .map(fmt_float)
                .unwrap_or_else(|| "inf".into())
        ));
        writeln!(out, "{line}")?;
    }

    if let Some(suites) = &report.suites {
        writeln!(out, "suite,cases,checks,violations")?;
        for suite in suites {
            writeln!(
                out,
                "{},{},{},{}",
                suite.name,
                suite.cases,
                suite.checks,
                suite.violations.len()
            )?;
        }
    } else {
        let columns = csv_columns(report);
        writeln!(out, "{}", columns.join(","))?;
        for row in &report.objects {
            writeln!(out, "{}", csv_row(row, &columns))?;
        }
    }

    if let Some(summary) = &report.summary {
        writeln!(
            out,
            "# counts elevate={} shadow={} reduce={}",
            summary.counts.elevate, summary.counts.shadow, summary.counts.reduce
        )?;
        if let Some(objective) = summary.objective {
            writeln!(out, "# objective={}", fmt_float(objective))?;
        }
        if let Some(errors) = &summary.region_errors {
            writeln!(
                out,
                "# region_errors elevated={} reduced={} shadow={} shadow_half={}",
                fmt_float(errors.elevated),
                fmt_float(errors.reduced),
                fmt_float(errors.shadow),
                fmt_float(errors.shadow_half)
            )?;
        }
        if let Some(total) = summary.total_error {
            writeln!(out, "# total_error={}", fmt_float(total))?;
        }
        if let Some(total) = summary.total_cost {
            writeln!(out, "# total_cost={}", fmt_float(total))?;
        }
        if let Some([lo, hi]) = summary.total_cost_interval {
            writeln!(
                out,
                "# total_cost_interval=[{},{}]",
                fmt_float(lo),
                fmt_float(hi)
            )?;
        }
    }
    Ok(())
}

fn csv_columns(report: &Report) -> Vec<&'static str> {
    let mut columns = vec!["id", "lo", "hi", "m"];
    let probe = report.objects.first();
    let has = |f: fn(&ObjectRow) -> bool| probe.map(f).unwrap_or(false);
    if has(|r| r.region.is_some()) {
        columns.push("region");
    }
    if has(|r| r.shadow_value.is_some()) {
        columns.push("shadow_value");
    }
    if has(|r| r.value.is_some()) {
        columns.push("value");
    }
    if has(|r| r.error.is_some()) {
        columns.push("error");
    }
    if has(|r| r.risks.is_some()) {
        columns.extend([
            "risk_elevate",
            "risk_reduce",
            "risk_shadow",
            "shadow_action",
        ]);
    }
    if has(|r| r.cost.is_some()) {
        columns.push("cost");
    }
    if has(|r| r.risk_intervals.is_some()) {
        columns.extend([
            "risk_elevate_lo",
            "risk_elevate_hi",
            "risk_reduce_lo",
            "risk_reduce_hi",
            "risk_shadow_lo",
            "risk_shadow_hi",
            "situation",
        ]);
    }
    if has(|r| r.matrix.is_some()) {
        columns.extend(["p_er", "p_es", "p_rs"]);
    }
    if has(|r| r.totals.is_some()) {
        columns.extend(["total_elevate", "total_reduce", "total_shadow"]);
    }
    if has(|r| r.cost_interval.is_some()) {
        columns.extend(["cost_lo", "cost_hi"]);
    }
    columns
}

fn csv_row(row: &ObjectRow, columns: &[&'static str]) -> String {
    let mut fields = Vec::with_capacity(columns.len());
    for column in columns {
        let field = match *column {
            "id" => row.id.clone(),
            "lo" => fmt_float(row.grade.lo),
            "hi" => fmt_float(row.grade.hi),
            "m" => fmt_float(row.m),
            "region" => row.region.unwrap_or("").to_owned(),
            "shadow_value" => format!("{:?}", row.shadow_value.unwrap_or("")),
            "value" => row.value.map(fmt_float).unwrap_or_default(),
            "error" => row.error.map(fmt_float).unwrap_or_default(),
            "risk_elevate" => row
                .risks
                .as_ref()
                .map(|r| fmt_float(r.elevate))
                .unwrap_or_default(),
            "risk_reduce" => row
                .risks
                .as_ref()
                .map(|r| fmt_float(r.reduce))
                .unwrap_or_default(),
            "risk_shadow" => row
                .risks
                .as_ref()
                .map(|r| fmt_float(r.shadow))
                .unwrap_or_default(),
            "shadow_action" => row
                .risks
                .as_ref()
                .map(|r| r.shadow_action.to_owned())
                .unwrap_or_default(),
            "cost" => row.cost.map(fmt_float).unwrap_or_default(),
            "risk_elevate_lo" => riv(row, |r| r.elevate[0]),
            "risk_elevate_hi" => riv(row, |r| r.elevate[1]),
            "risk_reduce_lo" => riv(row, |r| r.reduce[0]),
            "risk_reduce_hi" => riv(row, |r| r.reduce[1]),
            "risk_shadow_lo" => riv(row, |r| r.shadow[0]),
            "risk_shadow_hi" => riv(row, |r| r.shadow[1]),
            "situation" => row
                .risk_intervals
                .as_ref()
                .map(|r| r.situation.to_owned())
                .unwrap_or_default(),
            "p_er" => mat(row, 0, 1),
            "p_es" => mat(row, 0, 2),
            "p_rs" => mat(row, 1, 2),
            "total_elevate" => tot(row, |t| t.elevate),
            "total_reduce" => tot(row, |t| t.reduce),
            "total_shadow" => tot(row, |t| t.shadow),
            "cost_lo" => row
                .cost_interval
                .map(|c| fmt_float(c[0]))
                .unwrap_or_default(),
            "cost_hi" => row
                .cost_interval
                .map(|c| fmt_float(c[1]))
                .unwrap_or_default(),
            other => unreachable!("unknown column {other}"),
        };
        fields.push(field);
    }
    fields.join(",")
}

fn riv(row: &ObjectRow, pick: fn(&RiskIntervalsOut) -> f64) -> String {
    row.risk_intervals
        .as_ref()
        .map(|r| fmt_float(pick(r)))
        .unwrap_or_default()
}

fn mat(row: &ObjectRow, i: usize, j: usize) -> String {
    row.matrix.map(|m| fmt_float(m[i][j])).unwrap_or_default()
}

fn tot(row: &ObjectRow, pick: fn(&TotalsOut) -> f64) -> String {
    row.totals
        .as_ref()
        .map(|t| fmt_float(pick(t)))
        .unwrap_or_default()
}

pub fn write_report(report: &Report, out: &mut dyn Write) -> anyhow::Result<()> {
    match report.config.format {
        OutputFormat::Json => write_json(report, out),
        OutputFormat::Csv => write_csv(report, out),
    }
}
