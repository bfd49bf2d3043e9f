//! File ingestion: CSV datasets of interval grades and JSON loss profiles.

use std::collections::HashSet;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use threeway_core::{Interval, IntervalFuzzySet, IntervalLossProfile, ObjectId};

/// Reads a dataset of rows `id,lo,hi` (header required). Row numbers in
/// errors count data rows from 1.
pub fn ingest_dataset(path: &Path) -> Result<IntervalFuzzySet> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot open dataset {}", path.display()))?;

    let headers = reader.headers().context("dataset has no header")?;
    let names: Vec<&str> = headers.iter().collect();
    if names != ["id", "lo", "hi"] {
        bail!(
            "dataset header must be `id,lo,hi`, got `{}`",
            names.join(",")
        );
    }

    let mut seen = HashSet::new();
    let mut items = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let row = index + 1;
        let record = record.with_context(|| format!("row {row}: malformed CSV"))?;
        if record.len() != 3 {
            bail!("row {row}: expected 3 fields, got {}", record.len());
        }
        let id = ObjectId::new(&record[0]).map_err(|e| anyhow!("row {row}: {e}"))?;
        let lo: f64 = record[1]
            .parse()
            .with_context(|| format!("row {row}: cannot parse lo {:?}", &record[1]))?;
        let hi: f64 = record[2]
            .parse()
            .with_context(|| format!("row {row}: cannot parse hi {:?}", &record[2]))?;
        let grade = Interval::membership(lo, hi).map_err(|e| anyhow!("row {row}: {e}"))?;
        if !seen.insert(id.as_str().to_owned()) {
            bail!("row {row}: duplicate object id {:?}", id.as_str());
        }
        items.push((id, grade));
    }
    IntervalFuzzySet::new(items).map_err(|e| anyhow!("{e}"))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LossValue {
    Scalar(f64),
    Pair([f64; 2]),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LossesFile {
    lambda_e: LossValue,
    lambda_r: LossValue,
    lambda_sd: LossValue,
    lambda_su: LossValue,
}

impl LossValue {
    fn interval(&self, name: &str) -> Result<Interval> {
        let result = match self {
            LossValue::Scalar(value) => Interval::point(*value),
            LossValue::Pair([lo, hi]) => Interval::new(*lo, *hi),
        };
        result.map_err(|e| anyhow!("{name}: {e}"))
    }
}

/// Reads a loss profile from JSON with keys `lambda_e`, `lambda_r`,
/// `lambda_sd`, `lambda_su`; each value is a number or a `[lo, hi]` pair and
/// scalars promote to zero-width intervals.
pub fn ingest_losses(path: &Path) -> Result<IntervalLossProfile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot open losses {}", path.display()))?;
    let file: LossesFile =
        serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    let profile = IntervalLossProfile::new(
        file.lambda_e.interval("lambda_e")?,
        file.lambda_r.interval("lambda_r")?,
        file.lambda_sd.interval("lambda_sd")?,
        file.lambda_su.interval("lambda_su")?,
    )
    .map_err(|e| anyhow!("{e}"))?;
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str, name: &str) -> std::path::PathBuf {
        let path =
            std::env::temp_dir().join(format!("threeway_ingest_{name}_{}", std::process::id()));
        let mut file = std::fs::File::create(&path).unwrap();
        file.write_all(content.as_bytes()).unwrap();
        path
    }

    #[test]
    fn reads_valid_dataset() {
        let path = write_temp("id,lo,hi\nx1,0.1,0.2\nx2,0.6,0.8\n", "ok.csv");
        let set = ingest_dataset(&path).unwrap();
        assert_eq!(set.len(), 2);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn rejects_inverted_row_with_row_number() {
        let path = write_temp(
            "id,lo,hi\nx1,0.1,0.2\nx2,0.6,0.8\nx3,0.3,0.5\nx4,0.8,0.1\n",
            "inv.csv",
        );
        let err = ingest_dataset(&path).unwrap_err().to_string();
        assert!(err.contains("row 4"), "{err}");
        assert!(err.contains("inverted"), "{err}");
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn rejects_duplicate_ids() {
        let path = write_temp("id,lo,hi\nx1,0.1,0.2\nx1,0.6,0.8\n", "dup.csv");
        let err = ingest_dataset(&path).unwrap_err().to_string();
        assert!(err.contains("duplicate"), "{err}");
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn reads_interval_and_scalar_losses() {
        let path = write_temp(
            r#"{"lambda_e":[1,2],"lambda_r":[5,6],"lambda_sd":[3,4],"lambda_su":[3,4]}"#,
            "l1.json",
        );
        let profile = ingest_losses(&path).unwrap();
        assert_eq!(profile.elevate().lo(), 1.0);
        assert_eq!(profile.shadow_up().hi(), 4.0);
        std::fs::remove_file(path).ok();

        let path = write_temp(
            r#"{"lambda_e":1,"lambda_r":1,"lambda_sd":1,"lambda_su":1}"#,
            "l2.json",
        );
        let profile = ingest_losses(&path).unwrap();
        assert!(profile.elevate().is_point());
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn rejects_inverted_and_nonpositive_losses() {
        let path = write_temp(
            r#"{"lambda_e":[2,1],"lambda_r":1,"lambda_sd":1,"lambda_su":1}"#,
            "l3.json",
        );
        let err = ingest_losses(&path).unwrap_err().to_string();
        assert!(err.contains("lambda_e"), "{err}");
        std::fs::remove_file(path).ok();

        let path = write_temp(
            r#"{"lambda_e":[1,2],"lambda_r":0,"lambda_sd":1,"lambda_su":1}"#,
            "l4.json",
        );
        let err = ingest_losses(&path).unwrap_err().to_string();
        assert!(err.contains("lambda_r"), "{err}");
        std::fs::remove_file(path).ok();
    }
}
