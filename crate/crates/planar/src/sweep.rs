//! Exponent sweeps driven by a TOML or JSON config.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use planar_core::experiments::exponent_sweep;
use planar_core::rational::parse_rational;
use planar_core::sets::ConstructionKind;
use serde::{Deserialize, Serialize};

use crate::report::SCHEMA_VERSION;
use crate::verify::Assertion;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub construction: String,
    /// Exact rational, e.g. `"3/4"`.
    pub alpha: Option<String>,
    pub sizes: Vec<u64>,
    /// Recorded in the output; the constructions themselves are deterministic.
    #[serde(default)]
    pub seed: u64,
    /// Expected slope, checked to within `tolerance`.
    pub expect_slope: Option<f64>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Adds a wall-clock `seconds` column, which makes output vary between runs.
    #[serde(default)]
    pub timing: bool,
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

fn default_tolerance() -> f64 {
    0.2
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

pub fn load_config(path: &Path) -> Result<SweepConfig, ConfigError> {
    let invalid = |message: String| ConfigError::Invalid { path: path.display().to_string(), message };
    let text = std::fs::read_to_string(path).map_err(|e| invalid(e.to_string()))?;
    let config: SweepConfig = if path.extension().is_some_and(|e| e == "json") {
        serde_json::from_str(&text).map_err(|e| invalid(e.to_string()))?
    } else {
        toml::from_str(&text).map_err(|e| invalid(e.to_string()))?
    };
    Ok(config)
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRowView {
    pub n: u64,
    pub size: usize,
    pub multiplicity: usize,
    pub sumset: usize,
    pub productset: usize,
    pub max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub schema_version: u32,
    pub construction: String,
    pub alpha: Option<String>,
    pub seed: u64,
    pub sizes: Vec<u64>,
    pub rows: Vec<SweepRowView>,
    pub slope: f64,
    pub envelope: Option<String>,
    pub theorem_exponent: Option<String>,
    pub theorem_case: Option<&'static str>,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

pub struct SweepOutput {
    pub csv: String,
    pub json: String,
    pub summary: SweepSummary,
}

pub fn run_sweep(config: &SweepConfig) -> anyhow::Result<SweepOutput> {
    let kind: ConstructionKind = config.construction.parse()?;
    let alpha = config.alpha.as_deref().map(parse_rational).transpose()?;
    let start = Instant::now();
    let estimate = exponent_sweep(kind, alpha.as_ref(), &config.sizes)?;
    let elapsed = start.elapsed().as_secs_f64();

    // Rows are measured together; with timing on, each row gets its share of
    // the elapsed time weighted by |A|².
    let weights: Vec<f64> = estimate.rows.iter().map(|r| (r.size as f64).powi(2)).collect();
    let total_weight: f64 = weights.iter().sum();
    let rows: Vec<SweepRowView> = estimate
        .rows
        .iter()
        .zip(&weights)
        .map(|(r, w)| SweepRowView {
            n: r.n,
            size: r.size,
            multiplicity: r.multiplicity,
            sumset: r.sumset,
            productset: r.productset,
            max: r.max(),
            seconds: config.timing.then(|| elapsed * w / total_weight),
        })
        .collect();

    let mut assertions = Vec::new();
    if kind == ConstructionKind::UnitRealDual {
        let mut a = Assertion::new("unit-real sumset and product set have 2n-1 elements");
        for r in &rows {
            a.record(r.sumset as u64 == 2 * r.n - 1 && r.productset as u64 == 2 * r.n - 1, || format!("n = {}", r.n));
        }
        assertions.push(a);
    }
    if let Some(expected) = config.expect_slope {
        let mut a = Assertion::new(format!("slope within {} of {expected}", config.tolerance));
        a.record((estimate.slope - expected).abs() <= config.tolerance, || format!("slope {}", estimate.slope));
        assertions.push(a);
    }
    if let Some(env) = &estimate.envelope {
        let bound = planar_core::diag::rational_to_decimal(env, 6).parse::<f64>().unwrap_or(f64::INFINITY);
        let mut a = Assertion::new(format!("slope at most envelope {env} plus {}", config.tolerance));
        a.record(estimate.slope <= bound + config.tolerance, || format!("slope {}", estimate.slope));
        assertions.push(a);
    }
    if let Some(t) = &estimate.theorem {
        let bound = planar_core::diag::rational_to_decimal(&t.value, 6).parse::<f64>().unwrap_or(0.0);
        let mut a = Assertion::new(format!("slope at least theorem exponent {} minus {}", t.value, config.tolerance));
        a.record(estimate.slope >= bound - config.tolerance, || format!("slope {}", estimate.slope));
        assertions.push(a);
    }

    let mut csv = String::from("n,size,k,sumset,productset,max");
    if config.timing {
        csv.push_str(",seconds");
    }
    csv.push('\n');
    for r in &rows {
        let _ = write!(csv, "{},{},{},{},{},{}", r.n, r.size, r.multiplicity, r.sumset, r.productset, r.max);
        if let Some(s) = r.seconds {
            let _ = write!(csv, ",{s:.6}");
        }
        csv.push('\n');
    }

    let summary = SweepSummary {
        schema_version: SCHEMA_VERSION,
        construction: kind.name().to_string(),
        alpha: alpha.as_ref().map(|a| a.to_string()),
        seed: config.seed,
        sizes: config.sizes.clone(),
        rows,
        slope: estimate.slope,
        envelope: estimate.envelope.as_ref().map(|e| e.to_string()),
        theorem_exponent: estimate.theorem.as_ref().map(|t| t.value.to_string()),
        theorem_case: estimate.theorem.as_ref().map(|t| t.case.formula()),
        passed: assertions.iter().all(Assertion::ok),
        assertions,
    };
    let json = serde_json::to_string_pretty(&summary)? + "\n";
    Ok(SweepOutput { csv, json, summary })
}
