//! Run configuration: a flat key-value config file with command-line
//! overrides, so every run is reproducible without environment coupling.

use std::path::Path;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use comvar::{FieldSpec, GbConfig, DEFAULT_PRIME};

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Coefficient field for basis computations (prime field by default;
    /// the oracle side always works over the rationals).
    pub field: FieldSpec,
    pub seed: u64,
    pub budget_pairs: u64,
    pub budget_seconds: Option<f64>,
    pub workers: usize,
    pub include_heavy: bool,
    pub certify_q: bool,
    /// Restrict scenario sweeps to a single tuple length.
    pub r_override: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldSpec::prime(DEFAULT_PRIME).expect("default prime"),
            seed: 42,
            budget_pairs: 1_000_000,
            budget_seconds: None,
            workers: std::thread::available_parallelism()
                .map(|n| n.get().min(8))
                .unwrap_or(4),
            include_heavy: false,
            certify_q: false,
            r_override: None,
        }
    }
}

impl RunConfig {
    pub fn gb_config(&self) -> GbConfig {
        GbConfig {
            max_pairs: self.budget_pairs,
            max_time: self.budget_seconds.map(Duration::from_secs_f64),
        }
    }

    /// Applies one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "field" => self.field = parse_field(value)?,
            "seed" => self.seed = value.parse().context("seed must be an integer")?,
            "budget-pairs" => {
                self.budget_pairs = value.parse().context("budget-pairs must be an integer")?
            }
            "budget-seconds" => {
                self.budget_seconds =
                    Some(value.parse().context("budget-seconds must be a number")?)
            }
            "workers" => self.workers = value.parse().context("workers must be an integer")?,
            "include-heavy" => self.include_heavy = parse_bool(value)?,
            "certify-q" => self.certify_q = parse_bool(value)?,
            "r" => self.r_override = Some(value.parse().context("r must be an integer")?),
            other => bail!("unknown config key `{other}`"),
        }
        Ok(())
    }

    /// Loads assignments from a flat key-value file. Lines are
    /// `key = value`; `#` starts a comment.
    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("{}:{}: expected key = value", path.display(), lineno + 1))?;
            self.set(key.trim(), value.trim())
                .with_context(|| format!("{}:{}", path.display(), lineno + 1))?;
        }
        Ok(())
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    if s == "q" || s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("p=") {
        let p: u64 = p.parse().context("field prime must be an integer")?;
        return Ok(FieldSpec::prime(p)?);
    }
    bail!("field must be `q` or `p=<prime>`, got `{s}`")
}

pub fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        other => bail!("expected a boolean, got `{other}`"),
    }
}
