use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use gkpcb_core::Grid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig2a,
    Fig2b,
    Fig3b,
    Custom,
}

/// dB range start..=stop in the given step.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DbRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl DbRange {
    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            let v = self.start + self.step * i as f64;
            if v > self.stop + 1e-9 {
                break;
            }
            out.push(v);
            i += 1;
        }
        out
    }
}

/// Commensurate grid shape: x_max = halfwidth_units * sqrt(pi) with
/// samples_per_rootpi lattice points per sqrt(pi).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GridShape {
    pub halfwidth_units: usize,
    pub samples_per_rootpi: usize,
}

impl GridShape {
    pub fn build(&self) -> anyhow::Result<Grid> {
        Grid::from_lattice(
            self.halfwidth_units,
            2 * self.halfwidth_units * self.samples_per_rootpi,
        )
        .context("invalid grid shape")
    }
}

fn default_grid() -> GridShape {
    GridShape { halfwidth_units: 128, samples_per_rootpi: 256 }
}

fn default_two_mode_grid() -> GridShape {
    GridShape { halfwidth_units: 32, samples_per_rootpi: 32 }
}

fn default_db_range() -> DbRange {
    DbRange { start: 10.0, stop: 30.0, step: 2.0 }
}

fn default_ratios() -> Vec<f64> {
    vec![1.0, 5.0]
}

fn default_k_max() -> i64 {
    gkpcb_core::DEFAULT_K_MAX
}

fn default_out_dir() -> PathBuf {
    PathBuf::from("out")
}

/// One JSON document drives a run; command-line flags override file values.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub figure: FigureId,
    /// Squeezing of the x-quadrature; delta_p is set via `ratios`.
    #[serde(default = "default_db_range")]
    pub db_x: DbRange,
    /// delta_p / delta_x values to sweep.
    #[serde(default = "default_ratios")]
    pub ratios: Vec<f64>,
    #[serde(default = "default_grid")]
    pub grid: GridShape,
    #[serde(default = "default_two_mode_grid")]
    pub two_mode_grid: GridShape,
    #[serde(default = "default_k_max")]
    pub k_max: i64,
    /// The teleportation curve costs a full two-mode run per point.
    #[serde(default)]
    pub include_teleport: bool,
    #[serde(default = "default_out_dir")]
    pub out_dir: PathBuf,
}

impl SweepConfig {
    pub fn load(path: &Path, out_override: Option<PathBuf>) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg: SweepConfig = serde_json::from_str(&text).context("parsing config JSON")?;
        if let Some(out) = out_override {
            cfg.out_dir = out;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if !self.db_x.step.is_finite() || self.db_x.step <= 0.0 {
            bail!("db_x.step must be positive");
        }
        if self.db_x.values().is_empty() {
            bail!("db_x range is empty");
        }
        if self.ratios.is_empty() {
            bail!("ratios must be nonempty");
        }
        if self.ratios.iter().any(|r| !r.is_finite() || *r <= 0.0) {
            bail!("ratios must be positive");
        }
        if self.k_max < 1 {
            bail!("k_max must be >= 1");
        }
        self.grid.build()?;
        let tm = self.two_mode_grid.build()?;
        if !tm.is_self_dual() {
            bail!("two_mode_grid must be self-dual (halfwidth_units == samples_per_rootpi)");
        }
        Ok(())
    }

    /// Reproducibility sidecar: the fully resolved configuration.
    pub fn manifest_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("config serializes");
        v["tool"] = serde_json::json!({
            "name": "gkpcb",
            "version": env!("CARGO_PKG_VERSION"),
        });
        serde_json::to_string_pretty(&v).expect("manifest serializes") + "\n"
    }
}
