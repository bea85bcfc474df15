//! Run configuration: geometry parameters, per-suite tolerances, grid and
//! sweep sizes, and the master seed. Identical configurations produce
//! byte-identical reports.
//!
//! The config file is flat `key = value` text; `#` starts a comment.
//! Recognized keys mirror the struct fields exactly:
//! `a`, `b`, `l1`, `branch` (`ds`/`ads`), `tol.geometry`, `tol.dynamics`,
//! `tol.symmetry`, `tol.modes`, `grid.min`, `grid.max`, `grid.nodes`,
//! `sweep.points`, `sweep.elements`, `seed`, `format` (`json`/`csv`).

use beltrami_core::geometry::{Branch, GeometryConfig};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Tolerances {
    pub geometry: f64,
    pub dynamics: f64,
    pub symmetry: f64,
    pub modes: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            geometry: 1e-10,
            dynamics: 1e-6,
            symmetry: 1e-6,
            modes: 1e-8,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub a: f64,
    pub b: f64,
    pub l1: f64,
    pub branch: String,
    pub tol: Tolerances,
    pub grid_min: f64,
    pub grid_max: f64,
    pub grid_nodes: usize,
    pub sweep_points: usize,
    pub sweep_elements: usize,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            a: 1.0,
            b: 1.0,
            l1: 1.0,
            branch: "ds".into(),
            tol: Tolerances::default(),
            grid_min: -5.0,
            grid_max: 5.0,
            grid_nodes: 401,
            sweep_points: 1000,
            sweep_elements: 100,
            seed: 42,
            format: OutputFormat::Json,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("{path}: unknown key `{key}` on line {line}")]
    UnknownKey {
        path: String,
        key: String,
        line: usize,
    },
    #[error("{path}: malformed line {line} (expected `key = value`)")]
    Malformed { path: String, line: usize },
    #[error("field `{field}`: {message}")]
    Invalid {
        field: &'static str,
        message: &'static str,
    },
    #[error("field `{field}`: cannot parse `{value}`")]
    Parse { field: &'static str, value: String },
    #[error("cannot read config: {0}")]
    Io(String),
}

impl RunConfig {
    pub fn geometry(&self) -> GeometryConfig {
        GeometryConfig {
            a: self.a,
            b: self.b,
            l1: self.l1,
            branch: self.branch_enum(),
        }
    }

    pub fn branch_enum(&self) -> Branch {
        if self.branch == "ads" {
            Branch::AntiDeSitter
        } else {
            Branch::DeSitter
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (field, v) in [
            ("tol.geometry", self.tol.geometry),
            ("tol.dynamics", self.tol.dynamics),
            ("tol.symmetry", self.tol.symmetry),
            ("tol.modes", self.tol.modes),
        ] {
            if !(v > 0.0) {
                return Err(ConfigError::Invalid {
                    field: leak(field),
                    message: "tolerance must be positive",
                });
            }
        }
        if self.grid_nodes < 17 {
            return Err(ConfigError::Invalid {
                field: "grid.nodes",
                message: "need at least 17 nodes (stencil margin)",
            });
        }
        if !(self.grid_max > self.grid_min) {
            return Err(ConfigError::Invalid {
                field: "grid.max",
                message: "grid.max must exceed grid.min",
            });
        }
        if self.sweep_points == 0 || self.sweep_elements == 0 {
            return Err(ConfigError::Invalid {
                field: "sweep.points",
                message: "sweep sizes must be positive",
            });
        }
        if !(self.branch == "ds" || self.branch == "ads") {
            return Err(ConfigError::Invalid {
                field: "branch",
                message: "branch must be `ds` or `ads`",
            });
        }
        self.geometry()
            .validate()
            .map_err(|_| ConfigError::Invalid {
                field: "a",
                message: "geometry parameters violate the branch sign conditions",
            })
    }

    /// Parse the flat key-value format, starting from defaults.
    pub fn parse(text: &str, path: &str) -> Result<Self, ConfigError> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let Some((key, value)) = stripped.split_once('=') else {
                return Err(ConfigError::Malformed {
                    path: path.into(),
                    line,
                });
            };
            let key = key.trim();
            let value = value.trim();
            macro_rules! num {
                ($field:expr) => {
                    value.parse().map_err(|_| ConfigError::Parse {
                        field: $field,
                        value: value.into(),
                    })?
                };
            }
            match key {
                "a" => cfg.a = num!("a"),
                "b" => cfg.b = num!("b"),
                "l1" => cfg.l1 = num!("l1"),
                "branch" => cfg.branch = value.into(),
                "tol.geometry" => cfg.tol.geometry = num!("tol.geometry"),
                "tol.dynamics" => cfg.tol.dynamics = num!("tol.dynamics"),
                "tol.symmetry" => cfg.tol.symmetry = num!("tol.symmetry"),
                "tol.modes" => cfg.tol.modes = num!("tol.modes"),
                "grid.min" => cfg.grid_min = num!("grid.min"),
                "grid.max" => cfg.grid_max = num!("grid.max"),
                "grid.nodes" => cfg.grid_nodes = num!("grid.nodes"),
                "sweep.points" => cfg.sweep_points = num!("sweep.points"),
                "sweep.elements" => cfg.sweep_elements = num!("sweep.elements"),
                "seed" => cfg.seed = num!("seed"),
                "format" => {
                    cfg.format = match value {
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        _ => {
                            return Err(ConfigError::Parse {
                                field: "format",
                                value: value.into(),
                            })
                        }
                    }
                }
                other => {
                    return Err(ConfigError::UnknownKey {
                        path: path.into(),
                        key: other.into(),
                        line,
                    })
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(e.to_string()))?;
        Self::parse(&text, path)
    }
}

fn leak(s: &str) -> &'static str {
    Box::leak(s.to_string().into_boxed_str())
}
