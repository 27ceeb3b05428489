//! Sweep configuration: a flat JSON object with all momenta as twice-integers.

use std::path::PathBuf;

use angmom_exact::{triangle_ok, HalfInt, TwelveJInput};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Asym,
    Compare,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ExactBackend {
    Surd,
    Bigfloat,
}

fn default_precision() -> usize {
    256
}

fn default_backend() -> ExactBackend {
    ExactBackend::Surd
}

/// One sweep: eleven fixed labels, a `j6` grid, and evaluation options.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepConfig {
    pub twice_j1: i32,
    pub twice_j2: i32,
    pub twice_j12: i32,
    pub twice_j125: i32,
    pub twice_j3: i32,
    pub twice_j4: i32,
    pub twice_j34: i32,
    pub twice_j135: i32,
    pub twice_j13: i32,
    pub twice_j24: i32,
    pub twice_s5: i32,
    pub twice_j6_min: i32,
    pub twice_j6_max: i32,
    pub twice_j6_step: i32,
    pub mode: Mode,
    #[serde(default = "default_backend")]
    pub exact_backend: ExactBackend,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default = "default_precision")]
    pub precision_bits: usize,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("field {field}: {message}")]
    Invalid { field: &'static str, message: String },
}

impl SweepConfig {
    pub fn from_path(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        let cfg: SweepConfig = serde_json::from_str(&text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |field: &'static str, message: String| ConfigError::Invalid { field, message };
        for (field, v) in [
            ("twice_j1", self.twice_j1),
            ("twice_j2", self.twice_j2),
            ("twice_j12", self.twice_j12),
            ("twice_j125", self.twice_j125),
            ("twice_j3", self.twice_j3),
            ("twice_j4", self.twice_j4),
            ("twice_j34", self.twice_j34),
            ("twice_j135", self.twice_j135),
            ("twice_j13", self.twice_j13),
            ("twice_j24", self.twice_j24),
            ("twice_s5", self.twice_s5),
        ] {
            if v < 0 {
                return Err(bad(field, format!("negative twice-integer {v}")));
            }
        }
        if self.twice_j6_step <= 0 {
            return Err(bad("twice_j6_step", "step must be positive".into()));
        }
        if self.twice_j6_step % 2 != 0 {
            return Err(bad(
                "twice_j6_step",
                "step must be an even twice-integer: the parity of j6 is fixed by (j125, j34)".into(),
            ));
        }
        if self.twice_j6_min > self.twice_j6_max {
            return Err(bad("twice_j6_min", "empty j6 range".into()));
        }
        if (self.twice_j125 + self.twice_j34 + self.twice_j6_min) % 2 != 0 {
            return Err(bad(
                "twice_j6_min",
                "j6 grid parity incompatible with the (j125, j34, j6) triangle".into(),
            ));
        }
        let h = HalfInt::from_twice;
        let fixed_triads: [(&'static str, i32, i32, i32); 6] = [
            ("(j1,j2,j12)", self.twice_j1, self.twice_j2, self.twice_j12),
            ("(j3,j4,j34)", self.twice_j3, self.twice_j4, self.twice_j34),
            ("(j1,j3,j13)", self.twice_j1, self.twice_j3, self.twice_j13),
            ("(j2,j4,j24)", self.twice_j2, self.twice_j4, self.twice_j24),
            ("(j12,s5,j125)", self.twice_j12, self.twice_s5, self.twice_j125),
            ("(j13,s5,j135)", self.twice_j13, self.twice_s5, self.twice_j135),
        ];
        for (name, a, b, c) in fixed_triads {
            if !triangle_ok(h(a), h(b), h(c)) {
                return Err(bad(
                    "labels",
                    format!("fixed triad {name} = ({a}/2, {b}/2, {c}/2) violates the triangle rule"),
                ));
            }
        }
        Ok(())
    }

    pub fn input_at(&self, twice_j6: i32) -> TwelveJInput {
        TwelveJInput::from_twice([
            self.twice_j1,
            self.twice_j2,
            self.twice_j12,
            self.twice_j125,
            self.twice_j3,
            self.twice_j4,
            self.twice_j34,
            self.twice_j135,
            self.twice_j13,
            self.twice_j24,
            self.twice_s5,
            twice_j6,
        ])
    }

    pub fn j6_grid(&self) -> Vec<i32> {
        (self.twice_j6_min..=self.twice_j6_max)
            .step_by(self.twice_j6_step as usize)
            .collect()
    }
}
