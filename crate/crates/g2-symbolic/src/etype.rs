//! Factorization type of the local étale cubic algebra.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// `F×F×F`, `F×K` with K/F unramified quadratic, or the unramified cubic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalCubicType {
    Split,
    Quad,
    Cubic,
}

impl LocalCubicType {
    pub const ALL: [LocalCubicType; 3] = [Self::Split, Self::Quad, Self::Cubic];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Split => "split",
            Self::Quad => "quad",
            Self::Cubic => "cubic",
        }
    }
}

impl fmt::Display for LocalCubicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LocalCubicType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "split" => Ok(Self::Split),
            "quad" => Ok(Self::Quad),
            "cubic" => Ok(Self::Cubic),
            other => Err(format!("unknown etype `{other}` (expected split|quad|cubic)")),
        }
    }
}
