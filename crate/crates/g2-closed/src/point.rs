//! Points `x_α(d) h(t1, t2)` up to the data the closed forms read off.

use crate::ClosedError;
use g2_group::GroupCoord;
use g2_padic::{LocalCubic, LocalCubicType};
use serde::Serialize;
use std::fmt;

/// `t1 = ϖ^n`, `t2 = ϖ^m` and `|d| = q^j` (`j = None` for `d ∈ O`, read as `d = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BranchPoint {
    pub n: i64,
    pub m: i64,
    pub j: Option<i64>,
}

impl BranchPoint {
    pub fn new(n: i64, m: i64, j: Option<i64>) -> Self {
        assert!(j.map_or(true, |j| j >= 1), "|d| = q^j needs j ≥ 1");
        Self { n, m, j }
    }

    pub fn toral(n: i64, m: i64) -> Self {
        Self::new(n, m, None)
    }

    pub fn of(g: &GroupCoord, p: u64) -> Self {
        Self::new(g.n, g.m, g.d_branch(p))
    }

    /// A representative group element with `d = ϖ^{-j}`.
    pub fn representative(&self, p: u64) -> GroupCoord {
        match self.j {
            None => GroupCoord::toral(self.n, self.m),
            Some(j) => GroupCoord::with_d(self.n, self.m, 1, j as u32, p),
        }
    }

    pub fn shifted(&self, dn: i64, dm: i64) -> Self {
        Self { n: self.n + dn, m: self.m + dm, j: self.j }
    }

    /// `d ↦ ϖd`.
    pub fn d_times_uniformizer(&self) -> Self {
        let j = self.j.and_then(|j| (j > 1).then_some(j - 1));
        Self { j, ..*self }
    }
}

impl fmt::Display for BranchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            None => write!(f, "n={},m={},d=0", self.n, self.m),
            Some(j) => write!(f, "n={},m={},|d|=q^{}", self.n, self.m, j),
        }
    }
}

/// Formula as printed, or the variant repaired against the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Printed,
    Corrected,
}

impl Variant {
    pub fn provenance(self) -> &'static str {
        match self {
            Variant::Printed => "paper-formula",
            Variant::Corrected => "corrected-variant",
        }
    }
}

/// Quad or cubic type, with quad normalized to `N = 0`.
pub fn closed_type(e: &LocalCubic) -> Result<LocalCubicType, ClosedError> {
    match e.etype {
        LocalCubicType::Split => Err(ClosedError::SplitUnsupported),
        LocalCubicType::Quad if !e.n_is_zero() => Err(ClosedError::NotNormalized(e.n)),
        t => Ok(t),
    }
}
