//! Haar-measure sums over boxes of residue cells.

use crate::arith::pow_u128;
use crate::cyclo::CycloValue;
use crate::error::LocalFieldError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One coordinate: `|r| ≤ q^radius`, cut into cells `c + p^precision O`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellAxis {
    pub radius: i64,
    pub precision: i64,
}

impl CellAxis {
    pub fn cells(&self, p: u64) -> u128 {
        pow_u128(p, (self.radius + self.precision).max(0) as u32)
    }
}

/// Uniform cell decomposition of a product of balls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellPlan {
    pub p: u64,
    pub axes: Vec<CellAxis>,
    pub budget: u128,
}

/// Digits needed to decide `|f(r)| ≤ q^t` for a polynomial of degree ≤ 2
/// with O-coefficients on `|r| ≤ q^radius`.
pub fn min_precision(radius: i64, t: i64) -> i64 {
    radius + t.abs() + 1
}

impl CellPlan {
    pub fn uniform(p: u64, vars: usize, radius: i64, precision: i64, budget: u128) -> Self {
        Self {
            p,
            axes: vec![CellAxis { radius, precision }; vars],
            budget,
        }
    }

    pub fn cell_count(&self) -> u128 {
        self.axes
            .iter()
            .try_fold(1u128, |acc, a| acc.checked_mul(a.cells(self.p)))
            .unwrap_or(u128::MAX)
    }

    /// Reject plans whose precision is below the rule for the thresholds `ts`.
    pub fn check_precision(&self, ts: &[i64]) -> Result<(), LocalFieldError> {
        for a in &self.axes {
            for &t in ts {
                if a.precision < min_precision(a.radius, t) {
                    return Err(LocalFieldError::InsufficientPrecision(format!(
                        "axis radius {} needs precision {} for threshold {t}, plan has {}",
                        a.radius,
                        min_precision(a.radius, t),
                        a.precision
                    )));
                }
            }
        }
        Ok(())
    }

    fn pow(&self, e: i64) -> BigRational {
        let b = BigRational::from_integer(BigInt::from(self.p));
        if e >= 0 {
            num_traits::pow(b, e as usize)
        } else {
            BigRational::one() / num_traits::pow(b, (-e) as usize)
        }
    }

    /// Measure of a single cell.
    pub fn cell_measure(&self) -> BigRational {
        self.pow(-self.axes.iter().map(|a| a.precision).sum::<i64>())
    }

    fn center(&self, mut idx: u128) -> Vec<BigRational> {
        self.axes
            .iter()
            .map(|a| {
                let n = a.cells(self.p);
                let j = idx % n;
                idx /= n;
                BigRational::from_integer(BigInt::from(j)) * self.pow(-a.radius)
            })
            .collect()
    }
}

/// `Σ_cells integrand(center) · meas(cell)` over cells satisfying `constraints`.
pub fn haar_cell_sum<I, C>(
    plan: &CellPlan,
    integrand: I,
    constraints: C,
) -> Result<CycloValue, LocalFieldError>
where
    I: Fn(&[BigRational]) -> Result<CycloValue, LocalFieldError> + Sync,
    C: Fn(&[BigRational]) -> Result<bool, LocalFieldError> + Sync,
{
    let total = plan.cell_count();
    if total > plan.budget {
        return Err(LocalFieldError::BudgetExceeded {
            needed: total,
            budget: plan.budget,
        });
    }
    let p = plan.p;
    let sum = (0..total as u64)
        .into_par_iter()
        .try_fold(
            || CycloValue::zero(p),
            |acc, idx| {
                let c = plan.center(idx as u128);
                if constraints(&c)? {
                    Ok(acc.add(&integrand(&c)?))
                } else {
                    Ok(acc)
                }
            },
        )
        .try_reduce(|| CycloValue::zero(p), |a, b| Ok(a.add(&b)))?;
    Ok(sum.scale(&plan.cell_measure()))
}
