//! Truncated `D_s` series from the `E_k` oracle: `D_k = E_k − E_{k−1}` and
//! the coefficient of `X^k` is `D_k q^{-7k/2}`.

use crate::ek::{ek_brute, EnumPlan};
use crate::OracleError;
use g2_group::GroupCoord;
use g2_padic::LocalCubic;
use g2_symbolic::{rat, rat_pow, Coef, SeriesX};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TruncatedSeries {
    pub kmax: i64,
    /// `E_0, ..., E_kmax`.
    #[serde(serialize_with = "crate::ser_rats")]
    pub e: Vec<BigRational>,
    /// `D_0, ..., D_kmax`.
    #[serde(serialize_with = "crate::ser_rats")]
    pub d: Vec<BigRational>,
    pub visits: u64,
    pub ms: u128,
}

impl TruncatedSeries {
    /// Does `series` (at twist 1) agree with `D_k q^{-7k/2}` up to `X^kmax`?
    pub fn matches(&self, series: &SeriesX, p: u64) -> bool {
        (0..=self.kmax as usize).all(|k| {
            coef_at_q(&series.coeff(k), p, 7 * k as i32).as_ref() == Some(&self.d[k])
        })
    }
}

/// `Q^{shift}·c` at `q = p`, `c = 1`; `None` if an odd power of `Q` remains.
pub fn coef_at_q(c: &Coef, p: u64, shift: i32) -> Option<BigRational> {
    let mut acc = BigRational::zero();
    for (ex, co) in c.terms() {
        let h = ex[0] + shift;
        if h % 2 != 0 {
            return None;
        }
        acc += co * rat_pow(&rat(p as i64, 1), (h / 2) as i64);
    }
    Some(acc)
}

pub fn ds_truncated(
    e: &LocalCubic,
    g: &GroupCoord,
    kmax: i64,
    plan: &EnumPlan,
) -> Result<TruncatedSeries, OracleError> {
    let mut out = TruncatedSeries {
        kmax,
        e: Vec::new(),
        d: Vec::new(),
        visits: 0,
        ms: 0,
    };
    let mut prev = BigRational::zero();
    for k in 0..=kmax {
        let r = ek_brute(e, g, k, plan)?;
        out.visits += r.visits;
        out.ms += r.ms;
        out.d.push(&r.value - &prev);
        prev = r.value.clone();
        out.e.push(r.value);
    }
    Ok(out)
}
