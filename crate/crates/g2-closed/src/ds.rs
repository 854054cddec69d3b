//! The spherical Whittaker-type integral `D_s^{Ψ_E}` on `UTK`.

use crate::point::{closed_type, BranchPoint};
use crate::ClosedError;
use g2_group::GroupCoord;
use g2_padic::LocalCubic;
use g2_symbolic::{int, q_half, q_pow, Coef, RatFuncX};

/// Table value with `X' = q^{-7/2} X`; `n_zero` selects the `N = 0` table.
pub fn ds_closed_at(n_zero: bool, pt: &BranchPoint) -> RatFuncX {
    let (n, m) = (pt.n, pt.m);
    if pt.j.is_some() || n < 0 || m < n || m > 3 * n || (!n_zero && 2 * m < 3 * n) {
        return RatFuncX::zero();
    }
    let xp = RatFuncX::monomial(q_half(-7), 1);
    let one_minus = |k: i32| RatFuncX::one().sub(&RatFuncX::monomial(q_half(-k), 1));
    let head = xp.pow(n as u32).mul(&one_minus(7));
    if m == 2 * n {
        return if n_zero { head } else { head.mul(&one_minus(3)) };
    }
    if m > 2 * n || !n_zero {
        return RatFuncX::zero();
    }
    head.mul(&one_minus(3)).scale(&q_pow((2 * n - m) as i32))
}

/// `D_s^{Ψ_E}(g)`; zero for `g ∉ UTK`.
pub fn ds_closed(e: &LocalCubic, g: &GroupCoord) -> Result<RatFuncX, ClosedError> {
    closed_type(e)?;
    Ok(ds_closed_at(e.n_is_zero(), &BranchPoint::of(g, e.p)))
}

/// `E_k(g)`, the per-`k` values behind the table: `D_s = Σ (E_k − E_{k−1}) X'^k`.
pub fn ek_closed_at(n_zero: bool, pt: &BranchPoint, k: i64) -> Coef {
    let (n, m) = (pt.n, pt.m);
    if pt.j.is_some() || n < 0 || m < n || m > 3 * n || (!n_zero && 2 * m < 3 * n) || k < n {
        return int(0);
    }
    match (m == 2 * n, m < 2 * n, k - n) {
        (true, _, 0) => int(1),
        (true, _, 1) if !n_zero => -q_pow(2),
        (false, true, 0) if n_zero => q_pow((2 * n - m) as i32),
        (false, true, 1) if n_zero => -q_pow((2 * n - m + 2) as i32),
        _ => int(0),
    }
}

pub fn ek_closed(e: &LocalCubic, g: &GroupCoord, k: i64) -> Result<Coef, ClosedError> {
    closed_type(e)?;
    Ok(ek_closed_at(e.n_is_zero(), &BranchPoint::of(g, e.p), k))
}
