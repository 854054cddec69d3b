//! `F` rederived shell by shell: `∫_{αO} ψ(r) dr` plus the shells `|r| > |α|`.

use crate::OracleError;
use g2_group::GroupCoord;
use g2_padic::{arith::vp, psi_rational, shell_integral_closed, CycloValue, LocalCubic, LocalCubicType};
use g2_symbolic::{mono, q_pow, rat, Coef, XRat};
use num_rational::BigRational;
use num_traits::Zero;

/// `∫_{|r| = q^j} ψ(r) dr` by summing ψ over the residue cells `u/p^j + O`.
pub fn shell_brute(j: i64, p: u64) -> BigRational {
    if j <= 0 {
        let q = rat(p as i64, 1);
        return g2_symbolic::rat_pow(&q, j) * (rat(1, 1) - rat(1, p as i64));
    }
    let den = (p as i64).pow(j as u32);
    let mut tot = CycloValue::zero(p);
    for u in (1..den).filter(|u| u % p as i64 != 0) {
        tot = tot.add(&psi_rational(&rat(u, den), p));
    }
    tot.as_rational().expect("sum over a full unit shell")
}

/// `v(α)` from the exact products `∏ (w e + d)` over roots `e` with `|w e + d| > 1`.
pub fn alpha_valuation_exact(e: &LocalCubic, g: &GroupCoord) -> Result<i64, OracleError> {
    let p = e.p;
    let (t1, t2) = (g.t1(p), g.t2(p));
    let d = match g.d_branch(p) {
        Some(_) => g.d.clone(),
        None => BigRational::zero(),
    };
    let w = &t2 / (&t1 * &t1);
    let dd = rat(e.d, 1);
    let nn = rat(e.n, 1);
    let big = |x: &BigRational| vp(x, p).map_or(0, |v| v.min(0));
    let base = vp(&(&t1 * &t1 * &t1 / &t2), p).expect("nonzero");
    match e.etype {
        LocalCubicType::Quad if e.n_is_zero() => {
            let pair = &d * &d + &dd * &w * &w;
            Ok(base + big(&d) + big(&pair))
        }
        LocalCubicType::Cubic => {
            let triple = &d * &d * &d + &dd * &d * &w * &w + &nn * &w * &w * &w;
            Ok(base + big(&triple))
        }
        _ => Err(OracleError::Unsupported(format!("{} with N = {}", e.etype, e.n))),
    }
}

/// `χ_s(ϖ^v) = c^v q^{-5v/2} X^v`.
fn chi_s(v: i64) -> XRat {
    let v = v as i32;
    XRat::monomial(mono(rat(1, 1), -5 * v, v), v)
}

/// `F = χ_s(t2/α) (∫_{αO} ψ + χ_s(α) Σ_{j=1−v}^{1} χ_s(ϖ^j) shell(j))`, zero if `|α| > 1`.
pub fn f_shellpath(e: &LocalCubic, g: &GroupCoord) -> Result<XRat, OracleError> {
    let v = alpha_valuation_exact(e, g)?;
    if v < 0 {
        return Ok(XRat::zero());
    }
    let inner = XRat::from_coef(q_pow(-v as i32));
    let shells = (1 - v..=1).fold(XRat::zero(), |acc, j| {
        let s: Coef = shell_integral_closed(j as i32);
        acc.add(&chi_s(j).scale(&s))
    });
    Ok(chi_s(g.m - v).mul(&inner.add(&chi_s(v).mul(&shells))))
}
