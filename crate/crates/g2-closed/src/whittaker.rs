//! The value `F(Ψ_E, χ, g, s)` of the degenerate Whittaker functional.

use crate::point::{closed_type, BranchPoint, Variant};
use crate::ClosedError;
use g2_group::{support_conditions, GroupCoord};
use g2_padic::{LocalCubic, LocalCubicType};
use g2_symbolic::{mono, q_pow, rat, zeta_local, RatFuncX, XRat};
use serde::Serialize;

/// `χ_s(ϖ^v) = c^v q^{-v(s+5/2)} = c^v q^{-5v/2} X^v`.
pub fn chi_s(v: i64) -> XRat {
    let v = v as i32;
    XRat::monomial(mono(rat(1, 1), -5 * v, v), v)
}

/// `(q^e)^{a s + b2/2}` for `χ = 1`.
fn norm_pow(e: i64, a: i64, b2: i64) -> XRat {
    XRat::monomial(mono(rat(1, 1), (e * b2) as i32, 0), (-e * a) as i32)
}

/// `L(s+3/2, χ) / L(s+5/2, χ)`.
fn ratio(twist: i32) -> RatFuncX {
    zeta_local(3, twist, 1)
        .div(&zeta_local(5, twist, 1))
        .expect("Euler factors are nonzero")
}

/// `v(α)` for `α = (t1³/t2)·∏_{|w e + d| > 1}(w e + d)`, `w = t2/t1²`.
pub fn alpha_valuation(t: LocalCubicType, pt: &BranchPoint) -> i64 {
    let vw = pt.m - 2 * pt.n;
    let base = 3 * pt.n - pt.m;
    match (t, pt.j) {
        (LocalCubicType::Quad, None) => base + 2 * vw.min(0),
        (LocalCubicType::Quad, Some(j)) => base - j + 2 * vw.min(-j),
        (_, None) => base + 3 * vw.min(0),
        (_, Some(j)) => base + 3 * vw.min(-j),
    }
}

/// `0` if `|α| > 1`, else `χ_s(t2/α) L(s+3/2,χ)/L(s+5/2,χ) (|α| − χ_s(ϖα) q)`.
pub fn f_unnorm_at(t: LocalCubicType, pt: &BranchPoint) -> XRat {
    let va = alpha_valuation(t, pt);
    if va < 0 {
        return XRat::zero();
    }
    let inner = XRat::from_coef(q_pow(-va as i32)).sub(&chi_s(1 + va).scale(&q_pow(1)));
    chi_s(pt.m - va).mul(&inner).mul_rat(&ratio(1))
}

/// `F` at `g`; zero off the support.
pub fn f_unnorm(e: &LocalCubic, g: &GroupCoord) -> Result<XRat, ClosedError> {
    let t = closed_type(e)?;
    if !support_conditions(e, g) {
        return Ok(XRat::zero());
    }
    Ok(f_unnorm_at(t, &BranchPoint::of(g, e.p)))
}

/// A row of the explicit table for `χ = 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FBranch {
    pub tag: &'static str,
    pub value: XRat,
}

fn row(tag: &'static str, value: XRat) -> FBranch {
    FBranch { tag, value }
}

/// The explicit piecewise table for `χ = 1`, after `5s ↦ s + 5/2`.
pub fn f_star_at(t: LocalCubicType, pt: &BranchPoint, variant: Variant) -> FBranch {
    if variant == Variant::Corrected && alpha_valuation(t, pt) < 0 {
        return row("|α|>1", XRat::zero());
    }
    let (n, m) = (pt.n, pt.m);
    let pre = ratio(0);
    let tail = |e: i64| XRat::one().sub(&norm_pow(e, 1, 3).mul(&norm_pow(1, -1, -3)));
    let quad = t == LocalCubicType::Quad;
    let value = |v: XRat| v.mul_rat(&pre);
    match pt.j {
        None if m - 2 * n >= 0 => row(
            "d∈O,|t2/t1²|≤1",
            value(norm_pow(-m, 2, 8).mul(&norm_pow(-n, -3, -9)).mul(&tail(m - 3 * n))),
        ),
        None if quad => row(
            "d∈O,|t2/t1²|>1",
            value(XRat::from_coef(q_pow(-m as i32)).mul(&norm_pow(-n, 1, 3)).mul(&tail(n - m))),
        ),
        None => row(
            "d∈O,|t2/t1²|>1",
            value(norm_pow(-m, -1, -1).mul(&norm_pow(-n, 3, 9)).mul(&tail(3 * n - 2 * m))),
        ),
        Some(j) => {
            let a = j - 2 * n + m;
            let b = if quad { j + n - m } else { 3 * n - 2 * m };
            let c = 3 * j - 3 * n + m;
            if a <= 0 && b <= 0 {
                if quad {
                    row(
                        "d∉O,|dt1²/t2|≤1,|dt2/t1|≤1",
                        value(XRat::from_coef(q_pow(-m as i32)).mul(&norm_pow(j + n, -1, -3)).mul(&tail(b))),
                    )
                } else {
                    row(
                        "d∉O,|dt1²/t2|≤1,|t2²/t1³|≤1",
                        value(norm_pow(-m, -1, -1).mul(&norm_pow(-n, 3, 9)).mul(&tail(b))),
                    )
                }
            } else if a > 0 && c <= 0 {
                row(
                    "d∉O,|dt1²/t2|>1,|d³t1³/t2|≤1",
                    value(norm_pow(-m, 2, 8).mul(&norm_pow(j - n, -3, -9)).mul(&tail(c))),
                )
            } else {
                row("d∉O,zero", XRat::zero())
            }
        }
    }
}

/// The explicit table at `g` (no support guard: the table covers it).
pub fn f_star(e: &LocalCubic, g: &GroupCoord, variant: Variant) -> Result<FBranch, ClosedError> {
    let t = closed_type(e)?;
    Ok(f_star_at(t, &BranchPoint::of(g, e.p), variant))
}
