//! The Gaussian sum GS appearing in the `Id_{Kω1K}` action.

use crate::point::{closed_type, BranchPoint, Variant};
use crate::ClosedError;
use g2_group::GroupCoord;
use g2_padic::{LocalCubic, LocalCubicType};
use g2_symbolic::{int, q_pow, Coef};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaussBranch {
    pub tag: &'static str,
    pub value: Coef,
}

fn row(tag: &'static str, value: Coef) -> Result<GaussBranch, ClosedError> {
    Ok(GaussBranch { tag, value })
}

fn q3m1() -> Coef {
    &q_pow(3) - &int(1)
}

/// Piecewise value of GS; norms are written as exponents of q.
pub fn gauss_closed_at(
    t: LocalCubicType,
    pt: &BranchPoint,
    variant: Variant,
) -> Result<GaussBranch, ClosedError> {
    let (n, m) = (pt.n, pt.m);
    let none = || Err(ClosedError::NoBranch(format!("GS at {pt}")));
    match (t, pt.j) {
        (LocalCubicType::Quad, None) if variant == Variant::Corrected => {
            // v(t2/t1), v(t1³/t2)
            let (va, vb) = (m - n, 3 * n - m);
            match (va, vb) {
                (_, 0) => row("|t1³/t2|=1", int(-1)),
                (a, b) if b > 0 && a > 0 => row("|t1³/t2|<1,|t2/t1|<1", q3m1()),
                (0, b) if b > 0 => row("|t1³/t2|<1,|t2/t1|=1", &q_pow(2) - &int(1)),
                _ => none(),
            }
        }
        (LocalCubicType::Quad, None) => {
            let (a, b) = (2 * n - m, m - 3 * n);
            if b < 0 {
                row("|t1³/t2|<1", q3m1())
            } else if b == 0 && a <= 0 {
                row("|t2/t1²|≤1,|t1³/t2|=1", int(-1))
            } else if b == 0 {
                row("|t2/t1²|>1,|t1³/t2|=1", &q_pow(2) - &int(1))
            } else {
                none()
            }
        }
        (_, None) => {
            let (a, b, c) = (2 * n - m, m - 3 * n, 3 * n - 2 * m);
            if (a <= 0 && b < 0) || (a > 0 && c < 0) {
                row("|t1³/t2|<1 or |t2²/t1³|<1", q3m1())
            } else if (a < 0 && b == 0) || (a > 0 && c == 0) {
                row("|t1³/t2|=1 or |t2²/t1³|=1", int(-1))
            } else if a == 0 && c == 0 {
                row("|t2/t1²|=1,|t2²/t1³|=1", &(-&q_pow(2)) - &int(1))
            } else {
                none()
            }
        }
        (_, Some(j)) => {
            let a = j - 2 * n + m;
            let b = if t == LocalCubicType::Quad { j + n - m } else { 3 * n - 2 * m };
            let c = 3 * j - 3 * n + m;
            if (a <= 0 && b < 0) || (a > 0 && c < 0) {
                row("d∉O,interior", q3m1())
            } else if (a <= 0 && b == 0) || (a > 0 && c == 0) {
                row("d∉O,boundary", int(-1))
            } else {
                row("d∉O,else", &q_pow(1) - &int(1))
            }
        }
    }
}

pub fn gauss_closed(e: &LocalCubic, g: &GroupCoord, variant: Variant) -> Result<GaussBranch, ClosedError> {
    gauss_closed_at(closed_type(e)?, &BranchPoint::of(g, e.p), variant)
}
