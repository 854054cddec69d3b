//! `P_s` and the convolution `F ∗ P_s` through the action of `Id_{Kω1(ϖ)K}`.

use crate::gauss::gauss_closed_at;
use crate::point::{closed_type, BranchPoint, Variant};
use crate::whittaker::f_star_at;
use crate::ClosedError;
use g2_group::{support_conditions, GroupCoord};
use g2_padic::LocalCubic;
use g2_symbolic::{int, je_local, q_half, q_pow, rat, zeta_local, Coef, Poly, PolyX, RatFuncX, XRat};
use serde::Serialize;

/// `P_s = (P0(z) A0 − P1(z) A1) / (ζ(s+3/2) ζ(s+7/2) ζ(s+1/2))`, `z = q^{-s-1/2}`.
#[derive(Clone, Debug)]
pub struct PsData {
    /// Coefficients in z.
    pub p0: Poly<Coef>,
    pub p1: Poly<Coef>,
    /// `1 / (ζ(s+3/2) ζ(s+7/2) ζ(s+1/2))`.
    pub normalizer: RatFuncX,
}

impl PsData {
    /// Substitute `z = q^{-1/2} X`.
    pub fn in_x(p: &Poly<Coef>) -> PolyX {
        PolyX::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c * &q_half(-(k as i32)))
                .collect(),
        )
    }
}

pub fn ps_data() -> PsData {
    let p0 = Poly::new(vec![
        int(1),
        &q_pow(-1) + &int(1),
        q_pow(-1),
        &q_pow(-2) + &q_pow(-1),
        q_pow(-2),
    ]);
    let p1 = Poly::monomial(q_pow(-1), 2);
    let normalizer = [3, 7, 1]
        .iter()
        .map(|&s2| zeta_local(s2, 0, 1).inv().expect("nonzero"))
        .fold(RatFuncX::one(), |a, b| a.mul(&b));
    PsData { p0, p1, normalizer }
}

/// One summand `weight · F(n', m', d')` of `F ∗ Id_{Kω1K}` (GS term excluded).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvolutionTerm {
    pub group: u8,
    pub point: BranchPoint,
    pub weight: Coef,
}

/// The six shifted groups; group 7 is `GS · F(g)`.
pub fn convolution_terms(pt: &BranchPoint) -> Vec<ConvolutionTerm> {
    let term = |group, point, weight| ConvolutionTerm { group, point, weight };
    let mut out = vec![
        term(1, pt.shifted(-1, -2), int(1)),
        term(2, pt.shifted(1, 2), q_pow(6)),
        term(3, pt.shifted(-1, -1).d_times_uniformizer(), q_pow(1)),
        term(5, pt.shifted(0, 1).d_times_uniformizer(), q_pow(4)),
    ];
    // d ↦ (d − s)/ϖ over s ∈ O/(ϖ)
    for (group, base, w) in [(4u8, pt.shifted(0, -1), q_pow(1)), (6, pt.shifted(1, 1), q_pow(4))] {
        match pt.j {
            None => {
                out.push(term(group, base, w.clone()));
                let unit = &q_pow(1) - &int(1);
                out.push(term(group, BranchPoint { j: Some(1), ..base }, &w * &unit));
            }
            Some(j) => out.push(term(group, BranchPoint { j: Some(j + 1), ..base }, &w * &q_pow(1))),
        }
    }
    out.sort_by_key(|t| t.group);
    out
}

/// `(F ∗ P_s)(g)` for `χ = 1`, where `f_eval` is `F` (the factor `j_E` is applied
/// here) and `gs_eval` is GS; zero off the support.
pub fn convolve_ps(
    e: &LocalCubic,
    g: &GroupCoord,
    f_eval: &dyn Fn(&BranchPoint) -> XRat,
    gs_eval: &dyn Fn(&BranchPoint) -> Result<Coef, ClosedError>,
) -> Result<RatFuncX, ClosedError> {
    let t = closed_type(e)?;
    if !support_conditions(e, g) {
        return Ok(RatFuncX::zero());
    }
    let one = rat(1, 1);
    let je = je_local(t).at_c(&one);
    let fs = |pt: &BranchPoint| f_eval(pt).at_c(&one).mul_rat(&je);
    let pt = BranchPoint::of(g, e.p);
    let f = fs(&pt);
    let mut conv = convolution_terms(&pt)
        .iter()
        .fold(XRat::zero(), |acc, t| acc.add(&fs(&t.point).scale(&t.weight)));
    if !f.is_zero() {
        conv = conv.add(&f.scale(&gs_eval(&pt)?));
    }
    let ps = ps_data();
    let p0 = RatFuncX::from_poly(PsData::in_x(&ps.p0));
    let p1 = RatFuncX::from_poly(PsData::in_x(&ps.p1));
    let a1 = f.add(&conv).scale(&q_pow(-3));
    let out = f.mul_rat(&p0).sub(&a1.mul_rat(&p1)).mul_rat(&ps.normalizer);
    out.to_ratfunc()
        .ok_or_else(|| ClosedError::NotPolynomialInX(format!("F ∗ P_s at {pt}")))
}

/// [`convolve_ps`] with the explicit table and GS of the given variant.
pub fn convolve_ps_variant(e: &LocalCubic, g: &GroupCoord, variant: Variant) -> Result<RatFuncX, ClosedError> {
    let t = closed_type(e)?;
    convolve_ps(
        e,
        g,
        &|pt| f_star_at(t, pt, variant).value,
        &|pt| Ok(gauss_closed_at(t, pt, variant)?.value),
    )
}
