//! The three special integrals, by enumeration of residue cells.

use g2_padic::{psi_rational, CycloValue, LocalCubic};
use g2_symbolic::rat;
use num_rational::BigRational;

/// Cell centres `u / p` of `ϖ^{-1}O^×` with `u` mod `p^{1+digits}`, each cell of
/// measure `p^{-digits}`.
fn shell_cells(p: u64, digits: u32) -> impl Iterator<Item = BigRational> + Clone {
    let top = (p as i64).pow(1 + digits);
    (1..top).filter(move |u| u % p as i64 != 0).map(move |u| rat(u, p as i64))
}

fn cyclo_total(p: u64, digits: u32, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> BigRational {
    let w = rat(1, (p as i64).pow(2 * digits));
    let mut tot = CycloValue::zero(p);
    for a in shell_cells(p, digits) {
        for b in shell_cells(p, digits) {
            tot = tot.add(&psi_rational(&f(&a, &b), p));
        }
    }
    tot.scale(&w).as_rational().expect("Galois-stable sum")
}

/// `∫_{(ϖ^{-1}O^×)²} ψ(D r2 + r3²/r2) dr2 dr3`.
pub fn quad_integral_brute(e: &LocalCubic, digits: u32) -> BigRational {
    let d = rat(e.d, 1);
    cyclo_total(e.p, digits, |r2, r3| &d * r2 + r3 * r3 / r2)
}

/// `∫_{(ϖ^{-1}O^×)²} ψ(N r2²/r3 + D r2 + r3²/r2) dr2 dr3`.
pub fn field_integral_brute(e: &LocalCubic, digits: u32) -> BigRational {
    let (d, n) = (rat(e.d, 1), rat(e.n, 1));
    cyclo_total(e.p, digits, |r2, r3| &n * r2 * r2 / r3 + &d * r2 + r3 * r3 / r2)
}

/// `∫_{|x|,|y|,|xy| ≤ q} ψ(x + y) dx dy`.
///
/// `x` runs over cells of radius `q^{-digits}` in `ϖ^{-1}O`; on each the `y`-set
/// is a ball of radius `q^{min(1, 1 − v(x))}`, whose character integral is its
/// volume or 0.
pub fn box_integral_brute(p: u64, digits: u32) -> BigRational {
    let top = (p as i64).pow(1 + digits);
    let cell = rat(1, (p as i64).pow(digits));
    let mut tot = CycloValue::zero(p);
    for a in 0..top {
        let x = rat(a, p as i64);
        let vx = g2_padic::arith::vp(&x, p).map_or(digits as i64, |v| v.min(digits as i64));
        let radius = 1.min(1 + vx);
        if radius > 0 {
            continue;
        }
        let y_vol = rat_pow_p(p, radius);
        tot = tot.add(&psi_rational(&x, p).scale(&(&cell * y_vol)));
    }
    tot.as_rational().expect("Galois-stable sum")
}

fn rat_pow_p(p: u64, e: i64) -> BigRational {
    g2_symbolic::rat_pow(&rat(p as i64, 1), e)
}
