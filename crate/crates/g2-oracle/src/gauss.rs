//! The Gaussian sum GS by summation over residues mod p.

use crate::OracleError;
use g2_group::GroupCoord;
use g2_padic::{psi_rational, CycloValue, LocalCubic};
use g2_symbolic::rat;
use num_bigint::BigInt;
use num_rational::BigRational;

/// `Ψ_E(g u(r1, r2, r3, r4, ·) g^{-1})`, expanded through `x_α(d)` and the torus.
fn psi_conj(e: &LocalCubic, g: &GroupCoord, r: [BigRational; 4]) -> CycloValue {
    let p = e.p;
    let (t1, t2, d) = (g.t1(p), g.t2(p), &g.d);
    let [r1, r2, r3, r4] = r;
    let r2p = &r2 + d * &r1;
    let r4p = &r4 + rat(3, 1) * d * &r3 + rat(3, 1) * d * d * &r2 + d * d * d * &r1;
    let dd = BigRational::from_integer(BigInt::from(e.d));
    let nn = BigRational::from_integer(BigInt::from(e.n));
    let t13 = &t1 * &t1 * &t1;
    let arg = r4p * &t13 / &t2 + dd * r2p * &t2 / &t1 - nn * r1 * &t2 * &t2 / &t13;
    psi_rational(&arg, p)
}

fn gs_sum(e: &LocalCubic, g: &GroupCoord, sign: i64) -> Result<BigRational, OracleError> {
    let p = e.p;
    let pq = rat(p as i64, 1);
    let mut tot = CycloValue::rational(p, rat(p as i64 - 1, 1));
    let z = || rat(0, 1);
    for r in 1..p as i64 {
        let x = rat(sign * r, p as i64);
        tot = tot.add(&psi_conj(e, g, [x.clone(), z(), z(), z()]).scale(&pq));
        for y in 0..p as i64 {
            let y = rat(y, 1);
            let c = [&y * &y * &y * &x, &y * &y * &x, &y * &x, x.clone()];
            tot = tot.add(&psi_conj(e, g, c).scale(&pq));
        }
    }
    tot.as_rational().ok_or_else(|| OracleError::NotRational(format!("GS at {g:?}: {tot}")))
}

/// `(q−1) + q Σ_{r≢0} Ψ_E(g x_β(r/ϖ) g^{-1}) + q Σ_{r≢0, y} Ψ_E(g u(y³r/ϖ, y²r/ϖ, yr/ϖ, r/ϖ)^{-1} g^{-1})`.
pub fn gauss_brute(e: &LocalCubic, g: &GroupCoord) -> Result<BigRational, OracleError> {
    gs_sum(e, g, -1)
}

/// Same sum without the inverse; equal to [`gauss_brute`] by `r ↦ −r`.
pub fn gauss_brute_uninverted(e: &LocalCubic, g: &GroupCoord) -> Result<BigRational, OracleError> {
    gs_sum(e, g, 1)
}
