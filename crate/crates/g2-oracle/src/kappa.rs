//! Lattice measures by enumeration over residue cells.

use crate::OracleError;
use g2_padic::{arith::vp, LocalCubic};
use g2_symbolic::{rat, rat_pow};
use num_rational::BigRational;
use num_traits::Zero;

fn pq(p: u64, e: i64) -> BigRational {
    rat_pow(&rat(p as i64, 1), e)
}

/// Measure of `{|x| ≤ q^{n1}, |y| ≤ q^{n2}, |xy| ≤ q^{n3}}`.
///
/// `x` runs over the cells `a p^{-n1} + p^{B} O`; on each cell `|x|` is fixed
/// (or `≤ q^{-B}` on the cell of 0), so the `y`-set is a ball of known radius.
pub fn kappa_count(n1: i64, n2: i64, n3: i64, p: u64) -> Result<BigRational, OracleError> {
    if n1 + n2 < n3 {
        return Err(OracleError::Unsupported(format!("κ({n1},{n2},{n3}) needs n1+n2 ≥ n3")));
    }
    let b = (n2 - n3).max(0) + 1;
    let cells = (p as u128).pow((n1 + b) as u32);
    if cells > 50_000_000 {
        return Err(OracleError::BudgetExceeded { visits: 0, budget: 50_000_000 });
    }
    let cell = pq(p, -b);
    let mut tot = BigRational::zero();
    for a in 0..cells {
        let x = rat(a as i64, 1) * pq(p, -n1);
        // |x| = q^{-v}; the zero cell behaves like |x| ≤ q^{-b}
        let v = vp(&x, p).unwrap_or(b).min(b);
        let radius = n2.min(n3 + v);
        tot += &cell * pq(p, radius);
    }
    Ok(tot)
}

/// `deg P` and the polynomial `P_{(a,b,c)}`: `D + z²` (N = 0) or `N + Dz + z³`.
fn p_abc(e: &LocalCubic) -> (i64, impl Fn(i128) -> i128 + '_) {
    let n_zero = e.n_is_zero();
    let deg = if n_zero { 2 } else { 3 };
    (deg, move |z: i128| {
        let (d, n) = (e.d as i128, e.n as i128);
        if n_zero {
            d + z * z
        } else {
            n + d * z + z * z * z
        }
    })
}

/// `κ^{(n1)}_{a,b,c}` (`n2 = None`) or `κ^{(n1)}_{a,b,c}(q^{n2})` at `q = p`.
///
/// With `x = zy`: the plain set is `{|P(z)| ≤ q^{n1}, |y| ≤ q^{n1} min(1, 1/|z|)}`
/// and the shell set needs `|z| = 1`. The `z`-condition is decided by
/// counting residues `z mod p^r` with `P(z) ≡ 0`.
pub fn kappa_abc_count(e: &LocalCubic, n1: i64, n2: Option<i64>) -> Result<BigRational, OracleError> {
    let p = e.p;
    let (deg, poly) = p_abc(e);
    // ∫_{|y| ≤ q^a} |y| dy = q^{2a} / (1 + q^{-1})
    let y_weight = |a: i64| pq(p, 2 * a) / (rat(1, 1) + pq(p, -1));
    let pm = |t: i128, r: u32| t.rem_euclid((p as i128).pow(r));
    // measure of {z unit : P(z) ≡ 0 mod p^r}
    let unit_roots = |r: u32| -> BigRational {
        let modulus = (p as i128).pow(r);
        let hits = (0..modulus)
            .filter(|z| z % p as i128 != 0 && pm(poly(*z), r) == 0)
            .count();
        rat(hits as i64, 1) * pq(p, -(r as i64))
    };
    match n2 {
        Some(n2) => {
            let t = n1 - n2 * deg;
            let zmeas = if t >= 0 {
                rat(1, 1) - pq(p, -1)
            } else {
                unit_roots((-t) as u32)
            };
            // |y| = q^{n2}: ∫ |y| dy = q^{2 n2}(1 − q^{-1})
            Ok(pq(p, 2 * n2) * (rat(1, 1) - pq(p, -1)) * zmeas)
        }
        None => {
            // |z| ≤ 1: P(z) ∈ O; |z| = q^s > 1: |P(z)| = q^{s deg}
            let mut tot = if n1 >= 0 { y_weight(n1) } else { rat(0, 1) };
            if n1 < 0 {
                // P(z) ≡ 0 mod p^{-n1} with z ∈ O
                let r = (-n1) as u32;
                let modulus = (p as i128).pow(r);
                let hits = (0..modulus).filter(|z| pm(poly(*z), r) == 0).count();
                tot = rat(hits as i64, 1) * pq(p, -(r as i64)) * y_weight(n1);
            }
            let mut s = 1;
            while s * deg <= n1 {
                tot += pq(p, s) * (rat(1, 1) - pq(p, -1)) * y_weight(n1 - s);
                s += 1;
            }
            Ok(tot)
        }
    }
}
