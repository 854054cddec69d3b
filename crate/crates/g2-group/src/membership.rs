//! `U_k(g)` membership, support conditions and the non-toral reduction.

use crate::coords::{pow_p, GroupCoord, UCoord};
use crate::matrix::{gamma_norm, iota};
use crate::GroupError;
use g2_padic::{arith::vp, psi_rational, CycloValue, LocalCubic, LocalCubicType, LocalScalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// How to decide `u ∈ U_k(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UkMethod {
    /// `Γ(ι(u) ι(g)) ≤ q^k` from the matrix.
    Matrix,
    /// The general inequality list in `(r_i, p = d t1²/t2)`.
    Inequalities,
    /// The shorter list for toral `g`; needs `d = 0` and `|t2| ≤ |t1| ≤ 1`.
    ToralInequalities,
}

fn le<S: LocalScalar>(x: &S, t: i64, p: u64) -> Result<bool, GroupError> {
    Ok(x.norm_le_at(p, t)?)
}

/// `u ∈ U_k(g)`.
pub fn in_uk<S: LocalScalar>(
    u: &UCoord<S>,
    g: &GroupCoord,
    k: i64,
    method: UkMethod,
    ctx: &S::Ctx,
) -> Result<bool, GroupError> {
    let p = S::prime_of(ctx);
    match method {
        UkMethod::Matrix => Ok(gamma_norm(&iota(u, g, ctx), p)? <= k),
        UkMethod::Inequalities => general_list(u, g, k, ctx),
        UkMethod::ToralInequalities => {
            if !g.d.is_zero() || g.n < 0 || g.m < g.n {
                return Err(GroupError::NotToral);
            }
            toral_list(u, g, k, ctx)
        }
    }
}

fn general_list<S: LocalScalar>(
    u: &UCoord<S>,
    g: &GroupCoord,
    k: i64,
    ctx: &S::Ctx,
) -> Result<bool, GroupError> {
    let p = S::prime_of(ctx);
    let (n, m) = (g.n, g.m);
    let pp = S::from_rational_in(&g.p_coordinate(p), ctx);
    let two = S::from_int_in(2, ctx);
    let one = S::from_int_in(1, ctx);
    let [r1, r2, r3, r4, r5] = u.r.clone();
    let rows: Vec<(i64, Vec<S>)> = vec![
        (k + n, vec![one.clone()]),
        (k + m - n, vec![one.clone(), pp.clone()]),
        (k + 2 * n - m, vec![one.clone(), r1.clone(), r2.clone()]),
        (
            k,
            vec![
                one.clone(),
                pp.clone(),
                r3.clone() - pp.clone() * r2.clone(),
                r2.clone() - pp.clone() * r1.clone(),
            ],
        ),
        (
            k + m - 2 * n,
            vec![
                one.clone(),
                pp.clone(),
                pp.clone() * pp.clone(),
                two.clone() * pp.clone() * r3.clone() - pp.clone() * pp.clone() * r2.clone() - r4.clone(),
                two.clone() * pp.clone() * r2.clone() - r3.clone() - pp.clone() * pp.clone() * r1.clone(),
            ],
        ),
        (
            k + n - m,
            vec![
                one.clone(),
                r1.clone(),
                r2.clone(),
                r3.clone(),
                r2.clone() * r3.clone() + r5.clone(),
                r2.clone() * r2.clone() - r1.clone() * r3.clone(),
            ],
        ),
        (
            k - n,
            vec![
                one.clone(),
                pp.clone(),
                pp.clone() * r1.clone() - r2.clone(),
                pp.clone() * r2.clone() - r3.clone(),
                pp.clone() * r3.clone() - r4.clone(),
                r2.clone() * r4.clone()
                    - r3.clone() * r3.clone()
                    - pp.clone() * r2.clone() * r3.clone()
                    - pp.clone() * r5.clone(),
                r1.clone() * r4.clone() - two.clone() * r2.clone() * r3.clone()
                    + pp.clone() * r2.clone() * r2.clone()
                    - pp.clone() * r1.clone() * r3.clone()
                    - r5.clone(),
            ],
        ),
    ];
    for (t, xs) in rows {
        for x in xs {
            if !le(&x, t, p)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn toral_list<S: LocalScalar>(
    u: &UCoord<S>,
    g: &GroupCoord,
    k: i64,
    ctx: &S::Ctx,
) -> Result<bool, GroupError> {
    let p = S::prime_of(ctx);
    let (n, m) = (g.n, g.m);
    if k < n || k < m - n {
        return Ok(false);
    }
    let two = S::from_int_in(2, ctx);
    let [r1, r2, r3, r4, r5] = u.r.clone();
    let a = k + n - m;
    let b = k - n;
    let checks = [
        (r1.clone(), a),
        (r2.clone(), a),
        (r3.clone(), a),
        (r1.clone() * r3.clone() - r2.clone() * r2.clone(), a),
        (r2.clone() * r3.clone() + r5.clone(), a),
        (r2.clone(), b),
        (r3.clone(), b),
        (r4.clone(), b),
        (r2.clone() * r4.clone() - r3.clone() * r3.clone(), b),
        (r1 * r4 - two * r2 * r3 - r5, b),
    ];
    for (x, t) in checks {
        if !le(&x, t, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_o(x: &BigRational, p: u64) -> bool {
    vp(x, p).map_or(true, |v| v >= 0)
}

/// The four memberships that every `f ∈ M_{Ψ_E}` needs to be nonzero at `g`:
/// `N t2²/t1³ + D d t2/t1 + d³t1³/t2`, `D t2/t1 + 3d²t1³/(2t2)`, `3d t1³/t2`
/// and `t1³/t2` all lie in O.
pub fn support_conditions(e: &LocalCubic, g: &GroupCoord) -> bool {
    let p = e.p;
    let (t1, t2) = (g.t1(p), g.t2(p));
    let d = &g.d;
    let dd = BigRational::from_integer(BigInt::from(e.d));
    let nn = BigRational::from_integer(BigInt::from(e.n));
    let r = |n: i64, dn: i64| BigRational::new(BigInt::from(n), BigInt::from(dn));
    let t13 = &t1 * &t1 * &t1;
    let a = &nn * &t2 * &t2 / &t13 + &dd * d * &t2 / &t1 + d * d * d * &t13 / &t2;
    let b = &dd * &t2 / &t1 + r(3, 2) * d * d * &t13 / &t2;
    let c = r(3, 1) * d * &t13 / &t2;
    let w = &t13 / &t2;
    [a, b, c, w].iter().all(|x| in_o(x, p))
}

/// `(T, D, N)` of a possibly re-oriented triple `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicOrientation {
    pub etype: LocalCubicType,
    pub t: BigRational,
    pub d: BigRational,
    pub n: BigRational,
}

impl CubicOrientation {
    pub fn of(e: &LocalCubic) -> Self {
        Self {
            etype: e.etype,
            t: BigRational::zero(),
            d: BigRational::from_integer(BigInt::from(e.d)),
            n: BigRational::from_integer(BigInt::from(e.n)),
        }
    }

    /// `bc` (quadratic case, `a = 0`) or `abc` (field case).
    fn eta_scalar(&self) -> Result<BigRational, GroupError> {
        match self.etype {
            LocalCubicType::Quad => Ok(self.d.clone()),
            LocalCubicType::Cubic => Ok(self.n.clone()),
            LocalCubicType::Split => Err(GroupError::SplitUnsupported),
        }
    }

    /// `Ψ(u) = ψ(r4 - T r3 + D r2 - N r1)`.
    pub fn psi(&self, u: &UCoord<BigRational>, p: u64) -> CycloValue {
        let [r1, r2, r3, r4, _] = &u.r;
        psi_rational(&(r4 - &self.t * r3 + &self.d * r2 - &self.n * r1), p)
    }
}

/// Conjugation by `η = w_α h_β(x)` (x = bc or abc): the triple becomes
/// `(1/a, 1/b, 1/c)` and `|p'| = 1/|p|`.
pub fn flip_orientation(
    o: &CubicOrientation,
    g: &GroupCoord,
    p: u64,
) -> Result<(CubicOrientation, GroupCoord), GroupError> {
    if g.d.is_zero() {
        return Err(GroupError::NotToral);
    }
    let x = o.eta_scalar()?;
    let (t1, t2) = (g.t1(p), g.t2(p));
    let t1p = &x * &t2 / (&g.d * &t1);
    let pp = &x * &t2 / (&g.d * &t1 * &t1);
    let n_new = vp(&t1p, p).expect("nonzero");
    // h_α(unit) is absorbed on the right by K
    let t1n = pow_p(p, n_new);
    let d_new = &pp * &t2 / (&t1n * &t1n);
    let o_new = match o.etype {
        // (0, b, c) -> (0, 1/b, 1/c)
        LocalCubicType::Quad => CubicOrientation {
            etype: o.etype,
            t: BigRational::zero(),
            d: BigRational::one() / &o.d,
            n: BigRational::zero(),
        },
        // (a, b, c) -> (1/a, 1/b, 1/c)
        _ => CubicOrientation {
            etype: o.etype,
            t: &o.d / &o.n,
            d: &o.t / &o.n,
            n: BigRational::one() / &o.n,
        },
    };
    Ok((o_new, GroupCoord::new(n_new, g.m, d_new)))
}

/// Reduce to `|p| ≤ 1`; elements with `|p| ≤ 1` are returned unchanged.
pub fn reduce_nontoral(
    o: &CubicOrientation,
    g: &GroupCoord,
    p: u64,
) -> Result<(CubicOrientation, GroupCoord), GroupError> {
    match g.l(p) {
        None => Err(GroupError::NotToral),
        Some(l) if l <= 0 => Ok((o.clone(), g.clone())),
        Some(_) => flip_orientation(o, g, p),
    }
}

/// `Ψ_E(u) = ψ(r4 + D r2 - N r1)`.
pub fn psi_e_u<S: LocalScalar>(
    e: &LocalCubic,
    u: &UCoord<S>,
    ctx: &S::Ctx,
) -> Result<CycloValue, GroupError> {
    Ok(g2_padic::psi_e(e, &u.r[0], &u.r[1], &u.r[3], ctx)?)
}
