//! Dual-side objects: Satake tori of G2, the seven weights of the standard
//! representation, `L(s, π, st)` and the traces of its symmetric powers.

use g2_symbolic::{c_pow, Coef, Laurent, Poly, RatFuncX, Ring, Series, Torus3};
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SatakeError {
    #[error("torus parameter is not invertible")]
    NotInvertible,
}

/// Semisimple class `(t1, t2)` in the maximal torus.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakeTorus<R> {
    pub t1: R,
    pub t2: R,
}

/// Weights `[t1, t2/t1, t1²/t2, 1, t2/t1², t1/t2, 1/t1]` of `st`.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights7<R>(pub [R; 7]);

impl<R: Ring> Weights7<R> {
    pub fn product(&self) -> R {
        self.0.iter().fold(R::one(), |a, w| a * w.clone())
    }

    /// The multiset of weights equals the multiset of inverses.
    pub fn inversion_stable(&self) -> bool {
        let inv: Option<Vec<R>> = self.0.iter().map(|w| w.try_inv()).collect();
        let Some(mut inv) = inv else { return false };
        for w in &self.0 {
            match inv.iter().position(|x| x == w) {
                Some(i) => {
                    inv.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }

    /// `det(1 - st(t) a X) = ∏ (1 - w_i a X)`.
    pub fn char_poly(&self, a: &R) -> Poly<R> {
        self.0.iter().fold(Poly::one(), |acc, w| {
            &acc * &Poly::one_minus(w.clone() * a.clone(), 1)
        })
    }
}

pub fn satake_weights<R: Ring>(t: &SatakeTorus<R>) -> Result<Weights7<R>, SatakeError> {
    let i1 = t.t1.try_inv().ok_or(SatakeError::NotInvertible)?;
    let i2 = t.t2.try_inv().ok_or(SatakeError::NotInvertible)?;
    let (t1, t2) = (t.t1.clone(), t.t2.clone());
    Ok(Weights7([
        t1.clone(),
        t2.clone() * i1.clone(),
        t1.clone() * t1.clone() * i2.clone(),
        R::one(),
        t2 * i1.clone() * i1.clone(),
        t1 * i2,
        i1,
    ]))
}

/// `L = 1 / ∏ (1 - w_i c^{twist} X)` for weights in the coefficient ring.
pub fn lfactor(w: &Weights7<Coef>, twist_power: i32) -> RatFuncX {
    let c = c_pow(twist_power);
    let mut out = RatFuncX::one();
    for wi in &w.0 {
        let a = wi * &c;
        let f = if a.as_monomial().is_some() {
            RatFuncX::euler(&a, 1)
        } else {
            RatFuncX::from_parts(Poly::one(), Poly::one_minus(a, 1)).expect("nonzero")
        };
        out = out.mul(&f);
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_k(w_1, ..., w_7)` = Tr Sym^k.
pub fn sym_trace<R: Ring>(w: &Weights7<R>, k: usize) -> R {
    // h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j)
    let mut h = vec![R::zero(); k + 1];
    h[0] = R::one();
    for x in &w.0 {
        for j in 1..=k {
            h[j] = h[j].clone() + x.clone() * h[j - 1].clone();
        }
    }
    h[k].clone()
}

/// Power sums `p_k = Σ w_i^k`.
pub fn power_sum<R: Ring>(w: &Weights7<R>, k: u32) -> R {
    w.0.iter().fold(R::zero(), |a, x| a + x.pow_u(k))
}

/// Newton: `k h_k = Σ_{i=1}^{k} p_i h_{k-i}` for all `k ≤ kmax`.
pub fn newton_consistent<R: Ring>(w: &Weights7<R>, kmax: usize) -> bool {
    (1..=kmax).all(|k| {
        let lhs = R::from_int(k as i64) * sym_trace(w, k);
        let rhs = (1..=k).fold(R::zero(), |a, i| {
            a + power_sum(w, i as u32) * sym_trace(w, k - i)
        });
        lhs == rhs
    })
}

/// Coefficients of `1/det(1 - st(t) c X)` up to `X^order` against `h_k c^k`.
pub fn check_generating_identity<R: Ring>(
    t: &SatakeTorus<R>,
    c: &R,
    order: usize,
) -> Result<bool, SatakeError> {
    let w = satake_weights(t)?;
    let series = Series::from_poly(&Poly::one(), order)
        .div_poly(&w.char_poly(c))
        .expect("constant term 1");
    Ok((0..=order).all(|k| series.coeff(k) == sym_trace(&w, k) * c.pow_u(k as u32)))
}

/// Rational torus with the twist kept as the formal symbol c.
pub fn rational_torus(t1: BigRational, t2: BigRational) -> SatakeTorus<Coef> {
    SatakeTorus {
        t1: Coef::constant(t1),
        t2: Coef::constant(t2),
    }
}

/// Fully formal torus over `Q[t1^±, t2^±, c^±]`, with the twist `c`.
pub fn formal_torus() -> (SatakeTorus<Torus3>, Torus3) {
    (
        SatakeTorus {
            t1: Laurent::var_pow(0, 1),
            t2: Laurent::var_pow(1, 1),
        },
        Laurent::var_pow(2, 1),
    )
}
