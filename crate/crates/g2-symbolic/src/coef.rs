//! The coefficient ring Q[q^{±1/2}, c^{±1}] of every closed form.
//!
//! Variable 0 is the formal square root `Q = q^{1/2}`, variable 1 is the
//! twist symbol `c = χ(ϖ)`. Exponents of `Q` therefore count half powers of q.

use crate::laurent::Laurent;
use crate::ring::rat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

/// Element of Q[q^{±1/2}] ⊗ Q[c^{±1}].
pub type Coef = Laurent<2>;

/// Coefficients that only involve half powers of q (no twist).
pub type HalfQ = Coef;

/// Integer power of the formal twist c. No relation is imposed on c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistSymbol(pub i32);

impl TwistSymbol {
    pub fn to_coef(self) -> Coef {
        Coef::var_pow(1, self.0)
    }
}

const Q: usize = 0;
const C: usize = 1;

/// `q^{k/2}`.
pub fn q_half(k: i32) -> Coef {
    Coef::var_pow(Q, k)
}

/// `q^k`.
pub fn q_pow(k: i32) -> Coef {
    Coef::var_pow(Q, 2 * k)
}

/// `c^k`.
pub fn c_pow(k: i32) -> Coef {
    Coef::var_pow(C, k)
}

/// `r · c^{c_exp} · q^{q_half/2}`.
pub fn mono(r: BigRational, q_half: i32, c_exp: i32) -> Coef {
    Coef::monomial([q_half, c_exp], r)
}

pub fn int(n: i64) -> Coef {
    Coef::from_int(n)
}

pub fn frac(n: i64, d: i64) -> Coef {
    Coef::constant(rat(n, d))
}

/// Helper trait with the named views of a [`Coef`].
pub trait CoefExt {
    /// Set the twist symbol to the rational `v` (acceptance uses `c = 1`).
    fn at_c(&self, v: &BigRational) -> Coef;
    /// Evaluate at `q = p`, i.e. `q^{1/2} = √p`; `None` if an odd half power
    /// survives (the value would be irrational).
    fn eval_q(&self, p: u64) -> Option<Coef>;
    /// Evaluate at `q^{1/2} = r`, so that `q = r²` (exact for every exponent).
    fn eval_sqrt_q(&self, r: &BigRational) -> Coef;
    /// Canonical text `c^a*q^(b/2)` form.
    fn to_text(&self) -> String;
}

impl CoefExt for Coef {
    fn at_c(&self, v: &BigRational) -> Coef {
        self.specialize(C, v)
    }

    fn eval_q(&self, p: u64) -> Option<Coef> {
        let mut out = Coef::zero();
        for (e, c) in self.terms() {
            if e[Q] % 2 != 0 {
                return None;
            }
            let base = BigRational::from_integer(BigInt::from(p));
            let k = crate::ring::rat_pow(&base, (e[Q] / 2) as i64);
            out.add_term([0, e[C]], c * k);
        }
        Some(out)
    }

    fn eval_sqrt_q(&self, r: &BigRational) -> Coef {
        self.specialize(Q, r)
    }

    fn to_text(&self) -> String {
        self.fmt_named(&["q", "c"], &[true, false])
    }
}

impl serde::Serialize for Coef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

/// Display wrapper printing a [`Coef`] in canonical text form.
pub struct CoefDisplay<'a>(pub &'a Coef);

impl fmt::Display for CoefDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_powers_square_to_q() {
        let h = q_half(1);
        assert_eq!(&h * &h, q_pow(1));
        assert_eq!(q_half(-7).to_text(), "q^(-7/2)");
        assert_eq!((&c_pow(2) * &q_half(-3)).to_text(), "c^2*q^(-3/2)");
    }

    #[test]
    fn evaluation_at_prime() {
        let x = &(&q_pow(3) - &int(1)) + &q_half(2);
        assert_eq!(x.eval_q(5).unwrap().as_constant().unwrap(), rat(129, 1));
        assert!(q_half(1).eval_q(5).is_none());
    }
}
