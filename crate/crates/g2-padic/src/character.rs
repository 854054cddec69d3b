//! The additive character ψ of conductor O and the character Ψ_E of U.

use crate::arith::{pow_u128, rational_mod, vp};
use crate::cubic::LocalCubic;
use crate::cyclo::CycloValue;
use crate::error::LocalFieldError;
use crate::scalar::PadicScalar;
use g2_symbolic::{q_pow, Coef};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// `ψ(x) = ζ_{p^A}^u` where `x ≡ u p^{-A} mod O`.
pub fn psi(x: &PadicScalar) -> Result<CycloValue, LocalFieldError> {
    let (a, u) = x.fractional_part()?;
    Ok(CycloValue::zeta(x.prime(), a, u))
}

/// ψ of an exact rational.
pub fn psi_rational(x: &BigRational, p: u64) -> CycloValue {
    match vp(x, p) {
        Some(v) if v < 0 => {
            let a = (-v) as u32;
            let m = pow_u128(p, a);
            let scaled = x * BigRational::from_integer(BigInt::from(m));
            CycloValue::zeta(p, a, rational_mod(&scaled, m).expect("integral"))
        }
        _ => CycloValue::one(p),
    }
}

/// `∫_{|r| = q^j} ψ(r) dr`: 0 for j > 1, -1 for j = 1, q^j(1 - q^{-1}) for j ≤ 0.
pub fn shell_integral_closed(j: i32) -> Coef {
    match j {
        j if j > 1 => Coef::from_int(0),
        1 => Coef::from_int(-1),
        j => &q_pow(j) - &q_pow(j - 1),
    }
}

/// Scalars that can serve as coordinates in Q_p.
pub trait LocalScalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Data needed to build constants (prime, and precision for truncated types).
    type Ctx: Clone + Debug + Send + Sync;

    fn prime_of(ctx: &Self::Ctx) -> u64;
    fn from_rational_in(x: &BigRational, ctx: &Self::Ctx) -> Self;
    /// Valuation, `None` for zero.
    fn valuation_at(&self, p: u64) -> Result<Option<i64>, LocalFieldError>;
    /// Decide `|x| ≤ q^t`.
    fn norm_le_at(&self, p: u64, t: i64) -> Result<bool, LocalFieldError> {
        Ok(self.valuation_at(p)?.map_or(true, |v| v >= -t))
    }
    fn psi_at(&self, p: u64) -> Result<CycloValue, LocalFieldError>;
    /// Whether `self` is zero to the available precision.
    fn is_negligible(&self) -> bool;

    fn from_int_in(n: i64, ctx: &Self::Ctx) -> Self {
        Self::from_rational_in(&BigRational::from_integer(BigInt::from(n)), ctx)
    }
}

impl LocalScalar for BigRational {
    type Ctx = u64;

    fn prime_of(ctx: &u64) -> u64 {
        *ctx
    }
    fn from_rational_in(x: &BigRational, _: &u64) -> Self {
        x.clone()
    }
    fn valuation_at(&self, p: u64) -> Result<Option<i64>, LocalFieldError> {
        Ok(vp(self, p))
    }
    fn psi_at(&self, p: u64) -> Result<CycloValue, LocalFieldError> {
        Ok(psi_rational(self, p))
    }
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// Prime and relative precision for [`PadicScalar`] constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicCtx {
    pub p: u64,
    pub prec: u32,
}

impl LocalScalar for PadicScalar {
    type Ctx = PadicCtx;

    fn prime_of(ctx: &PadicCtx) -> u64 {
        ctx.p
    }
    fn from_rational_in(x: &BigRational, ctx: &PadicCtx) -> Self {
        PadicScalar::from_rational(x, ctx.p, ctx.prec)
    }
    fn valuation_at(&self, p: u64) -> Result<Option<i64>, LocalFieldError> {
        if p != self.prime() {
            return Err(LocalFieldError::PrimeMismatch(p, self.prime()));
        }
        self.valuation()
    }
    fn norm_le_at(&self, p: u64, t: i64) -> Result<bool, LocalFieldError> {
        if p != self.prime() {
            return Err(LocalFieldError::PrimeMismatch(p, self.prime()));
        }
        self.norm_le(t)
    }
    fn psi_at(&self, _p: u64) -> Result<CycloValue, LocalFieldError> {
        psi(self)
    }
    fn is_negligible(&self) -> bool {
        self.valuation().is_err() || self.is_exact_zero()
    }
}

/// `Ψ_E(u) = ψ(r4 + D r2 - N r1)`.
pub fn psi_e<S: LocalScalar>(
    e: &LocalCubic,
    r1: &S,
    r2: &S,
    r4: &S,
    ctx: &S::Ctx,
) -> Result<CycloValue, LocalFieldError> {
    let dd = S::from_int_in(e.d, ctx);
    let nn = S::from_int_in(e.n, ctx);
    let arg = r4.clone() + dd * r2.clone() - nn * r1.clone();
    arg.psi_at(e.p)
}
