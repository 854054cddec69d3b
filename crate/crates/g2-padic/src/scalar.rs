//! Truncated p-adic numbers in Q_p.

use crate::arith::{inv_mod, max_digits, pow_u128, rational_mod, vp};
use crate::error::LocalFieldError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `p^val · unit` with `unit` a p-adic unit known modulo `p^prec`.
///
/// Zero comes in two flavours: the exact zero (valuation +∞) and a value
/// that is only known to vanish modulo `p^abs`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicScalar {
    p: u64,
    repr: Repr,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Repr {
    ExactZero,
    ZeroMod { abs: i64 },
    Unit { val: i64, unit: u128, prec: u32 },
}

impl PadicScalar {
    pub fn zero(p: u64) -> Self {
        Self {
            p,
            repr: Repr::ExactZero,
        }
    }

    /// Known to be `0 mod p^abs`.
    pub fn zero_mod(p: u64, abs: i64) -> Self {
        Self {
            p,
            repr: Repr::ZeroMod { abs },
        }
    }

    pub fn one(p: u64, prec: u32) -> Self {
        Self::from_parts(p, 0, 1, prec)
    }

    /// `p^val · unit`; `unit` must not be divisible by `p`.
    pub fn from_parts(p: u64, val: i64, unit: u128, prec: u32) -> Self {
        let prec = prec.min(max_digits(p));
        let m = pow_u128(p, prec);
        let unit = unit % m;
        assert!(prec == 0 || unit % p as u128 != 0, "unit part divisible by p");
        Self {
            p,
            repr: Repr::Unit { val, unit, prec },
        }
    }

    /// The uniformizer ϖ = p raised to `k`.
    pub fn uniformizer_pow(p: u64, k: i64, prec: u32) -> Self {
        Self::from_parts(p, k, 1, prec)
    }

    pub fn from_int(n: i64, p: u64, prec: u32) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)), p, prec)
    }

    /// Expansion of a rational number to `prec` relative digits.
    pub fn from_rational(x: &BigRational, p: u64, prec: u32) -> Self {
        match vp(x, p) {
            None => Self::zero(p),
            Some(v) => {
                let prec = prec.min(max_digits(p));
                let m = pow_u128(p, prec);
                let shifted = x * pow_rational(p, -v);
                let unit = rational_mod(&shifted, m).expect("unit residue");
                Self::from_parts(p, v, unit, prec)
            }
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::ExactZero)
    }

    /// Valuation, `None` for the exact zero. Fails for a value only known
    /// to be small.
    pub fn valuation(&self) -> Result<Option<i64>, LocalFieldError> {
        match self.repr {
            Repr::ExactZero => Ok(None),
            Repr::ZeroMod { abs } => Err(LocalFieldError::InsufficientPrecision(format!(
                "value is only known modulo p^{abs}"
            ))),
            Repr::Unit { val, .. } => Ok(Some(val)),
        }
    }

    /// Absolute precision: the value is known modulo `p^abs` (`None` = exact).
    pub fn abs_precision(&self) -> Option<i64> {
        match self.repr {
            Repr::ExactZero => None,
            Repr::ZeroMod { abs } => Some(abs),
            Repr::Unit { val, prec, .. } => Some(val + prec as i64),
        }
    }

    /// Decide `|x| ≤ q^t`.
    pub fn norm_le(&self, t: i64) -> Result<bool, LocalFieldError> {
        match self.repr {
            Repr::ExactZero => Ok(true),
            Repr::ZeroMod { abs } if abs >= -t => Ok(true),
            Repr::ZeroMod { abs } => Err(LocalFieldError::InsufficientPrecision(format!(
                "cannot decide |x| <= q^{t} for x = 0 mod p^{abs}"
            ))),
            Repr::Unit { val, .. } => Ok(val >= -t),
        }
    }

    /// Residue representative `u` with `x ≡ u · p^{-A} (mod O)`, `A = max(0, -v)`.
    pub fn fractional_part(&self) -> Result<(u32, u128), LocalFieldError> {
        match self.repr {
            Repr::ExactZero => Ok((0, 0)),
            Repr::ZeroMod { abs } if abs >= 0 => Ok((0, 0)),
            Repr::ZeroMod { abs } => Err(LocalFieldError::InsufficientPrecision(format!(
                "x mod O is undetermined for x = 0 mod p^{abs}"
            ))),
            Repr::Unit { val, .. } if val >= 0 => Ok((0, 0)),
            Repr::Unit { val, unit, prec } => {
                let a = (-val) as u32;
                if prec < a {
                    return Err(LocalFieldError::InsufficientPrecision(format!(
                        "need {a} digits below the point, have {prec}"
                    )));
                }
                Ok((a, unit % pow_u128(self.p, a)))
            }
        }
    }

    /// Best rational representative (exact for exact zero).
    pub fn to_rational(&self) -> BigRational {
        match self.repr {
            Repr::ExactZero | Repr::ZeroMod { .. } => BigRational::zero(),
            Repr::Unit { val, unit, .. } => {
                BigRational::from_integer(BigInt::from(unit)) * pow_rational(self.p, val)
            }
        }
    }

    fn check_prime(&self, o: &Self) {
        assert_eq!(self.p, o.p, "p-adic operands over different primes");
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, LocalFieldError> {
        match self.repr {
            Repr::ExactZero => Err(LocalFieldError::DivisionByZero),
            Repr::ZeroMod { abs } => Err(LocalFieldError::InsufficientPrecision(format!(
                "cannot invert a value known only modulo p^{abs}"
            ))),
            Repr::Unit { val, unit, prec } => {
                let m = pow_u128(self.p, prec);
                let u = inv_mod(unit, m).expect("unit");
                Ok(Self::from_parts(self.p, -val, u, prec))
            }
        }
    }

    /// Value modulo `p^abs` as an integer window `p^lo · a`, for addition.
    fn window(&self, lo: i64, abs: i64) -> u128 {
        match self.repr {
            Repr::ExactZero | Repr::ZeroMod { .. } => 0,
            Repr::Unit { val, unit, .. } => {
                if val >= abs {
                    return 0;
                }
                let m = pow_u128(self.p, (abs - lo) as u32);
                unit % m * pow_u128(self.p, (val - lo) as u32) % m
            }
        }
    }

    fn from_window(p: u64, lo: i64, abs: i64, a: u128) -> Self {
        if a == 0 {
            return Self::zero_mod(p, abs);
        }
        let mut a = a;
        let mut v = lo;
        while a % p as u128 == 0 {
            a /= p as u128;
            v += 1;
        }
        Self::from_parts(p, v, a, (abs - v) as u32)
    }

    fn lowest(&self) -> Option<i64> {
        match self.repr {
            Repr::ExactZero => None,
            Repr::ZeroMod { abs } => Some(abs),
            Repr::Unit { val, .. } => Some(val),
        }
    }
}

fn pow_rational(p: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        BigRational::one() / num_traits::pow(base, (-e) as usize)
    }
}

impl Add for &PadicScalar {
    type Output = PadicScalar;
    fn add(self, rhs: &PadicScalar) -> PadicScalar {
        self.check_prime(rhs);
        let p = self.p;
        let abs = match (self.abs_precision(), rhs.abs_precision()) {
            (None, None) => return PadicScalar::zero(p),
            (None, _) => return rhs.clone(),
            (_, None) => return self.clone(),
            (Some(a), Some(b)) => a.min(b),
        };
        let lo = self.lowest().unwrap().min(rhs.lowest().unwrap()).min(abs);
        // keep the window representable
        let lo = lo.max(abs - max_digits(p) as i64);
        let m = pow_u128(p, (abs - lo) as u32);
        let s = (self.window(lo, abs) + rhs.window(lo, abs)) % m;
        PadicScalar::from_window(p, lo, abs, s)
    }
}

impl Neg for &PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        match self.repr {
            Repr::Unit { val, unit, prec } => {
                let m = pow_u128(self.p, prec);
                PadicScalar::from_parts(self.p, val, (m - unit) % m, prec)
            }
            _ => self.clone(),
        }
    }
}

impl Sub for &PadicScalar {
    type Output = PadicScalar;
    fn sub(self, rhs: &PadicScalar) -> PadicScalar {
        self + &(-rhs)
    }
}

impl Mul for &PadicScalar {
    type Output = PadicScalar;
    fn mul(self, rhs: &PadicScalar) -> PadicScalar {
        self.check_prime(rhs);
        let p = self.p;
        match (self.repr, rhs.repr) {
            (Repr::ExactZero, _) | (_, Repr::ExactZero) => PadicScalar::zero(p),
            (Repr::ZeroMod { abs }, Repr::Unit { val, .. })
            | (Repr::Unit { val, .. }, Repr::ZeroMod { abs }) => {
                PadicScalar::zero_mod(p, abs + val)
            }
            (Repr::ZeroMod { abs: a }, Repr::ZeroMod { abs: b }) => PadicScalar::zero_mod(p, a + b),
            (
                Repr::Unit {
                    val: v1,
                    unit: u1,
                    prec: p1,
                },
                Repr::Unit {
                    val: v2,
                    unit: u2,
                    prec: p2,
                },
            ) => {
                let prec = p1.min(p2);
                let m = pow_u128(p, prec);
                PadicScalar::from_parts(p, v1 + v2, (u1 % m) * (u2 % m) % m, prec)
            }
        }
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PadicScalar {
            type Output = PadicScalar;
            fn $m(self, rhs: PadicScalar) -> PadicScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);

impl Neg for PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        -&self
    }
}

impl fmt::Debug for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.repr {
            Repr::ExactZero => write!(f, "0"),
            Repr::ZeroMod { abs } => write!(f, "O({}^{})", self.p, abs),
            Repr::Unit { val, unit, prec } => {
                write!(f, "{}*{}^{} + O({}^{})", unit, self.p, val, self.p, val + prec as i64)
            }
        }
    }
}

impl fmt::Display for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use g2_symbolic::rat;

    #[test]
    fn rational_round_trip_mod_precision() {
        let x = PadicScalar::from_rational(&rat(7, 25), 5, 6);
        assert_eq!(x.valuation().unwrap(), Some(-2));
        assert_eq!(x.fractional_part().unwrap(), (2, 7));
        let y = PadicScalar::from_rational(&rat(-1, 3), 5, 6);
        let z = &(&y * &PadicScalar::from_int(3, 5, 6)) + &PadicScalar::one(5, 6);
        assert!(z.norm_le(-6).unwrap());
        assert!(z.valuation().is_err());
    }

    #[test]
    fn cancellation_loses_relative_precision() {
        let a = PadicScalar::from_rational(&rat(1, 1), 5, 4);
        let b = PadicScalar::from_rational(&rat(26, 1), 5, 4);
        let d = &b - &a;
        assert_eq!(d.valuation().unwrap(), Some(2));
        assert_eq!(d.abs_precision(), Some(4));
    }
}
