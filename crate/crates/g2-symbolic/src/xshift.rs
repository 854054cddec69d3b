//! Rational functions times an arbitrary integer power of X.

use crate::coef::Coef;
use crate::ratfunc::RatFuncX;
use crate::SymbolicError;
use num_rational::BigRational;
use std::fmt;

/// `X^shift · body`, kept with `body(0) ≠ 0` unless the value is zero.
#[derive(Clone)]
pub struct XRat {
    shift: i32,
    body: RatFuncX,
}

impl XRat {
    pub fn zero() -> Self {
        Self {
            shift: 0,
            body: RatFuncX::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(RatFuncX::one())
    }

    pub fn new(shift: i32, body: RatFuncX) -> Self {
        let mut out = Self { shift, body };
        out.normalize();
        out
    }

    pub fn from_rat(body: RatFuncX) -> Self {
        Self::new(0, body)
    }

    pub fn from_coef(c: Coef) -> Self {
        Self::from_rat(RatFuncX::from_coef(c))
    }

    /// `c · X^k`, any sign of `k`.
    pub fn monomial(c: Coef, k: i32) -> Self {
        Self::new(k, RatFuncX::from_coef(c))
    }

    fn normalize(&mut self) {
        match self.body.x_valuation() {
            None => {
                self.shift = 0;
            }
            Some(0) => {}
            Some(v) => {
                self.body = self.body.shift_x(-(v as i32)).expect("valuation checked");
                self.shift += v as i32;
            }
        }
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn body(&self) -> &RatFuncX {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(rhs.shift);
        let a = self.body.shift_x(self.shift - lo).expect("nonnegative shift");
        let b = rhs.body.shift_x(rhs.shift - lo).expect("nonnegative shift");
        Self::new(lo, a.add(&b))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.shift, self.body.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.shift + rhs.shift, self.body.mul(&rhs.body))
    }

    pub fn mul_rat(&self, rhs: &RatFuncX) -> Self {
        Self::new(self.shift, self.body.mul(rhs))
    }

    pub fn scale(&self, c: &Coef) -> Self {
        Self::new(self.shift, self.body.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.shift * e as i32, self.body.pow(e))
    }

    pub fn inv(&self) -> Result<Self, SymbolicError> {
        Ok(Self::new(-self.shift, self.body.inv()?))
    }

    /// The plain rational function, if no negative power of X remains.
    pub fn to_ratfunc(&self) -> Option<RatFuncX> {
        if self.is_zero() {
            return Some(RatFuncX::zero());
        }
        (self.shift >= 0).then(|| self.body.shift_x(self.shift).expect("nonnegative shift"))
    }

    pub fn at_c(&self, v: &BigRational) -> Self {
        Self::new(self.shift, self.body.at_c(v))
    }

    pub fn to_text(&self) -> String {
        match self.to_ratfunc() {
            Some(r) => r.to_text(),
            None => format!("X^{} * ({})", self.shift, self.body.to_text()),
        }
    }
}

impl From<RatFuncX> for XRat {
    fn from(r: RatFuncX) -> Self {
        Self::from_rat(r)
    }
}

impl PartialEq for XRat {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.shift == other.shift && self.body == other.body
    }
}

impl fmt::Debug for XRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for XRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl serde::Serialize for XRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coef::{int, q_half};

    #[test]
    fn negative_powers_cancel() {
        let a = XRat::monomial(int(1), -2);
        let b = XRat::monomial(q_half(1), 3);
        let p = a.mul(&b);
        assert_eq!(p.to_ratfunc(), Some(RatFuncX::monomial(q_half(1), 1)));
        let s = a.add(&a.neg());
        assert!(s.is_zero());
        assert_eq!(a.to_ratfunc(), None);
    }

    #[test]
    fn shifts_are_normalized() {
        let x2 = XRat::from_rat(RatFuncX::monomial(int(3), 2));
        assert_eq!(x2.shift(), 2);
        assert_eq!(x2, XRat::monomial(int(3), 2));
    }
}
