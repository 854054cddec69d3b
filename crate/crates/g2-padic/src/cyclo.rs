//! Exact elements of Q(ζ_{p^A}).

use crate::arith::pow_u128;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// `Σ_j c_j ζ^j` with `ζ = exp(2πi/p^level)` and `j` taken modulo `p^level`.
#[derive(Clone)]
pub struct CycloValue {
    p: u64,
    level: u32,
    coeffs: BTreeMap<u128, BigRational>,
}

impl CycloValue {
    pub fn zero(p: u64) -> Self {
        Self {
            p,
            level: 0,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::rational(p, BigRational::one())
    }

    pub fn rational(p: u64, r: BigRational) -> Self {
        let mut out = Self::zero(p);
        out.add_term(0, r);
        out
    }

    /// `ζ_{p^level}^u`.
    pub fn zeta(p: u64, level: u32, u: u128) -> Self {
        let mut out = Self {
            p,
            level,
            coeffs: BTreeMap::new(),
        };
        out.add_term(u % pow_u128(p, level), BigRational::one());
        out
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    fn modulus(&self) -> u128 {
        pow_u128(self.p, self.level)
    }

    fn add_term(&mut self, j: u128, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(j).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    /// Same value written at a higher level.
    pub fn lift(&self, level: u32) -> Self {
        assert!(level >= self.level);
        let f = pow_u128(self.p, level - self.level);
        Self {
            p: self.p,
            level,
            coeffs: self.coeffs.iter().map(|(j, c)| (j * f, c.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let lv = self.level.max(rhs.level);
        let mut out = self.lift(lv);
        for (j, c) in rhs.lift(lv).coeffs {
            out.add_term(j, c);
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self {
            p: self.p,
            level: self.level,
            coeffs: BTreeMap::new(),
        };
        for (j, c) in &self.coeffs {
            out.add_term(*j, c * k);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let lv = self.level.max(rhs.level);
        let (a, b) = (self.lift(lv), rhs.lift(lv));
        let m = a.modulus();
        let mut out = Self {
            p: self.p,
            level: lv,
            coeffs: BTreeMap::new(),
        };
        for (i, x) in &a.coeffs {
            for (j, y) in &b.coeffs {
                out.add_term((i + j) % m, x * y);
            }
        }
        out
    }

    /// Canonical representative: exponents below `(p-1)p^{level-1}` only,
    /// obtained from `Φ_{p^A}(ζ) = Σ_{i<p} ζ^{i p^{A-1}} = 0`.
    pub fn reduced(&self) -> Self {
        if self.level == 0 {
            return self.clone();
        }
        let blk = pow_u128(self.p, self.level - 1);
        let top = (self.p as u128 - 1) * blk;
        let mut out = Self {
            p: self.p,
            level: self.level,
            coeffs: BTreeMap::new(),
        };
        for (j, c) in &self.coeffs {
            if *j >= top {
                let base = j % blk;
                for i in 0..(self.p as u128 - 1) {
                    out.add_term(base + i * blk, -c.clone());
                }
            } else {
                out.add_term(*j, c.clone());
            }
        }
        out
    }

    /// Rational value if the canonical representative is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let r = self.reduced();
        match r.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => r.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Approximate complex value, for diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.modulus() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in &self.coeffs {
            let a = 2.0 * std::f64::consts::PI * (*j as f64) / m;
            let cf: f64 = num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN);
            re += cf * a.cos();
            im += cf * a.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycloValue {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p {
            return false;
        }
        let lv = self.level.max(other.level);
        self.lift(lv).reduced().coeffs == other.lift(lv).reduced().coeffs
    }
}

impl fmt::Debug for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let r = self.reduced();
        let parts: Vec<String> = r
            .coeffs
            .iter()
            .map(|(j, c)| format!("{c}*z{}^{j}", r.modulus()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for CycloValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::iter::Sum for CycloValue {
    fn sum<I: Iterator<Item = CycloValue>>(mut iter: I) -> Self {
        let first = match iter.next() {
            Some(x) => x,
            None => panic!("empty CycloValue sum needs a prime; use fold"),
        };
        iter.fold(first, |a, b| a.add(&b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use g2_symbolic::rat;

    #[test]
    fn primitive_roots_sum_to_minus_one() {
        let mut s = CycloValue::zero(5);
        for u in 1..5 {
            s = s.add(&CycloValue::zeta(5, 1, u));
        }
        assert_eq!(s.as_rational(), Some(rat(-1, 1)));
    }

    #[test]
    fn level_two_sum_vanishes() {
        let mut s = CycloValue::zero(5);
        for u in 0..25 {
            s = s.add(&CycloValue::zeta(5, 2, u));
        }
        assert_eq!(s.as_rational(), Some(rat(0, 1)));
        assert!(!CycloValue::zeta(5, 2, 3).is_rational());
        assert_eq!(CycloValue::zeta(5, 1, 2), CycloValue::zeta(5, 2, 10));
    }
}
