//! Coordinates on U and on the representatives `h_α(ϖ^n) h_β(ϖ^m) x_α(d)`.

use g2_padic::{arith::vp, LocalScalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// `u(r1, ..., r5) = x_β(r1) x_{α+β}(r2) x_{2α+β}(r3) x_{3α+β}(r4) x_{3α+2β}(r5)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UCoord<S> {
    pub r: [S; 5],
}

impl<S: LocalScalar> UCoord<S> {
    pub fn new(r1: S, r2: S, r3: S, r4: S, r5: S) -> Self {
        Self {
            r: [r1, r2, r3, r4, r5],
        }
    }

    pub fn identity(ctx: &S::Ctx) -> Self {
        let z = S::from_int_in(0, ctx);
        Self {
            r: std::array::from_fn(|_| z.clone()),
        }
    }

    pub fn from_rationals(r: &[BigRational; 5], ctx: &S::Ctx) -> Self {
        Self {
            r: std::array::from_fn(|i| S::from_rational_in(&r[i], ctx)),
        }
    }
}

/// Exact coordinates.
pub type UCoordQ = UCoord<BigRational>;
/// Truncated p-adic coordinates.
pub type UCoordP = UCoord<g2_padic::PadicScalar>;

/// `g = h_α(ϖ^n) h_β(ϖ^m) x_α(d)`, so `|t1| = q^{-n}` and `|t2| = q^{-m}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupCoord {
    pub n: i64,
    pub m: i64,
    #[serde(serialize_with = "ser_rational")]
    pub d: BigRational,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl GroupCoord {
    pub fn new(n: i64, m: i64, d: BigRational) -> Self {
        Self { n, m, d }
    }

    pub fn toral(n: i64, m: i64) -> Self {
        Self::new(n, m, BigRational::zero())
    }

    pub fn identity() -> Self {
        Self::toral(0, 0)
    }

    /// `d = u / p^j`.
    pub fn with_d(n: i64, m: i64, u: i64, j: u32, p: u64) -> Self {
        let den = BigInt::from(p).pow(j);
        Self::new(n, m, BigRational::new(BigInt::from(u), den))
    }

    /// `j` with `|d| = q^j` when `d ∉ O`; `None` when `d ∈ O` (treated as d = 0).
    pub fn d_branch(&self, p: u64) -> Option<i64> {
        match vp(&self.d, p) {
            Some(v) if v < 0 => Some(-v),
            _ => None,
        }
    }

    /// Same element with `d ∈ O` replaced by 0.
    pub fn normalized(&self, p: u64) -> Self {
        if self.d_branch(p).is_none() {
            Self::toral(self.n, self.m)
        } else {
            self.clone()
        }
    }

    pub fn t1(&self, p: u64) -> BigRational {
        pow_p(p, self.n)
    }

    pub fn t2(&self, p: u64) -> BigRational {
        pow_p(p, self.m)
    }

    /// `p = d t1² / t2` of the presentation `x_α(p) h_α(t1) h_β(t2)`.
    pub fn p_coordinate(&self, p: u64) -> BigRational {
        &self.d * self.t1(p) * self.t1(p) / self.t2(p)
    }

    /// `l` with `|p| = q^l` (`None` for d = 0).
    pub fn l(&self, p: u64) -> Option<i64> {
        vp(&self.p_coordinate(p), p).map(|v| -v)
    }
}

impl fmt::Debug for GroupCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, d={})", self.n, self.m, self.d)
    }
}

impl fmt::Display for GroupCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn pow_p(p: u64, e: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        BigRational::one() / num_traits::pow(b, (-e) as usize)
    }
}
