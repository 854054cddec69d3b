//! Small integer helpers for residue arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `p`-adic valuation of a nonzero big integer.
pub fn vp_int(x: &BigInt, p: u64) -> i64 {
    let pb = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// `p`-adic valuation of a rational, `None` for zero.
pub fn vp(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(vp_int(x.numer(), p) - vp_int(x.denom(), p))
    }
}

pub fn pow_u128(p: u64, e: u32) -> u128 {
    (p as u128).pow(e)
}

/// Inverse of `a` modulo `m` (gcd must be 1).
pub fn inv_mod(a: u128, m: u128) -> Option<u128> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u128)
}

/// Residue of a `p`-integral rational modulo `m = p^k`.
pub fn rational_mod(x: &BigRational, m: u128) -> Option<u128> {
    let mb = BigInt::from(m);
    let num = x.numer().mod_floor(&mb).to_u128()?;
    let den = x.denom().mod_floor(&mb).to_u128()?;
    Some(num * inv_mod(den, m)? % m)
}

/// Largest digit count `w` with `p^w < 2^63`, so products fit in `u128`.
pub fn max_digits(p: u64) -> u32 {
    let mut w = 0;
    let mut acc: u128 = 1;
    while acc * (p as u128) < (1u128 << 63) {
        acc *= p as u128;
        w += 1;
    }
    w
}
