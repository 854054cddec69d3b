//! Local étale cubic algebras with trace zero: `x³ + Dx - N` over F_p.

use crate::arith::is_prime;
use crate::error::LocalFieldError;
use g2_symbolic::LocalCubicType;
use serde::Serialize;

/// Étale cubic algebra over Q_p given by its (D, N) invariants (T = 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LocalCubic {
    pub etype: LocalCubicType,
    pub d: i64,
    pub n: i64,
    pub p: u64,
}

fn residue(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

fn is_unit_or_zero(x: i64, p: u64) -> bool {
    x == 0 || residue(x, p) != 0
}

/// Number of roots of `x³ + Dx - N` in F_p.
fn root_count(d: i64, n: i64, p: u64) -> usize {
    let (d, n) = (residue(d, p) as u128, residue(n, p) as u128);
    let p = p as u128;
    (0..p)
        .filter(|&x| (x * x % p * x + d * x + p - n) % p == 0)
        .count()
}

/// Factorization type of `x³ + Dx - N` over F_p.
pub fn classify_cubic(d: i64, n: i64, p: u64) -> Result<LocalCubicType, LocalFieldError> {
    if p < 5 || !is_prime(p) {
        return Err(LocalFieldError::BadPrime(p));
    }
    let degenerate = |reason: &str| LocalFieldError::Degenerate {
        d,
        n,
        p,
        reason: reason.to_string(),
    };
    if !is_unit_or_zero(d, p) || !is_unit_or_zero(n, p) {
        return Err(degenerate("D and N must each be 0 or a p-adic unit"));
    }
    if residue(n, p) == 0 && residue(d, p) == 0 {
        return Err(degenerate("N = 0 forces D to be a unit"));
    }
    // discriminant -4D³ - 27N²
    let pi = p as i128;
    let (di, ni) = (residue(d, p) as i128, residue(n, p) as i128);
    let disc = (-4 * di * di % pi * di - 27 * ni * ni).rem_euclid(pi);
    if disc == 0 {
        return Err(degenerate("repeated root modulo p"));
    }
    match root_count(d, n, p) {
        3 => Ok(LocalCubicType::Split),
        1 => Ok(LocalCubicType::Quad),
        0 => Ok(LocalCubicType::Cubic),
        _ => Err(degenerate("unexpected root count")),
    }
}

impl LocalCubic {
    /// Validate `(D, N)` at `p` and record the factorization type.
    pub fn new(d: i64, n: i64, p: u64) -> Result<Self, LocalFieldError> {
        let etype = classify_cubic(d, n, p)?;
        Ok(Self { etype, d, n, p })
    }

    /// Fixed representative of the given type, found by search:
    /// split uses `x³ - x`; quad uses `N = 0` and the least `D > 0` with `-D`
    /// a non-square; cubic uses the least `(D, N)` with no root mod p.
    pub fn standard(etype: LocalCubicType, p: u64) -> Result<Self, LocalFieldError> {
        if p < 5 || !is_prime(p) {
            return Err(LocalFieldError::BadPrime(p));
        }
        let pi = p as i64;
        match etype {
            LocalCubicType::Split => Self::new(-1, 0, p),
            LocalCubicType::Quad => (1..pi)
                .find_map(|d| {
                    Self::new(d, 0, p)
                        .ok()
                        .filter(|e| e.etype == LocalCubicType::Quad)
                })
                .ok_or(LocalFieldError::BadPrime(p)),
            LocalCubicType::Cubic => (1..pi)
                .flat_map(|d| (1..pi).map(move |n| (d, n)))
                .find_map(|(d, n)| {
                    Self::new(d, n, p)
                        .ok()
                        .filter(|e| e.etype == LocalCubicType::Cubic)
                })
                .ok_or(LocalFieldError::BadPrime(p)),
        }
    }

    /// `N ≡ 0 mod p`.
    pub fn n_is_zero(&self) -> bool {
        residue(self.n, self.p) == 0
    }
}
