//! Rational functions in X = q^{-s} with [`Coef`] coefficients.
//!
//! Denominators are kept as a multiset of cyclotomic-type Euler factors
//! `Φ_d(b·X^e)` (constant term 1, `b` a monomial) times a residual polynomial
//! that stays 1 for everything built from local zeta factors. With that
//! representation the reduced form is unique and printing is canonical;
//! equality is decided by cross-multiplication in every case.

use crate::coef::{Coef, CoefExt};
use crate::poly::Poly;
use crate::ring::{rat, Ring};
use crate::series::Series;
use crate::SymbolicError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in X over the coefficient ring.
pub type PolyX = Poly<Coef>;
/// Truncated power series in X over the coefficient ring.
pub type SeriesX = Series<Coef>;

/// `Φ_d(b X^e)`, normalized to constant term 1 (so `d = 1` stands for `1 - bX^e`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerFactor {
    pub e: u32,
    pub d: u32,
    pub b_exps: [i32; 2],
    pub b_coef: BigRational,
}

impl EulerFactor {
    fn b(&self) -> Coef {
        Coef::monomial(self.b_exps, self.b_coef.clone())
    }

    pub fn poly(&self) -> PolyX {
        let phi = cyclotomic_normalized(self.d);
        let b = self.b();
        let mut out = vec![Coef::zero(); (phi.len() - 1) * self.e as usize + 1];
        let mut bp = Coef::one();
        for (i, c) in phi.iter().enumerate() {
            if *c != 0 {
                out[i * self.e as usize] = bp.scale(&rat(*c, 1));
            }
            bp = &bp * &b;
        }
        Poly::new(out)
    }
}

/// Integer coefficients of `Φ_d(y)` with constant term +1 (`Φ_1` becomes `1 - y`).
pub fn cyclotomic_normalized(d: u32) -> Vec<i64> {
    if d == 1 {
        return vec![1, -1];
    }
    // y^d - 1 divided by Φ_k(y) for every proper divisor k
    let mut num: Vec<i64> = vec![0; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for k in 1..d {
        if d % k == 0 {
            let mut den = cyclotomic_normalized(k);
            if k == 1 {
                den = vec![-1, 1];
            }
            num = int_div_exact(&num, &den);
        }
    }
    if num[0] != 1 {
        num.iter_mut().for_each(|c| *c = -*c);
    }
    num
}

fn int_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; dn - dd + 1];
    let lead = den[dd];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd] / lead;
        q[k] = c;
        for j in 0..=dd {
            rem[k + j] -= c * den[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn rational_root(r: &BigRational, g: u32) -> Option<BigRational> {
    if g == 1 {
        return Some(r.clone());
    }
    if r.is_negative() && g % 2 == 0 {
        return None;
    }
    let sign = if r.is_negative() { -1 } else { 1 };
    let n = r.numer().abs();
    let d = r.denom().abs();
    let rn = n.nth_root(g);
    let rd = d.nth_root(g);
    if num_traits::Pow::pow(&rn, g) == n && num_traits::Pow::pow(&rd, g) == d {
        Some(BigRational::new(rn * BigInt::from(sign), rd))
    } else {
        None
    }
}

/// Factor `1 - a X^f` (a a monomial) into cyclotomic-type factors.
fn split_binomial(a_exps: [i32; 2], a_coef: &BigRational, f: u32) -> Vec<EulerFactor> {
    let mut gs = divisors(f);
    gs.reverse();
    for g in gs {
        if a_exps.iter().any(|e| e % g as i32 != 0) {
            continue;
        }
        if let Some(s) = rational_root(a_coef, g) {
            let b_exps = [a_exps[0] / g as i32, a_exps[1] / g as i32];
            return divisors(g)
                .into_iter()
                .map(|d| EulerFactor {
                    e: f / g,
                    d,
                    b_exps,
                    b_coef: s.clone(),
                })
                .collect();
        }
    }
    unreachable!("g = 1 always applies")
}

/// Recognize `1 - a X^f` with monomial `a`.
fn as_binomial(p: &PolyX) -> Option<([i32; 2], BigRational, u32)> {
    let deg = p.degree()?;
    if deg == 0 || !p.coeff(0).is_one() {
        return None;
    }
    for k in 1..deg {
        if !p.coeff(k).is_zero() {
            return None;
        }
    }
    let (e, c) = p.coeff(deg).as_monomial()?;
    Some((e, -c, deg as u32))
}

/// Exact rational function `num / (∏ factors · rest)`.
#[derive(Clone)]
pub struct RatFuncX {
    num: PolyX,
    factors: BTreeMap<EulerFactor, u32>,
    rest: PolyX,
}

impl RatFuncX {
    pub fn zero() -> Self {
        Self::from_poly(PolyX::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyX::one())
    }

    pub fn from_poly(p: PolyX) -> Self {
        Self {
            num: p,
            factors: BTreeMap::new(),
            rest: PolyX::one(),
        }
    }

    pub fn from_coef(c: Coef) -> Self {
        Self::from_poly(PolyX::constant(c))
    }

    /// The variable X itself.
    pub fn x() -> Self {
        Self::from_poly(PolyX::x())
    }

    /// `c · X^k`.
    pub fn monomial(c: Coef, k: usize) -> Self {
        Self::from_poly(PolyX::monomial(c, k))
    }

    /// `1 / (1 - a X^f)` for a monomial `a`.
    pub fn euler(a: &Coef, f: u32) -> Self {
        let (e, c) = a.as_monomial().expect("Euler factor needs a monomial");
        let mut out = Self::one();
        for fac in split_binomial(e, &c, f) {
            *out.factors.entry(fac).or_insert(0) += 1;
        }
        out
    }

    /// General quotient of two polynomials.
    pub fn from_parts(num: PolyX, den: PolyX) -> Result<Self, SymbolicError> {
        if den.is_zero() {
            return Err(SymbolicError::DivisionByZero);
        }
        let mut out = Self {
            num,
            factors: BTreeMap::new(),
            rest: den,
        };
        out.absorb_rest();
        out.reduce();
        Ok(out)
    }

    fn absorb_rest(&mut self) {
        if let Some(inv) = self.rest.coeff(0).try_inv() {
            if !self.rest.coeff(0).is_one() {
                self.num = self.num.scale(&inv);
                self.rest = self.rest.scale(&inv);
            }
        }
        if let Some((e, c, f)) = as_binomial(&self.rest) {
            for fac in split_binomial(e, &c, f) {
                *self.factors.entry(fac).or_insert(0) += 1;
            }
            self.rest = PolyX::one();
        }
        // peel known factors off a composite remainder
        let keys: Vec<EulerFactor> = self.factors.keys().cloned().collect();
        for k in keys {
            loop {
                if self.rest.degree() == Some(0) {
                    break;
                }
                match self.rest.div_exact(&k.poly()) {
                    Some(q) => {
                        self.rest = q;
                        *self.factors.get_mut(&k).unwrap() += 1;
                    }
                    None => break,
                }
            }
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.factors.clear();
            self.rest = PolyX::one();
            return;
        }
        let keys: Vec<EulerFactor> = self.factors.keys().cloned().collect();
        for k in keys {
            let fp = k.poly();
            loop {
                let m = self.factors[&k];
                if m == 0 {
                    break;
                }
                match self.num.div_exact(&fp) {
                    Some(q) => {
                        self.num = q;
                        *self.factors.get_mut(&k).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        self.factors.retain(|_, m| *m > 0);
        if !self.rest.is_one_poly() {
            if let Some(q) = self.num.div_exact(&self.rest) {
                self.num = q;
                self.rest = PolyX::one();
            }
        }
    }

    pub fn numerator(&self) -> &PolyX {
        &self.num
    }

    /// Expanded denominator polynomial.
    pub fn denominator(&self) -> PolyX {
        let mut d = self.rest.clone();
        for (f, m) in &self.factors {
            d = &d * &f.poly().pow(*m);
        }
        d
    }

    pub fn factors(&self) -> impl Iterator<Item = (&EulerFactor, u32)> {
        self.factors.iter().map(|(f, m)| (f, *m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Order of vanishing of the numerator at `X = 0`; `None` for zero.
    pub fn x_valuation(&self) -> Option<usize> {
        self.num.coeffs().iter().position(|c| !c.is_zero())
    }

    /// Multiply by `X^k`; negative `k` needs `X^{-k}` to divide the numerator.
    pub fn shift_x(&self, k: i32) -> Result<Self, SymbolicError> {
        let mut out = self.clone();
        if k >= 0 {
            out.num = &out.num * &PolyX::monomial(Coef::one(), k as usize);
            return Ok(out);
        }
        let drop = (-k) as usize;
        if self.num.is_zero() {
            return Ok(out);
        }
        if self.x_valuation().unwrap_or(0) < drop {
            return Err(SymbolicError::DivisionByZero);
        }
        out.num = PolyX::new(self.num.coeffs()[drop..].to_vec());
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut lcm = self.factors.clone();
        for (f, m) in &rhs.factors {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let cofactor = |own: &BTreeMap<EulerFactor, u32>| {
            let mut p = PolyX::one();
            for (f, m) in &lcm {
                let have = own.get(f).copied().unwrap_or(0);
                if *m > have {
                    p = &p * &f.poly().pow(m - have);
                }
            }
            p
        };
        let (n1, n2, rest) = if self.rest == rhs.rest {
            (
                &self.num * &cofactor(&self.factors),
                &rhs.num * &cofactor(&rhs.factors),
                self.rest.clone(),
            )
        } else {
            (
                &(&self.num * &cofactor(&self.factors)) * &rhs.rest,
                &(&rhs.num * &cofactor(&rhs.factors)) * &self.rest,
                &self.rest * &rhs.rest,
            )
        };
        let mut out = Self {
            num: &n1 + &n2,
            factors: lcm,
            rest,
        };
        out.reduce();
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.num = -&out.num;
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (f, m) in &rhs.factors {
            *factors.entry(f.clone()).or_insert(0) += m;
        }
        let mut out = Self {
            num: &self.num * &rhs.num,
            factors,
            rest: &self.rest * &rhs.rest,
        };
        out.reduce();
        out
    }

    pub fn scale(&self, c: &Coef) -> Self {
        let mut out = self.clone();
        out.num = out.num.scale(c);
        out.reduce();
        out
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, SymbolicError> {
        if self.num.is_zero() {
            return Err(SymbolicError::DivisionByZero);
        }
        let num = self.denominator();
        Self::from_parts(num, self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SymbolicError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Expansion `Σ_{k ≤ order} a_k X^k`; needs an invertible constant term in
    /// the denominator.
    pub fn series(&self, order: usize) -> Result<SeriesX, SymbolicError> {
        Series::from_poly(&self.num, order).div_poly(&self.denominator())
    }

    /// Apply a ring map to every coefficient (used to specialize c or q).
    pub fn map_coefs(&self, f: impl Fn(&Coef) -> Coef) -> Result<Self, SymbolicError> {
        let num = self.num.map(&f);
        let mut out = Self::from_poly(num);
        for (fac, m) in &self.factors {
            let b = f(&fac.b());
            let piece = match (fac.d, b.as_monomial()) {
                (1 | 2, Some((e, c))) => {
                    let a = if fac.d == 1 { c } else { -c };
                    let mut r = Self::euler(&Coef::monomial(e, a), fac.e);
                    r = r.pow(*m);
                    r
                }
                _ => Self::from_parts(PolyX::one(), fac.poly().map(&f).pow(*m))?,
            };
            out = out.mul(&piece);
        }
        if !self.rest.is_one_poly() {
            out = out.mul(&Self::from_parts(PolyX::one(), self.rest.map(&f))?);
        }
        Ok(out)
    }

    /// Specialize the twist symbol to `c = v`.
    pub fn at_c(&self, v: &BigRational) -> Self {
        self.map_coefs(|c| c.at_c(v))
            .expect("specializing c keeps Euler factors nonzero")
    }

    /// Canonical `num / den` text with monomials `r*c^a*q^(b/2)*X^k`.
    pub fn to_text(&self) -> String {
        format!(
            "{} / {}",
            poly_text(&self.num),
            poly_text(&self.denominator())
        )
    }
}

impl PartialEq for RatFuncX {
    fn eq(&self, other: &Self) -> bool {
        if self.factors == other.factors && self.rest == other.rest {
            return self.num == other.num;
        }
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

impl fmt::Debug for RatFuncX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl serde::Serialize for RatFuncX {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl fmt::Display for RatFuncX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for PolyX {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

/// Fully expanded text of a polynomial in X.
pub fn poly_text(p: &PolyX) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        for (e, r) in c.terms() {
            let mut factors: Vec<String> = Vec::new();
            if e[1] != 0 {
                factors.push(format!("c^{}", e[1]));
            }
            if e[0] != 0 {
                factors.push(format!("q^({}/2)", e[0]));
            }
            if k > 0 {
                factors.push(format!("X^{k}"));
            }
            let neg = r.is_negative();
            let a = r.abs();
            let body = if factors.is_empty() {
                a.to_string()
            } else if a.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", a, factors.join("*"))
            };
            parts.push((neg, body));
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *neg {
                s.push('-');
            }
        } else {
            s.push_str(if *neg { " - " } else { " + " });
        }
        s.push_str(body);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coef::{int, q_half, q_pow};

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic_normalized(1), vec![1, -1]);
        assert_eq!(cyclotomic_normalized(2), vec![1, 1]);
        assert_eq!(cyclotomic_normalized(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_normalized(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_normalized(6), vec![1, -1, 1]);
    }

    #[test]
    fn binomials_split() {
        let z = RatFuncX::euler(&q_pow(-3), 2);
        assert_eq!(z.factors().count(), 2);
        let lhs = RatFuncX::euler(&q_half(-3), 1).mul(&RatFuncX::euler(&-q_half(-3), 1));
        assert_eq!(z, lhs);
        assert_eq!(z.to_text(), lhs.to_text());
        let cube = RatFuncX::euler(&q_half(-9), 3);
        assert_eq!(cube.factors().count(), 2);
    }

    #[test]
    fn cancellation_reaches_one() {
        let f = RatFuncX::from_poly(PolyX::one_minus(q_half(-7), 1));
        let g = f.div(&f).unwrap();
        assert_eq!(g.to_text(), "1 / 1");
        let h = RatFuncX::euler(&q_half(-7), 1).mul(&f);
        assert_eq!(h.to_text(), "1 / 1");
        assert!(RatFuncX::euler(&int(1), 1).mul(&RatFuncX::zero()).is_zero());
    }
}
