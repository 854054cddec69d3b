//! Sparse Laurent polynomials in `N` commuting variables over the rationals.

use crate::ring::{rat_pow, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Finite sum of `coef * x_0^{e_0} ... x_{N-1}^{e_{N-1}}` with integer exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<const N: usize> {
    terms: BTreeMap<[i32; N], BigRational>,
}

impl<const N: usize> Laurent<N> {
    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(exps: [i32; N], c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The variable `x_i` raised to `e`.
    pub fn var_pow(i: usize, e: i32) -> Self {
        let mut exps = [0; N];
        exps[i] = e;
        Self::monomial(exps, BigRational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32; N], &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given monomial.
    pub fn coeff(&self, exps: &[i32; N]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn as_monomial(&self) -> Option<([i32; N], BigRational)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((e, c)) if e == [0; N] => Some(c),
            _ => None,
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiply by the monomial `x^shift` (exponent-wise shift).
    pub fn shift(&self, shift: [i32; N]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    for i in 0..N {
                        f[i] += shift[i];
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Integer power; negative powers are only defined for monomials.
    pub fn pow_i(&self, e: i32) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u32))
        } else {
            self.try_inv().map(|inv| inv.pow_u((-e) as u32))
        }
    }

    /// Replace variable `i` by the rational `v` (which must be nonzero if
    /// negative exponents occur).
    pub fn specialize(&self, i: usize, v: &BigRational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            f[i] = 0;
            let k = c * rat_pow(v, e[i] as i64);
            out.add_term(f, k);
        }
        out
    }

    /// Substitute exact rationals for every variable.
    pub fn eval(&self, vals: &[BigRational; N]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..N {
                if e[i] != 0 {
                    t *= rat_pow(&vals[i], e[i] as i64);
                }
            }
            acc += t;
        }
        acc
    }

    /// Smallest and largest exponent of variable `i` (None for zero).
    pub fn exp_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    pub fn add_term(&mut self, exps: [i32; N], c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Write with variable names; `half[i]` prints `x^(e/2)` instead of `x^e`
    /// for variables that denote square roots.
    pub fn fmt_named(&self, names: &[&str; N], half: &[bool; N]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for i in (0..N).rev() {
                if e[i] == 0 {
                    continue;
                }
                if half[i] {
                    factors.push(format!("{}^({}/2)", names[i], e[i]));
                } else {
                    factors.push(format!("{}^{}", names[i], e[i]));
                }
            }
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if factors.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push_str("*");
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl<const N: usize> Zero for Laurent<N> {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<const N: usize> One for Laurent<N> {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl<const N: usize> Add for &Laurent<N> {
    type Output = Laurent<N>;
    fn add(self, rhs: &Laurent<N>) -> Laurent<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &Laurent<N> {
    type Output = Laurent<N>;
    fn sub(self, rhs: &Laurent<N>) -> Laurent<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<const N: usize> Mul for &Laurent<N> {
    type Output = Laurent<N>;
    fn mul(self, rhs: &Laurent<N>) -> Laurent<N> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for i in 0..N {
                    e[i] += e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl<const N: usize> Neg for &Laurent<N> {
    type Output = Laurent<N>;
    fn neg(self) -> Laurent<N> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<const N: usize> $tr for Laurent<N> {
            type Output = Laurent<N>;
            fn $m(self, rhs: Laurent<N>) -> Laurent<N> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<const N: usize> Neg for Laurent<N> {
    type Output = Laurent<N>;
    fn neg(self) -> Laurent<N> {
        -&self
    }
}

impl<const N: usize> AddAssign<&Laurent<N>> for Laurent<N> {
    fn add_assign(&mut self, rhs: &Laurent<N>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<const N: usize> Ring for Laurent<N> {
    fn from_int(n: i64) -> Self {
        Laurent::from_int(n)
    }
    fn try_inv(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let mut f = e;
        for x in f.iter_mut() {
            *x = -*x;
        }
        Some(Self::monomial(f, c.recip()))
    }
}

impl<const N: usize> fmt::Debug for Laurent<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..N).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let arr: [&str; N] = refs.try_into().unwrap();
        write!(f, "{}", self.fmt_named(&arr, &[false; N]))
    }
}
