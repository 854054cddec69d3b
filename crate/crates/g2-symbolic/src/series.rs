//! Power series in X truncated after a fixed order.

use crate::poly::Poly;
use crate::ring::Ring;
use crate::SymbolicError;

/// Coefficients of `X^0 .. X^K` of a formal power series.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        coeffs.truncate(order + 1);
        Self { coeffs }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Self::from_coeffs(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Same series cut at a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order.min(self.order()), self.coeffs.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let k = self.order().min(rhs.order());
        Self::from_coeffs(
            k,
            (0..=k).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let k = self.order().min(rhs.order());
        let mut v = vec![R::zero(); k + 1];
        for i in 0..=k {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(k - i) {
                v[i + j] = v[i + j].clone() + a.clone() * rhs.coeff(j);
            }
        }
        Self { coeffs: v }
    }

    /// `self / d` where `d` has an invertible constant term.
    pub fn div_poly(&self, d: &Poly<R>) -> Result<Self, SymbolicError> {
        let inv0 = d
            .coeff(0)
            .try_inv()
            .ok_or(SymbolicError::NonInvertibleConstantTerm)?;
        let k = self.order();
        let mut out: Vec<R> = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let mut acc = self.coeff(n);
            for j in 1..=n {
                let dj = d.coeff(j);
                if !dj.is_zero() {
                    acc = acc - dj * out[n - j].clone();
                }
            }
            out.push(acc * inv0.clone());
        }
        Ok(Self { coeffs: out })
    }

    /// Geometric series `Σ_j (a X^f)^j` to the given order.
    pub fn geometric(a: &R, f: usize, order: usize) -> Self {
        let mut v = vec![R::zero(); order + 1];
        let mut pw = R::one();
        let mut k = 0;
        while k <= order {
            v[k] = pw.clone();
            pw = pw * a.clone();
            k += f.max(1);
        }
        Self { coeffs: v }
    }
}
