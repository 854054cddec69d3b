//! The embedding ι into SO7 and the height Γ.

use crate::coords::{pow_p, GroupCoord, UCoord};
use crate::GroupError;
use g2_padic::LocalScalar;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// 7×7 matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat7<S> {
    a: Vec<S>,
}

impl<S: LocalScalar> Mat7<S> {
    pub fn from_fn(f: impl Fn(usize, usize) -> S) -> Self {
        let mut a = Vec::with_capacity(49);
        for i in 0..7 {
            for j in 0..7 {
                a.push(f(i, j));
            }
        }
        Self { a }
    }

    pub fn identity(ctx: &S::Ctx) -> Self {
        let (z, o) = (S::from_int_in(0, ctx), S::from_int_in(1, ctx));
        Self::from_fn(|i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn diag(d: [S; 7], ctx: &S::Ctx) -> Self {
        let z = S::from_int_in(0, ctx);
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { z.clone() })
    }

    /// Entry `(i, j)`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.a[7 * i + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.a[7 * i + j] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.a
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = self.get(i, 0).clone() * rhs.get(0, j).clone();
            for k in 1..7 {
                if self.get(i, k).is_negligible() || rhs.get(k, j).is_negligible() {
                    continue;
                }
                acc = acc + self.get(i, k).clone() * rhs.get(k, j).clone();
            }
            acc
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.get(j, i).clone())
    }
}

impl Mat7<BigRational> {
    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> BigRational {
        let mut m: Vec<Vec<BigRational>> =
            (0..7).map(|i| (0..7).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut det = BigRational::one();
        for c in 0..7 {
            let Some(piv) = (c..7).find(|&r| !m[r][c].is_zero()) else {
                return BigRational::zero();
            };
            if piv != c {
                m.swap(piv, c);
                det = -det;
            }
            let pv = m[c][c].clone();
            det *= &pv;
            for r in c + 1..7 {
                if m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] / &pv;
                for k in c..7 {
                    let t = &f * &m[c][k];
                    m[r][k] -= t;
                }
            }
        }
        det
    }

    /// `Mᵀ J M = J` for the antidiagonal form `J`.
    pub fn preserves_form(&self) -> bool {
        let j = antidiagonal();
        self.transpose().mul(&j).mul(self) == j
    }
}

/// The split symmetric form `δ_{i, 8-i}`.
pub fn antidiagonal() -> Mat7<BigRational> {
    Mat7::from_fn(|i, j| {
        if i + j == 6 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// Matrix of `u(r1, ..., r5)`.
pub fn u_matrix<S: LocalScalar>(u: &UCoord<S>, ctx: &S::Ctx) -> Mat7<S> {
    let [r1, r2, r3, r4, r5] = u.r.clone();
    let h = S::from_rational_in(&BigRational::new(1.into(), 2.into()), ctx);
    let mut m = Mat7::identity(ctx);
    let hf = |x: S| h.clone() * x;
    m.set(0, 2, r2.clone());
    m.set(0, 3, r3.clone());
    m.set(0, 4, hf(-r4.clone()));
    m.set(0, 5, hf(r2.clone() * r3.clone() + r5.clone()));
    m.set(0, 6, hf(r2.clone() * r4.clone() - r3.clone() * r3.clone()));
    m.set(1, 2, r1.clone());
    m.set(1, 3, r2.clone());
    m.set(1, 4, hf(-r3.clone()));
    m.set(1, 5, hf(r1.clone() * r3.clone() - r2.clone() * r2.clone()));
    m.set(
        1,
        6,
        hf(r1.clone() * r4.clone()
            - S::from_int_in(2, ctx) * r2.clone() * r3.clone()
            - r5.clone()),
    );
    m.set(2, 5, hf(r3.clone()));
    m.set(2, 6, hf(r4.clone()));
    m.set(3, 5, -r2.clone());
    m.set(3, 6, -r3.clone());
    m.set(4, 5, -r1.clone());
    m.set(4, 6, -r2);
    m
}

/// `diag(t1, t2/t1, t1²/t2, 1, t2/t1², t1/t2, 1/t1)` for `t1 = ϖ^n`, `t2 = ϖ^m`.
pub fn torus_matrix<S: LocalScalar>(n: i64, m: i64, ctx: &S::Ctx) -> Mat7<S> {
    let p = S::prime_of(ctx);
    let e = [n, m - n, 2 * n - m, 0, m - 2 * n, n - m, -n];
    Mat7::diag(std::array::from_fn(|i| S::from_rational_in(&pow_p(p, e[i]), ctx)), ctx)
}

/// Matrix of `x_α(d)`.
pub fn x_alpha_matrix<S: LocalScalar>(d: &BigRational, ctx: &S::Ctx) -> Mat7<S> {
    let dd = S::from_rational_in(d, ctx);
    let half_sq = S::from_rational_in(&(-(d * d) / BigRational::from_integer(2.into())), ctx);
    let mut m = Mat7::identity(ctx);
    m.set(0, 1, dd.clone());
    m.set(2, 3, -dd.clone());
    m.set(2, 4, half_sq);
    m.set(3, 4, dd.clone());
    m.set(5, 6, -dd);
    m
}

/// `ι(u · h_α(ϖ^n) h_β(ϖ^m) x_α(d))`.
pub fn iota<S: LocalScalar>(u: &UCoord<S>, g: &GroupCoord, ctx: &S::Ctx) -> Mat7<S> {
    let mut out = u_matrix(u, ctx).mul(&torus_matrix(g.n, g.m, ctx));
    if !g.d.is_zero() {
        out = out.mul(&x_alpha_matrix(&g.d, ctx));
    }
    out
}

/// `Γ = max |entry|`, returned as the exponent `e` with `Γ = q^e`.
pub fn gamma_norm<S: LocalScalar>(mat: &Mat7<S>, p: u64) -> Result<i64, GroupError> {
    let mut best: Option<i64> = None;
    for x in mat.entries() {
        if let Ok(Some(v)) = x.valuation_at(p) {
            best = Some(best.map_or(-v, |b| b.max(-v)));
        }
    }
    let e = best.ok_or(GroupError::ZeroMatrix)?;
    for x in mat.entries() {
        if !x.norm_le_at(p, e)? {
            unreachable!("entry norm exceeds the maximum");
        }
    }
    Ok(e)
}

/// Read `u` back from a matrix of the shape of [`u_matrix`].
pub fn extract_u_coords<S: LocalScalar>(mat: &Mat7<S>, ctx: &S::Ctx) -> Result<UCoord<S>, GroupError> {
    let one = S::from_int_in(1, ctx);
    for i in 0..7 {
        for j in 0..=i {
            let x = mat.get(i, j).clone() - if i == j { one.clone() } else { S::from_int_in(0, ctx) };
            if !x.is_negligible() {
                return Err(GroupError::NotUnipotent(i + 1, j + 1));
            }
        }
    }
    let r2 = mat.get(0, 2).clone();
    let r3 = mat.get(0, 3).clone();
    let r1 = mat.get(1, 2).clone();
    let r4 = S::from_int_in(-2, ctx) * mat.get(0, 4).clone();
    let r5 = S::from_int_in(2, ctx) * mat.get(0, 5).clone() - r2.clone() * r3.clone();
    let u = UCoord::new(r1, r2, r3, r4, r5);
    let back = u_matrix(&u, ctx);
    for (k, (a, b)) in back.entries().iter().zip(mat.entries()).enumerate() {
        if !(a.clone() - b.clone()).is_negligible() {
            return Err(GroupError::NotUnipotent(k / 7 + 1, k % 7 + 1));
        }
    }
    Ok(u)
}
