//! Measures of the lattice regions that enter `E_k`.

use crate::point::{closed_type, Variant};
use crate::ClosedError;
use g2_padic::LocalCubic;
use g2_symbolic::{int, q_pow, rat, Coef};
use num_rational::BigRational;
use serde::Serialize;

/// `κ(n1, n2, n3) = q^{n3}(1 + (n1+n2−n3)(1−q^{-1}))`.
pub fn kappa_closed(n1: i64, n2: i64, n3: i64) -> Result<Coef, ClosedError> {
    if n1 < 0 || n2 < 0 || n3 < 0 || n1 + n2 < n3 {
        return Err(ClosedError::Precondition(format!("κ({n1},{n2},{n3})")));
    }
    let inner = &int(1) + &(&int(n1 + n2 - n3) * &(&int(1) - &q_pow(-1)));
    Ok(&q_pow(n3 as i32) * &inner)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KappaAbc {
    /// `κ^{(n1)}`: `|x|, |y|, |P(x/y)| ≤ q^{n1}`.
    Plain(i64),
    /// `κ^{(n1)}(q^{n2})`: `|x| = |y| = q^{n2}`, `|P(x/y)| ≤ q^{n1 − n2 deg P}`.
    Shell(i64, i64),
}

/// Stated value for non-split `E` at `q = p`, for `n1 = 1` only.
///
/// The corrected plain value is `q³/(q+1)`: every `x/y ∈ O` satisfies the
/// condition.
pub fn kappa_abc_closed(e: &LocalCubic, which: KappaAbc, variant: Variant) -> Result<BigRational, ClosedError> {
    closed_type(e)?;
    let q = e.p as i64;
    match which {
        KappaAbc::Plain(1) if variant == Variant::Corrected => Ok(rat(q * q * q, q + 1)),
        KappaAbc::Plain(1) => Ok(rat(0, 1)),
        KappaAbc::Shell(1, n2) if n2 >= 1 => Ok(rat(0, 1)),
        other => Err(ClosedError::Precondition(format!("{other:?} is outside the stated case"))),
    }
}
