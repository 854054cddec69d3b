//! Independent ground truth by finite summation over residues and p-adic
//! boxes. Every result is exact: character values live in `Q(ζ_{p^A})` and
//! are reduced to rationals at the end.

pub mod ds;
pub mod ek;
pub mod gauss;
pub mod kappa;
pub mod shellpath;
pub mod special;

pub use ds::{coef_at_q, ds_truncated, TruncatedSeries};
pub use ek::{ek_brute, ek_measure, EkResult, EnumPlan};
pub use gauss::{gauss_brute, gauss_brute_uninverted};
pub use kappa::{kappa_abc_count, kappa_count};
pub use shellpath::{alpha_valuation_exact, f_shellpath, shell_brute};
pub use special::{box_integral_brute, field_integral_brute, quad_integral_brute};

pub(crate) fn ser_rat<S: serde::Serializer>(x: &num_rational::BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub(crate) fn ser_rats<S: serde::Serializer>(xs: &[num_rational::BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Local(#[from] g2_padic::LocalFieldError),
    #[error("character sum did not reduce to a rational: {0}")]
    NotRational(String),
    #[error("cell budget exhausted after {visits} visits (budget {budget})")]
    BudgetExceeded { visits: u64, budget: u64 },
    #[error("box refinement needs more than {0} digits")]
    InsufficientPrecision(i64),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
}
