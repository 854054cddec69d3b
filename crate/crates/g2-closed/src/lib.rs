//! Closed formulas of the unramified computation, as exact rational functions
//! in `X = q^{-s}` over `Q[q^{±1/2}, c^{±1}]`.

pub mod ds;
pub mod gauss;
pub mod hecke;
pub mod kappa;
pub mod point;
pub mod whittaker;

pub use ds::{ds_closed, ds_closed_at, ek_closed, ek_closed_at};
pub use gauss::{gauss_closed, GaussBranch};
pub use hecke::{convolution_terms, convolve_ps, convolve_ps_variant, ps_data, ConvolutionTerm, PsData};
pub use kappa::{kappa_abc_closed, kappa_closed, KappaAbc};
pub use point::{closed_type, BranchPoint, Variant};
pub use whittaker::{alpha_valuation, chi_s, f_star, f_star_at, f_unnorm, f_unnorm_at, FBranch};

use g2_symbolic::SymbolicError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClosedError {
    #[error("the split algebra is not covered by these tables")]
    SplitUnsupported,
    #[error("quadratic type needs the normalization N = 0 (got N = {0})")]
    NotNormalized(i64),
    #[error("no table row applies: {0}")]
    NoBranch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("negative power of X survives in {0}")]
    NotPolynomialInX(String),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}
