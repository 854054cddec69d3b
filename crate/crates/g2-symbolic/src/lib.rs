//! Exact coefficient arithmetic for the local unramified computation.
//!
//! Scalars are Laurent polynomials in a formal `q^{1/2}` and a formal twist
//! `c`; closed forms are rational functions in `X = q^{-s}` over them.

pub mod coef;
pub mod etype;
pub mod laurent;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod series;
pub mod xshift;
pub mod zeta;

pub use coef::{c_pow, frac, int, mono, q_half, q_pow, Coef, CoefDisplay, CoefExt, HalfQ, TwistSymbol};
pub use etype::LocalCubicType;
pub use laurent::Laurent;
pub use poly::Poly;
pub use ratfunc::{poly_text, EulerFactor, PolyX, RatFuncX, SeriesX};
pub use ring::{rat, rat_pow, Ring};
pub use series::Series;
pub use xshift::XRat;
pub use zeta::{je_local, zeta_local};

/// Formal torus coordinates `(t1, t2, c)` used for Satake parameters.
pub type Torus3 = Laurent<3>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolicError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator has a non-invertible constant term")]
    NonInvertibleConstantTerm,
}
