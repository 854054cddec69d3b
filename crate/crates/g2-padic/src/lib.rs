//! A desk-scale model of Q_p for p ≥ 5: truncated p-adic scalars, the
//! additive character ψ of conductor O with exact cyclotomic values, cell
//! sums for Haar integrals, and local étale cubic algebras.

pub mod arith;
mod character;
mod cubic;
mod cyclo;
mod error;
mod haar;
mod scalar;

pub use character::{psi, psi_e, psi_rational, shell_integral_closed, LocalScalar, PadicCtx};
pub use cubic::{classify_cubic, LocalCubic};
pub use cyclo::CycloValue;
pub use error::LocalFieldError;
pub use haar::{haar_cell_sum, min_precision, CellAxis, CellPlan};
pub use scalar::PadicScalar;
pub use g2_symbolic::LocalCubicType;
