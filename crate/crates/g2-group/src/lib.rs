//! The part of G2(Q_p) seen by the local computation: the Heisenberg
//! unipotent U, toral elements and `x_α(d)`, the 7-dimensional embedding ι,
//! the height Γ, the sets `U_k(g)` and the support conditions.

mod coords;
mod matrix;
mod membership;

pub use coords::{pow_p, GroupCoord, UCoord, UCoordP, UCoordQ};
pub use matrix::{
    antidiagonal, extract_u_coords, gamma_norm, iota, torus_matrix, u_matrix, x_alpha_matrix, Mat7,
};
pub use membership::{
    flip_orientation, in_uk, psi_e_u, reduce_nontoral, support_conditions, CubicOrientation,
    UkMethod,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Local(#[from] g2_padic::LocalFieldError),
    #[error("matrix is not of unipotent shape at entry ({0},{1})")]
    NotUnipotent(usize, usize),
    #[error("the zero matrix has no height")]
    ZeroMatrix,
    #[error("operation needs d != 0 / a toral element as appropriate")]
    NotToral,
    #[error("the split algebra has no conjugation of this kind")]
    SplitUnsupported,
}
