//! Local Euler factors and the normalizing factor of the Eisenstein series.

use crate::coef::{c_pow, q_half};
use crate::etype::LocalCubicType;
use crate::ratfunc::RatFuncX;

/// `1 / (1 - c^{f·t} q^{-f·shift} X^f)` where `shift = shift2 / 2`.
///
/// This is the Euler factor at an unramified place of residue degree `f`
/// twisted by `χ^t ∘ Nm`.
pub fn zeta_local(shift2: i32, twist_power: i32, f: u32) -> RatFuncX {
    assert!((1..=3).contains(&f), "residue degree must be 1, 2 or 3");
    let fi = f as i32;
    let a = &c_pow(fi * twist_power) * &q_half(-fi * shift2);
    RatFuncX::euler(&a, f)
}

/// `ζ(2s + 1)` twisted by `χ²`, i.e. `1 / (1 - c² q^{-1} X²)`.
fn zeta_2s_plus_1() -> RatFuncX {
    zeta_local(1, 1, 2)
}

/// Local factor of `j_E(χ, s)` for the given étale type.
pub fn je_local(etype: LocalCubicType) -> RatFuncX {
    let z52 = zeta_local(5, 1, 1);
    match etype {
        LocalCubicType::Split => z52
            .mul(&zeta_local(3, 1, 1).pow(2))
            .mul(&zeta_2s_plus_1()),
        LocalCubicType::Quad => z52.mul(&zeta_local(3, 1, 2)).mul(&zeta_2s_plus_1()),
        LocalCubicType::Cubic => z52
            .mul(&zeta_local(3, 1, 3))
            .mul(&zeta_2s_plus_1())
            .div(&zeta_local(3, 1, 1))
            .expect("Euler factors are nonzero"),
    }
}
